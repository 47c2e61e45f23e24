pub mod cli;
pub mod codec;
pub mod constructions;
pub mod decide;
pub mod error;
pub mod graphs;
pub mod languages;
pub mod represent;
pub mod words;

pub use error::{Error, Result};
