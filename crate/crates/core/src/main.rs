use std::process::ExitCode;

use clap::Parser;
use langrep::cli::{error_code, execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if !out.stdout.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({"error": e.to_string()}));
            }
            eprintln!("langrep: {e}");
            ExitCode::from(error_code(&e) as u8)
        }
    }
}
