//! Constructive builders: for a graph in a class, emit a word that
//! represents it over the class's canonical language.
//!
//! Every builder finishes by evaluating its output and comparing it with
//! the input graph on labels; a mismatch is reported as
//! [`Error::VerificationFailed`] and never returned as a word.

mod bipartite;
mod models;
mod normalize;
mod orders;
mod universal;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphs::{oracle, oracles::StrictOrder, ClassTag, Graph};
use crate::languages::{parse_language, Builtin, Dfa, LanguageSpec};
use crate::represent::evaluate;
use crate::words::{Vertex, VertexWord};

pub use bipartite::{
    build_bipartite_lyndon_odd, build_bipartite_palindrome, build_cobipartite, build_split,
    split_partition,
};
pub use models::{
    build_circle, build_co_circle, build_convex, build_halfline, build_interval,
    build_interval_bigraph, model_from_word, word_from_model, IntervalModel,
};
pub use normalize::{normalize_0any1, normalize_0ast1ast};
pub use orders::{
    build_bipartite_chain, build_cograph, build_comparability, build_permutation, build_threshold,
    CographMode,
};
pub use universal::{build_copy, build_copy_complement, build_lyndon, build_palindrome};
pub(crate) use universal::copy_word;

/// A construction together with its target language and precondition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recipe {
    Palindrome,
    Copy,
    CopyComplement,
    Lyndon,
    LyndonOdd,
    AlternatingPalindrome,
    Split,
    Cobipartite,
    Comparability,
    Interval,
    Convex,
    IntervalBigraph,
    Permutation,
    Circle,
    Threshold,
    BipartiteChain,
    Halfline,
    CoCircle,
    Cograph(CographMode),
}

impl Recipe {
    pub const ALL: [Recipe; 20] = [
        Recipe::Palindrome,
        Recipe::Copy,
        Recipe::CopyComplement,
        Recipe::Lyndon,
        Recipe::LyndonOdd,
        Recipe::AlternatingPalindrome,
        Recipe::Split,
        Recipe::Cobipartite,
        Recipe::Comparability,
        Recipe::Interval,
        Recipe::Convex,
        Recipe::IntervalBigraph,
        Recipe::Permutation,
        Recipe::Circle,
        Recipe::Threshold,
        Recipe::BipartiteChain,
        Recipe::Halfline,
        Recipe::CoCircle,
        Recipe::Cograph(CographMode::WrepLike),
        Recipe::Cograph(CographMode::ContainmentLike),
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Recipe::Palindrome => "palindrome",
            Recipe::Copy => "copy",
            Recipe::CopyComplement => "copy-complement",
            Recipe::Lyndon => "lyndon",
            Recipe::LyndonOdd => "lyndon-odd",
            Recipe::AlternatingPalindrome => "alternating-palindrome",
            Recipe::Split => "split",
            Recipe::Cobipartite => "cobipartite",
            Recipe::Comparability => "comparability",
            Recipe::Interval => "interval",
            Recipe::Convex => "convex",
            Recipe::IntervalBigraph => "interval-bigraph",
            Recipe::Permutation => "permutation",
            Recipe::Circle => "circle",
            Recipe::Threshold => "threshold",
            Recipe::BipartiteChain => "bipartite-chain",
            Recipe::Halfline => "halfline",
            Recipe::CoCircle => "co-circle",
            Recipe::Cograph(CographMode::WrepLike) => "cograph",
            Recipe::Cograph(CographMode::ContainmentLike) => "cograph-containment",
        }
    }

    /// The language the builder's output is checked against.
    pub fn language(&self) -> LanguageSpec {
        let parse = |s: &str| parse_language(s).expect("canonical language parses");
        let b = LanguageSpec::builtin;
        match self {
            Recipe::Palindrome => b(Builtin::Palindrome),
            Recipe::Copy => b(Builtin::Copy),
            Recipe::CopyComplement => b(Builtin::Copy).complement().expect("builtin complement"),
            Recipe::Lyndon => b(Builtin::Lyndon),
            Recipe::LyndonOdd => b(Builtin::LyndonOdd),
            Recipe::AlternatingPalindrome => alternating_palindromes(),
            Recipe::Split => alternating_palindromes().or(even_pairs()),
            Recipe::Cobipartite => b(Builtin::Palindrome)
                .complement()
                .expect("builtin complement")
                .or(b(Builtin::Wrep).complement().expect("builtin complement")),
            Recipe::Comparability => b(Builtin::Dyck),
            Recipe::Interval => parse("<0101,0110>"),
            Recipe::Convex => parse("<010>"),
            Recipe::IntervalBigraph => parse("<01110,01101,01011,01100,01010,01001>"),
            Recipe::Permutation => parse("<0110>"),
            Recipe::Circle => parse("<0101>"),
            Recipe::Threshold => parse("<01,001>"),
            Recipe::BipartiteChain => parse("<001>"),
            Recipe::Halfline => LanguageSpec::halfline(),
            Recipe::CoCircle => parse("<0011,0110>"),
            Recipe::Cograph(mode) => mode.language(),
        }
    }

    /// The class whose oracle gates the builder; `None` for builders that
    /// accept every graph.
    pub fn precondition(&self) -> Option<ClassTag> {
        Some(match self {
            Recipe::Palindrome | Recipe::Copy | Recipe::CopyComplement | Recipe::Lyndon => {
                return None
            }
            Recipe::LyndonOdd | Recipe::AlternatingPalindrome => ClassTag::Bipartite,
            Recipe::Split => ClassTag::Split,
            Recipe::Cobipartite => ClassTag::Cobipartite,
            Recipe::Comparability => ClassTag::Comparability,
            Recipe::Interval => ClassTag::Interval,
            Recipe::Convex => ClassTag::Convex,
            Recipe::IntervalBigraph => ClassTag::IntervalBigraph,
            Recipe::Permutation => ClassTag::Permutation,
            Recipe::Circle => ClassTag::Circle,
            Recipe::Threshold => ClassTag::Threshold,
            Recipe::BipartiteChain => ClassTag::BipartiteChain,
            Recipe::Halfline => ClassTag::Halfline,
            Recipe::CoCircle => ClassTag::CoCircle,
            Recipe::Cograph(_) => ClassTag::Cograph,
        })
    }

    /// Whether the builder accepts `g`. This is the precondition class,
    /// except for the co-circle builder, which accepts a co-circle graph
    /// together with any number of isolated vertices.
    pub fn applies(&self, g: &Graph) -> Result<bool> {
        match (self, self.precondition()) {
            (_, None) => Ok(true),
            (Recipe::CoCircle, Some(tag)) => {
                let core: Vec<usize> = (0..g.order()).filter(|&i| !g.is_isolated(i)).collect();
                if core.is_empty() {
                    return Ok(true);
                }
                oracle(tag, &g.induced_indices(&core))
            }
            (_, Some(tag)) => oracle(tag, g),
        }
    }

    pub fn build(&self, g: &Graph) -> Result<VertexWord> {
        match self {
            Recipe::Palindrome => build_palindrome(g),
            Recipe::Copy => build_copy(g),
            Recipe::CopyComplement => build_copy_complement(g),
            Recipe::Lyndon => build_lyndon(g),
            Recipe::LyndonOdd => build_bipartite_lyndon_odd(g),
            Recipe::AlternatingPalindrome => build_bipartite_palindrome(g),
            Recipe::Split => build_split(g),
            Recipe::Cobipartite => build_cobipartite(g),
            Recipe::Comparability => build_comparability(g, None),
            Recipe::Interval => build_interval(g),
            Recipe::Convex => build_convex(g),
            Recipe::IntervalBigraph => build_interval_bigraph(g),
            Recipe::Permutation => build_permutation(g, None),
            Recipe::Circle => build_circle(g),
            Recipe::Threshold => build_threshold(g),
            Recipe::BipartiteChain => build_bipartite_chain(g),
            Recipe::Halfline => build_halfline(g),
            Recipe::CoCircle => build_co_circle(g),
            Recipe::Cograph(mode) => build_cograph(g, *mode),
        }
    }

    /// The builder used for a class tag by `build --class`.
    pub fn for_class(tag: ClassTag) -> Option<Recipe> {
        Recipe::ALL
            .into_iter()
            .filter(|r| !matches!(r, Recipe::Cograph(CographMode::ContainmentLike)))
            .find(|r| r.precondition() == Some(tag) && *r != Recipe::AlternatingPalindrome)
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Recipe> {
        Recipe::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidArguments(format!("unknown recipe {s:?}")))
    }
}

/// Palindromes that are also strictly alternating.
fn alternating_palindromes() -> LanguageSpec {
    LanguageSpec::builtin(Builtin::Palindrome)
        .and(LanguageSpec::builtin(Builtin::Wrep))
        .expect("builtins intersect")
}

/// Both letters occur, each an even number of times.
fn even_pairs() -> LanguageSpec {
    LanguageSpec::builtin(Builtin::EvenCounts)
        .and(LanguageSpec::regular(Dfa::both_letters()))
        .expect("builtin and regular intersect")
}

/// Builds the word from indices into `g`'s vertices and compares its graph
/// with `g` on labels.
pub(crate) fn finish(recipe: Recipe, g: &Graph, symbols: &[usize]) -> Result<VertexWord> {
    let w = VertexWord::from_indices(g.vertices(), symbols)?;
    verify(recipe, g, &w)?;
    Ok(w)
}

pub(crate) fn verify(recipe: Recipe, g: &Graph, w: &VertexWord) -> Result<()> {
    let h = evaluate(w, &recipe.language())?;
    if h == *g {
        return Ok(());
    }
    let detail = match h.first_difference(g) {
        Some((u, v)) => format!("pair {{{u}, {v}}} disagrees in the word {w}"),
        None => format!("the word {w} has a different vertex set"),
    };
    Err(Error::VerificationFailed {
        recipe: recipe.name().into(),
        detail,
    })
}

pub(crate) fn require(tag: ClassTag, found: bool) -> Result<()> {
    if found {
        Ok(())
    } else {
        Err(Error::Precondition(format!("the graph is not {tag}")))
    }
}

/// A vertex name not used by `g`, derived from `stem`.
pub(crate) fn fresh_vertex(g: &Graph, stem: &str) -> Vertex {
    (0..)
        .map(|k| Vertex::new(format!("{stem}{k}")).expect("valid token"))
        .find(|v| g.index_of(v).is_none())
        .expect("an unused name exists")
}

/// Checks that `order` is a strict order whose comparability graph is `g`.
pub(crate) fn validate_order(g: &Graph, order: &StrictOrder) -> Result<()> {
    let n = g.order();
    if order.len() != n {
        return Err(Error::InvalidArguments(format!(
            "order has {} elements for {n} vertices",
            order.len()
        )));
    }
    for a in 0..n {
        for b in a + 1..n {
            if (order.less(a, b) || order.less(b, a)) != g.has_edge(a, b) {
                return Err(Error::InvalidArguments(format!(
                    "order disagrees with the graph on {{{}, {}}}",
                    g.vertex(a),
                    g.vertex(b)
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::enumerate_graphs;

    #[test]
    fn every_builder_on_small_graphs() {
        for n in 1..=5 {
            for g in enumerate_graphs(n).unwrap() {
                for r in Recipe::ALL {
                    let applies = r.applies(&g).unwrap();
                    let out = r.build(&g);
                    if applies {
                        if let Err(e) = out {
                            panic!("{r} on {:?}: {e}", g.edges());
                        }
                    } else {
                        assert!(matches!(out, Err(Error::Precondition(_))), "{r} on {:?}", g.edges());
                    }
                }
            }
        }
    }

    #[test]
    fn recipe_names_round_trip() {
        for r in Recipe::ALL {
            assert_eq!(r.name().parse::<Recipe>().unwrap(), r);
        }
        assert_eq!(Recipe::for_class(ClassTag::Interval), Some(Recipe::Interval));
        assert_eq!(Recipe::for_class(ClassTag::Bipartite), Some(Recipe::LyndonOdd));
        assert_eq!(Recipe::for_class(ClassTag::Cograph), Some(Recipe::Cograph(CographMode::WrepLike)));
    }
}
