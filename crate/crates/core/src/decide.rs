//! Deciding whether the graphs represented over a language have bounded
//! treewidth or bounded degeneracy.
//!
//! Both properties hold exactly when L contains no word with both letters,
//! in which case every represented graph is edgeless. The test intersects L
//! with the four-state automaton for "both letters occur" and checks the
//! product for emptiness; a shortest member of the product is the witness
//! when it is not empty.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::languages::{Cfg, Dfa, LanguageSpec};
use crate::words::BinaryWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    BoundedTreewidth,
    BoundedDegeneracy,
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        match s {
            "treewidth" | "bounded-treewidth" => Ok(Property::BoundedTreewidth),
            "degeneracy" | "bounded-degeneracy" => Ok(Property::BoundedDegeneracy),
            _ => Err(Error::InvalidArguments(format!(
                "unknown property {s:?}; expected treewidth or degeneracy"
            ))),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::BoundedTreewidth => "bounded-treewidth",
            Property::BoundedDegeneracy => "bounded-degeneracy",
        })
    }
}

/// Outcome of [`decide`]. When `answer` is false, `witness` is a word of L
/// in which both letters occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub property: Property,
    pub answer: bool,
    pub witness: Option<BinaryWord>,
}

impl Decision {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "property": self.property,
            "answer": self.answer,
            "witness": self.witness.as_ref().map(|w| w.to_string()),
        })
    }
}

/// A DFA for languages assembled from finite and regular parts.
fn to_dfa(l: &LanguageSpec) -> Option<Dfa> {
    Some(match l {
        LanguageSpec::Finite(_) | LanguageSpec::Regular { .. } => l.as_dfa()?,
        LanguageSpec::Not(x) => to_dfa(x)?.complement(),
        LanguageSpec::And(x, y) => to_dfa(x)?.intersection(&to_dfa(y)?),
        LanguageSpec::Or(x, y) => to_dfa(x)?.union(&to_dfa(y)?),
        LanguageSpec::Hull(x) => {
            let d = to_dfa(x)?;
            d.union(&d.flipped())
        }
        LanguageSpec::Reverse(x) => to_dfa(x)?.reversed(),
        LanguageSpec::Grammar { .. } | LanguageSpec::Builtin(_) => return None,
    })
}

/// A grammar for languages assembled from grammars and regular parts with
/// the operations context-free languages are closed under.
fn to_cfg(l: &LanguageSpec) -> Option<Cfg> {
    if let Some(d) = to_dfa(l) {
        return Some(Cfg::from_dfa(&d));
    }
    Some(match l {
        LanguageSpec::Grammar { cfg, .. } => cfg.clone(),
        LanguageSpec::Hull(x) => {
            let c = to_cfg(x)?;
            c.union(&c.flipped())
        }
        LanguageSpec::Reverse(x) => to_cfg(x)?.reversed(),
        LanguageSpec::Or(x, y) => to_cfg(x)?.union(&to_cfg(y)?),
        LanguageSpec::And(x, y) => match (to_dfa(x), to_dfa(y)) {
            (Some(d), _) => to_cfg(y)?.intersect_regular(&d),
            (_, Some(d)) => to_cfg(x)?.intersect_regular(&d),
            _ => return None,
        },
        _ => return None,
    })
}

/// Decides the property for a grammar.
pub fn decide_cfg(cfg: &Cfg, property: Property) -> Decision {
    let product = cfg.intersect_regular(&Dfa::both_letters());
    let witness = product.shortest_word();
    if let Some(w) = &witness {
        debug_assert!(cfg.contains(w) && w.zeros() > 0 && w.ones() > 0);
    }
    Decision {
        property,
        answer: witness.is_none(),
        witness,
    }
}

/// Decides the property for an automaton.
pub fn decide_dfa(dfa: &Dfa, property: Property) -> Decision {
    let witness = dfa.intersection(&Dfa::both_letters()).shortest_accepted();
    Decision {
        property,
        answer: witness.is_none(),
        witness,
    }
}

/// Decides the property for a language built from finite sets, automata
/// and grammars. Named predicate languages other than those are not
/// supported.
pub fn decide(l: &LanguageSpec, property: Property) -> Result<Decision> {
    let d = if let Some(dfa) = to_dfa(l) {
        decide_dfa(&dfa, property)
    } else if let Some(cfg) = to_cfg(l) {
        decide_cfg(&cfg, property)
    } else {
        return Err(Error::Unsupported(format!(
            "decide needs a finite, regular or context-free language, got {l}"
        )));
    };
    if let Some(w) = &d.witness {
        if !(l.contains(w) && w.zeros() > 0 && w.ones() > 0) {
            return Err(Error::VerificationFailed {
                recipe: "decide".into(),
                detail: format!("witness {w} is not a two-letter member of the language"),
            });
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::languages::parse_language;
    use crate::words::bw;

    fn grammar(text: &str) -> LanguageSpec {
        LanguageSpec::grammar(Cfg::parse(text).unwrap(), false)
    }

    #[test]
    fn grammar_verdicts() {
        let anbn = grammar("S -> 0 S 1 | eps");
        let d = decide(&anbn, Property::BoundedTreewidth).unwrap();
        assert!(!d.answer);
        assert_eq!(d.witness, Some(bw("01")));
        let trivial = grammar("S -> 0 S | 1 T | eps\nT -> 1 T | eps");
        let d = decide(&trivial, Property::BoundedDegeneracy).unwrap();
        assert!(!d.answer, "0*1* contains 01");
        let unary = grammar("S -> A | B\nA -> 0 A | eps\nB -> 1 B | eps");
        assert!(decide(&unary, Property::BoundedTreewidth).unwrap().answer);
        let empty = grammar("S -> S");
        assert!(decide(&empty, Property::BoundedTreewidth).unwrap().answer);
    }

    #[test]
    fn finite_and_regular_verdicts() {
        let d = decide(&parse_language("<0101>").unwrap(), Property::BoundedTreewidth).unwrap();
        assert_eq!(d.witness, Some(bw("0101")));
        let unary = parse_language("re:0*|1*").unwrap();
        assert!(decide(&unary, Property::BoundedDegeneracy).unwrap().answer);
        let flipped = parse_language("hull(rev(re:0*1))").unwrap();
        assert!(!decide(&flipped, Property::BoundedTreewidth).unwrap().answer);
    }

    #[test]
    fn builtins_are_unsupported() {
        let l = parse_language("dyck").unwrap();
        assert!(matches!(decide(&l, Property::BoundedTreewidth), Err(Error::Unsupported(_))));
    }

    #[test]
    fn property_names() {
        assert_eq!("treewidth".parse::<Property>().unwrap(), Property::BoundedTreewidth);
        assert!("width".parse::<Property>().is_err());
    }
}
