//! Binary languages as membership oracles, with the combinators used to
//! assemble them.
//!
//! A [`LanguageSpec`] is one of: an explicit finite set, a regular language
//! held as a [`Dfa`], a context-free [`Cfg`], a named [`Builtin`] predicate,
//! or a lazy combinator node. Combinators materialize when the operands
//! allow it (finite sets stay finite, automata build products) and fall back
//! to lazy nodes otherwise.
//!
//! The representation engine only accepts languages closed under the
//! complement morphism 0 ↔ 1. Finite sets are checked when built; automata
//! are checked exactly; grammars carry a flag that is set by `hull` or by
//! explicit attestation.

mod builtin;
mod cfg;
mod dfa;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

pub use builtin::Builtin;
pub use cfg::{Cfg, Production, Symbol};
pub use dfa::{Dfa, Regex};
pub use parse::parse_language;

use crate::error::{Error, Result};
use crate::words::BinaryWord;

/// Description of freq(L) = { n ≥ 1 : some member has exactly n zeros }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrequencySet {
    Explicit(BTreeSet<usize>),
    /// Members below `threshold` come from `prefix`; from `threshold` on,
    /// n is a member iff `n % period` lies in `residues`.
    EventuallyPeriodic {
        prefix: BTreeSet<usize>,
        threshold: usize,
        period: usize,
        residues: BTreeSet<usize>,
    },
    AllPositive,
}

impl FrequencySet {
    pub fn explicit(values: impl IntoIterator<Item = usize>) -> Self {
        FrequencySet::Explicit(values.into_iter().filter(|&n| n >= 1).collect())
    }

    pub fn periodic(period: usize, residues: impl IntoIterator<Item = usize>) -> Self {
        FrequencySet::EventuallyPeriodic {
            prefix: BTreeSet::new(),
            threshold: 1,
            period,
            residues: residues.into_iter().map(|r| r % period).collect(),
        }
    }

    pub fn contains(&self, n: usize) -> bool {
        if n == 0 {
            return false;
        }
        match self {
            FrequencySet::Explicit(s) => s.contains(&n),
            FrequencySet::EventuallyPeriodic {
                prefix,
                threshold,
                period,
                residues,
            } => {
                if n < *threshold {
                    prefix.contains(&n)
                } else {
                    residues.contains(&(n % period))
                }
            }
            FrequencySet::AllPositive => true,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            FrequencySet::Explicit(s) => s.is_empty(),
            FrequencySet::EventuallyPeriodic { prefix, residues, .. } => {
                prefix.is_empty() && residues.is_empty()
            }
            FrequencySet::AllPositive => false,
        }
    }
}

impl fmt::Display for FrequencySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrequencySet::Explicit(s) => {
                let items: Vec<String> = s.iter().map(|n| n.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            FrequencySet::EventuallyPeriodic {
                prefix,
                threshold,
                period,
                residues,
            } => {
                let items: Vec<String> = prefix.iter().map(|n| n.to_string()).collect();
                let res: Vec<String> = residues.iter().map(|n| n.to_string()).collect();
                write!(
                    f,
                    "{{{}}} ∪ {{n ≥ {threshold} : n mod {period} ∈ {{{}}}}}",
                    items.join(","),
                    res.join(",")
                )
            }
            FrequencySet::AllPositive => f.write_str("{n ≥ 1}"),
        }
    }
}

/// A binary language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LanguageSpec {
    /// A finite set, always closed under 0 ↔ 1.
    Finite(BTreeSet<BinaryWord>),
    /// A regular language; `symmetric` is decided exactly at construction.
    Regular { dfa: Dfa, symmetric: bool },
    /// A context-free language; `symmetric` is an attestation.
    Grammar { cfg: Cfg, symmetric: bool },
    Builtin(Builtin),
    Not(Box<LanguageSpec>),
    And(Box<LanguageSpec>, Box<LanguageSpec>),
    Or(Box<LanguageSpec>, Box<LanguageSpec>),
    Hull(Box<LanguageSpec>),
    Reverse(Box<LanguageSpec>),
}

impl LanguageSpec {
    /// A finite language. Fails with a witness when the set is not closed
    /// under complement.
    pub fn finite(words: impl IntoIterator<Item = BinaryWord>) -> Result<Self> {
        let set: BTreeSet<BinaryWord> = words.into_iter().collect();
        if let Some(w) = set.iter().find(|w| !set.contains(&w.complement())) {
            return Err(Error::NotSymmetric {
                witness: w.to_string(),
            });
        }
        Ok(LanguageSpec::Finite(set))
    }

    /// The symmetric hull ⟨S⟩ = S ∪ S̃ of a finite set.
    pub fn hull_of(words: impl IntoIterator<Item = BinaryWord>) -> Self {
        let mut set = BTreeSet::new();
        for w in words {
            set.insert(w.complement());
            set.insert(w);
        }
        LanguageSpec::Finite(set)
    }

    pub fn regular(dfa: Dfa) -> Self {
        let symmetric = dfa.equivalent(&dfa.flipped());
        LanguageSpec::Regular { dfa, symmetric }
    }

    pub fn regex(src: &str) -> Result<Self> {
        Ok(LanguageSpec::regular(Regex::parse(src)?.to_dfa()))
    }

    /// A grammar language. `attest_symmetric` asserts closure under 0 ↔ 1;
    /// without it the grammar must be wrapped in `hull` before use.
    pub fn grammar(cfg: Cfg, attest_symmetric: bool) -> Self {
        LanguageSpec::Grammar {
            cfg,
            symmetric: attest_symmetric,
        }
    }

    pub fn builtin(b: Builtin) -> Self {
        LanguageSpec::Builtin(b)
    }

    /// ⟨01, 011, 0101, 0011, 0110⟩.
    pub fn halfline() -> Self {
        LanguageSpec::hull_of(["01", "011", "0101", "0011", "0110"].iter().map(|s| s.parse().unwrap()))
    }

    pub fn contains(&self, b: &BinaryWord) -> bool {
        match self {
            LanguageSpec::Finite(s) => s.contains(b),
            LanguageSpec::Regular { dfa, .. } => dfa.accepts(b),
            LanguageSpec::Grammar { cfg, .. } => cfg.contains(b),
            LanguageSpec::Builtin(x) => x.contains(b),
            LanguageSpec::Not(x) => !x.contains(b),
            LanguageSpec::And(x, y) => x.contains(b) && y.contains(b),
            LanguageSpec::Or(x, y) => x.contains(b) || y.contains(b),
            LanguageSpec::Hull(x) => x.contains(b) || x.contains(&b.complement()),
            LanguageSpec::Reverse(x) => x.contains(&b.reversed()),
        }
    }

    /// Structural symmetry check. Sound: a `true` answer guarantees
    /// closure under 0 ↔ 1.
    pub fn is_symmetric(&self) -> bool {
        match self {
            LanguageSpec::Finite(_) | LanguageSpec::Builtin(_) | LanguageSpec::Hull(_) => true,
            LanguageSpec::Regular { symmetric, .. } | LanguageSpec::Grammar { symmetric, .. } => *symmetric,
            LanguageSpec::Not(x) | LanguageSpec::Reverse(x) => x.is_symmetric(),
            LanguageSpec::And(x, y) | LanguageSpec::Or(x, y) => x.is_symmetric() && y.is_symmetric(),
        }
    }

    /// Errors unless [`is_symmetric`](Self::is_symmetric) holds. The
    /// witness is a concrete member whose complement is missing when one
    /// exists among short words.
    pub fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            return Ok(());
        }
        if let LanguageSpec::Regular { dfa, .. } = self {
            if let Some(w) = dfa.distinguishing_word(&dfa.flipped()) {
                let w = if dfa.accepts(&w) { w } else { w.complement() };
                return Err(Error::NotSymmetric { witness: w.to_string() });
            }
        }
        let witness = BinaryWord::all_up_to(12)
            .find(|w| self.contains(w) && !self.contains(&w.complement()))
            .map(|w| w.to_string())
            .unwrap_or_else(|| format!("(unattested) {self}"));
        Err(Error::NotSymmetric { witness })
    }

    /// Whether a grammar appears anywhere in the expression.
    pub fn contains_grammar(&self) -> bool {
        match self {
            LanguageSpec::Grammar { .. } => true,
            LanguageSpec::Finite(_) | LanguageSpec::Regular { .. } | LanguageSpec::Builtin(_) => false,
            LanguageSpec::Not(x) | LanguageSpec::Hull(x) | LanguageSpec::Reverse(x) => x.contains_grammar(),
            LanguageSpec::And(x, y) | LanguageSpec::Or(x, y) => x.contains_grammar() || y.contains_grammar(),
        }
    }

    pub fn as_finite(&self) -> Option<&BTreeSet<BinaryWord>> {
        match self {
            LanguageSpec::Finite(s) => Some(s),
            _ => None,
        }
    }

    /// An automaton for the language when it is regular by construction.
    pub fn as_dfa(&self) -> Option<Dfa> {
        match self {
            LanguageSpec::Finite(s) => Some(Dfa::from_finite(s)),
            LanguageSpec::Regular { dfa, .. } => Some(dfa.clone()),
            _ => None,
        }
    }

    /// freq(L) for finite sets and builtins.
    pub fn frequency_set(&self) -> Option<FrequencySet> {
        match self {
            LanguageSpec::Finite(s) => Some(FrequencySet::explicit(s.iter().map(|w| w.zeros()))),
            LanguageSpec::Builtin(b) => b.frequency_set(),
            _ => None,
        }
    }

    /// ⟨L⟩ = L ∪ L̃.
    pub fn hull(self) -> LanguageSpec {
        match self {
            LanguageSpec::Finite(s) => LanguageSpec::Finite(s),
            LanguageSpec::Regular { dfa, .. } => {
                let dfa = dfa.union(&dfa.flipped());
                LanguageSpec::Regular { dfa, symmetric: true }
            }
            LanguageSpec::Grammar { cfg, .. } => LanguageSpec::Grammar {
                cfg: cfg.union(&cfg.flipped()),
                symmetric: true,
            },
            b @ LanguageSpec::Builtin(_) => b,
            h @ LanguageSpec::Hull(_) => h,
            other => LanguageSpec::Hull(Box::new(other)),
        }
    }

    /// {0,1}* minus L. Rejected on grammars.
    pub fn complement(self) -> Result<LanguageSpec> {
        if self.contains_grammar() {
            return Err(Error::UnsupportedCombinator { op: "not".into() });
        }
        Ok(match self {
            LanguageSpec::Finite(s) => LanguageSpec::Regular {
                dfa: Dfa::from_finite(&s).complement(),
                symmetric: true,
            },
            LanguageSpec::Regular { dfa, symmetric } => LanguageSpec::Regular {
                dfa: dfa.complement(),
                symmetric,
            },
            LanguageSpec::Not(x) => *x,
            other => LanguageSpec::Not(Box::new(other)),
        })
    }

    /// L ∩ M. Rejected on grammars; use [`Cfg::intersect_regular`].
    pub fn and(self, other: LanguageSpec) -> Result<LanguageSpec> {
        if self.contains_grammar() || other.contains_grammar() {
            return Err(Error::UnsupportedCombinator { op: "and".into() });
        }
        Ok(match (self, other) {
            (LanguageSpec::Finite(s), o) | (o, LanguageSpec::Finite(s)) => {
                let keep = s.into_iter().filter(|w| o.contains(w));
                if o.is_symmetric() {
                    LanguageSpec::Finite(keep.collect())
                } else {
                    let set: BTreeSet<BinaryWord> = keep.collect();
                    match LanguageSpec::finite(set.clone()) {
                        Ok(f) => f,
                        Err(_) => LanguageSpec::And(
                            Box::new(LanguageSpec::Finite(set)),
                            Box::new(o),
                        ),
                    }
                }
            }
            (LanguageSpec::Regular { dfa: a, .. }, LanguageSpec::Regular { dfa: b, .. }) => {
                LanguageSpec::regular(a.intersection(&b))
            }
            (x, y) => LanguageSpec::And(Box::new(x), Box::new(y)),
        })
    }

    /// L ∪ M.
    pub fn or(self, other: LanguageSpec) -> LanguageSpec {
        match (self, other) {
            (LanguageSpec::Finite(a), LanguageSpec::Finite(b)) => {
                LanguageSpec::Finite(a.union(&b).cloned().collect())
            }
            (x @ (LanguageSpec::Finite(_) | LanguageSpec::Regular { .. }), y @ (LanguageSpec::Finite(_) | LanguageSpec::Regular { .. })) => {
                let (a, b) = (x.as_dfa().unwrap(), y.as_dfa().unwrap());
                LanguageSpec::regular(a.union(&b))
            }
            (LanguageSpec::Grammar { cfg: a, symmetric: sa }, LanguageSpec::Grammar { cfg: b, symmetric: sb }) => {
                LanguageSpec::Grammar {
                    cfg: a.union(&b),
                    symmetric: sa && sb,
                }
            }
            (LanguageSpec::Grammar { cfg, symmetric }, r @ (LanguageSpec::Finite(_) | LanguageSpec::Regular { .. }))
            | (r @ (LanguageSpec::Finite(_) | LanguageSpec::Regular { .. }), LanguageSpec::Grammar { cfg, symmetric }) => {
                let rs = r.is_symmetric();
                LanguageSpec::Grammar {
                    cfg: cfg.union(&Cfg::from_dfa(&r.as_dfa().unwrap())),
                    symmetric: symmetric && rs,
                }
            }
            (x, y) => LanguageSpec::Or(Box::new(x), Box::new(y)),
        }
    }

    /// L^R.
    pub fn reverse(self) -> LanguageSpec {
        match self {
            LanguageSpec::Finite(s) => LanguageSpec::Finite(s.iter().map(|w| w.reversed()).collect()),
            LanguageSpec::Regular { dfa, symmetric } => LanguageSpec::Regular {
                dfa: dfa.reversed(),
                symmetric,
            },
            LanguageSpec::Grammar { cfg, symmetric } => LanguageSpec::Grammar {
                cfg: cfg.reversed(),
                symmetric,
            },
            LanguageSpec::Reverse(x) => *x,
            other => LanguageSpec::Reverse(Box::new(other)),
        }
    }
}

impl fmt::Display for LanguageSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LanguageSpec::Finite(s) => {
                let items: Vec<String> = s.iter().map(|w| if w.is_empty() { "e".into() } else { w.to_string() }).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            LanguageSpec::Regular { dfa, .. } => write!(f, "regular[{} states]", dfa.num_states()),
            LanguageSpec::Grammar { cfg, .. } => write!(f, "grammar[{} rules]", cfg.rules().len()),
            LanguageSpec::Builtin(b) => write!(f, "{b}"),
            LanguageSpec::Not(x) => write!(f, "not({x})"),
            LanguageSpec::And(x, y) => write!(f, "and({x},{y})"),
            LanguageSpec::Or(x, y) => write!(f, "or({x},{y})"),
            LanguageSpec::Hull(x) => write!(f, "hull({x})"),
            LanguageSpec::Reverse(x) => write!(f, "rev({x})"),
        }
    }
}

/// All interleavings of a word from `a` with a word from `b`.
pub fn shuffle_finite(a: &BTreeSet<BinaryWord>, b: &BTreeSet<BinaryWord>) -> BTreeSet<BinaryWord> {
    fn go(x: &[u8], y: &[u8], acc: &mut Vec<u8>, out: &mut BTreeSet<BinaryWord>) {
        if x.is_empty() && y.is_empty() {
            out.insert(BinaryWord::from_bits(acc.iter().copied()));
            return;
        }
        if let Some((&h, t)) = x.split_first() {
            acc.push(h);
            go(t, y, acc, out);
            acc.pop();
        }
        if let Some((&h, t)) = y.split_first() {
            acc.push(h);
            go(x, t, acc, out);
            acc.pop();
        }
    }
    let mut out = BTreeSet::new();
    for u in a {
        for v in b {
            go(u.bits(), v.bits(), &mut Vec::new(), &mut out);
        }
    }
    out
}

/// freq(L) and the trash language T_L, the words with some letter count
/// outside freq(L). Only finite languages are accepted.
pub fn freq_and_trash(l: &LanguageSpec) -> Result<(FrequencySet, Builtin)> {
    let Some(set) = l.as_finite() else {
        return Err(Error::Unsupported("frequency sets are computed for finite languages only".into()));
    };
    let freq = FrequencySet::explicit(set.iter().map(|w| w.zeros()));
    Ok((freq.clone(), Builtin::Trash(freq)))
}

/// L̂ = L ∪ T_L for a finite language L.
pub fn trash_extension(l: &LanguageSpec) -> Result<LanguageSpec> {
    let (_, trash) = freq_and_trash(l)?;
    Ok(l.clone().or(LanguageSpec::Builtin(trash)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::bw;

    fn set(words: &[&str]) -> BTreeSet<BinaryWord> {
        words.iter().map(|w| bw(w)).collect()
    }

    #[test]
    fn hull_and_eager_symmetry() {
        assert_eq!(LanguageSpec::hull_of([bw("001")]), LanguageSpec::Finite(set(&["001", "110"])));
        assert!(matches!(LanguageSpec::finite([bw("001")]), Err(Error::NotSymmetric { .. })));
        assert!(LanguageSpec::hull_of([bw("0101")]).contains(&bw("1010")));
    }

    #[test]
    fn complement_of_finite() {
        let l = LanguageSpec::finite(set(&["01", "10"])).unwrap().complement().unwrap();
        assert!(!l.contains(&bw("01")));
        assert!(l.contains(&bw("00")));
        assert!(l.is_symmetric());
    }

    #[test]
    fn wrep_and_uniform_two() {
        let l = LanguageSpec::builtin(Builtin::Wrep)
            .and(LanguageSpec::builtin(Builtin::Uniform(2)))
            .unwrap();
        let members: Vec<String> = BinaryWord::all_of_length(4).filter(|w| l.contains(w)).map(|w| w.to_string()).collect();
        assert_eq!(members, vec!["0101", "1010"]);
    }

    #[test]
    fn grammar_combinators() {
        let g = LanguageSpec::grammar(Cfg::parse("S -> 0 S 1 | eps").unwrap(), false);
        assert!(!g.is_symmetric());
        assert!(matches!(g.clone().complement(), Err(Error::UnsupportedCombinator { .. })));
        assert!(matches!(g.clone().and(LanguageSpec::builtin(Builtin::Wrep)), Err(Error::UnsupportedCombinator { .. })));
        let h = g.hull();
        assert!(h.is_symmetric());
        assert!(h.contains(&bw("1100")) && h.contains(&bw("0011")));
    }

    #[test]
    fn regular_symmetry_is_exact() {
        let l = LanguageSpec::regex("0*1*").unwrap();
        assert!(!l.is_symmetric());
        match l.require_symmetric() {
            Err(Error::NotSymmetric { witness }) => assert!(!witness.is_empty()),
            other => panic!("{other:?}"),
        }
        assert!(LanguageSpec::regex("0*1*").unwrap().hull().is_symmetric());
        assert!(LanguageSpec::regex("(1|e)(01)*(0|e)").unwrap().is_symmetric());
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffle_finite(&set(&["0"]), &set(&["11"])), set(&["011", "101", "110"]));
        assert_eq!(shuffle_finite(&set(&["00"]), &set(&["11"])).len(), 6);
        assert_eq!(shuffle_finite(&set(&[""]), &set(&["01"])), set(&["01"]));
    }

    #[test]
    fn frequencies_and_trash() {
        let (f, _) = freq_and_trash(&LanguageSpec::hull_of([bw("01"), bw("001")])).unwrap();
        assert_eq!(f, FrequencySet::explicit([1, 2]));
        let (_, t) = freq_and_trash(&LanguageSpec::hull_of([bw("0101")])).unwrap();
        assert!(t.contains(&bw("011")));
        assert!(!t.contains(&bw("0011")));
        let (f, t) = freq_and_trash(&LanguageSpec::Finite(BTreeSet::new())).unwrap();
        assert!(f.is_empty());
        assert!(BinaryWord::all_up_to(5).all(|w| t.contains(&w)));
        assert!(matches!(freq_and_trash(&LanguageSpec::builtin(Builtin::Wrep)), Err(Error::Unsupported(_))));
    }
}
