//! Evaluating G(L, w), checking claimed representations, decomposing by
//! letter frequencies, and searching for representing words.

mod search;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::{isomorphic, Graph, ISOMORPHISM_CAP};
use crate::languages::{Builtin, LanguageSpec};
use crate::words::{project_set, BinaryWord, Vertex, VertexWord};

pub use search::{search, SearchConfig, DEFAULT_BUDGET};

/// Pair count above which evaluation runs in parallel.
const PARALLEL_PAIRS: usize = 2048;

/// h_{a,b}(w) for alphabet indices, merging the two occurrence lists.
pub(crate) fn project_positions(pa: &[usize], pb: &[usize]) -> BinaryWord {
    let mut bits = Vec::with_capacity(pa.len() + pb.len());
    let (mut i, mut j) = (0, 0);
    while i < pa.len() || j < pb.len() {
        if j == pb.len() || (i < pa.len() && pa[i] < pb[j]) {
            bits.push(0);
            i += 1;
        } else {
            bits.push(1);
            j += 1;
        }
    }
    BinaryWord::from_bits(bits)
}

/// Copy-language membership of the projection, without building it. With
/// f_a = 2h_a and f_b = 2h_b, the projection is a copy word iff between the
/// i-th and the (i + h_a)-th occurrence of `a` there are exactly h_b
/// occurrences of `b`, for every i < h_a.
pub(crate) fn projection_is_copy(pa: &[usize], pb: &[usize]) -> bool {
    if pa.len() % 2 == 1 || pb.len() % 2 == 1 {
        return false;
    }
    let (ha, hb) = (pa.len() / 2, pb.len() / 2);
    let (mut lo, mut hi) = (0, 0);
    for i in 0..ha {
        while lo < pb.len() && pb[lo] < pa[i] {
            lo += 1;
        }
        while hi < pb.len() && pb[hi] < pa[i + ha] {
            hi += 1;
        }
        if hi - lo != hb {
            return false;
        }
    }
    true
}

/// Membership of the projection onto two position lists, with direct scans
/// for the copy language and its complement.
fn projection_in(l: &LanguageSpec, pa: &[usize], pb: &[usize]) -> bool {
    match l {
        LanguageSpec::Builtin(Builtin::Copy) => projection_is_copy(pa, pb),
        LanguageSpec::Not(x) if matches!(**x, LanguageSpec::Builtin(Builtin::Copy)) => {
            !projection_is_copy(pa, pb)
        }
        _ => l.contains(&project_positions(pa, pb)),
    }
}

/// G(L, w): vertices are the letters of `w`, and `{u, v}` is an edge iff
/// h_{u,v}(w) ∈ L. Each unordered pair is queried once, with the smaller
/// token mapped to 0.
pub fn evaluate(w: &VertexWord, l: &LanguageSpec) -> Result<Graph> {
    l.require_symmetric()?;
    Ok(evaluate_unchecked(w, l))
}

/// [`evaluate`] without the symmetry precondition; the edge relation is
/// then orientation-dependent.
pub(crate) fn evaluate_unchecked(w: &VertexWord, l: &LanguageSpec) -> Graph {
    let pos = w.positions();
    let n = pos.len();
    let row = |i: usize| -> Vec<usize> {
        (i + 1..n)
            .filter(|&j| projection_in(l, &pos[i], &pos[j]))
            .collect()
    };
    let rows: Vec<Vec<usize>> = if n * n / 2 > PARALLEL_PAIRS {
        (0..n).into_par_iter().map(row).collect()
    } else {
        (0..n).map(row).collect()
    };
    let mut g = Graph::edgeless(w.alphabet().to_vec()).expect("words are nonempty");
    for (i, r) in rows.into_iter().enumerate() {
        for j in r {
            g.set_edge(i, j, true);
        }
    }
    g
}

/// A word together with its language and the graph it represents.
#[derive(Debug, Clone)]
pub struct Representation {
    pub word: VertexWord,
    pub language: LanguageSpec,
    pub graph: Graph,
}

impl Representation {
    pub fn new(word: VertexWord, language: LanguageSpec) -> Result<Self> {
        let graph = evaluate(&word, &language)?;
        Ok(Representation { word, language, graph })
    }
}

/// Outcome of [`check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Match,
    /// The evaluated graph differs. When both graphs share the vertex set,
    /// `pair` is the first pair (in vertex order) where they disagree.
    Mismatch { pair: Option<(Vertex, Vertex)> },
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        matches!(self, Verdict::Match)
    }
}

/// Compares G(L, w) with `expected`, up to isomorphism. Graphs above the
/// isomorphism cap are compared on labels only.
pub fn check(w: &VertexWord, l: &LanguageSpec, expected: &Graph) -> Result<Verdict> {
    let g = evaluate(w, l)?;
    if g == *expected {
        return Ok(Verdict::Match);
    }
    let same_shape = g.order() == expected.order() && g.edge_count() == expected.edge_count();
    if same_shape && g.order() <= ISOMORPHISM_CAP && isomorphic(&g, expected)? {
        return Ok(Verdict::Match);
    }
    Ok(Verdict::Mismatch {
        pair: g.first_difference(expected),
    })
}

/// One part of a frequency decomposition: the graph induced on the
/// vertices whose frequency is `k` or `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionPart {
    pub k: usize,
    pub l: usize,
    pub graph: Graph,
}

/// The frequency decomposition of G(L, w).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<DecompositionPart>,
}

impl Decomposition {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.parts.iter().map(|p| (p.k, p.l)).collect()
    }

    /// Union of the edge sets of all parts, by vertex name.
    pub fn edge_union(&self) -> BTreeSet<(Vertex, Vertex)> {
        let mut out = BTreeSet::new();
        for p in &self.parts {
            for (i, j) in p.graph.edges() {
                out.insert((p.graph.vertex(i).clone(), p.graph.vertex(j).clone()));
            }
        }
        out
    }
}

/// Frequency pairs (k ≤ l) realized by some pair of letters whose
/// projection lies in L, each with the graph represented by the word
/// restricted to letters of frequency k or l.
pub fn decompose(w: &VertexWord, l: &LanguageSpec) -> Result<Decomposition> {
    l.require_symmetric()?;
    let pos = w.positions();
    let counts = w.counts();
    let n = pos.len();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if l.contains(&project_positions(&pos[i], &pos[j])) {
                let (a, b) = (counts[i].min(counts[j]), counts[i].max(counts[j]));
                pairs.insert((a, b));
            }
        }
    }
    let mut parts = Vec::new();
    for (k, ll) in pairs {
        let keep: BTreeSet<Vertex> = (0..n)
            .filter(|&i| counts[i] == k || counts[i] == ll)
            .map(|i| w.alphabet()[i].clone())
            .collect();
        let sub = project_set(w, &keep)?;
        parts.push(DecompositionPart {
            k,
            l: ll,
            graph: evaluate_unchecked(&sub, l),
        });
    }
    Ok(Decomposition { parts })
}

/// Smallest positive multiplicity outside freq(L); a letter occurring that
/// often is isolated in every representation over L.
pub fn isolating_frequency(l: &LanguageSpec) -> Option<usize> {
    let f = l.frequency_set()?;
    (1..=64).find(|&m| !f.contains(m))
}

/// Appends each of `extra` (new letters) `m` times, where `m` is the
/// isolating frequency of L. The new letters become isolated vertices.
pub fn append_isolated(w: &VertexWord, extra: &[Vertex], l: &LanguageSpec) -> Result<VertexWord> {
    let m = isolating_frequency(l).ok_or_else(|| {
        Error::Unsupported(format!("no frequency outside freq(L) is known for {l}"))
    })?;
    let mut tokens: Vec<Vertex> = w.tokens().cloned().collect();
    for v in extra {
        if w.index_of(v).is_some() {
            return Err(Error::InvalidArguments(format!("{v} already occurs in the word")));
        }
        tokens.extend(std::iter::repeat_n(v.clone(), m));
    }
    VertexWord::new(tokens)
}

/// Frequency of every letter, by name.
pub fn frequencies(w: &VertexWord) -> BTreeMap<Vertex, usize> {
    crate::words::frequency_profile(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::languages::parse_language;
    use crate::words::{vw, vx};

    fn lang(s: &str) -> LanguageSpec {
        parse_language(s).unwrap()
    }

    #[test]
    fn example_words() {
        let w = vw("14213243");
        assert!(isomorphic(&evaluate(&w, &lang("<0101>")).unwrap(), &Graph::cycle(4)).unwrap());
        let k2n2 = Graph::complete(2).disjoint_sum(&Graph::null(2));
        assert!(isomorphic(&evaluate(&w, &lang("<0011>")).unwrap(), &k2n2).unwrap());
        let two_k2 = Graph::complete(2).disjoint_sum(&Graph::complete(2));
        assert!(isomorphic(&evaluate(&w, &lang("<0011,0110>")).unwrap(), &two_k2).unwrap());
    }

    #[test]
    fn check_reports_pair() {
        let k2 = Graph::new([vx("a"), vx("b")], [(vx("a"), vx("b"))]).unwrap();
        let v = check(&vw("aabb"), &lang("<01>"), &k2).unwrap();
        assert_eq!(v, Verdict::Mismatch { pair: Some((vx("a"), vx("b"))) });
        let c5k1 = Graph::cycle(5).disjoint_sum(&Graph::null(1));
        assert!(check(&vw("eacdabdebcf"), &lang("<0011,0110>"), &c5k1).unwrap().is_match());
    }

    #[test]
    fn decomposition_of_threshold_word() {
        let d = decompose(&vw("aabbc"), &lang("<01,001>")).unwrap();
        assert_eq!(d.pairs(), vec![(1, 2)]);
        let edges: Vec<(String, String)> = d
            .edge_union()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(edges, [("a".into(), "c".into()), ("b".into(), "c".into())]);
    }

    #[test]
    fn copy_scan_matches_membership() {
        for len in 2..=10 {
            for b in BinaryWord::all_of_length(len) {
                let pa: Vec<usize> = (0..len).filter(|&k| b.bits()[k] == 0).collect();
                let pb: Vec<usize> = (0..len).filter(|&k| b.bits()[k] == 1).collect();
                if pa.is_empty() || pb.is_empty() {
                    continue;
                }
                assert_eq!(projection_is_copy(&pa, &pb), Builtin::Copy.contains(&b), "{b}");
            }
        }
    }

    #[test]
    fn isolated_padding() {
        let l = lang("<01,001>");
        assert_eq!(isolating_frequency(&l), Some(3));
        let w = append_isolated(&vw("ab"), &[vx("z")], &l).unwrap();
        let g = evaluate(&w, &l).unwrap();
        assert!(g.is_isolated(g.index_of(&vx("z")).unwrap()));
        assert!(g.adjacent(&vx("a"), &vx("b")));
    }

    #[test]
    fn non_symmetric_languages_are_rejected() {
        let l = lang("re:0*1");
        assert!(matches!(evaluate(&vw("ab"), &l), Err(Error::NotSymmetric { .. })));
    }
}
