//! Exhaustive bounded search for a word w with G(L, w) = G.
//!
//! The search fixes a multiplicity for every vertex, then builds the word
//! letter by letter. After each letter, every pair projection touching the
//! new letter must still be completable to a word of the required
//! membership with the remaining letter counts. Completability answers are
//! cached per pair state, and whole search states known to fail are cached
//! as well.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::languages::LanguageSpec;
use crate::words::{BinaryWord, VertexWord};

use super::evaluate;

/// Default limit on the number of letter placements.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest multiplicity the search accepts; pair projections are packed
/// into 64-bit words.
const MAX_MULTIPLICITY: usize = 32;

/// Upper bound on cached failing states.
const FAILURE_CACHE_CAP: usize = 4_000_000;

/// Bounds on the words the search explores.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Multiplicities allowed for every vertex.
    pub frequencies: Vec<usize>,
    /// Optional per-vertex multiplicity sets, indexed like the graph's
    /// vertices. Overrides `frequencies` when present.
    pub per_vertex: Option<Vec<Vec<usize>>>,
    /// Optional bound on the total word length.
    pub max_len: Option<usize>,
    /// Limit on letter placements before giving up with a capacity error.
    pub budget: u64,
}

impl SearchConfig {
    /// Every vertex occurs exactly `k` times.
    pub fn uniform(k: usize) -> Self {
        SearchConfig::frequencies([k])
    }

    /// Every vertex occurs a number of times taken from `set`.
    pub fn frequencies(set: impl IntoIterator<Item = usize>) -> Self {
        SearchConfig {
            frequencies: set.into_iter().collect(),
            per_vertex: None,
            max_len: None,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_max_len(mut self, max_len: usize) -> Self {
        self.max_len = Some(max_len);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn allowed(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        let sets: Vec<Vec<usize>> = match &self.per_vertex {
            Some(p) if p.len() != n => {
                return Err(Error::InvalidArguments(format!(
                    "per-vertex frequency list has {} entries for {n} vertices",
                    p.len()
                )))
            }
            Some(p) => p.clone(),
            None => vec![self.frequencies.clone(); n],
        };
        sets.into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                if s.is_empty() || s[0] == 0 || *s.last().unwrap() > MAX_MULTIPLICITY {
                    return Err(Error::InvalidArguments(format!(
                        "multiplicities must lie in 1..={MAX_MULTIPLICITY}"
                    )));
                }
                Ok(s)
            })
            .collect()
    }
}

/// Searches for a word representing `g` over `l` within the bounds of
/// `cfg`. Returns `Ok(None)` when the bounded space contains no such word,
/// and a capacity error when the budget runs out first.
pub fn search(g: &Graph, l: &LanguageSpec, cfg: &SearchConfig) -> Result<Option<VertexWord>> {
    l.require_symmetric()?;
    let n = g.order();
    let allowed = cfg.allowed(n)?;
    let prev_twin = twin_chains(g, &allowed);
    let mut oracle = Oracle {
        lang: l,
        complete: HashMap::new(),
        constant: HashMap::new(),
    };
    let mut nodes = 0u64;
    for mult in multiplicity_vectors(&allowed, &prev_twin, cfg.max_len) {
        if let Some(seq) = search_vector(g, &mult, &prev_twin, &mut oracle, &mut nodes, cfg.budget)? {
            let word = VertexWord::from_indices(g.vertices(), &seq)?;
            if evaluate(&word, l)? != *g {
                return Err(Error::VerificationFailed {
                    recipe: "search".into(),
                    detail: format!("word {word} does not represent the input graph"),
                });
            }
            return Ok(Some(word));
        }
    }
    Ok(None)
}

/// For every vertex, the previous member of its twin class, if any. Two
/// vertices are grouped when they are true twins or false twins and share
/// the same allowed multiplicities, so swapping them is an automorphism
/// that preserves the search space.
fn twin_chains(g: &Graph, allowed: &[Vec<usize>]) -> Vec<Option<usize>> {
    let n = g.order();
    let mut prev = vec![None; n];
    for v in 0..n {
        for u in (0..v).rev() {
            if allowed[u] != allowed[v] {
                continue;
            }
            let swappable = (0..n)
                .filter(|&x| x != u && x != v)
                .all(|x| g.has_edge(u, x) == g.has_edge(v, x));
            if swappable {
                prev[v] = Some(u);
                break;
            }
        }
    }
    prev
}

/// Multiplicity vectors in order of increasing total length, keeping only
/// vectors that are non-decreasing along every twin chain.
fn multiplicity_vectors(
    allowed: &[Vec<usize>],
    prev_twin: &[Option<usize>],
    max_len: Option<usize>,
) -> Vec<Vec<usize>> {
    let n = allowed.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(
        i: usize,
        allowed: &[Vec<usize>],
        prev_twin: &[Option<usize>],
        max_len: Option<usize>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == allowed.len() {
            out.push(cur.clone());
            return;
        }
        let used: usize = cur.iter().sum();
        for &m in &allowed[i] {
            if prev_twin[i].is_some_and(|p| cur[p] > m) {
                continue;
            }
            if max_len.is_some_and(|ml| used + m > ml) {
                continue;
            }
            cur.push(m);
            go(i + 1, allowed, prev_twin, max_len, cur, out);
            cur.pop();
        }
    }
    go(0, allowed, prev_twin, max_len, &mut cur, &mut out);
    out.sort_by_key(|v| v.iter().sum::<usize>());
    out
}

/// Cached membership questions about binary words with fixed letter
/// counts.
struct Oracle<'a> {
    lang: &'a LanguageSpec,
    /// (prefix bits, prefix length, zeros left, ones left, want) -> bool
    complete: HashMap<(u64, u8, u8, u8, bool), bool>,
    /// (zeros, ones) -> membership when it is the same for every word
    constant: HashMap<(u8, u8), Option<bool>>,
}

impl Oracle<'_> {
    fn prefix(bits: u64, len: u8) -> Vec<u8> {
        (0..len).map(|k| (bits >> k & 1) as u8).collect()
    }

    /// Whether some word `prefix · s`, with `s` holding `r0` zeros and
    /// `r1` ones, has membership `want`.
    fn completable(&mut self, bits: u64, len: u8, r0: u8, r1: u8, want: bool) -> bool {
        let key = (bits, len, r0, r1, want);
        if let Some(&v) = self.complete.get(&key) {
            return v;
        }
        let mut buf = Oracle::prefix(bits, len);
        let lang = self.lang;
        let v = any_completion(&mut buf, r0, r1, &mut |w| lang.contains(&BinaryWord::from_bits(w.iter().copied())) == want);
        self.complete.insert(key, v);
        v
    }

    fn constant(&mut self, zeros: u8, ones: u8) -> Option<bool> {
        if let Some(&v) = self.constant.get(&(zeros, ones)) {
            return v;
        }
        let yes = self.completable(0, 0, zeros, ones, true);
        let no = self.completable(0, 0, zeros, ones, false);
        let v = match (yes, no) {
            (true, false) => Some(true),
            (false, true) => Some(false),
            _ => None,
        };
        self.constant.insert((zeros, ones), v);
        v
    }
}

fn any_completion(buf: &mut Vec<u8>, r0: u8, r1: u8, test: &mut impl FnMut(&[u8]) -> bool) -> bool {
    if r0 == 0 && r1 == 0 {
        return test(buf);
    }
    for (bit, ok) in [(0u8, r0 > 0), (1u8, r1 > 0)] {
        if !ok {
            continue;
        }
        buf.push(bit);
        let found = if bit == 0 {
            any_completion(buf, r0 - 1, r1, test)
        } else {
            any_completion(buf, r0, r1 - 1, test)
        };
        buf.pop();
        if found {
            return true;
        }
    }
    false
}

struct State<'g> {
    g: &'g Graph,
    n: usize,
    mult: Vec<usize>,
    placed: Vec<usize>,
    active: Vec<usize>,
    prev_twin: &'g [Option<usize>],
    bits: Vec<u64>,
    lens: Vec<u8>,
    seq: Vec<usize>,
    failed: HashSet<Vec<u64>>,
}

impl State<'_> {
    fn pair(&self, a: usize, b: usize) -> usize {
        a.min(b) * self.n + a.max(b)
    }

    fn key(&self) -> Vec<u64> {
        let mut k: Vec<u64> = self.active.iter().map(|&v| self.placed[v] as u64).collect();
        for (x, &a) in self.active.iter().enumerate() {
            for &b in &self.active[x + 1..] {
                k.push(self.bits[self.pair(a, b)]);
            }
        }
        k
    }

    /// Appends `v`, returning false (and leaving the state unchanged) when
    /// some pair through `v` can no longer reach its required membership.
    fn place(&mut self, v: usize, oracle: &mut Oracle) -> bool {
        let mut touched = 0;
        let mut ok = true;
        for idx in 0..self.active.len() {
            let x = self.active[idx];
            if x == v {
                continue;
            }
            let p = self.pair(v, x);
            let bit = u64::from(v > x);
            self.bits[p] |= bit << self.lens[p];
            self.lens[p] += 1;
            touched = idx + 1;
            let (a, b) = (v.min(x), v.max(x));
            let r0 = (self.mult[a] - self.placed[a] - usize::from(a == v)) as u8;
            let r1 = (self.mult[b] - self.placed[b] - usize::from(b == v)) as u8;
            if !oracle.completable(self.bits[p], self.lens[p], r0, r1, self.g.has_edge(a, b)) {
                ok = false;
                break;
            }
        }
        if ok {
            self.placed[v] += 1;
            self.seq.push(v);
        } else {
            self.unwind(v, touched);
        }
        ok
    }

    fn unwind(&mut self, v: usize, touched: usize) {
        for idx in 0..touched {
            let x = self.active[idx];
            if x == v {
                continue;
            }
            let p = self.pair(v, x);
            self.lens[p] -= 1;
            self.bits[p] &= !(1u64 << self.lens[p]);
        }
    }

    fn unplace(&mut self, v: usize) {
        self.placed[v] -= 1;
        self.seq.pop();
        let all = self.active.len();
        self.unwind(v, all);
    }
}

fn search_vector(
    g: &Graph,
    mult: &[usize],
    prev_twin: &[Option<usize>],
    oracle: &mut Oracle,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    // Every pair must admit some arrangement with the required membership.
    for a in 0..n {
        for b in a + 1..n {
            if !oracle.completable(0, 0, mult[a] as u8, mult[b] as u8, g.has_edge(a, b)) {
                return Ok(None);
            }
        }
    }
    // Vertices whose every pair has arrangement-independent membership can
    // go anywhere; they are appended at the end.
    let inert: Vec<bool> = (0..n)
        .map(|v| {
            (0..n).filter(|&x| x != v).all(|x| {
                let (a, b) = (v.min(x), v.max(x));
                oracle.constant(mult[a] as u8, mult[b] as u8).is_some()
            })
        })
        .collect();
    let active: Vec<usize> = (0..n).filter(|&v| !inert[v]).collect();
    let mut st = State {
        g,
        n,
        mult: mult.to_vec(),
        placed: vec![0; n],
        active,
        prev_twin,
        bits: vec![0; n * n],
        lens: vec![0; n * n],
        seq: Vec::new(),
        failed: HashSet::new(),
    };
    let total: usize = st.active.iter().map(|&v| mult[v]).sum();
    let found = dfs(&mut st, total, oracle, nodes, budget)?;
    if !found {
        return Ok(None);
    }
    let mut seq = st.seq;
    for v in (0..n).filter(|&v| inert[v]) {
        seq.extend(std::iter::repeat_n(v, mult[v]));
    }
    Ok(Some(seq))
}

fn dfs(st: &mut State, total: usize, oracle: &mut Oracle, nodes: &mut u64, budget: u64) -> Result<bool> {
    if st.seq.len() == total {
        return Ok(true);
    }
    let key = st.key();
    if st.failed.contains(&key) {
        return Ok(false);
    }
    for idx in 0..st.active.len() {
        let v = st.active[idx];
        if st.placed[v] == st.mult[v] {
            continue;
        }
        if st.placed[v] == 0 {
            // Equal-multiplicity twins are introduced in index order.
            if let Some(p) = st.prev_twin[v] {
                if st.mult[p] == st.mult[v] && st.placed[p] == 0 && st.active.contains(&p) {
                    continue;
                }
            }
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Capacity(format!("search budget of {budget} placements exhausted")));
        }
        if !st.place(v, oracle) {
            continue;
        }
        if dfs(st, total, oracle, nodes, budget)? {
            return Ok(true);
        }
        st.unplace(v);
    }
    if st.failed.len() < FAILURE_CACHE_CAP {
        st.failed.insert(key);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::languages::parse_language;

    fn lang(s: &str) -> LanguageSpec {
        parse_language(s).unwrap()
    }

    #[test]
    fn finds_cycle_under_circle_language() {
        let w = search(&Graph::cycle(5), &lang("<0101>"), &SearchConfig::uniform(2))
            .unwrap()
            .unwrap();
        assert_eq!(w.len(), 10);
    }

    #[test]
    fn four_cycle_is_not_an_interval_graph() {
        let r = search(&Graph::cycle(4), &lang("<0101,0110>"), &SearchConfig::uniform(2)).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn threshold_star() {
        let l = lang("<01,001>");
        let w = search(&Graph::star(3), &l, &SearchConfig::frequencies([1, 2])).unwrap().unwrap();
        assert_eq!(evaluate(&w, &l).unwrap(), Graph::star(3));
    }

    #[test]
    fn budget_is_enforced() {
        let r = search(
            &Graph::cycle(6),
            &lang("<0101,0110>"),
            &SearchConfig::uniform(2).with_budget(10),
        );
        assert!(matches!(r, Err(Error::Capacity(_))));
    }

    #[test]
    fn max_len_prunes_vectors() {
        let cfg = SearchConfig::frequencies([1, 2]).with_max_len(3);
        let r = search(&Graph::path(3), &lang("<01,001>"), &cfg).unwrap();
        assert!(r.is_none());
    }
}
