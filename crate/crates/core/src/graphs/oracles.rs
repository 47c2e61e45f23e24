//! Class membership oracles that never look at words.
//!
//! Each oracle follows the class definition directly: model searches are
//! exhaustive (with memoization of failed states), so they are slow but
//! easy to trust. The witness functions return the structure found, which
//! the builders consume.
//!
//! Order caps: 64 for the direct checks, 14 for interval-type searches,
//! 12 for comparability, 10 for circle, convex and interval bigraphs, and
//! 9 for permutation graphs.

use std::collections::{HashMap, HashSet};

use super::{ClassTag, Graph};
use crate::error::{Error, Result};

const DIRECT_CAP: usize = 64;
const INTERVAL_CAP: usize = 14;
const COMPARABILITY_CAP: usize = 12;
const CIRCLE_CAP: usize = 10;
const CONVEX_CAP: usize = 10;
const PERMUTATION_CAP: usize = 9;

fn cap(g: &Graph, limit: usize, what: &str) -> Result<()> {
    if g.order() > limit {
        Err(Error::Capacity(format!("{what} oracle is limited to order {limit}")))
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|i| g.mask(i)).collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Membership of `g` in the class `tag`.
pub fn oracle(tag: ClassTag, g: &Graph) -> Result<bool> {
    use ClassTag as T;
    let direct = |g: &Graph| cap(g, DIRECT_CAP, tag.name());
    Ok(match tag {
        T::Null => g.is_null(),
        T::Complete => g.complement().is_null(),
        T::Cluster => {
            direct(g)?;
            is_cluster(g)
        }
        T::CompleteMultipartite => {
            direct(g)?;
            is_cluster(&g.complement())
        }
        T::Cograph => {
            direct(g)?;
            cotree(g).is_some()
        }
        T::Bipartite => {
            direct(g)?;
            two_coloring(g).is_some()
        }
        T::Cobipartite => {
            direct(g)?;
            two_coloring(&g.complement()).is_some()
        }
        T::Chordal => {
            direct(g)?;
            perfect_elimination_order(g).is_some()
        }
        T::Split => {
            direct(g)?;
            perfect_elimination_order(g).is_some()
                && perfect_elimination_order(&g.complement()).is_some()
        }
        T::Threshold => {
            direct(g)?;
            creation_sequence(g).is_some()
        }
        T::Interval => interval_model(g)?.is_some(),
        T::CoInterval => interval_model(&g.complement())?.is_some(),
        T::Circle => circle_model(g)?.is_some(),
        T::CoCircle => circle_model(&g.complement())?.is_some(),
        T::Permutation => permutation_model(g)?.is_some(),
        T::Comparability => transitive_orientation(g)?.is_some(),
        T::Cocomparability => transitive_orientation(&g.complement())?.is_some(),
        T::BipartiteChain => {
            direct(g)?;
            chain_model(g).is_some()
        }
        T::CoBipartiteChain => {
            direct(g)?;
            chain_model(&g.complement()).is_some()
        }
        T::Convex => convex_model(g)?.is_some(),
        T::BicoConvex => bico_convex_model(g)?.is_some(),
        T::IntervalBigraph => interval_bigraph_model(g)?.is_some(),
        T::Halfline => {
            direct(g)?;
            halfline_model(g).is_some()
        }
    })
}

fn is_cluster(g: &Graph) -> bool {
    let m = masks(g);
    g.edges()
        .into_iter()
        .all(|(i, j)| m[i] | 1 << i == m[j] | 1 << j)
}

/// A proper 2-coloring: `true` marks one class. The first vertex of each
/// component gets `true`.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(true);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let cx = color[x].unwrap();
            for y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(c) if c == cx => return None,
                    _ => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// Every proper 2-coloring up to the placement of isolated vertices (which
/// are put on the `false` side).
pub fn all_two_colorings(g: &Graph) -> Vec<Vec<bool>> {
    let Some(base) = two_coloring(g) else {
        return Vec::new();
    };
    let n = g.order();
    let mut comp = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX || g.is_isolated(s) {
            continue;
        }
        let id = reps.len();
        reps.push(s);
        let mut stack = vec![s];
        comp[s] = id;
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    stack.push(y);
                }
            }
        }
    }
    let k = reps.len();
    assert!(k < 24, "too many components to enumerate colorings");
    (0u32..1 << k)
        .map(|flip| {
            (0..n)
                .map(|i| {
                    if comp[i] == usize::MAX {
                        false
                    } else {
                        base[i] ^ (flip >> comp[i] & 1 == 1)
                    }
                })
                .collect()
        })
        .collect()
}

/// A perfect elimination order: each vertex is simplicial among the
/// vertices after it.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let m = masks(g);
    let mut alive = full_mask(n);
    let mut order = Vec::with_capacity(n);
    while alive != 0 {
        let v = bits(alive).find(|&v| {
            let nb = m[v] & alive;
            bits(nb).all(|u| nb & !(1 << u) & !m[u] == 0)
        })?;
        order.push(v);
        alive &= !(1 << v);
    }
    Some(order)
}

/// A construction sequence for a threshold graph: the first entry is the
/// starting vertex, each later vertex is added as universal (`true`) or
/// isolated (`false`) in the graph built so far.
pub fn creation_sequence(g: &Graph) -> Option<Vec<(usize, bool)>> {
    let n = g.order();
    let m = masks(g);
    let mut alive = full_mask(n);
    let mut peeled = Vec::with_capacity(n);
    while alive.count_ones() > 1 {
        let v = bits(alive).find(|&v| {
            let nb = m[v] & alive;
            nb == 0 || nb == alive & !(1 << v)
        })?;
        peeled.push((v, m[v] & alive != 0));
        alive &= !(1 << v);
    }
    peeled.push((alive.trailing_zeros() as usize, false));
    peeled.reverse();
    Some(peeled)
}

/// A cotree: leaves are vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

fn components_of(m: &[u64], set: u64) -> Vec<u64> {
    let mut rest = set;
    let mut out = Vec::new();
    while rest != 0 {
        let s = rest.trailing_zeros();
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = m[x] & set & !comp;
            comp |= nb;
            frontier |= nb;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Cotree of a cograph: every induced subgraph on two or more vertices is
/// disconnected or has a disconnected complement.
pub fn cotree(g: &Graph) -> Option<Cotree> {
    let n = g.order();
    let m = masks(g);
    let full = full_mask(n);
    let cm: Vec<u64> = (0..n).map(|i| !m[i] & full & !(1 << i)).collect();
    fn go(m: &[u64], cm: &[u64], set: u64) -> Option<Cotree> {
        if set.count_ones() == 1 {
            return Some(Cotree::Leaf(set.trailing_zeros() as usize));
        }
        let comps = components_of(m, set);
        if comps.len() > 1 {
            return comps.into_iter().map(|c| go(m, cm, c)).collect::<Option<_>>().map(Cotree::Union);
        }
        let cocomps = components_of(cm, set);
        if cocomps.len() > 1 {
            return cocomps.into_iter().map(|c| go(m, cm, c)).collect::<Option<_>>().map(Cotree::Join);
        }
        None
    }
    go(&m, &cm, full)
}

/// An interval model as an endpoint sequence: every vertex occurs twice,
/// first at its left and then at its right endpoint, and two vertices are
/// adjacent iff their intervals overlap.
pub fn interval_model(g: &Graph) -> Result<Option<Vec<usize>>> {
    cap(g, INTERVAL_CAP, "interval")?;
    let m = masks(g);
    let side = vec![0u8; g.order()];
    Ok(endpoint_search(&m, &side, false))
}

/// Endpoint-sequence search shared by interval graphs and interval
/// bigraphs. With `bigraph`, only pairs on different sides (`side`) are
/// constrained.
fn endpoint_search(m: &[u64], side: &[u8], bigraph: bool) -> Option<Vec<usize>> {
    let n = m.len();
    let full = full_mask(n);
    let other: Vec<u64> = (0..n)
        .map(|v| {
            if bigraph {
                (0..n).filter(|&u| side[u] != side[v]).fold(0, |acc, u| acc | 1 << u)
            } else {
                full & !(1 << v)
            }
        })
        .collect();
    struct S<'a> {
        m: &'a [u64],
        other: &'a [u64],
        full: u64,
        failed: HashSet<(u64, u64)>,
        seq: Vec<usize>,
    }
    fn go(s: &mut S, opened: u64, closed: u64) -> bool {
        if closed == s.full {
            return true;
        }
        if s.failed.contains(&(opened, closed)) {
            return false;
        }
        let open = opened & !closed;
        // Closing a vertex whose constrained neighbors are all open never
        // hurts, so it is done eagerly.
        if let Some(v) = bits(open).find(|&v| s.m[v] & s.other[v] & !opened == 0) {
            s.seq.push(v);
            if go(s, opened, closed | 1 << v) {
                return true;
            }
            s.seq.pop();
            s.failed.insert((opened, closed));
            return false;
        }
        for v in bits(s.full & !opened) {
            let rel = s.other[v];
            if open & rel & !s.m[v] == 0 && closed & rel & s.m[v] == 0 {
                s.seq.push(v);
                if go(s, opened | 1 << v, closed) {
                    return true;
                }
                s.seq.pop();
            }
        }
        s.failed.insert((opened, closed));
        false
    }
    let mut s = S {
        m,
        other: &other,
        full,
        failed: HashSet::new(),
        seq: Vec::with_capacity(2 * n),
    };
    go(&mut s, 0, 0).then_some(s.seq)
}

/// A chord diagram: a sequence in which every vertex occurs twice and two
/// vertices are adjacent iff their occurrences alternate.
pub fn circle_model(g: &Graph) -> Result<Option<Vec<usize>>> {
    cap(g, CIRCLE_CAP, "circle")?;
    let n = g.order();
    let m = masks(g);
    let full = full_mask(n);
    struct S<'a> {
        m: &'a [u64],
        full: u64,
        failed: HashSet<(u64, Vec<u8>)>,
        seq: Vec<usize>,
    }
    fn go(s: &mut S, opened: u64, closed: u64, open: &mut Vec<u8>) -> bool {
        if closed == s.full {
            return true;
        }
        let key = (closed, open.clone());
        if s.failed.contains(&key) {
            return false;
        }
        let unopened = s.full & !opened;
        for k in 0..open.len() {
            let u = open[k] as usize;
            if s.m[u] & unopened != 0 {
                continue;
            }
            // Vertices opened after u alternate with it, earlier ones nest.
            let ok = open.iter().enumerate().all(|(p, &v)| {
                let v = v as usize;
                v == u || (s.m[u] >> v & 1 == 1) == (p > k)
            });
            if !ok {
                continue;
            }
            open.remove(k);
            s.seq.push(u);
            if go(s, opened, closed | 1 << u, open) {
                return true;
            }
            s.seq.pop();
            open.insert(k, u as u8);
        }
        let candidates: Vec<usize> = if opened == 0 { vec![0] } else { bits(unopened).collect() };
        for v in candidates {
            open.push(v as u8);
            s.seq.push(v);
            if go(s, opened | 1 << v, closed, open) {
                return true;
            }
            s.seq.pop();
            open.pop();
        }
        s.failed.insert(key);
        false
    }
    let mut s = S {
        m: &m,
        full,
        failed: HashSet::new(),
        seq: Vec::with_capacity(2 * n),
    };
    Ok(go(&mut s, 0, 0, &mut Vec::new()).then_some(s.seq))
}

/// Two orderings of the vertices such that two vertices are adjacent iff
/// their relative order differs between them.
pub fn permutation_model(g: &Graph) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    cap(g, PERMUTATION_CAP, "permutation")?;
    let n = g.order();
    let mut first: Vec<usize> = (0..n).collect();
    loop {
        let mut pos = vec![0; n];
        for (p, &v) in first.iter().enumerate() {
            pos[v] = p;
        }
        // In the second ordering, u precedes v iff (u precedes v in the
        // first) xor (u ~ v). That relation must be a linear order, which
        // holds iff all "precedes" counts are distinct.
        let score: Vec<usize> = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && ((pos[u] < pos[v]) ^ g.has_edge(u, v)))
                    .count()
            })
            .collect();
        let mut seen = vec![false; n];
        if score.iter().all(|&s| !std::mem::replace(&mut seen[s], true)) {
            let mut second: Vec<usize> = (0..n).collect();
            second.sort_by_key(|&v| std::cmp::Reverse(score[v]));
            return Ok(Some((first, second)));
        }
        if !next_permutation(&mut first) {
            return Ok(None);
        }
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A strict partial order on vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictOrder {
    less: Vec<Vec<bool>>,
}

impl StrictOrder {
    /// Builds an order from its strict relation; fails unless irreflexive
    /// and transitive (asymmetry follows).
    pub fn new(less: Vec<Vec<bool>>) -> Result<StrictOrder> {
        let n = less.len();
        if less.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArguments("order matrix is not square".into()));
        }
        for a in 0..n {
            if less[a][a] {
                return Err(Error::InvalidArguments("order is not irreflexive".into()));
            }
            for b in 0..n {
                if less[a][b] {
                    for c in 0..n {
                        if less[b][c] && !less[a][c] {
                            return Err(Error::InvalidArguments("order is not transitive".into()));
                        }
                    }
                }
            }
        }
        Ok(StrictOrder { less })
    }

    pub fn len(&self) -> usize {
        self.less.len()
    }

    pub fn is_empty(&self) -> bool {
        self.less.is_empty()
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    /// A linear extension: vertices sorted by the number of predecessors.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut v: Vec<usize> = (0..n).collect();
        v.sort_by_key(|&b| ((0..n).filter(|&a| self.less[a][b]).count(), b));
        v
    }
}

/// A transitive orientation, returned as a strict order whose
/// comparability graph is `g`.
pub fn transitive_orientation(g: &Graph) -> Result<Option<StrictOrder>> {
    cap(g, COMPARABILITY_CAP, "comparability")?;
    let n = g.order();
    // dir[a][b] = 1 means a ≺ b, -1 means b ≺ a, 0 undecided.
    fn set(dir: &mut [Vec<i8>], queue: &mut Vec<(usize, usize)>, x: usize, y: usize) -> bool {
        match dir[x][y] {
            1 => true,
            -1 => false,
            _ => {
                dir[x][y] = 1;
                dir[y][x] = -1;
                queue.push((x, y));
                true
            }
        }
    }
    fn propagate(g: &Graph, dir: &mut [Vec<i8>], mut queue: Vec<(usize, usize)>) -> bool {
        let n = g.order();
        while let Some((a, b)) = queue.pop() {
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                let (ac, bc) = (g.has_edge(a, c), g.has_edge(b, c));
                if dir[b][c] == 1 && !(ac && set(dir, &mut queue, a, c)) {
                    return false;
                }
                if dir[c][a] == 1 && !(bc && set(dir, &mut queue, c, b)) {
                    return false;
                }
                if bc && !ac && !set(dir, &mut queue, c, b) {
                    return false;
                }
                if ac && !bc && !set(dir, &mut queue, a, c) {
                    return false;
                }
            }
        }
        true
    }
    fn go(g: &Graph, dir: Vec<Vec<i8>>) -> Option<Vec<Vec<i8>>> {
        let next = g.edges().into_iter().find(|&(i, j)| dir[i][j] == 0);
        let Some((i, j)) = next else {
            return Some(dir);
        };
        for (x, y) in [(i, j), (j, i)] {
            let mut d = dir.clone();
            let mut q = Vec::new();
            if set(&mut d, &mut q, x, y) && propagate(g, &mut d, q) {
                if let Some(done) = go(g, d) {
                    return Some(done);
                }
            }
        }
        None
    }
    let Some(dir) = go(g, vec![vec![0i8; n]; n]) else {
        return Ok(None);
    };
    let less = dir.iter().map(|r| r.iter().map(|&d| d == 1).collect()).collect();
    Ok(Some(StrictOrder::new(less).expect("propagation yields a transitive order")))
}

/// A bipartition (`true` side first in the nesting sense) in which the
/// neighborhoods of the `true` side form a chain under inclusion.
pub fn chain_model(g: &Graph) -> Option<Vec<bool>> {
    let m = masks(g);
    all_two_colorings(g).into_iter().find(|side| {
        let mut nbhd: Vec<u64> = (0..g.order()).filter(|&i| side[i]).map(|i| m[i]).collect();
        nbhd.sort_by_key(|x| x.count_ones());
        nbhd.windows(2).all(|w| w[0] & !w[1] == 0)
    })
}

/// Search for an ordering of the `ordered` vertices in which each
/// neighborhood (given as masks over the ordered vertices) is consecutive.
fn consecutive_ordering(ordered: &[usize], nbhds: &[u64]) -> Option<Vec<usize>> {
    let all: u64 = ordered.iter().fold(0, |acc, &v| acc | 1 << v);
    fn go(all: u64, nbhds: &[u64], placed: u64, seq: &mut Vec<usize>, failed: &mut HashSet<u64>) -> bool {
        if placed == all {
            return true;
        }
        if failed.contains(&placed) {
            return false;
        }
        for y in bits(all & !placed) {
            let ok = nbhds.iter().all(|&nx| {
                let started = nx & placed != 0;
                let complete = nx & !placed == 0;
                !(started && !complete) || nx >> y & 1 == 1
            });
            if ok {
                seq.push(y);
                if go(all, nbhds, placed | 1 << y, seq, failed) {
                    return true;
                }
                seq.pop();
            }
        }
        failed.insert(placed);
        false
    }
    let mut seq = Vec::new();
    go(all, nbhds, 0, &mut seq, &mut HashSet::new()).then_some(seq)
}

/// Convexity witness: `side` (vertices marked `true` are ordered) and an
/// ordering of that side in which every neighborhood of the other side is
/// consecutive.
pub type ConvexModel = (Vec<bool>, Vec<usize>);

fn convex_for(m: &[u64], colorings: Vec<Vec<bool>>) -> Option<ConvexModel> {
    let n = m.len();
    for side in colorings {
        for flip in [false, true] {
            let ordered_side: Vec<bool> = side.iter().map(|&s| s ^ flip).collect();
            let ordered: Vec<usize> = (0..n).filter(|&i| ordered_side[i]).collect();
            let nbhds: Vec<u64> = (0..n).filter(|&i| !ordered_side[i]).map(|i| m[i]).collect();
            if let Some(order) = consecutive_ordering(&ordered, &nbhds) {
                return Some((ordered_side, order));
            }
        }
    }
    None
}

pub fn convex_model(g: &Graph) -> Result<Option<ConvexModel>> {
    cap(g, CONVEX_CAP, "convex")?;
    Ok(convex_for(&masks(g), all_two_colorings(g)))
}

/// The bipartite complement with respect to a 2-coloring: cross pairs are
/// complemented, same-side pairs stay non-adjacent.
pub fn bipartite_complement(g: &Graph, side: &[bool]) -> Graph {
    Graph::from_fn(g.vertices().to_vec(), |i, j| side[i] != side[j] && !g.has_edge(i, j))
        .expect("nonempty")
}

/// A bipartition and an ordering of its `true` side under which the
/// bipartite complement is convex.
pub fn bico_convex_model(g: &Graph) -> Result<Option<ConvexModel>> {
    cap(g, CONVEX_CAP, "bico-convex")?;
    let n = g.order();
    let mut colorings = all_two_colorings(g);
    // Isolated vertices may sit on either side, which matters after
    // complementing the cross pairs.
    let isolated: Vec<usize> = (0..n).filter(|&i| g.is_isolated(i)).collect();
    let mut expanded = Vec::new();
    for c in colorings.drain(..) {
        for mask in 0u32..1 << isolated.len() {
            let mut c2 = c.clone();
            for (k, &v) in isolated.iter().enumerate() {
                c2[v] = mask >> k & 1 == 1;
            }
            expanded.push(c2);
        }
    }
    for side in expanded {
        let h = bipartite_complement(g, &side);
        if let Some(found) = convex_for(&masks(&h), vec![side.clone()]) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// An interval bigraph model: a bipartition and an endpoint sequence in
/// which cross pairs are adjacent iff their intervals overlap.
pub fn interval_bigraph_model(g: &Graph) -> Result<Option<(Vec<bool>, Vec<usize>)>> {
    cap(g, CONVEX_CAP, "interval-bigraph")?;
    let m = masks(g);
    for side in all_two_colorings(g) {
        let tags: Vec<u8> = side.iter().map(|&s| s as u8).collect();
        if let Some(seq) = endpoint_search(&m, &tags, true) {
            return Ok(Some((side, seq)));
        }
    }
    Ok(None)
}

/// Halfline model up to isolated vertices: `(v1, v2, isolated)` where
/// `v1` and `v2` are cliques covering the non-isolated vertices and the
/// non-isolated part is chordal.
pub fn halfline_model(g: &Graph) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let isolated: Vec<usize> = (0..n).filter(|&i| g.is_isolated(i)).collect();
    let core: Vec<usize> = (0..n).filter(|&i| !g.is_isolated(i)).collect();
    if core.is_empty() {
        return Some((Vec::new(), Vec::new(), isolated));
    }
    let h = g.induced_indices(&core);
    perfect_elimination_order(&h)?;
    let color = two_coloring(&h.complement())?;
    let v1 = core.iter().zip(&color).filter(|(_, &c)| c).map(|(&v, _)| v).collect();
    let v2 = core.iter().zip(&color).filter(|(_, &c)| !c).map(|(&v, _)| v).collect();
    Some((v1, v2, isolated))
}

/// Counts the order-`n` graphs (from `graphs`) accepted by each tag.
pub fn tally(graphs: &[Graph], tags: &[ClassTag]) -> Result<HashMap<ClassTag, usize>> {
    let mut out = HashMap::new();
    for &t in tags {
        let mut c = 0;
        for g in graphs {
            c += oracle(t, g)? as usize;
        }
        out.insert(t, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::enumerate_graphs;
    use ClassTag as T;

    #[test]
    fn small_examples() {
        let c4 = Graph::cycle(4);
        assert!(!oracle(T::Interval, &c4).unwrap());
        assert!(oracle(T::Circle, &c4).unwrap());
        assert!(!oracle(T::Threshold, &Graph::path(4)).unwrap());
        assert!(oracle(T::Threshold, &Graph::star(3)).unwrap());
        assert!(!oracle(T::Cograph, &Graph::path(4)).unwrap());
        assert!(oracle(T::Permutation, &Graph::path(4)).unwrap());
        assert!(!oracle(T::Comparability, &Graph::cycle(5)).unwrap());
        assert!(oracle(T::Comparability, &c4).unwrap());
        assert!(!oracle(T::Chordal, &c4).unwrap());
        assert!(oracle(T::Split, &Graph::path(3)).unwrap());
        assert!(!oracle(T::Split, &c4).unwrap());
        assert!(oracle(T::BipartiteChain, &Graph::path(3)).unwrap());
        assert!(!oracle(T::BipartiteChain, &Graph::complete(2).disjoint_sum(&Graph::complete(2))).unwrap());
        assert!(oracle(T::Convex, &Graph::star(3)).unwrap());
        assert!(oracle(T::IntervalBigraph, &c4).unwrap());
        assert!(oracle(T::Halfline, &Graph::complete(3).disjoint_sum(&Graph::null(1))).unwrap());
        assert!(!oracle(T::Halfline, &c4).unwrap());
        assert!(oracle(T::CompleteMultipartite, &c4).unwrap());
        assert!(oracle(T::Cluster, &Graph::complete(2).disjoint_sum(&Graph::complete(3))).unwrap());
    }

    #[test]
    fn class_equivalences_through_order_six() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let co = g.complement();
                let chordal = oracle(T::Chordal, &g).unwrap();
                let cochordal = oracle(T::Chordal, &co).unwrap();
                let comp = oracle(T::Comparability, &g).unwrap();
                let cocomp = oracle(T::Cocomparability, &g).unwrap();
                assert_eq!(oracle(T::Split, &g).unwrap(), chordal && cochordal, "{g:?}");
                assert_eq!(oracle(T::Permutation, &g).unwrap(), comp && cocomp, "{g:?}");
                assert_eq!(oracle(T::Interval, &g).unwrap(), chordal && cocomp, "{g:?}");
            }
        }
    }

    #[test]
    fn witnesses_are_consistent() {
        for g in enumerate_graphs(5).unwrap() {
            if let Some(seq) = interval_model(&g).unwrap() {
                let first = |v: usize| seq.iter().position(|&x| x == v).unwrap();
                let last = |v: usize| seq.iter().rposition(|&x| x == v).unwrap();
                for (i, j) in (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))) {
                    let overlap = first(i).max(first(j)) < last(i).min(last(j));
                    assert_eq!(overlap, g.has_edge(i, j));
                }
            }
            if let Some(order) = transitive_orientation(&g).unwrap() {
                for (i, j) in (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))) {
                    assert_eq!(order.less(i, j) || order.less(j, i), g.has_edge(i, j));
                }
            }
        }
    }

    #[test]
    fn next_permutation_counts() {
        let mut p = vec![0, 1, 2, 3];
        let mut c = 1;
        while next_permutation(&mut p) {
            c += 1;
        }
        assert_eq!(c, 24);
    }
}
