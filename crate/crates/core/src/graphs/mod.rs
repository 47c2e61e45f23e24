//! Simple undirected graphs over named vertices.
//!
//! Vertices are kept sorted by token, so vertex index `i` of a graph
//! evaluated from a word is alphabet index `i` of that word. Adjacency is
//! stored as one bitset row per vertex.

mod families;
mod io;
mod iso;
pub mod oracles;
mod width;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::Vertex;

pub use iso::{enumerate_graphs, isomorphic, isomorphism, ENUMERATION_CAP, ISOMORPHISM_CAP};
pub use oracles::oracle;
pub use width::{degeneracy, treewidth_exact, TREEWIDTH_CAP};

/// A simple graph with a nonempty, sorted vertex set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<Vertex>,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from vertices and edges given by name. Vertices are
    /// sorted; duplicate edges are merged.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        let given = vs.len();
        vs.sort();
        vs.dedup();
        if vs.len() != given {
            return Err(Error::InvalidArguments("duplicate vertex".into()));
        }
        let mut g = Graph::edgeless(vs)?;
        for (u, v) in edges {
            let i = g.require_index(&u)?;
            let j = g.require_index(&v)?;
            if i == j {
                return Err(Error::InvalidArguments(format!("loop at {u}")));
            }
            g.set_edge(i, j, true);
        }
        Ok(g)
    }

    /// The edgeless graph on the given (sorted, distinct) vertices.
    pub(crate) fn edgeless(vertices: Vec<Vertex>) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::InvalidArguments("a graph needs at least one vertex".into()));
        }
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let stride = vertices.len().div_ceil(64);
        let rows = vec![0; stride * vertices.len()];
        Ok(Graph { vertices, stride, rows })
    }

    /// A graph on sorted distinct vertices with adjacency given by `f(i, j)`
    /// for `i < j`.
    pub fn from_fn(vertices: Vec<Vertex>, mut f: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut vs = vertices;
        vs.sort();
        vs.dedup();
        let mut g = Graph::edgeless(vs)?;
        let n = g.order();
        for i in 0..n {
            for j in i + 1..n {
                if f(i, j) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// A graph on vertices `1..=n` (labels zero-padded to equal width so
    /// that token order is numeric order), with 0-based index edges.
    pub fn indexed(n: usize, edges: &[(usize, usize)]) -> Graph {
        assert!(n >= 1, "indexed graph needs at least one vertex");
        let mut g = Graph::edgeless(index_labels(n)).expect("n >= 1");
        for &(i, j) in edges {
            assert!(i != j && i < n && j < n, "bad edge ({i},{j}) for order {n}");
            g.set_edge(i, j, true);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    fn require_index(&self, v: &Vertex) -> Result<usize> {
        self.index_of(v)
            .ok_or_else(|| Error::InvalidArguments(format!("{v} is not a vertex")))
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    /// Adjacency by vertex name; unknown names are never adjacent.
    pub fn adjacent(&self, u: &Vertex, v: &Vertex) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.has_edge(i, j),
            _ => false,
        }
    }

    pub(crate) fn set_edge(&mut self, i: usize, j: usize, on: bool) {
        debug_assert!(i != j);
        for (a, b) in [(i, j), (j, i)] {
            let cell = &mut self.rows[a * self.stride + b / 64];
            if on {
                *cell |= 1 << (b % 64);
            } else {
                *cell &= !(1 << (b % 64));
            }
        }
    }

    /// Neighborhood of `i` as a bitmask; only for graphs of order ≤ 64.
    pub fn mask(&self, i: usize) -> u64 {
        assert!(self.order() <= 64, "bitmask access needs order ≤ 64");
        self.rows[i]
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.order()).filter(|&j| self.has_edge(i, j)).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i * self.stride..(i + 1) * self.stride]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_isolated(&self, i: usize) -> bool {
        self.degree(i) == 0
    }

    pub fn is_universal(&self, i: usize) -> bool {
        self.degree(i) + 1 == self.order()
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.vertices.clone(), |i, j| !self.has_edge(i, j)).expect("nonempty")
    }

    fn disjoint_merge(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let mut vs: Vec<Vertex> = self.vertices.iter().chain(&other.vertices).cloned().collect();
        vs.sort();
        let before = vs.len();
        vs.dedup();
        if vs.len() != before {
            return Err(Error::InvalidArguments("vertex sets are not disjoint".into()));
        }
        let side: Vec<Option<usize>> = vs.iter().map(|v| self.index_of(v)).collect();
        let other_idx: Vec<Option<usize>> = vs.iter().map(|v| other.index_of(v)).collect();
        Graph::from_fn(vs, |i, j| match (side[i], side[j]) {
            (Some(a), Some(b)) => self.has_edge(a, b),
            (None, None) => other.has_edge(other_idx[i].unwrap(), other_idx[j].unwrap()),
            _ => cross,
        })
    }

    /// Graph union G1 ∪ G2 of vertex-disjoint graphs.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        self.disjoint_merge(other, false)
    }

    /// Graph join G1 ∇ G2 of vertex-disjoint graphs.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.disjoint_merge(other, true)
    }

    /// The induced subgraph G[A] for a nonempty subset A of the vertices.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Result<Graph> {
        let idx = keep
            .iter()
            .map(|v| self.require_index(v))
            .collect::<Result<Vec<_>>>()?;
        if idx.is_empty() {
            return Err(Error::InvalidArguments("induced subgraph needs a vertex".into()));
        }
        Ok(self.induced_indices(&idx))
    }

    /// Induced subgraph on ascending vertex indices.
    pub fn induced_indices(&self, idx: &[usize]) -> Graph {
        let vs = idx.iter().map(|&i| self.vertices[i].clone()).collect();
        Graph::from_fn(vs, |a, b| self.has_edge(idx[a], idx[b])).expect("nonempty index list")
    }

    /// Removes one vertex; fails when it is the last one.
    pub fn remove_vertex(&self, v: &Vertex) -> Result<Graph> {
        let i = self.require_index(v)?;
        let keep: Vec<usize> = (0..self.order()).filter(|&j| j != i).collect();
        if keep.is_empty() {
            return Err(Error::InvalidArguments("cannot remove the only vertex".into()));
        }
        Ok(self.induced_indices(&keep))
    }

    /// Adds a fresh vertex `twin` with the same neighbors as `v`; the two
    /// are adjacent iff `true_twin`.
    pub fn add_twin(&self, v: &Vertex, twin: Vertex, true_twin: bool) -> Result<Graph> {
        let i = self.require_index(v)?;
        if self.index_of(&twin).is_some() {
            return Err(Error::InvalidArguments(format!("{twin} is already a vertex")));
        }
        let mut vs = self.vertices.clone();
        vs.push(twin.clone());
        vs.sort();
        let src = |x: &Vertex| -> usize {
            if *x == twin {
                i
            } else {
                self.index_of(x).unwrap()
            }
        };
        let g = Graph::from_fn(vs.clone(), |a, b| {
            let (x, y) = (&vs[a], &vs[b]);
            if (*x == twin && y == v) || (*y == twin && x == v) {
                true_twin
            } else {
                self.has_edge(src(x), src(y))
            }
        })?;
        Ok(g)
    }

    /// The same graph with every vertex renamed by `f`.
    pub fn relabel(&self, mut f: impl FnMut(usize, &Vertex) -> Vertex) -> Result<Graph> {
        let names: Vec<Vertex> = self.vertices.iter().enumerate().map(|(i, v)| f(i, v)).collect();
        let edges: Vec<(Vertex, Vertex)> = self
            .edges()
            .into_iter()
            .map(|(i, j)| (names[i].clone(), names[j].clone()))
            .collect();
        Graph::new(names, edges)
    }

    /// First vertex pair (in index order) on which two graphs over the same
    /// vertex set disagree.
    pub fn first_difference(&self, other: &Graph) -> Option<(Vertex, Vertex)> {
        if self.vertices != other.vertices {
            return None;
        }
        let n = self.order();
        for i in 0..n {
            for j in i + 1..n {
                if self.has_edge(i, j) != other.has_edge(i, j) {
                    return Some((self.vertices[i].clone(), self.vertices[j].clone()));
                }
            }
        }
        None
    }

    /// Whether the graph has no edges.
    pub fn is_null(&self) -> bool {
        self.edge_count() == 0
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vertices.iter().map(|v| v.as_str()).collect();
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(i, j)| format!("{}-{}", names[i], names[j]))
            .collect();
        write!(f, "Graph[{}; {}]", names.join(" "), edges.join(" "))
    }
}

/// Labels `1..=n`, zero-padded to the width of `n`.
pub(crate) fn index_labels(n: usize) -> Vec<Vertex> {
    let width = n.to_string().len();
    (1..=n)
        .map(|i| Vertex::new(format!("{i:0width$}")).expect("numeric label"))
        .collect()
}

/// The graph classes with an independent membership oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Null,
    Complete,
    Cluster,
    Cograph,
    Bipartite,
    Cobipartite,
    Split,
    Threshold,
    Interval,
    CoInterval,
    Circle,
    CoCircle,
    Permutation,
    Comparability,
    Cocomparability,
    BipartiteChain,
    CoBipartiteChain,
    Convex,
    BicoConvex,
    IntervalBigraph,
    Halfline,
    CompleteMultipartite,
    Chordal,
}

impl ClassTag {
    pub const ALL: [ClassTag; 23] = [
        ClassTag::Null,
        ClassTag::Complete,
        ClassTag::Cluster,
        ClassTag::Cograph,
        ClassTag::Bipartite,
        ClassTag::Cobipartite,
        ClassTag::Split,
        ClassTag::Threshold,
        ClassTag::Interval,
        ClassTag::CoInterval,
        ClassTag::Circle,
        ClassTag::CoCircle,
        ClassTag::Permutation,
        ClassTag::Comparability,
        ClassTag::Cocomparability,
        ClassTag::BipartiteChain,
        ClassTag::CoBipartiteChain,
        ClassTag::Convex,
        ClassTag::BicoConvex,
        ClassTag::IntervalBigraph,
        ClassTag::Halfline,
        ClassTag::CompleteMultipartite,
        ClassTag::Chordal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Null => "null",
            ClassTag::Complete => "complete",
            ClassTag::Cluster => "cluster",
            ClassTag::Cograph => "cograph",
            ClassTag::Bipartite => "bipartite",
            ClassTag::Cobipartite => "cobipartite",
            ClassTag::Split => "split",
            ClassTag::Threshold => "threshold",
            ClassTag::Interval => "interval",
            ClassTag::CoInterval => "co-interval",
            ClassTag::Circle => "circle",
            ClassTag::CoCircle => "co-circle",
            ClassTag::Permutation => "permutation",
            ClassTag::Comparability => "comparability",
            ClassTag::Cocomparability => "cocomparability",
            ClassTag::BipartiteChain => "bipartite-chain",
            ClassTag::CoBipartiteChain => "co-bipartite-chain",
            ClassTag::Convex => "convex",
            ClassTag::BicoConvex => "bico-convex",
            ClassTag::IntervalBigraph => "interval-bigraph",
            ClassTag::Halfline => "halfline",
            ClassTag::CompleteMultipartite => "complete-multipartite",
            ClassTag::Chordal => "chordal",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassTag::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArguments(format!("unknown class tag {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::vx;

    #[test]
    fn complement_of_complete_bipartite_is_two_cliques() {
        let k23 = Graph::complete_bipartite(2, 3);
        let c = k23.complement();
        let two_cliques = Graph::complete(2).disjoint_sum(&Graph::complete(3));
        assert!(isomorphic(&c, &two_cliques).unwrap());
    }

    #[test]
    fn join_of_null_graphs() {
        let a = Graph::new([vx("a"), vx("b")], []).unwrap();
        let b = Graph::new([vx("x"), vx("y"), vx("z")], []).unwrap();
        let j = a.join(&b).unwrap();
        assert!(isomorphic(&j, &Graph::complete_bipartite(2, 3)).unwrap());
        assert!(a.union(&a).is_err());
    }

    #[test]
    fn induced_three_of_c4_is_p3() {
        let c4 = Graph::cycle(4);
        let keep: BTreeSet<Vertex> = c4.vertices()[..3].iter().cloned().collect();
        assert!(isomorphic(&c4.induced(&keep).unwrap(), &Graph::path(3)).unwrap());
    }

    #[test]
    fn twins() {
        let p3 = Graph::path(3);
        let g = p3.add_twin(&vx("2"), vx("9"), true).unwrap();
        assert!(g.adjacent(&vx("2"), &vx("9")));
        assert!(g.adjacent(&vx("9"), &vx("1")) && g.adjacent(&vx("9"), &vx("3")));
        let h = p3.add_twin(&vx("1"), vx("0"), false).unwrap();
        assert!(!h.adjacent(&vx("0"), &vx("1")));
        assert_eq!(h.remove_vertex(&vx("0")).unwrap(), p3);
    }

    #[test]
    fn labels_are_padded() {
        let g = Graph::null(12);
        assert_eq!(g.vertex(0).as_str(), "01");
        assert_eq!(g.vertex(11).as_str(), "12");
    }

    #[test]
    fn tags_round_trip() {
        for t in ClassTag::ALL {
            assert_eq!(t.name().parse::<ClassTag>().unwrap(), t);
        }
    }
}
