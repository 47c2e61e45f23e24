//! Builders that read a geometric model (intervals, points, chords,
//! halflines) from left to right.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::oracles::{
    circle_model, convex_model, halfline_model, interval_bigraph_model, interval_model,
};
use crate::graphs::{ClassTag, Graph};
use crate::words::{Vertex, VertexWord};

use super::{finish, require, Recipe};

/// ⟨0101, 0110⟩: the endpoint sequence of an interval model.
pub fn build_interval(g: &Graph) -> Result<VertexWord> {
    let seq = interval_model(g)?;
    require(ClassTag::Interval, seq.is_some())?;
    finish(Recipe::Interval, g, &seq.expect("checked"))
}

/// ⟨0101⟩: a chord diagram read around the circle.
pub fn build_circle(g: &Graph) -> Result<VertexWord> {
    let seq = circle_model(g)?;
    require(ClassTag::Circle, seq.is_some())?;
    finish(Recipe::Circle, g, &seq.expect("checked"))
}

/// ⟨0011, 0110⟩: the chord diagram of the complement of the non-isolated
/// part, followed by each isolated vertex once.
pub fn build_co_circle(g: &Graph) -> Result<VertexWord> {
    let n = g.order();
    let core: Vec<usize> = (0..n).filter(|&i| !g.is_isolated(i)).collect();
    let mut w = Vec::with_capacity(2 * n);
    if !core.is_empty() {
        let h = g.induced_indices(&core).complement();
        let seq = circle_model(&h)?;
        require(ClassTag::CoCircle, seq.is_some())?;
        w.extend(seq.expect("checked").into_iter().map(|i| core[i]));
    }
    w.extend((0..n).filter(|&i| g.is_isolated(i)));
    finish(Recipe::CoCircle, g, &w)
}

/// ⟨010⟩. The ordered side becomes points written once; every other
/// vertex x, whose neighborhood is a run b_l..b_r of the ordered side,
/// opens just before b_l and closes just after b_r. Vertices of the other
/// side without neighbors are written twice at the start.
pub fn build_convex(g: &Graph) -> Result<VertexWord> {
    let model = convex_model(g)?;
    require(ClassTag::Convex, model.is_some())?;
    let (ordered_side, order) = model.expect("checked");
    let n = g.order();
    let mut pos = vec![usize::MAX; n];
    for (p, &b) in order.iter().enumerate() {
        pos[b] = p;
    }
    let mut w = Vec::with_capacity(2 * n);
    let mut spans: Vec<(usize, usize, usize)> = Vec::new();
    for x in (0..n).filter(|&x| !ordered_side[x]) {
        let ps: Vec<usize> = g.neighbors(x).into_iter().map(|b| pos[b]).collect();
        match (ps.iter().min(), ps.iter().max()) {
            (Some(&l), Some(&r)) => spans.push((x, l, r)),
            _ => w.extend([x, x]),
        }
    }
    for (j, &b) in order.iter().enumerate() {
        w.extend(spans.iter().filter(|s| j > 0 && s.2 == j - 1).map(|s| s.0));
        w.extend(spans.iter().filter(|s| s.1 == j).map(|s| s.0));
        w.push(b);
    }
    if let Some(last) = order.len().checked_sub(1) {
        w.extend(spans.iter().filter(|s| s.2 == last).map(|s| s.0));
    }
    finish(Recipe::Convex, g, &w)
}

/// ⟨01110, 01101, 01011, 01100, 01010, 01001⟩: the endpoint sequence of an
/// interval bigraph model, then every vertex of one side once more.
pub fn build_interval_bigraph(g: &Graph) -> Result<VertexWord> {
    let model = interval_bigraph_model(g)?;
    require(ClassTag::IntervalBigraph, model.is_some())?;
    let (side, mut w) = model.expect("checked");
    w.extend((0..g.order()).filter(|&i| side[i]));
    finish(Recipe::IntervalBigraph, g, &w)
}

/// Halfline language. With cliques V1 (written once) and V2 (written
/// twice) covering the non-isolated vertices, V2 is ordered u_1..u_q by
/// increasing number of V1-neighbors. The keys are j for u_j and
/// q + 1 - |N(v) ∩ V2| for v in V1; the word lists all vertices by key
/// (V1 first on ties), then V2 again in the u order, then every isolated
/// vertex three times.
pub fn build_halfline(g: &Graph) -> Result<VertexWord> {
    let model = halfline_model(g);
    require(ClassTag::Halfline, model.is_some())?;
    let (v1, mut v2, isolated) = model.expect("checked");
    let n1 = |v: usize| v1.iter().filter(|&&u| g.has_edge(u, v)).count();
    v2.sort_by_key(|&v| (n1(v), v));
    let q = v2.len();
    let mut keyed: Vec<(usize, u8, usize)> = Vec::with_capacity(v1.len() + q);
    for (j, &u) in v2.iter().enumerate() {
        keyed.push((j + 1, 1, u));
    }
    for &v in &v1 {
        let n2 = v2.iter().filter(|&&u| g.has_edge(u, v)).count();
        keyed.push((q + 1 - n2, 0, v));
    }
    keyed.sort_unstable();
    let mut w: Vec<usize> = keyed.into_iter().map(|k| k.2).collect();
    w.extend(&v2);
    w.extend(isolated.iter().flat_map(|&v| [v, v, v]));
    finish(Recipe::Halfline, g, &w)
}

/// An interval model over named vertices: closed intervals `[l, r]` on
/// integer coordinates, with `l == r` standing for a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModel {
    pub intervals: Vec<(Vertex, usize, usize)>,
}

impl IntervalModel {
    /// The intersection graph: closed intervals that share a coordinate
    /// are adjacent.
    pub fn intersection_graph(&self) -> Result<Graph> {
        let vs: Vec<Vertex> = self.intervals.iter().map(|t| t.0.clone()).collect();
        let mut edges = Vec::new();
        for (i, a) in self.intervals.iter().enumerate() {
            for b in &self.intervals[i + 1..] {
                if a.1 <= b.2 && b.1 <= a.2 {
                    edges.push((a.0.clone(), b.0.clone()));
                }
            }
        }
        Graph::new(vs, edges)
    }
}

/// Reads a model from a word in which every letter occurs once or twice:
/// each vertex spans the positions of its first and last occurrence.
pub fn model_from_word(w: &VertexWord) -> Result<IntervalModel> {
    let pos = w.positions();
    let mut intervals = Vec::with_capacity(pos.len());
    for (v, p) in w.alphabet().iter().zip(&pos) {
        if p.len() > 2 {
            return Err(Error::InvalidArguments(format!(
                "{v} occurs {} times; models need frequencies 1 or 2",
                p.len()
            )));
        }
        intervals.push((v.clone(), p[0], p[p.len() - 1]));
    }
    Ok(IntervalModel { intervals })
}

/// Writes the endpoints of a model from left to right: points once,
/// intervals at both ends. At equal coordinates left endpoints come first,
/// then points, then right endpoints, so touching intervals overlap.
pub fn word_from_model(m: &IntervalModel) -> Result<VertexWord> {
    let names: BTreeSet<&Vertex> = m.intervals.iter().map(|t| &t.0).collect();
    if names.len() != m.intervals.len() {
        return Err(Error::InvalidArguments("model repeats a vertex".into()));
    }
    let mut events: Vec<(usize, u8, &Vertex)> = Vec::with_capacity(2 * m.intervals.len());
    for (v, l, r) in &m.intervals {
        if l > r {
            return Err(Error::InvalidArguments(format!("interval of {v} is reversed")));
        }
        if l == r {
            events.push((*l, 1, v));
        } else {
            events.push((*l, 0, v));
            events.push((*r, 2, v));
        }
    }
    events.sort();
    VertexWord::new(events.into_iter().map(|e| e.2.clone()).collect())
}
