//! Isomorphism by backtracking, and enumeration of small graphs up to
//! isomorphism.

use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`isomorphism`].
pub const ISOMORPHISM_CAP: usize = 10;
/// Largest order accepted by [`enumerate_graphs`].
pub const ENUMERATION_CAP: usize = 7;

/// Per-vertex invariant: degree, sorted neighbor degrees, and the number of
/// edges inside the neighborhood.
fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>, usize)> {
    let n = g.order();
    let deg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    (0..n)
        .map(|i| {
            let nb = g.neighbors(i);
            let mut nd: Vec<usize> = nb.iter().map(|&j| deg[j]).collect();
            nd.sort_unstable();
            let mut tri = 0;
            for (a, &x) in nb.iter().enumerate() {
                for &y in &nb[a + 1..] {
                    tri += g.has_edge(x, y) as usize;
                }
            }
            (deg[i], nd, tri)
        })
        .collect()
}

type Certificate = Vec<(usize, Vec<usize>, usize)>;

fn certificate(g: &Graph) -> Certificate {
    let mut inv = vertex_invariants(g);
    inv.sort();
    inv
}

/// An isomorphism `g → h` as a vertex index map, or `None`.
pub fn isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n.max(h.order()) > ISOMORPHISM_CAP {
        return Err(Error::Capacity(format!(
            "isomorphism test is limited to order {ISOMORPHISM_CAP}"
        )));
    }
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let ig = vertex_invariants(g);
    let ih = vertex_invariants(h);
    let (mut sg, mut sh) = (ig.clone(), ih.clone());
    sg.sort();
    sh.sort();
    if sg != sh {
        return Ok(None);
    }
    // Map high-degree vertices first; they constrain the most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(ig[i].0));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        ig: &Certificate,
        ih: &Certificate,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for c in 0..h.order() {
            if used[c] || ig[v] != ih[c] {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], c));
            if !consistent {
                continue;
            }
            map[v] = c;
            used[c] = true;
            if go(k + 1, order, g, h, ig, ih, map, used) {
                return true;
            }
            used[c] = false;
        }
        map[v] = usize::MAX;
        false
    }
    Ok(go(0, &order, g, h, &ig, &ih, &mut map, &mut used).then_some(map))
}

pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(isomorphism(g, h)?.is_some())
}

/// One representative per isomorphism class of graphs of order `n`, on
/// indexed vertices `1..=n`. Representatives are produced by extending
/// every class of order `n - 1` with a new vertex in all possible ways.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::Capacity(format!(
            "graph enumeration supports orders 1..={ENUMERATION_CAP}"
        )));
    }
    let mut reps = vec![Graph::null(1)];
    for m in 2..=n {
        let mut buckets: HashMap<Certificate, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &reps {
            let old = base.edges();
            for subset in 0u32..(1 << (m - 1)) {
                let mut edges = old.clone();
                edges.extend((0..m - 1).filter(|&i| subset >> i & 1 == 1).map(|i| (i, m - 1)));
                let cand = Graph::indexed(m, &edges);
                let bucket = buckets.entry(certificate(&cand)).or_default();
                let seen = bucket
                    .iter()
                    .any(|&k| isomorphic(&next[k], &cand).expect("order within cap"));
                if !seen {
                    bucket.push(next.len());
                    next.push(cand);
                }
            }
        }
        reps = next;
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_pairs() {
        assert!(isomorphic(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)).unwrap());
        assert!(!isomorphic(&Graph::cycle(5), &Graph::path(5)).unwrap());
        let m = isomorphism(&Graph::path(3), &Graph::star(2)).unwrap().unwrap();
        assert_eq!(m[1], 0);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn order_four_classes_pairwise_distinct() {
        let gs = enumerate_graphs(4).unwrap();
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!isomorphic(a, b).unwrap());
            }
        }
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            isomorphism(&Graph::null(11), &Graph::null(11)),
            Err(Error::Capacity(_))
        ));
    }
}
