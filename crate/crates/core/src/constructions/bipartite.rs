//! Bipartite graphs and the split and cobipartite composites built from
//! them.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graphs::oracles::two_coloring;
use crate::graphs::{ClassTag, Graph};
use crate::words::{project_set, Vertex, VertexWord};

use super::{finish, fresh_vertex, require, verify, Recipe};

fn sides(color: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let a = (0..color.len()).filter(|&i| color[i]).collect();
    let b = (0..color.len()).filter(|&i| !color[i]).collect();
    (a, b)
}

/// Odd-length Lyndon words: w = a_1³⋯a_s³ · b_1²⋯b_t² · x_1⋯x_s ·
/// b_1²⋯b_t² with x_i = a_i² y_i y_i a_i², where y_i lists N(a_i) in B
/// order. Adjacent pairs project into 00011(11)*001100(11)*11, which is
/// Lyndon because 000 is its only run of three zeros and it ends in 1;
/// non-adjacent pairs contain 0000 and are not. The trailing b block makes
/// every adjacent projection end in 1.
pub fn build_bipartite_lyndon_odd(g: &Graph) -> Result<VertexWord> {
    let color = two_coloring(g);
    require(ClassTag::Bipartite, color.is_some())?;
    let (a, b) = sides(&color.expect("checked"));
    let mut w: Vec<usize> = a.iter().flat_map(|&x| [x, x, x]).collect();
    w.extend(b.iter().flat_map(|&y| [y, y]));
    for &x in &a {
        let y: Vec<usize> = b.iter().copied().filter(|&v| g.has_edge(x, v)).collect();
        w.extend([x, x]);
        w.extend(&y);
        w.extend(&y);
        w.extend([x, x]);
    }
    w.extend(b.iter().flat_map(|&y| [y, y]));
    finish(Recipe::LyndonOdd, g, &w)
}

/// The alternating-palindrome word v_0 u_1 v_1 ⋯ u_s v_s over a bipartite
/// graph with nonempty side `a`: v_0 lists A, v_i lists A without a_i, and
/// u_i = x_i a_i y_i with x_i = N(a_i) and y_i = B \ N(a_i) in B order.
fn alternating_palindrome_word(g: &Graph, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut w: Vec<usize> = a.to_vec();
    for &ai in a {
        w.extend(b.iter().copied().filter(|&v| g.has_edge(ai, v)));
        w.push(ai);
        w.extend(b.iter().copied().filter(|&v| !g.has_edge(ai, v)));
        w.extend(a.iter().copied().filter(|&x| x != ai));
    }
    w
}

/// Palindromes that alternate strictly.
pub fn build_bipartite_palindrome(g: &Graph) -> Result<VertexWord> {
    let color = two_coloring(g);
    require(ClassTag::Bipartite, color.is_some())?;
    let (a, b) = sides(&color.expect("checked"));
    let w = alternating_palindrome_word(g, &a, &b);
    finish(Recipe::AlternatingPalindrome, g, &w)
}

/// A split partition (clique, independent set), found from the degree
/// sequence: the clique is the longest prefix of vertices sorted by
/// decreasing degree in which the i-th vertex has degree at least i - 1.
pub fn split_partition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (0..n)
        .take_while(|&i| g.degree(by_degree[i]) >= i)
        .count();
    let mut k: Vec<usize> = by_degree[..m].to_vec();
    let mut s: Vec<usize> = by_degree[m..].to_vec();
    k.sort_unstable();
    s.sort_unstable();
    let clique = k.iter().enumerate().all(|(x, &u)| k[x + 1..].iter().all(|&v| g.has_edge(u, v)));
    let independent = s.iter().enumerate().all(|(x, &u)| s[x + 1..].iter().all(|&v| !g.has_edge(u, v)));
    (clique && independent).then_some((k, s))
}

/// Split graphs over alternating palindromes united with words in which
/// both letters occur an even number of times. The clique gets odd size
/// (adding a padding vertex when needed) so that its letters occur an even
/// number of times, and the remaining edges come from the bipartite part.
pub fn build_split(g: &Graph) -> Result<VertexWord> {
    let part = split_partition(g);
    require(ClassTag::Split, part.is_some())?;
    let (k, _) = part.expect("checked");
    let pad = (k.len() % 2 == 0).then(|| fresh_vertex(g, "pad"));
    let clique: BTreeSet<&Vertex> = k.iter().map(|&i| g.vertex(i)).collect();
    let vertices: Vec<Vertex> = g.vertices().iter().cloned().chain(pad.clone()).collect();
    let cross = g.edges().into_iter().filter_map(|(i, j)| {
        let (u, v) = (g.vertex(i), g.vertex(j));
        (clique.contains(u) != clique.contains(v)).then(|| (u.clone(), v.clone()))
    });
    let h = Graph::new(vertices, cross)?;
    let a: Vec<usize> = (0..h.order())
        .filter(|&i| clique.contains(h.vertex(i)) || Some(h.vertex(i)) == pad.as_ref())
        .collect();
    let b: Vec<usize> = (0..h.order()).filter(|i| !a.contains(i)).collect();
    let full = VertexWord::from_indices(h.vertices(), &alternating_palindrome_word(&h, &a, &b))?;
    let keep: BTreeSet<Vertex> = g.vertices().iter().cloned().collect();
    let w = project_set(&full, &keep)?;
    verify(Recipe::Split, g, &w)?;
    Ok(w)
}

/// Cobipartite graphs over the complement of the alternating palindromes:
/// the alternating-palindrome word of the (bipartite) complement.
pub fn build_cobipartite(g: &Graph) -> Result<VertexWord> {
    let co = g.complement();
    let color = two_coloring(&co);
    require(ClassTag::Cobipartite, color.is_some())?;
    let (a, b) = sides(&color.expect("checked"));
    let w = alternating_palindrome_word(&co, &a, &b);
    finish(Recipe::Cobipartite, g, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn bipartite_examples() {
        for g in [Graph::complete_bipartite(2, 3), Graph::null(2), Graph::path(4)] {
            build_bipartite_lyndon_odd(&g).unwrap();
            build_bipartite_palindrome(&g).unwrap();
        }
        assert!(matches!(
            build_bipartite_palindrome(&Graph::cycle(3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn split_partition_example() {
        // K3 with a pendant vertex on each of two clique vertices.
        let g = Graph::indexed(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]);
        let (k, s) = split_partition(&g).unwrap();
        assert_eq!((k, s), (vec![0, 1, 2], vec![3, 4]));
        build_split(&g).unwrap();
        assert!(split_partition(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn cobipartite_example() {
        build_cobipartite(&Graph::cycle(4).complement()).unwrap();
        build_cobipartite(&Graph::complete(3)).unwrap();
    }
}
