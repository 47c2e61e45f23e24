//! Builders for languages that represent every graph. Vertices are taken in
//! index order (the sorted token order), written 0..n here.

use crate::error::Result;
use crate::graphs::Graph;
use crate::words::VertexWord;

use super::{finish, Recipe};

/// Palindrome language: w_0 = 00 and w_i = i·u_i·w_{i-1}·i·rev(u_i), where
/// u_i lists the non-neighbors of i among 0..i in increasing order.
pub fn build_palindrome(g: &Graph) -> Result<VertexWord> {
    let n = g.order();
    let mut w: Vec<usize> = vec![0, 0];
    for i in 1..n {
        let u: Vec<usize> = (0..i).filter(|&j| !g.has_edge(i, j)).collect();
        let mut next = Vec::with_capacity(w.len() + 2 * u.len() + 2);
        next.push(i);
        next.extend(&u);
        next.extend(&w);
        next.push(i);
        next.extend(u.iter().rev());
        w = next;
    }
    finish(Recipe::Palindrome, g, &w)
}

/// The copy word u_0·0·u_1·1⋯u_{n-1}·(n-1) followed by
/// 0·u_0·1·u_1⋯(n-1)·u_{n-1}, where u_i = {i} plus the members of
/// `partners(i)` below i, in increasing order.
pub(crate) fn copy_word(n: usize, partners: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let u: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..=i).filter(|&j| j == i || partners(i, j)).collect())
        .collect();
    let mut w = Vec::new();
    for (i, ui) in u.iter().enumerate() {
        w.extend(ui);
        w.push(i);
    }
    for (i, ui) in u.iter().enumerate() {
        w.push(i);
        w.extend(ui);
    }
    w
}

/// Copy language: pairs are adjacent unless the later vertex lists the
/// earlier one among its non-neighbors.
pub fn build_copy(g: &Graph) -> Result<VertexWord> {
    let w = copy_word(g.order(), |i, j| !g.has_edge(i, j));
    finish(Recipe::Copy, g, &w)
}

/// Complement of the copy language: the copy word of the complement graph,
/// of length exactly 4n + 2m.
pub fn build_copy_complement(g: &Graph) -> Result<VertexWord> {
    let w = copy_word(g.order(), |i, j| g.has_edge(i, j));
    assert_eq!(
        w.len(),
        4 * g.order() + 2 * g.edge_count(),
        "copy-complement length law"
    );
    finish(Recipe::CopyComplement, g, &w)
}

/// Lyndon words: w = 0³1³⋯(n-1)³ · v_0² u_0 ⋯ v_{n-1}² u_{n-1}, with
/// v_i = i(i+1)⋯(n-1) and u_i = i² x_i i² y_i, where x_i and y_i list the
/// neighbors and the non-neighbors of i above i.
pub fn build_lyndon(g: &Graph) -> Result<VertexWord> {
    let n = g.order();
    let mut w: Vec<usize> = (0..n).flat_map(|i| [i, i, i]).collect();
    for i in 0..n {
        let v: Vec<usize> = (i..n).collect();
        w.extend(&v);
        w.extend(&v);
        w.extend([i, i]);
        w.extend((i + 1..n).filter(|&j| g.has_edge(i, j)));
        w.extend([i, i]);
        w.extend((i + 1..n).filter(|&j| !g.has_edge(i, j)));
    }
    finish(Recipe::Lyndon, g, &w)
}
