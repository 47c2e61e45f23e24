//! Builders driven by orderings: partial orders, permutations, creation
//! sequences, nested neighborhoods and cotrees.

use crate::error::{Error, Result};
use crate::graphs::oracles::{
    chain_model, cotree, creation_sequence, permutation_model, transitive_orientation, Cotree,
    StrictOrder,
};
use crate::graphs::{ClassTag, Graph};
use crate::languages::{parse_language, Builtin, LanguageSpec};
use crate::words::VertexWord;

use super::{finish, require, validate_order, Recipe};

/// Dyck language. With a linear extension v_1..v_n of the order and
/// z = v_1⋯v_n, the word is z·z_{v_1}⋯z_{v_n}, where z_v = y_v v x_v lists
/// the elements above v after it and all other elements before it, both in
/// linear-extension order. Every letter occurs n + 1 times.
///
/// When `order` is `None` a transitive orientation is computed.
pub fn build_comparability(g: &Graph, order: Option<&StrictOrder>) -> Result<VertexWord> {
    let owned;
    let order = match order {
        Some(o) => {
            validate_order(g, o)?;
            o
        }
        None => {
            let found = transitive_orientation(g)?;
            require(ClassTag::Comparability, found.is_some())?;
            owned = found.expect("checked");
            &owned
        }
    };
    let ext = order.linear_extension();
    let mut w = ext.clone();
    for &v in &ext {
        w.extend(ext.iter().copied().filter(|&u| u != v && !order.less(v, u)));
        w.push(v);
        w.extend(ext.iter().copied().filter(|&u| order.less(v, u)));
    }
    debug_assert_eq!(w.len(), g.order() * (g.order() + 1));
    finish(Recipe::Comparability, g, &w)
}

/// ⟨0110⟩: the vertices in the first ordering followed by the vertices in
/// the second; pairs whose relative order flips are adjacent.
pub fn build_permutation(g: &Graph, model: Option<(&[usize], &[usize])>) -> Result<VertexWord> {
    let owned;
    let (first, second) = match model {
        Some(m) => m,
        None => {
            let found = permutation_model(g)?;
            require(ClassTag::Permutation, found.is_some())?;
            owned = found.expect("checked");
            (&owned.0[..], &owned.1[..])
        }
    };
    let n = g.order();
    let is_perm = |p: &[usize]| {
        let mut s = p.to_vec();
        s.sort_unstable();
        s == (0..n).collect::<Vec<_>>()
    };
    if !is_perm(first) || !is_perm(second) {
        return Err(Error::InvalidArguments("orderings must list every vertex once".into()));
    }
    let w: Vec<usize> = first.iter().chain(second).copied().collect();
    finish(Recipe::Permutation, g, &w).map_err(|e| match e {
        Error::VerificationFailed { detail, .. } => {
            Error::InvalidArguments(format!("permutation model is inconsistent: {detail}"))
        }
        other => other,
    })
}

/// ⟨01, 001⟩ from a creation sequence: the first vertex contributes vv, a
/// vertex added as universal contributes v and one added as isolated
/// contributes vv.
pub fn build_threshold(g: &Graph) -> Result<VertexWord> {
    let seq = creation_sequence(g);
    require(ClassTag::Threshold, seq.is_some())?;
    let seq = seq.expect("checked");
    let mut w = Vec::with_capacity(2 * seq.len());
    for (k, &(v, universal)) in seq.iter().enumerate() {
        if k > 0 && universal {
            w.push(v);
        } else {
            w.extend([v, v]);
        }
    }
    finish(Recipe::Threshold, g, &w)
}

/// ⟨001⟩. Every vertex of the side B (the side without nested
/// neighborhoods) is written once; then the vertices a of the nested side
/// are processed by increasing neighborhood, each writing the second
/// occurrences of its not yet doubled neighbors and then itself.
pub fn build_bipartite_chain(g: &Graph) -> Result<VertexWord> {
    let side = chain_model(g);
    require(ClassTag::BipartiteChain, side.is_some())?;
    let side = side.expect("checked");
    let n = g.order();
    let mut a: Vec<usize> = (0..n).filter(|&i| side[i]).collect();
    let b: Vec<usize> = (0..n).filter(|&i| !side[i]).collect();
    a.sort_by_key(|&x| (g.degree(x), x));
    let mut w = b.clone();
    let mut doubled = vec![false; n];
    for &x in &a {
        for &y in &b {
            if g.has_edge(x, y) && !doubled[y] {
                doubled[y] = true;
                w.push(y);
            }
        }
        w.push(x);
    }
    finish(Recipe::BipartiteChain, g, &w)
}

/// Which pattern pair of 2-uniform words a cograph language contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CographMode {
    /// Alternation (0101) marks adjacency; checked against wrep.
    WrepLike,
    /// Containment (0110) marks adjacency; checked against ⟨0110⟩.
    ContainmentLike,
}

impl CographMode {
    pub fn language(&self) -> LanguageSpec {
        match self {
            CographMode::WrepLike => LanguageSpec::builtin(Builtin::Wrep),
            CographMode::ContainmentLike => parse_language("<0110>").expect("finite language"),
        }
    }
}

/// Cographs from the cotree. Each subtree yields halves (x, y) holding
/// each of its vertices once, so that its word is x·y. Two subtrees are
/// combined into (x₁x₂, y₁y₂), whose cross projections alternate, or into
/// (x₁x₂, y₂y₁), whose cross projections nest.
pub fn build_cograph(g: &Graph, mode: CographMode) -> Result<VertexWord> {
    let tree = cotree(g);
    require(ClassTag::Cograph, tree.is_some())?;
    fn halves(t: &Cotree, mode: CographMode) -> (Vec<usize>, Vec<usize>) {
        let (kids, join) = match t {
            Cotree::Leaf(v) => return (vec![*v], vec![*v]),
            Cotree::Union(k) => (k, false),
            Cotree::Join(k) => (k, true),
        };
        let alternate = join == (mode == CographMode::WrepLike);
        let mut parts = kids.iter().map(|k| halves(k, mode));
        let (mut x, mut y) = parts.next().expect("inner cotree nodes have children");
        for (x2, y2) in parts {
            x.extend(x2);
            if alternate {
                y.extend(y2);
            } else {
                y = y2.into_iter().chain(y).collect();
            }
        }
        (x, y)
    }
    let (mut x, y) = halves(&tree.expect("checked"), mode);
    x.extend(y);
    finish(Recipe::Cograph(mode), g, &x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::vw;

    fn order(n: usize, pairs: &[(usize, usize)]) -> StrictOrder {
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            less[a][b] = true;
        }
        StrictOrder::new(less).unwrap()
    }

    #[test]
    fn dyck_chain_and_antichain() {
        let k2 = Graph::new([crate::words::vx("a"), crate::words::vx("b")], [(crate::words::vx("a"), crate::words::vx("b"))]).unwrap();
        assert_eq!(build_comparability(&k2, Some(&order(2, &[(0, 1)]))).unwrap(), vw("ababab"));
        let n2 = Graph::new([crate::words::vx("a"), crate::words::vx("b")], []).unwrap();
        assert_eq!(build_comparability(&n2, Some(&order(2, &[]))).unwrap(), vw("abbaab"));
        assert!(matches!(
            build_comparability(&n2, Some(&order(2, &[(0, 1)]))),
            Err(Error::InvalidArguments(_))
        ));
    }

    #[test]
    fn diamond_order() {
        let g = Graph::indexed(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        let o = order(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        assert_eq!(build_comparability(&g, Some(&o)).unwrap().len(), 20);
    }

    #[test]
    fn permutation_and_threshold() {
        assert_eq!(build_permutation(&Graph::complete(2), Some((&[0, 1], &[1, 0]))).unwrap().len(), 4);
        let star = Graph::star(2);
        let w = build_threshold(&star).unwrap();
        assert_eq!(w.len(), 5);
    }

    #[test]
    fn cograph_modes() {
        let two_k2 = Graph::complete(2).disjoint_sum(&Graph::complete(2));
        build_cograph(&two_k2, CographMode::WrepLike).unwrap();
        build_cograph(&two_k2, CographMode::ContainmentLike).unwrap();
        assert_eq!(build_cograph(&Graph::null(1), CographMode::WrepLike).unwrap().len(), 2);
        assert!(matches!(
            build_cograph(&Graph::path(4), CographMode::WrepLike),
            Err(Error::Precondition(_))
        ));
    }
}
