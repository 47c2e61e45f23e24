//! Helpers shared by the integration tests: random inputs and small
//! reference predicates written independently of the library's oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use langrep::graphs::Graph;
use langrep::languages::LanguageSpec;
use langrep::words::{BinaryWord, Vertex, VertexWord};
use rand::seq::SliceRandom;
use rand::Rng;

/// Symmetric, grammar-free languages used by the randomized suites.
pub const LANGUAGE_POOL: &[&str] = &[
    "<0101>",
    "<0110>",
    "<0011,0110>",
    "<01,001>",
    "<001>",
    "<010>",
    "halfline",
    "wrep",
    "palindrome",
    "copy",
    "lyndon",
    "lyndon-odd",
    "dyck",
    "balanced",
    "0n1n",
    "odd-counts",
    "even-counts",
    "uniform(2)",
    "k11(1)",
    "no-kk(2)",
    "hull(re:0(0|1)*1)",
    "not(copy)",
    "trash-ext(<0101,0110>)",
    "or(wrep,<0011>)",
];

pub fn labels(n: usize) -> Vec<Vertex> {
    (0..n).map(|i| Vertex::new(format!("v{i}")).unwrap()).collect()
}

/// A shuffled word over `n` letters with each frequency in `1..=max_freq`.
pub fn random_word(rng: &mut impl Rng, n: usize, max_freq: usize) -> VertexWord {
    let mut symbols: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, rng.gen_range(1..=max_freq)))
        .collect();
    symbols.shuffle(rng);
    VertexWord::from_indices(&labels(n), &symbols).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::indexed(n, &edges)
}

/// The projection computed token by token from the word's text.
pub fn naive_projection(w: &VertexWord, u: &Vertex, v: &Vertex) -> BinaryWord {
    BinaryWord::from_bits(w.tokens().filter_map(|t| {
        if t == u {
            Some(0)
        } else if t == v {
            Some(1)
        } else {
            None
        }
    }))
}

/// Edge set of G(L, w) from the definition, by label.
pub fn naive_edges(w: &VertexWord, l: &LanguageSpec) -> BTreeSet<(Vertex, Vertex)> {
    let a = w.alphabet();
    let mut out = BTreeSet::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if l.contains(&naive_projection(w, &a[i], &a[j])) {
                out.insert((a[i].clone(), a[j].clone()));
            }
        }
    }
    out
}

pub fn edge_labels(g: &Graph) -> BTreeSet<(Vertex, Vertex)> {
    g.edges()
        .into_iter()
        .map(|(i, j)| (g.vertex(i).clone(), g.vertex(j).clone()))
        .collect()
}

fn non_isolated(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) > 0).collect()
}

/// K_a ∪ N_b: the non-isolated vertices form a clique.
pub fn is_clique_plus_isolated(g: &Graph) -> bool {
    let core = non_isolated(g);
    core.iter().all(|&u| core.iter().all(|&v| u == v || g.has_edge(u, v)))
}

/// K_{a,b} ∪ N_c: the non-isolated vertices form a complete bipartite graph.
pub fn is_biclique_plus_isolated(g: &Graph) -> bool {
    let core = non_isolated(g);
    let Some(&first) = core.first() else {
        return true;
    };
    let side = |v: usize| v == first || !g.has_edge(first, v);
    core.iter()
        .all(|&u| core.iter().all(|&v| u == v || g.has_edge(u, v) == (side(u) != side(v))))
}

/// Two-colourability by graph traversal.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = vec![s];
        while let Some(u) = queue.pop() {
            for v in 0..n {
                if v != u && g.has_edge(u, v) {
                    match color[v] {
                        None => {
                            color[v] = Some(!color[u].unwrap());
                            queue.push(v);
                        }
                        Some(c) if c == color[u].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

/// Disjoint union of cliques: adjacency is transitive.
pub fn is_cluster(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                a == b || b == c || a == c || !(g.has_edge(a, b) && g.has_edge(b, c)) || g.has_edge(a, c)
            })
        })
    })
}
