use super::Graph;

/// Standard small graphs on indexed vertices `1..=n`.
impl Graph {
    /// N_n.
    pub fn null(n: usize) -> Graph {
        Graph::indexed(n, &[])
    }

    /// K_n.
    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::indexed(n, &edges)
    }

    /// C_n for n ≥ 3.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::indexed(n, &edges)
    }

    /// P_n, the path on n vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::indexed(n, &edges)
    }

    /// K_{a,b}: vertices `1..=a` on one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        Graph::indexed(a + b, &edges)
    }

    /// K_{1,k} with center `1`.
    pub fn star(k: usize) -> Graph {
        Graph::complete_bipartite(1, k)
    }

    /// Disjoint union with fresh indexed labels: the vertices of `self`
    /// come first.
    pub fn disjoint_sum(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(i, j)| (i + n, j + n)));
        Graph::indexed(n + other.order(), &edges)
    }

    /// Join with fresh indexed labels.
    pub fn disjoint_join(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(i, j)| (i + n, j + n)));
        for i in 0..n {
            for j in 0..other.order() {
                edges.push((i, n + j));
            }
        }
        Graph::indexed(n + other.order(), &edges)
    }
}
