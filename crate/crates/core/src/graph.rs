//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex so that neighborhood intersections are single word ops.

use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row fits in a machine word.
pub const MAX_VERTICES: usize = 64;

/// Iterate over the set bits of a mask as vertex ids.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// An immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected rather than repaired.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Self::build(n, &edges)
    }

    pub(crate) fn from_adj(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        debug_assert!((0..n).all(|v| adj[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|v| bits(adj[v]).all(|u| u < n && adj[u] >> v & 1 == 1)));
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1))).map(move |v| (u, v))
        })
    }

    /// Number of common neighbors of two distinct vertices.
    pub fn codegree(&self, x: usize, y: usize) -> Result<usize> {
        if x >= self.n {
            return Err(Error::VertexRange {
                vertex: x,
                n: self.n,
            });
        }
        if y >= self.n {
            return Err(Error::VertexRange {
                vertex: y,
                n: self.n,
            });
        }
        if x == y {
            return Err(Error::IdenticalVertices(x));
        }
        Ok((self.adj[x] & self.adj[y]).count_ones() as usize)
    }

    /// Graph with the vertices relabeled by `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Graph with one edge added; errors if already present or malformed.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n {
            return Err(Error::VertexRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// Graph with one edge removed; errors if absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph { n: self.n, adj })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Masks of the connected components.
    pub fn components(&self) -> Vec<u64> {
        let mut unseen = if self.n == 64 {
            !0u64
        } else {
            (1u64 << self.n) - 1
        };
        let mut comps = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= next;
            }
            comps.push(seen);
            unseen &= !seen;
        }
        comps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 0));
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn builds_k4_and_k5_minus_edge() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));

        let edges: Vec<_> = Graph::complete(5)
            .unwrap()
            .edges()
            .filter(|&e| e != (3, 4))
            .collect();
        let g = Graph::build(5, &edges).unwrap();
        let mut degs: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, [3, 3, 4, 4, 4]);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(Graph::build(3, &[(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(
            Graph::build(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::VertexRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::build(0, &[]), Err(Error::VertexCount(0)));
        assert_eq!(Graph::build(65, &[]), Err(Error::VertexCount(65)));
        assert!(Graph::build(64, &[]).is_ok());
    }

    #[test]
    fn handshake_holds() {
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)]).unwrap();
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
        assert_eq!(g.edges().count(), g.edge_count());
    }

    #[test]
    fn codegree_on_fixtures() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.codegree(0, 3).unwrap(), 2);

        // Octahedron: antipodal pairs (0,5), (1,4), (2,3) are the non-edges.
        let mut edges = Vec::new();
        for v in 0..6usize {
            for u in 0..v {
                if u + v != 5 {
                    edges.push((u, v));
                }
            }
        }
        let oct = Graph::build(6, &edges).unwrap();
        assert_eq!(oct.codegree(0, 5).unwrap(), 4);
        assert_eq!(oct.codegree(1, 4).unwrap(), 4);

        let edges: Vec<_> = Graph::complete(5)
            .unwrap()
            .edges()
            .filter(|&e| e != (3, 4))
            .collect();
        let g = Graph::build(5, &edges).unwrap();
        assert_eq!(g.codegree(3, 4).unwrap(), 3);
        assert_eq!(g.codegree(3, 3), Err(Error::IdenticalVertices(3)));
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::build(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![0b00011, 0b01100, 0b10000]);
        assert!(Graph::complete(4).unwrap().is_connected());
    }
}
