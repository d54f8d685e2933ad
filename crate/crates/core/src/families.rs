//! Constructors and recognizers for the named extremal graphs: the fan-like
//! join F_n of an edge with a path, stacked (Apollonian) triangulations, the
//! two sporadic seven- and eight-vertex extremal graphs, the octahedron, and
//! a curated list of nine-vertex triangulations with known 3-path counts.

use crate::embedding::{triangle_embedding, Embedding};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::planarity::is_maximal_planar;

/// F_n: two adjacent apex vertices (ids 0 and 1) joined to every vertex of a
/// path on n-2 vertices (ids 2..n in path order).
pub fn make_fn(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::TooFewVertices { min: 4, got: n });
    }
    let mut edges = vec![(0, 1)];
    for p in 2..n {
        edges.push((0, p));
        edges.push((1, p));
        if p + 1 < n {
            edges.push((p, p + 1));
        }
    }
    Graph::build(n, &edges)
}

/// Triangulation embedding of F_n, grown by repeatedly stacking into the
/// face spanned by both apexes and the newest path vertex.
pub fn fn_embedding(n: usize) -> Result<Embedding> {
    if n < 4 {
        return Err(Error::TooFewVertices { min: 4, got: n });
    }
    let mut emb = triangle_embedding();
    for z in 3..n {
        let face = emb
            .find_face(&[0, 1, z - 1])
            .ok_or_else(|| Error::Internal("apex face missing while growing F_n".into()))?;
        emb = emb.stacked_into(&face)?;
    }
    debug_assert_eq!(emb.graph(), &make_fn(n)?);
    Ok(emb)
}

/// Builds a stacked triangulation from K3: entry `i` of `stacking` picks the
/// face (by index into the current face list) that vertex `i + 3` is placed
/// into.
pub fn make_apollonian(n: usize, stacking: &[usize]) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::TooFewVertices { min: 3, got: n });
    }
    if n > 64 {
        return Err(Error::TooManyVertices { max: 64, got: n });
    }
    if stacking.len() != n - 3 {
        return Err(Error::StackingLength {
            got: stacking.len(),
            expected: n - 3,
        });
    }
    let mut emb = triangle_embedding();
    for (step, &index) in stacking.iter().enumerate() {
        emb = emb.stacked(index, step)?;
    }
    Ok(emb)
}

/// Default stacking rule: always stack into the most recently created face.
pub fn make_apollonian_default(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::TooFewVertices { min: 3, got: n });
    }
    if n > 64 {
        return Err(Error::TooManyVertices { max: 64, got: n });
    }
    let mut emb = triangle_embedding();
    let mut last = emb.faces().pop().expect("triangle has faces");
    for z in 3..n {
        emb = emb.stacked_into(&last)?;
        // stacked_into replaces (a, b, c) by (a,b,z), (b,c,z), (c,a,z).
        last = vec![last[2], last[0], z];
    }
    Ok(emb)
}

/// Witness that a graph is a stacked triangulation: the order in which
/// degree-3 vertices with triangular neighborhoods were peeled, with the
/// neighborhood recorded so the graph can be rebuilt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApollonianCertificate {
    base: Vec<usize>,
    removed: Vec<(usize, [usize; 3])>,
}

impl ApollonianCertificate {
    /// Peeled vertices, in removal order.
    pub fn elimination_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.removed.iter().map(|&(v, _)| v)
    }

    /// Remaining K3 or K4 core after peeling.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Replays the elimination in reverse, stacking each vertex back into
    /// its recorded triangle. Reproduces the certified graph exactly.
    pub fn reconstruct(&self, n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for (i, &u) in self.base.iter().enumerate() {
            for &v in &self.base[i + 1..] {
                edges.push((u, v));
            }
        }
        for &(z, [a, b, c]) in self.removed.iter().rev() {
            edges.extend([(z, a), (z, b), (z, c)]);
        }
        Graph::build(n, &edges)
    }
}

/// Decides whether a maximal planar graph is a stacked triangulation by
/// greedily peeling simplicial degree-3 vertices (lowest id first) down to
/// K4 or K3. Stacked triangulations admit every peeling order, so the greedy
/// choice cannot change the verdict.
pub fn is_apollonian(g: &Graph) -> Result<Option<ApollonianCertificate>> {
    if !is_maximal_planar(g)? {
        return Err(Error::NotMaximalPlanar);
    }
    let n = g.n();
    let mut adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v)).collect();
    let mut active: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let mut removed = Vec::new();
    let mut remaining = n;
    while remaining > 4 {
        let pick = bits(active).find(|&v| {
            let nbrs = adj[v] & active;
            if nbrs.count_ones() != 3 {
                return false;
            }
            let tri: Vec<usize> = bits(nbrs).collect();
            g.has_edge(tri[0], tri[1]) && g.has_edge(tri[0], tri[2]) && g.has_edge(tri[1], tri[2])
        });
        let Some(v) = pick else { return Ok(None) };
        let tri: Vec<usize> = bits(adj[v] & active).collect();
        removed.push((v, [tri[0], tri[1], tri[2]]));
        active &= !(1 << v);
        for u in bits(adj[v]) {
            adj[u] &= !(1 << v);
        }
        remaining -= 1;
    }
    let base: Vec<usize> = bits(active).collect();
    for (i, &u) in base.iter().enumerate() {
        for &v in &base[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(Error::Internal("peeling left a non-complete core".into()));
            }
        }
    }
    Ok(Some(ApollonianCertificate { base, removed }))
}

fn fig1b_embedding() -> Embedding {
    let emb = fn_embedding(6).expect("F_6 exists");
    let face = emb
        .find_face(&[0, 3, 4])
        .expect("face {apex 0, p2, p3} exists in F_6");
    emb.stacked_into(&face).expect("room for a seventh vertex")
}

/// The seven-vertex extremal graph: F_6 with one vertex stacked into the
/// face spanned by apex 0 and the two middle path vertices.
pub fn make_fig1b() -> Graph {
    fig1b_embedding().into_graph()
}

/// The eight-vertex extremal graph: `make_fig1b` with a second vertex
/// stacked into the mirror face at the other apex.
pub fn make_fig1c() -> Graph {
    let emb = fig1b_embedding();
    let face = emb
        .find_face(&[1, 3, 4])
        .expect("face {apex 1, p2, p3} survives the first stack");
    emb.stacked_into(&face)
        .expect("room for an eighth vertex")
        .into_graph()
}

/// K_{2,2,2}: six vertices, all degrees four, antipodal pairs (0,5), (1,4),
/// (2,3) non-adjacent.
pub fn make_octahedron() -> Graph {
    let mut edges = Vec::new();
    for v in 0..6usize {
        for u in 0..v {
            if u + v != 5 {
                edges.push((u, v));
            }
        }
    }
    Graph::build(6, &edges).expect("octahedron is a valid graph")
}

/// Nine-vertex triangulations that occur as the candidate maximizers of the
/// 3-path count, each paired with its exact count. The last entry is F_9,
/// the actual maximizer.
pub fn make_nine_vertex_fixtures() -> Vec<(Graph, u64)> {
    const FIXTURES: [(&[(usize, usize)], u64); 9] = [
        (
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (1, 5),
                (2, 5),
                (4, 5),
                (1, 6),
                (3, 6),
                (6, 7),
                (1, 7),
                (3, 7),
                (4, 7),
                (2, 8),
                (3, 8),
                (4, 8),
                (3, 4),
                (1, 4),
                (2, 4),
            ],
            303,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 5),
                (3, 5),
                (2, 8),
                (4, 8),
                (1, 6),
                (3, 6),
                (5, 6),
                (4, 6),
                (7, 8),
                (3, 4),
                (2, 7),
                (4, 7),
                (3, 7),
                (1, 4),
                (2, 4),
            ],
            290,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 5),
                (3, 5),
                (2, 7),
                (4, 7),
                (3, 7),
                (1, 6),
                (3, 6),
                (5, 6),
                (4, 6),
                (3, 4),
                (3, 8),
                (4, 8),
                (7, 8),
                (1, 4),
                (2, 4),
            ],
            297,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 5),
                (3, 5),
                (2, 7),
                (3, 7),
                (1, 6),
                (3, 6),
                (5, 6),
                (4, 6),
                (7, 8),
                (3, 4),
                (2, 8),
                (4, 8),
                (3, 8),
                (1, 4),
                (2, 4),
            ],
            296,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (2, 8),
                (3, 8),
                (3, 4),
                (1, 6),
                (4, 6),
                (1, 5),
                (3, 5),
                (1, 7),
                (3, 7),
                (3, 6),
                (5, 6),
                (5, 7),
                (4, 8),
                (1, 4),
                (2, 4),
            ],
            300,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 5),
                (3, 5),
                (3, 4),
                (1, 6),
                (4, 6),
                (4, 7),
                (2, 7),
                (3, 7),
                (6, 8),
                (1, 8),
                (5, 8),
                (3, 6),
                (5, 6),
                (1, 4),
                (2, 4),
            ],
            289,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (3, 4),
                (1, 8),
                (4, 8),
                (4, 5),
                (2, 5),
                (3, 5),
                (7, 8),
                (1, 7),
                (3, 7),
                (3, 8),
                (6, 8),
                (3, 6),
                (6, 7),
                (1, 4),
                (2, 4),
            ],
            292,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 5),
                (3, 5),
                (1, 7),
                (3, 7),
                (3, 4),
                (5, 7),
                (4, 7),
                (2, 6),
                (4, 6),
                (1, 8),
                (4, 8),
                (7, 8),
                (3, 6),
                (1, 4),
                (2, 4),
            ],
            299,
        ),
        (
            &[
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 5),
                (3, 5),
                (1, 6),
                (3, 6),
                (5, 6),
                (4, 6),
                (6, 8),
                (4, 8),
                (3, 8),
                (3, 4),
                (2, 7),
                (4, 7),
                (3, 7),
                (1, 4),
                (2, 4),
            ],
            302,
        ),
    ];
    let mut out: Vec<(Graph, u64)> = FIXTURES
        .iter()
        .map(|&(edges, count)| (Graph::build(9, edges).expect("fixture edge list"), count))
        .collect();
    out.push((make_fn(9).expect("F_9 exists"), 306));
    out
}
