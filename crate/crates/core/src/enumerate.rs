//! Isomorph-free generation of all n-vertex maximal planar graphs. The
//! generator runs a breadth-first closure of diagonal flips from a stacked
//! seed, deduplicating by canonical code; sphere triangulations on a fixed
//! vertex count are flip-connected, and the labeled brute-force oracle
//! certifies completeness independently for n <= 8.

use std::collections::{BTreeMap, VecDeque};

use crate::canon::{canonical_code, CanonicalCode};
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::families::fn_embedding;
use crate::graph::{bits, Graph};
use crate::planarity::is_planar;

/// A diagonal flip: the edge to remove and the opposite pair of the two
/// faces on it, which becomes the replacement edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flip {
    pub edge: (usize, usize),
    pub opposite: (usize, usize),
}

/// All flips whose replacement edge is not yet present.
pub fn legal_flips(e: &Embedding) -> Result<Vec<Flip>> {
    if !e.is_triangulation() {
        return Err(Error::NotTriangulation);
    }
    let g = e.graph();
    let mut flips = Vec::new();
    for (u, v) in g.edges() {
        let w = e.succ(v, u);
        let x = e.succ(u, v);
        if w != x && !g.has_edge(w, x) {
            flips.push(Flip {
                edge: (u, v),
                opposite: (w.min(x), w.max(x)),
            });
        }
    }
    Ok(flips)
}

/// Applies a flip after re-deriving it from the embedding; a stale or
/// fabricated flip is rejected.
pub fn apply_flip(e: &Embedding, f: &Flip) -> Result<Embedding> {
    if !e.is_triangulation() {
        return Err(Error::NotTriangulation);
    }
    let (u, v) = f.edge;
    let g = e.graph();
    if !g.has_edge(u, v) {
        return Err(Error::IllegalFlip(u, v));
    }
    let w = e.succ(v, u);
    let x = e.succ(u, v);
    if (w.min(x), w.max(x)) != f.opposite || w == x || g.has_edge(w, x) {
        return Err(Error::IllegalFlip(u, v));
    }
    Ok(e.flipped(u, v, w, x))
}

/// The stacked triangulation F_n used as the enumeration seed.
pub fn seed_triangulation(n: usize) -> Result<Embedding> {
    fn_embedding(n)
}

/// All maximal planar graphs on a fixed vertex count, keyed by canonical
/// code with one embedded representative each.
#[derive(Debug, Clone)]
pub struct TriangulationSet {
    n: usize,
    members: BTreeMap<CanonicalCode, Embedding>,
}

impl TriangulationSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Codes in sorted order.
    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.members.keys()
    }

    /// Members in code order.
    pub fn members(&self) -> impl Iterator<Item = (&CanonicalCode, &Embedding)> {
        self.members.iter()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.members.contains_key(code)
    }

    pub fn get(&self, code: &CanonicalCode) -> Option<&Embedding> {
        self.members.get(code)
    }

    pub fn code_set_equals(&self, other: &TriangulationSet) -> bool {
        self.members.len() == other.members.len()
            && self
                .members
                .keys()
                .zip(other.members.keys())
                .all(|(a, b)| a == b)
    }
}

/// Breadth-first flip closure from the F_n seed.
pub fn enumerate_triangulations(n: usize) -> Result<TriangulationSet> {
    enumerate_from(&seed_triangulation(n)?)
}

/// Breadth-first flip closure from an arbitrary triangulation embedding.
pub fn enumerate_from(seed: &Embedding) -> Result<TriangulationSet> {
    if seed.graph().n() < 4 {
        return Err(Error::TooFewVertices {
            min: 4,
            got: seed.graph().n(),
        });
    }
    if !seed.is_triangulation() {
        return Err(Error::NotTriangulation);
    }
    let n = seed.graph().n();
    let mut members = BTreeMap::new();
    let mut queue = VecDeque::new();
    members.insert(canonical_code(seed.graph()), seed.clone());
    queue.push_back(seed.clone());
    while let Some(emb) = queue.pop_front() {
        for flip in legal_flips(&emb)? {
            let next = apply_flip(&emb, &flip)?;
            let code = canonical_code(next.graph());
            if let std::collections::btree_map::Entry::Vacant(slot) = members.entry(code) {
                slot.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(TriangulationSet { n, members })
}

/// Independent oracle: scan every labeled graph with 3n-6 edges and keep
/// the planar ones. Feasible through n = 8, where the edge-subset space has
/// about 1.3e7 members.
pub fn brute_force_triangulations(n: usize) -> Result<TriangulationSet> {
    if n < 4 {
        return Err(Error::TooFewVertices { min: 4, got: n });
    }
    if n > 8 {
        return Err(Error::TooManyVertices { max: 8, got: n });
    }
    let slots: Vec<(usize, usize)> = {
        let mut s = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                s.push((u, v));
            }
        }
        s
    };
    let target = 3 * n - 6;
    let mut members = BTreeMap::new();
    let mut adj = vec![0u64; n];
    scan(&slots, 0, target, &mut adj, n, &mut members)?;
    Ok(TriangulationSet { n, members })
}

fn scan(
    slots: &[(usize, usize)],
    pos: usize,
    needed: usize,
    adj: &mut [u64],
    n: usize,
    members: &mut BTreeMap<CanonicalCode, Embedding>,
) -> Result<()> {
    if needed == 0 {
        examine(adj, n, members)?;
        return Ok(());
    }
    if slots.len() - pos < needed {
        return Ok(());
    }
    let (u, v) = slots[pos];
    // Slots are grouped by their lower endpoint, so once the group for
    // vertex u starts, the degree of u - 1 is final; triangulations need
    // minimum degree 3.
    if pos > 0 && slots[pos - 1].0 < u && adj[u - 1].count_ones() < 3 {
        return Ok(());
    }
    adj[u] |= 1 << v;
    adj[v] |= 1 << u;
    scan(slots, pos + 1, needed - 1, adj, n, members)?;
    adj[u] &= !(1 << v);
    adj[v] &= !(1 << u);
    scan(slots, pos + 1, needed, adj, n, members)
}

fn examine(adj: &[u64], n: usize, members: &mut BTreeMap<CanonicalCode, Embedding>) -> Result<()> {
    if adj.iter().any(|m| m.count_ones() < 3) {
        return Ok(());
    }
    // Every edge of a triangulation borders two triangular faces.
    for u in 0..n {
        for v in bits(adj[u]) {
            if v > u && (adj[u] & adj[v]).count_ones() < 2 {
                return Ok(());
            }
        }
    }
    let g = Graph::from_adj(adj.to_vec());
    if !g.is_connected() || !is_planar(&g) {
        return Ok(());
    }
    let code = canonical_code(&g);
    if let std::collections::btree_map::Entry::Vacant(e) = members.entry(code) {
        let emb = Embedding::embed(&g)?;
        debug_assert!(emb.is_triangulation());
        e.insert(emb);
    }
    Ok(())
}
