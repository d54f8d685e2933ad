//! Combinatorial sphere embeddings as rotation systems. A face is traversed
//! with the rule: after the directed edge (u, v) comes (v, w) where w is the
//! successor of u in the cyclic neighbor order at v. Validity means every
//! rotation is a permutation of the neighborhood and the traversal produces
//! exactly 2 - n + m faces.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::planarity;

#[derive(Clone, Debug)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Wraps a rotation system after checking that it certifies a sphere
    /// embedding of the given graph.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::BadRotation(rotation.len().min(graph.n())));
        }
        for v in graph.vertices() {
            let mut sorted = rotation[v].clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != graph.degree(v) || sorted.iter().any(|&u| !graph.has_edge(u, v)) {
                return Err(Error::BadRotation(v));
            }
        }
        let emb = Embedding { graph, rotation };
        let faces = emb.face_count();
        let expected = 2 + emb.graph.edge_count() - emb.graph.n();
        if emb.graph.n() + faces != 2 + emb.graph.edge_count() {
            return Err(Error::NotSphere { faces, expected });
        }
        Ok(emb)
    }

    /// Finds some sphere embedding of a connected planar graph.
    pub fn embed(graph: &Graph) -> Result<Self> {
        let rotation = planarity::planar_rotation(graph)?;
        let emb = Embedding {
            graph: graph.clone(),
            rotation,
        };
        debug_assert_eq!(emb.graph.n() + emb.face_count(), 2 + emb.graph.edge_count());
        Ok(emb)
    }

    pub(crate) fn from_parts_unchecked(graph: Graph, rotation: Vec<Vec<usize>>) -> Self {
        let emb = Embedding { graph, rotation };
        debug_assert_eq!(emb.graph.n() + emb.face_count(), 2 + emb.graph.edge_count());
        emb
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Cyclic neighbor order at `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Rotation successor of neighbor `u` at vertex `v`.
    pub(crate) fn succ(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let pos = rot
            .iter()
            .position(|&x| x == u)
            .expect("u is a neighbor of v");
        rot[(pos + 1) % rot.len()]
    }

    /// All faces as directed vertex cycles, in a deterministic order. Every
    /// directed edge lies on exactly one face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.graph.n();
        if self.graph.edge_count() == 0 {
            // A single vertex on the sphere leaves one face.
            return vec![Vec::new()];
        }
        let mut visited = vec![0u64; n];
        let mut faces = Vec::new();
        for u in 0..n {
            for &v in &self.rotation[u] {
                if visited[u] >> v & 1 == 1 {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    face.push(a);
                    visited[a] |= 1 << b;
                    let c = self.succ(b, a);
                    a = b;
                    b = c;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// True iff every face is a triangle and the edge count is 3n - 6.
    pub fn is_triangulation(&self) -> bool {
        self.graph.n() >= 3
            && self.graph.edge_count() == 3 * self.graph.n() - 6
            && self.faces().iter().all(|f| f.len() == 3)
    }

    /// Neighbors of `v` in rotation order; in a triangulation consecutive
    /// entries are adjacent, so this is the cycle induced by N(v).
    pub fn link_cycle(&self, v: usize) -> Result<Vec<usize>> {
        if self.graph.n() < 4 {
            return Err(Error::TooFewVertices {
                min: 4,
                got: self.graph.n(),
            });
        }
        if !self.is_triangulation() {
            return Err(Error::NotTriangulation);
        }
        let cycle = self.rotation[v].clone();
        debug_assert!(
            (0..cycle.len()).all(|i| self.graph.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        );
        Ok(cycle)
    }

    /// Looks up the directed face whose vertex set equals `verts`.
    pub fn find_face(&self, verts: &[usize]) -> Option<Vec<usize>> {
        let mut want = verts.to_vec();
        want.sort_unstable();
        self.faces().into_iter().find(|f| {
            let mut have = f.clone();
            have.sort_unstable();
            have == want
        })
    }

    /// Places a new vertex inside the triangular face `[a, b, c]` and joins
    /// it to all three corners.
    pub(crate) fn stacked_into(&self, face: &[usize]) -> Result<Embedding> {
        let (a, b, c) = match face {
            &[a, b, c] => (a, b, c),
            _ => return Err(Error::Internal("stacking needs a triangular face".into())),
        };
        let n = self.graph.n();
        if n + 1 > MAX_VERTICES {
            return Err(Error::VertexCount(n + 1));
        }
        let z = n;
        let mut edges: Vec<(usize, usize)> = self.graph.edges().collect();
        edges.extend([(a, z), (b, z), (c, z)]);
        let graph = Graph::build(n + 1, &edges)?;
        let mut rotation = self.rotation.clone();
        insert_after(&mut rotation[a], c, z);
        insert_after(&mut rotation[b], a, z);
        insert_after(&mut rotation[c], b, z);
        rotation.push(vec![a, c, b]);
        Ok(Embedding::from_parts_unchecked(graph, rotation))
    }

    /// Stacks into the face at `index` within the deterministic `faces()`
    /// order; the error carries `step` so callers can report which entry of
    /// a stacking sequence was out of range.
    pub fn stacked(&self, index: usize, step: usize) -> Result<Embedding> {
        let faces = self.faces();
        let face = faces.get(index).ok_or(Error::StackingIndex {
            step,
            index,
            faces: faces.len(),
        })?;
        self.stacked_into(face)
    }

    /// Replaces the edge {u, v} by the opposite diagonal {w, x} of the two
    /// faces on it; rotations change only at the four affected vertices.
    pub(crate) fn flipped(&self, u: usize, v: usize, w: usize, x: usize) -> Embedding {
        let graph = self
            .graph
            .without_edge(u, v)
            .and_then(|g| g.with_edge(w, x))
            .expect("legal flip");
        let mut rotation = self.rotation.clone();
        rotation[u].retain(|&y| y != v);
        rotation[v].retain(|&y| y != u);
        insert_after(&mut rotation[w], v, x);
        insert_after(&mut rotation[x], u, w);
        Embedding::from_parts_unchecked(graph, rotation)
    }
}

fn insert_after(rot: &mut Vec<usize>, anchor: usize, value: usize) {
    let pos = rot
        .iter()
        .position(|&x| x == anchor)
        .expect("anchor is present");
    rot.insert(pos + 1, value);
}

/// The triangle embedding every stacked construction grows from.
pub(crate) fn triangle_embedding() -> Embedding {
    let g = Graph::complete(3).unwrap();
    Embedding::from_parts_unchecked(g, vec![vec![1, 2], vec![0, 2], vec![1, 0]])
}

/// Sphere embedding of a planar graph; thin wrapper kept for discoverability.
pub fn embed(g: &Graph) -> Result<Embedding> {
    Embedding::embed(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn k3_has_two_faces() {
        let emb = triangle_embedding();
        let faces = emb.faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k4_embedding_has_four_triangular_faces() {
        let emb = Embedding::embed(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(emb.face_count(), 4);
        assert!(emb.is_triangulation());
        let link = emb.link_cycle(0).unwrap();
        let mut sorted = link.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3]);
    }

    #[test]
    fn fn6_and_octahedron_have_eight_faces() {
        let f6 = families::make_fn(6).unwrap();
        let emb = Embedding::embed(&f6).unwrap();
        assert_eq!(emb.face_count(), 8);
        assert!(emb.is_triangulation());

        let oct = families::make_octahedron();
        let emb = Embedding::embed(&oct).unwrap();
        assert_eq!(emb.face_count(), 8);
        assert!(emb.is_triangulation());
    }

    #[test]
    fn fn9_path_end_link_is_the_apex_triangle() {
        let emb = families::fn_embedding(9).unwrap();
        let mut link = emb.link_cycle(2).unwrap();
        link.sort_unstable();
        assert_eq!(link, vec![0, 1, 3]);
    }

    #[test]
    fn octahedron_link_cycle_avoids_antipode() {
        let oct = families::make_octahedron();
        let emb = Embedding::embed(&oct).unwrap();
        for v in 0..6 {
            let link = emb.link_cycle(v).unwrap();
            assert_eq!(link.len(), 4);
            assert!(!link.contains(&(5 - v)));
            for i in 0..4 {
                assert!(oct.has_edge(link[i], link[(i + 1) % 4]));
            }
        }
    }

    #[test]
    fn nonplanar_and_disconnected_inputs_are_rejected() {
        assert_eq!(
            Embedding::embed(&Graph::complete(5).unwrap()).unwrap_err(),
            Error::NotPlanar
        );
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(Embedding::embed(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn face_traversal_covers_each_directed_edge_once() {
        let f7 = families::make_fn(7).unwrap();
        let emb = Embedding::embed(&f7).unwrap();
        let total: usize = emb.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * f7.edge_count());
        assert_eq!(emb.graph().n() + emb.face_count(), 2 + f7.edge_count());
    }

    #[test]
    fn bad_rotations_are_rejected() {
        let g = Graph::complete(3).unwrap();
        let err = Embedding::new(g.clone(), vec![vec![1, 1], vec![0, 2], vec![1, 0]]);
        assert_eq!(err.unwrap_err(), Error::BadRotation(0));
        assert!(Embedding::new(g, vec![vec![1, 2], vec![0, 2], vec![1, 0]]).is_ok());
    }

    #[test]
    fn tree_embedding_has_one_face() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let emb = Embedding::embed(&g).unwrap();
        assert_eq!(emb.face_count(), 1);
        assert_eq!(emb.faces()[0].len(), 6);
    }

    #[test]
    fn single_vertex_keeps_one_face() {
        let g = Graph::build(1, &[]).unwrap();
        let emb = Embedding::embed(&g).unwrap();
        assert_eq!(emb.face_count(), 1);
    }

    #[test]
    fn cut_vertex_blocks_are_nested() {
        // Two triangles sharing vertex 0: the blocks embed separately and
        // their rotations concatenate at the cut vertex.
        let g = Graph::build(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let emb = Embedding::embed(&g).unwrap();
        assert_eq!(emb.face_count(), 3);
        let mut lens: Vec<usize> = emb.faces().iter().map(|f| f.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, [3, 3, 6]);
    }
}
