//! Planarity testing by path addition: embed an initial cycle of each
//! biconnected block, then repeatedly route a path of some unembedded
//! fragment through a face whose boundary contains all of the fragment's
//! attachment vertices. A planar graph always finishes; a non-planar one
//! always produces a fragment with no admissible face.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// True iff the graph embeds in the sphere.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    for comp in g.components() {
        let nc = comp.count_ones() as usize;
        if nc < 5 {
            continue;
        }
        let mc = bits(comp)
            .map(|v| (g.neighbors(v) & comp).count_ones() as usize)
            .sum::<usize>()
            / 2;
        if mc > 3 * nc - 6 {
            return false;
        }
    }
    for block in biconnected_blocks(g) {
        let mut verts = 0u64;
        for &(u, v) in &block {
            verts |= 1 << u | 1 << v;
        }
        let nb = verts.count_ones() as usize;
        if nb < 5 {
            continue;
        }
        if block.len() > 3 * nb - 6 {
            return false;
        }
        if embed_block(g, &block, verts).is_none() {
            return false;
        }
    }
    true
}

/// True iff the graph is planar with the full 3n-6 edge complement.
pub fn is_maximal_planar(g: &Graph) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::TooFewVertices { min: 3, got: g.n() });
    }
    Ok(g.edge_count() == 3 * g.n() - 6 && is_planar(g))
}

/// Rotation system of some sphere embedding of a connected planar graph,
/// as the cyclic neighbor order per vertex.
pub(crate) fn planar_rotation(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts = 0u64;
        for &(u, v) in &block {
            verts |= 1 << u | 1 << v;
        }
        let faces = embed_block(g, &block, verts).ok_or(Error::NotPlanar)?;
        merge_block_rotation(&faces, verts, &mut rotation)?;
    }
    Ok(rotation)
}

/// Faces are directed cycles; the edge (u, v) inside a face is followed by
/// (v, w), which pins the rotation successor of u at v to be w. Cut vertices
/// get the cyclic orders of their blocks concatenated, which nests each
/// block inside a face of the previous ones.
fn merge_block_rotation(
    faces: &[Vec<usize>],
    verts: u64,
    rotation: &mut [Vec<usize>],
) -> Result<()> {
    let mut succ: std::collections::HashMap<(usize, usize), usize> =
        std::collections::HashMap::new();
    for face in faces {
        let len = face.len();
        for i in 0..len {
            let u = face[i];
            let v = face[(i + 1) % len];
            let w = face[(i + 2) % len];
            succ.insert((v, u), w);
        }
    }
    for v in bits(verts) {
        let first = *succ
            .keys()
            .find(|&&(a, _)| a == v)
            .map(|(_, u)| u)
            .ok_or_else(|| Error::Internal(format!("no face edge at vertex {v}")))?;
        let mut cycle = vec![first];
        let mut cur = succ[&(v, first)];
        while cur != first {
            cycle.push(cur);
            cur = succ[&(v, cur)];
        }
        let block_degree = succ.keys().filter(|&&(a, _)| a == v).count();
        if cycle.len() != block_degree {
            return Err(Error::Internal(format!(
                "rotation at {v} splits into several cycles"
            )));
        }
        rotation[v].extend(cycle);
    }
    Ok(())
}

/// One embedding round for a biconnected block with at least three vertices.
/// Returns the directed face cycles, or None when some fragment has no
/// admissible face.
fn embed_block(g: &Graph, block: &[(usize, usize)], verts: u64) -> Option<Vec<Vec<usize>>> {
    let mut badj = vec![0u64; g.n()];
    for &(u, v) in block {
        badj[u] |= 1 << v;
        badj[v] |= 1 << u;
    }

    let cycle = some_cycle(&badj, verts);
    debug_assert!(cycle.len() >= 3);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().cloned().collect()];
    let mut emb_adj = vec![0u64; g.n()];
    let mut emb_verts = 0u64;
    let mut emb_edges = 0usize;
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_adj[u] |= 1 << v;
        emb_adj[v] |= 1 << u;
        emb_verts |= 1 << u;
        emb_edges += 1;
    }

    while emb_edges < block.len() {
        // Fragments: single unembedded chords between embedded vertices, and
        // connected chunks of unembedded vertices with their attachments.
        let mut fragments: Vec<(u64, Option<u64>)> = Vec::new(); // (attachments, component)
        for &(u, v) in block {
            if emb_verts >> u & 1 == 1 && emb_verts >> v & 1 == 1 && emb_adj[u] >> v & 1 == 0 {
                fragments.push((1 << u | 1 << v, None));
            }
        }
        let mut unseen = verts & !emb_verts;
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= badj[v] & !emb_verts;
                }
                frontier = next & !comp;
                comp |= next;
            }
            let mut attach = 0u64;
            for v in bits(comp) {
                attach |= badj[v] & emb_verts;
            }
            fragments.push((attach, Some(comp)));
            unseen &= !comp;
        }

        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();

        let mut chosen: Option<(usize, usize)> = None; // (fragment, face)
        let mut chosen_count = usize::MAX;
        for (fi, (attach, _)) in fragments.iter().enumerate() {
            let mut count = 0;
            let mut first_face = usize::MAX;
            for (i, mask) in face_masks.iter().enumerate() {
                if attach & !mask == 0 {
                    count += 1;
                    if first_face == usize::MAX {
                        first_face = i;
                    }
                }
            }
            if count == 0 {
                return None;
            }
            if count < chosen_count {
                chosen_count = count;
                chosen = Some((fi, first_face));
                if count == 1 {
                    break;
                }
            }
        }
        let (fi, face_idx) = chosen.expect("at least one fragment while edges remain");
        let (attach, comp) = fragments[fi];

        let path = match comp {
            None => bits(attach).collect::<Vec<_>>(),
            Some(comp) => {
                let a = attach.trailing_zeros() as usize;
                let b = bits(attach)
                    .find(|&v| v != a)
                    .expect("two attachments in a block");
                path_through(&badj, comp, a, b)
            }
        };

        let old = std::mem::take(&mut faces[face_idx]);
        let (a, b) = (path[0], *path.last().unwrap());
        let pa = old
            .iter()
            .position(|&v| v == a)
            .expect("attachment on face");
        let pb = old
            .iter()
            .position(|&v| v == b)
            .expect("attachment on face");
        let len = old.len();
        let mut f1 = Vec::new();
        let mut i = pa;
        loop {
            f1.push(old[i]);
            if i == pb {
                break;
            }
            i = (i + 1) % len;
        }
        f1.extend(path[1..path.len() - 1].iter().rev());
        let mut f2 = Vec::new();
        let mut i = pb;
        loop {
            f2.push(old[i]);
            if i == pa {
                break;
            }
            i = (i + 1) % len;
        }
        f2.extend(path[1..path.len() - 1].iter().copied());
        faces[face_idx] = f1;
        faces.push(f2);

        for w in path.windows(2) {
            emb_adj[w[0]] |= 1 << w[1];
            emb_adj[w[1]] |= 1 << w[0];
            emb_verts |= 1 << w[0] | 1 << w[1];
            emb_edges += 1;
        }
    }
    Some(faces)
}

/// Some cycle of a biconnected block, found by walking a DFS back edge.
fn some_cycle(badj: &[u64], verts: u64) -> Vec<usize> {
    let start = verts.trailing_zeros() as usize;
    let mut stack = vec![start];
    let mut on_stack = 1u64 << start;
    let mut visited = 1u64 << start;
    let mut iters: Vec<u64> = vec![badj[start]];
    while let Some(&u) = stack.last() {
        let it = iters.last_mut().unwrap();
        if *it == 0 {
            stack.pop();
            iters.pop();
            on_stack &= !(1 << u);
            continue;
        }
        let v = it.trailing_zeros() as usize;
        *it &= *it - 1;
        if stack.len() >= 2 && stack[stack.len() - 2] == v {
            continue;
        }
        if on_stack >> v & 1 == 1 {
            let pos = stack.iter().position(|&x| x == v).unwrap();
            return stack[pos..].to_vec();
        }
        if visited >> v & 1 == 0 {
            visited |= 1 << v;
            on_stack |= 1 << v;
            stack.push(v);
            iters.push(badj[v]);
        }
    }
    unreachable!("biconnected block with >= 3 vertices contains a cycle")
}

/// Shortest path from `a` to `b` whose interior lies in `comp`.
fn path_through(badj: &[u64], comp: u64, a: usize, b: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = vec![usize::MAX; badj.len()];
    let mut frontier: Vec<usize> = bits(badj[a] & comp).collect();
    for &v in &frontier {
        parent[v] = a;
    }
    let mut seen = badj[a] & comp;
    loop {
        if let Some(&x) = frontier.iter().find(|&&x| badj[x] >> b & 1 == 1) {
            let mut path = vec![b, x];
            let mut cur = x;
            while parent[cur] != a {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        let mut next = Vec::new();
        for &x in &frontier {
            for y in bits(badj[x] & comp & !seen) {
                parent[y] = x;
                seen |= 1 << y;
                next.push(y);
            }
        }
        debug_assert!(
            !next.is_empty(),
            "attachments are connected through the fragment"
        );
        frontier = next;
    }
}

/// Biconnected components as edge lists; bridges come out as single edges.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    // Iterative DFS; frames carry the remaining neighbor mask.
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, g.neighbors(root))];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(frame) = stack.last_mut() {
            let (u, parent) = (frame.0, frame.1);
            if frame.2 == 0 {
                stack.pop();
                if let Some(pframe) = stack.last() {
                    let pu = pframe.0;
                    low[pu] = low[pu].min(low[u]);
                    if low[u] >= disc[pu] {
                        // Everything pushed after (pu, u) belongs to this block.
                        let mut block = Vec::new();
                        loop {
                            let e = edge_stack.pop().expect("tree edge on the stack");
                            block.push(e);
                            if e == (pu, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
                continue;
            }
            let v = frame.2.trailing_zeros() as usize;
            frame.2 &= frame.2 - 1;
            if v == parent {
                continue;
            }
            if disc[v] == usize::MAX {
                edge_stack.push((u, v));
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                stack.push((v, u, g.neighbors(v)));
            } else if disc[v] < disc[u] {
                edge_stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        }
    }
    blocks
}
