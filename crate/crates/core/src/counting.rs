//! Exact pattern counters. The fast counters work through degree and
//! codegree sums; every one of them has a brute-force partner that
//! enumerates vertex tuples directly, used as the oracle in tests and
//! behind the CLI `--oracle` flag.
//!
//! All counts are of unlabeled subgraph copies: a pattern and its mirror
//! image are one copy, and extra edges among the chosen vertices are
//! allowed.

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Which pattern to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    P2,
    P3,
    P4,
    C3,
    C4,
    /// K_{1,k}: a center joined to k leaves.
    Star(usize),
    /// K_{2,k}: two vertices completely joined to k others.
    Biclique2(usize),
}

impl PatternSpec {
    pub fn star(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::BadPatternParameter {
                k,
                reason: "stars need k >= 1",
            });
        }
        Ok(PatternSpec::Star(k))
    }

    pub fn biclique2(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadPatternParameter {
                k,
                reason: "bicliques need k >= 2",
            });
        }
        Ok(PatternSpec::Biclique2(k))
    }

    /// Counts copies with the counting identity appropriate to the pattern.
    pub fn count(&self, g: &Graph) -> Result<u64> {
        match *self {
            PatternSpec::P2 => Ok(g.edge_count() as u64),
            PatternSpec::P3 => count_star(g, 2),
            PatternSpec::P4 => Ok(count_p4(g)),
            PatternSpec::C3 => Ok(count_triangles(g)),
            PatternSpec::C4 => Ok(count_c4(g)),
            PatternSpec::Star(k) => count_star(g, k),
            PatternSpec::Biclique2(k) => count_k2k(g, k),
        }
    }

    /// Counts copies by direct enumeration of vertex tuples.
    pub fn count_brute(&self, g: &Graph) -> Result<u64> {
        match *self {
            PatternSpec::P2 => count_paths_brute(g, 2),
            PatternSpec::P3 => count_paths_brute(g, 3),
            PatternSpec::P4 => count_paths_brute(g, 4),
            PatternSpec::C3 => Ok(count_triangles_brute(g)),
            PatternSpec::C4 => Ok(count_c4_brute(g)),
            PatternSpec::Star(k) => count_star_brute(g, k),
            PatternSpec::Biclique2(k) => count_biclique2_brute(g, k),
        }
    }
}

impl std::fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            PatternSpec::P2 => write!(f, "p2"),
            PatternSpec::P3 => write!(f, "p3"),
            PatternSpec::P4 => write!(f, "p4"),
            PatternSpec::C3 => write!(f, "c3"),
            PatternSpec::C4 => write!(f, "c4"),
            PatternSpec::Star(k) => write!(f, "star:{k}"),
            PatternSpec::Biclique2(k) => write!(f, "k2:{k}"),
        }
    }
}

impl std::str::FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_k = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::UnknownPattern(s.to_string()))
        };
        match s {
            "p2" => Ok(PatternSpec::P2),
            "p3" => Ok(PatternSpec::P3),
            "p4" => Ok(PatternSpec::P4),
            "c3" => Ok(PatternSpec::C3),
            "c4" => Ok(PatternSpec::C4),
            _ => {
                if let Some(rest) = s.strip_prefix("star:") {
                    PatternSpec::star(parse_k(rest)?)
                } else if let Some(rest) = s.strip_prefix("k2:") {
                    PatternSpec::biclique2(parse_k(rest)?)
                } else {
                    Err(Error::UnknownPattern(s.to_string()))
                }
            }
        }
    }
}

/// Exact binomial coefficient; inputs stay below 64 so this cannot overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc as u64
}

fn mask_above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

/// Number of triangles, each counted once via ordered triples u < v < w.
pub fn count_triangles(g: &Graph) -> u64 {
    let mut count = 0u64;
    for (u, v) in g.edges() {
        count += (g.neighbors(u) & g.neighbors(v) & mask_above(v)).count_ones() as u64;
    }
    count
}

/// Number of 4-vertex paths: over each edge, the product of the remaining
/// degrees counts paths with that middle edge, overcounting one triangle per
/// common neighbor; each triangle is hit on its three edges.
pub fn count_p4(g: &Graph) -> u64 {
    let mut products = 0u64;
    for (u, v) in g.edges() {
        products += (g.degree(u) as u64 - 1) * (g.degree(v) as u64 - 1);
    }
    products - 3 * count_triangles(g)
}

/// Number of 4-cycle subgraphs: every pair of common neighbors of a vertex
/// pair closes a 4-cycle, and each 4-cycle owns two such diagonal pairs.
pub fn count_c4(g: &Graph) -> u64 {
    let mut total = 0u64;
    for y in g.vertices() {
        for x in 0..y {
            let c = (g.neighbors(x) & g.neighbors(y)).count_ones() as u64;
            total += c * c.saturating_sub(1) / 2;
        }
    }
    debug_assert_eq!(total % 2, 0);
    total / 2
}

/// Copies of K_{1,k}: sum of binomial(d(v), k).
pub fn count_star(g: &Graph, k: usize) -> Result<u64> {
    if k < 1 {
        return Err(Error::BadPatternParameter {
            k,
            reason: "stars need k >= 1",
        });
    }
    if k > 60 {
        return Err(Error::BadPatternParameter {
            k,
            reason: "k > 60 cannot occur on 64 vertices",
        });
    }
    let mut total: u128 = 0;
    for v in g.vertices() {
        total += binomial(g.degree(v) as u64, k as u64) as u128;
    }
    u64::try_from(total).map_err(|_| Error::CountOverflow)
}

/// Copies of K_{2,k}: sum over unordered vertex pairs of binomial(codegree, k),
/// halved for k = 2 where the two sides of the biclique are interchangeable.
pub fn count_k2k(g: &Graph, k: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::BadPatternParameter {
            k,
            reason: "bicliques need k >= 2",
        });
    }
    if k > 60 {
        return Err(Error::BadPatternParameter {
            k,
            reason: "k > 60 cannot occur on 64 vertices",
        });
    }
    let mut total: u128 = 0;
    for y in g.vertices() {
        for x in 0..y {
            let c = (g.neighbors(x) & g.neighbors(y)).count_ones() as u64;
            total += binomial(c, k as u64) as u128;
        }
    }
    if k == 2 {
        debug_assert_eq!(total % 2, 0);
        total /= 2;
    }
    u64::try_from(total).map_err(|_| Error::CountOverflow)
}

/// Number of simple paths on k vertices, counted once per unlabeled copy by
/// requiring the first endpoint id to be below the last.
pub fn count_paths_brute(g: &Graph, k: usize) -> Result<u64> {
    if !(2..=6).contains(&k) {
        return Err(Error::PathLength(k));
    }
    let mut count = 0u64;
    for start in g.vertices() {
        extend_path(g, start, start, 1 << start, k - 1, &mut count);
    }
    Ok(count)
}

fn extend_path(g: &Graph, start: usize, last: usize, visited: u64, left: usize, count: &mut u64) {
    if left == 0 {
        if last > start {
            *count += 1;
        }
        return;
    }
    for next in bits(g.neighbors(last) & !visited) {
        extend_path(g, start, next, visited | 1 << next, left - 1, count);
    }
}

/// Number of 4-vertex paths whose vertex set contains `v`.
pub fn count_p4_at_vertex(g: &Graph, v: usize) -> Result<u64> {
    if v >= g.n() {
        return Err(Error::VertexRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut count = 0u64;
    for a in g.vertices() {
        for b in bits(g.neighbors(a)) {
            for c in bits(g.neighbors(b) & !(1 << a)) {
                let hit_abc = 1 << a | 1 << b | 1 << c;
                for d in bits(g.neighbors(c) & !hit_abc) {
                    if a < d && (hit_abc | 1 << d) >> v & 1 == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// Partition of the 3-paths through `v` by where their middle edge sits.
/// The fields sum to `count_p4_at_vertex(g, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TypeBreakdown {
    /// Middle edge incident to `v` itself.
    pub type_i: u64,
    /// Path starts v, x, y with x, y neighbors of v and {x, y} on the link cycle.
    pub type_iia: u64,
    /// Same, but {x, y} is a chord of the link cycle.
    pub type_iib: u64,
    /// Middle edge leaves N(v); the far endpoint is outside N(v).
    pub type_iiia: u64,
    /// Middle edge leaves N(v); the far endpoint returns into N(v).
    pub type_iiib: u64,
}

impl TypeBreakdown {
    pub fn total(&self) -> u64 {
        self.type_i + self.type_iia + self.type_iib + self.type_iiia + self.type_iiib
    }
}

/// Classifies every 3-path through `v` in a triangulation embedding. The
/// link cycle decides the II(A)/II(B) split, which is why an embedding is
/// required rather than a bare graph.
pub fn classify_p4_at_vertex(e: &Embedding, v: usize) -> Result<TypeBreakdown> {
    let link = e.link_cycle(v)?;
    let g = e.graph();
    let nv = g.neighbors(v);
    let mut out = TypeBreakdown::default();

    // v interior: paths a - v - x - d, one per (middle edge, end pair).
    for x in bits(nv) {
        for a in bits(nv & !(1 << x)) {
            let banned = 1 << v | 1 << a | 1 << x;
            out.type_i += (g.neighbors(x) & !banned).count_ones() as u64;
        }
    }

    // v an endpoint: read the path away from v.
    let pos_in_link = |u: usize| link.iter().position(|&x| x == u);
    for a in bits(nv) {
        for b in bits(g.neighbors(a) & !(1 << v) & !(1 << a)) {
            let within = nv >> b & 1 == 1;
            let consecutive = if within {
                let pa = pos_in_link(a).expect("a is a neighbor");
                let pb = pos_in_link(b).expect("b is a neighbor");
                let d = pa.abs_diff(pb);
                d == 1 || d == link.len() - 1
            } else {
                false
            };
            for c in bits(g.neighbors(b) & !(1 << v | 1 << a | 1 << b)) {
                if within {
                    if consecutive {
                        out.type_iia += 1;
                    } else {
                        out.type_iib += 1;
                    }
                } else if nv >> c & 1 == 1 {
                    out.type_iiib += 1;
                } else {
                    out.type_iiia += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Star edges of a triangulation with respect to a degree-3 vertex `v`:
/// when a second vertex `u` is joined to all of N(v), these are the edges
/// from `u` to vertices outside the closed neighborhood of `v` that see
/// exactly two members of N(v). Planarity caps the count at one per
/// region, three in total.
pub fn count_star_edges(e: &Embedding, v: usize) -> Result<u64> {
    let g = e.graph();
    if g.degree(v) != 3 {
        return Err(Error::WrongDegree {
            vertex: v,
            degree: g.degree(v),
            expected: 3,
        });
    }
    let nv = g.neighbors(v);
    let mut apexes = g
        .vertices()
        .filter(|&u| u != v && nv & !g.neighbors(u) == 0);
    let Some(u) = apexes.next() else { return Ok(0) };
    if apexes.next().is_some() {
        return Err(Error::Internal(
            "two second apexes over one triangle breaks planarity".into(),
        ));
    }
    let candidates = g.neighbors(u) & !nv & !(1 << v);
    let count = bits(candidates)
        .filter(|&w| (g.neighbors(w) & nv).count_ones() == 2)
        .count() as u64;
    if count > 3 {
        return Err(Error::Internal(format!(
            "{count} star edges at vertex {v}; planarity allows 3"
        )));
    }
    Ok(count)
}

// --- brute-force partners ---------------------------------------------------

pub fn count_triangles_brute(g: &Graph) -> u64 {
    let n = g.n();
    let mut count = 0u64;
    for w in 0..n {
        for v in 0..w {
            for u in 0..v {
                if g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) {
                    count += 1;
                }
            }
        }
    }
    count
}

pub fn count_c4_brute(g: &Graph) -> u64 {
    let n = g.n();
    let mut count = 0u64;
    // Over each 4-subset, try the three pairings into opposite sides.
    for d in 0..n {
        for c in 0..d {
            for b in 0..c {
                for a in 0..b {
                    let cycles = [
                        [(a, b), (b, c), (c, d), (d, a)],
                        [(a, b), (b, d), (d, c), (c, a)],
                        [(a, c), (c, b), (b, d), (d, a)],
                    ];
                    for cycle in cycles {
                        if cycle.iter().all(|&(x, y)| g.has_edge(x, y)) {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

pub fn count_star_brute(g: &Graph, k: usize) -> Result<u64> {
    if k < 1 {
        return Err(Error::BadPatternParameter {
            k,
            reason: "stars need k >= 1",
        });
    }
    let mut count = 0u64;
    for v in g.vertices() {
        for_each_subset(g.n(), k, &mut |subset| {
            if subset >> v & 1 == 0 && subset & !g.neighbors(v) == 0 {
                count += 1;
            }
        });
    }
    Ok(count)
}

pub fn count_biclique2_brute(g: &Graph, k: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::BadPatternParameter {
            k,
            reason: "bicliques need k >= 2",
        });
    }
    let mut count = 0u64;
    for_each_subset(g.n(), k + 2, &mut |subset| {
        let members: Vec<usize> = bits(subset).collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                let rest = subset & !(1 << x) & !(1 << y);
                if rest & !(g.neighbors(x) & g.neighbors(y)) == 0 {
                    count += 1;
                }
            }
        }
    });
    if k == 2 {
        debug_assert_eq!(count % 2, 0);
        count /= 2;
    }
    Ok(count)
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(u64)) {
    fn rec(n: usize, k: usize, start: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if k == 0 {
            f(acc);
            return;
        }
        for v in start..=n.saturating_sub(k) {
            rec(n, k - 1, v + 1, acc | 1 << v, f);
        }
    }
    if k <= n {
        rec(n, k, 0, 0, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn triangle_counts_on_fixtures() {
        assert_eq!(count_triangles(&Graph::complete(4).unwrap()), 4);
        assert_eq!(count_triangles(&families::make_octahedron()), 8);
        assert_eq!(count_triangles(&families::make_fig1b()), 13);
        for n in 6..=10 {
            let g = families::make_fn(n).unwrap();
            assert_eq!(count_triangles(&g), 3 * n as u64 - 8);
        }
    }

    #[test]
    fn per_vertex_counts_on_fixtures() {
        // Every 4-vertex path of K4 uses all four vertices.
        let k4 = Graph::complete(4).unwrap();
        for v in k4.vertices() {
            assert_eq!(count_p4_at_vertex(&k4, v).unwrap(), 12);
        }
        let with_isolated = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        assert_eq!(count_p4_at_vertex(&with_isolated, 4).unwrap(), 0);
        assert!(count_p4_at_vertex(&k4, 9).is_err());
    }

    #[test]
    fn degree3_classes_in_a_triangulation() {
        // Around a degree-3 vertex both the middle-edge class and the
        // two-neighbor-start class have size 2*sum(deg(x_i)) - 12, and in
        // K4 nothing lies outside the closed neighborhood.
        let emb = families::fn_embedding(7).unwrap();
        let g = emb.graph();
        for v in g.vertices().filter(|&v| g.degree(v) == 3) {
            let breakdown = classify_p4_at_vertex(&emb, v).unwrap();
            let degree_sum: u64 = bits(g.neighbors(v)).map(|x| g.degree(x) as u64).sum();
            assert_eq!(breakdown.type_i, 2 * degree_sum - 12);
            assert_eq!(breakdown.type_iia + breakdown.type_iib, 2 * degree_sum - 12);
        }
        let k4 = Embedding::embed(&Graph::complete(4).unwrap()).unwrap();
        for v in 0..4 {
            let breakdown = classify_p4_at_vertex(&k4, v).unwrap();
            assert_eq!(breakdown.type_iiia, 0);
            assert_eq!(breakdown.type_iiib, 0);
            assert_eq!(breakdown.total(), 12);
        }
    }

    #[test]
    fn p4_counts_on_fixtures() {
        assert_eq!(count_p4(&Graph::complete(4).unwrap()), 12);
        assert_eq!(count_p4(&families::make_fn(5).unwrap()), 42);
        assert_eq!(count_p4(&families::make_octahedron()), 84);
        assert_eq!(
            count_paths_brute(&families::make_fn(6).unwrap(), 4).unwrap(),
            87
        );
        assert_eq!(count_p4(&families::make_fig1b()), 147);
        assert_eq!(count_p4(&families::make_fig1c()), 222);
    }

    #[test]
    fn path_oracle_small_cases() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(count_paths_brute(&k4, 4).unwrap(), 12);
        assert_eq!(count_paths_brute(&k4, 2).unwrap(), k4.edge_count() as u64);
        assert!(count_paths_brute(&k4, 1).is_err());
        assert!(count_paths_brute(&k4, 7).is_err());
    }

    #[test]
    fn c4_counts_on_fixtures() {
        assert_eq!(count_c4(&Graph::complete(4).unwrap()), 3);
        assert_eq!(count_c4(&families::make_fn(7).unwrap()), 24);
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(count_c4(&c5), 0);
        assert_eq!(count_c4(&families::make_fig1b()), 24);
        assert_eq!(count_c4(&families::make_fig1c()), 33);
    }

    #[test]
    fn star_counts_on_fixtures() {
        let oct = families::make_octahedron();
        assert_eq!(count_star(&oct, 2).unwrap(), 36);
        let any = families::make_fn(8).unwrap();
        assert_eq!(count_star(&any, 1).unwrap(), 2 * any.edge_count() as u64);
        assert_eq!(count_star(&families::make_fn(9).unwrap(), 3).unwrap(), 134);
    }

    #[test]
    fn biclique_counts_on_fixtures() {
        let oct = families::make_octahedron();
        assert_eq!(count_k2k(&oct, 3).unwrap(), 12);
        assert_eq!(count_k2k(&oct, 4).unwrap(), 3);
        for n in 7..=12 {
            let g = families::make_fn(n).unwrap();
            assert_eq!(count_k2k(&g, 5).unwrap(), binomial(n as u64 - 2, 5));
        }
        assert!(count_k2k(&oct, 1).is_err());
    }

    #[test]
    fn k5_minus_edge_has_four_k23_copies() {
        // Dual-route check that pins the subgraph-copy semantics of the
        // codegree sum.
        let g = families::make_fn(5).unwrap();
        assert_eq!(count_k2k(&g, 3).unwrap(), 4);
        assert_eq!(count_biclique2_brute(&g, 3).unwrap(), 4);
    }

    #[test]
    fn fast_and_brute_counters_agree_on_small_graphs() {
        let graphs = [
            families::make_fn(7).unwrap(),
            families::make_octahedron(),
            families::make_fig1b(),
            Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)]).unwrap(),
        ];
        let patterns = [
            PatternSpec::P2,
            PatternSpec::P3,
            PatternSpec::P4,
            PatternSpec::C3,
            PatternSpec::C4,
            PatternSpec::Star(3),
            PatternSpec::Biclique2(2),
            PatternSpec::Biclique2(3),
            PatternSpec::Biclique2(4),
        ];
        for g in &graphs {
            for p in &patterns {
                assert_eq!(
                    p.count(g).unwrap(),
                    p.count_brute(g).unwrap(),
                    "{p} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn star_edge_counts_on_fixtures() {
        let f6 = families::fn_embedding(6).unwrap();
        // Path-end vertices of F_6 have degree 3.
        let g = f6.graph().clone();
        let v = g.vertices().find(|&v| g.degree(v) == 3).unwrap();
        assert_eq!(count_star_edges(&f6, v).unwrap(), 1);

        let k4 = Embedding::embed(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(count_star_edges(&k4, 0).unwrap(), 0);

        let err = count_star_edges(&f6, 0).unwrap_err();
        assert_eq!(
            err,
            Error::WrongDegree {
                vertex: 0,
                degree: 5,
                expected: 3
            }
        );

        // In the eight-vertex extremal graph, the last stacked vertex sees
        // three star edges.
        let c = families::make_fig1c();
        let emb = Embedding::embed(&c).unwrap();
        assert_eq!(count_star_edges(&emb, 7).unwrap(), 3);
    }

    #[test]
    fn pattern_tokens_round_trip() {
        for token in ["p2", "p3", "p4", "c3", "c4", "star:4", "k2:2"] {
            let p: PatternSpec = token.parse().unwrap();
            assert_eq!(p.to_string(), token);
        }
        assert!("star:0".parse::<PatternSpec>().is_err());
        assert!("k2:1".parse::<PatternSpec>().is_err());
        assert!("c5".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(63, 31), 916312070471295267);
    }
}
