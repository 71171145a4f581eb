//! Deterministic generators for the graph families used in experiments.
//!
//! Every generator builds its edge list and passes it through
//! [`Graph::build`], so generator output always satisfies the graph
//! invariants. Given identical parameters (and seed, where applicable),
//! a generator produces a bit-identical edge list.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{mix_seed, seeded_rng};

const RANDOM_CONNECTED_ATTEMPTS: usize = 1000;

/// A named family plus its parameters.
///
/// Vertex counts per family:
/// path/star/cycle/complete: `n`; complete bipartite: `left + right`;
/// lollipop: `n` (clique `2n/3`, path `n/3`); glitter star: `2k + 1` for
/// `k` spokes of length two; clique-star: `n` (clique `n/2` matched to
/// `n/2` leaves); double star: `n` (two adjacent centers, leaves split
/// evenly); local-rule adversary: see [`local_rule_adversary`].
#[derive(Debug, Clone, PartialEq)]
pub enum GraphFamily {
    Path { n: usize },
    Star { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { left: usize, right: usize },
    Lollipop { n: usize },
    GlitterStar { spokes: usize },
    CliqueStar { n: usize },
    DoubleStar { n: usize },
    LocalRuleAdversary { d1: usize, d2: usize, d3: usize, d4: usize },
    RandomConnected { n: usize, p: f64, seed: u64 },
}

impl GraphFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Path { .. } => "path",
            GraphFamily::Star { .. } => "star",
            GraphFamily::Cycle { .. } => "cycle",
            GraphFamily::Complete { .. } => "complete",
            GraphFamily::CompleteBipartite { .. } => "complete-bipartite",
            GraphFamily::Lollipop { .. } => "lollipop",
            GraphFamily::GlitterStar { .. } => "glitter-star",
            GraphFamily::CliqueStar { .. } => "clique-star",
            GraphFamily::DoubleStar { .. } => "double-star",
            GraphFamily::LocalRuleAdversary { .. } => "local-rule-adversary",
            GraphFamily::RandomConnected { .. } => "random-connected",
        }
    }

    /// Instantiate a size-parameterized family for scaling experiments.
    ///
    /// `glitter-star` maps an odd `n` to `(n - 1) / 2` spokes; the other
    /// families take `n` directly.
    pub fn for_size(name: &str, n: usize) -> Result<GraphFamily> {
        match name {
            "path" => Ok(GraphFamily::Path { n }),
            "star" => Ok(GraphFamily::Star { n }),
            "cycle" => Ok(GraphFamily::Cycle { n }),
            "complete" => Ok(GraphFamily::Complete { n }),
            "lollipop" => Ok(GraphFamily::Lollipop { n }),
            "glitter-star" => {
                if n % 2 == 0 || n < 3 {
                    return Err(Error::InvalidFamilyParams {
                        family: "glitter-star",
                        reason: format!("n must be odd and at least 3, got {n}"),
                    });
                }
                Ok(GraphFamily::GlitterStar { spokes: (n - 1) / 2 })
            }
            "clique-star" => Ok(GraphFamily::CliqueStar { n }),
            "double-star" => Ok(GraphFamily::DoubleStar { n }),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GraphFamily::Path { n } => path(n),
            GraphFamily::Star { n } => star(n),
            GraphFamily::Cycle { n } => cycle(n),
            GraphFamily::Complete { n } => complete(n),
            GraphFamily::CompleteBipartite { left, right } => complete_bipartite(left, right),
            GraphFamily::Lollipop { n } => lollipop(n),
            GraphFamily::GlitterStar { spokes } => glitter_star(spokes),
            GraphFamily::CliqueStar { n } => clique_star(n),
            GraphFamily::DoubleStar { n } => double_star(n),
            GraphFamily::LocalRuleAdversary { d1, d2, d3, d4 } => {
                local_rule_adversary(d1, d2, d3, d4).map(|a| a.graph)
            }
            GraphFamily::RandomConnected { n, p, seed } => random_connected(n, p, seed),
        }
    }
}

fn invalid(family: &'static str, reason: String) -> Error {
    Error::InvalidFamilyParams { family, reason }
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path", "n must be at least 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges)
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("star", "n must be at least 2".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::build(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", "n must be at least 3".into()));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::build(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete", "n must be at least 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

pub fn complete_bipartite(left: usize, right: usize) -> Result<Graph> {
    if left < 1 || right < 1 {
        return Err(invalid(
            "complete-bipartite",
            format!("both sides must be non-empty, got ({left}, {right})"),
        ));
    }
    let mut edges = Vec::with_capacity(left * right);
    for u in 0..left {
        for v in 0..right {
            edges.push((u, left + v));
        }
    }
    Graph::build(left + right, &edges)
}

/// Clique of size `2n/3` joined to a path of `n/3` extra vertices; the
/// path attaches to the clique vertex with the highest index.
pub fn lollipop(n: usize) -> Result<Graph> {
    if n < 3 || n % 3 != 0 {
        return Err(invalid(
            "lollipop",
            format!("n must be a positive multiple of 3, got {n}"),
        ));
    }
    let clique = 2 * n / 3;
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in (u + 1)..clique {
            edges.push((u, v));
        }
    }
    for v in clique..n {
        edges.push((v - 1, v));
    }
    Graph::build(n, &edges)
}

/// Central vertex 0 with `spokes` paths of length two attached to it:
/// middles `1..=k`, tips `k+1..=2k`, so `n = 2k + 1`.
pub fn glitter_star(spokes: usize) -> Result<Graph> {
    if spokes < 1 {
        return Err(invalid("glitter-star", "need at least one spoke".into()));
    }
    let k = spokes;
    let mut edges = Vec::with_capacity(2 * k);
    for i in 1..=k {
        edges.push((0, i));
        edges.push((i, k + i));
    }
    Graph::build(2 * k + 1, &edges)
}

/// Clique of size `n/2` connected via a perfect matching to `n/2`
/// independent vertices.
pub fn clique_star(n: usize) -> Result<Graph> {
    if n < 2 || n % 2 != 0 {
        return Err(invalid(
            "clique-star",
            format!("n must be even and at least 2, got {n}"),
        ));
    }
    let half = n / 2;
    let mut edges = Vec::new();
    for u in 0..half {
        for v in (u + 1)..half {
            edges.push((u, v));
        }
    }
    for i in 0..half {
        edges.push((i, half + i));
    }
    Graph::build(n, &edges)
}

/// Two stars whose centers (vertices 0 and 1) are connected by an edge;
/// the `n - 2` leaves are split as evenly as possible, the larger share
/// to center 0.
pub fn double_star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("double-star", "n must be at least 2".into()));
    }
    let leaves = n - 2;
    let first = leaves.div_ceil(2);
    let mut edges = vec![(0, 1)];
    for i in 0..leaves {
        let center = if i < first { 0 } else { 1 };
        edges.push((center, 2 + i));
    }
    Graph::build(n, &edges)
}

/// The adversarial family for non-min-degree local rules, with the
/// vertex and edge classes exposed for conductance experiments.
#[derive(Debug, Clone)]
pub struct AdversaryGraph {
    pub graph: Graph,
    /// Vertices of degree `d1` whose neighbors all have degree `d3`.
    pub type1_vertices: Vec<usize>,
    /// Vertices of degree `d2` whose neighbors all have degree `d4`.
    pub type2_vertices: Vec<usize>,
    /// Canonical indices of the edges incident to type-1 vertices.
    pub type1_edges: Vec<usize>,
    /// Canonical indices of the edges incident to type-2 vertices.
    pub type2_edges: Vec<usize>,
    /// Canonical indices of the matching edges.
    pub matching_edges: Vec<usize>,
}

/// Build `d4 - 1` copies of `K_{d3-1, d1}` and `d3 - 1` copies of
/// `K_{d4-1, d2}`, then join all right-hand-side vertices by a perfect
/// matching. When the right-hand-side count is odd the whole
/// construction is duplicated first. The matching concatenates the
/// right-hand sides in block order, applies a cyclic shift by one, and
/// pairs consecutive vertices, which places the blocks on a cycle when
/// the block sizes allow it; parameter combinations whose matching
/// leaves the graph disconnected are rejected.
pub fn local_rule_adversary(
    d1: usize,
    d2: usize,
    d3: usize,
    d4: usize,
) -> Result<AdversaryGraph> {
    if d1 < 1 || d2 < 1 {
        return Err(invalid(
            "local-rule-adversary",
            format!("d1 and d2 must be at least 1, got ({d1}, {d2})"),
        ));
    }
    if d3 < 2 {
        return Err(invalid(
            "local-rule-adversary",
            format!("d3 >= 2 violated (d3 = {d3})"),
        ));
    }
    if d4 < 2 {
        return Err(invalid(
            "local-rule-adversary",
            format!("d4 >= 2 violated (d4 = {d4})"),
        ));
    }
    if d1 > d3 {
        return Err(invalid(
            "local-rule-adversary",
            format!("d1 <= d3 violated ({d1} > {d3})"),
        ));
    }
    if d2 > d4 {
        return Err(invalid(
            "local-rule-adversary",
            format!("d2 <= d4 violated ({d2} > {d4})"),
        ));
    }

    let rhs_per_copy = (d4 - 1) * d1 + (d3 - 1) * d2;
    let copies = if rhs_per_copy % 2 == 0 { 1 } else { 2 };

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut type1_vertices = Vec::new();
    let mut type2_vertices = Vec::new();
    let mut type1_pairs = Vec::new();
    let mut type2_pairs = Vec::new();
    let mut rhs_order = Vec::new();
    let mut next = 0usize;

    for _ in 0..copies {
        // type-1 blocks: left side degree d1, right side reaches d3 after matching
        for _ in 0..(d4 - 1) {
            let lhs: Vec<usize> = (0..d3 - 1).map(|i| next + i).collect();
            let rhs: Vec<usize> = (0..d1).map(|i| next + d3 - 1 + i).collect();
            next += d3 - 1 + d1;
            for &l in &lhs {
                for &r in &rhs {
                    edges.push((l, r));
                    type1_pairs.push((l, r));
                }
            }
            type1_vertices.extend(&lhs);
            rhs_order.extend(&rhs);
        }
        // type-2 blocks: left side degree d2, right side reaches d4 after matching
        for _ in 0..(d3 - 1) {
            let lhs: Vec<usize> = (0..d4 - 1).map(|i| next + i).collect();
            let rhs: Vec<usize> = (0..d2).map(|i| next + d4 - 1 + i).collect();
            next += d4 - 1 + d2;
            for &l in &lhs {
                for &r in &rhs {
                    edges.push((l, r));
                    type2_pairs.push((l, r));
                }
            }
            type2_vertices.extend(&lhs);
            rhs_order.extend(&rhs);
        }
    }

    let m = rhs_order.len();
    debug_assert_eq!(m % 2, 0);
    let mut matching_pairs = Vec::with_capacity(m / 2);
    for i in 0..m / 2 {
        // cyclic shift by one: position 0 holds the last vertex
        let a = rhs_order[(2 * i + m - 1) % m];
        let b = rhs_order[2 * i];
        edges.push((a, b));
        matching_pairs.push((a, b));
    }

    let graph = Graph::build(next, &edges)?;

    let to_idx = |pairs: &[(usize, usize)]| -> Vec<usize> {
        pairs
            .iter()
            .map(|&(u, v)| graph.edge_index(u, v).expect("generator edge must exist"))
            .collect()
    };
    let adversary = AdversaryGraph {
        type1_edges: to_idx(&type1_pairs),
        type2_edges: to_idx(&type2_pairs),
        matching_edges: to_idx(&matching_pairs),
        graph,
        type1_vertices,
        type2_vertices,
    };
    debug_assert!(
        adversary.graph.vertex_count() <= 6 * (d3 - 1) * (d4 - 1) * copies,
        "vertex count bound violated"
    );
    Ok(adversary)
}

/// Erdos-Renyi style sampling, retried until the draw is connected
/// (capped at 1000 attempts).
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("random-connected", "n must be at least 1".into()));
    }
    if !(p > 0.0 && p <= 1.0) && n > 1 {
        return Err(invalid(
            "random-connected",
            format!("p must lie in (0, 1], got {p}"),
        ));
    }
    if n == 1 {
        return Graph::build(1, &[]);
    }
    for attempt in 0..RANDOM_CONNECTED_ATTEMPTS {
        let mut rng = seeded_rng(mix_seed(seed, attempt as u64));
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        match Graph::build(n, &edges) {
            Ok(g) => return Ok(g),
            Err(Error::Disconnected { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted {
        n,
        p,
        attempts: RANDOM_CONNECTED_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_degrees() {
        let g = star(4).unwrap();
        assert_eq!(g.degree(0), 3);
        assert!((1..4).all(|v| g.degree(v) == 1));
    }

    #[test]
    fn glitter_star_three_spokes() {
        // n = 7: center degree 3, middles degree 2, tips degree 1
        let g = glitter_star(3).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.degree(0), 3);
        assert!((1..=3).all(|v| g.degree(v) == 2));
        assert!((4..=6).all(|v| g.degree(v) == 1));
    }

    #[test]
    fn lollipop_nine() {
        // K6 plus a path of 3 extra vertices: 15 + 3 edges
        let g = lollipop(9).unwrap();
        assert_eq!(g.edge_count(), 18);
        assert_eq!(g.degree(5), 6); // attachment vertex
        assert_eq!(g.degree(8), 1);
        assert!(lollipop(10).is_err());
    }

    #[test]
    fn clique_star_structure() {
        let g = clique_star(8).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 4));
        assert!((4..8).all(|v| g.degree(v) == 1));
        assert!(clique_star(7).is_err());
    }

    #[test]
    fn double_star_centers() {
        let g = double_star(9).unwrap();
        // 7 leaves: 4 on center 0, 3 on center 1
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.edge_index(0, 1), Some(0));
        assert_eq!(double_star(2).unwrap().edge_count(), 1);
    }

    #[test]
    fn adversary_2233() {
        // n = 2*2*2 + 2*2 + 2*2 = 16; the two vertex classes coincide on
        // degree 2 with all neighbors of degree 3
        let a = local_rule_adversary(2, 2, 3, 3).unwrap();
        let g = &a.graph;
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(a.type1_vertices.len(), 4);
        assert_eq!(a.type2_vertices.len(), 4);
        let deg2_nbrs3 = (0..16)
            .filter(|&v| g.degree(v) == 2 && g.neighbors(v).iter().all(|&u| g.degree(u) == 3))
            .count();
        assert_eq!(deg2_nbrs3, 8);
        for &v in a.type1_vertices.iter().chain(&a.type2_vertices) {
            assert_eq!(g.degree(v), 2);
            assert!(g.neighbors(v).iter().all(|&u| g.degree(u) == 3));
        }
        assert!(g.vertex_count() <= 6 * 2 * 2);
    }

    #[test]
    fn adversary_2259_profile() {
        let a = local_rule_adversary(2, 2, 5, 9).unwrap();
        let g = &a.graph;
        assert_eq!(g.vertex_count(), 88);
        assert_eq!(a.type1_vertices.len(), 32);
        assert_eq!(a.type2_vertices.len(), 32);
        for &v in &a.type1_vertices {
            assert_eq!(g.degree(v), 2);
            assert!(g.neighbors(v).iter().all(|&u| g.degree(u) == 5));
        }
        for &v in &a.type2_vertices {
            assert_eq!(g.degree(v), 2);
            assert!(g.neighbors(v).iter().all(|&u| g.degree(u) == 9));
        }
        assert!(g.vertex_count() <= 6 * 4 * 8);
    }

    #[test]
    fn adversary_smallest() {
        // (1,1,2,2): two K_{1,1} blocks joined by a matching edge -> P4
        let a = local_rule_adversary(1, 1, 2, 2).unwrap();
        assert_eq!(a.graph.vertex_count(), 4);
        assert_eq!(a.graph.edge_count(), 3);
        let mut degs: Vec<_> = (0..4).map(|v| a.graph.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn adversary_rejects_bad_params() {
        assert!(local_rule_adversary(2, 2, 1, 3).is_err()); // d3 >= 2 violated
        assert!(local_rule_adversary(2, 2, 3, 1).is_err());
        assert!(local_rule_adversary(4, 2, 3, 5).is_err()); // d1 <= d3 violated
        assert!(local_rule_adversary(2, 6, 3, 5).is_err());
    }

    #[test]
    fn random_connected_deterministic() {
        let a = random_connected(30, 0.2, 99).unwrap();
        let b = random_connected(30, 0.2, 99).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = random_connected(30, 0.2, 100).unwrap();
        assert!(a.edges() != c.edges() || a.edge_count() == c.edge_count());
    }

    #[test]
    fn random_connected_exhausts() {
        assert!(matches!(
            random_connected(12, 1e-9, 5).unwrap_err(),
            Error::SamplingExhausted { .. }
        ));
    }

    #[test]
    fn for_size_glitter_requires_odd() {
        assert!(GraphFamily::for_size("glitter-star", 8).is_err());
        let fam = GraphFamily::for_size("glitter-star", 9).unwrap();
        assert_eq!(fam.generate().unwrap().vertex_count(), 9);
    }

    #[test]
    fn generators_validate() {
        let families = [
            GraphFamily::Path { n: 5 },
            GraphFamily::Star { n: 6 },
            GraphFamily::Cycle { n: 5 },
            GraphFamily::Complete { n: 5 },
            GraphFamily::CompleteBipartite { left: 2, right: 3 },
            GraphFamily::Lollipop { n: 9 },
            GraphFamily::GlitterStar { spokes: 4 },
            GraphFamily::CliqueStar { n: 10 },
            GraphFamily::DoubleStar { n: 7 },
            GraphFamily::LocalRuleAdversary { d1: 2, d2: 2, d3: 3, d4: 3 },
            GraphFamily::RandomConnected { n: 12, p: 0.4, seed: 3 },
        ];
        for fam in families {
            let g = fam.generate().unwrap();
            // rebuild from the edge list; must round-trip cleanly
            let again = Graph::build(g.vertex_count(), g.edges()).unwrap();
            assert_eq!(g, again, "family {}", fam.name());
        }
    }
}
