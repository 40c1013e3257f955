//! Parameterized graph generators.
//!
//! Every generator is deterministic: the same parameters (and seed, where
//! one exists) always produce the same labeled graph, so expected values in
//! tests and reports can refer to concrete vertex indices. The shared
//! labeling convention for the path-based extremal families is: path
//! vertices first, then pendant vertices, then the vertices attached to a
//! pair of consecutive path vertices.

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {requirement}, got {got}")]
    ParameterOutOfRange {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error("family {0:?} is not recognized")]
    UnknownFamily(String),
    #[error("{family} requires the parameter {missing}")]
    MissingParameter { family: &'static str, missing: &'static str },
}

fn check(ok: bool, family: &'static str, requirement: &'static str, got: impl ToString) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::ParameterOutOfRange { family, requirement, got: got.to_string() })
    }
}

/// Star K_{1,n}: center 0, leaves 1..=n.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 1, "star", "n >= 1", n)?;
    let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    Ok(Graph::from_edges(n + 1, &edges).unwrap())
}

/// Path P_n on vertices 0..n in order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 1, "path", "n >= 1", n)?;
    let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
    Ok(Graph::from_edges(n, &edges).unwrap())
}

/// Complete graph K_n.
pub fn clique(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 1, "clique", "n >= 1", n)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges).unwrap())
}

/// Thin headless spider: a clique 0..n, a stable set n..2n, and a perfect
/// matching attaching stable vertex n+i to clique vertex i.
pub fn thin_spider(n: usize) -> Result<Graph, FamilyError> {
    check(n >= 3, "thin_spider", "n >= 3", n)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
        edges.push((u, n + u));
    }
    Ok(Graph::from_edges(2 * n, &edges).unwrap())
}

/// p-th power of the path on n vertices: i ~ j iff 0 < |i - j| <= p.
pub fn path_power(n: usize, p: usize) -> Result<Graph, FamilyError> {
    check(n >= 2, "path_power", "n >= 2", n)?;
    check((1..n).contains(&p), "path_power", "1 <= p < n", p)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..(u + p + 1).min(n) {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges).unwrap())
}

/// Path 0..k, one pendant k+i on each path vertex i, and for each inner
/// window i in 1..k-2 a vertex adjacent to path vertices i and i+1.
/// 3k-3 vertices in total; k >= 4 keeps the window range nonempty.
pub fn extremal_id(k: usize) -> Result<Graph, FamilyError> {
    check(k >= 4, "extremal_id", "k >= 4", k)?;
    let mut edges: Vec<_> = (0..k - 1).map(|v| (v, v + 1)).collect();
    for i in 0..k {
        edges.push((i, k + i));
    }
    for (t, i) in (1..k - 2).enumerate() {
        let w = 2 * k + t;
        edges.push((i, w));
        edges.push((i + 1, w));
    }
    Ok(Graph::from_edges(3 * k - 3, &edges).unwrap())
}

/// Path 0..k with pendants on both ends and on the interior vertices
/// 2..k-3, plus one vertex per consecutive path pair. 3k-3 vertices;
/// k >= 5 keeps the interior pendant range nonempty.
pub fn extremal_old(k: usize) -> Result<Graph, FamilyError> {
    check(k >= 5, "extremal_old", "k >= 5", k)?;
    let mut edges: Vec<_> = (0..k - 1).map(|v| (v, v + 1)).collect();
    let mut pendant_on: Vec<usize> = vec![0];
    pendant_on.extend(2..=k - 3);
    pendant_on.push(k - 1);
    for (t, &i) in pendant_on.iter().enumerate() {
        edges.push((i, k + t));
    }
    let base = k + pendant_on.len();
    for i in 0..k - 1 {
        let w = base + i;
        edges.push((i, w));
        edges.push((i + 1, w));
    }
    Ok(Graph::from_edges(3 * k - 3, &edges).unwrap())
}

/// Path 0..k with a pendant on every path vertex and one vertex per
/// consecutive path pair. 3k-1 vertices; defined for k >= 2.
pub fn extremal_ld(k: usize) -> Result<Graph, FamilyError> {
    check(k >= 2, "extremal_ld", "k >= 2", k)?;
    let mut edges: Vec<_> = (0..k - 1).map(|v| (v, v + 1)).collect();
    for i in 0..k {
        edges.push((i, k + i));
    }
    for i in 0..k - 1 {
        let w = 2 * k + i;
        edges.push((i, w));
        edges.push((i + 1, w));
    }
    Ok(Graph::from_edges(3 * k - 1, &edges).unwrap())
}

/// Split graph on a clique 0..k and one independent vertex per nonempty
/// subset of the clique: vertex k + (mask - 1) is adjacent to clique vertex
/// i iff bit i of mask is set. k + 2^k - 1 vertices; capped at k <= 5.
pub fn split_hypercube(k: usize) -> Result<Graph, FamilyError> {
    check((2..=5).contains(&k), "split_hypercube", "2 <= k <= 5", k)?;
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    for mask in 1usize..1 << k {
        let w = k + mask - 1;
        for i in 0..k {
            if mask >> i & 1 == 1 {
                edges.push((i, w));
            }
        }
    }
    Ok(Graph::from_edges(k + (1 << k) - 1, &edges).unwrap())
}

/// Random connected block graph: a chain of `num_blocks` cliques, each of a
/// random size in 2..=max_block_size, where every block after the first is
/// glued onto a uniformly random existing vertex. Deterministic per seed.
pub fn random_block_graph(num_blocks: usize, max_block_size: usize, seed: u64) -> Result<Graph, FamilyError> {
    check(num_blocks >= 1, "random_block_graph", "num_blocks >= 1", num_blocks)?;
    check(max_block_size >= 2, "random_block_graph", "max_block_size >= 2", max_block_size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut n = 0usize;
    for b in 0..num_blocks {
        let size = rng.gen_range(2..=max_block_size);
        let glue = if b == 0 {
            n += 1;
            n - 1
        } else {
            rng.gen_range(0..n)
        };
        let mut members = vec![glue];
        for _ in 1..size {
            members.push(n);
            n += 1;
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                edges.push((members[i], members[j]));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).unwrap())
}

// ---------------------------------------------------------------------------
// Named family specs (CLI surface)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Star,
    Path,
    Clique,
    Spider,
    PathPower,
    ExtremalId,
    ExtremalOld,
    ExtremalLd,
    SplitHypercube,
    RandomBlock,
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        Ok(match s {
            "star" => FamilyKind::Star,
            "path" => FamilyKind::Path,
            "clique" => FamilyKind::Clique,
            "spider" => FamilyKind::Spider,
            "path-power" => FamilyKind::PathPower,
            "extremal-id" => FamilyKind::ExtremalId,
            "extremal-old" => FamilyKind::ExtremalOld,
            "extremal-ld" => FamilyKind::ExtremalLd,
            "split-hypercube" => FamilyKind::SplitHypercube,
            "random-block" => FamilyKind::RandomBlock,
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        })
    }
}

/// A family instance as named on the command line: the main size parameter
/// `k`, the secondary parameter `p` (path-power order, block size bound)
/// where the family takes one, and a seed for the random family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub k: usize,
    pub p: Option<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self.kind {
            FamilyKind::Star => star(self.k),
            FamilyKind::Path => path(self.k),
            FamilyKind::Clique => clique(self.k),
            FamilyKind::Spider => thin_spider(self.k),
            FamilyKind::PathPower => {
                let p = self.p.ok_or(FamilyError::MissingParameter { family: "path_power", missing: "--p" })?;
                path_power(self.k, p)
            }
            FamilyKind::ExtremalId => extremal_id(self.k),
            FamilyKind::ExtremalOld => extremal_old(self.k),
            FamilyKind::ExtremalLd => extremal_ld(self.k),
            FamilyKind::SplitHypercube => split_hypercube(self.k),
            FamilyKind::RandomBlock => {
                let p = self.p.ok_or(FamilyError::MissingParameter { family: "random_block_graph", missing: "--p" })?;
                random_block_graph(self.k, p, self.seed.unwrap_or(0))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_path_and_clique() {
        let s = star(3).unwrap();
        assert_eq!((s.n(), s.edge_count()), (4, 3));
        assert_eq!(s.degree(0), 3);

        let p = path(4).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);

        let k = clique(5).unwrap();
        assert_eq!(k.edge_count(), 10);
        assert!(star(0).is_err() && path(0).is_err() && clique(0).is_err());
    }

    #[test]
    fn spider_structure() {
        let g = thin_spider(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 6));
        // Clique part, then one leg per clique vertex.
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
        for i in 0..3 {
            assert_eq!(g.degree(3 + i), 1);
            assert!(g.has_edge(i, 3 + i));
        }
        assert!(g.is_block_graph());
        assert_eq!(g.count_maximal_cliques(), 4);
        assert!(thin_spider(2).is_err());
    }

    #[test]
    fn path_power_structure() {
        let g = path_power(6, 2).unwrap();
        assert!(g.has_edge(0, 2) && !g.has_edge(0, 3));
        assert!(!g.is_block_graph());
        assert_eq!(g.count_maximal_cliques(), 4); // windows {012},{123},{234},{345}
        assert!(path_power(6, 6).is_err());
        // p = n-1 is the complete graph.
        assert_eq!(path_power(4, 3).unwrap().edge_count(), 6);
    }

    #[test]
    fn extremal_family_shapes() {
        let id4 = extremal_id(4).unwrap();
        assert_eq!(id4.n(), 9);
        assert!(id4.is_block_graph() && id4.is_connected());
        // The lone window vertex sits on path pair (1, 2).
        assert!(id4.has_edge(1, 8) && id4.has_edge(2, 8));

        let old5 = extremal_old(5).unwrap();
        assert_eq!(old5.n(), 12);
        assert!(old5.is_block_graph() && old5.is_connected());
        // Pendants on 0, 2 and 4; none on 1 or 3.
        assert_eq!(old5.degree(5 + 0), 1);
        assert!(old5.has_edge(0, 5) && old5.has_edge(2, 6) && old5.has_edge(4, 7));

        let ld3 = extremal_ld(3).unwrap();
        assert_eq!(ld3.n(), 8);
        assert!(ld3.is_block_graph() && ld3.is_connected());
        for k in 2..=7 {
            assert_eq!(extremal_ld(k).unwrap().n(), 3 * k - 1);
        }
        assert!(extremal_id(3).is_err() && extremal_old(4).is_err() && extremal_ld(1).is_err());
    }

    #[test]
    fn split_hypercube_structure() {
        let g = split_hypercube(3).unwrap();
        assert_eq!(g.n(), 10);
        assert!(!g.is_block_graph()); // two maximal cliques share an edge
        // Vertex for mask {0,1} is k + mask - 1 = 3 + 3 - 1 = 5.
        assert!(g.has_edge(0, 5) && g.has_edge(1, 5) && !g.has_edge(2, 5));
        assert_eq!(g.count_maximal_cliques(), 7);
        assert!(split_hypercube(6).is_err());
    }

    #[test]
    fn random_block_graphs_are_block_graphs() {
        for seed in 0..20 {
            let g = random_block_graph(10, 4, seed).unwrap();
            assert!(g.is_connected(), "seed {}", seed);
            assert!(g.is_block_graph(), "seed {}", seed);
            assert_eq!(g.blocks().blocks.len(), 10, "seed {}", seed);
        }
        // Same seed, same graph; different seed, (almost surely) different.
        assert_eq!(random_block_graph(8, 5, 7).unwrap().edges(), random_block_graph(8, 5, 7).unwrap().edges());
        assert!(random_block_graph(1, 2, 0).unwrap().edges() == vec![(0, 1)]);
    }

    #[test]
    fn family_specs_build() {
        let spec = FamilySpec { kind: "spider".parse().unwrap(), k: 3, p: None, seed: None };
        assert_eq!(spec.build().unwrap().n(), 6);
        let power = FamilySpec { kind: FamilyKind::PathPower, k: 6, p: Some(2), seed: None };
        assert_eq!(power.build().unwrap().edge_count(), path_power(6, 2).unwrap().edge_count());
        assert!(FamilySpec { kind: FamilyKind::PathPower, k: 6, p: None, seed: None }.build().is_err());
        assert!("diamond".parse::<FamilyKind>().is_err());
    }
}
