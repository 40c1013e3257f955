//! Block-graph recognition has two independent routes: "every block is a
//! clique" and "chordal with no induced diamond". They must agree on
//! everything, and on recognized block graphs the blocks must coincide
//! with the maximal cliques.

use domcodes::{enumerate, families, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn recognition_routes_agree_exhaustively() {
    // Every labeled graph on up to 7 vertices, connected or not.
    for n in 1..=7usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0u64..1 << pairs {
            let g = graph_from_mask(n, mask);
            let direct = g.is_block_graph();
            let indirect = g.is_chordal() && !g.has_induced_diamond();
            assert_eq!(direct, indirect, "routes disagree on n = {}, mask = {:#x}", n, mask);
        }
    }
}

#[test]
fn recognition_routes_agree_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=16);
        // Mixed densities: sparse graphs are the interesting ones here
        // (dense graphs are almost never chordal).
        let p = rng.gen_range(0.05..0.5);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(g.is_block_graph(), g.is_chordal() && !g.has_induced_diamond());
    }
}

#[test]
fn blocks_equal_maximal_cliques_on_block_graphs() {
    let as_sets = |cliques: Vec<Vec<usize>>| -> BTreeSet<Vec<usize>> {
        cliques
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect()
    };
    let mut checked = 0;
    for n in 1..=7 {
        for g in enumerate::enumerate_connected_block_graphs(n) {
            let blocks = as_sets(g.blocks().blocks.iter().map(|b| b.to_vec()).collect());
            let cliques = as_sets(g.maximal_cliques().iter().map(|c| c.to_vec()).collect());
            // K1 has no blocks but one maximal clique; beyond that the two
            // collections must be identical.
            if g.n() == 1 {
                assert!(blocks.is_empty());
                assert_eq!(cliques.len(), 1);
            } else {
                assert_eq!(blocks, cliques, "n = {}", n);
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 1 + 2 + 4 + 9 + 22 + 59);

    for seed in 0..50 {
        let g = families::random_block_graph(5, 4, seed).unwrap();
        assert!(g.is_block_graph());
        let blocks = as_sets(g.blocks().blocks.iter().map(|b| b.to_vec()).collect());
        let cliques = as_sets(g.maximal_cliques().iter().map(|c| c.to_vec()).collect());
        assert_eq!(blocks, cliques, "seed {}", seed);
    }
}

#[test]
fn clique_count_on_block_graphs_is_blocks_plus_isolated() {
    // Two triangles, a bridge between them, and three isolated vertices:
    // three block-cliques plus three singletons.
    let g = Graph::from_edges(
        9,
        &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)],
    )
    .unwrap();
    assert!(g.is_block_graph());
    assert_eq!(g.blocks().blocks.len(), 3);
    assert_eq!(g.isolated_vertices().len(), 3);
    assert_eq!(g.count_maximal_cliques(), 6);

    for n in 2..=7 {
        for g in enumerate::enumerate_connected_block_graphs(n) {
            assert_eq!(g.count_maximal_cliques(), g.blocks().blocks.len());
        }
    }
}

#[test]
fn path_power_is_chordal_but_not_a_block_graph() {
    let pp = families::path_power(6, 2).unwrap();
    assert!(pp.is_chordal());
    assert!(pp.has_induced_diamond());
    assert!(!pp.is_block_graph());
}
