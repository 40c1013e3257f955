//! Build one instance of every parameterized family and print its shape:
//! vertex and edge counts, whether it is a block graph, and its number of
//! maximal cliques n_Q.
//!
//!     cargo run --example generate_families

use domcodes::families::{self, FamilyKind, FamilySpec};
use domcodes::io::{emit_graph6, Format};

fn main() {
    let roster: Vec<(&str, FamilySpec)> = vec![
        ("star --k 5", FamilySpec { kind: FamilyKind::Star, k: 5, p: None, seed: None }),
        ("path --k 7", FamilySpec { kind: FamilyKind::Path, k: 7, p: None, seed: None }),
        ("clique --k 4", FamilySpec { kind: FamilyKind::Clique, k: 4, p: None, seed: None }),
        ("spider --k 4", FamilySpec { kind: FamilyKind::Spider, k: 4, p: None, seed: None }),
        ("path-power --k 6 --p 2", FamilySpec { kind: FamilyKind::PathPower, k: 6, p: Some(2), seed: None }),
        ("extremal-id --k 5", FamilySpec { kind: FamilyKind::ExtremalId, k: 5, p: None, seed: None }),
        ("extremal-old --k 5", FamilySpec { kind: FamilyKind::ExtremalOld, k: 5, p: None, seed: None }),
        ("extremal-ld --k 5", FamilySpec { kind: FamilyKind::ExtremalLd, k: 5, p: None, seed: None }),
        ("split-hypercube --k 3", FamilySpec { kind: FamilyKind::SplitHypercube, k: 3, p: None, seed: None }),
        ("random-block --k 5 --p 4", FamilySpec { kind: FamilyKind::RandomBlock, k: 5, p: Some(4), seed: Some(7) }),
    ];

    println!("{:<26} {:>3} {:>3} {:>6} {:>4}  graph6", "family", "n", "m", "block", "n_Q");
    for (label, spec) in roster {
        let g = spec.build().unwrap();
        println!(
            "{:<26} {:>3} {:>3} {:>6} {:>4}  {}",
            label,
            g.n(),
            g.edge_count(),
            g.is_block_graph(),
            g.count_maximal_cliques(),
            emit_graph6(&g)
        );
    }

    // The random family is deterministic in its seed.
    let a = families::random_block_graph(5, 4, 7).unwrap();
    let b = families::random_block_graph(5, 4, 7).unwrap();
    assert_eq!(a.edges(), b.edges());

    // path_power is the one roster member that is not a block graph: its
    // overlapping clique windows contain induced diamonds.
    let pp = families::path_power(6, 2).unwrap();
    assert!(!pp.is_block_graph());
    println!("\npath-power windows overlap: {} maximal cliques on {} vertices", pp.count_maximal_cliques(), pp.n());

    // The same graphs serialize to either interchange format.
    let spider = families::thin_spider(3).unwrap();
    print!("\nthin spider S3 as an edge list:\n{}", domcodes::io::emit_graph(&spider, Format::EdgeList));
}
