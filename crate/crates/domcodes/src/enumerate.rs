//! Isomorph-free enumeration of connected block graphs, and the canonical
//! form used to deduplicate them.
//!
//! The canonical form of a graph is the minimum, over all vertex orderings,
//! of the upper-triangle adjacency bitstring in graph6 column order. The
//! minimizing search places one vertex at a time and prunes any partial
//! ordering whose bits already exceed the best complete ordering, and any
//! candidate that is a twin of a sibling it would merely mirror.
//!
//! Enumeration grows graphs by attaching a new clique block at an existing
//! vertex. Every connected block graph on two or more vertices arises this
//! way: it has a leaf block, and deleting that block's non-cut vertices
//! leaves a smaller connected block graph. Deduplication by canonical form
//! then yields exactly one representative per isomorphism class.

use crate::graph::Graph;
use std::collections::BTreeSet;

/// Largest vertex count `canonical_form` accepts. 45 upper-triangle bits
/// at n = 10 still fit one u64.
pub const CANON_LIMIT: usize = 10;

/// Vertex count cap for the block-graph enumerator.
pub const ENUMERATE_LIMIT: usize = 9;

/// Vertex count cap for the brute-force enumerators that scan all
/// 2^(n choose 2) labeled graphs.
pub const ORACLE_LIMIT: usize = 6;

/// An isomorphism-invariant fingerprint: two graphs on at most
/// [`CANON_LIMIT`] vertices are isomorphic exactly when their forms are
/// equal. Ordering is by vertex count, then by bitstring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let total = n * (n - 1) / 2;
        let mut edges = Vec::new();
        let mut p = 0;
        for j in 1..n {
            for i in 0..j {
                if total > 0 && self.bits >> (total - 1 - p) & 1 == 1 {
                    edges.push((i, j));
                }
                p += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical bits encode a simple graph")
    }

    /// graph6 line of the canonical representative.
    pub fn to_graph6(&self) -> String {
        crate::io::emit_graph6(&self.to_graph())
    }
}

struct CanonSearch {
    n: usize,
    adj: Vec<u16>,
    perm: Vec<usize>,
    cur: Vec<u32>,
    best: Vec<u32>,
    have_best: bool,
}

impl CanonSearch {
    /// `strict` records that some earlier chunk of the current prefix is
    /// already below the incumbent, so deeper comparisons cannot prune.
    /// The incumbent may improve mid-branch, leaving a stale `strict`;
    /// that only costs exploration, because leaves re-compare in full.
    fn descend(&mut self, depth: usize, strict: bool) {
        if depth == self.n {
            if !self.have_best || self.cur < self.best {
                self.best.copy_from_slice(&self.cur);
                self.have_best = true;
            }
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        let used: u16 = self.perm[..depth].iter().fold(0, |m, &v| m | 1 << v);
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            // A sibling u with N(u)∖{v} = N(v)∖{u} swaps with v under an
            // automorphism: placing v here repeats u's subtree bit for bit.
            let mirrors = |&u: &usize| {
                let mask = !(1u16 << u | 1u16 << v);
                self.adj[u] & mask == self.adj[v] & mask
            };
            if tried.iter().any(mirrors) {
                continue;
            }
            tried.push(v);
            let mut chunk: u32 = 0;
            for i in 0..depth {
                chunk = chunk << 1 | (self.adj[v] as u32 >> self.perm[i] & 1);
            }
            let next_strict = if strict || !self.have_best {
                true
            } else if chunk > self.best[depth] {
                continue;
            } else {
                chunk < self.best[depth]
            };
            self.cur[depth] = chunk;
            self.perm[depth] = v;
            self.descend(depth + 1, next_strict);
        }
    }
}

/// Minimum adjacency bitstring over all vertex orderings. Panics above
/// [`CANON_LIMIT`] vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= CANON_LIMIT, "canonical_form is capped at {} vertices, got {}", CANON_LIMIT, n);
    if n == 0 {
        return CanonicalForm { n: 0, bits: 0 };
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.open_neighborhood(v).iter().fold(0u16, |m, u| m | 1 << u))
        .collect();
    let mut search = CanonSearch {
        n,
        adj,
        perm: vec![0; n],
        cur: vec![0; n],
        best: vec![0; n],
        have_best: false,
    };
    search.descend(0, false);
    debug_assert!(search.have_best);
    let mut bits: u64 = 0;
    for (j, &chunk) in search.best.iter().enumerate() {
        bits = bits << j | chunk as u64;
    }
    CanonicalForm { n: n as u8, bits }
}

/// Isomorphism test via canonical forms; both graphs must fit
/// [`CANON_LIMIT`].
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// All connected block graphs on exactly `n` vertices, one representative
/// per isomorphism class, sorted by canonical form. `1 ≤ n ≤ 9`.
pub fn enumerate_connected_block_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "enumeration starts at one vertex");
    assert!(n <= ENUMERATE_LIMIT, "enumeration is capped at {} vertices, got {}", ENUMERATE_LIMIT, n);
    let mut levels: Vec<BTreeSet<CanonicalForm>> = vec![BTreeSet::new(); n + 1];
    levels[1].insert(canonical_form(&Graph::from_edges(1, &[]).unwrap()));
    for m in 1..n {
        let here: Vec<CanonicalForm> = levels[m].iter().copied().collect();
        for canon in here {
            let g = canon.to_graph();
            // Attach a clique on {v} plus s-1 fresh vertices.
            for s in 2..=(n - m + 1) {
                for v in 0..m {
                    let mut edges = g.edges();
                    let mut block: Vec<usize> = vec![v];
                    block.extend(m..m + s - 1);
                    for (idx, &a) in block.iter().enumerate() {
                        for &b in &block[idx + 1..] {
                            edges.push((a, b));
                        }
                    }
                    let bigger = Graph::from_edges(m + s - 1, &edges).unwrap();
                    debug_assert!(bigger.is_block_graph());
                    levels[m + s - 1].insert(canonical_form(&bigger));
                }
            }
        }
    }
    levels[n].iter().map(|c| c.to_graph()).collect()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices (block graph or not), by scanning every labeled graph. Slow
/// by design — this is the reference the fast enumerator is checked
/// against, and the universe for solver cross-validation.
pub fn all_connected_classes(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1, "enumeration starts at one vertex");
    assert!(n <= ORACLE_LIMIT, "labeled-graph scans are capped at {} vertices, got {}", ORACLE_LIMIT, n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut seen = BTreeSet::new();
    (0u64..1 << pairs.len()).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if !g.is_connected() {
            return None;
        }
        seen.insert(canonical_form(&g)).then_some(g)
    })
}

/// Every isomorphism class of connected graphs on `n ≤ 6` vertices, by
/// scanning all labeled graphs. First-seen representatives in labeled-mask
/// order; the set of classes is what matters to its callers.
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    all_connected_classes(n).collect()
}

/// Reference enumerator for connected block graphs on `n ≤ 6` vertices:
/// filters the labeled-graph scan instead of growing by blocks. Slow, and
/// meant purely as a cross-check of `enumerate_connected_block_graphs`.
pub fn oracle_enumerate(n: usize) -> Vec<Graph> {
    all_connected_classes(n).filter(|g| g.is_block_graph()).collect()
}
