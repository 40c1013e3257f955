//! Immutable simple undirected graphs with bitset adjacency, plus the
//! structural machinery this crate leans on: block (biconnected component)
//! decomposition, chordality via perfect elimination orderings, maximal
//! clique enumeration and twin detection.
//!
//! Vertices are dense indices `0..n`. A *block graph* is a graph in which
//! every block is a clique; equivalently, a diamond-free chordal graph.
//! Both characterizations are implemented here so they can be checked
//! against each other.

use crate::bitset::VertexSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        assert!(u < self.n, "vertex out of range");
        self.adj[u].len()
    }

    /// N(u): the neighbors of `u`, excluding `u` itself.
    pub fn open_neighborhood(&self, u: usize) -> &VertexSet {
        assert!(u < self.n, "vertex out of range");
        &self.adj[u]
    }

    /// N[u] = N(u) ∪ {u}.
    pub fn closed_neighborhood(&self, u: usize) -> VertexSet {
        assert!(u < self.n, "vertex out of range");
        let mut s = self.adj[u].clone();
        s.insert(u);
        s
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.len() == self.n
    }

    /// Subgraph induced by `keep` (ascending vertex list). Returns the new
    /// graph together with the map from new indices back to old ones.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]), "keep must be ascending");
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = Vec::new();
        for &u in keep {
            for v in self.adj[u].iter() {
                if u < v && old_to_new[v] != usize::MAX {
                    edges.push((old_to_new[u], old_to_new[v]));
                }
            }
        }
        let g = Graph::from_edges(keep.len(), &edges).expect("induced subgraph is simple");
        (g, keep.to_vec())
    }
}

// ---------------------------------------------------------------------------
// Block decomposition
// ---------------------------------------------------------------------------

/// The blocks (maximal 2-connected subgraphs, bridges included as 2-vertex
/// blocks) and articulation vertices of a graph. Isolated vertices belong to
/// no block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block as an ascending vertex list; blocks sorted lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Ascending list of cut vertices.
    pub articulation_vertices: Vec<usize>,
}

struct BlockDfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    articulation: Vec<bool>,
}

impl BlockDfs<'_> {
    fn explore(&mut self, u: usize, parent: usize) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for v in self.g.adj[u].iter() {
            if self.disc[v] == 0 {
                children += 1;
                self.edge_stack.push((u, v));
                self.explore(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    // u separates v's subtree: everything pushed since (u, v)
                    // forms one block.
                    if parent != usize::MAX || children > 1 {
                        self.articulation[u] = true;
                    }
                    let mut members = VertexSet::empty(self.g.n);
                    while let Some(&(a, b)) = self.edge_stack.last() {
                        self.edge_stack.pop();
                        members.insert(a);
                        members.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(members.to_vec());
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

impl Graph {
    pub fn blocks(&self) -> BlockDecomposition {
        let mut dfs = BlockDfs {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
            articulation: vec![false; self.n],
        };
        for s in 0..self.n {
            if dfs.disc[s] == 0 {
                dfs.explore(s, usize::MAX);
                debug_assert!(dfs.edge_stack.is_empty());
            }
        }
        let mut blocks = dfs.blocks;
        blocks.sort();
        let articulation_vertices = (0..self.n).filter(|&v| dfs.articulation[v]).collect();
        BlockDecomposition { blocks, articulation_vertices }
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// True when every block induces a clique (bridges trivially do).
    pub fn is_block_graph(&self) -> bool {
        self.blocks().blocks.iter().all(|b| self.is_clique(b))
    }

    fn is_clique(&self, verts: &[usize]) -> bool {
        let set = VertexSet::from_iter(self.n, verts.iter().copied());
        verts
            .iter()
            .all(|&u| set.difference(&self.adj[u]).len() == 1) // only u itself missing
    }

    /// Perfect elimination ordering via maximum cardinality search, or `None`
    /// when the graph is not chordal. Position i of the result is eliminated
    /// i-th; each vertex's later neighbors form a clique.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = VertexSet::empty(n);
        let mut mcs = Vec::with_capacity(n);
        for _ in 0..n {
            // Max weight, least index on ties, for a deterministic ordering.
            let u = (0..n)
                .filter(|&v| !numbered.contains(v))
                .max_by_key(|&v| (weight[v], n - v))
                .unwrap();
            numbered.insert(u);
            mcs.push(u);
            for v in self.adj[u].iter() {
                if !numbered.contains(v) {
                    weight[v] += 1;
                }
            }
        }
        mcs.reverse();
        let order = mcs;

        // Verify simpliciality directly: later neighbors must be pairwise
        // adjacent. MCS yields a perfect elimination ordering iff one exists.
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let later = VertexSet::from_iter(n, self.adj[v].iter().filter(|&w| position[w] > i));
            for u in later.iter() {
                let mut others = later.clone();
                others.remove(u);
                if !others.is_subset(&self.adj[u]) {
                    return None;
                }
            }
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// Looks for an induced K4-minus-an-edge: some edge (u, v) whose common
    /// neighborhood contains two non-adjacent vertices.
    pub fn has_induced_diamond(&self) -> bool {
        for (u, v) in self.edges() {
            let common = self.adj[u].intersection(&self.adj[v]);
            for x in common.iter() {
                let mut rest = common.clone();
                rest.remove(x);
                if !rest.is_subset(&self.adj[x]) {
                    return true;
                }
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Maximal cliques
// ---------------------------------------------------------------------------

impl Graph {
    /// All maximal cliques (Bron–Kerbosch with pivoting), each ascending,
    /// sorted lexicographically. An isolated vertex is the maximal clique {v}.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        fn expand(g: &Graph, r: &mut Vec<usize>, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<Vec<usize>>) {
            if p.is_empty() && x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
                return;
            }
            // Pivot on the candidate covering most of P.
            let pivot = p
                .union(&x)
                .iter()
                .max_by_key(|&u| (p.intersection(&g.adj[u]).len(), g.n - u))
                .unwrap();
            let branch = p.difference(&g.adj[pivot]);
            for v in branch.iter() {
                r.push(v);
                expand(g, r, p.intersection(&g.adj[v]), x.intersection(&g.adj[v]), out);
                r.pop();
                p.remove(v);
                x.insert(v);
            }
        }

        let mut out = Vec::new();
        if self.n > 0 {
            expand(
                self,
                &mut Vec::new(),
                VertexSet::full(self.n),
                VertexSet::empty(self.n),
                &mut out,
            );
        }
        out.sort();
        out
    }

    /// Number of maximal cliques, written n_Q elsewhere in this crate. For a
    /// block graph this is the block count plus one per isolated vertex, so
    /// the decomposition shortcut is used there; general graphs fall back to
    /// enumeration.
    pub fn count_maximal_cliques(&self) -> usize {
        if self.is_block_graph() {
            self.blocks().blocks.len() + self.isolated_vertices().len()
        } else {
            self.maximal_cliques().len()
        }
    }
}

// ---------------------------------------------------------------------------
// Twins and admissibility
// ---------------------------------------------------------------------------

/// Twin structure of a graph. True twins share a closed neighborhood
/// (hence are adjacent); false twins share an open neighborhood (hence are
/// not). Pairs are (u, v) with u < v, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinReport {
    pub true_twins: Vec<(usize, usize)>,
    pub false_twins: Vec<(usize, usize)>,
    pub isolated: Vec<usize>,
}

impl Graph {
    pub fn twin_report(&self) -> TwinReport {
        let mut true_twins = Vec::new();
        let mut false_twins = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] == self.adj[v] {
                    false_twins.push((u, v));
                } else if self.closed_neighborhood(u) == self.closed_neighborhood(v) {
                    true_twins.push((u, v));
                }
            }
        }
        TwinReport {
            true_twins,
            false_twins,
            isolated: self.isolated_vertices(),
        }
    }

    /// A graph admits an identifying code iff it has no true twins.
    pub fn is_identifiable(&self) -> bool {
        self.twin_report().true_twins.is_empty()
    }

    /// A graph admits an open locating-dominating code iff it has neither
    /// isolated vertices nor false twins.
    pub fn is_old_admissible(&self) -> bool {
        let report = self.twin_report();
        report.false_twins.is_empty() && report.isolated.is_empty()
    }
}
