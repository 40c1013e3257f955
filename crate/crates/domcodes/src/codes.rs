//! Code kinds, validity checking and the structural decomposition used by
//! the bound checks.
//!
//! A code is a vertex subset C. Each vertex is observed through its
//! *signature*: N[u] ∩ C for identifying codes, N(u) ∩ C for the two open
//! kinds. Validity is domination (nonempty signature, closed for ID and LD,
//! open for OLD) plus separation (pairwise distinct signatures — over all
//! vertex pairs for ID and OLD, over pairs outside C for LD).

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodeKind {
    /// Identifying code: closed signatures, all vertex pairs separated.
    Id,
    /// Locating-dominating code: closed domination, open signatures
    /// separated over vertices outside the code.
    Ld,
    /// Open locating-dominating code: open domination, open signatures,
    /// all vertex pairs separated.
    Old,
}

impl CodeKind {
    pub const ALL: [CodeKind; 3] = [CodeKind::Id, CodeKind::Ld, CodeKind::Old];

    pub fn name(self) -> &'static str {
        match self {
            CodeKind::Id => "id",
            CodeKind::Ld => "ld",
            CodeKind::Old => "old",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "id" => Ok(CodeKind::Id),
            "ld" => Ok(CodeKind::Ld),
            "old" => Ok(CodeKind::Old),
            other => Err(format!("unknown code kind {:?} (expected id, ld or old)", other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    pub kind: CodeKind,
    pub members: VertexSet,
}

impl Code {
    pub fn new(kind: CodeKind, members: VertexSet) -> Self {
        Code { kind, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The signature of `u` under `code`: N[u] ∩ C for ID, N(u) ∩ C otherwise.
pub fn signature(g: &Graph, code: &Code, u: usize) -> VertexSet {
    match code.kind {
        CodeKind::Id => g.closed_neighborhood(u).intersection(&code.members),
        CodeKind::Ld | CodeKind::Old => g.open_neighborhood(u).intersection(&code.members),
    }
}

/// Why a code is not valid. `validate` reports an undominated vertex in
/// preference to an unseparated pair, and the lexicographically least
/// witness of the reported type, so violations are stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Undominated { kind: CodeKind, vertex: usize },
    UnseparatedPair { kind: CodeKind, u: usize, v: usize, signature: VertexSet },
}

impl Serialize for Violation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Violation", 4)?;
        match self {
            Violation::Undominated { kind, vertex } => {
                s.serialize_field("kind", kind.name())?;
                s.serialize_field("witness_type", "undominated")?;
                s.serialize_field("vertices", &vec![*vertex])?;
                s.serialize_field("sets", &vec![Vec::<usize>::new()])?;
            }
            Violation::UnseparatedPair { kind, u, v, signature } => {
                s.serialize_field("kind", kind.name())?;
                s.serialize_field("witness_type", "unseparated_pair")?;
                s.serialize_field("vertices", &vec![*u, *v])?;
                s.serialize_field("sets", &vec![signature.to_vec(), signature.to_vec()])?;
            }
        }
        s.end()
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Undominated { kind, vertex } => {
                write!(f, "{} code leaves vertex {} undominated", kind, vertex)
            }
            Violation::UnseparatedPair { kind, u, v, signature } => {
                write!(f, "{} code does not separate {} and {} (both see {:?})", kind, u, v, signature)
            }
        }
    }
}

/// Checks `code` on `g`. `Ok(())` means valid; the error is a stable,
/// deterministic witness of the first failed requirement.
pub fn validate(g: &Graph, code: &Code) -> Result<(), Violation> {
    assert_eq!(code.members.universe(), g.n(), "code universe does not match graph");
    let kind = code.kind;

    for u in 0..g.n() {
        let dominated = match kind {
            // LD separates with open signatures but dominates with closed ones.
            CodeKind::Id | CodeKind::Ld => code.members.contains(u) || g.open_neighborhood(u).intersects(&code.members),
            CodeKind::Old => g.open_neighborhood(u).intersects(&code.members),
        };
        if !dominated {
            return Err(Violation::Undominated { kind, vertex: u });
        }
    }

    let needs_separation = |u: usize| kind != CodeKind::Ld || !code.members.contains(u);
    let sigs: Vec<Option<VertexSet>> = (0..g.n())
        .map(|u| needs_separation(u).then(|| signature(g, code, u)))
        .collect();
    for u in 0..g.n() {
        let Some(su) = &sigs[u] else { continue };
        for (v, sv) in sigs.iter().enumerate().skip(u + 1) {
            if sv.as_ref() == Some(su) {
                return Err(Violation::UnseparatedPair { kind, u, v, signature: su.clone() });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

/// Partition of the vertex set relative to a valid code C:
/// V1 = C itself; V2 = vertices outside C with exactly one code neighbor;
/// V3 = vertices outside C with neighbors in at least two components of
/// G[C]; V4 = the remaining vertices (two or more code neighbors, all in
/// one component). For a vertex outside C the open and closed signatures
/// coincide, so the partition depends only on the code, not on its kind.
///
/// Alongside the parts: the components of G[C], their count `k`, the number
/// of isolated (`n0`) and degree-one (`n1`) vertices of G[C], and data about
/// the auxiliary bipartite graph H linking each V3 vertex to the components
/// it touches — its edge count and its number of connected components
/// (`forest_components`, written ℓ in the bound checks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeDecomposition {
    pub kind: CodeKind,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub v3: VertexSet,
    pub v4: VertexSet,
    pub components: Vec<VertexSet>,
    pub k: usize,
    pub n0: usize,
    pub n1: usize,
    pub forest_components: usize,
    pub auxiliary_edges: usize,
}

impl CodeDecomposition {
    /// True when the auxiliary graph H is acyclic. H is always acyclic when
    /// the underlying graph is a block graph.
    pub fn auxiliary_is_forest(&self) -> bool {
        let h_vertices = self.v3.len() + self.k;
        self.auxiliary_edges + self.forest_components == h_vertices
    }
}

impl Serialize for CodeDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CodeDecomposition", 9)?;
        s.serialize_field("kind", self.kind.name())?;
        s.serialize_field("v1", &self.v1.to_vec())?;
        s.serialize_field("v2", &self.v2.to_vec())?;
        s.serialize_field("v3", &self.v3.to_vec())?;
        s.serialize_field("v4", &self.v4.to_vec())?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("n0", &self.n0)?;
        s.serialize_field("n1", &self.n1)?;
        s.serialize_field("forest_components", &self.forest_components)?;
        s.end()
    }
}

/// Splits the vertex set of `g` along a valid `code`. Rejects invalid codes
/// with the violation that `validate` reports.
pub fn decompose(g: &Graph, code: &Code) -> Result<CodeDecomposition, Violation> {
    validate(g, code)?;
    let n = g.n();
    let c = &code.members;

    // Components of G[C].
    let mut comp_of = vec![usize::MAX; n];
    let mut components: Vec<VertexSet> = Vec::new();
    for start in c.iter() {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = VertexSet::empty(n);
        let mut stack = vec![start];
        comp_of[start] = id;
        members.insert(start);
        while let Some(u) = stack.pop() {
            for v in g.open_neighborhood(u).intersection(c).iter() {
                if comp_of[v] == usize::MAX {
                    comp_of[v] = id;
                    members.insert(v);
                    stack.push(v);
                }
            }
        }
        components.push(members);
    }
    let k = components.len();

    let mut n0 = 0;
    let mut n1 = 0;
    for u in c.iter() {
        match g.open_neighborhood(u).intersection(c).len() {
            0 => n0 += 1,
            1 => n1 += 1,
            _ => {}
        }
    }

    let mut v2 = VertexSet::empty(n);
    let mut v3 = VertexSet::empty(n);
    let mut v4 = VertexSet::empty(n);
    // Auxiliary graph H on V3 plus one node per component; union-find over
    // its nodes tracks both the edge count and the component count.
    let mut h_edges = 0usize;
    let mut parent: Vec<usize> = Vec::new();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut h_node = vec![usize::MAX; n];
    let node_for = |parent: &mut Vec<usize>, slot: &mut usize| {
        if *slot == usize::MAX {
            *slot = parent.len();
            parent.push(*slot);
        }
        *slot
    };
    let mut comp_node = vec![usize::MAX; k];

    for x in 0..n {
        if c.contains(x) {
            continue;
        }
        let seen = g.open_neighborhood(x).intersection(c);
        debug_assert!(!seen.is_empty(), "valid codes dominate every vertex");
        if seen.len() == 1 {
            v2.insert(x);
            continue;
        }
        let mut touched: Vec<usize> = seen.iter().map(|u| comp_of[u]).collect();
        touched.sort_unstable();
        touched.dedup();
        if touched.len() >= 2 {
            v3.insert(x);
            let xn = node_for(&mut parent, &mut h_node[x]);
            for comp in touched {
                let cn = node_for(&mut parent, &mut comp_node[comp]);
                h_edges += 1;
                let (a, b) = (find(&mut parent, xn), find(&mut parent, cn));
                if a != b {
                    parent[a] = b;
                }
            }
        } else {
            v4.insert(x);
        }
    }

    // Components that no V3 vertex touches still count as (isolated) H nodes.
    for slot in comp_node.iter_mut() {
        node_for(&mut parent, slot);
    }
    let mut roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();

    Ok(CodeDecomposition {
        kind: code.kind,
        v1: c.clone(),
        v2,
        v3,
        v4,
        components,
        k,
        n0,
        n1,
        forest_components: roots.len(),
        auxiliary_edges: h_edges,
    })
}

// ---------------------------------------------------------------------------
// Bound checks on a decomposition
// ---------------------------------------------------------------------------

/// The part-size inequalities a decomposition of a valid code on a block
/// graph is expected to satisfy, by kind:
///
/// * `v2_bound`: |V2| ≤ |C| for LD, |C| − n0 for ID, |C| − n1 for OLD
/// * `v3_bound`: |V3| ≤ k − 1
/// * `v4_base_bound`: |V4| ≤ |C| − k
/// * `v4_refined_bound`: |V4| ≤ |C| − 3k + 2·n0 for ID,
///   |C| − 3k + n1 for OLD, |C| − 3k + n1 + 2·n0 for LD
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimChecks {
    pub v2_bound: bool,
    pub v3_bound: bool,
    pub v4_base_bound: bool,
    pub v4_refined_bound: bool,
}

impl ClaimChecks {
    pub fn all(&self) -> bool {
        self.v2_bound && self.v3_bound && self.v4_base_bound && self.v4_refined_bound
    }
}

pub fn check_claims(d: &CodeDecomposition) -> ClaimChecks {
    let code = d.v1.len() as i64;
    let (k, n0, n1) = (d.k as i64, d.n0 as i64, d.n1 as i64);
    let v2_limit = match d.kind {
        CodeKind::Ld => code,
        CodeKind::Id => code - n0,
        CodeKind::Old => code - n1,
    };
    let v4_refined_limit = match d.kind {
        CodeKind::Id => code - 3 * k + 2 * n0,
        CodeKind::Old => code - 3 * k + n1,
        CodeKind::Ld => code - 3 * k + n1 + 2 * n0,
    };
    ClaimChecks {
        v2_bound: d.v2.len() as i64 <= v2_limit,
        v3_bound: d.v3.len() as i64 <= k - 1,
        v4_base_bound: d.v4.len() as i64 <= code - k,
        v4_refined_bound: d.v4.len() as i64 <= v4_refined_limit,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn make_graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn code(g: &Graph, kind: CodeKind, members: &[usize]) -> Code {
        Code::new(kind, VertexSet::from_iter(g.n(), members.iter().copied()))
    }

    #[test]
    fn signatures_on_a_path() {
        let p3 = make_graph(3, &[(0, 1), (1, 2)]);
        let c = code(&p3, CodeKind::Id, &[0, 2]);
        assert_eq!(signature(&p3, &c, 0).to_vec(), vec![0]);
        assert_eq!(signature(&p3, &c, 1).to_vec(), vec![0, 2]);
        assert_eq!(signature(&p3, &c, 2).to_vec(), vec![2]);
        let open = code(&p3, CodeKind::Old, &[0, 2]);
        assert_eq!(signature(&p3, &open, 0).to_vec(), Vec::<usize>::new());
    }

    #[test]
    fn validate_small_examples() {
        let p3 = make_graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(validate(&p3, &code(&p3, CodeKind::Id, &[0, 2])), Ok(()));
        assert_eq!(
            validate(&p3, &code(&p3, CodeKind::Ld, &[1])),
            Err(Violation::UnseparatedPair {
                kind: CodeKind::Ld,
                u: 0,
                v: 2,
                signature: VertexSet::from_iter(3, [1]),
            })
        );
        let p2 = make_graph(2, &[(0, 1)]);
        assert_eq!(validate(&p2, &code(&p2, CodeKind::Old, &[0, 1])), Ok(()));
    }

    #[test]
    fn whole_vertex_set_matches_admissibility() {
        let k2 = make_graph(2, &[(0, 1)]);
        let all = code(&k2, CodeKind::Id, &[0, 1]);
        assert!(validate(&k2, &all).is_err(), "true twins are never separated");
        assert!(validate(&k2, &code(&k2, CodeKind::Old, &[0, 1])).is_ok());

        let p3 = make_graph(3, &[(0, 1), (1, 2)]);
        assert!(validate(&p3, &code(&p3, CodeKind::Id, &[0, 1, 2])).is_ok());
        assert!(validate(&p3, &code(&p3, CodeKind::Old, &[0, 1, 2])).is_err(), "false twins");
    }

    #[test]
    fn undominated_wins_over_unseparated_and_takes_least_vertex() {
        // Code {3} on P4 leaves both 0 and 1 undominated; 0 is reported.
        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            validate(&p4, &code(&p4, CodeKind::Id, &[3])),
            Err(Violation::Undominated { kind: CodeKind::Id, vertex: 0 })
        );
    }

    #[test]
    fn ld_exempts_code_vertices_from_separation() {
        // Both ends of P4 in the code: they see identical open signatures
        // but LD only separates vertices outside the code.
        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(validate(&p4, &code(&p4, CodeKind::Ld, &[1, 2])).is_ok());
        assert!(validate(&p4, &code(&p4, CodeKind::Old, &[1, 2])).is_err());
    }

    #[test]
    fn decompose_p3_ends() {
        let p3 = make_graph(3, &[(0, 1), (1, 2)]);
        let d = decompose(&p3, &code(&p3, CodeKind::Id, &[0, 2])).unwrap();
        assert_eq!(d.v2.to_vec(), Vec::<usize>::new());
        assert_eq!(d.v3.to_vec(), vec![1]);
        assert_eq!(d.v4.to_vec(), Vec::<usize>::new());
        assert_eq!((d.k, d.n0, d.n1), (2, 2, 0));
        // H: vertex 1 joined to both singleton components — one tree.
        assert_eq!(d.forest_components, 1);
        assert!(d.auxiliary_is_forest());
        let claims = check_claims(&d);
        assert!(claims.v2_bound && claims.v3_bound && claims.v4_base_bound);
    }

    #[test]
    fn decompose_extremal_id_path_code() {
        let g = families::extremal_id(4).unwrap();
        let c = code(&g, CodeKind::Id, &[0, 1, 2, 3]);
        let d = decompose(&g, &c).unwrap();
        // Pendants see exactly one code vertex; the window vertex sees two.
        assert_eq!(d.v2.to_vec(), vec![4, 5, 6, 7]);
        assert_eq!(d.v3.to_vec(), Vec::<usize>::new());
        assert_eq!(d.v4.to_vec(), vec![8]);
        assert_eq!((d.k, d.n0, d.n1), (1, 0, 2));
        let claims = check_claims(&d);
        assert!(claims.all(), "|V2| = |C| and |V4| = |C| - 3 are both tight");
    }

    #[test]
    fn decompose_rejects_invalid_codes() {
        let p3 = make_graph(3, &[(0, 1), (1, 2)]);
        assert!(decompose(&p3, &code(&p3, CodeKind::Id, &[0])).is_err());
    }

    #[test]
    fn json_shapes_are_stable() {
        let p3 = make_graph(3, &[(0, 1), (1, 2)]);
        let violation = validate(&p3, &code(&p3, CodeKind::Ld, &[1])).unwrap_err();
        assert_eq!(
            serde_json::to_string(&violation).unwrap(),
            r#"{"kind":"ld","witness_type":"unseparated_pair","vertices":[0,2],"sets":[[1],[1]]}"#
        );
        let undominated = validate(&p3, &code(&p3, CodeKind::Old, &[0])).unwrap_err();
        assert_eq!(
            serde_json::to_string(&undominated).unwrap(),
            r#"{"kind":"old","witness_type":"undominated","vertices":[0],"sets":[[]]}"#
        );
        let d = decompose(&p3, &code(&p3, CodeKind::Id, &[0, 2])).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"kind":"id","v1":[0,2],"v2":[],"v3":[1],"v4":[],"k":2,"n0":2,"n1":0,"forest_components":1}"#
        );
    }
}
