//! Exact minimum-code solver.
//!
//! Each code kind reduces to a hitting-set instance: one constraint per
//! domination requirement and one per separation requirement (a pair is
//! separated exactly when the code hits the symmetric difference of the two
//! observed neighborhoods; LD pairs may also be resolved by putting one of
//! the two vertices into the code). The instance is solved exactly by
//! branch and bound, then tightened to the lexicographically least optimal
//! certificate so equal inputs always produce byte-identical answers.
//!
//! `brute_force_gamma` solves the same problem by scanning subsets in
//! (cardinality, lexicographic) order. It is the reference the solver is
//! tested against, and it returns the same certificate the solver does.

use crate::bitset::VertexSet;
use crate::codes::{self, Code, CodeKind};
use crate::graph::Graph;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::collections::BTreeSet;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("no identifying code exists: {u} and {v} are true twins (N[{u}] = N[{v}])")]
    TrueTwins { u: usize, v: usize },
    #[error("no open locating-dominating code exists: {u} and {v} are false twins (N({u}) = N({v}))")]
    FalseTwins { u: usize, v: usize },
    #[error("no open locating-dominating code exists: vertex {v} is isolated")]
    IsolatedVertex { v: usize },
    #[error("instance contains an empty constraint; no hitting set exists")]
    Infeasible,
    #[error("graph has {n} vertices; exhaustive search is capped at {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// A set-cover style instance: choose a minimum subset of `0..universe`
/// meeting every constraint.
#[derive(Debug, Clone)]
pub struct HittingInstance {
    universe: usize,
    constraints: Vec<VertexSet>,
}

impl HittingInstance {
    /// Deduplicates and orders the constraints (by size, then contents), so
    /// instances built from the same graph are identical.
    pub fn new(universe: usize, constraints: impl IntoIterator<Item = VertexSet>) -> Self {
        let dedup: BTreeSet<VertexSet> = constraints.into_iter().collect();
        let mut constraints: Vec<VertexSet> = dedup.into_iter().collect();
        constraints.sort_by_key(|c| (c.len(), c.to_vec()));
        HittingInstance { universe, constraints }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn constraints(&self) -> &[VertexSet] {
        &self.constraints
    }
}

/// Reduces “find a minimum `kind` code of `g`” to hitting. Errs with the
/// obstructing witness when no code of that kind exists.
pub fn build_instance(g: &Graph, kind: CodeKind) -> Result<HittingInstance, SolveError> {
    let n = g.n();
    let twins = g.twin_report();
    match kind {
        CodeKind::Id => {
            if let Some(&(u, v)) = twins.true_twins.first() {
                return Err(SolveError::TrueTwins { u, v });
            }
        }
        CodeKind::Old => {
            if let Some(&v) = twins.isolated.first() {
                return Err(SolveError::IsolatedVertex { v });
            }
            if let Some(&(u, v)) = twins.false_twins.first() {
                return Err(SolveError::FalseTwins { u, v });
            }
        }
        CodeKind::Ld => {}
    }

    let observed = |u: usize| -> VertexSet {
        match kind {
            CodeKind::Id => g.closed_neighborhood(u),
            CodeKind::Ld | CodeKind::Old => g.open_neighborhood(u).clone(),
        }
    };
    let mut constraints = Vec::new();
    for u in 0..n {
        // Domination: LD dominates with closed neighborhoods even though it
        // separates with open ones.
        match kind {
            CodeKind::Id | CodeKind::Ld => constraints.push(g.closed_neighborhood(u)),
            CodeKind::Old => constraints.push(g.open_neighborhood(u).clone()),
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let mut diff = observed(u).symmetric_difference(&observed(v));
            if kind == CodeKind::Ld {
                // Putting u or v itself into the code also separates them.
                diff.insert(u);
                diff.insert(v);
            }
            debug_assert!(!diff.is_empty(), "admissibility check missed a twin pair");
            constraints.push(diff);
        }
    }
    Ok(HittingInstance::new(n, constraints))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSolution {
    pub set: VertexSet,
    /// Search nodes expanded across both phases; a determinism probe as
    /// much as a performance counter.
    pub nodes: u64,
}

struct Search<'a> {
    constraints: &'a [VertexSet],
    universe: usize,
    best_size: usize,
    best_set: VertexSet,
    nodes: u64,
}

impl<'a> Search<'a> {
    /// Greedy count of pairwise-disjoint unresolved constraints, each
    /// restricted to still-allowed vertices: any hitting set needs at least
    /// one distinct vertex per counted constraint. `usize::MAX` flags an
    /// unsatisfiable constraint.
    fn packing_bound(&self, chosen: &VertexSet, banned: &VertexSet) -> usize {
        let mut used = VertexSet::empty(self.universe);
        let mut count = 0;
        for c in self.constraints {
            if c.intersects(chosen) {
                continue;
            }
            let support = c.difference(banned);
            if support.is_empty() {
                return usize::MAX;
            }
            if !support.intersects(&used) {
                count += 1;
                used = used.union(&support);
            }
        }
        count
    }

    /// Smallest-support unresolved constraint, the branch target. `None`
    /// means everything is already hit.
    fn branch_target(&self, chosen: &VertexSet, banned: &VertexSet) -> Option<VertexSet> {
        let mut target: Option<VertexSet> = None;
        for c in self.constraints {
            if c.intersects(chosen) {
                continue;
            }
            let support = c.difference(banned);
            if target.as_ref().map_or(true, |t| support.len() < t.len()) {
                target = Some(support);
            }
        }
        target
    }

    /// Phase 1: tighten `best_size`/`best_set` to an optimum.
    fn optimize(&mut self, chosen: &mut VertexSet, banned: &mut VertexSet) {
        self.nodes += 1;
        let Some(target) = self.branch_target(chosen, banned) else {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best_set = chosen.clone();
            }
            return;
        };
        let bound = self.packing_bound(chosen, banned);
        if bound == usize::MAX || chosen.len() + bound >= self.best_size {
            return;
        }
        let mut newly_banned = Vec::new();
        for v in target.iter() {
            chosen.insert(v);
            self.optimize(chosen, banned);
            chosen.remove(v);
            banned.insert(v);
            newly_banned.push(v);
        }
        for v in newly_banned {
            banned.remove(v);
        }
    }

    /// Phase 2 probe: can `chosen` be completed with at most `budget`
    /// vertices, all ≥ `floor` and outside `banned`?
    fn completable(&mut self, chosen: &mut VertexSet, banned: &mut VertexSet, floor: usize, budget: usize) -> bool {
        self.nodes += 1;
        let below = VertexSet::from_iter(self.universe, 0..floor);
        let blocked = banned.union(&below);
        let Some(target) = self.branch_target(chosen, &blocked) else {
            return true;
        };
        let bound = self.packing_bound(chosen, &blocked);
        if bound == usize::MAX || bound > budget {
            return false;
        }
        let mut newly_banned = Vec::new();
        let mut found = false;
        for v in target.iter() {
            chosen.insert(v);
            found = self.completable(chosen, banned, floor, budget - 1);
            chosen.remove(v);
            if found {
                break;
            }
            banned.insert(v);
            newly_banned.push(v);
        }
        for v in newly_banned {
            banned.remove(v);
        }
        found
    }
}

/// Exact minimum hitting set, returned as the lexicographically least
/// optimal solution (as a sorted vertex list).
pub fn min_hitting_set(inst: &HittingInstance) -> Result<HittingSolution, SolveError> {
    if inst.constraints.iter().any(|c| c.is_empty()) {
        return Err(SolveError::Infeasible);
    }
    let n = inst.universe;

    // Greedy warm start keeps the first branch-and-bound incumbent tight.
    let mut greedy = VertexSet::empty(n);
    loop {
        let unhit: Vec<&VertexSet> = inst.constraints.iter().filter(|c| !c.intersects(&greedy)).collect();
        if unhit.is_empty() {
            break;
        }
        let best = (0..n)
            .max_by_key(|&v| (unhit.iter().filter(|c| c.contains(v)).count(), n - v))
            .expect("nonempty universe: empty constraints were rejected above");
        greedy.insert(best);
    }

    let mut search = Search {
        constraints: &inst.constraints,
        universe: n,
        best_size: greedy.len(),
        best_set: greedy,
        nodes: 0,
    };
    let mut chosen = VertexSet::empty(n);
    let mut banned = VertexSet::empty(n);
    search.optimize(&mut chosen, &mut banned);
    let gamma = search.best_size;

    // Phase 2: rebuild the optimum one vertex at a time, always committing
    // to the least vertex that still completes to size `gamma`.
    let mut result = VertexSet::empty(n);
    let mut floor = 0;
    for slot in 0..gamma {
        let spare = gamma - slot - 1;
        let mut placed = false;
        for v in floor..n {
            if n - v - 1 < spare {
                break;
            }
            let mut trial = result.clone();
            trial.insert(v);
            let mut banned = VertexSet::empty(n);
            if search.completable(&mut trial, &mut banned, v + 1, spare) {
                result.insert(v);
                floor = v + 1;
                placed = true;
                break;
            }
        }
        assert!(placed, "phase 1 optimum must be reconstructible");
    }
    // Once every constraint is hit, the remaining slots fill with the
    // smallest unused vertices: supersets of hitting sets still hit.
    debug_assert_eq!(result.len(), gamma);
    debug_assert!(inst.constraints.iter().all(|c| c.intersects(&result) || c.is_empty()));

    Ok(HittingSolution { set: result, nodes: search.nodes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: CodeKind,
    pub gamma: usize,
    pub certificate: Code,
    pub nodes: u64,
    pub micros: u128,
}

impl Serialize for SolveResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SolveResult", 5)?;
        s.serialize_field("kind", self.kind.name())?;
        s.serialize_field("gamma", &self.gamma)?;
        s.serialize_field("certificate", &self.certificate.members.to_vec())?;
        s.serialize_field("nodes", &self.nodes)?;
        s.serialize_field("micros", &(self.micros as u64))?;
        s.end()
    }
}

/// Minimum `kind` code number of `g` with a certificate (the lex-least
/// optimal code). The certificate is re-validated before returning.
pub fn gamma(g: &Graph, kind: CodeKind) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let inst = build_instance(g, kind)?;
    let solution = min_hitting_set(&inst)?;
    let certificate = Code::new(kind, solution.set);
    assert_eq!(
        codes::validate(g, &certificate),
        Ok(()),
        "solver produced a set that is not a valid {} code",
        kind
    );
    Ok(SolveResult {
        kind,
        gamma: certificate.len(),
        certificate,
        nodes: solution.nodes,
        micros: start.elapsed().as_micros(),
    })
}

const BRUTE_FORCE_LIMIT: usize = 20;

/// Reference solver: scans all vertex subsets in (size, lexicographic)
/// order and validates each directly against the definitions, with none of
/// the hitting-set machinery. Capped at 20 vertices.
pub fn brute_force_gamma(g: &Graph, kind: CodeKind) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    // Same non-existence witnesses as the real solver.
    let twins = g.twin_report();
    match kind {
        CodeKind::Id => {
            if let Some(&(u, v)) = twins.true_twins.first() {
                return Err(SolveError::TrueTwins { u, v });
            }
        }
        CodeKind::Old => {
            if let Some(&v) = twins.isolated.first() {
                return Err(SolveError::IsolatedVertex { v });
            }
            if let Some(&(u, v)) = twins.false_twins.first() {
                return Err(SolveError::FalseTwins { u, v });
            }
        }
        CodeKind::Ld => {}
    }

    let mut nodes = 0u64;
    for size in 0..=n {
        let mut indices: Vec<usize> = (0..size).collect();
        loop {
            nodes += 1;
            let candidate = Code::new(kind, VertexSet::from_iter(n, indices.iter().copied()));
            if codes::validate(g, &candidate).is_ok() {
                return Ok(SolveResult {
                    kind,
                    gamma: size,
                    certificate: candidate,
                    nodes,
                    micros: start.elapsed().as_micros(),
                });
            }
            if !next_combination(&mut indices, n) {
                break;
            }
        }
    }
    unreachable!("the whole vertex set is a valid code once admissibility holds")
}

/// Advances `indices` to the next k-subset of `0..n` in lexicographic
/// order; false when the current subset is the last one.
pub(crate) fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    for i in (0..k).rev() {
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
