//! The bound-check suite: eleven named checks per graph, a sweep driver
//! over the enumerated block graphs and the generated families, and JSON /
//! CSV renderers for the results.
//!
//! Checks gate themselves: a check whose hypotheses a graph does not meet
//! records a skip with a machine-readable reason rather than failing.
//! Violations of the strict `double_ld` inequalities are recorded as
//! findings (a skip whose reason starts with `finding:`), not failures.
//! Everything else that fails is a hard failure carrying the graph6 form
//! of the witness graph. Reports contain no timing data, so equal inputs
//! render byte-identical output.

use crate::codes::{self, Code, CodeKind};
use crate::construct;
use crate::enumerate::{self, CANON_LIMIT, ENUMERATE_LIMIT};
use crate::families;
use crate::graph::Graph;
use crate::io;
use crate::solver;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail { witness: String, detail: String },
    Skip { reason: String },
}

impl CheckStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail { .. })
    }

    pub fn letter(&self) -> char {
        match self {
            CheckStatus::Pass => 'P',
            CheckStatus::Fail { .. } => 'F',
            CheckStatus::Skip { .. } => 'S',
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        CheckStatus::Skip { reason: reason.into() }
    }
}

/// Status of every named check, in report order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSet {
    /// An LD-code is never larger than an ID- or OLD-code.
    pub ld_min: CheckStatus,
    /// Strictly: γ^ID < 2γ^LD and γ^OLD < 2γ^LD. Violations are findings.
    pub double_ld: CheckStatus,
    /// Connected block graph with n ≥ 2 has fewer maximal cliques than
    /// vertices.
    pub nq_lt_n: CheckStatus,
    /// Identifiable connected block graph: n ≤ 2n_Q − 1.
    pub n_le_2nq: CheckStatus,
    /// Identifiable block graph: γ^ID ≤ n_Q.
    pub id_ub: CheckStatus,
    /// Connected block graph admitting an OLD-code, other than P2 and P4:
    /// γ^OLD ≤ n − 1.
    pub old_ub: CheckStatus,
    /// Block graph: γ^LD ≤ n_Q when identifiable, else γ^LD ≤ n − 1.
    pub ld_ub: CheckStatus,
    /// Block graph: γ^ID, γ^OLD ≥ n/3 + 1 and γ^LD ≥ (n+1)/3.
    pub lb_n: CheckStatus,
    /// Block graph: γ^ID, γ^OLD ≥ 3(n_Q+2)/7, γ^LD ≥ (n_Q+2)/3, and
    /// γ^OLD ≥ (n_Q+3)/2.
    pub lb_nq: CheckStatus,
    /// Identifiable connected block graph: the constructive builder
    /// returns a valid ID-code of size ≤ n_Q.
    pub construct_ok: CheckStatus,
    /// Every minimum code's V1–V4 decomposition satisfies the part-size
    /// bounds, refined forms included.
    pub claims: CheckStatus,
}

pub const CHECK_NAMES: [&str; 11] = [
    "ld_min",
    "double_ld",
    "nq_lt_n",
    "n_le_2nq",
    "id_ub",
    "old_ub",
    "ld_ub",
    "lb_n",
    "lb_nq",
    "construct_ok",
    "claims",
];

impl CheckSet {
    pub fn statuses(&self) -> [&CheckStatus; 11] {
        [
            &self.ld_min,
            &self.double_ld,
            &self.nq_lt_n,
            &self.n_le_2nq,
            &self.id_ub,
            &self.old_ub,
            &self.ld_ub,
            &self.lb_n,
            &self.lb_nq,
            &self.construct_ok,
            &self.claims,
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// Canonical graph6 when the graph is small enough to canonicalize,
    /// otherwise its graph6 form as given.
    pub canon: String,
    pub n: usize,
    pub nq: usize,
    pub connected: bool,
    pub identifiable: bool,
    pub old_admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_id: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_ld: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_old: Option<usize>,
    pub checks: CheckSet,
}

/// Knobs for failure-path testing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Lower the `id_ub` bound from n_Q to n_Q − 1, so any graph with
    /// γ^ID = n_Q (a star, for instance) flips the check to a failure.
    /// Exists to prove the failure path and exit code work end to end.
    pub corrupt_id_bound: bool,
}

pub fn run_checks(g: &Graph) -> CheckReport {
    run_checks_with(g, CheckOptions::default())
}

pub fn run_checks_with(g: &Graph, opts: CheckOptions) -> CheckReport {
    let n = g.n();
    assert!(n >= 1, "checks need at least one vertex");
    let nq = g.count_maximal_cliques();
    let connected = g.is_connected();
    let block = g.is_block_graph();
    let identifiable = g.is_identifiable();
    let old_admissible = g.is_old_admissible();
    let canon = if n <= CANON_LIMIT {
        enumerate::canonical_form(g).to_graph6()
    } else {
        io::emit_graph6(g)
    };

    let gamma_of = |kind: CodeKind| {
        solver::gamma(g, kind)
            .map(|r| r.gamma)
            .unwrap_or_else(|e| panic!("admissibility was checked first: {}", e))
    };
    let gamma_id = identifiable.then(|| gamma_of(CodeKind::Id));
    let gamma_ld = Some(gamma_of(CodeKind::Ld));
    let gamma_old = old_admissible.then(|| gamma_of(CodeKind::Old));
    let ld = gamma_ld.expect("locating-dominating codes always exist");

    let fail = |detail: String| CheckStatus::Fail { witness: canon.clone(), detail };
    let not_block = || CheckStatus::skip("not-applicable: not a block graph");
    let not_connected = || CheckStatus::skip("not-applicable: not connected");
    let no_id = || CheckStatus::skip("no-code: true twins rule out identifying codes");
    let no_old = || CheckStatus::skip("no-code: no open locating-dominating code exists");

    // γ^LD ≤ min(γ^ID, γ^OLD): any ID- or OLD-code is an LD-code.
    let ld_min = if gamma_id.is_none() && gamma_old.is_none() {
        CheckStatus::skip("no-code: neither comparison partner exists")
    } else if gamma_id.is_some_and(|id| ld > id) {
        fail(format!("gamma_ld = {} exceeds gamma_id = {}", ld, gamma_id.unwrap()))
    } else if gamma_old.is_some_and(|old| ld > old) {
        fail(format!("gamma_ld = {} exceeds gamma_old = {}", ld, gamma_old.unwrap()))
    } else {
        CheckStatus::Pass
    };

    // Strict upper companions: γ^ID < 2γ^LD and γ^OLD < 2γ^LD. Violations
    // are findings rather than failures.
    let double_ld = if gamma_id.is_none() && gamma_old.is_none() {
        CheckStatus::skip("no-code: neither comparison partner exists")
    } else {
        let mut findings = Vec::new();
        if let Some(id) = gamma_id {
            if id >= 2 * ld {
                findings.push(format!("gamma_id = {} is not below 2*gamma_ld = {}", id, 2 * ld));
            }
        }
        if let Some(old) = gamma_old {
            if old >= 2 * ld {
                findings.push(format!("gamma_old = {} is not below 2*gamma_ld = {}", old, 2 * ld));
            }
        }
        if findings.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::skip(format!("finding: {}", findings.join("; ")))
        }
    };

    let nq_lt_n = if !block {
        not_block()
    } else if !connected {
        not_connected()
    } else if n < 2 {
        CheckStatus::skip("not-applicable: n < 2")
    } else if nq < n {
        CheckStatus::Pass
    } else {
        fail(format!("n_Q = {} is not below n = {}", nq, n))
    };

    let n_le_2nq = if !block {
        not_block()
    } else if !connected {
        not_connected()
    } else if !identifiable {
        no_id()
    } else if n <= 2 * nq - 1 {
        CheckStatus::Pass
    } else {
        fail(format!("n = {} exceeds 2*n_Q - 1 = {}", n, 2 * nq - 1))
    };

    let id_ub = if !block {
        not_block()
    } else if !identifiable {
        no_id()
    } else {
        let (bound, label) = if opts.corrupt_id_bound {
            (nq.saturating_sub(1), " (bound corrupted by failure injection)")
        } else {
            (nq, "")
        };
        let id = gamma_id.expect("identifiable graphs have an identifying code");
        if id <= bound {
            CheckStatus::Pass
        } else {
            fail(format!("gamma_id = {} exceeds {}{}", id, bound, label))
        }
    };

    let old_ub = if !block {
        not_block()
    } else if !connected {
        not_connected()
    } else if !old_admissible {
        no_old()
    } else if is_path_on(g, 2) || is_path_on(g, 4) {
        CheckStatus::skip("exception graph")
    } else {
        let old = gamma_old.expect("admissibility was checked");
        if old <= n - 1 {
            CheckStatus::Pass
        } else {
            fail(format!("gamma_old = {} exceeds n - 1 = {}", old, n - 1))
        }
    };

    let ld_ub = if !block {
        not_block()
    } else if identifiable {
        if ld <= nq {
            CheckStatus::Pass
        } else {
            fail(format!("gamma_ld = {} exceeds n_Q = {}", ld, nq))
        }
    } else if ld <= n - 1 {
        // Twins force n ≥ 2, so the relaxed bound n − 1 is at least 1.
        CheckStatus::Pass
    } else {
        fail(format!("gamma_ld = {} exceeds n - 1 = {}", ld, n - 1))
    };

    // Lower bounds in n, compared cross-multiplied: γ ≥ n/3 + 1 becomes
    // 3γ ≥ n + 3, and γ^LD ≥ (n+1)/3 becomes 3γ ≥ n + 1.
    let lb_n = if !block {
        not_block()
    } else {
        let mut broken = Vec::new();
        if let Some(id) = gamma_id {
            if 3 * id < n + 3 {
                broken.push(format!("3*gamma_id = {} < n + 3 = {}", 3 * id, n + 3));
            }
        }
        if let Some(old) = gamma_old {
            if 3 * old < n + 3 {
                broken.push(format!("3*gamma_old = {} < n + 3 = {}", 3 * old, n + 3));
            }
        }
        if 3 * ld < n + 1 {
            broken.push(format!("3*gamma_ld = {} < n + 1 = {}", 3 * ld, n + 1));
        }
        if broken.is_empty() {
            CheckStatus::Pass
        } else {
            fail(broken.join("; "))
        }
    };

    // Lower bounds in n_Q: γ^ID, γ^OLD ≥ 3(n_Q+2)/7 become 7γ ≥ 3(n_Q+2);
    // γ^LD ≥ (n_Q+2)/3 becomes 3γ ≥ n_Q + 2; γ^OLD ≥ (n_Q+3)/2 becomes
    // 2γ ≥ n_Q + 3.
    let lb_nq = if !block {
        not_block()
    } else {
        let mut broken = Vec::new();
        if let Some(id) = gamma_id {
            if 7 * id < 3 * (nq + 2) {
                broken.push(format!("7*gamma_id = {} < 3*(n_Q + 2) = {}", 7 * id, 3 * (nq + 2)));
            }
        }
        if let Some(old) = gamma_old {
            if 7 * old < 3 * (nq + 2) {
                broken.push(format!("7*gamma_old = {} < 3*(n_Q + 2) = {}", 7 * old, 3 * (nq + 2)));
            }
            if 2 * old < nq + 3 {
                broken.push(format!("2*gamma_old = {} < n_Q + 3 = {}", 2 * old, nq + 3));
            }
        }
        if 3 * ld < nq + 2 {
            broken.push(format!("3*gamma_ld = {} < n_Q + 2 = {}", 3 * ld, nq + 2));
        }
        if broken.is_empty() {
            CheckStatus::Pass
        } else {
            fail(broken.join("; "))
        }
    };

    let construct_ok = if !block {
        not_block()
    } else if !connected {
        not_connected()
    } else if !identifiable {
        no_id()
    } else {
        match construct::id_code_at_most_nq(g) {
            Ok(built) => {
                if let Err(violation) = codes::validate(g, &built.code) {
                    fail(format!("constructed set is invalid: {}", violation))
                } else if built.code.len() > nq {
                    fail(format!("constructed code has {} members, n_Q = {}", built.code.len(), nq))
                } else {
                    CheckStatus::Pass
                }
            }
            Err(e) => fail(format!("construction aborted: {}", e)),
        }
    };

    let claims = if !block {
        not_block()
    } else if !connected {
        not_connected()
    } else {
        let mut detail = None;
        let optima = [
            (CodeKind::Id, gamma_id),
            (CodeKind::Ld, gamma_ld),
            (CodeKind::Old, gamma_old),
        ];
        'kinds: for (kind, gamma) in optima {
            let Some(gamma) = gamma else { continue };
            for code in minimum_codes(g, kind, gamma) {
                let d = codes::decompose(g, &code).expect("minimum codes are valid");
                let result = codes::check_claims(&d);
                if !result.all() {
                    let mut broken = Vec::new();
                    if !result.v2_bound {
                        broken.push("v2_bound");
                    }
                    if !result.v3_bound {
                        broken.push("v3_bound");
                    }
                    if !result.v4_base_bound {
                        broken.push("v4_base_bound");
                    }
                    if !result.v4_refined_bound {
                        broken.push("v4_refined_bound");
                    }
                    detail = Some(format!(
                        "{} minimum code {:?} violates {}",
                        kind,
                        code.members.to_vec(),
                        broken.join(", ")
                    ));
                    break 'kinds;
                }
            }
        }
        match detail {
            None => CheckStatus::Pass,
            Some(detail) => fail(detail),
        }
    };

    CheckReport {
        canon,
        n,
        nq,
        connected,
        identifiable,
        old_admissible,
        gamma_id,
        gamma_ld,
        gamma_old,
        checks: CheckSet {
            ld_min,
            double_ld,
            nq_lt_n,
            n_le_2nq,
            id_ub,
            old_ub,
            ld_ub,
            lb_n,
            lb_nq,
            construct_ok,
            claims,
        },
    }
}

fn is_path_on(g: &Graph, n: usize) -> bool {
    g.n() == n && enumerate::canonical_form(g) == enumerate::canonical_form(&families::path(n).unwrap())
}

/// Every valid `kind` code of exactly the optimal size, in lexicographic
/// order. `gamma` must be the optimum for the result to actually be the
/// minimum codes; any size works for enumerating valid codes of that size.
pub fn minimum_codes(g: &Graph, kind: CodeKind, gamma: usize) -> Vec<Code> {
    let n = g.n();
    let mut found = Vec::new();
    let mut indices: Vec<usize> = (0..gamma).collect();
    if gamma > n {
        return found;
    }
    loop {
        let candidate = Code::new(kind, crate::bitset::VertexSet::from_iter(n, indices.iter().copied()));
        if codes::validate(g, &candidate).is_ok() {
            found.push(candidate);
        }
        if !solver::next_combination(&mut indices, n) {
            return found;
        }
    }
}

// ---------------------------------------------------------------------------
// Sweep driver
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Sweep every connected block graph on 2..=max_n vertices.
    pub max_n: usize,
    /// Also check the parameterized families.
    pub include_families: bool,
    /// Corrupt the `id_ub` bound to exercise the failure path.
    pub inject_failure: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 8, include_families: false, inject_failure: false }
    }
}

/// The family instances swept alongside the enumerated graphs: the shapes
/// the bounds are tight on, the documented counterexample scopes, and a
/// few seeded random block graphs.
pub fn family_roster() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for k in 3..=6 {
        graphs.push(families::star(k).unwrap());
    }
    for k in 2..=12 {
        graphs.push(families::path(k).unwrap());
    }
    for k in 3..=6 {
        graphs.push(families::clique(k).unwrap());
    }
    for k in 3..=8 {
        graphs.push(families::thin_spider(k).unwrap());
    }
    for k in 4..=8 {
        graphs.push(families::extremal_id(k).unwrap());
    }
    for k in 5..=7 {
        graphs.push(families::extremal_old(k).unwrap());
    }
    for k in 2..=7 {
        graphs.push(families::extremal_ld(k).unwrap());
    }
    graphs.push(families::path_power(6, 2).unwrap());
    for k in 2..=3 {
        graphs.push(families::split_hypercube(k).unwrap());
    }
    for seed in 1..=3 {
        graphs.push(families::random_block_graph(4, 4, seed).unwrap());
    }
    graphs
}

/// Runs the checks over the enumerated universe (and the families when
/// asked). Graphs are checked in parallel; the report order — enumeration
/// order, then roster order — does not depend on scheduling.
pub fn verify(opts: &VerifyOptions) -> Vec<CheckReport> {
    assert!(
        (2..=ENUMERATE_LIMIT).contains(&opts.max_n),
        "sweeps cover 2..=9 vertices, got max_n = {}",
        opts.max_n
    );
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=opts.max_n {
        graphs.extend(enumerate::enumerate_connected_block_graphs(n));
    }
    if opts.include_families {
        graphs.extend(family_roster());
    }
    let check_opts = CheckOptions { corrupt_id_bound: opts.inject_failure };
    graphs.par_iter().map(|g| run_checks_with(g, check_opts)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifySummary {
    pub graphs: usize,
    pub passes: usize,
    pub failures: usize,
    pub skips: usize,
}

pub fn summarize(reports: &[CheckReport]) -> VerifySummary {
    let mut summary = VerifySummary { graphs: reports.len(), passes: 0, failures: 0, skips: 0 };
    for report in reports {
        for status in report.checks.statuses() {
            match status {
                CheckStatus::Pass => summary.passes += 1,
                CheckStatus::Fail { .. } => summary.failures += 1,
                CheckStatus::Skip { .. } => summary.skips += 1,
            }
        }
    }
    summary
}

/// Pretty-printed JSON array of reports, newline-terminated.
pub fn render_json(reports: &[CheckReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize infallibly");
    out.push('\n');
    out
}

/// CSV with one row per graph: identity and gamma columns, then one
/// status letter per check.
pub fn render_csv(reports: &[CheckReport]) -> String {
    let mut out = String::from("canon,n,nq,identifiable,old_admissible,gamma_id,gamma_ld,gamma_old");
    for name in CHECK_NAMES {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}",
            r.canon,
            r.n,
            r.nq,
            r.identifiable,
            r.old_admissible,
            opt(r.gamma_id),
            opt(r.gamma_ld),
            opt(r.gamma_old),
        ));
        for status in r.checks.statuses() {
            out.push(',');
            out.push(status.letter());
        }
        out.push('\n');
    }
    out
}
