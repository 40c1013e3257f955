//! Identification problems on graphs: identifying codes, locating-dominating
//! codes and open locating-dominating codes, with a focus on block graphs.
//!
//! The crate provides:
//!
//! * exact minimum-code solvers with deterministic certificates and a
//!   brute-force reference implementation ([`solver`]);
//! * code validation, the V1–V4 vertex partition relative to a code, and
//!   the part-size bound checks ([`codes`]);
//! * a constructive identifying-code builder for block graphs whose output
//!   never exceeds the number of maximal cliques ([`construct`]);
//! * generators for the graph families used by the bound checks
//!   ([`families`]);
//! * exhaustive enumeration of connected block graphs up to isomorphism
//!   ([`enumerate`]);
//! * a harness that sweeps graphs through every check and renders the
//!   results as JSON or CSV ([`harness`]);
//! * graph6 and edge-list parsing ([`io`]) on a small adjacency-set graph
//!   type ([`graph`]).
//!
//! The `examples/` directory exercises each piece end to end; the
//! `domcodes` binary wraps the same entry points as subcommands.

pub mod bitset;
pub mod codes;
pub mod construct;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod solver;

pub use bitset::VertexSet;
pub use codes::{Code, CodeKind};
pub use graph::Graph;
