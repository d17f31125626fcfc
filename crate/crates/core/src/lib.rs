//! Signed graphs, balance and switching, double domination, and explicit
//! double dominating sets for generalized Petersen graphs and I-graphs.
//!
//! Vertices are dense indices `0..n`. Family graphs use the fixed convention
//! `u_i -> i` and `v_i -> n + i`; see [`families`].
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: simple undirected graphs, edge cuts, cut subgraphs, cycle
//!   enumeration and cycle decompositions of even graphs.
//! * [`signed`]: signatures, cycle signs, balance certificates, switching.
//! * [`families`]: generators for `P(n,k)`, `I(n,j,k)` and unions of `K4`.
//! * [`domination`]: k-tuple and signed double domination verifiers, the
//!   exact minimum solvers and the half-size cut analysis.
//! * [`constructions`]: closed-form double dominating sets that stay valid
//!   under every signature.
//! * [`io`] and [`report`]: text formats and structured output.

pub mod constructions;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod report;
pub mod set;
pub mod signed;

pub use constructions::{CaseTag, ConstructionResult, UpperBound};
pub use domination::{Budget, DdsFailure, DdsVerdict, HalfDdsReport, SolveOptions, SolveResult};
pub use error::{Error, Result};
pub use families::{Family, FamilyGraph};
pub use graph::{CycleDecomposition, EdgeCut, Graph};
pub use set::VertexSet;
pub use signed::{BalanceCertificate, Sign, SignedGraph};
