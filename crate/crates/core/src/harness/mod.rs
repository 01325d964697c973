//! Claim registry and corpus verification.
//!
//! Each [`Claim`] pairs a statement with a hypothesis filter. A corpus run
//! evaluates every selected claim on every graph and tallies
//! holds / violated / vacuous / skipped per claim. Vacuous means the claim's
//! antecedent is false on that graph; a claim that never reaches a definite
//! verdict over the whole corpus is reported vacuous rather than as holding.

mod claims;
mod corpus;
mod facts;
mod report;

pub use claims::{
    find_claim, out_of_scope, register_claims, CheckOptions, Claim, ClaimKind, Evidence, OutOfScope,
    Outcome, Property, Status,
};
pub use corpus::{CorpusGraph, CorpusSpec, Family, RandomSpec};
pub use facts::Fault;
pub use report::{run_corpus, ClaimSummary, Detail, Report, RunOptions, Verdict};
