//! Exact computation of the alliance, domination and independence
//! invariants by pruned exhaustive search.

mod analysis;
mod independence;
mod sda;
mod search;

pub use analysis::{analyze, AllianceAnalysis, Entry, InvariantId, Method};
pub use independence::{gamma_so_cubic_fast, independence_number};
pub use sda::{phi0, zeta0};
pub use search::{
    a_i, a_o, a_so, gamma, gamma_i, gamma_k, gamma_o, gamma_so, i_gamma, min_satisfying, Query,
    SearchOptions, Witnessed,
};
