//! Boundary, alliance, domination and strong-defensive-alliance predicates.
//!
//! For a vertex `v` and a set `S`, the offensive conditions compare the
//! number of neighbors of `v` inside `S` with its degree:
//!
//! | condition                | quantified over | requirement            |
//! |--------------------------|-----------------|------------------------|
//! | offensive                | boundary of S   | `2 in(v) >= deg(v)+1`  |
//! | strong offensive         | boundary of S   | `2 in(v) >= deg(v)+2`  |
//! | global (strong) offensive| all of `V \ S`  | same thresholds        |
//! | k-dominating             | all of `V \ S`  | `in(v) >= k`           |
//! | strong defensive         | members of S    | `2 in(v) >= deg(v)`    |
//!
//! Conditions quantified over an empty domain hold vacuously, so `S = V`
//! satisfies every offensive predicate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Outcome of a predicate, with the first violating vertex in index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub holds: bool,
    pub violation: Option<Violation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub in_count: usize,
    pub out_count: usize,
}

impl PredicateReport {
    fn ok() -> Self {
        PredicateReport { holds: true, violation: None }
    }
}

/// Offensive strength: the extra support a vertex needs beyond half its degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Strength {
    Plain,
    Strong,
}

impl Strength {
    #[inline]
    fn slack(self) -> u32 {
        match self {
            Strength::Plain => 1,
            Strength::Strong => 2,
        }
    }
}

#[inline]
fn in_count(g: &Graph, v: usize, s: u64) -> u32 {
    (g.neighbor_mask(v) & s).count_ones()
}

#[inline]
fn attacked(g: &Graph, v: usize, s: u64, strength: Strength) -> bool {
    2 * in_count(g, v, s) >= g.degree(v) as u32 + strength.slack()
}

#[inline]
fn all_of(mut domain: u64, mut f: impl FnMut(usize) -> bool) -> bool {
    while domain != 0 {
        let v = domain.trailing_zeros() as usize;
        if !f(v) {
            return false;
        }
        domain &= domain - 1;
    }
    true
}

#[inline]
pub(crate) fn complement_mask(g: &Graph, s: u64) -> u64 {
    g.vertices().bits() & !s
}

#[inline]
pub(crate) fn boundary_mask(g: &Graph, s: u64) -> u64 {
    let mut nb = 0u64;
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        nb |= g.neighbor_mask(v);
        rest &= rest - 1;
    }
    nb & !s
}

#[inline]
pub(crate) fn offensive_mask(g: &Graph, s: u64, strength: Strength) -> bool {
    all_of(boundary_mask(g, s), |v| attacked(g, v, s, strength))
}

#[inline]
pub(crate) fn global_offensive_mask(g: &Graph, s: u64, strength: Strength) -> bool {
    all_of(complement_mask(g, s), |v| attacked(g, v, s, strength))
}

#[inline]
pub(crate) fn k_dominating_mask(g: &Graph, s: u64, k: usize) -> bool {
    all_of(complement_mask(g, s), |v| in_count(g, v, s) as usize >= k)
}

#[inline]
pub(crate) fn independent_mask(g: &Graph, s: u64) -> bool {
    all_of(s, |v| g.neighbor_mask(v) & s == 0)
}

#[inline]
pub(crate) fn dominating_mask(g: &Graph, s: u64) -> bool {
    all_of(complement_mask(g, s), |v| g.neighbor_mask(v) & s != 0)
}

#[inline]
pub(crate) fn strong_defensive_mask(g: &Graph, s: u64) -> bool {
    s != 0 && all_of(s, |v| 2 * in_count(g, v, s) >= g.degree(v) as u32)
}

/// Largest subset of `x` in which every member keeps half its degree inside;
/// all violators are removed together each round.
pub(crate) fn sda_residue_mask(g: &Graph, x: u64) -> u64 {
    let mut cur = x;
    loop {
        let mut drop = 0u64;
        let mut rest = cur;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if 2 * in_count(g, v, cur) < g.degree(v) as u32 {
                drop |= 1 << v;
            }
            rest &= rest - 1;
        }
        if drop == 0 {
            return cur;
        }
        cur &= !drop;
    }
}

fn first_violation(
    g: &Graph,
    domain: u64,
    s: u64,
    ok: impl Fn(usize) -> bool,
) -> PredicateReport {
    let mut rest = domain;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        if !ok(v) {
            let inside = in_count(g, v, s) as usize;
            return PredicateReport {
                holds: false,
                violation: Some(Violation {
                    vertex: v,
                    in_count: inside,
                    out_count: g.degree(v) - inside,
                }),
            };
        }
        rest &= rest - 1;
    }
    PredicateReport::ok()
}

fn require_nonempty(s: &VertexSet) -> Result<()> {
    if s.is_empty() {
        Err(Error::domain("alliances are non-empty vertex sets"))
    } else {
        Ok(())
    }
}

/// Vertices outside `s` adjacent to some vertex of `s`.
pub fn boundary(g: &Graph, s: &VertexSet) -> VertexSet {
    VertexSet::from_bits(g.order(), boundary_mask(g, s.bits()))
}

fn offensive_report(g: &Graph, s: &VertexSet, domain: u64, strength: Strength) -> PredicateReport {
    let bits = s.bits();
    first_violation(g, domain, bits, |v| attacked(g, v, bits, strength))
}

pub fn is_offensive_alliance(g: &Graph, s: &VertexSet) -> Result<PredicateReport> {
    require_nonempty(s)?;
    Ok(offensive_report(g, s, boundary_mask(g, s.bits()), Strength::Plain))
}

pub fn is_strong_offensive_alliance(g: &Graph, s: &VertexSet) -> Result<PredicateReport> {
    require_nonempty(s)?;
    Ok(offensive_report(g, s, boundary_mask(g, s.bits()), Strength::Strong))
}

pub fn is_global_offensive(g: &Graph, s: &VertexSet) -> Result<PredicateReport> {
    require_nonempty(s)?;
    Ok(offensive_report(g, s, complement_mask(g, s.bits()), Strength::Plain))
}

pub fn is_global_strong_offensive(g: &Graph, s: &VertexSet) -> Result<PredicateReport> {
    require_nonempty(s)?;
    Ok(offensive_report(g, s, complement_mask(g, s.bits()), Strength::Strong))
}

/// Every vertex outside `s` has at least `k` neighbors in `s`.
pub fn is_k_dominating(g: &Graph, s: &VertexSet, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::domain("k-domination needs k >= 1"));
    }
    require_nonempty(s)?;
    Ok(k_dominating_mask(g, s.bits(), k))
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    independent_mask(g, s.bits())
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    dominating_mask(g, s.bits())
}

pub fn is_strong_defensive_alliance(g: &Graph, s: &VertexSet) -> Result<bool> {
    require_nonempty(s)?;
    Ok(strong_defensive_mask(g, s.bits()))
}

/// Union of all strong defensive alliances contained in `x` (empty when
/// there are none).
pub fn sda_residue(g: &Graph, x: &VertexSet) -> VertexSet {
    VertexSet::from_bits(g.order(), sda_residue_mask(g, x.bits()))
}

/// `x` contains no strong defensive alliance.
pub fn is_sda_free(g: &Graph, x: &VertexSet) -> bool {
    sda_residue_mask(g, x.bits()) == 0
}

/// Predicates the exact solvers can minimize over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Offensive,
    StrongOffensive,
    GlobalOffensive,
    GlobalStrongOffensive,
    KDominating(usize),
    Dominating,
}

impl Predicate {
    #[inline]
    pub(crate) fn holds_mask(self, g: &Graph, s: u64) -> bool {
        match self {
            Predicate::Offensive => offensive_mask(g, s, Strength::Plain),
            Predicate::StrongOffensive => offensive_mask(g, s, Strength::Strong),
            Predicate::GlobalOffensive => global_offensive_mask(g, s, Strength::Plain),
            Predicate::GlobalStrongOffensive => global_offensive_mask(g, s, Strength::Strong),
            Predicate::KDominating(k) => k_dominating_mask(g, s, k),
            Predicate::Dominating => dominating_mask(g, s),
        }
    }

    /// Evaluates on a (non-empty) vertex set.
    pub fn holds(self, g: &Graph, s: &VertexSet) -> bool {
        !s.is_empty() && self.holds_mask(g, s.bits())
    }

    /// Closed under taking supersets.
    pub fn is_monotone(self) -> bool {
        !matches!(self, Predicate::Offensive | Predicate::StrongOffensive)
    }
}
