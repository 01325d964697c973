use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{induced_is_one_factor, line_graph, Graph, VertexSet};
use crate::kernel::{self, sda_residue_mask, Predicate};
use crate::solvers::{SearchOptions, Witnessed};
use crate::spectral::{
    bounds_coro, bounds_cotainf, bounds_cotasup, bounds_eq5, bounds_eq6, bounds_otfen22, bounds_th1,
    bounds_thof, BoundsReport, DEFAULT_TOL,
};

use super::facts::{Facts, Fault};

/// What a vertex set in a verdict is claimed to be. Each property is checked
/// with the kernel predicates alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    GlobalOffensive,
    GlobalStrongOffensive,
    IndependentGlobalOffensive,
    IndependentGlobalStrongOffensive,
    IndependentOffensive,
    Independent,
    Dominating,
    KDominating(usize),
    SdaFree,
    /// Meets every strong defensive alliance.
    SdaCover,
    /// Independent, and the rest induces a 1-factor.
    IndependentOneFactorComplement,
    /// Independent with independent complement.
    BipartitionSide,
}

impl Property {
    pub fn check(self, g: &Graph, s: &VertexSet) -> bool {
        let holds = |r: Result<kernel::PredicateReport>| r.map(|r| r.holds).unwrap_or(false);
        let indep = kernel::is_independent(g, s);
        match self {
            Property::GlobalOffensive => holds(kernel::is_global_offensive(g, s)),
            Property::GlobalStrongOffensive => holds(kernel::is_global_strong_offensive(g, s)),
            Property::IndependentGlobalOffensive => indep && holds(kernel::is_global_offensive(g, s)),
            Property::IndependentGlobalStrongOffensive => {
                indep && holds(kernel::is_global_strong_offensive(g, s))
            }
            Property::IndependentOffensive => indep && holds(kernel::is_offensive_alliance(g, s)),
            Property::Independent => indep,
            Property::Dominating => kernel::is_dominating(g, s),
            Property::KDominating(k) => kernel::is_k_dominating(g, s, k).unwrap_or(false),
            Property::SdaFree => kernel::is_sda_free(g, s),
            Property::SdaCover => kernel::is_sda_free(g, &s.complement()),
            Property::IndependentOneFactorComplement => {
                indep && induced_is_one_factor(g, &s.complement())
            }
            Property::BipartitionSide => indep && kernel::is_independent(g, &s.complement()),
        }
    }
}

/// A labeled vertex set backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub label: String,
    pub property: Property,
    pub vertices: VertexSet,
    /// The set lives in the line graph rather than the graph itself.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub line_graph: bool,
}

impl Evidence {
    fn new(label: &str, property: Property, vertices: VertexSet) -> Self {
        Evidence { label: label.to_string(), property, vertices, line_graph: false }
    }

    fn on_line(mut self) -> Self {
        self.line_graph = true;
        self
    }

    /// Re-checks the property from scratch on `g`.
    pub fn reverify(&self, g: &Graph) -> bool {
        if self.line_graph {
            match line_graph(g) {
                Ok(l) => self.vertices.order() == l.graph.order() && self.property.check(&l.graph, &self.vertices),
                Err(_) => false,
            }
        } else {
            self.vertices.order() == g.order() && self.property.check(g, &self.vertices)
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space = if self.line_graph { "L:" } else { "" };
        write!(f, "{}={}{}", self.label, space, self.vertices)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Violated,
    /// The claim's antecedent is false on this graph.
    Vacuous,
    /// The hypothesis does not apply, or a solver cap was hit.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::Vacuous => "vacuous",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Bound,
    Equality,
    Iff,
    Implication,
}

/// Result of checking one claim on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub status: Status,
    pub evidence: Vec<Evidence>,
    pub note: Option<String>,
    /// A known mismatch worth reporting that does not count as a violation.
    pub discrepancy: Option<String>,
    pub band_flip: bool,
}

impl Outcome {
    fn of(status: Status) -> Self {
        Outcome { status, evidence: vec![], note: None, discrepancy: None, band_flip: false }
    }

    fn verdict(ok: bool) -> Self {
        Outcome::of(if ok { Status::Holds } else { Status::Violated })
    }

    fn vacuous(note: impl Into<String>) -> Self {
        Outcome::of(Status::Vacuous).note(note)
    }

    fn skipped(note: impl Into<String>) -> Self {
        Outcome::of(Status::Skipped).note(note)
    }

    fn with(mut self, e: Evidence) -> Self {
        self.evidence.push(e);
        self
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.note = Some(s.into());
        self
    }

    fn bounds(r: &BoundsReport, what: &str) -> Self {
        let mut o = Outcome::verdict(r.holds()).note(format!(
            "{what} = {}, bounds [{}, {}]",
            r.exact.map_or("?".to_string(), |x| x.to_string()),
            r.lower,
            r.upper
        ));
        o.band_flip = r.band_flip;
        o
    }
}

/// Options for checking claims on individual graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub search: SearchOptions,
    pub line_graph_cap: usize,
    pub fault: Option<Fault>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { search: SearchOptions::default().sequential(), line_graph_cap: 21, fault: None }
    }
}

type Hypothesis = for<'a, 'b> fn(&'a Facts<'b>) -> bool;
type Check = for<'a, 'b> fn(&'a Facts<'b>) -> Result<Outcome>;

/// A checkable statement together with the class of graphs it speaks about.
pub struct Claim {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    pub hypothesis: &'static str,
    applies: Hypothesis,
    check: Check,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

impl Claim {
    pub(crate) fn evaluate(&self, facts: &Facts<'_>) -> Outcome {
        if !(self.applies)(facts) {
            return Outcome::skipped(format!("hypothesis not met: {}", self.hypothesis));
        }
        match (self.check)(facts) {
            Ok(o) => o,
            Err(e @ Error::Inconsistent(_)) => Outcome::verdict(false).note(e.to_string()),
            Err(e) => Outcome::skipped(e.to_string()),
        }
    }

    /// Checks this claim on a single graph.
    pub fn check(&self, g: &Graph, opts: &CheckOptions) -> Outcome {
        if !g.is_connected() {
            return Outcome::skipped(Error::Disconnected.to_string());
        }
        self.evaluate(&Facts::new(g, opts.search, opts.line_graph_cap, opts.fault))
    }
}

/// A statement deliberately left outside the registry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutOfScope {
    pub id: &'static str,
    pub statement: &'static str,
    pub reason: &'static str,
}

pub fn out_of_scope() -> Vec<OutOfScope> {
    vec![OutOfScope {
        id: "REMARK-NPC",
        statement: "computational complexity of deciding gamma_o",
        reason: "a hardness statement has no finite instance check",
    }]
}

fn ev(label: &str, property: Property, w: &Witnessed) -> Evidence {
    Evidence::new(label, property, w.witness)
}

fn cubic(f: &Facts<'_>) -> bool {
    f.g.is_cubic()
}

fn has_edges(f: &Facts<'_>) -> bool {
    f.g.size() > 0
}

fn regular(f: &Facts<'_>) -> bool {
    f.g.regular_degree().is_some_and(|d| d > 0)
}

fn require_cap(f: &Facts<'_>) -> Result<()> {
    let cap = f.opts.alliance_cap;
    if f.n() > cap {
        Err(Error::CapExceeded { n: f.n(), cap })
    } else {
        Ok(())
    }
}

/// Masks of `k`-subsets of the vertex set, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k)
}

fn set(f: &Facts<'_>, bits: u64) -> VertexSet {
    VertexSet::from_bits(f.n(), bits)
}

fn t1_1(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_so()?;
    let r = bounds_th1(f.g, Some(w.size))?;
    Ok(Outcome::bounds(&r, "gamma_so").with(ev("gamma_so", Property::GlobalStrongOffensive, &w)))
}

fn t1_2(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_so()?;
    let (lhs, rhs) = (2 * w.size == f.n(), f.is_bipartite());
    let mut o = Outcome::verdict(lhs == rhs)
        .note(format!("gamma_so = {} (n = {}), bipartite = {rhs}", w.size, f.n()))
        .with(ev("gamma_so", Property::GlobalStrongOffensive, &w));
    if let Some(b) = f.bipartition() {
        o = o.with(Evidence::new("bipartition", Property::BipartitionSide, b.left));
    }
    Ok(o)
}

fn t1_3(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_so()?;
    let (lhs, rhs) = (4 * w.size == 3 * f.n(), f.n() == 4);
    Ok(Outcome::verdict(lhs == rhs)
        .note(format!("gamma_so = {} (n = {}), complete = {rhs}", w.size, f.n()))
        .with(ev("gamma_so", Property::GlobalStrongOffensive, &w)))
}

fn eq1(f: &Facts<'_>) -> Result<Outcome> {
    let d = f.g.regular_degree().unwrap_or(0);
    let (gd, a) = (f.gamma_delta()?, f.alpha()?);
    Ok(Outcome::verdict(gd.size + a.size == f.n())
        .note(format!("gamma_{d} = {}, alpha = {}, n = {}", gd.size, a.size, f.n()))
        .with(ev("gamma_delta", Property::KDominating(d), &gd))
        .with(ev("alpha", Property::Independent, &a)))
}

fn eq2(f: &Facts<'_>) -> Result<Outcome> {
    let (fast, a) = (f.gamma_so_fast()?, f.alpha()?);
    let (search, g3) = (f.gamma_so_search()?, f.gamma_delta()?);
    let ok = fast.size + a.size == f.n() && search.size == fast.size && g3.size == fast.size;
    Ok(Outcome::verdict(ok)
        .note(format!(
            "gamma_3 = {}, gamma_so = {} (search) / {} (identity), alpha = {}",
            g3.size, search.size, fast.size, a.size
        ))
        .with(ev("gamma_so", Property::GlobalStrongOffensive, &search))
        .with(ev("gamma_3", Property::KDominating(3), &g3))
        .with(ev("alpha", Property::Independent, &a)))
}

fn triangle_class(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_so()?;
    Ok(Outcome::verdict(3 * w.size == 2 * f.n())
        .note(format!("gamma_so = {}, n = {}", w.size, f.n()))
        .with(ev("gamma_so", Property::GlobalStrongOffensive, &w)))
}

fn t3(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_o()?;
    let r = bounds_thof(f.g, Some(w.size), DEFAULT_TOL)?;
    Ok(Outcome::bounds(&r, "gamma_o").with(ev("gamma_o", Property::GlobalOffensive, &w)))
}

fn c1(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.line_gamma_o()?;
    let r = bounds_coro(f.g, Some(w.size))?;
    Ok(Outcome::bounds(&r, "gamma_o(L)").with(ev("gamma_o(L)", Property::GlobalOffensive, &w).on_line()))
}

fn eigen_applies(f: &Facts<'_>) -> bool {
    match f.g.regular_degree() {
        Some(d) if d >= 3 => true,
        Some(2) => f.bipartition().is_some(),
        _ => false,
    }
}

fn eigen(f: &Facts<'_>) -> Result<Outcome> {
    let d = f.g.regular_degree().unwrap_or(0);
    let mu = f.line_mu()?;
    let expected = 2.0 * d as f64;
    Ok(Outcome::verdict((mu.value() - expected).abs() <= 1e-6)
        .note(format!("mu(L) = {:.9}, 2 delta = {expected}", mu.value())))
}

fn eq5(f: &Facts<'_>) -> Result<Outcome> {
    let (o, so) = (f.line_gamma_o()?, f.line_gamma_so()?);
    let r = bounds_eq5(f.g, Some(o.size))?;
    let mut out = Outcome::bounds(&r, "gamma_o(L)");
    if o.size != so.size {
        out.status = Status::Violated;
        out.note = Some(format!("gamma_o(L) = {} but gamma_so(L) = {}", o.size, so.size));
    }
    Ok(out
        .with(ev("gamma_o(L)", Property::GlobalOffensive, &o).on_line())
        .with(ev("gamma_so(L)", Property::GlobalStrongOffensive, &so).on_line()))
}

fn t4(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_o()?;
    let r = bounds_cotainf(f.g, Some(w.size))?;
    Ok(Outcome::bounds(&r, "gamma_o").with(ev("gamma_o", Property::GlobalOffensive, &w)))
}

fn odd_regular(f: &Facts<'_>) -> bool {
    f.g.regular_degree().is_some_and(|d| d % 2 == 1)
}

fn t5(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_o()?;
    let r = bounds_cotasup(f.g, Some(w.size))?;
    Ok(Outcome::bounds(&r, "gamma_o").with(ev("gamma_o", Property::GlobalOffensive, &w)))
}

fn eq6(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_o()?;
    let r = bounds_eq6(f.g, Some(w.size))?;
    Ok(Outcome::bounds(&r, "gamma_o").with(ev("gamma_o", Property::GlobalOffensive, &w)))
}

fn prop_2n5(f: &Facts<'_>) -> Result<Outcome> {
    let n = f.n();
    if (2 * n) % 5 != 0 {
        return Ok(Outcome::vacuous(format!("2n/5 is not an integer (n = {n})")));
    }
    require_cap(f)?;
    let mut count = 0;
    for m in subsets_of_size(n, 2 * n / 5) {
        if !Predicate::GlobalOffensive.holds_mask(f.g, m) {
            continue;
        }
        count += 1;
        if !kernel::is_independent(f.g, &set(f, m)) {
            return Ok(Outcome::verdict(false)
                .note("a global offensive alliance of size 2n/5 is not independent")
                .with(Evidence::new("alliance", Property::GlobalOffensive, set(f, m))));
        }
    }
    Ok(if count == 0 {
        Outcome::vacuous("no global offensive alliance of size 2n/5")
    } else {
        Outcome::verdict(true).note(format!("{count} alliances of size 2n/5, all independent"))
    })
}

fn lem1(f: &Facts<'_>) -> Result<Outcome> {
    require_cap(f)?;
    let full = f.g.vertices().bits();
    let mut count = 0u64;
    for m in 1..=full {
        if Predicate::GlobalOffensive.holds_mask(f.g, m) {
            count += 1;
            if sda_residue_mask(f.g, full & !m) != 0 {
                return Ok(Outcome::verdict(false)
                    .note("complement of a global offensive alliance contains a strong defensive alliance")
                    .with(Evidence::new("alliance", Property::GlobalOffensive, set(f, m))));
            }
        }
    }
    Ok(Outcome::verdict(true).note(format!("{count} global offensive alliances checked")))
}

fn odd_blocks(f: &Facts<'_>) -> bool {
    f.blocks().is_ok_and(|b| b.all_odd_cliques_or_cycles())
}

fn lem2(f: &Facts<'_>) -> Result<Outcome> {
    let p = f.phi0()?;
    let zeta = f.n() - p.size;
    Ok(Outcome::verdict(p.size <= zeta)
        .note(format!("phi0 = {}, zeta0 = {zeta}", p.size))
        .with(ev("phi0", Property::SdaFree, &p))
        .with(Evidence::new("zeta0", Property::SdaCover, p.witness.complement())))
}

fn t6_applies(f: &Facts<'_>) -> bool {
    cubic(f) && f.blocks().is_ok_and(|b| b.all_odd_cycles())
}

fn t6(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_o()?;
    Ok(Outcome::verdict(2 * w.size == f.n())
        .note(format!("gamma_o = {}, n = {}", w.size, f.n()))
        .with(ev("gamma_o", Property::GlobalOffensive, &w)))
}

fn cor_bip(f: &Facts<'_>) -> Result<Outcome> {
    let w = f.gamma_si()?;
    let rhs = f.is_bipartite();
    let o = Outcome::verdict(w.is_some() == rhs);
    Ok(match w {
        Some(w) => o
            .note(format!("independent strong alliance of size {}, bipartite = {rhs}", w.size))
            .with(ev("alliance", Property::IndependentGlobalStrongOffensive, &w)),
        None => o.note(format!("no independent strong alliance, bipartite = {rhs}")),
    })
}

fn with_gamma_i(f: &Facts<'_>, body: impl FnOnce(Witnessed) -> Result<Outcome>) -> Result<Outcome> {
    match f.gamma_i()? {
        None => Ok(Outcome::vacuous("no global independent offensive alliance")),
        Some(w) => Ok(body(w)?.with(ev("gamma_i", Property::IndependentGlobalOffensive, &w))),
    }
}

fn t7_1(f: &Facts<'_>) -> Result<Outcome> {
    with_gamma_i(f, |w| {
        let n = f.n();
        Ok(Outcome::verdict(5 * w.size >= 2 * n && 2 * w.size <= n)
            .note(format!("gamma_i = {}, bounds [{}, {}]", w.size, (2 * n) as f64 / 5.0, n as f64 / 2.0)))
    })
}

fn t7_2(f: &Facts<'_>) -> Result<Outcome> {
    with_gamma_i(f, |w| {
        let (lhs, rhs) = (2 * w.size == f.n(), f.is_bipartite());
        Ok(Outcome::verdict(lhs == rhs).note(format!("gamma_i = {} (n = {}), bipartite = {rhs}", w.size, f.n())))
    })
}

fn t7_3(f: &Facts<'_>) -> Result<Outcome> {
    with_gamma_i(f, |w| {
        let n = f.n();
        let lhs = 5 * w.size == 2 * n;
        let mut found = None;
        if n % 10 == 0 {
            require_cap(f)?;
            found = subsets_of_size(n, 2 * n / 5).map(|m| set(f, m)).find(|s| {
                kernel::is_independent(f.g, s) && induced_is_one_factor(f.g, &s.complement())
            });
        }
        let o = Outcome::verdict(lhs == found.is_some())
            .note(format!("gamma_i = {} (n = {n}), one-factor split exists = {}", w.size, found.is_some()));
        Ok(match found {
            Some(s) => o.with(Evidence::new("split", Property::IndependentOneFactorComplement, s)),
            None => o,
        })
    })
}

fn cor_alpha(f: &Facts<'_>) -> Result<Outcome> {
    let a = f.alpha()?;
    if 5 * a.size >= 2 * f.n() {
        return Ok(Outcome::vacuous(format!("alpha = {} is at least 2n/5", a.size)));
    }
    let gi = f.gamma_i()?;
    let o = Outcome::verdict(gi.is_none())
        .note(format!("alpha = {} < 2n/5", a.size))
        .with(ev("alpha", Property::Independent, &a));
    Ok(match gi {
        Some(w) => o.with(ev("gamma_i", Property::IndependentGlobalOffensive, &w)),
        None => o,
    })
}

fn t8(f: &Facts<'_>) -> Result<Outcome> {
    let (ai, gi) = (f.a_i()?, f.gamma_i()?);
    let r = bounds_otfen22(f.g, ai.map(|w| w.size), gi.map(|w| w.size))?;
    if !r.applicable {
        return Ok(Outcome::vacuous(r.note.clone().unwrap_or_else(|| "antecedent fails".into())));
    }
    let mut o = Outcome::bounds(&r, "a_i");
    if let Some(w) = ai {
        o = o.with(ev("a_i", Property::IndependentOffensive, &w));
    }
    Ok(o)
}

fn chain_bip_applies(f: &Facts<'_>) -> bool {
    cubic(f) && f.is_bipartite()
}

fn chain_bip(f: &Facts<'_>) -> Result<Outcome> {
    let n = f.n();
    let (go, gso, a) = (f.gamma_o()?, f.gamma_so()?, f.alpha()?);
    let gi = f.gamma_i()?;
    let half = |x: usize| 2 * x == n;
    let ok = gi.is_some_and(|w| half(w.size)) && half(go.size) && half(gso.size) && half(a.size);
    let gi_txt = gi.map_or("none".to_string(), |w| w.size.to_string());
    let mut o = Outcome::verdict(ok)
        .note(format!(
            "gamma_i = {gi_txt}, gamma_o = {}, gamma_so = {}, alpha = {}, n/2 = {}",
            go.size,
            gso.size,
            a.size,
            n as f64 / 2.0
        ))
        .with(ev("gamma_o", Property::GlobalOffensive, &go))
        .with(ev("alpha", Property::Independent, &a));
    let g = f.gamma()?;
    if !half(g.size) {
        o.discrepancy = Some(format!("domination number {} differs from n/2 = {}", g.size, n as f64 / 2.0));
        o = o.with(ev("gamma", Property::Dominating, &g));
    }
    Ok(o)
}

macro_rules! claim {
    ($id:literal, $kind:ident, $stmt:literal, $hyp:literal, $applies:expr, $check:expr) => {
        Claim {
            id: $id,
            kind: ClaimKind::$kind,
            statement: $stmt,
            hypothesis: $hyp,
            applies: $applies,
            check: $check,
        }
    };
}

static CLAIMS: [Claim; 24] = [
    claim!("T1.1", Bound, "n/2 <= gamma_so <= 3n/4", "cubic", cubic, t1_1),
    claim!("T1.2", Iff, "gamma_so = n/2 <=> bipartite", "cubic", cubic, t1_2),
    claim!("T1.3", Iff, "gamma_so = 3n/4 <=> K4", "cubic", cubic, t1_3),
    claim!("EQ1", Equality, "gamma_delta + alpha = n", "delta-regular, delta >= 1", regular, eq1),
    claim!("EQ2", Equality, "gamma_3 = gamma_so = n - alpha", "cubic", cubic, eq2),
    claim!(
        "TRIANGLE-CLASS",
        Implication,
        "vertex-disjoint triangle cover => gamma_so = 2n/3",
        "cubic, n >= 6, vertices partition into triangles",
        |f| cubic(f) && f.n() >= 6 && f.has_triangle_partition(),
        triangle_class
    ),
    claim!(
        "T3",
        Bound,
        "(n/mu) ceil((delta+1)/2) <= gamma_o <= n(2mu - delta)/(2mu)",
        "at least one edge",
        has_edges,
        t3
    ),
    claim!(
        "C1",
        Bound,
        "(n/4) ceil((2delta-1)/2) <= gamma_o(L) <= n(delta+1)/4",
        "delta-regular, delta >= 1",
        regular,
        c1
    ),
    claim!(
        "EIGEN",
        Equality,
        "Laplacian spectral radius of L equals 2 delta",
        "delta-regular with delta >= 3, or 2-regular bipartite",
        eigen_applies,
        eigen
    ),
    claim!("EQ5", Bound, "3n/4 <= gamma_so(L) = gamma_o(L) <= n", "cubic", cubic, eq5),
    claim!("T4", Bound, "degree lower bound <= gamma_o <= 2n/3", "at least one edge", has_edges, t4),
    claim!(
        "T5",
        Bound,
        "n(delta+1)/(3delta+1) <= gamma_o <= n/2",
        "regular of odd degree",
        odd_regular,
        t5
    ),
    claim!("EQ6", Bound, "2n/5 <= gamma_o <= n/2", "cubic", cubic, eq6),
    claim!(
        "PROP-2N5",
        Implication,
        "global offensive alliance of size 2n/5 => independent",
        "cubic",
        cubic,
        prop_2n5
    ),
    claim!(
        "LEM1",
        Implication,
        "X global offensive => V \\ X strong defensive alliance free",
        "connected",
        |_| true,
        lem1
    ),
    claim!(
        "LEM2",
        Bound,
        "phi0 <= zeta0",
        "every block an odd clique or an odd cycle",
        odd_blocks,
        lem2
    ),
    claim!("T6", Equality, "gamma_o = n/2", "cubic, every block an odd cycle", t6_applies, t6),
    claim!(
        "COR-BIP",
        Iff,
        "independent global strong offensive alliance exists <=> bipartite",
        "cubic",
        cubic,
        cor_bip
    ),
    claim!(
        "T7.1",
        Implication,
        "gamma_i exists => 2n/5 <= gamma_i <= n/2",
        "cubic",
        cubic,
        t7_1
    ),
    claim!(
        "T7.2",
        Implication,
        "gamma_i exists => (gamma_i = n/2 <=> bipartite)",
        "cubic",
        cubic,
        t7_2
    ),
    claim!(
        "T7.3",
        Implication,
        "gamma_i exists => (gamma_i = 2n/5 <=> independent X with V \\ X a 1-factor of size 3n/10)",
        "cubic",
        cubic,
        t7_3
    ),
    claim!(
        "COR-ALPHA",
        Implication,
        "alpha < 2n/5 => no global independent offensive alliance",
        "cubic",
        cubic,
        cor_alpha
    ),
    claim!(
        "T8",
        Implication,
        "a_i < gamma_i => (n+2)/4 <= a_i <= (n-2)/2",
        "cubic",
        cubic,
        t8
    ),
    claim!(
        "CHAIN-BIP",
        Equality,
        "gamma_i = gamma_o = gamma_so = alpha = n/2",
        "cubic, bipartite",
        chain_bip_applies,
        chain_bip
    ),
];

/// The full claim registry, in report order.
pub fn register_claims() -> &'static [Claim] {
    &CLAIMS
}

/// Looks a claim up by id, ignoring ASCII case.
pub fn find_claim(id: &str) -> Result<&'static Claim> {
    CLAIMS
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::domain(format!("unknown claim `{id}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn run(id: &str, g: &Graph) -> Outcome {
        let o = find_claim(id).unwrap().check(g, &CheckOptions::default());
        for e in &o.evidence {
            assert!(e.reverify(g), "{id}: evidence {e} does not re-verify");
        }
        o
    }

    #[test]
    fn registry_is_complete_and_unique() {
        let ids: Vec<_> = register_claims().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), 24);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert!(find_claim("chain-bip").is_ok());
        assert!(find_claim("T9").is_err());
    }

    #[test]
    fn t6_skips_prism() {
        let o = run("T6", &prism(3).unwrap());
        assert_eq!(o.status, Status::Skipped);
    }

    #[test]
    fn prop_2n5_on_petersen() {
        let o = run("PROP-2N5", &petersen());
        assert_eq!(o.status, Status::Holds, "{:?}", o.note);
    }

    #[test]
    fn cor_bip_examples() {
        let o = run("COR-BIP", &complete_bipartite(3, 3));
        assert_eq!(o.status, Status::Holds);
        assert_eq!(o.evidence[0].vertices.len(), 3);
        assert_eq!(run("COR-BIP", &petersen()).status, Status::Holds);
    }

    #[test]
    fn t8_on_petersen_is_decided_by_solver() {
        let g = petersen();
        let opts = SearchOptions::default();
        let ai = crate::solvers::a_i(&g, &opts).unwrap().map(|w| w.size);
        let gi = crate::solvers::gamma_i(&g, &opts).unwrap().map(|w| w.size);
        let o = run("T8", &g);
        if ai.is_some() && (gi.is_none() || ai < gi) {
            assert_eq!(o.status, Status::Holds);
        } else {
            assert_eq!(o.status, Status::Vacuous);
        }
    }

    #[test]
    fn chain_bip_flags_domination_on_k33() {
        let o = run("CHAIN-BIP", &complete_bipartite(3, 3));
        assert_eq!(o.status, Status::Holds);
        assert!(o.discrepancy.as_deref().unwrap().contains("domination number 2"));
    }

    #[test]
    fn triangle_class_on_truncated_k4() {
        let t = line_graph(&subdivide(&complete(4)).unwrap()).unwrap().graph;
        let o = run("TRIANGLE-CLASS", &t);
        assert_eq!(o.status, Status::Holds);
        assert_eq!(o.evidence[0].vertices.len(), 8);
    }

    #[test]
    fn fault_produces_reverifiable_violations() {
        let opts = CheckOptions { fault: Some(Fault::FlipBipartite), ..Default::default() };
        for g in [complete_bipartite(3, 3), petersen(), complete(4)] {
            for id in ["T1.2", "COR-BIP"] {
                let o = find_claim(id).unwrap().check(&g, &opts);
                assert_eq!(o.status, Status::Violated, "{id} on {:?}", g.name());
                assert!(!o.evidence.is_empty() || o.note.is_some());
                assert!(o.evidence.iter().all(|e| e.reverify(&g)));
            }
        }
    }

    #[test]
    fn eigen_skips_odd_cycles() {
        assert_eq!(run("EIGEN", &cycle(5)).status, Status::Skipped);
        assert_eq!(run("EIGEN", &cycle(6)).status, Status::Holds);
        assert_eq!(run("EIGEN", &petersen()).status, Status::Holds);
    }
}
