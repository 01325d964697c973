//! Closed-form bounds on alliance numbers, evaluated against exact values.
//!
//! Bounds that are rational in the graph parameters are computed with exact
//! rationals (ceilings included). Only the bound involving the Laplacian
//! spectral radius uses floating point, and then only when the radius could
//! not be certified as an integer. In that case each side is also evaluated
//! at `mu + 10 tol`; if the verdict differs between the two, `band_flip` is
//! set.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use super::radius::{spectral_radius, SpectralRadius, DEFAULT_MAX_ITER};
use crate::error::{Error, Result};
use crate::graph::{line_graph, Graph};
use crate::solvers::{self, SearchOptions};

type Q = Ratio<i64>;

fn q(n: usize) -> Q {
    Q::from_integer(n as i64)
}

/// One side of a bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundValue {
    pub value: f64,
    /// Exact rational value, when the bound is rational.
    #[serde(serialize_with = "ser_ratio")]
    pub exact: Option<Q>,
    /// Value at the lenient end of the spectral tolerance band.
    pub lenient: Option<f64>,
}

fn ser_ratio<S: Serializer>(r: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) if *r.denom() == 1 => s.collect_str(r.numer()),
        Some(r) => s.collect_str(&format_args!("{}/{}", r.numer(), r.denom())),
        None => s.serialize_none(),
    }
}

impl BoundValue {
    fn rational(r: Q) -> Self {
        BoundValue { value: r.to_f64().unwrap_or(f64::NAN), exact: Some(r), lenient: None }
    }

    fn real(value: f64, lenient: f64) -> Self {
        BoundValue { value, exact: None, lenient: Some(lenient) }
    }

    /// `(nominal, lenient)` verdicts for `self <= x`.
    fn at_most(&self, x: usize) -> (bool, bool) {
        match self.exact {
            Some(r) => {
                let ok = r <= q(x);
                (ok, ok)
            }
            None => (self.value <= x as f64, self.lenient.unwrap_or(self.value) <= x as f64),
        }
    }

    /// `(nominal, lenient)` verdicts for `self >= x`.
    fn at_least(&self, x: usize) -> (bool, bool) {
        match self.exact {
            Some(r) => {
                let ok = r >= q(x);
                (ok, ok)
            }
            None => (self.value >= x as f64, self.lenient.unwrap_or(self.value) >= x as f64),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Some(r) => write!(f, "{}/{} ({:.4})", r.numer(), r.denom(), self.value),
            None => write!(f, "{:.6}", self.value),
        }
    }
}

/// Evaluation of one bound on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub claim_id: String,
    /// False when the bound's own side condition fails (the `a_i < gamma_i`
    /// premise of `otfen22`); both `*_ok` flags are then true.
    pub applicable: bool,
    pub lower: BoundValue,
    pub upper: BoundValue,
    pub exact: Option<usize>,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub band_flip: bool,
    pub parameters: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundsReport {
    fn new(
        id: BoundId,
        lower: BoundValue,
        upper: BoundValue,
        exact: Option<usize>,
        parameters: BTreeMap<String, f64>,
    ) -> Self {
        let (mut lower_ok, mut upper_ok, mut band_flip) = (true, true, false);
        if let Some(x) = exact {
            let (lo_nom, lo_len) = lower.at_most(x);
            let (up_nom, up_len) = upper.at_least(x);
            lower_ok = lo_nom;
            upper_ok = up_nom;
            band_flip = lo_nom != lo_len || up_nom != up_len;
        }
        BoundsReport {
            claim_id: id.to_string(),
            applicable: true,
            lower,
            upper,
            exact,
            lower_ok,
            upper_ok,
            band_flip,
            parameters,
            note: None,
        }
    }

    fn rational(id: BoundId, lower: Q, upper: Q, exact: Option<usize>, params: Params) -> Self {
        BoundsReport::new(id, BoundValue::rational(lower), BoundValue::rational(upper), exact, params.0)
    }

    pub fn holds(&self) -> bool {
        self.lower_ok && self.upper_ok
    }

    /// Lower bound equals the exact value.
    pub fn lower_tight(&self) -> bool {
        matches!((self.exact, self.lower.exact), (Some(x), Some(r)) if r == q(x))
    }

    /// Upper bound equals the exact value.
    pub fn upper_tight(&self) -> bool {
        matches!((self.exact, self.upper.exact), (Some(x), Some(r)) if r == q(x))
    }
}

#[derive(Default)]
struct Params(BTreeMap<String, f64>);

impl Params {
    fn with(mut self, key: &str, v: impl Into<f64>) -> Self {
        self.0.insert(key.to_string(), v.into());
        self
    }
}

fn require_cubic(g: &Graph) -> Result<()> {
    g.require_connected()?;
    if g.is_cubic() {
        Ok(())
    } else {
        Err(Error::domain("requires a cubic graph"))
    }
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.size() == 0 {
        Err(Error::domain("requires at least one edge"))
    } else {
        Ok(())
    }
}

/// `(n/mu) ceil((delta+1)/2) <= gamma_o <= n (2 mu - delta) / (2 mu)` for a
/// connected graph with minimum degree `delta` and Laplacian spectral radius `mu`.
pub fn bounds_thof(g: &Graph, gamma_o: Option<usize>, tol: f64) -> Result<BoundsReport> {
    g.require_connected()?;
    require_edges(g)?;
    let mu = spectral_radius(g, tol, DEFAULT_MAX_ITER)?;
    Ok(thof_report(g, gamma_o, &mu))
}

fn thof_report(g: &Graph, gamma_o: Option<usize>, mu: &SpectralRadius) -> BoundsReport {
    let n = g.order();
    let delta = g.min_degree();
    let half = (q(delta + 1) / 2).ceil();
    let params = Params::default()
        .with("n", n as f64)
        .with("delta", delta as f64)
        .with("mu", mu.value())
        .with("mu_iterations", mu.iterations as f64);
    match mu.integer {
        Some(k) => {
            let k = Q::from_integer(k);
            let lower = q(n) / k * half;
            let upper = q(n) * (k * 2 - q(delta)) / (k * 2);
            BoundsReport::rational(BoundId::ThOf, lower, upper, gamma_o, params)
        }
        None => {
            let half = half.to_f64().unwrap_or(f64::NAN);
            let nf = n as f64;
            let df = delta as f64;
            let lower = |m: f64| nf / m * half;
            let upper = |m: f64| nf * (2.0 * m - df) / (2.0 * m);
            let (m, ml) = (mu.estimate, mu.upper_estimate());
            BoundsReport::new(
                BoundId::ThOf,
                BoundValue::real(lower(m), lower(ml)),
                BoundValue::real(upper(m), upper(ml)),
                gamma_o,
                params.0,
            )
        }
    }
}

/// `(n/4) ceil((2 delta - 1)/2) <= gamma_o(L(G)) <= n (delta + 1) / 4` for a
/// `delta`-regular base graph `G` of order `n`.
pub fn bounds_coro(base: &Graph, gamma_o_line: Option<usize>) -> Result<BoundsReport> {
    require_edges(base)?;
    let delta = base
        .regular_degree()
        .ok_or_else(|| Error::domain("Corollary bound needs a regular base graph"))?;
    let n = base.order();
    let lower = q(n) / 4 * (q(2 * delta - 1) / 2).ceil();
    let upper = q(n) * q(delta + 1) / 4;
    let params = Params::default().with("n", n as f64).with("delta", delta as f64);
    Ok(BoundsReport::rational(BoundId::Coro, lower, upper, gamma_o_line, params))
}

/// Degree bounds: `ceil(n(delta+1)/(2 Delta+delta+1))` (odd `delta`) or
/// `ceil(n delta/(2 Delta+delta))` (even `delta`) `<= gamma_o <= 2n/3`.
pub fn bounds_cotainf(g: &Graph, gamma_o: Option<usize>) -> Result<BoundsReport> {
    g.require_connected()?;
    require_edges(g)?;
    let n = g.order();
    let (delta, cap_delta) = (g.min_degree(), g.max_degree());
    let lower = if delta % 2 == 1 {
        (q(n * (delta + 1)) / q(2 * cap_delta + delta + 1)).ceil()
    } else {
        (q(n * delta) / q(2 * cap_delta + delta)).ceil()
    };
    let upper = q(2 * n) / 3;
    let params = Params::default()
        .with("n", n as f64)
        .with("delta", delta as f64)
        .with("Delta", cap_delta as f64);
    Ok(BoundsReport::rational(BoundId::Cotainf, lower, upper, gamma_o, params))
}

fn odd_regular_degree(g: &Graph) -> Result<usize> {
    g.require_connected()?;
    match g.regular_degree() {
        Some(d) if d % 2 == 1 => Ok(d),
        _ => Err(Error::domain("requires a regular graph of odd degree")),
    }
}

/// `n(delta+1)/(3 delta+1) <= gamma_o <= n/2` for regular graphs of odd degree.
pub fn bounds_cotasup(g: &Graph, gamma_o: Option<usize>) -> Result<BoundsReport> {
    let delta = odd_regular_degree(g)?;
    let n = g.order();
    let lower = q(n * (delta + 1)) / q(3 * delta + 1);
    let upper = q(n) / 2;
    let params = Params::default().with("n", n as f64).with("delta", delta as f64);
    Ok(BoundsReport::rational(BoundId::Cotasup, lower, upper, gamma_o, params))
}

/// `2n/5 <= gamma_o <= n/2` for cubic graphs.
pub fn bounds_eq6(g: &Graph, gamma_o: Option<usize>) -> Result<BoundsReport> {
    require_cubic(g)?;
    let n = g.order();
    let params = Params::default().with("n", n as f64);
    Ok(BoundsReport::rational(BoundId::Eq6, q(2 * n) / 5, q(n) / 2, gamma_o, params))
}

/// `n/2 <= gamma_so <= 3n/4` for connected cubic graphs.
pub fn bounds_th1(g: &Graph, gamma_so: Option<usize>) -> Result<BoundsReport> {
    require_cubic(g)?;
    let n = g.order();
    let params = Params::default().with("n", n as f64);
    Ok(BoundsReport::rational(BoundId::Th1, q(n) / 2, q(3 * n) / 4, gamma_so, params))
}

/// `3n/4 <= gamma_o(L(G)) <= n` where `n` is the order of the cubic base
/// graph `G`.
pub fn bounds_eq5(base: &Graph, gamma_o_line: Option<usize>) -> Result<BoundsReport> {
    require_cubic(base)?;
    let n = base.order();
    let params = Params::default().with("n", n as f64);
    Ok(BoundsReport::rational(BoundId::Eq5, q(3 * n) / 4, q(n), gamma_o_line, params))
}

/// `(n+2)/4 <= a_i <= (n-2)/2` for cubic graphs with `a_i < gamma_i`. A
/// missing `gamma_i` (no global independent alliance) counts as infinite.
pub fn bounds_otfen22(g: &Graph, a_i: Option<usize>, gamma_i: Option<usize>) -> Result<BoundsReport> {
    require_cubic(g)?;
    let n = g.order();
    let params = Params::default().with("n", n as f64);
    let applicable = match (a_i, gamma_i) {
        (None, _) => false,
        (Some(a), Some(gi)) => a < gi,
        (Some(_), None) => true,
    };
    let lower = q(n + 2) / 4;
    let upper = (q(n) - 2) / 2;
    if !applicable {
        let mut r = BoundsReport::rational(BoundId::Otfen22, lower, upper, None, params);
        r.applicable = false;
        r.exact = a_i;
        r.note = Some(match a_i {
            None => "no independent offensive alliance exists".into(),
            Some(_) => "a_i equals gamma_i".into(),
        });
        return Ok(r);
    }
    Ok(BoundsReport::rational(BoundId::Otfen22, lower, upper, a_i, params))
}

/// The bound evaluators by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    Th1,
    ThOf,
    Coro,
    Cotainf,
    Cotasup,
    Eq5,
    Eq6,
    Otfen22,
}

impl BoundId {
    pub const ALL: [BoundId; 8] = [
        BoundId::Th1,
        BoundId::ThOf,
        BoundId::Coro,
        BoundId::Cotainf,
        BoundId::Cotasup,
        BoundId::Eq5,
        BoundId::Eq6,
        BoundId::Otfen22,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Th1 => "th1",
            BoundId::ThOf => "thof",
            BoundId::Coro => "coro",
            BoundId::Cotainf => "cotainf",
            BoundId::Cotasup => "cotasup",
            BoundId::Eq5 => "eq5",
            BoundId::Eq6 => "eq6",
            BoundId::Otfen22 => "otfen22",
        }
    }

    /// Why the bound does not apply to `g`, if it doesn't.
    pub fn inapplicable(self, g: &Graph) -> Option<String> {
        let cubic = || (!g.is_cubic()).then(|| "graph is not cubic".to_string());
        match self {
            BoundId::Th1 | BoundId::Eq5 | BoundId::Eq6 | BoundId::Otfen22 => cubic(),
            BoundId::ThOf | BoundId::Cotainf => {
                (g.size() == 0).then(|| "graph has no edges".to_string())
            }
            BoundId::Coro => match g.regular_degree() {
                None => Some("graph is not regular".into()),
                Some(0) => Some("graph has no edges".into()),
                Some(_) => None,
            },
            BoundId::Cotasup => match g.regular_degree() {
                Some(d) if d % 2 == 1 => None,
                Some(_) => Some("degree is even".into()),
                None => Some("graph is not regular".into()),
            },
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        BoundId::ALL
            .into_iter()
            .find(|b| b.as_str() == lower)
            .ok_or_else(|| Error::domain(format!("unknown bound `{s}`")))
    }
}

/// A bound evaluated on a graph, or the reason it was not.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BoundOutcome {
    Evaluated(BoundsReport),
    Skipped { claim_id: String, reason: String },
}

fn exact_or_note<T>(r: Result<T>, note: &mut Option<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::CapExceeded { n, cap }) => {
            *note = Some(format!("exact value not computed: order {n} exceeds cap {cap}"));
            Ok(None)
        }
        Err(Error::Unsupported(msg)) => {
            *note = Some(format!("exact value not computed: {msg}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Evaluates one bound on `g`, computing the exact invariant it constrains
/// when the graph is within the solver caps.
pub fn evaluate_bound(g: &Graph, id: BoundId, opts: &SearchOptions, tol: f64) -> Result<BoundOutcome> {
    g.require_connected()?;
    if let Some(reason) = id.inapplicable(g) {
        return Ok(BoundOutcome::Skipped { claim_id: id.to_string(), reason });
    }
    let mut note = None;
    let gamma_o = |h: &Graph, note: &mut Option<String>| {
        exact_or_note(solvers::gamma_o(h, opts).map(|w| w.size), note)
    };
    let mut report = match id {
        BoundId::Th1 => {
            let x = exact_or_note(solvers::gamma_so_cubic_fast(g, opts).map(|w| w.size), &mut note)?;
            bounds_th1(g, x)?
        }
        BoundId::ThOf => bounds_thof(g, gamma_o(g, &mut note)?, tol)?,
        BoundId::Cotainf => bounds_cotainf(g, gamma_o(g, &mut note)?)?,
        BoundId::Cotasup => bounds_cotasup(g, gamma_o(g, &mut note)?)?,
        BoundId::Eq6 => bounds_eq6(g, gamma_o(g, &mut note)?)?,
        BoundId::Coro | BoundId::Eq5 => {
            let exact = match exact_or_note(line_graph(g), &mut note)? {
                Some(lg) => gamma_o(&lg.graph, &mut note)?,
                None => None,
            };
            if id == BoundId::Coro {
                bounds_coro(g, exact)?
            } else {
                bounds_eq5(g, exact)?
            }
        }
        BoundId::Otfen22 => {
            let a = exact_or_note(solvers::a_i(g, opts), &mut note)?;
            let gi = exact_or_note(solvers::gamma_i(g, opts), &mut note)?;
            match (a, gi) {
                (Some(a), Some(gi)) => bounds_otfen22(g, a.map(|w| w.size), gi.map(|w| w.size))?,
                _ => {
                    let mut r = bounds_otfen22(g, None, None)?;
                    r.exact = None;
                    r
                }
            }
        }
    };
    if note.is_some() {
        report.note = note;
    }
    Ok(BoundOutcome::Evaluated(report))
}
