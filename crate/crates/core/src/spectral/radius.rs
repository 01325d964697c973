use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Result of the power iteration for the largest Laplacian eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralRadius {
    /// Final Rayleigh quotient.
    pub estimate: f64,
    pub tol: f64,
    pub iterations: usize,
    /// Integer `k` with `|estimate - k| <= 10 tol` for which `L - kI` is
    /// exactly singular.
    pub integer: Option<i64>,
}

impl SpectralRadius {
    pub fn value(&self) -> f64 {
        self.integer.map_or(self.estimate, |k| k as f64)
    }

    /// Upper end of the accuracy band, `estimate + 10 tol`.
    pub fn upper_estimate(&self) -> f64 {
        self.estimate + 10.0 * self.tol
    }
}

fn laplacian_apply(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, o) in out.iter_mut().enumerate() {
        let s: f64 = g.neighbors(v).iter().map(|&u| x[u]).sum();
        *o = g.degree(v) as f64 * x[v] - s;
    }
}

fn remove_mean(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter_mut().for_each(|e| *e -= mean);
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|e| e * e).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|e| *e /= norm);
    }
    norm
}

/// Largest eigenvalue of `L = D - A` with the default iteration budget.
pub fn laplacian_spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    spectral_radius(g, tol, DEFAULT_MAX_ITER).map(|r| r.estimate)
}

/// Power iteration on `L`, restricted to the complement of the all-ones
/// vector. Stops once successive Rayleigh quotients differ by less than `tol`.
pub fn spectral_radius(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralRadius> {
    if g.size() == 0 {
        return Err(Error::domain("spectral radius needs at least one edge"));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.order();
    // Golden-ratio weights avoid the symmetric start vectors that can be
    // orthogonal to the top eigenvector.
    const PHI: f64 = 0.618_033_988_749_894_9;
    let mut x: Vec<f64> = (0..n).map(|i| ((i + 1) as f64 * PHI).fract() + 0.5 * (i as f64 + 1.0).ln_1p()).collect();
    remove_mean(&mut x);
    if normalize(&mut x) == 0.0 {
        return Err(Error::Numeric("degenerate start vector".into()));
    }
    let mut y = vec![0.0; n];
    let mut prev = f64::NAN;
    for it in 1..=max_iter {
        laplacian_apply(g, &x, &mut y);
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        std::mem::swap(&mut x, &mut y);
        remove_mean(&mut x);
        if normalize(&mut x) == 0.0 {
            return Err(Error::Numeric("iterate collapsed to zero".into()));
        }
        if (rho - prev).abs() < tol {
            return Ok(SpectralRadius {
                estimate: rho,
                tol,
                iterations: it,
                integer: certify_integer(g, rho, tol),
            });
        }
        prev = rho;
    }
    Err(Error::Numeric(format!("power iteration did not converge in {max_iter} iterations")))
}

fn certify_integer(g: &Graph, estimate: f64, tol: f64) -> Option<i64> {
    let k = estimate.round();
    if (estimate - k).abs() > 10.0 * tol {
        return None;
    }
    let k = k as i64;
    let n = g.order();
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i128 - k as i128
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    is_singular(&mut m).filter(|&s| s).map(|_| k)
}

// Fraction-free (Bareiss) elimination; `None` on overflow.
fn is_singular(m: &mut [Vec<i128>]) -> Option<bool> {
    let n = m.len();
    let mut prev: i128 = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => m.swap(k, r),
                None => return Some(true),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Some(false)
}

/// Laplacian spectral radius of the line graph of a connected
/// `delta`-regular graph that has more edges than vertices or is bipartite.
pub fn line_graph_spectral_radius_regular(delta: usize) -> Result<f64> {
    if delta < 2 {
        return Err(Error::domain(format!("needs delta >= 2, got {delta}")));
    }
    Ok(2.0 * delta as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::line_graph;

    #[test]
    fn closed_forms() {
        let r = |g: &Graph| laplacian_spectral_radius(g, DEFAULT_TOL).unwrap();
        assert!((r(&complete(4)) - 4.0).abs() < 1e-8);
        assert!((r(&complete_bipartite(3, 3)) - 6.0).abs() < 1e-8);
        assert!((r(&cycle(4)) - 4.0).abs() < 1e-8);
    }

    #[test]
    fn integer_certification() {
        let p = spectral_radius(&petersen(), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(p.integer, Some(5));
        let c5 = spectral_radius(&cycle(5), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(c5.integer, None);
        let lk4 = line_graph(&complete(4)).unwrap().graph;
        assert_eq!(spectral_radius(&lk4, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap().integer, Some(6));
    }

    #[test]
    fn line_graph_radius() {
        assert_eq!(line_graph_spectral_radius_regular(3).unwrap(), 6.0);
        assert_eq!(line_graph_spectral_radius_regular(2).unwrap(), 4.0);
        assert!(line_graph_spectral_radius_regular(1).is_err());
    }

    #[test]
    fn errors() {
        assert!(laplacian_spectral_radius(&Graph::from_edges(3, []).unwrap(), 1e-9).is_err());
        assert!(laplacian_spectral_radius(&cycle(5), 0.0).is_err());
        assert!(matches!(spectral_radius(&cycle(11), 1e-15, 3), Err(Error::Numeric(_))));
    }

    #[test]
    fn bareiss_detects_singularity() {
        let mut a = vec![vec![2i128, 4], vec![1, 2]];
        assert_eq!(is_singular(&mut a), Some(true));
        let mut b = vec![vec![0i128, 1], vec![1, 0]];
        assert_eq!(is_singular(&mut b), Some(false));
    }
}
