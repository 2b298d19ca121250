use std::f64::consts::PI;

use rayon::prelude::*;

use super::lebesgue::lebesgue_bound;
use super::{require_admissible, JacobiWeightU};
use crate::basis::DegreePair;
use crate::chebyshev::ChebyshevKind;
use crate::error::{Result, VpError};
use crate::interp1d::VpInterpolant;
use crate::simultaneous::{evaluate_deriv, DerivativeRequest};

/// Points of the uniform grid on which weighted sup norms are measured.
pub const ERROR_GRID_SIZE: usize = 4096;

pub(crate) fn error_grid() -> Vec<f64> {
    let last = (ERROR_GRID_SIZE - 1) as f64;
    (0..ERROR_GRID_SIZE).map(|i| -1.0 + 2.0 * i as f64 / last).collect()
}

/// Coefficients `a_0 .. a_d` of the first-kind Chebyshev expansion from `count` Gauss nodes.
fn chebyshev_coeffs(f: &(dyn Fn(f64) -> f64 + Sync), d: usize, count: usize) -> Vec<f64> {
    let quarter = 4 * count;
    let table: Vec<f64> = (0..quarter)
        .map(|s| (PI * s as f64 / (2 * count) as f64).cos())
        .collect();
    let samples: Vec<f64> = (0..count).map(|k| f(table[2 * k + 1])).collect();
    (0..=d)
        .map(|i| {
            let sum: f64 = samples
                .iter()
                .enumerate()
                .map(|(k, fk)| fk * table[(i * (2 * k + 1)) % quarter])
                .sum();
            let a = 2.0 * sum / count as f64;
            if i == 0 {
                a / 2.0
            } else {
                a
            }
        })
        .collect()
}

fn clenshaw(coeffs: &[f64], x: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &c in coeffs.iter().skip(1).rev() {
        let b = 2.0 * x * b1 - b2 + c;
        b2 = b1;
        b1 = b;
    }
    x * b1 - b2 + coeffs.first().copied().unwrap_or(0.0)
}

/// Proxies for `E_d(f)_u`, `d = 0..=d_max`.
///
/// Entry `d` is the smallest weighted sup error, over degrees `j <= d`, of the
/// degree-`j` truncated first-kind Chebyshev expansion of `f` computed with
/// `4j + 64` Gauss nodes. Each entry is an upper bound for `E_d(f)_u` and the
/// sequence is non-increasing.
pub fn best_approx_proxies(f: &(dyn Fn(f64) -> f64 + Sync), u: JacobiWeightU, d_max: usize) -> Vec<f64> {
    let grid = error_grid();
    let exact: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    let errors: Vec<f64> = (0..=d_max)
        .into_par_iter()
        .map(|j| {
            let coeffs = chebyshev_coeffs(f, j, 4 * j + 64);
            grid.iter()
                .zip(&exact)
                .map(|(&x, fx)| u.weigh(fx - clenshaw(&coeffs, x), x))
                .fold(0.0, f64::max)
        })
        .collect();
    let mut running = f64::INFINITY;
    errors
        .into_iter()
        .map(|e| {
            running = running.min(e);
            running
        })
        .collect()
}

/// Upper-bound proxy for `E_d(f)_u`; see [`best_approx_proxies`].
pub fn best_approx_proxy(f: &(dyn Fn(f64) -> f64 + Sync), u: JacobiWeightU, d: usize) -> f64 {
    best_approx_proxies(f, u, d)[d]
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 || ys.iter().any(|&y| y.is_nan() || y <= 0.0) {
        return f64::NAN;
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let k = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub m: usize,
    /// Weighted sup error of `(V_n^m f)^(r)` against `f^(r)`.
    pub error: f64,
    /// Upper-bound proxy for `E_{n-m}(f)_u`.
    pub proxy: f64,
    /// Upper-bound proxy for `E_{n+m-1}(f)_u`.
    pub proxy_upper_degree: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub kind: ChebyshevKind,
    pub u: JacobiWeightU,
    pub theta: f64,
    pub r: usize,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    /// Log-log slope of the error column against `n`.
    pub fn slope(&self) -> f64 {
        let ns: Vec<f64> = self.rows.iter().map(|r| r.n as f64).collect();
        let es: Vec<f64> = self.rows.iter().map(|r| r.error).collect();
        fit_slope(&ns, &es)
    }

    pub fn max_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(0.0, f64::max)
    }
}

/// Errors of `(V_n^m f)^(r)` for `m = theta n` over `n_list`.
///
/// `exact` is `f^(r)` (or `f` itself when `r = 0`). Errors are weighted by `u`
/// on a uniform grid of [`ERROR_GRID_SIZE`] points.
pub fn convergence_study(
    f: &(dyn Fn(f64) -> f64 + Sync),
    exact: &(dyn Fn(f64) -> f64 + Sync),
    kind: ChebyshevKind,
    u: JacobiWeightU,
    theta: f64,
    n_list: &[usize],
    r: usize,
) -> Result<ConvergenceTable> {
    require_admissible(kind, u)?;
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(VpError::Parameter("n list must be strictly increasing".into()));
    }
    let pairs = n_list
        .iter()
        .map(|&n| {
            let m = theta * n as f64;
            if (m - m.round()).abs() > 1e-9 {
                return Err(VpError::Parameter(format!("theta * n = {m} is not an integer")));
            }
            DegreePair::new(n, m.round() as usize)
        })
        .collect::<Result<Vec<_>>>()?;
    let top = pairs.iter().map(|p| p.max_degree()).max().unwrap_or(0);
    let proxies = best_approx_proxies(f, u, top);
    let grid = error_grid();
    let target: Vec<f64> = grid.iter().map(|&x| exact(x)).collect();

    let rows = pairs
        .iter()
        .map(|&pair| {
            let interp = VpInterpolant::from_fn(kind, pair, f)?;
            let values = if r == 0 {
                interp.evaluate(&grid)?
            } else {
                evaluate_deriv(&DerivativeRequest::new(interp, r)?, &grid)?
            };
            let error = grid
                .iter()
                .zip(values.iter().zip(&target))
                .map(|(&x, (v, e))| u.weigh(v - e, x))
                .fold(0.0, f64::max);
            let proxy = proxies[pair.exact_degree()];
            Ok(ConvergenceRow {
                n: pair.n(),
                m: pair.m(),
                error,
                proxy,
                proxy_upper_degree: proxies[pair.max_degree()],
                ratio: if proxy > 0.0 { error / proxy } else { f64::NAN },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceTable {
        kind,
        u,
        theta,
        r,
        rows,
    })
}

/// Proxy for the `Z_s(u)` norm: `||f u|| + max_{1 <= d <= d_max} d^s E_d(f)_u`.
pub fn zygmund_norm_proxy(f: &(dyn Fn(f64) -> f64 + Sync), u: JacobiWeightU, s: f64, d_max: usize) -> f64 {
    let sup = error_grid().iter().map(|&x| u.weigh(f(x), x)).fold(0.0, f64::max);
    let proxies = best_approx_proxies(f, u, d_max);
    let tail = (1..=d_max).map(|d| (d as f64).powf(s) * proxies[d]).fold(0.0, f64::max);
    sup + tail
}

/// `(1 + bound(n, m)) norm / (n - m)^s`.
pub fn combined_bound(kind: ChebyshevKind, pair: DegreePair, s: f64, norm: f64) -> f64 {
    (1.0 + lebesgue_bound(kind, pair)) * norm / (pair.exact_degree() as f64).powf(s)
}
