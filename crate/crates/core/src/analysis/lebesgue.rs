use std::f64::consts::PI;

use rayon::prelude::*;

use super::JacobiWeightU;
use crate::basis::{fundamental_closed_row, DegreePair};
use crate::chebyshev::{nodes, ChebyshevKind};
use crate::error::{angle_of, check_domain, Result, VpError};

pub const DEFAULT_GRID_SIZE: usize = 10_000;

/// Number of scan maxima refined by golden-section search.
const REFINED_PEAKS: usize = 5;
const GOLDEN_TOL: f64 = 1e-13;

struct LebesgueFn {
    kind: ChebyshevKind,
    pair: DegreePair,
    u: JacobiWeightU,
    inv_u_nodes: Vec<f64>,
}

impl LebesgueFn {
    fn new(kind: ChebyshevKind, pair: DegreePair, u: JacobiWeightU) -> Result<Self> {
        let set = nodes(kind, pair.n())?;
        let inv_u_nodes = set.x.iter().map(|&x| 1.0 / u.eval(x)).collect();
        Ok(LebesgueFn {
            kind,
            pair,
            u,
            inv_u_nodes,
        })
    }

    fn at_angle(&self, t: f64) -> f64 {
        let ux = self.u.eval(t.cos());
        if ux == 0.0 {
            return 0.0;
        }
        let phi = fundamental_closed_row(self.kind, self.pair, t);
        ux * phi
            .iter()
            .zip(&self.inv_u_nodes)
            .map(|(p, iu)| p.abs() * iu)
            .sum::<f64>()
    }
}

/// `sum_k |Phi_{n,k}^m(x)| u(x) / u(x_k)`.
pub fn lebesgue_function(kind: ChebyshevKind, pair: DegreePair, u: JacobiWeightU, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(LebesgueFn::new(kind, pair, u)?.at_angle(angle_of(x)))
}

/// Sup of the Lebesgue function over `[-1, 1]`.
///
/// Scans the angles `i pi / grid_size`, `i = 0..=grid_size`, then refines the
/// largest local maxima of the scan by golden-section search.
pub fn lebesgue_constant(kind: ChebyshevKind, pair: DegreePair, u: JacobiWeightU, grid_size: usize) -> Result<f64> {
    if grid_size < 1000 {
        return Err(VpError::Parameter(format!(
            "grid size must be at least 1000, got {grid_size}"
        )));
    }
    let lf = LebesgueFn::new(kind, pair, u)?;
    let step = PI / grid_size as f64;
    let values: Vec<f64> = (0..=grid_size)
        .into_par_iter()
        .map(|i| lf.at_angle(i as f64 * step))
        .collect();

    let mut peaks: Vec<usize> = (0..values.len())
        .filter(|&i| {
            let left = if i == 0 { f64::NEG_INFINITY } else { values[i - 1] };
            let right = values.get(i + 1).copied().unwrap_or(f64::NEG_INFINITY);
            values[i] >= left && values[i] >= right
        })
        .collect();
    peaks.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    peaks.truncate(REFINED_PEAKS);

    let scan_max = values.iter().copied().fold(0.0, f64::max);
    let refined = peaks
        .par_iter()
        .map(|&i| {
            let lo = (i as f64 - 1.0).max(0.0) * step;
            let hi = ((i + 1) as f64 * step).min(PI);
            golden_max(|t| lf.at_angle(t), lo, hi)
        })
        .reduce(|| 0.0, f64::max);
    Ok(scan_max.max(refined))
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let mut best = fc.max(fd);
    while b - a > GOLDEN_TOL {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
            best = best.max(fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
            best = best.max(fd);
        }
    }
    best
}

/// `C_w sqrt(n_w / m) (1 + 2 pi m_w / n_w)`.
pub fn lebesgue_bound(kind: ChebyshevKind, pair: DegreePair) -> f64 {
    let nw = pair.n_w(kind);
    pair.c_w(kind) * (nw / pair.m() as f64).sqrt() * (1.0 + 2.0 * PI * pair.m_w(kind) as f64 / nw)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub m: usize,
    pub theta: f64,
    pub lebesgue_constant: f64,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub kind: ChebyshevKind,
    pub u: JacobiWeightU,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Pairs of consecutive rows where the constant grows by more than `slack` (relative).
    pub fn monotonicity_violations(&self, slack: f64) -> Vec<(usize, usize)> {
        (1..self.rows.len())
            .filter(|&i| self.rows[i].lebesgue_constant > self.rows[i - 1].lebesgue_constant * (1.0 + slack))
            .map(|i| (i - 1, i))
            .collect()
    }
}

/// Lebesgue constants with `u = sqrt(w phi)` for `m = round(theta n)`.
pub fn sweep_theta(kind: ChebyshevKind, n: usize, thetas: &[f64], grid_size: usize) -> Result<SweepResult> {
    let u = JacobiWeightU::sqrt_w_phi(kind);
    let rows = thetas
        .iter()
        .map(|&theta| {
            let pair = DegreePair::from_theta(n, theta)?;
            Ok(SweepRow {
                n,
                m: pair.m(),
                theta: pair.theta(),
                lebesgue_constant: lebesgue_constant(kind, pair, u, grid_size)?,
                bound: lebesgue_bound(kind, pair),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { kind, u, rows })
}
