use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::chebyshev::{nodes, ChebyshevKind};
use crate::error::{Result, VpError};

/// Panels of the composite midpoint rule for `int_0^pi |Q|`.
const PANELS: usize = 100_000;
const SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `sum_j a_j cos(j t)`
    Even,
    /// `sum_j a_j sin(j t)`
    Odd,
}

/// Even or odd trigonometric polynomial on `[0, pi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPoly {
    pub parity: Parity,
    pub coeffs: Vec<f64>,
}

impl TrigPoly {
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| match self.parity {
                Parity::Even => a * (j as f64 * t).cos(),
                Parity::Odd => a * (j as f64 * t).sin(),
            })
            .sum()
    }

    /// Values at the midpoints `(i + 1/2) pi / panels` through one inverse DFT of length `2 panels`.
    fn midpoint_values(&self, fft: &Arc<dyn Fft<f64>>, panels: usize) -> Vec<f64> {
        let len = 2 * panels;
        let mut buf = vec![Complex64::new(0.0, 0.0); len];
        for (j, &a) in self.coeffs.iter().enumerate() {
            let phase = PI * j as f64 / len as f64;
            buf[j % len] += Complex64::from_polar(a, phase);
        }
        fft.process(&mut buf);
        buf[..panels]
            .iter()
            .map(|z| match self.parity {
                Parity::Even => z.re,
                Parity::Odd => z.im,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaTrial {
    /// `sum_k |Q(t_k)| (t_k - t_{k-1})`
    pub lhs: f64,
    /// `(1 + 2 pi nu / n_w) int_0^pi |Q|`
    pub rhs: f64,
    pub passed: bool,
}

fn planned(panels: usize) -> Arc<dyn Fft<f64>> {
    FftPlanner::new().plan_fft_inverse(2 * panels)
}

fn check_with(kind: ChebyshevKind, n: usize, nu: usize, q: &TrigPoly, fft: &Arc<dyn Fft<f64>>) -> Result<LemmaTrial> {
    let set = nodes(kind, n)?;
    let lhs: f64 = set
        .t
        .iter()
        .zip(set.delta_t())
        .map(|(&t, dt)| q.eval(t).abs() * dt)
        .sum();
    let h = PI / PANELS as f64;
    let integral = h * q.midpoint_values(fft, PANELS).iter().map(|v| v.abs()).sum::<f64>();
    let rhs = (1.0 + 2.0 * PI * nu as f64 / kind.n_w(n)) * integral;
    Ok(LemmaTrial {
        lhs,
        rhs,
        passed: lhs <= rhs + SLACK,
    })
}

/// Check the discrete sum inequality for one trigonometric polynomial of degree `<= nu`.
pub fn lemma_check(kind: ChebyshevKind, n: usize, nu: usize, q: &TrigPoly) -> Result<LemmaTrial> {
    if q.coeffs.len() > nu + 1 {
        return Err(VpError::Parameter(format!("polynomial degree exceeds nu = {nu}")));
    }
    check_with(kind, n, nu, q, &planned(PANELS))
}

/// Random trials: trial `i` is even for even `i`, odd otherwise, with a random
/// degree in `0..=nu` (`1..=nu` when odd) and coefficients uniform in `[-1, 1]`.
pub fn lemma_sum_trials(kind: ChebyshevKind, n: usize, nu: usize, trials: usize, seed: u64) -> Result<Vec<LemmaTrial>> {
    if nu == 0 {
        return Err(VpError::Parameter("nu must be at least 1".into()));
    }
    nodes(kind, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polys: Vec<TrigPoly> = (0..trials)
        .map(|i| {
            let parity = if i % 2 == 0 { Parity::Even } else { Parity::Odd };
            let low = if parity == Parity::Odd { 1 } else { 0 };
            let degree = rng.random_range(low..=nu);
            let mut coeffs: Vec<f64> = (0..=degree).map(|_| rng.random_range(-1.0..=1.0)).collect();
            if parity == Parity::Odd {
                coeffs[0] = 0.0;
            }
            TrigPoly { parity, coeffs }
        })
        .collect();
    let fft = planned(PANELS);
    polys.par_iter().map(|q| check_with(kind, n, nu, q, &fft)).collect()
}

/// True when every random trial satisfies the inequality.
pub fn lemma_sum_test(kind: ChebyshevKind, n: usize, nu: usize, trials: usize, seed: u64) -> Result<bool> {
    Ok(lemma_sum_trials(kind, n, nu, trials, seed)?.iter().all(|t| t.passed))
}
