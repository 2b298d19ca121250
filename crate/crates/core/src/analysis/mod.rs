//! Lebesgue constants, convergence studies, and the discrete sum inequality.

mod lebesgue;
mod lemma;
mod rates;

pub use lebesgue::{
    lebesgue_bound, lebesgue_constant, lebesgue_function, sweep_theta, SweepResult, SweepRow, DEFAULT_GRID_SIZE,
};
pub use lemma::{lemma_check, lemma_sum_test, lemma_sum_trials, LemmaTrial, Parity, TrigPoly};
pub use rates::{
    best_approx_proxies, best_approx_proxy, combined_bound, convergence_study, fit_slope, zygmund_norm_proxy,
    ConvergenceRow, ConvergenceTable, ERROR_GRID_SIZE,
};

use crate::chebyshev::ChebyshevKind;
use crate::error::{Result, VpError};

/// Jacobi weight `u(x) = (1 - x)^gamma (1 + x)^delta` with `gamma, delta >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiWeightU {
    gamma: f64,
    delta: f64,
}

impl JacobiWeightU {
    pub fn new(gamma: f64, delta: f64) -> Result<Self> {
        if !(gamma.is_finite() && delta.is_finite() && gamma >= 0.0 && delta >= 0.0) {
            return Err(VpError::Parameter(format!(
                "weight exponents must be finite and nonnegative, got gamma = {gamma}, delta = {delta}"
            )));
        }
        Ok(JacobiWeightU { gamma, delta })
    }

    pub fn unit() -> Self {
        JacobiWeightU { gamma: 0.0, delta: 0.0 }
    }

    /// `u = sqrt(w phi)` for the given kind, `phi(x) = sqrt(1 - x^2)`.
    pub fn sqrt_w_phi(kind: ChebyshevKind) -> Self {
        let (gamma, delta) = match kind {
            ChebyshevKind::First => (0.0, 0.0),
            ChebyshevKind::Second => (0.5, 0.5),
            ChebyshevKind::Third => (0.0, 0.5),
            ChebyshevKind::Fourth => (0.5, 0.0),
        };
        JacobiWeightU { gamma, delta }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(-1.0, 1.0);
        pow0(1.0 - x, self.gamma) * pow0(1.0 + x, self.delta)
    }

    /// `|v| u(x)`, taken as 0 where `u` vanishes.
    pub(crate) fn weigh(&self, v: f64, x: f64) -> f64 {
        let u = self.eval(x);
        if u == 0.0 {
            0.0
        } else {
            v.abs() * u
        }
    }
}

fn pow0(base: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        base.max(0.0).powf(e)
    }
}

/// Whether `(gamma, delta)` satisfies the admissibility conditions for `kind`.
pub fn admissible(kind: ChebyshevKind, u: JacobiWeightU) -> bool {
    let (g, d) = (u.gamma, u.delta);
    match kind {
        ChebyshevKind::First => (0.0..=1.0).contains(&g) && (0.0..=1.0).contains(&d),
        ChebyshevKind::Second => g > 0.0 && g <= 1.5 && d > 0.0 && d <= 1.5 && (-1.0..=1.0).contains(&(g - d)),
        ChebyshevKind::Third => (0.0..=1.0).contains(&g) && d > 0.0 && d <= 1.5 && g - d <= 0.5,
        ChebyshevKind::Fourth => g > 0.0 && g <= 1.5 && (0.0..=1.0).contains(&d) && g - d >= -0.5,
    }
}

pub(crate) fn require_admissible(kind: ChebyshevKind, u: JacobiWeightU) -> Result<()> {
    if admissible(kind, u) {
        Ok(())
    } else {
        Err(VpError::Inadmissible {
            kind: kind.name(),
            gamma: u.gamma,
            delta: u.delta,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_table() {
        let w = |g, d| JacobiWeightU::new(g, d).unwrap();
        assert!(admissible(ChebyshevKind::First, w(0.0, 0.0)));
        assert!(!admissible(ChebyshevKind::Second, w(0.0, 1.0)));
        assert!(!admissible(ChebyshevKind::Third, w(1.0, 0.2)));
        assert!(admissible(ChebyshevKind::Third, w(0.5, 0.2)));
        assert!(!admissible(ChebyshevKind::Fourth, w(0.2, 1.0)));
        assert!(admissible(ChebyshevKind::Fourth, w(0.6, 1.0)));
        assert!(!admissible(ChebyshevKind::First, w(1.2, 0.0)));
        for kind in ChebyshevKind::ALL {
            assert!(admissible(kind, JacobiWeightU::sqrt_w_phi(kind)), "{kind}");
        }
        assert!(JacobiWeightU::new(-0.1, 0.0).is_err());
    }

    #[test]
    fn weight_values() {
        let u = JacobiWeightU::new(0.5, 1.0).unwrap();
        assert_eq!(u.eval(1.0), 0.0);
        assert!((u.eval(0.0) - 1.0).abs() < 1e-15);
        assert!((u.eval(-0.5) - 1.5f64.sqrt() * 0.5).abs() < 1e-15);
        assert_eq!(JacobiWeightU::unit().eval(-1.0), 1.0);
        assert_eq!(u.weigh(f64::MAX, 1.0), 0.0);
    }
}
