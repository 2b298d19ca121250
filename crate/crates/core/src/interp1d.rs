//! Univariate VP interpolation.

use crate::basis::{q_row_angle, weighted_node_values, DegreePair};
use crate::chebyshev::{nodes, ChebyshevKind, NodeSet};
use crate::error::{angle_of, check_all_domain, check_finite, Result, VpError};
use crate::transforms::{kind_transform, q_matrix, sqrt_christoffel};

/// VP interpolant `V_n^m f` built from the samples `f(x_k^n)`.
///
/// The discrete Fourier coefficients `c_{n,j}(f) = sum_k lambda_k f(x_k) p_j(w, x_k)`
/// are computed once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct VpInterpolant {
    kind: ChebyshevKind,
    pair: DegreePair,
    samples: Vec<f64>,
    coeffs: Vec<f64>,
}

impl VpInterpolant {
    pub fn build(kind: ChebyshevKind, pair: DegreePair, samples: Vec<f64>) -> Result<Self> {
        let n = pair.n();
        if samples.len() != n {
            return Err(VpError::Shape {
                expected: format!("{n} samples"),
                found: format!("{}", samples.len()),
            });
        }
        check_finite(&samples)?;
        let weighted = weighted_node_values(kind, n);
        let mut coeffs = vec![0.0; n];
        for (row, f) in weighted.iter().zip(&samples) {
            for (c, v) in coeffs.iter_mut().zip(row) {
                *c += f * v;
            }
        }
        Ok(VpInterpolant {
            kind,
            pair,
            samples,
            coeffs,
        })
    }

    /// Sample `f` at the nodes and build.
    pub fn from_fn(kind: ChebyshevKind, pair: DegreePair, f: impl Fn(f64) -> f64) -> Result<Self> {
        let set = nodes(kind, pair.n())?;
        VpInterpolant::build(kind, pair, set.x.iter().map(|&x| f(x)).collect())
    }

    pub fn kind(&self) -> ChebyshevKind {
        self.kind
    }

    pub fn pair(&self) -> DegreePair {
        self.pair
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn nodes(&self) -> NodeSet {
        nodes(self.kind, self.pair.n()).expect("n >= 1")
    }

    /// Evaluate through the transform pipeline `f . Lambda . T(Q)`.
    pub fn evaluate(&self, points: &[f64]) -> Result<Vec<f64>> {
        if points.is_empty() {
            return Ok(Vec::new());
        }
        let q = q_matrix(self.kind, self.pair, points)?;
        let t = kind_transform(self.kind, &q)?;
        let scaled: Vec<f64> = self
            .samples
            .iter()
            .zip(sqrt_christoffel(self.kind, self.pair.n())?)
            .map(|(f, s)| f * s)
            .collect();
        t.left_mul(&scaled)
    }

    /// Evaluate through the coefficient form `sum_j c_j q_{n,j}^m`.
    pub fn evaluate_coeffs(&self, points: &[f64]) -> Result<Vec<f64>> {
        check_all_domain(points)?;
        Ok(points.iter().map(|&z| self.value_at_angle(angle_of(z))).collect())
    }

    pub(crate) fn value_at_angle(&self, t: f64) -> f64 {
        q_row_angle(self.kind, self.pair, t)
            .iter()
            .zip(&self.coeffs)
            .map(|(q, c)| q * c)
            .sum()
    }
}

/// Classical Lagrange interpolant at the same `n` nodes, in barycentric form.
///
/// For Gauss-Jacobi nodes the barycentric weights are proportional to
/// `(-1)^k sqrt((1 - x_k^2) lambda_k) = (-1)^k sin(t_k) sqrt(lambda_k)`.
pub fn evaluate_lagrange_comparison(
    kind: ChebyshevKind,
    n: usize,
    samples: &[f64],
    points: &[f64],
) -> Result<Vec<f64>> {
    let set = nodes(kind, n)?;
    if samples.len() != n {
        return Err(VpError::Shape {
            expected: format!("{n} samples"),
            found: format!("{}", samples.len()),
        });
    }
    check_finite(samples)?;
    check_all_domain(points)?;
    let weights: Vec<f64> = set
        .t
        .iter()
        .zip(&set.lambda)
        .enumerate()
        .map(|(k, (t, l))| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * t.sin() * l.sqrt()
        })
        .collect();
    Ok(points
        .iter()
        .map(|&z| {
            let (mut num, mut den) = (0.0, 0.0);
            for ((&xk, &wk), &fk) in set.x.iter().zip(&weights).zip(samples) {
                let d = z - xk;
                if d == 0.0 {
                    return fk;
                }
                num += wk * fk / d;
                den += wk / d;
            }
            num / den
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::ortho_poly;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn grid(count: usize) -> Vec<f64> {
        (0..count).map(|i| -1.0 + 2.0 * i as f64 / (count - 1) as f64).collect()
    }

    #[test]
    fn build_examples() {
        let pair = DegreePair::new(10, 4).unwrap();
        let ones = VpInterpolant::build(ChebyshevKind::First, pair, vec![1.0; 10]).unwrap();
        assert!((ones.coeffs()[0] - PI.sqrt()).abs() < 1e-13);
        assert!(ones.coeffs()[1..].iter().all(|c| c.abs() < 1e-13));

        for kind in ChebyshevKind::ALL {
            let set = nodes(kind, 10).unwrap();
            let samples = set.x.iter().map(|&x| ortho_poly(kind, 1, x).unwrap()).collect();
            let interp = VpInterpolant::build(kind, pair, samples).unwrap();
            for (j, c) in interp.coeffs().iter().enumerate() {
                let e = if j == 1 { 1.0 } else { 0.0 };
                assert!((c - e).abs() <= 1e-12, "{kind} j={j}: {c}");
            }
        }
        let zero = VpInterpolant::build(ChebyshevKind::Third, pair, vec![0.0; 10]).unwrap();
        assert!(zero.coeffs().iter().all(|&c| c == 0.0));
        assert!(VpInterpolant::build(ChebyshevKind::Third, pair, vec![0.0; 9]).is_err());
        let mut bad = vec![0.0; 10];
        bad[3] = f64::INFINITY;
        assert_eq!(
            VpInterpolant::build(ChebyshevKind::Third, pair, bad),
            Err(VpError::NonFinite { position: 3 })
        );
    }

    #[test]
    fn constants_and_nodes() {
        let pts = grid(101);
        for kind in ChebyshevKind::ALL {
            let pair = DegreePair::new(17, 6).unwrap();
            let ones = VpInterpolant::from_fn(kind, pair, |_| 1.0).unwrap();
            for v in ones.evaluate(&pts).unwrap() {
                assert!((v - 1.0).abs() <= 1e-12);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            let samples: Vec<f64> = (0..17).map(|_| rng.random_range(-3.0..3.0)).collect();
            let interp = VpInterpolant::build(kind, pair, samples.clone()).unwrap();
            let at_nodes = interp.evaluate(&interp.nodes().x).unwrap();
            for (a, b) in at_nodes.iter().zip(&samples) {
                assert!((a - b).abs() <= 1e-10 * 4.0);
            }
        }
    }

    #[test]
    fn two_paths_agree() {
        let pts = grid(57);
        for kind in ChebyshevKind::ALL {
            let pair = DegreePair::new(40, 13).unwrap();
            let interp = VpInterpolant::from_fn(kind, pair, |x| (3.0 * x).exp() * (x - 0.2).abs()).unwrap();
            let a = interp.evaluate(&pts).unwrap();
            let b = interp.evaluate_coeffs(&pts).unwrap();
            for (u, v) in a.iter().zip(&b) {
                assert!((u - v).abs() <= 1e-10 * 20.0f64.max(1.0), "{kind}: {u} vs {v}");
            }
        }
    }

    #[test]
    fn reproduces_low_degree_monomials() {
        let pts = grid(1000);
        for kind in ChebyshevKind::ALL {
            let pair = DegreePair::new(24, 8).unwrap();
            for d in 0..=pair.exact_degree() {
                let interp = VpInterpolant::from_fn(kind, pair, |x| x.powi(d as i32)).unwrap();
                for (z, v) in pts.iter().zip(interp.evaluate(&pts).unwrap()) {
                    let e = z.powi(d as i32);
                    assert!((v - e).abs() <= 1e-9 * (1.0 + e.abs()), "{kind} d={d} z={z}");
                }
            }
        }
    }

    #[test]
    fn lagrange_examples() {
        let pts = grid(33);
        for kind in ChebyshevKind::ALL {
            let set = nodes(kind, 12).unwrap();
            let ones = evaluate_lagrange_comparison(kind, 12, &[1.0; 12], &pts).unwrap();
            assert!(ones.iter().all(|v| (v - 1.0).abs() <= 1e-12));
            let line = evaluate_lagrange_comparison(kind, 12, &set.x, &pts).unwrap();
            for (z, v) in pts.iter().zip(line) {
                assert!((z - v).abs() <= 1e-12);
            }
            let cubic: Vec<f64> = set.x.iter().map(|x| x.powi(3) - x).collect();
            let pair = DegreePair::new(12, 5).unwrap();
            let vp = VpInterpolant::build(kind, pair, cubic.clone())
                .unwrap()
                .evaluate(&pts)
                .unwrap();
            let lag = evaluate_lagrange_comparison(kind, 12, &cubic, &pts).unwrap();
            for (a, b) in vp.iter().zip(lag) {
                assert!((a - b).abs() <= 1e-10);
            }
        }
    }

    /// Barycentric weights from the generic product formula.
    #[test]
    fn lagrange_matches_product_formula() {
        for kind in ChebyshevKind::ALL {
            let n = 9;
            let set = nodes(kind, n).unwrap();
            let samples: Vec<f64> = set.x.iter().map(|x| (2.0 * x).sin()).collect();
            let z = 0.123;
            let mut oracle = 0.0;
            for k in 0..n {
                let mut basis = 1.0;
                for j in 0..n {
                    if j != k {
                        basis *= (z - set.x[j]) / (set.x[k] - set.x[j]);
                    }
                }
                oracle += samples[k] * basis;
            }
            let v = evaluate_lagrange_comparison(kind, n, &samples, &[z]).unwrap()[0];
            assert!((v - oracle).abs() <= 1e-13);
        }
    }
}
