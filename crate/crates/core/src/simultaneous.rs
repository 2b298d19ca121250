//! Derivatives of the VP interpolant from the same node samples.

use rayon::prelude::*;

use crate::basis::{q_deriv_row, weighted_node_values, DegreePair};
use crate::chebyshev::{nodes, ortho_poly_angle, ChebyshevKind};
use crate::error::{check_all_domain, check_domain, Result, VpError};
use crate::interp1d::VpInterpolant;
use crate::transforms::{kind_transform, q_deriv_matrix, sqrt_christoffel};

/// A request for `(V_n^m f)^(r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeRequest {
    interp: VpInterpolant,
    r: usize,
}

impl DerivativeRequest {
    pub fn new(interp: VpInterpolant, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(VpError::Order(r));
        }
        Ok(DerivativeRequest { interp, r })
    }

    pub fn interp(&self) -> &VpInterpolant {
        &self.interp
    }

    pub fn order(&self) -> usize {
        self.r
    }

    /// True when `r >= n`; the result is still defined but the derivative
    /// order is past the degree of exactness of the whole basis.
    pub fn beyond_degree(&self) -> bool {
        self.r >= self.interp.pair().n()
    }
}

/// `r`-th derivative of the fundamental VP polynomial `Phi_{n,k}^m` at `x`.
///
/// `k` is 0-based. The sum runs over every basis index `j < n`, since for
/// `j > n - m` the basis element `q_{n,j}^m` carries degree `2n - j > j`.
pub fn fundamental_deriv(kind: ChebyshevKind, pair: DegreePair, k: usize, r: usize, x: f64) -> Result<f64> {
    let n = pair.n();
    if k >= n {
        return Err(VpError::Index { index: k, bound: n });
    }
    if r == 0 {
        return Err(VpError::Order(r));
    }
    check_domain(x)?;
    let tk = kind.node_angle(n, k + 1);
    let lam = kind.christoffel(n, tk);
    let dq = q_deriv_row(kind, pair, r, x.clamp(-1.0, 1.0));
    Ok(lam
        * dq.iter()
            .enumerate()
            .map(|(j, d)| ortho_poly_angle(kind, j, tk) * d)
            .sum::<f64>())
}

/// `(V_n^m f)^(r)` through the block transform of `Q^(r)`.
pub fn evaluate_deriv(request: &DerivativeRequest, points: &[f64]) -> Result<Vec<f64>> {
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let interp = &request.interp;
    let (kind, pair) = (interp.kind(), interp.pair());
    let q = q_deriv_matrix(kind, pair, request.r, points)?;
    let t = kind_transform(kind, &q)?;
    let scaled: Vec<f64> = interp
        .samples()
        .iter()
        .zip(sqrt_christoffel(kind, pair.n())?)
        .map(|(f, s)| f * s)
        .collect();
    t.left_mul(&scaled)
}

/// `(V_n^m f)^(r)` as `sum_k f(x_k) (Phi_{n,k}^m)^(r)`.
pub fn evaluate_deriv_direct(request: &DerivativeRequest, points: &[f64]) -> Result<Vec<f64>> {
    check_all_domain(points)?;
    let interp = &request.interp;
    let (kind, pair) = (interp.kind(), interp.pair());
    let weighted = weighted_node_values(kind, pair.n());
    Ok(points
        .par_iter()
        .map(|&z| {
            let dq = q_deriv_row(kind, pair, request.r, z.clamp(-1.0, 1.0));
            weighted
                .iter()
                .zip(interp.samples())
                .map(|(row, f)| f * row.iter().zip(&dq).map(|(a, b)| a * b).sum::<f64>())
                .sum()
        })
        .collect())
}

/// Derivatives of all fundamental polynomials at `x`, 0-based in `k`.
pub fn fundamental_deriv_row(kind: ChebyshevKind, pair: DegreePair, r: usize, x: f64) -> Result<Vec<f64>> {
    if r == 0 {
        return Err(VpError::Order(r));
    }
    check_domain(x)?;
    let set = nodes(kind, pair.n())?;
    let dq = q_deriv_row(kind, pair, r, x.clamp(-1.0, 1.0));
    Ok(set
        .t
        .iter()
        .zip(&set.lambda)
        .map(|(&tk, &lam)| {
            lam * dq
                .iter()
                .enumerate()
                .map(|(j, d)| ortho_poly_angle(kind, j, tk) * d)
                .sum::<f64>()
        })
        .collect())
}
