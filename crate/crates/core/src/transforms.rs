//! Discrete block transforms used to build the fundamental-polynomial
//! matrices from the VP basis.
//!
//! Each transform maps an `n x N` block `A` (rows `j = 0..n-1`) to an
//! `n x N` block `B` (rows `s = 1..n`), column by column:
//!
//! ```text
//! IDC  b_s = sum_j w_j a_j cos(j (2s-1) pi / (2n)),   w_0 = sqrt(1/n), w_j = sqrt(2/n)
//! IDS  b_s = 2/(n+1) sum_j a_j sin((j+1) s pi / (n+1))
//! GDC  b_s = 2 sum_j a_j cos((2j+1)(2s-1) pi / (2(2n+1)))
//! GDS  b_s = 2 sum_j a_j sin((2j+1) s pi / (2n+1))
//! ```
//!
//! The fast versions embed each column in a complex DFT (length `2n`,
//! `2(n+1)` or `2n+1`) with pre- and post-twiddles. The [`naive`] module keeps
//! the direct summations as reference implementations.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::basis::{q_deriv_row, q_row_angle, DegreePair};
use crate::chebyshev::{nodes, ChebyshevKind};
use crate::error::{angle_of, check_all_domain, Result, VpError};
use crate::matrix::BlockMatrix;

/// The four block transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Idc,
    Ids,
    Gdc,
    Gds,
}

impl Transform {
    /// Transform that turns the basis matrix into the fundamental-polynomial matrix.
    pub fn for_kind(kind: ChebyshevKind) -> Transform {
        match kind {
            ChebyshevKind::First => Transform::Idc,
            ChebyshevKind::Second => Transform::Ids,
            ChebyshevKind::Third => Transform::Gdc,
            ChebyshevKind::Fourth => Transform::Gds,
        }
    }

    fn dft_len(self, n: usize) -> usize {
        match self {
            Transform::Idc => 2 * n,
            Transform::Ids => 2 * (n + 1),
            Transform::Gdc | Transform::Gds => 2 * n + 1,
        }
    }

    pub fn apply(self, a: &BlockMatrix) -> Result<BlockMatrix> {
        check_nonempty(a)?;
        let n = a.rows();
        let len = self.dft_len(n);
        let fft = FftPlanner::<f64>::new().plan_fft_inverse(len);
        let columns: Vec<Vec<f64>> = (0..a.cols())
            .into_par_iter()
            .map_init(
                || vec![Complex64::new(0.0, 0.0); len],
                |buf, l| fast_column(self, &fft, buf, &a.column(l)),
            )
            .collect();
        Ok(BlockMatrix::from_columns(n, &columns))
    }
}

fn check_nonempty(a: &BlockMatrix) -> Result<()> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(VpError::Shape {
            expected: "non-empty block".into(),
            found: format!("{}x{}", a.rows(), a.cols()),
        });
    }
    Ok(())
}

fn fast_column(kind: Transform, fft: &Arc<dyn Fft<f64>>, buf: &mut [Complex64], a: &[f64]) -> Vec<f64> {
    let n = a.len();
    let len = buf.len();
    let lf = len as f64;
    buf.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
    match kind {
        Transform::Idc => {
            let w0 = (1.0 / n as f64).sqrt();
            let w = (2.0 / n as f64).sqrt();
            for (j, &v) in a.iter().enumerate() {
                let weight = if j == 0 { w0 } else { w };
                buf[j] = Complex64::from_polar(weight * v, -PI * j as f64 / lf);
            }
        }
        Transform::Ids => {
            for (j, &v) in a.iter().enumerate() {
                buf[j + 1] = Complex64::new(v, 0.0);
            }
        }
        Transform::Gdc => {
            for (j, &v) in a.iter().enumerate() {
                buf[j] = Complex64::from_polar(v, -PI * j as f64 / lf);
            }
        }
        Transform::Gds => {
            for (j, &v) in a.iter().enumerate() {
                buf[j] = Complex64::new(v, 0.0);
            }
        }
    }
    fft.process(buf);
    (1..=n)
        .map(|s| {
            let y = buf[s];
            let sf = s as f64;
            match kind {
                Transform::Idc => y.re,
                Transform::Ids => 2.0 / (n as f64 + 1.0) * y.im,
                Transform::Gdc => 2.0 * (Complex64::from_polar(1.0, PI * (2.0 * sf - 1.0) / (2.0 * lf)) * y).re,
                Transform::Gds => 2.0 * (Complex64::from_polar(1.0, PI * sf / lf) * y).im,
            }
        })
        .collect()
}

pub fn idc(a: &BlockMatrix) -> Result<BlockMatrix> {
    Transform::Idc.apply(a)
}

pub fn ids(a: &BlockMatrix) -> Result<BlockMatrix> {
    Transform::Ids.apply(a)
}

pub fn gdc(a: &BlockMatrix) -> Result<BlockMatrix> {
    Transform::Gdc.apply(a)
}

pub fn gds(a: &BlockMatrix) -> Result<BlockMatrix> {
    Transform::Gds.apply(a)
}

/// Direct `O(n^2)` per column summations.
///
/// Angles are reduced with exact integer arithmetic and sums are compensated,
/// so these serve as the accuracy reference for the fast versions.
pub mod naive {
    use super::*;

    /// Neumaier-compensated sum.
    fn compensated_sum(terms: impl Iterator<Item = f64>) -> f64 {
        let (mut sum, mut carry) = (0.0f64, 0.0f64);
        for x in terms {
            let t = sum + x;
            if sum.abs() >= x.abs() {
                carry += (sum - t) + x;
            } else {
                carry += (x - t) + sum;
            }
            sum = t;
        }
        sum + carry
    }

    /// `table[i] = f(2 pi i / period)`.
    fn table(period: usize, f: fn(f64) -> f64) -> Vec<f64> {
        (0..period).map(|i| f(2.0 * PI * i as f64 / period as f64)).collect()
    }

    /// Generic direct transform: `b_s = scale * sum_j weight(j) a_j table[index(j, s) mod period]`.
    fn direct(
        a: &BlockMatrix,
        period: usize,
        f: fn(f64) -> f64,
        index: impl Fn(usize, usize) -> usize + Sync,
        weight: impl Fn(usize) -> f64 + Sync,
        scale: f64,
    ) -> Result<BlockMatrix> {
        check_nonempty(a)?;
        let n = a.rows();
        let tab = table(period, f);
        let columns: Vec<Vec<f64>> = (0..a.cols())
            .into_par_iter()
            .map(|l| {
                let col = a.column(l);
                (1..=n)
                    .map(|s| {
                        scale
                            * compensated_sum(
                                col.iter()
                                    .enumerate()
                                    .map(|(j, &v)| weight(j) * v * tab[index(j, s) % period]),
                            )
                    })
                    .collect()
            })
            .collect();
        Ok(BlockMatrix::from_columns(n, &columns))
    }

    pub fn idc(a: &BlockMatrix) -> Result<BlockMatrix> {
        let n = a.rows().max(1);
        let (w0, w) = ((1.0 / n as f64).sqrt(), (2.0 / n as f64).sqrt());
        direct(
            a,
            4 * n,
            f64::cos,
            |j, s| j * (2 * s - 1),
            |j| if j == 0 { w0 } else { w },
            1.0,
        )
    }

    pub fn ids(a: &BlockMatrix) -> Result<BlockMatrix> {
        let n = a.rows();
        direct(
            a,
            2 * (n + 1),
            f64::sin,
            |j, s| (j + 1) * s,
            |_| 1.0,
            2.0 / (n as f64 + 1.0),
        )
    }

    pub fn gdc(a: &BlockMatrix) -> Result<BlockMatrix> {
        let n = a.rows();
        direct(
            a,
            4 * (2 * n + 1),
            f64::cos,
            |j, s| (2 * j + 1) * (2 * s - 1),
            |_| 1.0,
            2.0,
        )
    }

    pub fn gds(a: &BlockMatrix) -> Result<BlockMatrix> {
        let n = a.rows();
        direct(a, 2 * (2 * n + 1), f64::sin, |j, s| (2 * j + 1) * s, |_| 1.0, 2.0)
    }

    /// The sine transform with angle `(2j+1) s pi / (2(n+1))`.
    ///
    /// This variant does not reproduce the fourth-kind fundamental
    /// polynomials; it is kept only to document the difference from [`gds`].
    pub fn gds_half_angle(a: &BlockMatrix) -> Result<BlockMatrix> {
        let n = a.rows();
        direct(a, 4 * (n + 1), f64::sin, |j, s| (2 * j + 1) * s, |_| 1.0, 2.0)
    }

    pub fn apply(kind: Transform, a: &BlockMatrix) -> Result<BlockMatrix> {
        match kind {
            Transform::Idc => idc(a),
            Transform::Ids => ids(a),
            Transform::Gdc => gdc(a),
            Transform::Gds => gds(a),
        }
    }
}

/// `[q_{n,j}^m(w, z_l)]`, rows `j`, columns `l`.
pub fn q_matrix(kind: ChebyshevKind, pair: DegreePair, points: &[f64]) -> Result<BlockMatrix> {
    check_all_domain(points)?;
    let columns: Vec<Vec<f64>> = points
        .par_iter()
        .map(|&z| q_row_angle(kind, pair, angle_of(z)))
        .collect();
    Ok(BlockMatrix::from_columns(pair.n(), &columns))
}

/// `[(q_{n,j}^m)^(r)(w, z_l)]`, rows `j`, columns `l`.
pub fn q_deriv_matrix(kind: ChebyshevKind, pair: DegreePair, r: usize, points: &[f64]) -> Result<BlockMatrix> {
    if r == 0 {
        return q_matrix(kind, pair, points);
    }
    check_all_domain(points)?;
    let columns: Vec<Vec<f64>> = points
        .par_iter()
        .map(|&z| q_deriv_row(kind, pair, r, z.clamp(-1.0, 1.0)))
        .collect();
    Ok(BlockMatrix::from_columns(pair.n(), &columns))
}

/// Kind-specific scaled transform of a basis block.
///
/// Returns `Lambda^{-1} Phi`, i.e. row `k` holds the fundamental polynomial
/// values divided by `sqrt(lambda_k)`; the interpolant is then
/// `f . Lambda . result` with `Lambda = diag(sqrt(lambda_k))`.
pub fn kind_transform(kind: ChebyshevKind, q: &BlockMatrix) -> Result<BlockMatrix> {
    let n = q.rows() as f64;
    let mut out = Transform::for_kind(kind).apply(q)?;
    let factor = match kind {
        ChebyshevKind::First => 1.0,
        ChebyshevKind::Second => ((n + 1.0) / 2.0).sqrt(),
        ChebyshevKind::Third | ChebyshevKind::Fourth => 1.0 / (2.0 * n + 1.0).sqrt(),
    };
    if factor != 1.0 {
        let factors = vec![factor; q.rows()];
        out.scale_rows(&factors);
    }
    Ok(out)
}

/// `sqrt(lambda_k)` for the `n` nodes of the given kind.
pub fn sqrt_christoffel(kind: ChebyshevKind, n: usize) -> Result<Vec<f64>> {
    Ok(nodes(kind, n)?.lambda.iter().map(|l| l.sqrt()).collect())
}

/// Matrix of fundamental polynomial values `Phi_{n,k}^m(z_l)` (rows `k`, columns `l`).
pub fn phi_matrix(kind: ChebyshevKind, pair: DegreePair, points: &[f64]) -> Result<BlockMatrix> {
    let q = q_matrix(kind, pair, points)?;
    let mut phi = kind_transform(kind, &q)?;
    phi.scale_rows(&sqrt_christoffel(kind, pair.n())?);
    Ok(phi)
}

/// Matrix of `(Phi_{n,k}^m)^(r)(z_l)`.
pub fn phi_deriv_matrix(kind: ChebyshevKind, pair: DegreePair, r: usize, points: &[f64]) -> Result<BlockMatrix> {
    let q = q_deriv_matrix(kind, pair, r, points)?;
    let mut phi = kind_transform(kind, &q)?;
    phi.scale_rows(&sqrt_christoffel(kind, pair.n())?);
    Ok(phi)
}
