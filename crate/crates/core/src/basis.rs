//! The VP polynomial basis and the fundamental VP polynomials.
//!
//! For `0 < m < n` the space spanned by `q_{n,j}^m`, `j < n`, contains every
//! polynomial of degree `<= n - m` and is contained in the polynomials of
//! degree `<= n + m - 1`. The fundamental polynomials `Phi_{n,k}^m` are the
//! cardinal functions of that space at the `n` Chebyshev nodes.

use crate::chebyshev::{
    eta_coeff, gamma_coeff, jacobi_row, node_ortho_table, nodes, ortho_poly_angle, sine_ratio, ChebyshevKind,
};
use crate::error::{angle_of, check_domain, Result, VpError};

/// Below this magnitude of the prefactor denominator (`sin t`, `cos t/2`,
/// `sin t/2`) the closed forms are replaced by the orthogonal expansion.
const CLOSED_FORM_FALLBACK: f64 = 1e-3;

/// Degree parameters `(n, m)` with `0 < m < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreePair {
    n: usize,
    m: usize,
}

impl DegreePair {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m == 0 || m >= n {
            return Err(VpError::Parameter(format!(
                "degree pair needs 0 < m < n, got n = {n}, m = {m}"
            )));
        }
        Ok(DegreePair { n, m })
    }

    /// Pair with `m = round(theta * n)`.
    pub fn from_theta(n: usize, theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < 1.0) {
            return Err(VpError::Parameter(format!("theta must lie in (0, 1), got {theta}")));
        }
        DegreePair::new(n, (theta * n as f64).round() as usize)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Localization parameter `m / n`.
    pub fn theta(&self) -> f64 {
        self.m as f64 / self.n as f64
    }

    pub fn n_w(&self, kind: ChebyshevKind) -> f64 {
        kind.n_w(self.n)
    }

    pub fn m_w(&self, kind: ChebyshevKind) -> usize {
        match kind {
            ChebyshevKind::First | ChebyshevKind::Second => self.n + self.m,
            ChebyshevKind::Third | ChebyshevKind::Fourth => 2 * (self.n + self.m) - 1,
        }
    }

    pub fn c_w(&self, kind: ChebyshevKind) -> f64 {
        if kind == ChebyshevKind::First {
            2.0
        } else {
            1.0
        }
    }

    /// Highest degree present in the VP space.
    pub fn max_degree(&self) -> usize {
        self.n + self.m - 1
    }

    /// Highest degree reproduced exactly.
    pub fn exact_degree(&self) -> usize {
        self.n - self.m
    }
}

fn check_index(index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(VpError::Index { index, bound })
    }
}

/// Combine `p_0 .. p_{n+m-1}` into `q_0 .. q_{n-1}`.
fn q_from_ortho(pair: DegreePair, p: &[f64]) -> Vec<f64> {
    let (n, m) = (pair.n, pair.m);
    (0..n)
        .map(|j| {
            if j <= n - m {
                p[j]
            } else {
                gamma_coeff(n, m, j) * p[j] - gamma_coeff(n, m, 2 * n - j) * p[2 * n - j]
            }
        })
        .collect()
}

/// `q_{n,0}^m .. q_{n,n-1}^m` at the angle `t`.
pub fn q_row_angle(kind: ChebyshevKind, pair: DegreePair, t: f64) -> Vec<f64> {
    let p: Vec<f64> = (0..pair.n + pair.m).map(|j| ortho_poly_angle(kind, j, t)).collect();
    q_from_ortho(pair, &p)
}

/// The `j`-th VP basis polynomial `q_{n,j}^m(w, x)`.
pub fn q_poly(kind: ChebyshevKind, pair: DegreePair, j: usize, x: f64) -> Result<f64> {
    check_index(j, pair.n)?;
    check_domain(x)?;
    let t = angle_of(x);
    let (n, m) = (pair.n, pair.m);
    Ok(if j <= n - m {
        ortho_poly_angle(kind, j, t)
    } else {
        gamma_coeff(n, m, j) * ortho_poly_angle(kind, j, t)
            - gamma_coeff(n, m, 2 * n - j) * ortho_poly_angle(kind, 2 * n - j, t)
    })
}

/// `(q_{n,j}^m)^(r)` for every `j < n` at `x`, with `r >= 1`.
pub fn q_deriv_row(kind: ChebyshevKind, pair: DegreePair, r: usize, x: f64) -> Vec<f64> {
    let (n, m) = (pair.n, pair.m);
    let top = n + m;
    // p_j^(r) = eta_j^r p_{j-r}(w phi^{2r}); zero for j < r
    let shifted = if top > r {
        jacobi_row(kind, r, top - r, x)
    } else {
        Vec::new()
    };
    let dp: Vec<f64> = (0..top)
        .map(|j| {
            if j < r {
                0.0
            } else {
                eta_coeff(kind, j, r) * shifted[j - r]
            }
        })
        .collect();
    q_from_ortho(pair, &dp)
}

/// `r`-th derivative of `q_{n,j}^m(w, x)`.
pub fn q_poly_deriv(kind: ChebyshevKind, pair: DegreePair, j: usize, r: usize, x: f64) -> Result<f64> {
    check_index(j, pair.n)?;
    check_domain(x)?;
    if r == 0 {
        return q_poly(kind, pair, j, x);
    }
    Ok(q_deriv_row(kind, pair, r, x.clamp(-1.0, 1.0))[j])
}

/// `lambda_k p_j(w, x_k)` for every node `k` (rows) and `j < n` (columns).
pub(crate) fn weighted_node_values(kind: ChebyshevKind, n: usize) -> Vec<Vec<f64>> {
    let set = nodes(kind, n).expect("n >= 1");
    node_ortho_table(kind, n, n)
        .into_iter()
        .zip(&set.lambda)
        .map(|(row, &lam)| row.into_iter().map(|p| lam * p).collect())
        .collect()
}

/// Fundamental VP polynomial `Phi_{n,k}^m(x)` through its orthogonal expansion.
///
/// `k` is the 0-based node index (node number `k + 1`).
pub fn fundamental(kind: ChebyshevKind, pair: DegreePair, k: usize, x: f64) -> Result<f64> {
    check_index(k, pair.n)?;
    check_domain(x)?;
    Ok(fundamental_angle(kind, pair, k, angle_of(x)))
}

pub(crate) fn fundamental_angle(kind: ChebyshevKind, pair: DegreePair, k: usize, t: f64) -> f64 {
    let n = pair.n;
    let tk = kind.node_angle(n, k + 1);
    let lam = kind.christoffel(n, tk);
    let q = q_row_angle(kind, pair, t);
    lam * (0..n).map(|j| ortho_poly_angle(kind, j, tk) * q[j]).sum::<f64>()
}

/// All fundamental polynomials at one angle, through the orthogonal expansion.
pub fn fundamental_row_angle(kind: ChebyshevKind, pair: DegreePair, t: f64) -> Vec<f64> {
    let q = q_row_angle(kind, pair, t);
    weighted_node_values(kind, pair.n)
        .iter()
        .map(|row| row.iter().zip(&q).map(|(a, b)| a * b).sum())
        .collect()
}

/// `Psi(N, M, tau) = sin(N tau/2) sin(M tau/2) / sin^2(tau/2)`.
pub fn psi_kernel(big_n: u64, big_m: u64, tau: f64) -> f64 {
    sine_ratio(big_n, 0.5 * tau) * sine_ratio(big_m, 0.5 * tau)
}

/// Denominator of the kind-specific prefactor, zero at the removable singularity.
fn closed_denominator(kind: ChebyshevKind, t: f64) -> f64 {
    match kind {
        ChebyshevKind::First => 1.0,
        ChebyshevKind::Second => t.sin(),
        ChebyshevKind::Third => (0.5 * t).cos(),
        ChebyshevKind::Fourth => (0.5 * t).sin(),
    }
}

fn closed_term(kind: ChebyshevKind, pair: DegreePair, tk: f64, t: f64, denom: f64) -> f64 {
    let (n, m) = (pair.n as u64, pair.m as u64);
    let (nf, mf) = (n as f64, m as f64);
    match kind {
        ChebyshevKind::First => (psi_kernel(2 * n, 2 * m, t - tk) + psi_kernel(2 * n, 2 * m, t + tk)) / (4.0 * nf * mf),
        ChebyshevKind::Second => {
            tk.sin() / (4.0 * mf * (nf + 1.0) * denom)
                * (psi_kernel(2 * n + 2, 2 * m, t - tk) - psi_kernel(2 * n + 2, 2 * m, t + tk))
        }
        ChebyshevKind::Third => {
            (0.5 * tk).cos() / (2.0 * mf * (2.0 * nf + 1.0) * denom)
                * (psi_kernel(2 * n + 1, 2 * m, t - tk) + psi_kernel(2 * n + 1, 2 * m, t + tk))
        }
        ChebyshevKind::Fourth => {
            (0.5 * tk).sin() / (2.0 * mf * (2.0 * nf + 1.0) * denom)
                * (psi_kernel(2 * n + 1, 2 * m, t - tk) - psi_kernel(2 * n + 1, 2 * m, t + tk))
        }
    }
}

/// Fundamental VP polynomial at `x = cos t` through its closed trigonometric form.
pub fn fundamental_closed(kind: ChebyshevKind, pair: DegreePair, k: usize, t: f64) -> Result<f64> {
    check_index(k, pair.n)?;
    if !t.is_finite() {
        return Err(VpError::Domain { value: t });
    }
    let denom = closed_denominator(kind, t);
    if denom.abs() < CLOSED_FORM_FALLBACK {
        return Ok(fundamental_angle(kind, pair, k, t.clamp(0.0, std::f64::consts::PI)));
    }
    Ok(closed_term(kind, pair, kind.node_angle(pair.n, k + 1), t, denom))
}

/// All fundamental polynomials at `x = cos t`, closed form where it is stable.
pub fn fundamental_closed_row(kind: ChebyshevKind, pair: DegreePair, t: f64) -> Vec<f64> {
    let denom = closed_denominator(kind, t);
    if denom.abs() < CLOSED_FORM_FALLBACK {
        return fundamental_row_angle(kind, pair, t);
    }
    (1..=pair.n)
        .map(|k| closed_term(kind, pair, kind.node_angle(pair.n, k), t, denom))
        .collect()
}
