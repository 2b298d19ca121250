//! Orthonormal Chebyshev systems of the four kinds.
//!
//! The four weights are the Jacobi weights `(1-x)^alpha (1+x)^beta` with
//! `|alpha| = |beta| = 1/2`. Each induces an orthonormal polynomial family
//! `p_n(w, x)` that has a closed trigonometric form in `t = arccos x`:
//!
//! ```text
//! first   sqrt(2/pi) cos(n t)                  (1/sqrt(pi) for n = 0)
//! second  sqrt(2/pi) sin((n+1) t) / sin t
//! third   (1/sqrt(pi)) cos((2n+1) t/2) / cos(t/2)
//! fourth  (1/sqrt(pi)) sin((2n+1) t/2) / sin(t/2)
//! ```
//!
//! All quotients are reduced to the Dirichlet-type ratio `sin(N v) / sin v`,
//! which is evaluated through its Taylor expansion next to the removable
//! singularities `v = j pi`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{angle_of, check_domain, Result, VpError};

/// Below this value of `|sin v|` the ratio `sin(N v)/sin v` switches to its
/// Taylor expansion.
const RATIO_TAYLOR_THRESHOLD: f64 = 1e-6;

/// The four Chebyshev weights `w_1 .. w_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebyshevKind {
    /// `w_1 = (1-x^2)^(-1/2)`
    First,
    /// `w_2 = (1-x^2)^(1/2)`
    Second,
    /// `w_3 = sqrt((1+x)/(1-x))`
    Third,
    /// `w_4 = sqrt((1-x)/(1+x))`
    Fourth,
}

impl ChebyshevKind {
    pub const ALL: [ChebyshevKind; 4] = [
        ChebyshevKind::First,
        ChebyshevKind::Second,
        ChebyshevKind::Third,
        ChebyshevKind::Fourth,
    ];

    /// Exponent of `(1-x)` in the weight.
    pub fn alpha(self) -> f64 {
        match self {
            ChebyshevKind::First | ChebyshevKind::Third => -0.5,
            ChebyshevKind::Second | ChebyshevKind::Fourth => 0.5,
        }
    }

    /// Exponent of `(1+x)` in the weight.
    pub fn beta(self) -> f64 {
        match self {
            ChebyshevKind::First | ChebyshevKind::Fourth => -0.5,
            ChebyshevKind::Second | ChebyshevKind::Third => 0.5,
        }
    }

    /// `alpha + beta`, always an integer for these weights.
    pub fn chi(self) -> i64 {
        match self {
            ChebyshevKind::First => -1,
            ChebyshevKind::Second => 1,
            ChebyshevKind::Third | ChebyshevKind::Fourth => 0,
        }
    }

    pub fn weight(self, x: f64) -> f64 {
        (1.0 - x).powf(self.alpha()) * (1.0 + x).powf(self.beta())
    }

    /// Short tag used on the command line and in CSV headers.
    pub fn tag(self) -> &'static str {
        match self {
            ChebyshevKind::First => "w1",
            ChebyshevKind::Second => "w2",
            ChebyshevKind::Third => "w3",
            ChebyshevKind::Fourth => "w4",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChebyshevKind::First => "first",
            ChebyshevKind::Second => "second",
            ChebyshevKind::Third => "third",
            ChebyshevKind::Fourth => "fourth",
        }
    }

    /// Angle `t_k^n` of the `k`-th zero of `p_n`, with `k` counted from 1.
    pub fn node_angle(self, n: usize, k: usize) -> f64 {
        let (n, k) = (n as f64, k as f64);
        match self {
            ChebyshevKind::First => (2.0 * k - 1.0) * PI / (2.0 * n),
            ChebyshevKind::Second => k * PI / (n + 1.0),
            ChebyshevKind::Third => (2.0 * k - 1.0) * PI / (2.0 * n + 1.0),
            ChebyshevKind::Fourth => 2.0 * k * PI / (2.0 * n + 1.0),
        }
    }

    /// Effective node count `n_w`: `n`, `n + 1`, `(2n + 1) / 2`, `(2n + 1) / 2`.
    pub fn n_w(self, n: usize) -> f64 {
        let n = n as f64;
        match self {
            ChebyshevKind::First => n,
            ChebyshevKind::Second => n + 1.0,
            ChebyshevKind::Third | ChebyshevKind::Fourth => (2.0 * n + 1.0) / 2.0,
        }
    }

    /// Christoffel number attached to the node of angle `t` in a rule with `n` nodes.
    pub fn christoffel(self, n: usize, t: f64) -> f64 {
        let n = n as f64;
        match self {
            ChebyshevKind::First => PI / n,
            ChebyshevKind::Second => PI / (n + 1.0) * t.sin().powi(2),
            ChebyshevKind::Third => 4.0 * PI / (2.0 * n + 1.0) * (0.5 * t).cos().powi(2),
            ChebyshevKind::Fourth => 4.0 * PI / (2.0 * n + 1.0) * (0.5 * t).sin().powi(2),
        }
    }
}

impl fmt::Display for ChebyshevKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ChebyshevKind {
    type Err = VpError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "w1" | "1" | "first" => Ok(ChebyshevKind::First),
            "w2" | "2" | "second" => Ok(ChebyshevKind::Second),
            "w3" | "3" | "third" => Ok(ChebyshevKind::Third),
            "w4" | "4" | "fourth" => Ok(ChebyshevKind::Fourth),
            other => Err(VpError::Parameter(format!("unknown Chebyshev kind '{other}'"))),
        }
    }
}

/// `sin(big_n * v) / sin(v)` with the continuous extension at `v = j pi`.
pub(crate) fn sine_ratio(big_n: u64, v: f64) -> f64 {
    let s = v.sin();
    if s.abs() >= RATIO_TAYLOR_THRESHOLD {
        return (big_n as f64 * v).sin() / s;
    }
    let j = (v / PI).round();
    let h = v - j * PI;
    // sin(N(j pi + h)) / sin(j pi + h) = (-1)^((N-1) j) sin(N h) / sin h
    let parity = ((big_n.wrapping_sub(1)) as i128 * j as i128).rem_euclid(2);
    let sign = if parity == 0 { 1.0 } else { -1.0 };
    let nn = big_n as f64;
    let n2 = nn * nn;
    let h2 = h * h;
    let c2 = -(n2 - 1.0) / 6.0;
    let c4 = (n2 - 1.0) * (3.0 * n2 - 7.0) / 360.0;
    let c6 = -(n2 - 1.0) * (3.0 * n2 * n2 - 18.0 * n2 + 31.0) / 15120.0;
    sign * nn * (1.0 + h2 * (c2 + h2 * (c4 + h2 * c6)))
}

/// `p_n(w, cos t)` for an angle `t` in `[0, pi]`.
pub fn ortho_poly_angle(kind: ChebyshevKind, n: usize, t: f64) -> f64 {
    let inv_sqrt_pi = 1.0 / PI.sqrt();
    match kind {
        ChebyshevKind::First => {
            if n == 0 {
                inv_sqrt_pi
            } else {
                (2.0 / PI).sqrt() * (n as f64 * t).cos()
            }
        }
        ChebyshevKind::Second => (2.0 / PI).sqrt() * sine_ratio(n as u64 + 1, t),
        // cos((2n+1)t/2)/cos(t/2) = (-1)^n sin((2n+1)s/2)/sin(s/2), s = pi - t
        ChebyshevKind::Third => {
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * inv_sqrt_pi * sine_ratio(2 * n as u64 + 1, 0.5 * (PI - t))
        }
        ChebyshevKind::Fourth => inv_sqrt_pi * sine_ratio(2 * n as u64 + 1, 0.5 * t),
    }
}

/// Orthonormal polynomial `p_n(w, x)`.
pub fn ortho_poly(kind: ChebyshevKind, n: usize, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(ortho_poly_angle(kind, n, angle_of(x)))
}

/// `p_0 .. p_{count-1}` at the angle `t`.
pub fn ortho_row_angle(kind: ChebyshevKind, count: usize, t: f64) -> Vec<f64> {
    (0..count).map(|j| ortho_poly_angle(kind, j, t)).collect()
}

/// `p_j(w, x_k)` for every node `k` (rows) and `j < count` (columns).
///
/// Node angles are `a_k pi / D` with integer `a_k`, so every trigonometric
/// argument is an integer multiple of `pi / (2D)` and is read from a table
/// after exact reduction modulo `2 pi`.
pub fn node_ortho_table(kind: ChebyshevKind, n: usize, count: usize) -> Vec<Vec<f64>> {
    let (denom, numer): (u64, fn(u64) -> u64) = match kind {
        ChebyshevKind::First => (2 * n as u64, |k| 2 * k - 1),
        ChebyshevKind::Second => (n as u64 + 1, |k| k),
        ChebyshevKind::Third => (2 * n as u64 + 1, |k| 2 * k - 1),
        ChebyshevKind::Fourth => (2 * n as u64 + 1, |k| 2 * k),
    };
    let period = 4 * denom;
    let unit = PI / (2 * denom) as f64;
    let cos_t: Vec<f64> = (0..period).map(|s| (s as f64 * unit).cos()).collect();
    let sin_t: Vec<f64> = (0..period).map(|s| (s as f64 * unit).sin()).collect();
    let (c1, c2) = ((2.0 / PI).sqrt(), 1.0 / PI.sqrt());
    (1..=n as u64)
        .map(|k| {
            let a = numer(k);
            (0..count as u64)
                .map(|j| match kind {
                    ChebyshevKind::First if j == 0 => c2,
                    ChebyshevKind::First => c1 * cos_t[((2 * a * j) % period) as usize],
                    ChebyshevKind::Second => {
                        c1 * sin_t[((2 * a * (j + 1)) % period) as usize] / sin_t[(2 * a) as usize]
                    }
                    ChebyshevKind::Third => c2 * cos_t[((a * (2 * j + 1)) % period) as usize] / cos_t[a as usize],
                    ChebyshevKind::Fourth => c2 * sin_t[((a * (2 * j + 1)) % period) as usize] / sin_t[a as usize],
                })
                .collect()
        })
        .collect()
}

/// Zeros of `p_n(w)` with their Christoffel numbers.
///
/// Index `i` of each vector holds the node numbered `k = i + 1`; angles are
/// increasing so the abscissae `x` are decreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    pub kind: ChebyshevKind,
    pub n: usize,
    pub t: Vec<f64>,
    pub x: Vec<f64>,
    pub lambda: Vec<f64>,
}

impl NodeSet {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Angular gaps `t_k - t_{k-1}` with `t_0 = 0`.
    pub fn delta_t(&self) -> Vec<f64> {
        let mut prev = 0.0;
        self.t
            .iter()
            .map(|&t| {
                let d = t - prev;
                prev = t;
                d
            })
            .collect()
    }
}

pub fn nodes(kind: ChebyshevKind, n: usize) -> Result<NodeSet> {
    if n == 0 {
        return Err(VpError::Parameter("node count must be positive".into()));
    }
    let t: Vec<f64> = (1..=n).map(|k| kind.node_angle(n, k)).collect();
    let x = t.iter().map(|t| t.cos()).collect();
    let lambda = t.iter().map(|&t| kind.christoffel(n, t)).collect();
    Ok(NodeSet { kind, n, t, x, lambda })
}

/// De la Vallée Poussin filter `mu_{n,j}^m`, `j = 0 .. n+m-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterCoefficients {
    pub n: usize,
    pub m: usize,
    pub mu: Vec<f64>,
}

pub fn vp_filter(n: usize, m: usize) -> Result<FilterCoefficients> {
    if m == 0 || m >= n {
        return Err(VpError::Parameter(format!(
            "filter needs 0 < m < n, got n = {n}, m = {m}"
        )));
    }
    let mu = (0..n + m)
        .map(|j| if j <= n - m { 1.0 } else { gamma_coeff(n, m, j) })
        .collect();
    Ok(FilterCoefficients { n, m, mu })
}

/// `gamma_{n,j}^m = (m + n - j) / (2m)`.
pub fn gamma_coeff(n: usize, m: usize, j: usize) -> f64 {
    (m as f64 + n as f64 - j as f64) / (2.0 * m as f64)
}

/// Scale factor in `p_n^(r)(w, x) = eta_n^r p_{n-r}(w phi^{2r}, x)`.
///
/// Zero when `n < r`.
pub fn eta_coeff(kind: ChebyshevKind, n: usize, r: usize) -> f64 {
    if n < r {
        return 0.0;
    }
    let chi = kind.chi() as f64;
    let nf = n as f64;
    let product: f64 =
        (0..r).map(|k| nf - k as f64).product::<f64>() * (1..=r).map(|k| nf + k as f64 + chi).product::<f64>();
    product.sqrt()
}

/// Gamma function at a positive integer or half-integer.
fn gamma_half_integer(x: f64) -> f64 {
    let mut y = x;
    let mut acc = 1.0;
    while y > 1.0 + 1e-9 {
        y -= 1.0;
        acc *= y;
    }
    if (y - 0.5).abs() < 1e-9 {
        acc * PI.sqrt()
    } else {
        acc
    }
}

/// Recurrence coefficients of the monic Jacobi polynomials with exponents `(a, b)`.
fn jacobi_alpha(k: usize, a: f64, b: f64) -> f64 {
    if k == 0 {
        return (b - a) / (a + b + 2.0);
    }
    let s = 2.0 * k as f64 + a + b;
    (b * b - a * a) / (s * (s + 2.0))
}

fn jacobi_beta(k: usize, a: f64, b: f64) -> f64 {
    let kf = k as f64;
    if k == 1 {
        return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b).powi(2) * (3.0 + a + b));
    }
    let s = 2.0 * kf + a + b;
    4.0 * kf * (kf + a) * (kf + b) * (kf + a + b) / (s * s * (s + 1.0) * (s - 1.0))
}

/// `p_0 .. p_{count-1}` of the weight `w phi^{2r}` at `x`, by the orthonormal
/// three-term recurrence.
pub fn jacobi_row(kind: ChebyshevKind, r: usize, count: usize, x: f64) -> Vec<f64> {
    let a = kind.alpha() + r as f64;
    let b = kind.beta() + r as f64;
    let mass = 2f64.powf(a + b + 1.0) * gamma_half_integer(a + 1.0) * gamma_half_integer(b + 1.0)
        / gamma_half_integer(a + b + 2.0);
    let mut row = Vec::with_capacity(count);
    if count == 0 {
        return row;
    }
    let mut prev = 0.0;
    let mut cur = 1.0 / mass.sqrt();
    row.push(cur);
    let mut sqrt_beta_k = 0.0;
    for k in 0..count - 1 {
        let sqrt_beta_next = jacobi_beta(k + 1, a, b).sqrt();
        let next = ((x - jacobi_alpha(k, a, b)) * cur - sqrt_beta_k * prev) / sqrt_beta_next;
        prev = cur;
        cur = next;
        sqrt_beta_k = sqrt_beta_next;
        row.push(cur);
    }
    row
}

/// Orthonormal polynomial of degree `k` for the weight `w phi^{2r}`,
/// i.e. Jacobi exponents `(alpha + r, beta + r)`.
pub fn jacobi_ortho_poly(kind: ChebyshevKind, r: usize, k: usize, x: f64) -> Result<f64> {
    check_domain(x)?;
    if r == 0 {
        return Ok(ortho_poly_angle(kind, k, angle_of(x)));
    }
    Ok(jacobi_row(kind, r, k + 1, x.clamp(-1.0, 1.0))[k])
}

/// Darboux kernel `K_r(x, y) = sum_{j=0}^r p_j(w,x) p_j(w,y)`.
pub fn darboux_kernel(kind: ChebyshevKind, r: usize, x: f64, y: f64) -> Result<f64> {
    check_domain(x)?;
    check_domain(y)?;
    let (tx, ty) = (angle_of(x), angle_of(y));
    Ok((0..=r)
        .map(|j| ortho_poly_angle(kind, j, tx) * ortho_poly_angle(kind, j, ty))
        .sum())
}
