//! Built-in test functions for the command line and the experiment suites.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::VpError;

/// A univariate test function on `[-1, 1]` with analytic derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TestFunction {
    /// `1`; analytic.
    Const,
    /// `x^k`; a polynomial of degree `k`.
    Poly(u32),
    /// `|x - c|^p`; `C^q` for the largest integer `q < p` when `p` is not an even integer.
    AbsPow { p: f64, c: f64 },
    /// `1 / (1 + 25 x^2)`; analytic with poles at `+-i/5`.
    Runge,
    /// `sin(k x)`; entire.
    Sine(f64),
    /// `0` for `x < 0`, `1` for `x >= 0`; discontinuous.
    Step,
}

impl TestFunction {
    pub fn eval(&self, x: f64) -> f64 {
        self.deriv(0, x)
    }

    /// `r`-th derivative at `x` (`r = 0` gives the value).
    pub fn deriv(&self, r: u32, x: f64) -> f64 {
        match *self {
            TestFunction::Const => {
                if r == 0 {
                    1.0
                } else {
                    0.0
                }
            }
            TestFunction::Poly(k) => {
                if r > k {
                    0.0
                } else {
                    falling(k as f64, r) * x.powi((k - r) as i32)
                }
            }
            TestFunction::AbsPow { p, c } => {
                let y = x - c;
                if y == 0.0 {
                    return if p > r as f64 {
                        0.0
                    } else if p == r as f64 && r.is_multiple_of(2) {
                        falling(p, r)
                    } else {
                        f64::NAN
                    };
                }
                let sign = if y < 0.0 && r % 2 == 1 { -1.0 } else { 1.0 };
                sign * falling(p, r) * y.abs().powf(p - r as f64)
            }
            TestFunction::Runge => {
                // 1/(1 + 25x^2) = (1/(50a)) (1/(x - a) - 1/(x + a)), a = i/5
                let a = Complex64::new(0.0, 0.2);
                let z = Complex64::new(x, 0.0);
                let e = -(r as i32) - 1;
                let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
                let fact = falling(r as f64, r);
                let v = ((z - a).powi(e) - (z + a).powi(e)) / (50.0 * a);
                sign * fact * v.re
            }
            TestFunction::Sine(k) => k.powi(r as i32) * (k * x + r as f64 * std::f64::consts::FRAC_PI_2).sin(),
            TestFunction::Step => {
                if r > 0 || x < 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    /// True for the constant and for monomials of degree `<= degree`.
    pub fn is_polynomial_within(&self, degree: usize) -> bool {
        match *self {
            TestFunction::Const => true,
            TestFunction::Poly(k) => k as usize <= degree,
            _ => false,
        }
    }
}

fn falling(p: f64, r: u32) -> f64 {
    (0..r).map(|i| p - i as f64).product()
}

impl FromStr for TestFunction {
    type Err = VpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VpError::Parameter(format!("unknown test function '{s}'"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num =
            |i: usize| -> Result<f64, VpError> { parts.get(i).ok_or_else(bad)?.parse::<f64>().map_err(|_| bad()) };
        match (parts[0], parts.len()) {
            ("const", 1) => Ok(TestFunction::Const),
            ("poly", 2) => parts[1].parse().map(TestFunction::Poly).map_err(|_| bad()),
            ("abspow", 2) => Ok(TestFunction::AbsPow { p: num(1)?, c: 0.0 }),
            ("abspow", 3) => Ok(TestFunction::AbsPow { p: num(1)?, c: num(2)? }),
            ("runge", 1) => Ok(TestFunction::Runge),
            ("sine", 2) => Ok(TestFunction::Sine(num(1)?)),
            ("step", 1) => Ok(TestFunction::Step),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestFunction::Const => write!(f, "const"),
            TestFunction::Poly(k) => write!(f, "poly:{k}"),
            TestFunction::AbsPow { p, c } => write!(f, "abspow:{p}:{c}"),
            TestFunction::Runge => write!(f, "runge"),
            TestFunction::Sine(k) => write!(f, "sine:{k}"),
            TestFunction::Step => write!(f, "step"),
        }
    }
}

/// Bivariate test functions: `f*g` is the product `f(x) g(y)`, a single name
/// `f` means `f(x) f(y)`, and `runge2d` is `1 / (1 + 25 (x^2 + y^2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TestFunction2d {
    Product(TestFunction, TestFunction),
    Runge2d,
}

impl TestFunction2d {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            TestFunction2d::Product(f, g) => f.eval(x) * g.eval(y),
            TestFunction2d::Runge2d => 1.0 / (1.0 + 25.0 * (x * x + y * y)),
        }
    }
}

impl FromStr for TestFunction2d {
    type Err = VpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "runge2d" {
            return Ok(TestFunction2d::Runge2d);
        }
        match s.split_once('*') {
            Some((a, b)) => Ok(TestFunction2d::Product(a.parse()?, b.parse()?)),
            None => {
                let f: TestFunction = s.parse()?;
                Ok(TestFunction2d::Product(f, f))
            }
        }
    }
}

impl fmt::Display for TestFunction2d {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestFunction2d::Product(a, b) => write!(f, "{a}*{b}"),
            TestFunction2d::Runge2d => write!(f, "runge2d"),
        }
    }
}
