//! Tensor-product VP interpolation on Chebyshev grids.

use crate::basis::{fundamental_row_angle, DegreePair};
use crate::chebyshev::{nodes, ChebyshevKind};
use crate::error::{angle_of, check_all_domain, Result, VpError};
use crate::matrix::BlockMatrix;
use crate::transforms::{kind_transform, q_matrix, sqrt_christoffel};

/// Kinds and degree pairs for the two coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BivariateSpec {
    pub kinds: (ChebyshevKind, ChebyshevKind),
    pub pairs: (DegreePair, DegreePair),
}

impl BivariateSpec {
    pub fn new(kinds: (ChebyshevKind, ChebyshevKind), pairs: (DegreePair, DegreePair)) -> Self {
        BivariateSpec { kinds, pairs }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.pairs.0.n(), self.pairs.1.n())
    }
}

/// Samples `F[i][j] = f(x_i, y_j)` on the grid of `spec`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSamples {
    spec: BivariateSpec,
    values: BlockMatrix,
}

impl GridSamples {
    pub fn new(spec: BivariateSpec, values: BlockMatrix) -> Result<Self> {
        let (n1, n2) = spec.shape();
        if (values.rows(), values.cols()) != (n1, n2) {
            return Err(VpError::Shape {
                expected: format!("{n1}x{n2} samples"),
                found: format!("{}x{}", values.rows(), values.cols()),
            });
        }
        crate::error::check_finite(values.data())?;
        Ok(GridSamples { spec, values })
    }

    pub fn from_fn(spec: BivariateSpec, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let xs = nodes(spec.kinds.0, spec.pairs.0.n())?.x;
        let ys = nodes(spec.kinds.1, spec.pairs.1.n())?.x;
        let values = BlockMatrix::from_fn(xs.len(), ys.len(), |i, j| f(xs[i], ys[j]));
        GridSamples::new(spec, values)
    }

    pub fn spec(&self) -> &BivariateSpec {
        &self.spec
    }

    pub fn values(&self) -> &BlockMatrix {
        &self.values
    }
}

/// The Cartesian product of the two node sets, `x` varying slowest.
pub fn grid(spec: &BivariateSpec) -> Result<Vec<(f64, f64)>> {
    let xs = nodes(spec.kinds.0, spec.pairs.0.n())?.x;
    let ys = nodes(spec.kinds.1, spec.pairs.1.n())?.x;
    Ok(xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect())
}

/// `W = T_1^T Lambda_1 F Lambda_2 T_2` with `W[i][j] = V f(xs[i], ys[j])`.
pub fn interpolate2d(samples: &GridSamples, xs: &[f64], ys: &[f64]) -> Result<BlockMatrix> {
    check_all_domain(xs)?;
    check_all_domain(ys)?;
    let spec = samples.spec;
    let (n1, n2) = spec.shape();
    if xs.is_empty() || ys.is_empty() {
        return Ok(BlockMatrix::zeros(xs.len(), ys.len()));
    }
    let t1 = kind_transform(spec.kinds.0, &q_matrix(spec.kinds.0, spec.pairs.0, xs)?)?;
    let t2 = kind_transform(spec.kinds.1, &q_matrix(spec.kinds.1, spec.pairs.1, ys)?)?;
    let mut core = samples.values.clone();
    core.scale_rows(&sqrt_christoffel(spec.kinds.0, n1)?);
    core.scale_cols(&sqrt_christoffel(spec.kinds.1, n2)?);

    let (big1, big2) = (xs.len(), ys.len());
    let x_first = big1 * n1 * n2 + big1 * n2 * big2;
    let y_first = n1 * n2 * big2 + big1 * n1 * big2;
    if x_first <= y_first {
        t1.transpose().matmul(&core)?.matmul(&t2)
    } else {
        t1.transpose().matmul(&core.matmul(&t2)?)
    }
}

/// Double sum over bivariate fundamental polynomials.
pub fn interpolate2d_direct(samples: &GridSamples, xs: &[f64], ys: &[f64]) -> Result<BlockMatrix> {
    check_all_domain(xs)?;
    check_all_domain(ys)?;
    let spec = samples.spec;
    let phi_x: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| fundamental_row_angle(spec.kinds.0, spec.pairs.0, angle_of(x)))
        .collect();
    let phi_y: Vec<Vec<f64>> = ys
        .iter()
        .map(|&y| fundamental_row_angle(spec.kinds.1, spec.pairs.1, angle_of(y)))
        .collect();
    let f = &samples.values;
    Ok(BlockMatrix::from_fn(xs.len(), ys.len(), |i, j| {
        let mut acc = 0.0;
        for (k, a) in phi_x[i].iter().enumerate() {
            for (h, b) in phi_y[j].iter().enumerate() {
                acc += f.get(k, h) * a * b;
            }
        }
        acc
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp1d::VpInterpolant;

    fn spec(k1: ChebyshevKind, k2: ChebyshevKind, n1: usize, m1: usize, n2: usize, m2: usize) -> BivariateSpec {
        BivariateSpec::new(
            (k1, k2),
            (DegreePair::new(n1, m1).unwrap(), DegreePair::new(n2, m2).unwrap()),
        )
    }

    fn linspace(count: usize) -> Vec<f64> {
        (0..count).map(|i| -1.0 + 2.0 * i as f64 / (count - 1) as f64).collect()
    }

    #[test]
    fn grid_examples() {
        let s = spec(ChebyshevKind::First, ChebyshevKind::Third, 7, 2, 5, 3);
        let g = grid(&s).unwrap();
        assert_eq!(g.len(), 35);
        let xs = nodes(ChebyshevKind::First, 7).unwrap().x;
        let ys = nodes(ChebyshevKind::Third, 5).unwrap().x;
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                assert_eq!(g[i * 5 + j], (*x, *y));
            }
        }
        let one = nodes(ChebyshevKind::First, 1).unwrap().x;
        assert!(one[0].abs() < 1e-16);
    }

    #[test]
    fn constants_and_grid_identity() {
        for (k1, k2) in [
            (ChebyshevKind::First, ChebyshevKind::Second),
            (ChebyshevKind::Third, ChebyshevKind::Fourth),
            (ChebyshevKind::Fourth, ChebyshevKind::First),
        ] {
            let s = spec(k1, k2, 12, 5, 9, 4);
            let ones = GridSamples::from_fn(s, |_, _| 1.0).unwrap();
            let w = interpolate2d(&ones, &linspace(13), &linspace(21)).unwrap();
            assert!(w.data().iter().all(|v| (v - 1.0).abs() <= 1e-10));

            let f = GridSamples::from_fn(s, |x, y| (x + 2.0 * y).sin() * (1.0 + x * y).exp()).unwrap();
            let xs = nodes(k1, 12).unwrap().x;
            let ys = nodes(k2, 9).unwrap().x;
            let w = interpolate2d(&f, &xs, &ys).unwrap();
            assert!(w.max_abs_diff(f.values()) <= 1e-9);
        }
    }

    #[test]
    fn matches_double_sum_and_factorizes() {
        let s = spec(ChebyshevKind::Second, ChebyshevKind::Fourth, 14, 6, 11, 3);
        let g = |x: f64| (3.0 * x).cos() + x;
        let h = |y: f64| (y - 0.2).abs();
        let f = GridSamples::from_fn(s, |x, y| g(x) * h(y)).unwrap();
        let (xs, ys) = (linspace(17), linspace(8));
        let fast = interpolate2d(&f, &xs, &ys).unwrap();
        let slow = interpolate2d_direct(&f, &xs, &ys).unwrap();
        assert!(fast.max_abs_diff(&slow) <= 1e-9);

        let gx = VpInterpolant::from_fn(ChebyshevKind::Second, s.pairs.0, g)
            .unwrap()
            .evaluate(&xs)
            .unwrap();
        let hy = VpInterpolant::from_fn(ChebyshevKind::Fourth, s.pairs.1, h)
            .unwrap()
            .evaluate(&ys)
            .unwrap();
        let outer = BlockMatrix::from_fn(xs.len(), ys.len(), |i, j| gx[i] * hy[j]);
        assert!(fast.max_abs_diff(&outer) <= 1e-9);
    }

    #[test]
    fn pass_order_does_not_matter() {
        let s = spec(ChebyshevKind::First, ChebyshevKind::First, 10, 4, 6, 2);
        let f = GridSamples::from_fn(s, |x, y| 1.0 / (1.0 + 4.0 * x * x + y * y)).unwrap();
        let tall = interpolate2d(&f, &linspace(40), &linspace(3)).unwrap();
        let wide = interpolate2d(&f, &linspace(3), &linspace(40)).unwrap();
        let tall_direct = interpolate2d_direct(&f, &linspace(40), &linspace(3)).unwrap();
        let wide_direct = interpolate2d_direct(&f, &linspace(3), &linspace(40)).unwrap();
        assert!(tall.max_abs_diff(&tall_direct) <= 1e-9);
        assert!(wide.max_abs_diff(&wide_direct) <= 1e-9);
    }

    #[test]
    fn polynomial_reproduction() {
        let s = spec(ChebyshevKind::Third, ChebyshevKind::Second, 10, 3, 8, 2);
        let p = |x: f64, y: f64| x.powi(7) * y.powi(6) - 2.0 * x * x * y + 0.5;
        let f = GridSamples::from_fn(s, p).unwrap();
        let (xs, ys) = (linspace(25), linspace(19));
        let w = interpolate2d(&f, &xs, &ys).unwrap();
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in ys.iter().enumerate() {
                assert!((w.get(i, j) - p(x, y)).abs() <= 1e-8);
            }
        }
    }

    #[test]
    fn shape_and_domain_errors() {
        let s = spec(ChebyshevKind::First, ChebyshevKind::First, 4, 1, 3, 1);
        assert!(GridSamples::new(s, BlockMatrix::zeros(3, 4)).is_err());
        let f = GridSamples::new(s, BlockMatrix::zeros(4, 3)).unwrap();
        assert!(interpolate2d(&f, &[1.5], &[0.0]).is_err());
    }
}
