use proptest::prelude::*;

use vpinterp::basis::DegreePair;
use vpinterp::chebyshev::{nodes, ChebyshevKind};
use vpinterp::interp1d::VpInterpolant;

fn kind() -> impl Strategy<Value = ChebyshevKind> {
    prop::sample::select(ChebyshevKind::ALL.to_vec())
}

/// `(n, m)` with `0 < m < n <= 64` and matching random samples.
fn setup() -> impl Strategy<Value = (ChebyshevKind, DegreePair, Vec<f64>)> {
    (kind(), 2usize..=64)
        .prop_flat_map(|(k, n)| (Just(k), Just(n), 1..n, prop::collection::vec(-5.0f64..5.0, n)))
        .prop_map(|(k, n, m, s)| (k, DegreePair::new(n, m).unwrap(), s))
}

fn points() -> Vec<f64> {
    (0..41).map(|i| -1.0 + i as f64 / 20.0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interpolates_at_nodes((k, pair, samples) in setup()) {
        let interp = VpInterpolant::build(k, pair, samples.clone()).unwrap();
        let at = interp.evaluate(&nodes(k, pair.n()).unwrap().x).unwrap();
        let scale = 1.0 + samples.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        for (a, b) in at.iter().zip(&samples) {
            prop_assert!((a - b).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn projection_is_idempotent((k, pair, samples) in setup()) {
        let first = VpInterpolant::build(k, pair, samples).unwrap();
        let again = first.evaluate(&nodes(k, pair.n()).unwrap().x).unwrap();
        let second = VpInterpolant::build(k, pair, again).unwrap();
        for (a, b) in first.coeffs().iter().zip(second.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()) * pair.n() as f64);
        }
    }

    #[test]
    fn linear_in_samples((k, pair, f) in setup(), alpha in -3.0f64..3.0, beta in -3.0f64..3.0, seed in any::<u64>()) {
        let g: Vec<f64> = (0..f.len()).map(|i| ((seed.wrapping_add(i as u64 * 7919)) % 1000) as f64 / 250.0 - 2.0).collect();
        let combo: Vec<f64> = f.iter().zip(&g).map(|(a, b)| alpha * a + beta * b).collect();
        let pts = points();
        let vf = VpInterpolant::build(k, pair, f).unwrap().evaluate(&pts).unwrap();
        let vg = VpInterpolant::build(k, pair, g).unwrap().evaluate(&pts).unwrap();
        let vc = VpInterpolant::build(k, pair, combo).unwrap().evaluate(&pts).unwrap();
        for ((a, b), c) in vf.iter().zip(&vg).zip(&vc) {
            prop_assert!((alpha * a + beta * b - c).abs() <= 1e-12 * 50.0 * pair.n() as f64);
        }
    }

    #[test]
    fn pipeline_matches_coefficient_form((k, pair, samples) in setup()) {
        let interp = VpInterpolant::build(k, pair, samples).unwrap();
        let pts = points();
        let a = interp.evaluate(&pts).unwrap();
        let b = interp.evaluate_coeffs(&pts).unwrap();
        for (u, v) in a.iter().zip(&b) {
            prop_assert!((u - v).abs() <= 1e-10);
        }
    }
}
