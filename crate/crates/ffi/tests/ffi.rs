use std::ffi::CStr;
use std::ptr;

use vpinterp_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(vp_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn build(kind: u32, n: usize, m: usize, f: impl Fn(f64) -> f64) -> *mut VpHandle {
    let mut x = vec![0.0; n];
    assert_eq!(
        unsafe { vp_nodes(kind, n, ptr::null_mut(), x.as_mut_ptr(), ptr::null_mut()) },
        VpStatus::Ok
    );
    let samples: Vec<f64> = x.iter().map(|&x| f(x)).collect();
    let mut h = ptr::null_mut();
    let status = unsafe { vp_interpolant_new(kind, n, m, samples.as_ptr(), n, &mut h) };
    assert_eq!(status, VpStatus::Ok, "{}", last_error());
    h
}

#[test]
fn reproduces_low_degree_polynomials() {
    for kind in 1..=4 {
        let h = build(kind, 20, 7, |x| x * x * x - x);
        let pts = [-1.0, -0.3, 0.0, 0.45, 1.0];
        let mut v = [0.0; 5];
        let mut d = [0.0; 5];
        unsafe {
            assert_eq!(
                vp_interpolant_evaluate(h, pts.as_ptr(), v.as_mut_ptr(), 5),
                VpStatus::Ok
            );
            assert_eq!(
                vp_interpolant_evaluate_deriv(h, 1, pts.as_ptr(), d.as_mut_ptr(), 5),
                VpStatus::Ok
            );
            vp_interpolant_free(h);
        }
        for i in 0..5 {
            let z = pts[i];
            assert!((v[i] - (z * z * z - z)).abs() < 1e-12);
            assert!((d[i] - (3.0 * z * z - 1.0)).abs() < 1e-10);
        }
    }
}

#[test]
fn nodes_match_core() {
    let set = vpinterp::nodes(vpinterp::ChebyshevKind::Third, 9).unwrap();
    let (mut t, mut x, mut l) = (vec![0.0; 9], vec![0.0; 9], vec![0.0; 9]);
    assert_eq!(
        unsafe { vp_nodes(3, 9, t.as_mut_ptr(), x.as_mut_ptr(), l.as_mut_ptr()) },
        VpStatus::Ok
    );
    assert_eq!((t, x, l), (set.t, set.x, set.lambda));
}

#[test]
fn lebesgue_constant_below_bound() {
    let (mut c, mut b) = (0.0, 0.0);
    unsafe {
        assert_eq!(vp_lebesgue_constant(1, 50, 20, 0.0, 0.0, 2000, &mut c), VpStatus::Ok);
        assert_eq!(vp_lebesgue_bound(1, 50, 20, &mut b), VpStatus::Ok);
    }
    assert!(c >= 1.0 && c <= b, "{c} {b}");
}

#[test]
fn error_codes_and_messages() {
    let mut h = ptr::null_mut();
    let s = [1.0, 2.0, 3.0];
    unsafe {
        assert_eq!(
            vp_interpolant_new(7, 3, 1, s.as_ptr(), 3, &mut h),
            VpStatus::InvalidKind
        );
        assert!(h.is_null());
        assert!(last_error().contains("kind"));
        assert_eq!(
            vp_interpolant_new(1, 3, 3, s.as_ptr(), 3, &mut h),
            VpStatus::InvalidArgument
        );
        assert_eq!(vp_interpolant_new(1, 4, 1, s.as_ptr(), 3, &mut h), VpStatus::Shape);
        assert_eq!(
            vp_interpolant_new(1, 3, 1, ptr::null(), 3, &mut h),
            VpStatus::NullPointer
        );
        assert_eq!(
            vp_interpolant_new(1, 3, 1, s.as_ptr(), 3, ptr::null_mut()),
            VpStatus::NullPointer
        );
        let bad = [1.0, f64::NAN, 3.0];
        assert_eq!(
            vp_interpolant_new(1, 3, 1, bad.as_ptr(), 3, &mut h),
            VpStatus::NonFinite
        );

        assert_eq!(vp_interpolant_new(2, 3, 1, s.as_ptr(), 3, &mut h), VpStatus::Ok);
        assert!(last_error().is_empty());
        let mut v = [0.0];
        assert_eq!(
            vp_interpolant_evaluate(h, [1.5].as_ptr(), v.as_mut_ptr(), 1),
            VpStatus::Domain
        );
        assert_eq!(
            vp_interpolant_evaluate_deriv(h, 0, [0.5].as_ptr(), v.as_mut_ptr(), 1),
            VpStatus::InvalidArgument
        );
        assert_eq!(
            vp_interpolant_evaluate(ptr::null(), [0.5].as_ptr(), v.as_mut_ptr(), 1),
            VpStatus::NullPointer
        );
        vp_interpolant_free(h);
        vp_interpolant_free(ptr::null_mut());

        let mut c = 0.0;
        assert_eq!(
            vp_lebesgue_constant(1, 10, 2, -1.0, 0.0, 1000, &mut c),
            VpStatus::InvalidArgument
        );
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/vpinterp.h")).unwrap();
    for name in [
        "typedef struct VpHandle VpHandle",
        "VP_STATUS_OK",
        "vp_interpolant_new",
        "vp_interpolant_evaluate_deriv",
        "vp_interpolant_free",
        "vp_nodes",
        "vp_lebesgue_constant",
        "vp_lebesgue_bound",
        "vp_last_error_message",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
