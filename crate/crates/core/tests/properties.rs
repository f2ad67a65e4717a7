use std::thread;

use mathieu_core::kernel::{fsecond_closed, series_branch};
use mathieu_core::series::{eval_alternating, eval_generalized, eval_mathieu_direct, SeriesParams};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decreasing_in_h(h1 in 0.0f64..200.0, dh in 0.5f64..50.0) {
        let a = eval_mathieu_direct(&SeriesParams::new(h1, 1e-10)).unwrap();
        let b = eval_mathieu_direct(&SeriesParams::new(h1 + dh, 1e-10)).unwrap();
        prop_assert!(a.enclosure.lo() >= b.enclosure.hi());
    }

    #[test]
    fn width_within_request(h in 0.0f64..1e4, tol_exp in 3i32..12) {
        let tol = 10f64.powi(-tol_exp);
        let r = eval_mathieu_direct(&SeriesParams::new(h, tol)).unwrap();
        prop_assert!(r.enclosure.contains(r.value));
        prop_assert!(r.enclosure.width() <= 2.0 * tol + 1e-15);
        let s = eval_alternating(&SeriesParams::new(h, tol)).unwrap();
        prop_assert!(s.enclosure.width() <= 2.0 * tol + 1e-15);
    }

    #[test]
    fn tighter_tolerance_nests(h in 0.0f64..100.0) {
        let coarse = eval_mathieu_direct(&SeriesParams::new(h, 1e-6)).unwrap();
        let fine = eval_mathieu_direct(&SeriesParams::new(h, 1e-10)).unwrap();
        prop_assert!(coarse.enclosure.inflate(1e-15).contains_interval(&fine.enclosure));
    }

    #[test]
    fn mu_two_is_direct(h in 0.0f64..500.0) {
        let g = eval_generalized(&SeriesParams::new(h, 1e-9).with_mu(2.0)).unwrap();
        let d = eval_mathieu_direct(&SeriesParams::new(h, 1e-9)).unwrap();
        prop_assert!(g.enclosure.overlaps(&d.enclosure));
    }

    #[test]
    fn fsecond_negative(x in 1e-6f64..40.0) {
        prop_assert!(fsecond_closed(x) < 0.0);
    }

    #[test]
    fn generalized_decreasing_in_mu(h in 0.0f64..10.0, mu in 1.2f64..4.0) {
        let a = eval_generalized(&SeriesParams::new(h, 1e-8).with_mu(mu)).unwrap();
        let b = eval_generalized(&SeriesParams::new(h, 1e-8).with_mu(mu + 0.5)).unwrap();
        // n/(n²+h)^μ decreases in μ whenever n² + h ≥ 1
        prop_assert!(a.enclosure.lo() >= b.enclosure.hi());
    }
}

#[test]
fn series_branch_tracks_leading_term_near_zero() {
    // f″(x) = −x/30 + x³/252 + O(x⁵)
    for &x in &[1e-3, 1e-2, 5e-2] {
        let v = series_branch(3, x);
        let two_terms = -x / 30.0 + x.powi(3) / 252.0;
        assert!((v - two_terms).abs() < x.powi(5) * 1e-3, "x={x}");
    }
}

#[test]
fn concurrent_calls_are_deterministic() {
    let grid: Vec<f64> = (0..16).map(|i| 0.37 * i as f64).collect();
    let serial: Vec<_> = grid
        .iter()
        .map(|&h| eval_mathieu_direct(&SeriesParams::new(h, 1e-10)).unwrap())
        .collect();
    let handles: Vec<_> = grid
        .iter()
        .map(|&h| thread::spawn(move || eval_mathieu_direct(&SeriesParams::new(h, 1e-10)).unwrap()))
        .collect();
    let parallel: Vec<_> = handles.into_iter().map(|t| t.join().unwrap()).collect();
    assert_eq!(serial, parallel);
}
