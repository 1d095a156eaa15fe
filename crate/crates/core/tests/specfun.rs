use bilinear_core::specfun::*;
use bilinear_core::Cx;
use proptest::prelude::*;
use std::f64::consts::PI;

#[test]
fn gamma_at_one_half() {
    let g = gamma(0.5).unwrap();
    assert!((g - 1.772_453_850_905_516).abs() < 1e-15);
    assert!((g * g - PI).abs() < 1e-14);
    assert_eq!(pochhammer(3.7, 0), 1.0);
}

#[test]
fn script_i_matches_bessel_on_grid() {
    for alpha in [-0.5, 0.0, 0.7, 1.9] {
        let c = 2f64.powf(alpha) * gamma(alpha + 1.0).unwrap();
        for i in -40..=40 {
            if i == 0 {
                continue;
            }
            let x = i as f64 * 0.25;
            let want = c * bessel_j(alpha, x.abs()).unwrap() / x.abs().powf(alpha);
            let got = script_i(alpha, Cx::new(0.0, x)).unwrap();
            assert!((got.re - want).abs() < 1e-12, "alpha={alpha} x={x}");
        }
    }
}

#[test]
fn dunkl_kernel_series_value() {
    // 40 terms of the two-𝓘 combination summed directly.
    let (a, x) = (0.3f64, 1.7f64);
    let series = |al: f64| {
        let mut s = 0.0;
        for n in 0..40 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            s += sign * (x / 2.0).powi(2 * n)
                / (gamma(n as f64 + 1.0).unwrap() * gamma(n as f64 + al + 1.0).unwrap());
        }
        s * gamma(al + 1.0).unwrap()
    };
    let want = Cx::new(series(a), x / (2.0 * (a + 1.0)) * series(a + 1.0));
    assert!((dunkl_kernel(a, x).unwrap() - want).norm() < 1e-13);
}

#[test]
fn zeros_interlace_and_vanish() {
    for nu in [0.0, 0.5, 1.5, 2.3] {
        let a = bessel_zeros(nu, 12).unwrap();
        let b = bessel_zeros(nu + 1.0, 12).unwrap();
        for k in 0..12 {
            assert!(bessel_j(nu, a.zeros()[k]).unwrap().abs() < 1e-11);
            assert!(a.zeros()[k] < b.zeros()[k]);
            if k + 1 < 12 {
                assert!(b.zeros()[k] < a.zeros()[k + 1]);
                let gap = a.zeros()[k + 1] - a.zeros()[k];
                assert!(gap > 2.0 && gap < PI + 1.0);
            }
        }
    }
}

#[test]
fn lommel_hurwitz_sign_stabilizes() {
    let a = 1.8;
    let j = bessel_zeros(a - 1.0, 1).unwrap().get(1).unwrap();
    let sign = |n: i64| {
        let h = modified_lommel(n, a, 1.0 / j).unwrap();
        let scale = gamma(n as f64 + a).unwrap() * (2.0 / j).powf(n as f64 + a - 1.0);
        (h / scale).signum()
    };
    let s20 = sign(20);
    for n in 21..=40 {
        assert_eq!(sign(n), s20, "n={n}");
    }
}

#[test]
fn lommel_parity() {
    let (a, z) = (2.6, 0.4);
    let p = lommel(3, a, z).unwrap();
    let m = lommel(3, a, -z).unwrap();
    assert!((m + p).abs() < 1e-12 * p.abs());
    assert!((modified_lommel(1, 2.5, 0.2).unwrap() - 1.0).abs() < 1e-15);
}

proptest! {
    #[test]
    fn kernel_modulus_and_symmetry(alpha in -0.9f64..3.0, x in -20.0f64..20.0) {
        let e = dunkl_kernel(alpha, x).unwrap();
        let m = dunkl_kernel(alpha, -x).unwrap();
        prop_assert!((e * e.conj()).re >= 0.0);
        prop_assert!((e.re - m.re).abs() <= 1e-13 * e.re.abs().max(1.0));
        prop_assert!((e.im + m.im).abs() <= 1e-13 * e.im.abs().max(1.0));
    }

    #[test]
    fn ratio_is_even(nu in -0.9f64..5.0, x in 0.0f64..40.0) {
        let p = bessel_j_ratio(nu, x).unwrap();
        let m = bessel_j_ratio(nu, -x).unwrap();
        prop_assert_eq!(p, m);
    }

    #[test]
    fn three_term_recurrence(nu in 0.0f64..5.0, x in 0.5f64..45.0) {
        let j = bessel_j_orders(nu, 3, x).unwrap();
        let lhs = j[0] + j[2];
        let rhs = 2.0 * (nu + 1.0) / x * j[1];
        prop_assert!((lhs - rhs).abs() < 1e-11 * j.iter().fold(0.0f64, |m, v| m.max(v.abs())));
    }
}
