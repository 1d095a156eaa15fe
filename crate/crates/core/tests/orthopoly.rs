use bilinear_core::orthopoly::*;
use bilinear_core::quad::{integrate_interval, Measure};
use bilinear_core::specfun::gamma;
use bilinear_core::Params;
use proptest::prelude::*;

fn fam(a: f64, b: f64) -> GenGegenbauerFamily {
    GenGegenbauerFamily::new(Params::new(a, b).unwrap())
}

#[test]
fn jacobi_degree_zero() {
    let j = JacobiFamily::new(0.3, -0.2).unwrap();
    for y in [-1.0, -0.3, 0.4, 1.0] {
        assert_eq!(j.eval(0, y), 1.0);
    }
}

#[test]
fn jacobi_shift_in_b() {
    let (a, b, z) = (0.3, -0.2, 0.37);
    let j = JacobiFamily::new(a, b).unwrap();
    let jb = JacobiFamily::new(a, b + 1.0).unwrap();
    let n = 4.0;
    let rhs = (2.0 * (n + b + 1.0) * j.eval(4, z) + 2.0 * (n + 1.0) * j.eval(5, z))
        / ((2.0 * n + a + b + 2.0) * (1.0 + z));
    assert!((jb.eval(4, z) - rhs).abs() < 1e-12);
}

#[test]
fn jacobi_lowering_in_b() {
    for &(a, b) in &[(0.3, 0.6), (1.2, 0.1), (-0.4, 0.9)] {
        let lo = JacobiFamily::new(a, b - 1.0).unwrap();
        let j = JacobiFamily::new(a, b).unwrap();
        for n in 1..8 {
            let nf = n as f64;
            for &y in &[-0.7, 0.2, 0.95] {
                let lhs = (2.0 * nf + a + b) * lo.eval(n, y);
                let rhs = (nf + a + b) * j.eval(n, y) + (nf + a) * j.eval(n - 1, y);
                assert!(
                    (lhs - rhs).abs() < 1e-11 * rhs.abs().max(1.0),
                    "({a},{b},{n},{y})"
                );
            }
        }
    }
}

#[test]
fn first_gegenbauer_member() {
    let f = fam(0.4, 0.25);
    assert_eq!(f.eval(0, 0.7), 1.0);
    assert!((f.eval(1, 0.7) - 1.65 / 1.4 * 0.7).abs() < 1e-15);
}

#[test]
fn low_norms_by_quadrature() {
    let (a, b) = (0.4, 0.25);
    let f = fam(a, b);
    let h0 = gamma(b + 1.0).unwrap() / (2f64.powf(a + 1.0) * gamma(a + b + 2.0).unwrap());
    assert!((f.norm(0) - h0).abs() < 1e-14 * h0);
    let m = Measure::mu_beta_alpha(a, b).unwrap();
    for n in 0..2 {
        let q = integrate_interval(|t| f.eval(n, t).powi(2), &m, 60).unwrap();
        assert!((q - f.norm(n)).abs() < 1e-12 * q, "n={n}");
    }
    let z = integrate_interval(|t| f.eval(3, t) * f.eval(5, t), &m, 60).unwrap();
    assert!(z.abs() < 1e-9);
}

#[test]
fn orthogonality_matrix() {
    let f = fam(0.4, 0.25);
    let m = Measure::mu_beta_alpha(0.4, 0.25).unwrap();
    for n in 0..=8 {
        let h = f.norm(n);
        for k in 0..=8 {
            let v = integrate_interval(|t| f.eval(n, t) * f.eval(k, t), &m, 60).unwrap();
            let want = if n == k { h } else { 0.0 };
            assert!((v - want).abs() / h < 1e-8, "({n},{k})");
        }
    }
}

#[test]
fn dunkl_operator_lowers_the_family() {
    for &(a, b) in &[(0.3, 0.6), (0.4, 0.1)] {
        let f = fam(a, b);
        let sh = f.shifted();
        for n in 1..=10 {
            let lhs = dunkl_apply_poly(a, &f.poly(n));
            let rhs = sh.poly(n - 1).scale(2.0 * (a + b + 1.0));
            let err = lhs.sub(&rhs).max_abs();
            assert!(err < 1e-12 * rhs.max_abs().max(1.0), "({a},{b},{n}) {err}");
        }
    }
}

#[test]
fn connection_residual() {
    let p = Params::new(0.5, 0.25).unwrap();
    let (f, sh) = (
        GenGegenbauerFamily::new(p),
        GenGegenbauerFamily::new(p).shifted(),
    );
    let (n, r) = (3, 0.6);
    let c = gengeg_connection(p, n).unwrap();
    let lhs = 1.75 * (1.0 - r * r) * sh.eval(n - 1, r);
    let rhs = c.a_n * f.eval(n - 1, r) - c.b_n * f.eval(n + 1, r);
    assert!((lhs - rhs).abs() < 1e-12);
}

#[test]
fn lowering_connection_residual() {
    let p = Params::new(0.2, 0.1).unwrap();
    let (f, sh) = (
        GenGegenbauerFamily::new(p),
        GenGegenbauerFamily::new(p).shifted(),
    );
    let (n, t) = (4, -0.33);
    let rhs = lowering_factor(p, n) * (sh.eval(n, t) - sh.eval(n - 2, t));
    assert!((f.eval(n, t) - rhs).abs() < 1e-12);
}

#[test]
fn connection_signs() {
    for &(a, b) in &[(0.4, 0.25), (-0.5, -0.3), (2.0, -0.9)] {
        let p = Params::new(a, b).unwrap();
        for n in 1..20 {
            let c = gengeg_connection(p, n).unwrap();
            assert!(c.a_n > 0.0 && c.b_n >= 0.0, "({a},{b},{n})");
        }
    }
}

proptest! {
    #[test]
    fn parity(a in -0.9f64..2.0, b in -0.9f64..2.0, t in -1.0f64..1.0, n in 0usize..=20) {
        prop_assume!(a + b > -0.9);
        let f = fam(a, b);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let (x, y) = (f.eval(n, t), f.eval(n, -t));
        prop_assert!((y - sign * x).abs() <= 1e-12 * x.abs().max(1.0));
    }

    #[test]
    fn exact_degree(a in -0.9f64..2.0, b in -0.9f64..2.0, n in 0usize..=12) {
        prop_assume!(a + b > -0.9);
        prop_assert_eq!(fam(a, b).poly(n).degree(), Some(n));
    }

    #[test]
    fn norms_are_positive(a in -0.9f64..3.0, b in -0.9f64..3.0, n in 0usize..40) {
        prop_assume!(a + b > -0.9);
        prop_assert!(fam(a, b).norm(n) > 0.0);
    }
}
