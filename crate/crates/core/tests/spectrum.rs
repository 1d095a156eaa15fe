use bilinear_core::orthopoly::{dunkl_apply_poly, GenGegenbauerFamily, Polynomial};
use bilinear_core::quad::{integrate_interval, Measure};
use bilinear_core::specfun::modified_lommel_cx;
use bilinear_core::spectrum::*;
use bilinear_core::{Cx, Params};
use proptest::prelude::*;

fn problem() -> SpectralProblem {
    SpectralProblem::new(Params::new(0.4, 0.1).unwrap(), 80, 3).unwrap()
}

fn c(re: f64) -> Cx {
    Cx::new(re, 0.0)
}

#[test]
fn truncation_must_be_at_least_ten() {
    assert!(SpectralProblem::new(Params::new(0.4, 0.1).unwrap(), 9, 1).is_err());
}

#[test]
fn t_on_a_shifted_basis_element() {
    let p = problem();
    let out = p.apply_t_shifted(&[c(1.0)]);
    assert_eq!(out.len(), 1);
    assert!((out[0] - c(1.0 / (2.0 * 1.5))).norm() < 1e-15);
}

#[test]
fn dunkl_operator_inverts_t() {
    let p = problem();
    let params = p.params();
    // g = C_2^{(β+3/2)} in the shifted basis.
    let d = [c(0.0), c(0.0), c(1.0)];
    let tg = p.apply_t_shifted(&d);
    let fam = GenGegenbauerFamily::new(params);
    let mut poly = Polynomial::zero();
    for (i, v) in tg.iter().enumerate() {
        poly = poly.add(&fam.poly(i + 1).scale(v.re));
    }
    let back = dunkl_apply_poly(params.alpha(), &poly);
    let want = fam.shifted().poly(2);
    let err = back.sub(&want).max_abs();
    assert!(err < 1e-12, "{err}");
}

#[test]
fn apply_t_reports_dropped_top_mode() {
    let p = SpectralProblem::new(Params::new(0.4, 0.1).unwrap(), 10, 1).unwrap();
    let mut a = vec![c(0.0); 10];
    a[9] = c(1.0);
    let out = p.apply_t(&CoeffVector::new(a).unwrap());
    assert_eq!(out.coeffs.len(), 10);
    assert!(out.dropped > 0.0);
}

#[test]
fn t_matches_kernel_quadrature() {
    let p = problem();
    let params = p.params();
    let a = vec![c(0.5), c(-0.25), c(0.125), c(0.3)];
    let g = CoeffVector::new(a).unwrap();
    let tg = p.apply_t(&g).coeffs.eval(params, 0.3);
    let gf = |r: f64| g.eval(params, r);
    let q = p.apply_t_quadrature(&gf, 0.3, 20).unwrap();
    assert!((tg - q).norm() < 1e-6, "{tg} vs {q}");
}

#[test]
fn recurrence_first_ratio() {
    let p = problem();
    let lam = Cx::new(0.0, 0.15);
    let a = p.recurrence_coeffs(lam, c(1.0), 5).unwrap();
    let want = -lam * 2.0 * (0.5 + 3.0);
    assert!((a.get(2) / a.get(1) - want).norm() < 1e-14);
}

#[test]
fn recurrence_matches_lommel_relation() {
    let p = problem();
    let s = 0.5;
    let lam = Cx::new(0.0, 0.15);
    let a = p.recurrence_coeffs(lam, c(1.0), 12).unwrap();
    let i = Cx::new(0.0, 1.0);
    for n in 1..=12 {
        let h = modified_lommel_cx(n as i64 - 1, s + 2.0, i * lam).unwrap();
        let want = i.powu(n as u32 - 1) * ((s + n as f64 + 1.0) / (s + 2.0)) * h;
        let got = a.get(n);
        assert!((got - want).norm() <= 1e-10 * want.norm().max(1.0), "n={n}");
    }
}

#[test]
fn recurrence_at_zero() {
    let b = normalized_coeffs(Params::new(0.4, 0.1).unwrap(), c(0.0), 12);
    for (n, v) in b.iter().enumerate() {
        let want = if n % 2 == 1 {
            0.0
        } else if n % 4 == 0 {
            1.0
        } else {
            -1.0
        };
        assert!((v - c(want)).norm() < 1e-14, "n={n} {v}");
    }
}

#[test]
fn recurrence_rejects_zero_lambda() {
    assert!(problem().recurrence_coeffs(c(0.0), c(1.0), 5).is_err());
}

#[test]
fn eigenvalues_are_imaginary_conjugate_pairs() {
    let p = problem();
    let ev = p.eigenvalues(3).unwrap();
    assert_eq!(ev.len(), 6);
    for pair in ev.chunks(2) {
        assert_eq!(pair[0].re, 0.0);
        assert_eq!(pair[1], pair[0].conj());
    }
    assert!(ev[0].im > ev[2].im && ev[2].im > ev[4].im);
    assert!(p.eigenvalues(4).is_err());
}

#[test]
fn eigenvalue_from_tan_root() {
    let p = SpectralProblem::new(Params::new(-0.5, 1.0).unwrap(), 10, 1).unwrap();
    // First positive root of tan x = x by bisection on sin x − x cos x.
    let f = |x: f64| x.sin() - x * x.cos();
    let (mut lo, mut hi) = (4.0, 4.7);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let ev = p.eigenvalues(1).unwrap();
    assert!((ev[0].im - 1.0 / lo).abs() < 1e-13, "{}", ev[0].im);
}

#[test]
fn lommel_identity_at_zeros() {
    let res = problem().lommel_zero_residuals(1, 10).unwrap();
    for (n, r) in res.iter().enumerate() {
        assert!(*r < 1e-10, "n={} {r}", n + 1);
    }
}

#[test]
fn series_matches_closed_form() {
    let p = problem();
    let v = p.eigenfunction(1, Sign::Plus, 0.37, 60).unwrap();
    assert!(v.residual < 1e-8, "{v:?}");
    assert!(v.tail_estimate < 1e-8);
}

#[test]
fn signs_are_conjugate() {
    let p = problem();
    for t in [-0.8, 0.1, 0.55] {
        let a = p.eigenfunction(2, Sign::Plus, t, 60).unwrap();
        let b = p.eigenfunction(2, Sign::Minus, t, 60).unwrap();
        assert!((a.series - b.series.conj()).norm() < 1e-12);
        assert!((a.closed - b.closed.conj()).norm() < 1e-12);
    }
}

#[test]
fn eigen_residual_small_and_decreasing() {
    let p = problem();
    for k in 1..=3 {
        for s in Sign::both() {
            let r80 = p.eigen_residual(k, s, 80).unwrap();
            assert!(r80 < 1e-6, "k={k} {r80}");
            let r10 = p.eigen_residual(k, s, 10).unwrap();
            let r20 = p.eigen_residual(k, s, 20).unwrap();
            assert!(r20 < r10, "k={k} {r10} {r20}");
        }
    }
}

#[test]
fn non_eigenvalue_detected() {
    let p = problem();
    for k in 1..=3 {
        let r = p.perturbed_residual(k, Sign::Plus, 1.01, 80).unwrap();
        assert!(r > 1e-2, "k={k} {r}");
    }
}

#[test]
fn condition_sum_stabilizes() {
    let p = problem();
    let g60 = p.eigen_coeffs(1, Sign::Plus, 60).unwrap();
    let g80 = p.eigen_coeffs(1, Sign::Plus, 80).unwrap();
    let (a, b) = (p.condition_sum(&g60), p.condition_sum(&g80));
    assert!(((b - a) / b).abs() < 1e-10);
}

#[test]
fn inverse_square_is_orthogonal_to_higher_modes() {
    let params = Params::new(0.4, 0.5).unwrap();
    let fam = GenGegenbauerFamily::new(params);
    // (1−t²)^{−1} dμ_{β+1,α} = dμ_{β,α}; the rule absorbs the weight exactly.
    let m = Measure::mu_beta_alpha(0.4, 1.5)
        .unwrap()
        .with_extra_beta(-1.0)
        .unwrap();
    for n in 1..=6 {
        let v = integrate_interval(|t| fam.eval(n, t), &m, 120).unwrap();
        assert!(v.abs() < 1e-8, "n={n} {v}");
    }
}

#[test]
fn h_ratio_closed_forms() {
    for (a, b) in [(0.4, 0.1), (-0.5, 1.0), (1.3, 0.7)] {
        let params = Params::new(a, b).unwrap();
        for n in 0..20 {
            let (x, y) = (h_ratio(params, n), h_ratio_closed(params, n));
            assert!(((x - y) / y).abs() < 1e-12, "n={n} {x} {y}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn t_is_bounded(d in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..30)) {
        let p = problem();
        let d: Vec<Cx> = d.into_iter().map(|(x, y)| Cx::new(x, y)).collect();
        let tg = CoeffVector::new(p.apply_t_shifted(&d)).unwrap();
        let m = boundedness_constant(p.params());
        prop_assert!(p.norm_base(&tg) <= m * p.norm_shifted_basis(&d) * (1.0 + 1e-12));
    }
}
