//! Special functions checked against independent evaluation routes.

use std::f64::consts::PI;

use anomalab::roots::bisect;
use anomalab::specfun::{
    bessel_j, bessel_jy, bessel_k_imag, bessel_n, gamma_arg, k_imag_zero, legendre_p, ln_gamma,
    spherical_bessel_j, EULER_GAMMA,
};
use num_complex::Complex64;
use proptest::prelude::*;
use statrs::function::gamma::gamma;

/// Ascending series Σ (−1)^m (x/2)^{2m+ν} / (m! Γ(m+ν+1)), summed until the
/// terms fall below 1e-14 of the running sum. Valid for negative non-integer ν.
fn j_series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = half.powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    for m in 1..500 {
        let m = m as f64;
        term *= -half * half / (m * (m + nu));
        sum += term;
        if term.abs() < 1e-14 * sum.abs() && m > nu.abs() {
            break;
        }
    }
    sum
}

#[test]
fn bessel_j_matches_ascending_series() {
    let got = bessel_j(1.3, 2.7).unwrap();
    let want = j_series(1.3, 2.7);
    assert!((got - want).abs() < 1e-13 * want.abs(), "{got} vs {want}");

    // away from zeros, where relative accuracy is meaningful
    for &nu in &[0.0, 0.37, 1.0, 2.5, 7.1, 20.0, 50.0] {
        for &x in &[0.05, 0.5, 1.9, 2.1, 5.0, 9.0] {
            let want = j_series(nu, x);
            if want.abs() < 1e-3 * (2.0 / (PI * x)).sqrt() && want.abs() > 1e-250 && nu < x {
                continue;
            }
            let got = bessel_j(nu, x).unwrap();
            assert!(
                (got - want).abs() <= 1e-10 * want.abs(),
                "nu={nu} x={x}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn bessel_n_matches_connection_formula() {
    // N_ν = (J_ν cos νπ − J_{−ν}) / sin νπ for non-integer ν
    for &(nu, x) in &[(1.3, 2.7), (0.25, 0.4), (2.71, 6.0), (0.9, 1.1), (4.4, 3.3)] {
        let want = (j_series(nu, x) * (nu * PI).cos() - j_series(-nu, x)) / (nu * PI).sin();
        let got = bessel_n(nu, x).unwrap();
        assert!(
            (got - want).abs() < 1e-11 * want.abs().max(1.0),
            "nu={nu} x={x}: {got} vs {want}"
        );
    }
}

#[test]
fn wronskian_identity_over_grid() {
    let mut worst: f64 = 0.0;
    for i in 0..=25 {
        let nu = 2.0 * i as f64 + 0.173 * (i % 3) as f64;
        let nu = nu.min(50.0);
        for j in 0..40 {
            let x = 0.05 * 1.2f64.powi(j);
            if x > 100.0 {
                break;
            }
            let b = bessel_jy(nu, x).unwrap();
            if !b.y.is_finite() || b.y.abs() > 1e150 {
                continue;
            }
            let w = b.j * b.yp - b.jp * b.y;
            let want = 2.0 / (PI * x);
            worst = worst.max(((w - want) / want).abs());
        }
    }
    assert!(worst < 1e-8, "worst relative Wronskian defect {worst:e}");
}

#[test]
fn temme_and_steed_branches_agree_across_x_two() {
    for &nu in &[0.0, 0.4, 1.7, 3.0, 12.2] {
        let lo = bessel_jy(nu, 2.0 - 1e-9).unwrap();
        let hi = bessel_jy(nu, 2.0 + 1e-9).unwrap();
        let dx = 2e-9;
        assert!((hi.j - lo.j - dx * lo.jp).abs() < 1e-12 * lo.j.abs().max(1e-3));
        assert!((hi.y - lo.y - dx * lo.yp).abs() < 1e-12 * lo.y.abs().max(1e-3));
    }
}

#[test]
fn spherical_bessel_matches_half_integer_bessel() {
    for l in 0..12u32 {
        for &x in &[0.3, 1.5, 4.0, 7.1, 15.0, 60.0] {
            let want = (PI / (2.0 * x)).sqrt() * bessel_j(l as f64 + 0.5, x).unwrap();
            let got = spherical_bessel_j(l, x).unwrap();
            assert!(
                (got - want).abs() < 1e-12 * want.abs().max(1e-3 / x),
                "l={l} x={x}: {got} vs {want}"
            );
        }
    }
    let want = (PI / (2.0 * 7.1)).sqrt() * bessel_j(4.5, 7.1).unwrap();
    assert!((spherical_bessel_j(4, 7.1).unwrap() - want).abs() < 1e-13);
}

#[test]
fn gamma_arg_matches_digamma_series() {
    // arg Γ(1+iΞ) = −γΞ + Σ_{n≥1} [Ξ/n − arctan(Ξ/n)], tail ≈ Ξ³/(6N²)
    let xi: f64 = 1.0;
    let n_terms = 200_000;
    let mut s = 0.0;
    for n in (1..=n_terms).rev() {
        let t = xi / n as f64;
        s += t - t.atan();
    }
    let tail = xi.powi(3) / (6.0 * (n_terms as f64).powi(2));
    let want = -EULER_GAMMA * xi + s + tail;
    assert!(
        (gamma_arg(xi) - want).abs() < 1e-12,
        "{} vs {want}",
        gamma_arg(xi)
    );
}

/// K_{iΞ}(x) = −π Im I_{iΞ}(x) / sinh πΞ, computed as
/// π (I_{−iΞ} − I_{iΞ}) / (2 i sinh πΞ) in complex arithmetic from the
/// ascending series of I_{±iΞ}.
fn k_imag_complex_series(xi: f64, x: f64) -> Complex64 {
    let i_series = |order: Complex64| {
        let half = Complex64::new(0.5 * x, 0.0);
        let lead = (order * half.ln() - ln_gamma(order + 1.0).unwrap()).exp();
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for m in 1..200 {
            let m = m as f64;
            term *= 0.25 * x * x / (m * (order + m));
            sum += term;
            if term.norm() < 1e-18 * sum.norm() {
                break;
            }
        }
        lead * sum
    };
    let plus = i_series(Complex64::new(0.0, xi));
    let minus = i_series(Complex64::new(0.0, -xi));
    (minus - plus) * PI / (Complex64::new(0.0, 2.0) * (PI * xi).sinh())
}

#[test]
fn k_imag_is_real_and_matches_complex_series() {
    for &xi in &[0.1, 0.5, 1.0, 2.0, 4.0] {
        for &x in &[1e-5, 1e-3, 0.05, 0.3, 1.0, 2.0] {
            let c = k_imag_complex_series(xi, x);
            assert!(c.im.abs() < 1e-12, "imaginary residue {:e}", c.im);
            let k = bessel_k_imag(xi, x).unwrap();
            assert!(
                (k - c.re).abs() < 1e-9 * c.re.abs().max(1e-3),
                "xi={xi} x={x}: {k} vs {}",
                c.re
            );
        }
    }
}

#[test]
fn k_imag_order_zero_quadrature_oracle() {
    // ∫₀^∞ e^{−cosh t} dt by straightforward adaptive Simpson on [0, 8]
    fn simpson<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        tol: f64,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (f(0.5 * (a + m)), f(0.5 * (m + b)));
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        let left = (m - a) / 6.0 * (fa + 4.0 * lm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * rm + fb);
        if (left + right - whole).abs() < 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            simpson(f, a, m, fa, lm, fm, 0.5 * tol) + simpson(f, m, b, fm, rm, fb, 0.5 * tol)
        }
    }
    let f = |t: f64| (-t.cosh()).exp();
    let want = simpson(&f, 0.0, 8.0, f(0.0), f(4.0), f(8.0), 1e-15);
    assert!((bessel_k_imag(0.0, 1.0).unwrap() - want).abs() < 1e-12);
}

#[test]
fn k_imag_zeros_follow_log_periodic_tower() {
    let xi = 0.1;
    for n in 1..=3u32 {
        let pred = k_imag_zero(xi, n).unwrap();
        let f = |t: f64| bessel_k_imag(xi, t.exp()).unwrap();
        let root = bisect(f, pred.ln() - 1.0, pred.ln() + 1.0, 1e-12)
            .unwrap()
            .exp();
        assert!(
            (root / pred - 1.0).abs() < 1e-3,
            "n={n}: {root:e} vs {pred:e}"
        );
    }
}

proptest! {
    #[test]
    fn legendre_recurrence_holds(l in 1u32..60, x in -1.0f64..=1.0) {
        let lhs = (l as f64 + 1.0) * legendre_p(l + 1, x).unwrap();
        let rhs = (2.0 * l as f64 + 1.0) * x * legendre_p(l, x).unwrap()
            - l as f64 * legendre_p(l - 1, x).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12 * (l as f64 + 1.0));
    }

    #[test]
    fn gamma_arg_is_odd(xi in 0.0f64..20.0) {
        prop_assert_eq!(gamma_arg(-xi), -gamma_arg(xi));
    }

    #[test]
    fn bessel_k_imag_order_zero_is_positive_decreasing(x in 1e-3f64..40.0) {
        let a = bessel_k_imag(0.0, x).unwrap();
        let b = bessel_k_imag(0.0, x * 1.01).unwrap();
        prop_assert!(a > 0.0 && b < a);
    }
}
