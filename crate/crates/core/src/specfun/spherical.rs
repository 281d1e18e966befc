use crate::error::{domain, Result};

/// Spherical Bessel function j_ℓ(x) for x ≥ 0.
///
/// Power series for x ≤ 1, upward recurrence from j₀, j₁ when x > ℓ, and
/// Miller's downward recurrence normalised to j₀ (or j₁) otherwise.
pub fn spherical_bessel_j(l: u32, x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("spherical_bessel_j", "x must be finite and >= 0", x));
    }
    if x == 0.0 {
        return Ok(if l == 0 { 1.0 } else { 0.0 });
    }
    if x <= 1.0 {
        return Ok(series(l, x));
    }
    let j0 = x.sin() / x;
    if l == 0 {
        return Ok(j0);
    }
    let j1 = x.sin() / (x * x) - x.cos() / x;
    if x > l as f64 {
        let (mut prev, mut cur) = (j0, j1);
        for n in 1..l {
            let next = (2 * n + 1) as f64 / x * cur - prev;
            prev = cur;
            cur = next;
        }
        return Ok(cur);
    }
    Ok(miller(l, x, j0, j1))
}

fn series(l: u32, x: f64) -> f64 {
    // x^ℓ / (2ℓ+1)!! · Σ_k (−x²/2)^k / (k! (2ℓ+3)(2ℓ+5)…(2ℓ+2k+1))
    let mut lead = 1.0;
    for n in 1..=l {
        lead *= x / (2 * n + 1) as f64;
    }
    let z = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= z / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn miller(l: u32, x: f64, j0: f64, j1: f64) -> f64 {
    let start = l as usize + x as usize + 40 + (40.0 * l as f64).sqrt() as usize;
    let mut upper = 0.0;
    let mut cur = 1e-300;
    let mut at_l = 0.0;
    let mut at_0 = 0.0;
    let mut at_1 = 0.0;
    for n in (1..=start).rev() {
        // j_{n-1} = (2n+1)/x j_n − j_{n+1}
        let lower = (2 * n + 1) as f64 / x * cur - upper;
        upper = cur;
        cur = lower;
        if n - 1 == l as usize {
            at_l = cur;
        }
        if n - 1 == 1 {
            at_1 = cur;
        }
        if n - 1 == 0 {
            at_0 = cur;
        }
        if cur.abs() > 1e250 {
            upper /= 1e250;
            cur /= 1e250;
            at_l /= 1e250;
            at_1 /= 1e250;
        }
    }
    if j0.abs() >= j1.abs() {
        at_l * j0 / at_0
    } else {
        at_l * j1 / at_1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn order_zero_closed_form() {
        assert_relative_eq!(
            spherical_bessel_j(0, 1.0).unwrap(),
            1f64.sin(),
            max_relative = 1e-15
        );
        assert_eq!(spherical_bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(spherical_bessel_j(3, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn order_one_small_argument() {
        let x = 1e-6;
        assert_relative_eq!(
            spherical_bessel_j(1, x).unwrap(),
            x / 3.0,
            max_relative = 1e-11
        );
    }

    #[test]
    fn branches_agree_at_their_seams() {
        // x = 1 sits between the series and the recurrences
        for l in 0..8 {
            let a = spherical_bessel_j(l, 1.0).unwrap();
            let b = spherical_bessel_j(l, 1.0 + 1e-12).unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-9);
        }
        // x = ℓ separates Miller and upward recurrence
        let l = 12;
        let a = spherical_bessel_j(l, 12.0).unwrap();
        let b = spherical_bessel_j(l, 12.0 + 1e-12).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-9);
    }

    #[test]
    fn large_argument_asymptote() {
        let x = 2000.0;
        for l in 0..5u32 {
            let asym = (x - l as f64 * std::f64::consts::FRAC_PI_2).sin() / x;
            let slack = (0.6 * (l * (l + 1)) as f64 / x + 1e-9) / x;
            assert!((spherical_bessel_j(l, x).unwrap() - asym).abs() < slack);
        }
    }
}
