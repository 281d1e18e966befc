//! K_{iΞ}(x), the modified Bessel function of purely imaginary order.

use std::f64::consts::PI;

use super::gamma::gamma_arg;
use crate::error::{domain, Result};
use crate::quad::integrate_panels;

/// K_{iΞ}(x) for real Ξ and x > 0 (real-valued and even in Ξ).
///
/// Evaluated from K_{iΞ}(x) = ∫₀^∞ cos(Ξt) e^{−x cosh t} dt with the factor
/// e^{−x} pulled out. The range is cut where x(cosh t − 1) = 60 and split
/// into panels no wider than a quarter oscillation, so the adaptive rule
/// starts from a partition that already resolves both the oscillation and
/// the double-exponential knee at t ≈ acosh(1 + 1/x).
pub fn bessel_k_imag(xi: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("bessel_k_imag", "x must be finite and > 0", x));
    }
    if !xi.is_finite() {
        return Err(domain("bessel_k_imag", "order must be finite", xi));
    }
    let xi = xi.abs();
    let upper = (1.0 + 60.0 / x).acosh();
    let knee = (1.0 + 1.0 / x).acosh();
    let width = if xi > 0.0 {
        (0.5 * PI / xi).min(1.0)
    } else {
        1.0
    };
    let mut breaks = Vec::new();
    let mut t = 0.0;
    while t < upper {
        breaks.push(t);
        t += width;
    }
    breaks.push(upper);
    if knee < upper {
        breaks.push(knee);
        breaks.sort_by(f64::total_cmp);
        breaks.dedup();
    }
    let f = |t: f64| {
        // cosh t − 1 = 2 sinh²(t/2), accurate near t = 0
        let s = (0.5 * t).sinh();
        (xi * t).cos() * (-2.0 * x * s * s).exp()
    };
    // envelope ∫ e^{−x(cosh t−1)} dt is of order knee + √(π/2x)
    let envelope = knee + (PI / (2.0 * x)).sqrt().min(1.0);
    let q = integrate_panels(&f, &breaks, 1e-15 * envelope, 1e-13)?;
    Ok(q.value * (-x).exp())
}

/// Leading small-x behaviour
/// K_{iΞ}(x) ≈ −√(π / (Ξ sinh πΞ)) · sin(Ξ ln(x/2) − arg Γ(1+iΞ)), Ξ > 0.
///
/// Only used to cross-check [`bessel_k_imag`] and to explain the node tower.
pub fn k_imag_small_x(xi: f64, x: f64) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(domain("k_imag_small_x", "Xi must be > 0", xi));
    }
    if !(x > 0.0) {
        return Err(domain("k_imag_small_x", "x must be > 0", x));
    }
    let amp = (PI / (xi * (PI * xi).sinh())).sqrt();
    Ok(-amp * (xi * (0.5 * x).ln() - gamma_arg(xi)).sin())
}

/// Position of the n-th small-argument zero of K_{iΞ}:
/// x_n = 2 exp((arg Γ(1+iΞ) − nπ) / Ξ), counted from the outermost (n = 1).
pub fn k_imag_zero(xi: f64, n: u32) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(domain("k_imag_zero", "Xi must be > 0", xi));
    }
    Ok(2.0 * ((gamma_arg(xi) - n as f64 * PI) / xi).exp())
}
