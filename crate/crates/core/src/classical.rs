//! Classical scattering off the repulsive 1/r² potential, and the
//! partial-wave quantum cross section it should be compared with.
//!
//! With x = θ/π the deflection function inverts in closed form,
//! L(θ) = √g (1−x)/√(x(2−x)), so dσ/dΩ = (L/p² sin θ)|dL/dθ| is elementary
//! and linear in g.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::invsq::repulsive_phase_shift;
use crate::specfun::legendre_table;

/// θ_cl = π(1 − L/√(L²+g)) for angular momentum L > 0 and g ≥ 0.
pub fn classical_angle(l: f64, g: f64) -> Result<f64> {
    if !(l.is_finite() && l > 0.0) {
        return Err(domain("classical_angle", "L must be > 0", l));
    }
    if !(g.is_finite() && g >= 0.0) {
        return Err(domain("classical_angle", "g must be >= 0", g));
    }
    let root = (l * l + g).sqrt();
    // 1 − L/√(L²+g) = g/(√(L²+g)(√(L²+g)+L))
    Ok(PI * g / (root * (root + l)))
}

/// Angular momentum deflected into θ: L = √g (1−x)/√(x(2−x)), x = θ/π.
pub fn angular_momentum_for_angle(g: f64, theta: f64) -> Result<f64> {
    let x = reduced_angle("angular_momentum_for_angle", theta)?;
    if !(g.is_finite() && g > 0.0) {
        return Err(domain("angular_momentum_for_angle", "g must be > 0", g));
    }
    Ok(g.sqrt() * (1.0 - x) / (x * (2.0 - x)).sqrt())
}

fn reduced_angle(func: &'static str, theta: f64) -> Result<f64> {
    if theta > 0.0 && theta < PI {
        Ok(theta / PI)
    } else {
        Err(domain(func, "theta must lie in (0, pi)", theta))
    }
}

/// Repulsive coupling g > 0 at energy E = p² > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalScatter {
    g: f64,
    energy: f64,
}

impl ClassicalScatter {
    pub fn new(g: f64, energy: f64) -> Result<Self> {
        if !(g.is_finite() && g > 0.0) {
            return Err(domain("ClassicalScatter::new", "g must be > 0", g));
        }
        if !(energy.is_finite() && energy > 0.0) {
            return Err(domain(
                "ClassicalScatter::new",
                "energy must be > 0",
                energy,
            ));
        }
        Ok(Self { g, energy })
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// dσ/dΩ = (g/πE)·(1−x)/(x²(2−x)² sin πx).
    pub fn cross_section(&self, theta: f64) -> Result<f64> {
        let x = reduced_angle("ClassicalScatter::cross_section", theta)?;
        Ok(self.g / (PI * self.energy) * angular_factor(x))
    }
}

/// (1−x)/(x²(2−x)² sin πx); 8/9 at x = ½.
pub fn angular_factor(x: f64) -> f64 {
    (1.0 - x) / (x * x * (2.0 - x).powi(2) * (PI * x).sin())
}

/// Coupling above which the classical cross section applies at θ:
/// g ≫ (2−x)/(π² x (1−x)²).
pub fn validity_threshold(theta: f64) -> Result<f64> {
    let x = reduced_angle("validity_threshold", theta)?;
    Ok((2.0 - x) / (PI * PI * x * (1.0 - x).powi(2)))
}

/// Fraction of the partial waves, at the top of the range, that the
/// Gaussian taper of [`quantum_cross_section`] acts on.
pub const DEFAULT_TAPER: f64 = 0.1;

/// Quantum dσ/dΩ = |f|² for the repulsive 1/r² potential from the
/// partial-wave sum with weights w_ℓ = 1 for ℓ ≤ ℓ₀ = (1−τ)·l_max and
/// w_ℓ = exp(−½((ℓ−ℓ₀)/w)²) beyond, w = τ·l_max/3, τ = `taper`.
///
/// The series is only conditionally convergent (δ_ℓ ~ 1/ℓ); the taper
/// damps the truncation ringing.
pub fn quantum_cross_section(g: f64, k: f64, theta: f64, l_max: u32, taper: f64) -> Result<f64> {
    if !(k.is_finite() && k > 0.0) {
        return Err(domain("quantum_cross_section", "k must be > 0", k));
    }
    if !(theta > 0.0 && theta <= PI) {
        return Err(domain(
            "quantum_cross_section",
            "theta must lie in (0, pi]",
            theta,
        ));
    }
    if !(taper > 0.0 && taper < 1.0) {
        return Err(domain(
            "quantum_cross_section",
            "taper must lie in (0, 1)",
            taper,
        ));
    }
    if l_max < 10 {
        return Err(domain(
            "quantum_cross_section",
            "l_max must be >= 10",
            l_max as f64,
        ));
    }
    let p = legendre_table(l_max, theta.cos())?;
    let onset = (1.0 - taper) * l_max as f64;
    let width = taper * l_max as f64 / 3.0;
    let mut f = Complex64::new(0.0, 0.0);
    for (l, p_l) in p.iter().enumerate() {
        let delta = repulsive_phase_shift(l as u32, g)?;
        let lf = l as f64;
        let w = if lf <= onset {
            1.0
        } else {
            (-0.5 * ((lf - onset) / width).powi(2)).exp()
        };
        f += (2.0 * lf + 1.0) * w * Complex64::from_polar(delta.sin(), delta) * p_l;
    }
    Ok((f / k).norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn angle_reference_points() {
        assert_eq!(classical_angle(2.0, 0.0).unwrap(), 0.0);
        assert_relative_eq!(
            classical_angle(1.5, 3.0 * 2.25).unwrap(),
            PI / 2.0,
            max_relative = 1e-15
        );
        assert!(classical_angle(1e8, 1.0).unwrap() < 1e-15);
        assert!(classical_angle(0.0, 1.0).is_err());
        assert!(classical_angle(1.0, -1.0).is_err());
    }

    #[test]
    fn inversion_round_trip() {
        for i in 1..100 {
            let theta = PI * i as f64 / 100.0;
            let l = angular_momentum_for_angle(7.0, theta).unwrap();
            assert_relative_eq!(
                classical_angle(l, 7.0).unwrap(),
                theta,
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn cross_section_at_right_angle() {
        assert_relative_eq!(angular_factor(0.5), 8.0 / 9.0, max_relative = 1e-15);
        let sc = ClassicalScatter::new(3.0, 2.0).unwrap();
        assert_relative_eq!(
            sc.cross_section(PI / 2.0).unwrap(),
            3.0 / (2.0 * PI) * 8.0 / 9.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn cross_section_end_behaviour() {
        let sc = ClassicalScatter::new(1.0, 1.0).unwrap();
        assert!(sc.cross_section(1e-6).unwrap() > 1e15);
        // sin πx ~ π(1−x) cancels the numerator: finite g/(π²E) backwards
        assert_relative_eq!(
            sc.cross_section(PI - 1e-6).unwrap(),
            1.0 / (PI * PI),
            max_relative = 1e-6
        );
        assert!(sc.cross_section(0.0).is_err());
        assert!(sc.cross_section(PI).is_err());
    }

    #[test]
    fn linear_in_coupling() {
        let a = ClassicalScatter::new(1.3, 0.7).unwrap();
        let b = ClassicalScatter::new(2.6, 0.7).unwrap();
        for &theta in &[0.2, 1.0, 2.9] {
            assert_eq!(
                b.cross_section(theta).unwrap(),
                2.0 * a.cross_section(theta).unwrap()
            );
        }
    }

    #[test]
    fn threshold_values() {
        assert_relative_eq!(
            validity_threshold(PI / 2.0).unwrap(),
            12.0 / (PI * PI),
            max_relative = 1e-15
        );
        assert!(validity_threshold(1e-9).unwrap() > 1e8);
        assert!(validity_threshold(PI * (1.0 - 1e-5)).unwrap() > 1e8);
    }

    #[test]
    fn strong_coupling_quantum_matches_classical() {
        let g = 400.0;
        let theta = PI / 2.0;
        let q = quantum_cross_section(g, 1.0, theta, 4000, DEFAULT_TAPER).unwrap();
        let c = ClassicalScatter::new(g, 1.0)
            .unwrap()
            .cross_section(theta)
            .unwrap();
        assert!((q / c - 1.0).abs() < 0.01, "ratio {}", q / c);
    }

    #[test]
    fn quantum_sum_rejects_bad_input() {
        assert!(quantum_cross_section(1.0, 1.0, 0.0, 100, 0.1).is_err());
        assert!(quantum_cross_section(1.0, 1.0, 1.0, 100, 0.0).is_err());
        assert!(quantum_cross_section(1.0, 1.0, 1.0, 5, 0.1).is_err());
        assert!(quantum_cross_section(-5.0, 1.0, 1.0, 100, 0.1).is_err());
    }

    proptest! {
        #[test]
        fn angle_decreases_with_l(l in 0.01f64..100.0, g in 0.01f64..100.0, dl in 0.001f64..1.0) {
            prop_assert!(classical_angle(l + dl, g).unwrap() < classical_angle(l, g).unwrap());
        }

        #[test]
        fn angle_increases_with_g(l in 0.01f64..100.0, g in 0.01f64..100.0, dg in 0.001f64..1.0) {
            prop_assert!(classical_angle(l, g + dg).unwrap() > classical_angle(l, g).unwrap());
        }

        #[test]
        fn angle_stays_in_range(l in 1e-6f64..1e6, g in 1e-6f64..1e6) {
            let t = classical_angle(l, g).unwrap();
            prop_assert!(t > 0.0 && t < PI);
        }
    }
}
