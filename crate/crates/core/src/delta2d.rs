//! The 2D delta-function potential after renormalisation.
//!
//! The bare coupling and the momentum cutoff are traded for the single
//! physical scale κ = √|E_bs| of the one bound state, so every observable is
//! a function of ln(k²/κ²) alone. Only the n = 0 partial wave scatters.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};

/// A renormalised 2D delta potential with bound state E_bs = −κ².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Delta2DSystem {
    kappa: f64,
}

impl Delta2DSystem {
    pub fn new(kappa: f64) -> Result<Self> {
        if kappa.is_finite() && kappa > 0.0 {
            Ok(Self { kappa })
        } else {
            Err(domain("Delta2DSystem::new", "kappa must be > 0", kappa))
        }
    }

    /// Build from the bound-state energy E_bs < 0 (2m = 1).
    pub fn from_binding_energy(e_bs: f64) -> Result<Self> {
        if e_bs.is_finite() && e_bs < 0.0 {
            Ok(Self {
                kappa: (-e_bs).sqrt(),
            })
        } else {
            Err(domain(
                "Delta2DSystem::from_binding_energy",
                "binding energy must be < 0",
                e_bs,
            ))
        }
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn binding_energy(&self) -> f64 {
        -self.kappa * self.kappa
    }

    fn log_ratio(&self, k: f64, func: &'static str) -> Result<f64> {
        if !(k.is_finite() && k > 0.0) {
            return Err(domain(func, "k must be > 0", k));
        }
        Ok(2.0 * (k / self.kappa).ln())
    }

    /// s-wave phase shift δ₀ with cot δ₀ = ln(k²/κ²)/π, on the branch
    /// δ₀ ∈ (0, π): δ₀ → π as k → 0, δ₀ = π/2 at k = κ, δ₀ → 0 as k → ∞.
    pub fn phase_shift(&self, k: f64) -> Result<f64> {
        let l = self.log_ratio(k, "Delta2DSystem::phase_shift")?;
        Ok(PI.atan2(l))
    }

    /// Phase shift in angular channel n; zero for every n ≠ 0.
    pub fn channel_phase_shift(&self, n: i32, k: f64) -> Result<f64> {
        let delta = self.phase_shift(k)?;
        Ok(if n == 0 { delta } else { 0.0 })
    }

    /// Isotropic amplitude f = √(2/πk) · π / (ln(k²/κ²) − iπ).
    pub fn amplitude(&self, k: f64) -> Result<Complex64> {
        let l = self.log_ratio(k, "Delta2DSystem::amplitude")?;
        Ok((2.0 / (PI * k)).sqrt() * PI / Complex64::new(l, -PI))
    }

    /// ln(k²/κ²) − iπ for complex k, principal logarithm. Vanishes at the
    /// bound-state pole k = iκ.
    pub fn amplitude_denominator(&self, k: Complex64) -> Complex64 {
        let ratio = k / self.kappa;
        (ratio * ratio).ln() - Complex64::new(0.0, PI)
    }

    /// dσ/dΩ = (2/πk) / (1 + ln²(k²/κ²)/π²); peaks at 2/(πκ) for k = κ.
    pub fn cross_section(&self, k: f64) -> Result<f64> {
        let l = self.log_ratio(k, "Delta2DSystem::cross_section")?;
        Ok(2.0 / (PI * k) / (1.0 + (l / PI).powi(2)))
    }
}
