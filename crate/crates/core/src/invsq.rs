//! The 3D inverse-square potential V = g/r² (2m = 1).
//!
//! Channel ℓ has discriminant D_ℓ = (ℓ+½)² + g. For D_ℓ ≥ 0 the radial
//! problem is scale invariant and the phase shift is k-independent. For
//! D_ℓ < 0 the radial order is imaginary, iΞ with Ξ = √−D_ℓ, the
//! Hamiltonian needs a short-distance cutoff a (a node u(a) = 0), and a
//! physical scale μ survives the limit a → 0 provided Ξ runs with a.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::specfun::{bessel_k_imag, k_imag_zero, legendre_table, EULER_GAMMA};

/// D_ℓ = (ℓ+½)² + g.
pub fn discriminant(l: u32, g: f64) -> f64 {
    let nu = l as f64 + 0.5;
    nu * nu + g
}

/// True when channel ℓ is supercritical (D_ℓ < 0).
pub fn is_anomalous(l: u32, g: f64) -> bool {
    discriminant(l, g) < 0.0
}

/// δ_ℓ = (ℓ+½ − √D_ℓ)·π/2 for D_ℓ ≥ 0. Independent of k.
pub fn repulsive_phase_shift(l: u32, g: f64) -> Result<f64> {
    if !g.is_finite() {
        return Err(domain("repulsive_phase_shift", "g must be finite", g));
    }
    let d = discriminant(l, g);
    if d < 0.0 {
        return Err(Error::AnomalousChannel { l, discriminant: d });
    }
    let nu = l as f64 + 0.5;
    // ν − √(ν²+g) = −g/(ν + √(ν²+g)), free of cancellation
    Ok(-g / (nu + d.sqrt()) * FRAC_PI_2)
}

/// Ξ_ℓ = √−D_ℓ for an anomalous channel.
pub fn xi(l: u32, g: f64) -> Result<f64> {
    let d = discriminant(l, g);
    if d.is_nan() {
        return Err(domain("xi", "g must be finite", g));
    }
    if d >= 0.0 {
        return Err(Error::NotAnomalous { l, discriminant: d });
    }
    Ok((-d).sqrt())
}

fn check_level_args(func: &'static str, a: f64, xi: f64, n: u32) -> Result<()> {
    if !(a.is_finite() && a > 0.0) {
        return Err(domain(func, "cutoff a must be > 0", a));
    }
    if !(xi.is_finite() && xi > 0.0) {
        return Err(domain(func, "Xi must be > 0", xi));
    }
    if n == 0 {
        return Err(domain(func, "level index n starts at 1", 0.0));
    }
    Ok(())
}

/// Small-Ξ level tower E_n = −(2e^{−γ}/a)² e^{−2πn/Ξ}, n ≥ 1.
pub fn level_energy(a: f64, xi: f64, n: u32) -> Result<f64> {
    check_level_args("level_energy", a, xi, n)?;
    // square μ_n, not the bare scale 2e^{−γ}/a, which overflows for tiny a
    let mu_n = 2.0 * (-EULER_GAMMA).exp() / a * (-PI * n as f64 / xi).exp();
    Ok(-mu_n * mu_n)
}

/// μ_n of the n-th level from the node condition K_{iΞ}(μ_n a) = 0,
/// μ_n a = 2 exp((arg Γ(1+iΞ) − nπ)/Ξ), from the small-argument form of
/// K_{iΞ}; corrections are O((μa)²). [`level_energy`] further keeps only
/// arg Γ ≈ −γΞ.
pub fn level_momentum(a: f64, xi: f64, n: u32) -> Result<f64> {
    check_level_args("level_momentum", a, xi, n)?;
    Ok(k_imag_zero(xi, n)? / a)
}

/// Cutoff that places the n-th level at μ: a = 2 exp((arg Γ(1+iΞ) − nπ)/Ξ)/μ.
pub fn cutoff_for_level(mu: f64, xi: f64, n: u32) -> Result<f64> {
    check_level_args("cutoff_for_level", mu, xi, n)?;
    Ok(k_imag_zero(xi, n)? / mu)
}

/// Scaling law Ξ(a) = π / (−ln(μa/2) − γ) that keeps the ground state at
/// E = −μ² as the cutoff a moves. Ξ(a) → 0⁺ as a → 0.
pub fn xi_flow(mu: f64, a: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(domain("xi_flow", "mu must be > 0", mu));
    }
    if !(a.is_finite() && a > 0.0) {
        return Err(domain("xi_flow", "cutoff a must be > 0", a));
    }
    let denominator = -(0.5 * mu * a).ln() - EULER_GAMMA;
    if denominator <= 0.0 {
        return Err(Error::OutsideScalingRegime { denominator });
    }
    Ok(PI / denominator)
}

/// Whether a is fine enough for the scaling law to be trusted: Ξ(a) ≤ 1,
/// the small-Ξ regime in which the law is derived.
pub fn in_scaling_regime(mu: f64, a: f64) -> bool {
    xi_flow(mu, a).is_ok_and(|x| x <= MAX_FLOW_XI)
}

/// Cutoff at which the scaling law gives Ξ: a = (2/μ) e^{−π/Ξ − γ}.
pub fn cutoff_for_xi(mu: f64, xi: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(domain("cutoff_for_xi", "mu must be > 0", mu));
    }
    if !(xi.is_finite() && xi > 0.0) {
        return Err(domain("cutoff_for_xi", "Xi must be > 0", xi));
    }
    Ok(2.0 / mu * (-PI / xi - EULER_GAMMA).exp())
}

/// An anomalous system: coupling g with D₀ < 0 and renormalised
/// ground-state scale μ, E_gs = −μ².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegulatedSystem {
    g: f64,
    mu: f64,
}

/// Partial-wave evaluation of f(θ) with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialWaveSum {
    /// Truncated sum plus the closed-form leading tail.
    pub value: Complex64,
    /// Plain truncated sum over ℓ ≤ l_max.
    pub partial: Complex64,
    /// Bound on |f − value|.
    pub tail_bound: f64,
    pub l_max: u32,
    /// θ < 5°, where the Legendre series converges slowly.
    pub slowly_convergent: bool,
}

const ADAPTIVE_TOLERANCE: f64 = 1e-4;
const ADAPTIVE_START: u32 = 32;
const ADAPTIVE_CAP: u32 = 1 << 20;
const SLOW_ANGLE: f64 = 5.0 * PI / 180.0;

/// Largest Ξ(a) accepted by [`in_scaling_regime`].
pub const MAX_FLOW_XI: f64 = 1.0;

impl RegulatedSystem {
    pub fn new(g: f64, mu: f64) -> Result<Self> {
        if !g.is_finite() {
            return Err(domain("RegulatedSystem::new", "g must be finite", g));
        }
        let d = discriminant(0, g);
        if d >= 0.0 {
            return Err(Error::NoBoundState { discriminant: d });
        }
        if !(mu.is_finite() && mu > 0.0) {
            return Err(domain("RegulatedSystem::new", "mu must be > 0", mu));
        }
        Ok(Self { g, mu })
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Ξ₀ = √(−¼ − g).
    pub fn xi(&self) -> f64 {
        (-discriminant(0, self.g)).sqrt()
    }

    pub fn ground_state_energy(&self) -> f64 {
        -self.mu * self.mu
    }

    /// See [`xi_flow`].
    pub fn xi_flow(&self, a: f64) -> Result<f64> {
        xi_flow(self.mu, a)
    }

    /// See [`in_scaling_regime`].
    pub fn in_scaling_regime(&self, a: f64) -> bool {
        in_scaling_regime(self.mu, a)
    }

    /// See [`cutoff_for_xi`].
    pub fn cutoff_for_xi(&self, xi: f64) -> Result<f64> {
        cutoff_for_xi(self.mu, xi)
    }

    /// Ψ_gs(r) = μ K₀(μr) / √(2πr), unit-normalised over d³r.
    pub fn gs_wavefunction(&self, r: f64) -> Result<f64> {
        if !(r.is_finite() && r > 0.0) {
            return Err(domain(
                "RegulatedSystem::gs_wavefunction",
                "r must be > 0",
                r,
            ));
        }
        Ok(self.mu * bessel_k_imag(0.0, self.mu * r)? / (2.0 * PI * r).sqrt())
    }

    fn log_ratio(&self, k: f64, func: &'static str) -> Result<f64> {
        if !(k.is_finite() && k > 0.0) {
            return Err(domain(func, "k must be > 0", k));
        }
        Ok(2.0 * (k / self.mu).ln())
    }

    /// δ₀ = π/4 + arctan(π/L), L = ln(k²/μ²). Continuous in ln k on each
    /// side of k = μ, where it jumps from −π/4 to 3π/4; k = μ itself takes
    /// the upper value.
    pub fn swave_phase_shift(&self, k: f64) -> Result<f64> {
        let l = self.log_ratio(k, "RegulatedSystem::swave_phase_shift")?;
        Ok(FRAC_PI_4 + (PI / l).atan())
    }

    /// a₀(k) = (1/k) / (cot δ₀ − i) with cot δ₀ = (L − π)/(L + π).
    pub fn swave_amplitude(&self, k: f64) -> Result<Complex64> {
        let l = self.log_ratio(k, "RegulatedSystem::swave_amplitude")?;
        // multiplied through by L + π so that L = −π (δ₀ = 0) is regular
        Ok(Complex64::new(l + PI, 0.0) / Complex64::new(l - PI, -(l + PI)) / k)
    }

    /// cot δ₀ − i continued to complex k with the principal logarithm;
    /// zero at the bound-state pole k = iμ.
    pub fn swave_denominator(&self, k: Complex64) -> Complex64 {
        let ratio = k / self.mu;
        let l = (ratio * ratio).ln();
        (l - PI) / (l + PI) - Complex64::i()
    }

    /// f(θ) = a₀(k) + (1/k) Σ_{ℓ≥1} (2ℓ+1) e^{iδ_ℓ} sin δ_ℓ P_ℓ(cos θ).
    ///
    /// For large ℓ, (2ℓ+1)δ_ℓ → −πg/2, so the tail beyond l_max is summed in
    /// closed form from Σ_ℓ P_ℓ(cos θ) = 1/(2 sin(θ/2)); `tail_bound`
    /// bounds what remains. With `l_max = None` the truncation doubles from
    /// 32 until the bound is below 1e-4·|f|.
    pub fn scattering_amplitude(
        &self,
        k: f64,
        theta: f64,
        l_max: Option<u32>,
    ) -> Result<PartialWaveSum> {
        if !(theta > 0.0 && theta <= PI) {
            return Err(domain(
                "RegulatedSystem::scattering_amplitude",
                "theta must lie in (0, pi]",
                theta,
            ));
        }
        let d1 = discriminant(1, self.g);
        if d1 < 0.0 {
            return Err(Error::AnomalousChannel {
                l: 1,
                discriminant: d1,
            });
        }
        let a0 = self.swave_amplitude(k)?;
        match l_max {
            Some(0) => Err(domain(
                "RegulatedSystem::scattering_amplitude",
                "l_max must be >= 1",
                0.0,
            )),
            Some(l) => partial_wave_sum(self.g, k, theta, a0, l),
            None => {
                let mut l = ADAPTIVE_START;
                loop {
                    let sum = partial_wave_sum(self.g, k, theta, a0, l)?;
                    if sum.tail_bound < ADAPTIVE_TOLERANCE * sum.value.norm() {
                        return Ok(sum);
                    }
                    if l >= ADAPTIVE_CAP {
                        return Err(Error::NoConvergence("partial-wave sum"));
                    }
                    l *= 2;
                }
            }
        }
    }
}

/// (2ℓ+1) e^{iδ} sin δ for the non-anomalous channel ℓ ≥ 1.
fn partial_wave_term(l: u32, g: f64) -> Result<Complex64> {
    let delta = repulsive_phase_shift(l, g)?;
    Ok((2 * l + 1) as f64 * Complex64::from_polar(delta.sin(), delta))
}

fn partial_wave_sum(
    g: f64,
    k: f64,
    theta: f64,
    a0: Complex64,
    l_max: u32,
) -> Result<PartialWaveSum> {
    let p = legendre_table(l_max, theta.cos())?;
    let mut sum = Complex64::new(0.0, 0.0);
    for l in 1..=l_max {
        sum += partial_wave_term(l, g)? * p[l as usize];
    }
    let partial = a0 + sum / k;

    let legendre_sum: f64 = p.iter().sum();
    let c = -FRAC_PI_2 * g;
    let tail = c * (0.5 / (0.5 * theta).sin() - legendre_sum) / k;

    // Residual terms ≈ i π²g²/(8ν) P_ℓ with ν = ℓ+½; Abel summation with
    // Bernstein's |P_ℓ| ≤ √(2/(πν sin θ)) bounds their sum.
    let nu = l_max as f64 + 1.5;
    let amplitude = PI * PI * g * g / (8.0 * nu) + (PI * g).abs().powi(3) / (16.0 * nu * nu);
    let envelope = (2.0 / (PI * nu * theta.sin().max(1e-300))).sqrt().min(1.0);
    let tail_bound = amplitude * envelope / (0.5 * theta).sin() / k;

    Ok(PartialWaveSum {
        value: partial + tail,
        partial,
        tail_bound,
        l_max,
        slowly_convergent: theta < SLOW_ANGLE,
    })
}
