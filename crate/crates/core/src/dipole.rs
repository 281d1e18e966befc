//! Electron bound to a point dipole, V = σ cos θ / r² (2m = 1, s = 2mσ).
//!
//! Separating variables leaves an angular eigenproblem whose eigenvalue γ
//! plays the role of −g in the radial 1/r² problem. In the Legendre basis
//! (azimuthal number 0) the angular operator is the symmetric tridiagonal
//! matrix M_{ℓℓ'} of [`matrix_entry`]; binding sets in when the lowest
//! γ reaches −¼.

use crate::error::{domain, Error, Result};
use crate::roots::bisect;

/// e·a₀ expressed in Debye.
pub const EA0_IN_DEBYE: f64 = 2.541746;
/// The rounded conversion 1 e·a₀ ≈ 2.4 D.
pub const EA0_IN_DEBYE_ROUNDED: f64 = 2.4;
/// Measured limiting dipole moment for anion binding, in e·a₀.
pub const EXPERIMENTAL_P_CRIT_EA0: f64 = 0.86;
/// γ at which binding sets in.
pub const CRITICAL_GAMMA: f64 = -0.25;

const S_SCAN_MAX: f64 = 10.0;
const S_SCAN_STEP: f64 = 0.05;
const GAMMA_BRACKET: (f64, f64) = (-50.0, 0.5);

/// M_{ℓℓ'} = δ_{ℓℓ'}(ℓ(ℓ+1) − γ) + s[ℓ/√((2ℓ−1)(2ℓ+1)) δ_{ℓ−1,ℓ'}
///   + (ℓ+1)/√((2ℓ+1)(2ℓ+3)) δ_{ℓ+1,ℓ'}].
pub fn matrix_entry(l: u32, lp: u32, gamma: f64, s: f64) -> f64 {
    if l == lp {
        let l = l as f64;
        l * (l + 1.0) - gamma
    } else if lp + 1 == l {
        s * off_diagonal(l)
    } else if l + 1 == lp {
        s * off_diagonal(lp)
    } else {
        0.0
    }
}

/// Coupling between ℓ−1 and ℓ, per unit s: ℓ/√((2ℓ−1)(2ℓ+1)).
fn off_diagonal(l: u32) -> f64 {
    let l = l as f64;
    l / ((2.0 * l - 1.0) * (2.0 * l + 1.0)).sqrt()
}

/// The n × n leading block of M at coupling s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleProblem {
    s: f64,
    n_trunc: u32,
}

impl DipoleProblem {
    pub fn new(s: f64, n_trunc: u32) -> Result<Self> {
        if !(s.is_finite() && s >= 0.0) {
            return Err(domain("DipoleProblem::new", "s must be >= 0", s));
        }
        if n_trunc == 0 {
            return Err(domain("DipoleProblem::new", "n_trunc must be >= 1", 0.0));
        }
        Ok(Self { s, n_trunc })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn n_trunc(&self) -> u32 {
        self.n_trunc
    }

    /// det M(γ) by the continuant d_k = a_{k−1} d_{k−1} − b_{k−1}² d_{k−2}.
    pub fn determinant(&self, gamma: f64) -> f64 {
        let (mut prev, mut cur) = (1.0, matrix_entry(0, 0, gamma, self.s));
        for k in 1..self.n_trunc {
            let b = self.s * off_diagonal(k);
            let next = matrix_entry(k, k, gamma, self.s) * cur - b * b * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// det M(γ) up to a positive factor: the same continuant, renormalised
    /// whenever it leaves [2^-500, 2^500] so large truncations cannot
    /// overflow. Sign and zeros match [`Self::determinant`].
    fn scaled_determinant(&self, gamma: f64) -> f64 {
        const BIG: f64 = 3.273390607896142e150; // 2^500
        let (mut prev, mut cur) = (1.0, matrix_entry(0, 0, gamma, self.s));
        for k in 1..self.n_trunc {
            let b = self.s * off_diagonal(k);
            let next = matrix_entry(k, k, gamma, self.s) * cur - b * b * prev;
            prev = cur;
            cur = next;
            let size = cur.abs().max(prev.abs());
            if size > BIG || (size < 1.0 / BIG && size > 0.0) {
                prev /= size;
                cur /= size;
            }
        }
        cur
    }

    /// Whether M(γ) is positive definite, i.e. γ lies below every
    /// eigenvalue. Tested through the LDLᵀ pivots.
    fn positive_definite(&self, gamma: f64) -> bool {
        let mut pivot = matrix_entry(0, 0, gamma, self.s);
        if pivot <= 0.0 {
            return false;
        }
        for k in 1..self.n_trunc {
            let b = self.s * off_diagonal(k);
            pivot = matrix_entry(k, k, gamma, self.s) - b * b / pivot;
            if pivot <= 0.0 {
                return false;
            }
        }
        true
    }
}

/// Smallest s > 0 with det M(γ = −¼, s) = 0 in the n × n truncation,
/// bracketed on [0, 10] and bisected to |Δs| < tol.
pub fn critical_coupling(n_trunc: u32, tol: f64) -> Result<f64> {
    if n_trunc < 2 {
        return Err(domain(
            "critical_coupling",
            "n_trunc must be >= 2",
            n_trunc as f64,
        ));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(domain("critical_coupling", "tol must be > 0", tol));
    }
    let det = |s: f64| DipoleProblem { s, n_trunc }.scaled_determinant(CRITICAL_GAMMA);
    let steps = (S_SCAN_MAX / S_SCAN_STEP).round() as usize;
    let grid = (0..=steps).map(|i| i as f64 * S_SCAN_STEP);
    let (lo, hi) = crate::roots::first_sign_change(det, grid)
        .ok_or_else(|| Error::RootNotFound(format!("no critical coupling in [0, {S_SCAN_MAX}]")))?;
    bisect(det, lo, hi, tol)
}

/// Critical coupling with the derived dipole moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalResult {
    pub s_star: f64,
    /// p* = s*/2 in e·a₀.
    pub p_star_ea0: f64,
    pub p_star_debye: f64,
    /// p* with the rounded 2.4 D per e·a₀.
    pub p_star_debye_rounded: f64,
    /// |s*(n) − s*(n−1)| < 1e-6.
    pub converged: bool,
    pub n_used: u32,
}

pub fn critical_moment(n_trunc: u32, tol: f64) -> Result<CriticalResult> {
    let s_star = critical_coupling(n_trunc, tol)?;
    let converged = n_trunc >= 3 && (s_star - critical_coupling(n_trunc - 1, tol)?).abs() < 1e-6;
    let p = 0.5 * s_star;
    Ok(CriticalResult {
        s_star,
        p_star_ea0: p,
        p_star_debye: p * EA0_IN_DEBYE,
        p_star_debye_rounded: p * EA0_IN_DEBYE_ROUNDED,
        converged,
        n_used: n_trunc,
    })
}

/// Lowest eigenvalue γ(s) of the n × n truncation, by bisection on
/// positive definiteness within γ ∈ [−50, 0.5].
pub fn gamma_of_dipole(s: f64, n_trunc: u32, tol: f64) -> Result<f64> {
    let p = DipoleProblem::new(s, n_trunc)?;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(domain("gamma_of_dipole", "tol must be > 0", tol));
    }
    let (mut lo, mut hi) = GAMMA_BRACKET;
    if !p.positive_definite(lo) || p.positive_definite(hi) {
        return Err(Error::RootNotFound(format!(
            "lowest angular eigenvalue outside [{lo}, {hi}] at s = {s}"
        )));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if p.positive_definite(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
