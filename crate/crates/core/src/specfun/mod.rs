//! Special functions used throughout the crate.
//!
//! Real-order Bessel functions J_ν and N_ν (ν need not be rational), the
//! modified Bessel function of purely imaginary order K_{iΞ}, the phase of
//! Γ(1+iΞ), Legendre polynomials and spherical Bessel functions.
//!
//! Everything here is a pure function; inputs outside the stated domain are
//! reported as [`Error::Domain`](crate::Error::Domain), never as NaN.

mod bessel;
mod gamma;
mod kimag;
mod legendre;
mod spherical;

pub use bessel::{bessel_j, bessel_jy, bessel_n, BesselJY};
pub use gamma::{gamma_arg, ln_gamma, recip_gamma_1p};
pub use kimag::{bessel_k_imag, k_imag_small_x, k_imag_zero};
pub use legendre::{legendre_p, legendre_table};
pub use spherical::spherical_bessel_j;

use crate::error::{domain, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Order of a Bessel function: real ν, or purely imaginary iΞ with Ξ ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Order {
    Real(f64),
    Imaginary(f64),
}

impl Order {
    pub fn real(nu: f64) -> Result<Self> {
        if nu.is_finite() {
            Ok(Order::Real(nu))
        } else {
            Err(domain("Order::real", "order must be finite", nu))
        }
    }

    pub fn imaginary(xi: f64) -> Result<Self> {
        if xi.is_finite() && xi >= 0.0 {
            Ok(Order::Imaginary(xi))
        } else {
            Err(domain("Order::imaginary", "Xi must be finite and >= 0", xi))
        }
    }

    /// Order √D of the radial solutions for a channel with discriminant D:
    /// real for D ≥ 0, imaginary (Ξ = √−D) otherwise.
    pub fn from_discriminant(d: f64) -> Self {
        if d >= 0.0 {
            Order::Real(d.sqrt())
        } else {
            Order::Imaginary((-d).sqrt())
        }
    }

    pub fn is_imaginary(&self) -> bool {
        matches!(self, Order::Imaginary(_))
    }
}
