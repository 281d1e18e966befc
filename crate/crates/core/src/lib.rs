//! Quantum scale anomaly of the 2D delta-function and 3D inverse-square
//! potentials.
//!
//! Units: ħ = 1 and 2m = 1 throughout, so energies are inverse lengths
//! squared (E = k² for scattering, E = −μ² for a bound state) and the
//! dimensionless coupling of V = λ/r² is g = 2mλ = λ.
//!
//! * [`specfun`]: Bessel functions of real and imaginary order, arg Γ(1+iΞ),
//!   Legendre polynomials.
//! * [`delta2d`]: renormalised scattering off the 2D delta potential.
//! * [`invsq`]: the 1/r² potential, its cutoff-regularised bound state,
//!   renormalisation flow and anomalous s-wave scattering.
//! * [`classical`]: classical 1/r² scattering and its validity bound.
//! * [`dipole`]: critical dipole moment for electron binding.
//! * [`numerov`]: brute-force radial ODE oracle.

// Series and quadrature coefficients are kept as tabulated. `!(x > 0.0)`
// guards are meant to reject NaN along with the out-of-range values.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod classical;
pub mod delta2d;
pub mod dipole;
mod error;
pub mod invsq;
pub mod numerov;
pub mod quad;
pub mod roots;
pub mod specfun;

pub use error::{Error, Result};
