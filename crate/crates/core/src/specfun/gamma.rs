use num_complex::Complex64;

use crate::error::{domain, Result};

/// B_{2j} / (2j (2j-1)) for the Stirling series.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Principal-branch-continuous ln Γ(z) for Re z > 0.
///
/// The argument is shifted to Re w ≥ 12 with Γ(z) = Γ(z+n) / Π(z+k) and the
/// Stirling series is summed there. Every logarithm taken has Re > 0, so the
/// imaginary part is continuous in z.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.im.is_finite() {
        return Err(domain("ln_gamma", "requires Re z > 0", z.re));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 12.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    Ok((w - 0.5) * w.ln() - w + HALF_LN_TWO_PI + series - shift)
}

/// arg Γ(1+iΞ), on the branch continuous in Ξ with `gamma_arg(0) == 0`.
pub fn gamma_arg(xi: f64) -> f64 {
    if xi == 0.0 {
        return 0.0;
    }
    ln_gamma(Complex64::new(1.0, xi))
        .map(|v| v.im)
        .unwrap_or(f64::NAN)
}

/// Taylor coefficients of 1/Γ(1+z) about z = 0.
const RECIP_GAMMA: [f64; 26] = [
    1.0,
    0.577_215_664_901_532_860_6,
    -0.655_878_071_520_253_881_1,
    -0.042_002_635_034_095_235_53,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_75,
    -0.009_621_971_527_876_973_562,
    0.007_218_943_246_663_099_542,
    -0.001_165_167_591_859_065_112,
    -0.000_215_241_674_114_950_972_8,
    0.000_128_050_282_388_116_186_2,
    -0.000_020_134_854_780_788_238_66,
    -0.000_001_250_493_482_142_670_657,
    0.000_001_133_027_231_981_695_882,
    -2.056_338_416_977_607_103e-7,
    6.116_095_104_481_415_818e-9,
    5.002_007_644_469_222_930e-9,
    -1.181_274_570_487_020_145e-9,
    1.043_426_711_691_100_510e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783e-14,
    -5.348_122_539_423_017_982e-15,
    1.226_778_628_238_260_790e-15,
    -1.181_259_301_697_458_770e-16,
];

/// 1/Γ(1+z) for |z| ≤ 1/2 from its Taylor series.
pub fn recip_gamma_1p(z: f64) -> f64 {
    RECIP_GAMMA.iter().rev().fold(0.0, |acc, c| acc * z + c)
}

/// Temme's auxiliary functions for |μ| ≤ 1/2:
/// Γ₁ = (1/Γ(1−μ) − 1/Γ(1+μ)) / 2μ and Γ₂ = (1/Γ(1−μ) + 1/Γ(1+μ)) / 2,
/// together with 1/Γ(1+μ) and 1/Γ(1−μ).
pub(crate) fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mu2 = mu * mu;
    let mut even = 0.0;
    let mut odd = 0.0;
    // even part in powers of μ², odd part divided by μ
    for (m, c) in RECIP_GAMMA.iter().enumerate().rev() {
        if m % 2 == 0 {
            even = even * mu2 + c;
        } else {
            odd = odd * mu2 + c;
        }
    }
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::EULER_GAMMA;
    use approx::assert_relative_eq;

    #[test]
    fn real_axis_matches_known_values() {
        // ln Γ(1/2) = ln √π, ln Γ(5) = ln 24
        let v = ln_gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert_relative_eq!(v.re, 0.5 * std::f64::consts::PI.ln(), max_relative = 1e-14);
        assert_eq!(v.im, 0.0);
        let v = ln_gamma(Complex64::new(5.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 24f64.ln(), max_relative = 1e-14);
    }

    #[test]
    fn modulus_on_imaginary_line() {
        // |Γ(1+iy)|² = πy / sinh(πy)
        for &y in &[0.1, 0.7, 2.0, 4.5] {
            let v = ln_gamma(Complex64::new(1.0, y)).unwrap();
            let pi_y = std::f64::consts::PI * y;
            assert_relative_eq!((2.0 * v.re).exp(), pi_y / pi_y.sinh(), max_relative = 1e-13);
        }
    }

    #[test]
    fn gamma_arg_small_xi() {
        assert_eq!(gamma_arg(0.0), 0.0);
        let xi = 1e-4;
        assert!((gamma_arg(xi) + EULER_GAMMA * xi).abs() < 1e-11);
    }

    #[test]
    fn gamma_arg_is_odd() {
        for &xi in &[0.05, 0.3, 1.0, 3.7, 12.0] {
            assert_eq!(gamma_arg(-xi), -gamma_arg(xi));
        }
    }

    #[test]
    fn gamma_arg_is_continuous_past_pi() {
        // arg Γ(1+iΞ) ~ Ξ ln Ξ − Ξ at large Ξ, so the continuous branch leaves (−π, π]
        let mut prev = gamma_arg(0.0);
        for i in 1..=400 {
            let v = gamma_arg(i as f64 * 0.05);
            assert!((v - prev).abs() < 0.3, "jump at {}", i as f64 * 0.05);
            prev = v;
        }
        assert!(prev > std::f64::consts::PI);
    }

    #[test]
    fn recip_gamma_series() {
        assert_relative_eq!(recip_gamma_1p(0.0), 1.0);
        // Γ(3/2) = √π / 2
        assert_relative_eq!(
            recip_gamma_1p(0.5),
            2.0 / std::f64::consts::PI.sqrt(),
            max_relative = 1e-15
        );
        // Γ(1/2) = √π
        assert_relative_eq!(
            recip_gamma_1p(-0.5),
            1.0 / std::f64::consts::PI.sqrt(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn temme_gammas_consistent() {
        for &mu in &[-0.5, -0.2, 1e-9, 0.3, 0.5] {
            let (g1, g2, gp, gm) = temme_gammas(mu);
            assert_relative_eq!(gp, recip_gamma_1p(mu), max_relative = 1e-15);
            assert_relative_eq!(gm, recip_gamma_1p(-mu), max_relative = 1e-15);
            assert_relative_eq!(g2, 0.5 * (gp + gm), max_relative = 1e-15);
            if mu.abs() > 0.1 {
                assert_relative_eq!(g1, (gm - gp) / (2.0 * mu), max_relative = 1e-13);
            }
        }
        // Γ₁(0) = −γ
        assert_relative_eq!(temme_gammas(0.0).0, -EULER_GAMMA, max_relative = 1e-15);
    }
}
