//! Bracketing root finders.

use crate::error::{Error, Result};

const MAX_BISECTIONS: usize = 400;

/// Bisects `f` on `[lo, hi]` until the bracket is narrower than `tol`.
///
/// `f(lo)` and `f(hi)` must differ in sign; an exact zero at either end is
/// returned immediately.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.signum() != f_hi.signum()) || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::RootNotFound(format!(
            "no sign change on [{lo}, {hi}] (f = {f_lo:e}, {f_hi:e})"
        )));
    }
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Walks `points` in order and returns the first adjacent pair across which
/// `f` changes sign.
pub fn first_sign_change<F: FnMut(f64) -> f64>(
    mut f: F,
    points: impl IntoIterator<Item = f64>,
) -> Option<(f64, f64)> {
    let mut prev: Option<(f64, f64)> = None;
    for x in points {
        let fx = f(x);
        if let Some((xp, fp)) = prev {
            if fx == 0.0 || fp.signum() != fx.signum() {
                return Some((xp, x));
            }
        }
        prev = Some((x, fx));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn rejects_missing_bracket() {
        assert!(matches!(
            bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-10),
            Err(Error::RootNotFound(_))
        ));
    }

    #[test]
    fn scan_finds_first_crossing() {
        let grid = (0..100).map(|i| i as f64 * 0.1);
        let (a, b) = first_sign_change(|x: f64| x.cos(), grid).unwrap();
        assert!(a < std::f64::consts::FRAC_PI_2 && b > std::f64::consts::FRAC_PI_2);
    }
}
