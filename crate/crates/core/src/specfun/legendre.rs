use crate::error::{domain, Result};

/// Legendre polynomial P_ℓ(x) by the upward three-term recurrence.
pub fn legendre_p(l: u32, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(domain("legendre_p", "|x| must be <= 1", x));
    }
    let (mut p_prev, mut p) = (1.0, x);
    if l == 0 {
        return Ok(1.0);
    }
    for n in 1..l {
        let n = n as f64;
        let next = ((2.0 * n + 1.0) * x * p - n * p_prev) / (n + 1.0);
        p_prev = p;
        p = next;
    }
    Ok(p)
}

/// P_0(x) ..= P_lmax(x) in one pass.
pub fn legendre_table(l_max: u32, x: f64) -> Result<Vec<f64>> {
    if !(x.abs() <= 1.0) {
        return Err(domain("legendre_table", "|x| must be <= 1", x));
    }
    let mut out = Vec::with_capacity(l_max as usize + 1);
    out.push(1.0);
    if l_max >= 1 {
        out.push(x);
    }
    for n in 1..l_max as usize {
        let nf = n as f64;
        let next = ((2.0 * nf + 1.0) * x * out[n] - nf * out[n - 1]) / (nf + 1.0);
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn low_orders() {
        assert_eq!(legendre_p(0, 0.37).unwrap(), 1.0);
        assert_eq!(legendre_p(1, -0.5).unwrap(), -0.5);
    }

    #[test]
    fn degree_five_matches_explicit_polynomial() {
        let x: f64 = 0.3;
        let explicit = (63.0 * x.powi(5) - 70.0 * x.powi(3) + 15.0 * x) / 8.0;
        assert_abs_diff_eq!(legendre_p(5, x).unwrap(), explicit, epsilon = 1e-15);
    }

    #[test]
    fn out_of_domain() {
        assert!(legendre_p(3, 1.0001).is_err());
        assert!(legendre_p(3, f64::NAN).is_err());
    }

    #[test]
    fn table_agrees_with_single_evaluations() {
        let t = legendre_table(40, -0.71).unwrap();
        for (l, v) in t.iter().enumerate() {
            assert_eq!(*v, legendre_p(l as u32, -0.71).unwrap());
        }
    }

    #[test]
    fn bounded_by_one() {
        for l in 0..200 {
            for i in 0..=50 {
                let x = -1.0 + i as f64 * 0.04;
                assert!(legendre_p(l, x).unwrap().abs() <= 1.0 + 1e-12);
            }
        }
    }
}
