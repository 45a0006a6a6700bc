//! Hausdorff dimensions from the Moran equation `sum a(i)^s = 1`.
//!
//! For a finite alphabet the tree has dimension equal to the unique root of
//! the strictly decreasing Moran sum. For an infinite alphabet with a
//! geometric tail, any exponent whose full alphabet sum stays below 1 is an
//! upper bound for the dimension; [`dimension_bound_infinity`] certifies
//! that inequality in closed form.

use num::ToPrimitive;

use crate::words::{Letter, Weight};
use crate::{Error, Result};

fn to_f64(r: &num::BigRational) -> f64 {
    r.to_f64().expect("weight values fit in f64")
}

/// The Moran sum `psi(t) = a(1)^t + ... + a(m)^t`.
pub fn psi(m: Letter, a: &Weight, t: f64) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("need m >= 2, got {m}")));
    }
    let mut s = 0.0;
    for i in 1..=m {
        s += to_f64(&a.value(i)?).powf(t);
    }
    Ok(s)
}

/// Root of the Moran equation with the bracket that encloses it and the
/// residual `|psi(s) - 1|` at the returned exponent.
#[derive(Clone, Copy, Debug)]
pub struct MoranSolution {
    pub exponent: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
}

/// Solves `psi(s) = 1` by bisection on `[1, 1 + log2(m)]`.
///
/// `psi(1) >= 1` because `a(1) + a(2) = 1`, and `psi` falls below `1` by the
/// right endpoint since every value is at most `1/2`; at most 64 halvings
/// bring the bracket below any representable `tol`.
pub fn moran_dimension(m: Letter, a: &Weight, tol: f64) -> Result<MoranSolution> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance {tol} not positive")));
    }
    let mut lo = 1.0_f64;
    let mut hi = 1.0 + (m as f64).log2();
    if psi(m, a, lo)? < 1.0 || psi(m, a, hi)? > 1.0 {
        return Err(Error::InvalidParameter(
            "Moran sum does not bracket 1 on [1, 1 + log2(m)]".into(),
        ));
    }
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo < tol * 1e-3 {
            break;
        }
        if psi(m, a, mid)? >= 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let exponent = 0.5 * (lo + hi);
    Ok(MoranSolution {
        exponent,
        residual: (psi(m, a, exponent)? - 1.0).abs(),
        bracket: (lo, hi),
    })
}

/// Sum of `a(i)^s` over the whole alphabet, including the closed-form
/// geometric tail `a(m)^s r^s / (1 - r^s)` when one is present. Returns
/// infinity when the tail fails to converge at `s`.
pub fn alphabet_sum(a: &Weight, s: f64) -> Result<f64> {
    let m = a.m();
    let explicit = psi(m, a, s)?;
    match a.tail_ratio() {
        None => Ok(explicit),
        Some(r) => {
            let rs = to_f64(r).powf(s);
            if rs >= 1.0 {
                return Ok(f64::INFINITY);
            }
            let am = to_f64(&a.value(m)?);
            Ok(explicit + am.powf(s) * rs / (1.0 - rs))
        }
    }
}

/// Certifies that `s` dominates the dimension of the full-alphabet tree:
/// true exactly when the alphabet sum at `s` is finite and below 1.
pub fn dimension_bound_infinity(a: &Weight, s: f64) -> Result<bool> {
    Ok(alphabet_sum(a, s)? < 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_ratio;

    fn r(s: &str) -> num::BigRational {
        parse_ratio(s).expect("valid rational")
    }

    #[test]
    fn psi_is_strictly_decreasing_on_a_grid() {
        let a = Weight::new(vec![r("1/2"), r("1/2"), r("1/4"), r("1/4")]).unwrap();
        let mut prev = f64::INFINITY;
        for k in 0..=40 {
            let t = 1.0 + 0.05 * k as f64;
            let v = psi(4, &a, t).unwrap();
            assert!(v < prev, "psi must decrease at t = {t}");
            prev = v;
        }
    }

    #[test]
    fn moran_exponents_for_uniform_weights() {
        let s2 = moran_dimension(2, &Weight::uniform(2), 1e-12).unwrap();
        assert!((s2.exponent - 1.0).abs() < 1e-10);
        let s4 = moran_dimension(4, &Weight::uniform(4), 1e-12).unwrap();
        assert!((s4.exponent - 2.0).abs() < 1e-10);
        let s3 = moran_dimension(3, &Weight::uniform(3), 1e-12).unwrap();
        assert!((s3.exponent - 3f64.log2()).abs() < 1e-10);
    }

    #[test]
    fn moran_residual_and_bracket() {
        let a = Weight::new(vec![r("1/2"), r("1/2"), r("1/4"), r("1/4")]).unwrap();
        let sol = moran_dimension(4, &a, 1e-12).unwrap();
        assert!(sol.residual <= 1e-12, "residual {}", sol.residual);
        assert!(sol.bracket.0 <= sol.exponent && sol.exponent <= sol.bracket.1);
        assert!(psi(4, &a, sol.bracket.0).unwrap() >= 1.0);
        assert!(psi(4, &a, sol.bracket.1).unwrap() <= 1.0);
    }

    #[test]
    fn tail_sum_certificate() {
        // a(1) = 1/2, a(j) = 2^(1-j) beyond: sum a^(3/2) is about 0.9 < 1.
        let a = Weight::with_geometric_tail(vec![r("1/2"), r("1/2")], r("1/2")).unwrap();
        assert!(dimension_bound_infinity(&a, 1.5).unwrap());
        // At s = 1 the full sum is 3/2.
        assert!(!dimension_bound_infinity(&a, 1.0).unwrap());
        assert!((alphabet_sum(&a, 1.0).unwrap() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn finite_weight_sum_equals_psi() {
        let a = Weight::uniform(4);
        assert_eq!(alphabet_sum(&a, 2.0).unwrap(), psi(4, &a, 2.0).unwrap());
        assert!(!dimension_bound_infinity(&a, 2.0).unwrap());
        assert!(dimension_bound_infinity(&a, 2.1).unwrap());
    }
}
