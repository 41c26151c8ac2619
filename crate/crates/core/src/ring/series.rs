use std::collections::BTreeMap;

use super::poly::LaurentPoly;
use super::rational::{RationalError, RationalFn};
use super::var::Var;

/// Expansion point of a one-variable series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// Power series in `var^-1`.
    AtInfinity,
    /// Power series in `var`.
    AtZero,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("no power series expansion: {0}")]
    NoExpansion(&'static str),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

/// Coefficients in the variable `u` (`u = var^-1` at infinity, `u = var` at
/// zero), as a dense vector starting at the lowest power together with that
/// power.
fn in_u(p: &LaurentPoly, var: Var, regime: Regime) -> (i32, Vec<LaurentPoly>) {
    let parts: BTreeMap<i32, LaurentPoly> = p
        .coefficients_in(var)
        .into_iter()
        .map(|(e, c)| match regime {
            Regime::AtInfinity => (-e, c),
            Regime::AtZero => (e, c),
        })
        .collect();
    let low = *parts.keys().next().expect("nonzero polynomial");
    let high = *parts.keys().next_back().unwrap();
    let mut dense = vec![LaurentPoly::zero(); (high - low + 1) as usize];
    for (e, c) in parts {
        dense[(e - low) as usize] = c;
    }
    (low, dense)
}

/// Coefficients `c_0..=c_order` with `r = sum c_k var^(∓k) + O(var^(∓(order+1)))`.
pub fn expand_series(
    r: &RationalFn,
    var: Var,
    regime: Regime,
    order: usize,
) -> Result<Vec<RationalFn>, SeriesError> {
    let mut out = vec![RationalFn::zero(); order + 1];
    if r.is_zero() {
        return Ok(out);
    }
    // lowest u-coefficient of the denominator, kept factored
    let mut den_low = 0i32;
    let mut den_series: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    let mut d0_factors: Vec<(LaurentPoly, u32)> = Vec::new();
    for (f, m) in r.den_factors() {
        let (low, dense) = in_u(f, var, regime);
        let lead = dense[0].clone();
        if lead.is_zero() {
            return Err(SeriesError::NoExpansion("vanishing extreme coefficient"));
        }
        for _ in 0..*m {
            den_low += low;
            den_series = truncated_mul(&den_series, &dense, order + 1);
        }
        d0_factors.push((lead, *m));
    }
    let (num_low, num_dense) = in_u(r.num(), var, regime);
    let shift = num_low - den_low;
    if shift < 0 {
        return Err(SeriesError::NoExpansion("pole at the expansion point"));
    }
    let d0 = &den_series[0];
    let d0_pows: Vec<LaurentPoly> = {
        let mut v = vec![LaurentPoly::one()];
        for k in 1..=order {
            v.push(&v[k - 1] * d0);
        }
        v
    };
    // t_k * d0^(k+1) = N_k d0^k - sum_{j=1..k} D_j (t_{k-j} d0^(k-j+1)) d0^(j-1)
    let shift = shift as usize;
    let mut scaled: Vec<LaurentPoly> = Vec::new();
    for k in 0..=order.saturating_sub(shift) {
        if k + shift > order {
            break;
        }
        let nk = num_dense.get(k).cloned().unwrap_or_else(LaurentPoly::zero);
        let mut acc = &nk * &d0_pows[k];
        for j in 1..=k {
            if let Some(dj) = den_series.get(j) {
                if !dj.is_zero() {
                    acc = &acc - &(&(dj * &scaled[k - j]) * &d0_pows[j - 1]);
                }
            }
        }
        scaled.push(acc);
    }
    for (k, tk) in scaled.into_iter().enumerate() {
        let factors = d0_factors.iter().map(|(f, m)| (f.clone(), m * (k as u32 + 1)));
        out[k + shift] = RationalFn::with_factors(tk, factors)?.reduced();
    }
    Ok(out)
}

fn truncated_mul(a: &[LaurentPoly], b: &[LaurentPoly], len: usize) -> Vec<LaurentPoly> {
    let n = (a.len() + b.len() - 1).min(len);
    let mut out = vec![LaurentPoly::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= n {
                break;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::monomial::Monomial;

    fn w() -> LaurentPoly {
        LaurentPoly::var(Var::w(0, 1))
    }

    #[test]
    fn geometric_series_at_infinity() {
        let x = Var::series();
        let r = RationalFn::recip_of(&LaurentPoly::one() - &(&w() * &LaurentPoly::var_pow(x, -1))).unwrap();
        let c = expand_series(&r, x, Regime::AtInfinity, 2).unwrap();
        let expect = [LaurentPoly::one(), w(), w().pow(2)];
        for (a, b) in c.iter().zip(expect) {
            assert_eq!(*a, RationalFn::from_poly(b));
        }
    }

    #[test]
    fn geometric_series_at_zero() {
        let x = Var::series();
        let wi = Monomial::power(Var::w(0, 1), -1);
        let r = RationalFn::recip_of(&LaurentPoly::one() - &LaurentPoly::mono(wi.mul(&Monomial::var(x)))).unwrap();
        let c = expand_series(&r, x, Regime::AtZero, 2).unwrap();
        assert_eq!(c[1], RationalFn::from_poly(LaurentPoly::mono(wi.clone())));
        assert_eq!(c[2], RationalFn::from_poly(LaurentPoly::mono(wi.pow(2))));
    }

    #[test]
    fn finite_expansion() {
        let x = Var::series();
        let tau = LaurentPoly::var(Var::tau(0, 1));
        let r = RationalFn::from_poly(&LaurentPoly::one() - &(&tau * &LaurentPoly::var_pow(x, -1)));
        let c = expand_series(&r, x, Regime::AtInfinity, 1).unwrap();
        assert_eq!(c[0], RationalFn::one());
        assert_eq!(c[1], RationalFn::from_poly(-&tau));
    }

    #[test]
    fn pole_is_rejected() {
        let x = Var::series();
        let r = RationalFn::from_poly(LaurentPoly::var(x));
        assert!(expand_series(&r, x, Regime::AtInfinity, 1).is_err());
        let r = RationalFn::recip_of(LaurentPoly::var(x)).unwrap();
        // 1/x is a unit: normalized into the numerator, pole at zero
        assert!(expand_series(&r, x, Regime::AtZero, 1).is_err());
    }
}
