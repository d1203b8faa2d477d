//! The coefficient sum c_{m,n,k}(i,j).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, ratio, rational_to_integer};
use crate::error::{CgError, Result};
use crate::point::{require_cone, ParamPoint};

/// Alternating sum of products of three binomials, stepping each term to the
/// next by the ratio num(l) / den(l). Terms vanish outside `lo..=hi`.
fn stepped_sum(first: BigInt, lo: i64, hi: i64, step: impl Fn(i64) -> (i64, i64)) -> BigInt {
    if lo > hi {
        return BigInt::zero();
    }
    let mut term = first;
    let mut acc = BigInt::zero();
    for l in lo..=hi {
        if l % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        if l < hi {
            let (num, den) = step(l);
            term *= num;
            term /= den;
        }
    }
    acc
}

/// c(i,j) = Σ_l (-1)^l C(i+j-k, i-l) C(m-l, k-l) C(n-k+l, l).
pub fn sum_primary(p: &ParamPoint) -> BigInt {
    let ParamPoint { m, n, k, i, j } = *p;
    let ip = i + j - k;
    let lo = 0.max(k - j);
    let hi = i.min(k);
    let first = binomial(ip, i - lo) * binomial(m - lo, k - lo) * binomial(n - k + lo, lo);
    stepped_sum(first, lo, hi, |l| {
        (
            (i - l) * (k - l) * (n - k + l + 1),
            (ip - i + l + 1) * (m - l) * (l + 1),
        )
    })
}

/// c(i,j) = Σ_l (-1)^l C(i+j-k, i-l) C(m-i, k-l) C(n-j, l).
pub fn sum_alternative(p: &ParamPoint) -> BigInt {
    let ParamPoint { m, n, k, i, j } = *p;
    let ip = i + j - k;
    let lo = 0.max(k - j).max(k - m + i);
    let hi = i.min(k).min(n - j);
    let first = binomial(ip, i - lo) * binomial(m - i, k - lo) * binomial(n - j, lo);
    stepped_sum(first, lo, hi, |l| {
        (
            (i - l) * (k - l) * (n - j - l),
            (ip - i + l + 1) * (m - i - k + l + 1) * (l + 1),
        )
    })
}

pub fn eval_c(p: &ParamPoint) -> Result<BigInt> {
    require_cone(p)?;
    let v = sum_primary(p);
    debug_assert_eq!(v, sum_alternative(p), "summation forms disagree at {p}");
    Ok(v)
}

/// Value for k <= 2 from the rational closed forms in i and j.
///
/// Falls back to [`eval_c`] when the closed-form denominator vanishes.
pub fn small_k_closed_form(p: &ParamPoint) -> Result<BigInt> {
    require_cone(p)?;
    let ParamPoint { m, n, k, i, j } = *p;
    let base = binomial(i + j, i);
    match k {
        0 => Ok(base),
        1 => {
            if i + j == 0 {
                return eval_c(p);
            }
            let r = ratio(base * (m * j - n * i), i + j);
            Ok(rational_to_integer(&r).expect("k = 1 closed form is integral"))
        }
        2 => {
            let den = (i + j) * (i + j - 1);
            if den == 0 {
                return eval_c(p);
            }
            let poly = j * m * (j - 1) * (m - 1) - 2 * i * j * (m - 1) * (n - 1)
                + i * n * (i - 1) * (n - 1);
            let r = ratio(base * poly, 2 * den);
            Ok(rational_to_integer(&r).expect("k = 2 closed form is integral"))
        }
        _ => Err(CgError::UnsupportedK(k)),
    }
}
