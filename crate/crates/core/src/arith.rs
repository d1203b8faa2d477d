//! Exact integer combinatorics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Binomial coefficient with the convention that it vanishes outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative number");
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= t;
    }
    acc
}

/// `(a+b+c)! / (a! b! c!)`, zero if any part is negative.
pub fn multinomial3(a: i64, b: i64, c: i64) -> BigInt {
    if a < 0 || b < 0 || c < 0 {
        return BigInt::zero();
    }
    binomial(a + b + c, a) * binomial(b + c, b)
}

/// Multinomial with the total given explicitly; zero unless the parts sum to it.
pub fn multinomial(total: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != total {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    let mut left = total;
    for &p in parts {
        acc *= binomial(left, p);
        left -= p;
    }
    acc
}

pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Converts a rational that must be integral; `None` otherwise.
pub fn rational_to_integer(r: &BigRational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        let (q, rem) = r.numer().div_rem(r.denom());
        rem.is_zero().then_some(q)
    }
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// λ_s = s(s+2).
pub fn lambda(s: i64) -> i64 {
    s * (s + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_table() {
        let row: Vec<i64> = (0..=6)
            .map(|b| binomial(6, b).try_into().unwrap())
            .collect();
        assert_eq!(row, vec![1, 6, 15, 20, 15, 6, 1]);
        assert!(binomial(3, 4).is_zero());
        assert!(binomial(3, -1).is_zero());
        assert!(binomial(-2, 1).is_zero());
    }

    #[test]
    fn binomial_large_against_factorials() {
        let lhs = binomial(90, 37);
        let rhs = factorial(90) / (factorial(37) * factorial(53));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multinomial_agrees() {
        assert_eq!(multinomial3(2, 1, 1), BigInt::from(12));
        assert_eq!(multinomial(4, &[2, 1, 1]), BigInt::from(12));
        assert!(multinomial(5, &[2, 1, 1]).is_zero());
        assert_eq!(
            multinomial3(5, 7, 3),
            factorial(15) / (factorial(5) * factorial(7) * factorial(3))
        );
    }

    #[test]
    fn lambda_difference_factorises() {
        for s in 0..30 {
            for t in 0..30 {
                assert_eq!(lambda(s) - lambda(t), (s - t) * (s + t + 2));
            }
        }
    }

    #[test]
    fn integral_rationals() {
        assert_eq!(rational_to_integer(&ratio(12, 4)), Some(BigInt::from(3)));
        assert_eq!(rational_to_integer(&ratio(-12, 4)), Some(BigInt::from(-3)));
        assert_eq!(rational_to_integer(&ratio(5, 4)), None);
    }
}
