//! Elementary exact integer arithmetic shared by every other module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn bi(n: i64) -> BigInt {
    BigInt::from(n)
}

/// gcd of the absolute values; gcd of an all-zero list is 0.
pub fn gcd_many(values: &[BigInt]) -> Result<BigInt> {
    if values.is_empty() {
        return Err(Error::EmptyInput("gcd_many"));
    }
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// Floor square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::InvalidArgument(format!("isqrt of negative {n}")));
    }
    Ok(n.sqrt())
}

/// Exact square root, or None if `n` is not a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// True iff n = A^2 + B^2 for some integers A, B.
pub fn is_sum_two_squares(n: &BigInt) -> bool {
    decompose_two_squares(n).is_some()
}

/// One witness (A, B) with n = A^2 + B^2, canonicalized to A >= B >= 0 and
/// lexicographically smallest such pair. None when no decomposition exists.
pub fn decompose_two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::zero()));
    }
    // smallest A with 2A^2 >= n, scanning upward keeps the result lexicographically least
    let mut a = ((n + 1u8) / 2u8).sqrt();
    while &(&a * &a) < &((n + 1u8) / 2u8) {
        a += 1u8;
    }
    let top = n.sqrt();
    while a <= top {
        let rest = n - &a * &a;
        if let Some(b) = exact_sqrt(&rest) {
            return Some((a, b));
        }
        a += 1u8;
    }
    None
}

/// True iff n = A^2 + B^2 with gcd(A, B) = 1.
pub fn is_sum_two_coprime_squares(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if n.is_zero() {
        return false;
    }
    let mut a = BigInt::zero();
    loop {
        let aa = &a * &a;
        if &aa * 2u8 > *n {
            return false;
        }
        let rest = n - aa;
        if let Some(b) = exact_sqrt(&rest) {
            if a.gcd(&b).is_one() {
                return true;
            }
        }
        a += 1u8;
    }
}

/// Three-square representability: n is a sum of three squares iff it is not
/// of the form 4^k (8m + 7).
pub fn is_sum_three_squares(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let mut m = n.clone();
    let four = bi(4);
    while (&m % &four).is_zero() && !m.is_zero() {
        m /= &four;
    }
    (&m % 8u8) != bi(7)
}

/// Trial-division primality, adequate for the magnitudes in scope.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &bi(2) {
        return false;
    }
    if n < &bi(4) {
        return true;
    }
    if (n % 2u8).is_zero() {
        return false;
    }
    let mut d = bi(3);
    while &(&d * &d) <= n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2u8;
    }
    true
}

/// Distinct prime factors by trial division, ascending.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m < bi(2) {
        return out;
    }
    let mut d = bi(2);
    while &(&d * &d) <= &m {
        if (&m % &d).is_zero() {
            out.push(d.clone());
            while (&m % &d).is_zero() {
                m /= &d;
            }
        }
        d += 1u8;
    }
    if m > BigInt::one() {
        out.push(m);
    }
    out
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_many_basics() {
        assert_eq!(gcd_many(&[bi(12), bi(18), bi(24)]).unwrap(), bi(6));
        assert_eq!(gcd_many(&[bi(0), bi(0), bi(5)]).unwrap(), bi(5));
        assert_eq!(gcd_many(&[bi(6375), bi(2720), bi(2040)]).unwrap(), bi(85));
        assert_eq!(gcd_many(&[bi(0), bi(0)]).unwrap(), bi(0));
        assert!(gcd_many(&[]).is_err());
    }

    #[test]
    fn gcd_many_sign_invariance() {
        assert_eq!(gcd_many(&[bi(-12), bi(18), bi(-24)]).unwrap(), bi(6));
        assert_eq!(gcd_many(&[bi(24), bi(-18), bi(12)]).unwrap(), bi(6));
    }

    #[test]
    fn two_squares() {
        assert_eq!(decompose_two_squares(&bi(2017)), Some((bi(44), bi(9))));
        assert!(!is_sum_two_squares(&bi(3)));
        assert_eq!(decompose_two_squares(&bi(45)), Some((bi(6), bi(3))));
        // lexicographically smallest witness with A >= B
        assert_eq!(decompose_two_squares(&bi(25)), Some((bi(4), bi(3))));
    }

    #[test]
    fn two_coprime_squares() {
        assert!(is_sum_two_coprime_squares(&bi(2017)));
        assert!(is_sum_two_coprime_squares(&bi(2)));
        assert!(!is_sum_two_coprime_squares(&bi(9)));
        assert!(!is_sum_two_coprime_squares(&bi(4)));
        assert!(is_sum_two_coprime_squares(&bi(25)));
    }

    #[test]
    fn three_squares() {
        assert!(!is_sum_three_squares(&bi(7)));
        assert!(!is_sum_three_squares(&bi(28)));
        assert!(is_sum_three_squares(&bi(11)));
    }

    #[test]
    fn primality() {
        assert!(is_prime(&bi(2)));
        assert!(is_prime(&bi(2017)));
        assert!(!is_prime(&bi(2015)));
        assert_eq!(prime_factors(&bi(2015)), vec![bi(5), bi(13), bi(31)]);
    }
}
