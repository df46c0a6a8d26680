//! Gaussian integers and their Euclidean gcd.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInt { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussianInt::new(BigInt::from(re), BigInt::from(im))
    }

    pub fn zero() -> Self {
        GaussianInt::new(BigInt::zero(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -&self.im)
    }

    fn mul_i(&self) -> Self {
        GaussianInt::new(-&self.im, self.re.clone())
    }

    /// Canonical unit-multiple: re > 0 and re >= |im|, preferring im >= 0 on
    /// the tie |im| = re. Zero stays zero.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut best: Option<GaussianInt> = None;
        let mut z = self.clone();
        for _ in 0..4 {
            if z.re.is_positive() && z.re >= z.im.abs() {
                match &best {
                    Some(b) => {
                        if z.im > b.im {
                            best = Some(z.clone());
                        }
                    }
                    None => best = Some(z.clone()),
                }
            }
            z = z.mul_i();
        }
        best.expect("one of the four unit multiples lands in the first quadrant")
    }

    /// Exact division; None when `self` is not divisible by `d`.
    pub fn div_exact(&self, d: &GaussianInt) -> Option<GaussianInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &d.conj();
        let (qr, rr) = num_integer::Integer::div_mod_floor(&num.re, &n);
        let (qi, ri) = num_integer::Integer::div_mod_floor(&num.im, &n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussianInt::new(qr, qi))
        } else {
            None
        }
    }

    /// Rounded division q = round(self / d), remainder self - q*d of norm
    /// strictly smaller than norm(d).
    fn div_rem_rounded(&self, d: &GaussianInt) -> (GaussianInt, GaussianInt) {
        let n = d.norm();
        let num = self * &d.conj();
        let round = |x: &BigInt| -> BigInt {
            // nearest integer to x / n, ties toward +infinity
            num_integer::Integer::div_floor(&(x * 2 + &n), &(&n * 2))
        };
        let q = GaussianInt::new(round(&num.re), round(&num.im));
        let r = self - &(&q * d);
        (q, r)
    }
}

/// Euclidean gcd, canonicalized via [`GaussianInt::canonical`].
pub fn gaussian_gcd(z1: &GaussianInt, z2: &GaussianInt) -> Result<GaussianInt> {
    if z1.is_zero() && z2.is_zero() {
        return Err(Error::ZeroInput("gaussian gcd operand pair"));
    }
    let mut a = z1.clone();
    let mut b = z2.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem_rounded(&b);
        a = b;
        b = r;
    }
    Ok(a.canonical())
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    #[test]
    fn gcd_with_zero_is_canonical_operand() {
        let z = g(-3, 4);
        assert_eq!(gaussian_gcd(&z, &GaussianInt::zero()).unwrap(), z.canonical());
        assert!(gaussian_gcd(&GaussianInt::zero(), &GaussianInt::zero()).is_err());
    }

    #[test]
    fn gcd_of_five_and_two_plus_i() {
        assert_eq!(gaussian_gcd(&g(5, 0), &g(2, 1)).unwrap(), g(2, 1));
    }

    #[test]
    fn gcd_where_one_divides_the_other() {
        // 2 divides 4+2i exactly, so the gcd is 2 itself (up to units)
        assert_eq!(gaussian_gcd(&g(4, 2), &g(2, 0)).unwrap(), g(2, 0));
    }

    #[test]
    fn gcd_by_hand() {
        // gcd(3+i, 1+3i) = 1+i: both have norm 10 but neither divides the other
        assert_eq!(gaussian_gcd(&g(3, 1), &g(1, 3)).unwrap(), g(1, 1));
    }

    #[test]
    fn canonical_representative() {
        assert_eq!(g(0, 3).canonical(), g(3, 0));
        assert_eq!(g(-2, -1).canonical(), g(2, 1));
        assert_eq!(g(1, -1).canonical(), g(1, 1));
        assert_eq!(g(1, 1).canonical(), g(1, 1));
    }

    #[test]
    fn gcd_divides_both_and_norm_divides_norm_gcd() {
        let cases = [
            (g(4, 7), g(2, -3)),
            (g(10, 0), g(6, 8)),
            (g(-5, 12), g(13, 0)),
            (g(21, -3), g(9, 9)),
        ];
        for (a, b) in cases {
            let d = gaussian_gcd(&a, &b).unwrap();
            assert!(a.div_exact(&d).is_some());
            assert!(b.div_exact(&d).is_some());
            assert!(a.norm().gcd(&b.norm()).is_multiple_of(&d.norm()));
        }
    }
}
