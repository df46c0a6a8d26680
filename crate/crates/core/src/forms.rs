//! Positive definite binary quadratic forms and exact value enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::exact_sqrt;
use crate::error::{Error, Result};

/// A v^2 + B v w + C w^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryQuadraticForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl BinaryQuadraticForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        BinaryQuadraticForm { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        BinaryQuadraticForm::new(BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    /// 4AC - B^2, positive exactly for definite forms with A > 0.
    pub fn discriminant_neg(&self) -> BigInt {
        BigInt::from(4) * &self.a * &self.c - &self.b * &self.b
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a.is_positive() && self.discriminant_neg().is_positive()
    }

    pub fn eval(&self, v: &BigInt, w: &BigInt) -> BigInt {
        &self.a * v * v + &self.b * v * w + &self.c * w * w
    }

    /// Bilinear companion: f(x+y) = f(x) + f(y) + pairing(x, y).
    pub fn pairing(&self, v1: &BigInt, w1: &BigInt, v2: &BigInt, w2: &BigInt) -> BigInt {
        BigInt::from(2) * &self.a * v1 * v2
            + &self.b * (v1 * w2 + v2 * w1)
            + BigInt::from(2) * &self.c * w1 * w2
    }
}

/// All integer (v, w) with f(v, w) = target, in lexicographic order.
///
/// Completing the square gives f(v,w) >= (4AC - B^2)/(4A) w^2 and the mirror
/// bound in v, so both variables range over an exactly computed interval; for
/// each v the remaining quadratic in w is solved by a perfect-square test.
pub fn enumerate_form_values(
    f: &BinaryQuadraticForm,
    target: &BigInt,
) -> Result<Vec<(BigInt, BigInt)>> {
    if !f.is_positive_definite() {
        return Err(Error::InvalidArgument(format!(
            "form {}v^2 + {}vw + {}w^2 is not positive definite",
            f.a, f.b, f.c
        )));
    }
    if target.is_negative() {
        return Ok(Vec::new());
    }
    if target.is_zero() {
        return Ok(vec![(BigInt::zero(), BigInt::zero())]);
    }
    let d = f.discriminant_neg();
    // v^2 <= 4C * target / d
    let vmax = (BigInt::from(4) * &f.c * target).div_floor(&d).sqrt();
    let mut out = Vec::new();
    let mut v = -vmax.clone();
    while v <= vmax {
        // C w^2 + (B v) w + (A v^2 - target) = 0
        let bb = &f.b * &v;
        let cc = &f.a * &v * &v - target;
        let disc = &bb * &bb - BigInt::from(4) * &f.c * &cc;
        if let Some(root) = exact_sqrt(&disc) {
            let two_c = BigInt::from(2) * &f.c;
            for r in [&root, &-&root] {
                let num = -&bb + r;
                let (q, rem) = num.div_mod_floor(&two_c);
                if rem.is_zero() {
                    out.push((v.clone(), q));
                }
                if root.is_zero() {
                    break;
                }
            }
        }
        v += 1u8;
    }
    out.sort();
    out.dedup();
    Ok(out)
}
