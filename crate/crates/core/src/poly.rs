//! Integer polynomials in one variable, ascending coefficients, plus exact
//! interpolation from count data.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients ascending: coeffs[0] is the constant term. Trailing zero
/// coefficients are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EhrhartPolynomial {
    coeffs: Vec<BigInt>,
}

impl EhrhartPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        EhrhartPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        EhrhartPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn constant(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Interior-point count of the t-th dilate by Ehrhart reciprocity:
    /// (-1)^d L(-t).
    pub fn interior(&self, t: &BigInt) -> BigInt {
        let v = self.eval(&-t);
        if self.degree() % 2 == 0 {
            v
        } else {
            -v
        }
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 => {
                    if a.is_one() {
                        write!(f, "t")?
                    } else {
                        write!(f, "{a}t")?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "t^{k}")?
                    } else {
                        write!(f, "{a}t^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Unique interpolating polynomial of the given degree through exactly
/// degree+1 points with distinct t, by Lagrange interpolation over exact
/// rationals. Errors when the coefficients are not integers.
pub fn fit_polynomial(points: &[(BigInt, BigInt)], degree: usize) -> Result<EhrhartPolynomial> {
    if points.len() != degree + 1 {
        return Err(Error::InvalidArgument(format!(
            "need exactly {} points for degree {degree}, got {}",
            degree + 1,
            points.len()
        )));
    }
    for (i, (ti, _)) in points.iter().enumerate() {
        for (tj, _) in points.iter().skip(i + 1) {
            if ti == tj {
                return Err(Error::InvalidArgument(format!(
                    "duplicate interpolation node t = {ti}"
                )));
            }
        }
    }

    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (ti, yi)) in points.iter().enumerate() {
        // numerator polynomial prod_{j != i} (t - t_j), ascending coefficients
        let mut num = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (tj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let root = BigRational::from(tj.clone());
            let mut next = vec![BigRational::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= &root * c;
            }
            num = next;
            denom *= BigRational::from(ti - tj);
        }
        let weight = BigRational::from(yi.clone()) / denom;
        for (k, c) in num.iter().enumerate() {
            acc[k] += c * &weight;
        }
    }

    let mut coeffs = Vec::with_capacity(n);
    for c in &acc {
        if !c.is_integer() {
            return Err(Error::NonIntegerFit {
                detail: format!(
                    "coefficient {c} from points {:?}",
                    points
                        .iter()
                        .map(|(t, y)| (t.to_string(), y.to_string()))
                        .collect::<Vec<_>>()
                ),
            });
        }
        coeffs.push(c.to_integer());
    }
    Ok(EhrhartPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bi;

    fn pts(p: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        p.iter().map(|&(t, y)| (bi(t), bi(y))).collect()
    }

    #[test]
    fn fit_perfect_square() {
        let p = fit_polynomial(&pts(&[(1, 4), (2, 9), (3, 16)]), 2).unwrap();
        assert_eq!(p, EhrhartPolynomial::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn fit_figure_square_counts() {
        // counts of the 29t^2 + 2t + 1 square at t = 1, 2, 3
        let p = fit_polynomial(&pts(&[(1, 32), (2, 121), (3, 268)]), 2).unwrap();
        assert_eq!(p, EhrhartPolynomial::from_i64(&[1, 2, 29]));
    }

    #[test]
    fn fit_wrong_point_count() {
        assert!(fit_polynomial(&pts(&[(1, 3), (2, 7)]), 2).is_err());
    }

    #[test]
    fn fit_non_integer() {
        // second differences 1, so the leading coefficient is 1/2
        let err = fit_polynomial(&pts(&[(1, 0), (2, 1), (3, 3)]), 2).unwrap_err();
        match err {
            Error::NonIntegerFit { .. } => {}
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn interior_by_reciprocity() {
        let p = EhrhartPolynomial::from_i64(&[1, 2, 29]);
        assert_eq!(p.interior(&bi(1)), bi(28));
        let cube = EhrhartPolynomial::from_i64(&[1, 3, 3, 1]);
        assert_eq!(cube.interior(&bi(1)), bi(0));
        assert_eq!(cube.interior(&bi(2)), bi(1));
    }

    #[test]
    fn display_form() {
        let p = EhrhartPolynomial::from_i64(&[1, 2, 29]);
        assert_eq!(p.to_string(), "29t^2 + 2t + 1");
        let q = EhrhartPolynomial::from_i64(&[1, -2, 29]);
        assert_eq!(q.to_string(), "29t^2 - 2t + 1");
    }
}
