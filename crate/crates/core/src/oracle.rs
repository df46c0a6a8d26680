//! Brute-force lattice point counting for dilated squares, cubes and
//! hypercubes. Shares no formula code with the closed-form modules: counting
//! happens in transformed coordinates of the saturated shape lattice with
//! exact integer threshold tests only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cubes::{FrameKind, OrthoFrame};
use crate::error::{Error, Result};
use crate::linalg::{gauss_reduce, integer_kernel, IntMatrix, IntVector};
use crate::poly::{fit_polynomial, EhrhartPolynomial};
use crate::squares::{plane_lattice_basis, TwinPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Closed,
    Open,
}

/// A countable shape.
#[derive(Debug, Clone)]
pub enum Shape {
    Square(TwinPair),
    Frame(OrthoFrame),
}

impl Shape {
    pub fn degree(&self) -> usize {
        match self {
            Shape::Square(_) => 2,
            Shape::Frame(f) => match f.kind() {
                FrameKind::Hypercube => 4,
                _ => 3,
            },
        }
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    -(-a).div_floor(b)
}

/// Counts integer tuples x with lo <= sum_i m[j][i] x_i <= hi for every
/// constraint row j, where m is square and invertible. The ranges of the
/// leading coordinates come from the exact rational preimages of the bound
/// box corners; the last coordinate is resolved interval-exactly.
fn count_transformed(m: &[Vec<BigInt>], lo: &BigInt, hi: &BigInt) -> BigInt {
    let k = m.len();
    if hi < lo {
        return BigInt::zero();
    }
    let det = IntMatrix::from_rows(m.to_vec()).determinant();
    assert!(!det.is_zero(), "transform matrix must be invertible");

    // coordinate ranges from the 2^k corners, solved by Cramer's rule
    let mut mins = vec![BigRational::zero(); k];
    let mut maxs = vec![BigRational::zero(); k];
    let mut first = true;
    for mask in 0u32..(1 << k) {
        let y: Vec<BigInt> = (0..k)
            .map(|j| {
                if mask & (1 << j) != 0 {
                    hi.clone()
                } else {
                    lo.clone()
                }
            })
            .collect();
        for i in 0..k {
            let mut rows = m.to_vec();
            for (j, row) in rows.iter_mut().enumerate() {
                row[i] = y[j].clone();
            }
            let xi = BigRational::new(IntMatrix::from_rows(rows).determinant(), det.clone());
            if first || xi < mins[i] {
                mins[i] = xi.clone();
            }
            if first || xi > maxs[i] {
                maxs[i] = xi;
            }
        }
        first = false;
    }
    let lo_bounds: Vec<BigInt> = mins.iter().map(|r| r.ceil().to_integer()).collect();
    let hi_bounds: Vec<BigInt> = maxs.iter().map(|r| r.floor().to_integer()).collect();

    // nested loops over the first k-1 coordinates with incremental partial
    // sums; the last coordinate is counted as an interval intersection
    fn rec(
        m: &[Vec<BigInt>],
        lo: &BigInt,
        hi: &BigInt,
        lo_bounds: &[BigInt],
        hi_bounds: &[BigInt],
        level: usize,
        partials: &mut Vec<BigInt>,
    ) -> BigInt {
        let k = m.len();
        if level == k - 1 {
            let mut best_lo: Option<BigInt> = None;
            let mut best_hi: Option<BigInt> = None;
            for (j, row) in m.iter().enumerate() {
                let c = &row[k - 1];
                let a = lo - &partials[j];
                let b = hi - &partials[j];
                if c.is_zero() {
                    if a.is_positive() || b.is_negative() {
                        return BigInt::zero();
                    }
                    continue;
                }
                let (l, h) = if c.is_positive() {
                    (ceil_div(&a, c), b.div_floor(c))
                } else {
                    let neg = -c;
                    (ceil_div(&-b, &neg), (-a).div_floor(&neg))
                };
                best_lo = Some(match best_lo {
                    Some(cur) => cur.max(l),
                    None => l,
                });
                best_hi = Some(match best_hi {
                    Some(cur) => cur.min(h),
                    None => h,
                });
            }
            return match (best_lo, best_hi) {
                (Some(l), Some(h)) if h >= l => h - l + 1,
                (None, None) => unreachable!("invertible system constrains the last coordinate"),
                _ => BigInt::zero(),
            };
        }
        let mut total = BigInt::zero();
        let mut x = lo_bounds[level].clone();
        if x > hi_bounds[level] {
            return total;
        }
        for (j, row) in m.iter().enumerate() {
            partials[j] += &row[level] * &x;
        }
        loop {
            total += rec(m, lo, hi, lo_bounds, hi_bounds, level + 1, partials);
            if x == hi_bounds[level] {
                break;
            }
            x += 1u8;
            for (j, row) in m.iter().enumerate() {
                partials[j] += &row[level];
            }
        }
        for (j, row) in m.iter().enumerate() {
            partials[j] -= &row[level] * &x;
        }
        total
    }

    let mut partials = vec![BigInt::zero(); k];
    rec(m, lo, hi, &lo_bounds, &hi_bounds, 0, &mut partials)
}

fn count_in_basis(
    basis: &[IntVector],
    constraints: &[IntVector],
    bound: &BigInt,
    region: Region,
) -> BigInt {
    let k = basis.len();
    assert_eq!(k, constraints.len());
    let m: Vec<Vec<BigInt>> = constraints
        .iter()
        .map(|c| basis.iter().map(|g| g.dot(c)).collect())
        .collect();
    let (lo, hi) = match region {
        Region::Closed => (BigInt::zero(), bound.clone()),
        Region::Open => (BigInt::from(1), bound - 1),
    };
    count_transformed(&m, &lo, &hi)
}

/// Exact number of lattice points of Z^n in the t-th dilate of the square
/// spanned by the pair (vertex at the origin).
pub fn count_square(pair: &TwinPair, t: u32, region: Region) -> Result<BigInt> {
    if t == 0 {
        return Err(Error::InvalidArgument("dilation factor must be >= 1".into()));
    }
    let basis = match pair.dim() {
        2 => vec![IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[0, 1])],
        _ => {
            let b = plane_lattice_basis(pair);
            if b.len() != 2 {
                return Err(Error::InvariantViolation(
                    "square plane lattice is not rank 2".into(),
                ));
            }
            let (g1, g2) = gauss_reduce(&b[0], &b[1]);
            vec![g1, g2]
        }
    };
    // membership in transformed coordinates agrees with the projection
    // identity norm_sq * p = (p.u) u + (p.v) v for plane points
    let bound = pair.norm_sq() * t;
    Ok(count_in_basis(
        &basis,
        &[pair.u().clone(), pair.v().clone()],
        &bound,
        region,
    ))
}

/// Exact count for a cube or hypercube frame. Rank-3 frames in Z^4 are
/// counted inside their saturated sublattice.
pub fn count_frame(frame: &OrthoFrame, t: u32, region: Region) -> Result<BigInt> {
    if t == 0 {
        return Err(Error::InvalidArgument("dilation factor must be >= 1".into()));
    }
    let (basis, bound) = match frame.kind() {
        FrameKind::CubeIn3 => (
            vec![
                IntVector::from_i64(&[1, 0, 0]),
                IntVector::from_i64(&[0, 1, 0]),
                IntVector::from_i64(&[0, 0, 1]),
            ],
            frame.row_norm_sq() * t,
        ),
        FrameKind::Hypercube => (
            vec![
                IntVector::from_i64(&[1, 0, 0, 0]),
                IntVector::from_i64(&[0, 1, 0, 0]),
                IntVector::from_i64(&[0, 0, 1, 0]),
                IntVector::from_i64(&[0, 0, 0, 1]),
            ],
            frame.row_norm_sq() * t,
        ),
        FrameKind::PartialCubeIn4 => {
            let complement = integer_kernel(&IntMatrix::from_vectors(frame.rows()));
            if complement.len() != 1 {
                return Err(Error::InvariantViolation(
                    "rank-3 frame must have a rank-1 complement".into(),
                ));
            }
            let basis = integer_kernel(&IntMatrix::from_vectors(&complement));
            if basis.len() != 3 {
                return Err(Error::InvariantViolation(
                    "saturated cube lattice is not rank 3".into(),
                ));
            }
            (basis, frame.row_norm_sq() * t)
        }
    };
    Ok(count_in_basis(&basis, frame.rows(), &bound, region))
}

pub fn count(shape: &Shape, t: u32, region: Region) -> Result<BigInt> {
    match shape {
        Shape::Square(p) => count_square(p, t, region),
        Shape::Frame(f) => count_frame(f, t, region),
    }
}

/// Number of integer pairs (x, y) with a x + b y and a y - b x both in
/// [1, t (a^2 + b^2) - 1], counted by a direct double loop.
pub fn corner_count_direct(a: &BigInt, b: &BigInt, t: u32) -> BigInt {
    let ell = a * a + b * b;
    let top = &ell * t - 1;
    let one = BigInt::from(1);
    if top < one {
        return BigInt::zero();
    }
    // x = (a s - b r) / ell, y = (b s + a r) / ell over s, r in [1, top]
    let corners_x = [
        a - b,
        a * &top - b,
        a - b * &top,
        a * &top - b * &top,
    ];
    let corners_y = [
        b + a,
        b * &top + a,
        b + a * &top,
        b * &top + a * &top,
    ];
    let xmin = ceil_div(corners_x.iter().min().unwrap(), &ell);
    let xmax = corners_x.iter().max().unwrap().div_floor(&ell);
    let ymin = ceil_div(corners_y.iter().min().unwrap(), &ell);
    let ymax = corners_y.iter().max().unwrap().div_floor(&ell);

    let mut count = BigInt::zero();
    let mut x = xmin;
    while x <= xmax {
        let mut y = ymin.clone();
        while y <= ymax {
            let s = a * &x + b * &y;
            let r = a * &y - b * &x;
            if s >= one && s <= top && r >= one && r <= top {
                count += 1u8;
            }
            y += 1u8;
        }
        x += 1u8;
    }
    count
}

/// Fits the Ehrhart polynomial from closed counts at t = 1..degree+1,
/// asserting integer coefficients, constant term one, and open-count
/// reciprocity at every sample point.
pub fn fit_ehrhart(shape: &Shape, degree: usize) -> Result<EhrhartPolynomial> {
    if !(2..=4).contains(&degree) {
        return Err(Error::InvalidArgument(format!(
            "degree must be 2..4, got {degree}"
        )));
    }
    if degree != shape.degree() {
        return Err(Error::InvalidArgument(format!(
            "shape has degree {}, requested {degree}",
            shape.degree()
        )));
    }
    let mut points = Vec::with_capacity(degree + 1);
    for t in 1..=(degree as u32 + 1) {
        points.push((BigInt::from(t), count(shape, t, Region::Closed)?));
    }
    let poly = fit_polynomial(&points, degree)?;
    if !poly.constant().is_one() {
        return Err(Error::CountMismatch {
            detail: format!(
                "fitted constant term {} is not 1; counts {:?}",
                poly.constant(),
                points.iter().map(|(t, c)| (t.to_string(), c.to_string())).collect::<Vec<_>>()
            ),
        });
    }
    for t in 1..=(degree as u32 + 1) {
        let open = count(shape, t, Region::Open)?;
        let expected = poly.interior(&BigInt::from(t));
        if open != expected {
            return Err(Error::CountMismatch {
                detail: format!(
                    "open count {open} at t = {t} violates reciprocity (expected {expected})"
                ),
            });
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::bi;
    use crate::cubes::validate_frame;
    use crate::squares::validate_twin;

    fn iv(c: &[i64]) -> IntVector {
        IntVector::from_i64(c)
    }

    fn pair(u: &[i64], v: &[i64]) -> TwinPair {
        validate_twin(&iv(u), &iv(v)).unwrap()
    }

    #[test]
    fn unit_square_counts() {
        let p = pair(&[1, 0], &[0, 1]);
        assert_eq!(count_square(&p, 3, Region::Closed).unwrap(), bi(16));
        assert_eq!(count_square(&p, 3, Region::Open).unwrap(), bi(4));
    }

    #[test]
    fn figure_square_counts() {
        let p = pair(&[5, 2], &[-2, 5]);
        assert_eq!(count_square(&p, 1, Region::Open).unwrap(), bi(28));
        assert_eq!(count_square(&p, 1, Region::Closed).unwrap(), bi(32));
    }

    #[test]
    fn example_square_count() {
        let p = pair(&[-4, 8, 5, 4], &[10, 2, 4, 1]);
        assert_eq!(count_square(&p, 1, Region::Closed).unwrap(), bi(14));
    }

    #[test]
    fn membership_tests_agree_pointwise() {
        // transformed-coordinate membership versus the ambient projection
        // identity, on a full transformed box
        let p = pair(&[3, -3, 0], &[1, 1, 4]);
        let basis = plane_lattice_basis(&p);
        let ell = p.norm_sq();
        let bound = ell.clone();
        let mut in_plane = 0;
        for x1 in -12i64..=12 {
            for x2 in -12i64..=12 {
                let pt = basis[0].scaled(&bi(x1)).add(&basis[1].scaled(&bi(x2)));
                let du = pt.dot(p.u());
                let dv = pt.dot(p.v());
                // projection identity: ell * pt = du * u + dv * v
                let rebuilt = p.u().scaled(&du).add(&p.v().scaled(&dv));
                assert_eq!(pt.scaled(&ell), rebuilt);
                let transformed =
                    du >= bi(0) && du <= bound && dv >= bi(0) && dv <= bound;
                let ambient = {
                    let inside = |d: &BigInt| d >= &bi(0) && d <= &bound;
                    inside(&du) && inside(&dv)
                };
                assert_eq!(transformed, ambient);
                if transformed {
                    in_plane += 1;
                }
            }
        }
        assert_eq!(in_plane, 11); // 6 + 4 + 1 at t = 1
    }

    #[test]
    fn identity_hypercube_count() {
        let f = validate_frame(&[
            iv(&[1, 0, 0, 0]),
            iv(&[0, 1, 0, 0]),
            iv(&[0, 0, 1, 0]),
            iv(&[0, 0, 0, 1]),
        ])
        .unwrap();
        assert_eq!(count_frame(&f, 2, Region::Closed).unwrap(), bi(81));
        assert_eq!(count_frame(&f, 2, Region::Open).unwrap(), bi(1));
    }

    #[test]
    fn sqrt3_hypercube_count() {
        let f = validate_frame(&[
            iv(&[1, 1, 1, 0]),
            iv(&[-1, 1, 0, 1]),
            iv(&[0, -1, 1, 1]),
            iv(&[-1, 0, 1, -1]),
        ])
        .unwrap();
        // 9 + 12 + 6 + 4 + 1
        assert_eq!(count_frame(&f, 1, Region::Closed).unwrap(), bi(32));
    }

    #[test]
    fn corner_counts() {
        assert_eq!(corner_count_direct(&bi(44), &bi(9), 1), bi(2016));
        assert_eq!(corner_count_direct(&bi(1), &bi(0), 1), bi(0));
        assert_eq!(corner_count_direct(&bi(5), &bi(2), 1), bi(28));
    }

    #[test]
    fn fit_examples() {
        let p = pair(&[-2, 3, -1, -11], &[-3, 6, -9, 3]);
        let fitted = fit_ehrhart(&Shape::Square(p), 2).unwrap();
        assert_eq!(fitted, EhrhartPolynomial::from_i64(&[1, 4, 3]));

        let f = validate_frame(&[iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])]).unwrap();
        let fitted = fit_ehrhart(&Shape::Frame(f), 3).unwrap();
        assert_eq!(fitted, EhrhartPolynomial::from_i64(&[1, 3, 3, 1]));
    }

    #[test]
    fn fit_large_witness_pair() {
        let p = pair(&[-836, 584, -1592, -697], &[-506, 1414, 203, 1328]);
        let fitted = fit_ehrhart(&Shape::Square(p), 2).unwrap();
        assert_eq!(fitted, EhrhartPolynomial::from_i64(&[1, 2, 2015]));
    }

    #[test]
    fn embedded_cube_count() {
        let f = validate_frame(&[iv(&[1, 1, 1, 0]), iv(&[-1, 1, 0, 1]), iv(&[0, -1, 1, 1])])
            .unwrap();
        // 3t^3 + 3t^2 + 3t + 1 at t = 1, 2
        assert_eq!(count_frame(&f, 1, Region::Closed).unwrap(), bi(10));
        assert_eq!(count_frame(&f, 2, Region::Closed).unwrap(), bi(43));
    }
}
