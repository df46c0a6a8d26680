//! Twin pairs (lattice squares) in dimensions 2 to 4 and their closed-form
//! Ehrhart polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{bi, exact_sqrt, gcd_many};
use crate::error::{Error, Result};
use crate::linalg::{gram_volume, integer_kernel, IntMatrix, IntVector};
use crate::poly::EhrhartPolynomial;
use crate::quaternion::{
    complementary_unit, is_minimal_pair_for_units, square_from_quaternion_pair, Quaternion,
    UnitSymbol,
};

/// Two orthogonal integer vectors of equal squared length, spanning a lattice
/// square with vertex at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPair {
    u: IntVector,
    v: IntVector,
    norm_sq: BigInt,
    d1: BigInt,
    d2: BigInt,
}

impl TwinPair {
    pub fn u(&self) -> &IntVector {
        &self.u
    }

    pub fn v(&self) -> &IntVector {
        &self.v
    }

    /// Common squared side length.
    pub fn norm_sq(&self) -> &BigInt {
        &self.norm_sq
    }

    pub fn d1(&self) -> &BigInt {
        &self.d1
    }

    pub fn d2(&self) -> &BigInt {
        &self.d2
    }

    pub fn dim(&self) -> usize {
        self.u.dim()
    }
}

/// Checks orthogonality, equal nonzero norms and dimension 2..4.
pub fn validate_twin(u: &IntVector, v: &IntVector) -> Result<TwinPair> {
    if u.dim() != v.dim() {
        return Err(Error::Dimension(format!(
            "dimension mismatch: {} vs {}",
            u.dim(),
            v.dim()
        )));
    }
    if !(2..=4).contains(&u.dim()) {
        return Err(Error::Dimension(format!(
            "twin pairs live in dimension 2..4, got {}",
            u.dim()
        )));
    }
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroInput("twin vector"));
    }
    let nu = u.norm_sq();
    let nv = v.norm_sq();
    if nu != nv {
        return Err(Error::UnequalNorms {
            left: nu,
            right: nv,
        });
    }
    let dot = u.dot(v);
    if !dot.is_zero() {
        return Err(Error::NotOrthogonal { dot });
    }
    Ok(TwinPair {
        u: u.clone(),
        v: v.clone(),
        norm_sq: nu,
        d1: u.coord_gcd(),
        d2: v.coord_gcd(),
    })
}

/// Degree-2 Ehrhart polynomial of a square, with interior counts through
/// reciprocity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareEhrhart {
    poly: EhrhartPolynomial,
}

impl SquareEhrhart {
    fn from_parts(leading: BigInt, linear: BigInt) -> Self {
        SquareEhrhart {
            poly: EhrhartPolynomial::new(vec![BigInt::one(), linear, leading]),
        }
    }

    pub fn poly(&self) -> &EhrhartPolynomial {
        &self.poly
    }

    pub fn leading(&self) -> BigInt {
        self.poly.coeff(2)
    }

    pub fn linear(&self) -> BigInt {
        self.poly.coeff(1)
    }

    pub fn interior(&self, t: &BigInt) -> BigInt {
        self.poly.interior(t)
    }
}

/// The planar square with vertices 0, (a,b), (a-b,a+b), (-b,a):
/// (a^2+b^2) t^2 + 2t + 1. Requires gcd(a, b) = 1.
pub fn ehrhart_square_2d(a: &BigInt, b: &BigInt) -> Result<SquareEhrhart> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroInput("square generator"));
    }
    let g = a.gcd(b);
    if !g.is_one() {
        return Err(Error::ReduciblePair { factor: g });
    }
    Ok(SquareEhrhart::from_parts(a * a + b * b, bi(2)))
}

/// Dimension-3 closed form: D t^2 + (d + d') t + 1 with D the gcd of the
/// cross-product coordinates, for irreducible pairs.
pub fn ehrhart_square_3d(pair: &TwinPair) -> Result<SquareEhrhart> {
    if pair.dim() != 3 {
        return Err(Error::Dimension(format!(
            "expected dimension 3, got {}",
            pair.dim()
        )));
    }
    let all: Vec<BigInt> = pair
        .u
        .0
        .iter()
        .chain(pair.v.0.iter())
        .cloned()
        .collect();
    let g = gcd_many(&all)?;
    if !g.is_one() {
        return Err(Error::ReduciblePair { factor: g });
    }
    let cross = pair.u.cross(&pair.v);
    let dd = cross.coord_gcd();
    Ok(SquareEhrhart::from_parts(dd, &pair.d1 + &pair.d2))
}

/// One code path for every dimension: leading coefficient is the square area
/// divided by the covolume of the saturated plane lattice, the linear
/// coefficient is D1 + D2.
pub fn ehrhart_square_generic(pair: &TwinPair) -> Result<SquareEhrhart> {
    let volume = plane_lattice_volume(pair)?;
    let (leading, rem) = pair.norm_sq.div_mod_floor(&volume);
    if !rem.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "square area {} is not a multiple of the covolume {volume}",
            pair.norm_sq
        )));
    }
    Ok(SquareEhrhart::from_parts(leading, &pair.d1 + &pair.d2))
}

/// Saturated basis of the plane lattice Z^n of the pair.
pub fn plane_lattice_basis(pair: &TwinPair) -> Vec<IntVector> {
    match pair.dim() {
        2 => vec![
            IntVector::from_i64(&[1, 0]),
            IntVector::from_i64(&[0, 1]),
        ],
        _ => {
            let complement =
                integer_kernel(&IntMatrix::from_vectors(&[pair.u.clone(), pair.v.clone()]));
            integer_kernel(&IntMatrix::from_vectors(&complement))
        }
    }
}

/// Covolume of the saturated plane lattice (1 in dimension 2).
pub fn plane_lattice_volume(pair: &TwinPair) -> Result<BigInt> {
    let basis = plane_lattice_basis(pair);
    if basis.len() != 2 {
        return Err(Error::InvariantViolation(format!(
            "plane lattice has rank {} instead of 2",
            basis.len()
        )));
    }
    gram_volume(&basis)
}

/// Square built from two quaternions with the stated conjugation units,
/// together with its polynomial gcd(N(q1), N(q2)) t^2 + (D1 + D2) t + 1.
/// Requires both quaternions odd and the pair minimal.
pub fn ehrhart_square_4d_from_quaternions(
    q1: &Quaternion,
    q2: &Quaternion,
    eps2: UnitSymbol,
    eps3: UnitSymbol,
) -> Result<(TwinPair, SquareEhrhart)> {
    if !q1.is_odd() || !q2.is_odd() {
        return Err(Error::InvalidArgument(
            "both quaternions must have odd norm".into(),
        ));
    }
    let eps1 = complementary_unit(eps2, eps3)?;
    if !is_minimal_pair_for_units(q1, q2, eps1)? {
        return Err(Error::InvalidArgument(format!(
            "quaternion pair is not minimal (a right factor a+b{} exists)",
            eps1.name()
        )));
    }
    let (u, v) = square_from_quaternion_pair(q1, q2, eps2, eps3)?;
    let pair = validate_twin(&u, &v)?;
    let formula =
        SquareEhrhart::from_parts(q1.norm().gcd(&q2.norm()), &pair.d1 + &pair.d2);
    let generic = ehrhart_square_generic(&pair)?;
    if formula != generic {
        return Err(Error::InvariantViolation(format!(
            "closed form {} disagrees with generic computation {}",
            formula.poly, generic.poly
        )));
    }
    Ok((pair, formula))
}

/// Completes u' (orthogonal to a normal n with |n|^2 a perfect square l^2)
/// to the square (l u', u' x n).
pub fn square_in_plane_3d(u_prime: &IntVector, normal: &IntVector) -> Result<TwinPair> {
    if u_prime.dim() != 3 || normal.dim() != 3 {
        return Err(Error::Dimension("both vectors must have dimension 3".into()));
    }
    if u_prime.is_zero() || normal.is_zero() {
        return Err(Error::ZeroInput("vector"));
    }
    let dot = normal.dot(u_prime);
    if !dot.is_zero() {
        return Err(Error::NotOrthogonal { dot });
    }
    let l = exact_sqrt(&normal.norm_sq()).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "|n|^2 = {} is not a perfect square",
            normal.norm_sq()
        ))
    })?;
    let u = u_prime.scaled(&l);
    let v = u_prime.cross(normal);
    validate_twin(&u, &v)
}

/// Twin pair of squared length (x^2+y^2+z^2+t^2)^2 from four parameters.
pub fn param_square_3d(
    x: &BigInt,
    y: &BigInt,
    z: &BigInt,
    t: &BigInt,
) -> Result<TwinPair> {
    if x.is_zero() && y.is_zero() && z.is_zero() && t.is_zero() {
        return Err(Error::ZeroInput("parameter tuple"));
    }
    let two = bi(2);
    let u = IntVector(vec![
        &two * (t * y + z * x),
        &two * (t * z - y * x),
        t * t - z * z - y * y + x * x,
    ]);
    let v = IntVector(vec![
        &two * (z * y - t * x),
        z * z - t * t + x * x - y * y,
        &two * (t * z + y * x),
    ]);
    validate_twin(&u, &v)
}

/// Normal vector of the plane of [`param_square_3d`], of length
/// x^2+y^2+z^2+t^2.
pub fn param_square_3d_normal(x: &BigInt, y: &BigInt, z: &BigInt, t: &BigInt) -> IntVector {
    let two = bi(2);
    IntVector(vec![
        x * x + y * y - z * z - t * t,
        &two * (x * t + y * z),
        &two * (y * t - x * z),
    ])
}

/// u = (a,b,c,d), v = (-b,a,d,-c): two planar squares glued along disjoint
/// coordinate pairs.
pub fn double_square_4d(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Result<TwinPair> {
    let u = IntVector(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
    if u.is_zero() {
        return Err(Error::ZeroInput("parameter tuple"));
    }
    let v = IntVector(vec![-b, a.clone(), d.clone(), -c]);
    validate_twin(&u, &v)
}

/// Rows of the pseudo-orthogonal matrix generated by (a, b, c, d); every two
/// rows are orthogonal of equal norm.
pub fn pseudo_orthogonal_rows(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> [IntVector; 4] {
    [
        IntVector(vec![a.clone(), b.clone(), c.clone(), d.clone()]),
        IntVector(vec![-b, a.clone(), d.clone(), -c]),
        IntVector(vec![-c, -d, a.clone(), b.clone()]),
        IntVector(vec![-d, c.clone(), -b, a.clone()]),
    ]
}

/// Witness square u = (k, k, 0, 0), v = (c, -c, a+b, a-b) built from a
/// primitive representation k^2 = a^2 + b^2 + c^2 with c odd and a, b even,
/// using 2k^2 = 2c^2 + (a+b)^2 + (a-b)^2. Placing the odd entry in the
/// paired slots makes ((k,k,0,0)/k + v)/2 a lattice point, so the plane
/// lattice has covolume k and the polynomial is 2k t^2 + (k+1) t + 1, whose
/// first dilate has exactly k interior points.
pub fn aps_witness_odd(k: &BigInt) -> Result<(TwinPair, SquareEhrhart)> {
    if !k.is_positive() || k.is_even() {
        return Err(Error::InvalidArgument(format!(
            "k must be odd positive, got {k}"
        )));
    }
    let reps = crate::sequences::primitive_quadruples(k)?;
    let Some((c, a, b)) = reps.first().cloned() else {
        return Err(Error::InvariantViolation(format!(
            "no primitive representation of {k}^2 found"
        )));
    };
    let u = IntVector(vec![k.clone(), k.clone(), BigInt::zero(), BigInt::zero()]);
    let v = IntVector(vec![c.clone(), -&c, &a + &b, &a - &b]);
    let pair = validate_twin(&u, &v)?;
    let formula = SquareEhrhart::from_parts(bi(2) * k, k + 1);
    let generic = ehrhart_square_generic(&pair)?;
    if formula != generic {
        return Err(Error::InvariantViolation(format!(
            "witness polynomial {} disagrees with generic computation {}",
            formula.poly, generic.poly
        )));
    }
    Ok((pair, formula))
}

/// Witness square for even values p - 1 with p prime >= 11: the minimal
/// square in the plane of two distinct primitive representations of p^2.
pub fn aps_witness_even(p: &BigInt) -> Result<(TwinPair, SquareEhrhart)> {
    if !crate::arith::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let reps = crate::sequences::primitive_quadruples(p)?;
    if reps.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "{p}^2 has fewer than two primitive representations"
        )));
    }
    let plane = crate::planes::plane_from_representations(p, &reps[0], &reps[1])?;
    let crate::planes::PlaneFromReps::Plane(plane) = plane else {
        return Err(Error::InvariantViolation(
            "distinct representations produced a degenerate plane".into(),
        ));
    };
    let found = crate::planes::minimal_square_in_plane(&plane, None)?;
    let poly = ehrhart_square_generic(&found.pair)?;
    Ok((found.pair, poly))
}
