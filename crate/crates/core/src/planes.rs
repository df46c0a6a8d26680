//! Rational 2-planes in Z^4 described by minor data: construction from a
//! twin pair, the converse construction from two equal-square-sum
//! representations, saturated sublattice bases, and minimal squares.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{bi, gcd_many};
use crate::error::{Error, Result};
use crate::forms::{enumerate_form_values, BinaryQuadraticForm};
use crate::linalg::{gauss_reduce, gram_volume, integer_kernel, IntMatrix, IntVector};
use crate::squares::{validate_twin, TwinPair};

/// Signed minors of a pair (u, v), indexed 12, 13, 14, 23, 24, 34 with the
/// alternating sign (-1)^(i-j).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deltas {
    pub d12: BigInt,
    pub d13: BigInt,
    pub d14: BigInt,
    pub d23: BigInt,
    pub d24: BigInt,
    pub d34: BigInt,
}

impl Deltas {
    pub fn as_array(&self) -> [&BigInt; 6] {
        [
            &self.d12, &self.d13, &self.d14, &self.d23, &self.d24, &self.d34,
        ]
    }

    pub fn sum_of_squares(&self) -> BigInt {
        self.as_array().iter().map(|d| *d * *d).sum()
    }

    /// d12 d34 - d13 d24 + d14 d23, identically zero for minors of a pair.
    pub fn pluecker(&self) -> BigInt {
        &self.d12 * &self.d34 - &self.d13 * &self.d24 + &self.d14 * &self.d23
    }

    fn div_exact(&self, g: &BigInt) -> Option<Deltas> {
        let d = |x: &BigInt| -> Option<BigInt> {
            let (q, r) = x.div_mod_floor(g);
            r.is_zero().then_some(q)
        };
        Some(Deltas {
            d12: d(&self.d12)?,
            d13: d(&self.d13)?,
            d14: d(&self.d14)?,
            d23: d(&self.d23)?,
            d24: d(&self.d24)?,
            d34: d(&self.d34)?,
        })
    }
}

/// Signed minors d_ij = (-1)^(i-j) (u_i v_j - u_j v_i).
pub fn minors_from_pair(u: &IntVector, v: &IntVector) -> Result<Deltas> {
    if u.dim() != 4 || v.dim() != 4 {
        return Err(Error::Dimension("minor data needs dimension 4".into()));
    }
    let m = |i: usize, j: usize| -> BigInt {
        let raw = &u.0[i] * &v.0[j] - &u.0[j] * &v.0[i];
        if (j - i) % 2 == 1 {
            -raw
        } else {
            raw
        }
    };
    Ok(Deltas {
        d12: m(0, 1),
        d13: m(0, 2),
        d14: m(0, 3),
        d23: m(1, 2),
        d24: m(1, 3),
        d34: m(2, 3),
    })
}

/// Full descriptor of the plane of a 4D lattice square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneData {
    /// Reduced minors with sum of squares k^2 (integral exactly when the
    /// alpha/beta triples share parities componentwise).
    pub deltas: Option<Deltas>,
    /// Odd positive scale: sum of squares of each of alphas and betas.
    pub k: BigInt,
    /// Power of two divided out of the six raw combinations.
    pub dyadic: BigInt,
    /// Residual odd gcd divided out after the dyadic part.
    pub residual_gcd: BigInt,
    pub alphas: [BigInt; 3],
    pub betas: [BigInt; 3],
    /// Defining normals; the plane is {w1, w2}^perp.
    pub w1: IntVector,
    pub w2: IntVector,
    /// Coordinate permutation applied to the input pair so that d23 != 0:
    /// permuted[i] = original[perm[i]].
    pub permutation: [usize; 4],
    /// Componentwise parity agreement of alphas and betas.
    pub same_parity: bool,
    /// True when the residual gcd is 1, the hypothesis under which the
    /// fundamental volume equals k.
    pub gcd_hypothesis: bool,
}

impl PlaneData {
    pub fn defining_matrix(&self) -> IntMatrix {
        IntMatrix::from_vectors(&[self.w1.clone(), self.w2.clone()])
    }
}

fn apply_perm(v: &IntVector, perm: &[usize; 4]) -> IntVector {
    IntVector(perm.iter().map(|&i| v.0[i].clone()).collect())
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    let mut items = [0usize, 1, 2, 3];
    fn rec(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
        if k == 4 {
            out.push(*items);
            return;
        }
        for i in k..4 {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out.sort();
    out
}

fn plane_data_from_deltas(
    deltas_raw: &Deltas,
    permutation: [usize; 4],
) -> Result<PlaneData> {
    // the six combinations whose halves-of-sums recover the minors
    let s = [
        &deltas_raw.d12 + &deltas_raw.d34,
        &deltas_raw.d12 - &deltas_raw.d34,
        -&deltas_raw.d13 + &deltas_raw.d24,
        -&deltas_raw.d13 - &deltas_raw.d24,
        &deltas_raw.d14 + &deltas_raw.d23,
        &deltas_raw.d14 - &deltas_raw.d23,
    ];
    // greatest power of two dividing all six
    let mut dyadic = BigInt::one();
    loop {
        let next: BigInt = &dyadic * 2;
        if s.iter().all(|x: &BigInt| (x % &next).is_zero()) {
            dyadic = next;
        } else {
            break;
        }
    }
    let reduced: Vec<BigInt> = s.iter().map(|x| x / &dyadic).collect();
    let residual_gcd = gcd_many(&reduced)?;
    if residual_gcd.is_zero() {
        return Err(Error::DegeneratePair);
    }
    let vals: Vec<BigInt> = reduced.iter().map(|x| x / &residual_gcd).collect();
    let alphas = [vals[0].clone(), vals[2].clone(), vals[4].clone()];
    let betas = [vals[1].clone(), vals[3].clone(), vals[5].clone()];

    let ka: BigInt = alphas.iter().map(|a| a * a).sum();
    let kb: BigInt = betas.iter().map(|b| b * b).sum();
    if ka != kb {
        return Err(Error::InvariantViolation(format!(
            "alpha and beta square sums differ: {ka} vs {kb}"
        )));
    }
    let k = crate::arith::exact_sqrt(&ka).ok_or_else(|| {
        Error::InvariantViolation(format!("square sum {ka} is not a perfect square"))
    })?;
    let same_parity = alphas
        .iter()
        .zip(&betas)
        .all(|(a, b)| (a - b).is_even());
    let scale = &dyadic * &residual_gcd;
    let deltas = deltas_raw.div_exact(&scale);

    let w1 = IntVector(vec![
        BigInt::zero(),
        &alphas[0] - &betas[0],
        &alphas[1] - &betas[1],
        &alphas[2] - &betas[2],
    ]);
    let w2 = IntVector(vec![
        &alphas[2] - &betas[2],
        -&alphas[1] - &betas[1],
        &alphas[0] + &betas[0],
        BigInt::zero(),
    ]);
    Ok(PlaneData {
        deltas,
        k,
        dyadic,
        residual_gcd: residual_gcd.clone(),
        alphas,
        betas,
        w1,
        w2,
        permutation,
        same_parity,
        gcd_hypothesis: residual_gcd.is_one(),
    })
}

/// Plane descriptor of a twin pair. When the (2,3) minor vanishes the
/// coordinates of both vectors are permuted (first permutation in
/// lexicographic order that works) and the permutation is recorded.
pub fn plane_data_from_pair(pair: &TwinPair) -> Result<PlaneData> {
    if pair.dim() != 4 {
        return Err(Error::Dimension("plane data needs a 4D pair".into()));
    }
    let mut chosen: Option<([usize; 4], Deltas)> = None;
    for perm in permutations4() {
        let pu = apply_perm(pair.u(), &perm);
        let pv = apply_perm(pair.v(), &perm);
        let d = minors_from_pair(&pu, &pv)?;
        if !d.d23.is_zero() {
            chosen = Some((perm, d));
            break;
        }
    }
    let Some((perm, deltas_raw)) = chosen else {
        return Err(Error::DegeneratePair);
    };
    debug_assert!(deltas_raw.pluecker().is_zero());
    debug_assert_eq!(
        deltas_raw.sum_of_squares(),
        pair.norm_sq() * pair.norm_sq()
    );
    let data = plane_data_from_deltas(&deltas_raw, perm)?;
    let pu = apply_perm(pair.u(), &perm);
    let pv = apply_perm(pair.v(), &perm);
    for w in [&data.w1, &data.w2] {
        if !pu.dot(w).is_zero() || !pv.dot(w).is_zero() {
            return Err(Error::InvariantViolation(
                "pair is not orthogonal to its plane normals".into(),
            ));
        }
    }
    Ok(data)
}

/// Result of the converse construction: either a genuine 4D plane or the
/// degenerate case of two identical representations, which describes a
/// plane meeting a 3D coordinate hyperplane pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneFromReps {
    Plane(PlaneData),
    ThreeDimensional {
        k: BigInt,
        representation: (BigInt, BigInt, BigInt),
    },
}

fn normalize_representation(
    k: &BigInt,
    rep: &(BigInt, BigInt, BigInt),
) -> Result<(BigInt, BigInt, BigInt)> {
    let a = rep.0.abs();
    let b = rep.1.abs();
    let c = rep.2.abs();
    if &(&a * &a + &b * &b + &c * &c) != &(k * k) {
        return Err(Error::InvalidArgument(format!(
            "({}, {}, {}) does not represent {k}^2",
            rep.0, rep.1, rep.2
        )));
    }
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for x in [a, b, c] {
        if x.is_odd() {
            odd.push(x);
        } else {
            even.push(x);
        }
    }
    if odd.len() != 1 {
        return Err(Error::InvalidArgument(
            "representation must have exactly one odd entry".into(),
        ));
    }
    even.sort();
    // (odd, larger even, smaller even)
    Ok((odd.pop().unwrap(), even.pop().unwrap(), even.pop().unwrap()))
}

/// Converse construction: the plane cut out by
///   0 u + d34 v + d24 w + d23 t = 0 and d23 u + d13 v + d12 w + 0 t = 0
/// built from two representations k^2 = a^2+b^2+c^2 = a'^2+b'^2+c'^2 with
/// a, a' odd and c' > c. Identical representations yield the degenerate
/// variant.
pub fn plane_from_representations(
    k: &BigInt,
    rep1: &(BigInt, BigInt, BigInt),
    rep2: &(BigInt, BigInt, BigInt),
) -> Result<PlaneFromReps> {
    if !k.is_positive() || k.is_even() {
        return Err(Error::InvalidArgument(format!(
            "k must be odd and positive, got {k}"
        )));
    }
    let n1 = normalize_representation(k, rep1)?;
    let n2 = normalize_representation(k, rep2)?;
    let g = gcd_many(&[
        n1.0.clone(),
        n1.1.clone(),
        n1.2.clone(),
        n2.0.clone(),
        n2.1.clone(),
        n2.2.clone(),
    ])?;
    if !g.is_one() {
        return Err(Error::InvalidArgument(format!(
            "the six entries share the factor {g}"
        )));
    }
    // first: (a, b, c) with c the smaller even entry; second: (a', b', c')
    // with c' the larger even entry; swap roles when that fails
    let assignments = [
        ((n1.0.clone(), n1.1.clone(), n1.2.clone()), (n2.0.clone(), n2.2.clone(), n2.1.clone())),
        ((n2.0.clone(), n2.1.clone(), n2.2.clone()), (n1.0.clone(), n1.2.clone(), n1.1.clone())),
    ];
    let mut picked = None;
    for ((a, b, c), (ap, bp, cp)) in assignments {
        if cp > c {
            picked = Some(((a, b, c), (ap, bp, cp)));
            break;
        }
    }
    let Some(((a, b, c), (ap, bp, cp))) = picked else {
        return Ok(PlaneFromReps::ThreeDimensional {
            k: k.clone(),
            representation: n1,
        });
    };
    let two = bi(2);
    let deltas = Deltas {
        d12: (&ap - &a) / &two,
        d34: (&ap + &a) / &two,
        d13: -(&bp - &b) / &two,
        d24: (&bp + &b) / &two,
        d14: (&cp + &c) / &two,
        d23: (&cp - &c) / &two,
    };
    debug_assert!(deltas.pluecker().is_zero());
    debug_assert_eq!(deltas.sum_of_squares(), k * k);
    // alphas = (a', b', c'), betas = (-a, -b, c) reproduce these minors
    let alphas = [ap.clone(), bp.clone(), cp.clone()];
    let betas = [-&a, -&b, c.clone()];
    let w1 = IntVector(vec![
        BigInt::zero(),
        &alphas[0] - &betas[0],
        &alphas[1] - &betas[1],
        &alphas[2] - &betas[2],
    ]);
    let w2 = IntVector(vec![
        &alphas[2] - &betas[2],
        -&alphas[1] - &betas[1],
        &alphas[0] + &betas[0],
        BigInt::zero(),
    ]);
    Ok(PlaneFromReps::Plane(PlaneData {
        deltas: Some(deltas),
        k: k.clone(),
        dyadic: BigInt::one(),
        residual_gcd: BigInt::one(),
        alphas,
        betas,
        w1,
        w2,
        permutation: [0, 1, 2, 3],
        same_parity: true,
        gcd_hypothesis: true,
    }))
}

/// Saturated basis plus covolume data of the plane lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublatticeBasis {
    pub basis: Vec<IntVector>,
    pub gram: IntMatrix,
    pub fundamental_volume: BigInt,
}

/// Saturated rank-2 basis of Z^4 intersected with the plane.
pub fn sublattice_basis(plane: &PlaneData) -> Result<SublatticeBasis> {
    let kernel = integer_kernel(&plane.defining_matrix());
    if kernel.len() != 2 {
        return Err(Error::DegeneratePair);
    }
    let gram = crate::linalg::gram_matrix(&kernel);
    let fundamental_volume = gram_volume(&kernel)?;
    Ok(SublatticeBasis {
        basis: kernel,
        gram,
        fundamental_volume,
    })
}

/// A minimal-norm square found inside a plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSquare {
    pub pair: TwinPair,
    /// The square's norm divided by the plane's k.
    pub norm_multiple: BigInt,
    /// Whether the in-plane rotation formulas produced the partner with
    /// integer parameters (None when the plane carries no reduced minors).
    pub rotation_integral: Option<bool>,
}

/// Finds a twin pair of minimal common norm inside the plane by enumerating
/// lattice vectors norm class by norm class (all norms are multiples of k)
/// and testing pairs for orthogonality. The default budget caps vector norms
/// at 64 k^2.
pub fn minimal_square_in_plane(
    plane: &PlaneData,
    budget: Option<BigInt>,
) -> Result<MinimalSquare> {
    let sub = sublattice_basis(plane)?;
    let (g1, g2) = gauss_reduce(&sub.basis[0], &sub.basis[1]);
    let form = BinaryQuadraticForm::new(
        g1.norm_sq(),
        bi(2) * g1.dot(&g2),
        g2.norm_sq(),
    );
    let bound = budget.unwrap_or_else(|| bi(64) * &plane.k * &plane.k);
    let mut target = plane.k.clone();
    let mut multiple = BigInt::one();
    while target <= bound {
        let sols = enumerate_form_values(&form, &target)?;
        let points: Vec<IntVector> = sols
            .iter()
            .map(|(s, t)| g1.scaled(s).add(&g2.scaled(t)))
            .collect();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i].dot(&points[j]).is_zero() {
                    let pair = validate_twin(&points[i], &points[j])?;
                    let rotation_integral = plane
                        .deltas
                        .as_ref()
                        .map(|d| rotation_partner_is_integral(d, &plane.k, &points[i]));
                    return Ok(MinimalSquare {
                        pair,
                        norm_multiple: multiple,
                        rotation_integral,
                    });
                }
            }
        }
        target += &plane.k;
        multiple += 1u8;
    }
    Err(Error::NotFoundWithinBound { bound })
}

/// In the (v, w) = (coordinate 2, coordinate 3) parametrization of the
/// plane, checks whether the rotation sending one square side to its partner
/// has integer parameters.
fn rotation_partner_is_integral(d: &Deltas, k: &BigInt, p: &IntVector) -> bool {
    if d.d23.is_zero() {
        return false;
    }
    let v = &p.0[1];
    let w = &p.0[2];
    let v0 = -(&d.d34 * &d.d24 + &d.d13 * &d.d12);
    let w0 = &d.d13 * &d.d13 + &d.d23 * &d.d23 + &d.d34 * &d.d34;
    let kd = k * &d.d23;
    // w' = (v0 w - w0 v) / (k d23)
    let wn = &v0 * w - &w0 * v;
    let (wp, wr) = wn.div_mod_floor(&kd);
    if !wr.is_zero() {
        return false;
    }
    // v' = (v0^2 w - v0 w0 v + k^2 d23^2 w) / (2 k d23 w0)
    let vn = &v0 * &v0 * w - &v0 * &w0 * v + k * k * &d.d23 * &d.d23 * w;
    let (vp, vr) = vn.div_mod_floor(&(bi(2) * &kd * &w0));
    if !vr.is_zero() {
        return false;
    }
    // the partner must be an integral plane point: coordinates 1 and 4 are
    // determined by the plane equations
    let u_num = -(&d.d13 * &vp + &d.d12 * &wp);
    let t_num = -(&d.d34 * &vp + &d.d24 * &wp);
    (&u_num % &d.d23).is_zero() && (&t_num % &d.d23).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_hnf;
    use crate::poly::EhrhartPolynomial;
    use crate::squares::ehrhart_square_generic;

    fn iv(c: &[i64]) -> IntVector {
        IntVector::from_i64(c)
    }

    fn rep(a: i64, b: i64, c: i64) -> (BigInt, BigInt, BigInt) {
        (bi(a), bi(b), bi(c))
    }

    #[test]
    fn minors_examples() {
        let d = minors_from_pair(&iv(&[1, 0, 0, 0]), &iv(&[0, 1, 0, 0])).unwrap();
        assert_eq!(d.d12.abs(), bi(1));
        assert!(d.d13.is_zero() && d.d14.is_zero());
        assert!(d.d23.is_zero() && d.d24.is_zero() && d.d34.is_zero());

        let d = minors_from_pair(&iv(&[-4, 8, 5, 4]), &iv(&[10, 2, 4, 1])).unwrap();
        for m in d.as_array() {
            assert!((m % 11u8).is_zero(), "minor {m} not divisible by 11");
        }
        assert!(d.pluecker().is_zero());

        // the relation is an identity even for non-orthogonal vectors
        let d = minors_from_pair(&iv(&[3, 1, -2, 7]), &iv(&[0, 4, 5, -1])).unwrap();
        assert!(d.pluecker().is_zero());
    }

    #[test]
    fn plane_from_example_pair() {
        let pair = validate_twin(&iv(&[-4, 8, 5, 4]), &iv(&[10, 2, 4, 1])).unwrap();
        let data = plane_data_from_pair(&pair).unwrap();
        assert_eq!(data.k, bi(11));
        assert_eq!(data.alphas, [bi(9), bi(6), bi(2)]);
        assert_eq!(data.betas, [bi(7), bi(6), bi(6)]);
        assert_eq!(data.w1, iv(&[0, 2, 0, -4]));
        assert_eq!(data.w2, iv(&[-4, -12, 16, 0]));
        assert_eq!(data.permutation, [0, 1, 2, 3]);
        assert_eq!(data.residual_gcd, bi(11));
        assert!(!data.gcd_hypothesis);
        assert!(data.same_parity);
    }

    #[test]
    fn plane_from_coordinate_pair() {
        let pair = validate_twin(&iv(&[1, 0, 0, 0]), &iv(&[0, 1, 0, 0])).unwrap();
        let data = plane_data_from_pair(&pair).unwrap();
        assert_eq!(data.k, bi(1));
        // a permutation was required: the original d23 vanishes
        assert_ne!(data.permutation, [0, 1, 2, 3]);
    }

    #[test]
    fn plane_from_embedded_3d_pair() {
        let pair = validate_twin(&iv(&[3, -3, 0, 0]), &iv(&[1, 1, 4, 0])).unwrap();
        let data = plane_data_from_pair(&pair).unwrap();
        // raw combinations share the factor 6 = 2 * 3, leaving k = 18 / 6
        assert_eq!(data.k, bi(3));
        assert_eq!(data.dyadic, bi(2));
        assert_eq!(data.residual_gcd, bi(3));
        assert!(data.same_parity);
        let pu = apply_perm(&iv(&[3, -3, 0, 0]), &data.permutation);
        assert!(pu.dot(&data.w1).is_zero());
        assert!(pu.dot(&data.w2).is_zero());
    }

    #[test]
    fn converse_construction_example_plane() {
        let p = plane_from_representations(&bi(11), &rep(9, 2, 6), &rep(7, 6, 6)).unwrap();
        let PlaneFromReps::Plane(data) = p else {
            panic!("expected a plane")
        };
        assert_eq!(data.k, bi(11));
        let sub = sublattice_basis(&data).unwrap();
        assert_eq!(sub.fundamental_volume, bi(11));
    }

    #[test]
    fn converse_construction_second_example() {
        let p =
            plane_from_representations(&bi(45), &rep(33, 30, 6), &rep(35, 20, 20)).unwrap();
        let PlaneFromReps::Plane(data) = p else {
            panic!("expected a plane")
        };
        let d = data.deltas.as_ref().unwrap();
        assert_eq!(
            (d.d12.clone(), d.d34.clone(), d.d13.clone()),
            (bi(1), bi(34), bi(5))
        );
        assert_eq!(
            (d.d24.clone(), d.d14.clone(), d.d23.clone()),
            (bi(25), bi(13), bi(7))
        );
        let sub = sublattice_basis(&data).unwrap();
        assert_eq!(
            sub.basis,
            basis_hnf(&[iv(&[1, 0, -7, 25]), iv(&[0, 1, -5, 13])])
        );
        assert_eq!(sub.fundamental_volume, bi(45));
    }

    #[test]
    fn converse_construction_degenerate() {
        let p = plane_from_representations(&bi(1), &rep(1, 0, 0), &rep(1, 0, 0)).unwrap();
        assert!(matches!(p, PlaneFromReps::ThreeDimensional { .. }));
    }

    #[test]
    fn converse_rejects_bad_input() {
        assert!(plane_from_representations(&bi(10), &rep(9, 2, 6), &rep(7, 6, 6)).is_err());
        assert!(plane_from_representations(&bi(11), &rep(9, 2, 7), &rep(7, 6, 6)).is_err());
        // shared factor 3 across all six entries
        assert!(plane_from_representations(&bi(9), &rep(3, 6, 6), &rep(9, 0, 0)).is_err());
    }

    #[test]
    fn minimal_square_example_plane() {
        let PlaneFromReps::Plane(plane) =
            plane_from_representations(&bi(11), &rep(9, 2, 6), &rep(7, 6, 6)).unwrap()
        else {
            panic!()
        };
        let found = minimal_square_in_plane(&plane, None).unwrap();
        assert_eq!(found.pair.norm_sq(), &bi(121));
        let e = ehrhart_square_generic(&found.pair).unwrap();
        assert_eq!(e.poly(), &EhrhartPolynomial::from_i64(&[1, 2, 11]));
    }

    #[test]
    fn minimal_square_second_plane() {
        let PlaneFromReps::Plane(plane) =
            plane_from_representations(&bi(45), &rep(33, 30, 6), &rep(35, 20, 20)).unwrap()
        else {
            panic!()
        };
        let found = minimal_square_in_plane(&plane, None).unwrap();
        assert_eq!(found.pair.norm_sq(), &bi(135));
        assert_eq!(found.norm_multiple, bi(3));
        let e = ehrhart_square_generic(&found.pair).unwrap();
        assert_eq!(e.poly(), &EhrhartPolynomial::from_i64(&[1, 4, 3]));
        // paper pair up to in-plane unit rotations: {(-2,3,-1,-11), (-3,6,-9,3)}
        let mut got = [
            found.pair.u().sign_normalized(),
            found.pair.v().sign_normalized(),
        ];
        got.sort();
        let mut want = [
            iv(&[-2, 3, -1, -11]).sign_normalized(),
            iv(&[-3, 6, -9, 3]).sign_normalized(),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn minimal_square_coordinate_plane() {
        let pair = validate_twin(&iv(&[1, 0, 0, 0]), &iv(&[0, 1, 0, 0])).unwrap();
        let plane = plane_data_from_pair(&pair).unwrap();
        let found = minimal_square_in_plane(&plane, None).unwrap();
        assert_eq!(found.pair.norm_sq(), &bi(1));
    }

    #[test]
    fn minimal_square_budget_error() {
        let PlaneFromReps::Plane(plane) =
            plane_from_representations(&bi(11), &rep(9, 2, 6), &rep(7, 6, 6)).unwrap()
        else {
            panic!()
        };
        let err = minimal_square_in_plane(&plane, Some(bi(22))).unwrap_err();
        assert!(matches!(err, Error::NotFoundWithinBound { .. }));
    }
}
