//! Generators for the almost-perfect-squares tables and the primitive
//! quadruple tables, plus the witness search for polynomials k t^2 + 2t + 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{bi, exact_sqrt, gcd_many, is_sum_two_coprime_squares};
use crate::error::{Error, Result};
use crate::linalg::IntVector;
use crate::planes::{minimal_square_in_plane, plane_from_representations, PlaneFromReps};
use crate::poly::EhrhartPolynomial;
use crate::quaternion::{Quaternion, UnitSymbol};
use crate::squares::{
    ehrhart_square_generic, plane_lattice_volume, validate_twin, TwinPair,
};

/// Interior counts attainable by dilated lattice squares, with witnesses.
#[derive(Debug, Clone)]
pub struct ApsTable {
    pub dim: usize,
    pub term_bound: BigInt,
    /// Coordinate bound of the enumeration (None for the complete dim-2 run).
    pub coord_bound: Option<i64>,
    /// True when every term up to the bound is present; witnessed tables in
    /// dimensions 3 and 4 are certified subsets only.
    pub complete: bool,
    pub terms: Vec<BigInt>,
    pub witnesses: BTreeMap<BigInt, (TwinPair, u32)>,
}

fn record_witness(
    witnesses: &mut BTreeMap<BigInt, (TwinPair, u32)>,
    terms: &mut Vec<BigInt>,
    term: BigInt,
    pair: &TwinPair,
    t: u32,
) {
    if !witnesses.contains_key(&term) {
        witnesses.insert(term.clone(), (pair.clone(), t));
        terms.push(term);
    }
}

fn decompose_two_coprime_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut a = BigInt::zero();
    loop {
        let aa = &a * &a;
        if &aa * 2u8 > *n {
            return None;
        }
        let rest = n - aa;
        if let Some(b) = exact_sqrt(&rest) {
            if a.gcd(&b).is_one() {
                return Some((b, a));
            }
        }
        a += 1u8;
    }
}

/// All interior counts l t^2 - 2t + 1 <= bound over l a sum of two coprime
/// squares, complete within the bound.
pub fn aps2_terms(bound: &BigInt) -> ApsTable {
    let mut witnesses = BTreeMap::new();
    let mut terms = Vec::new();
    let mut l = BigInt::one();
    let top = bound + 2u8;
    while l <= top {
        if is_sum_two_coprime_squares(&l) {
            let (a, b) = decompose_two_coprime_squares(&l).expect("witness exists");
            let u = IntVector(vec![a.clone(), b.clone()]);
            let v = IntVector(vec![-&b, a.clone()]);
            let pair = validate_twin(&u, &v).expect("planar generator pair");
            let mut t = 1u32;
            loop {
                let tt = bi(t as i64);
                let term = &l * &tt * &tt - bi(2) * &tt + 1;
                if &term > bound {
                    break;
                }
                record_witness(&mut witnesses, &mut terms, term, &pair, t);
                t += 1;
            }
        }
        l += 1u8;
    }
    terms.sort();
    terms.dedup();
    ApsTable {
        dim: 2,
        term_bound: bound.clone(),
        coord_bound: None,
        complete: true,
        terms,
        witnesses,
    }
}

fn vectors_by_norm(dim: usize, coord_bound: i64) -> BTreeMap<i64, Vec<Vec<i64>>> {
    let mut classes: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
    let mut coords = vec![0i64; dim];
    fn rec(
        coords: &mut Vec<i64>,
        level: usize,
        bound: i64,
        classes: &mut BTreeMap<i64, Vec<Vec<i64>>>,
    ) {
        if level == coords.len() {
            // sign-normalize: first nonzero coordinate positive
            match coords.iter().find(|c| **c != 0) {
                Some(c) if *c > 0 => {
                    let norm: i64 = coords.iter().map(|c| c * c).sum();
                    classes.entry(norm).or_default().push(coords.clone());
                }
                _ => {}
            }
            return;
        }
        for v in -bound..=bound {
            coords[level] = v;
            rec(coords, level + 1, bound, classes);
        }
        coords[level] = 0;
    }
    rec(&mut coords, 0, coord_bound, &mut classes);
    classes
}

/// Enumerates twin pairs with coordinates in [-coord_bound, coord_bound],
/// recording every interior count up to term_bound with a witness. The
/// result is a certified subset of the full sequence.
pub fn aps_witnessed(dim: usize, coord_bound: i64, term_bound: &BigInt) -> Result<ApsTable> {
    if !(3..=4).contains(&dim) {
        return Err(Error::Dimension(format!(
            "witnessed enumeration covers dimensions 3 and 4, got {dim}"
        )));
    }
    if coord_bound < 1 {
        return Err(Error::InvalidArgument("coordinate bound must be >= 1".into()));
    }
    let mut witnesses = BTreeMap::new();
    let mut terms = Vec::new();
    let classes = vectors_by_norm(dim, coord_bound);
    for vectors in classes.values() {
        for i in 0..vectors.len() {
            for j in (i + 1)..vectors.len() {
                let dot: i64 = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .map(|(a, b)| a * b)
                    .sum();
                if dot != 0 {
                    continue;
                }
                let u = IntVector(vectors[i].iter().map(|&c| bi(c)).collect());
                let v = IntVector(vectors[j].iter().map(|&c| bi(c)).collect());
                let pair = validate_twin(&u, &v)?;
                let poly = ehrhart_square_generic(&pair)?;
                let mut t = 1u32;
                loop {
                    let term = poly.interior(&bi(t as i64));
                    if &term > term_bound {
                        // interior counts grow once t exceeds the vertex of
                        // the parabola; keep scanning until then
                        let turning = poly.linear() >= bi(2) * poly.leading() * bi(t as i64);
                        if !turning {
                            break;
                        }
                    } else {
                        record_witness(&mut witnesses, &mut terms, term, &pair, t);
                    }
                    t += 1;
                }
            }
        }
    }
    terms.sort();
    terms.dedup();
    Ok(ApsTable {
        dim,
        term_bound: term_bound.clone(),
        coord_bound: Some(coord_bound),
        complete: false,
        terms,
        witnesses,
    })
}

/// Primitive solutions of a^2 + b^2 + c^2 = k^2 in canonical form
/// (odd entry first, then the even entries descending), sorted ascending.
pub fn primitive_quadruples(k: &BigInt) -> Result<Vec<(BigInt, BigInt, BigInt)>> {
    if !k.is_positive() || k.is_even() {
        return Err(Error::InvalidArgument(format!(
            "quadruple tables need odd positive k, got {k}"
        )));
    }
    let kk = k * k;
    let mut out = Vec::new();
    let mut a = BigInt::one();
    while &(&a * &a) <= &kk {
        let rest = &kk - &a * &a;
        let mut e_hi = rest.sqrt();
        if e_hi.is_odd() {
            e_hi -= 1u8;
        }
        while &(&e_hi * &e_hi) * 2u8 >= rest && !e_hi.is_negative() {
            let rest2 = &rest - &e_hi * &e_hi;
            if let Some(e_lo) = exact_sqrt(&rest2) {
                if e_lo.is_even()
                    && gcd_many(&[a.clone(), e_hi.clone(), e_lo.clone()])?.is_one()
                {
                    out.push((a.clone(), e_hi.clone(), e_lo));
                }
            }
            e_hi -= 2u8;
        }
        a += 2u8;
    }
    out.sort();
    Ok(out)
}

/// Primitive quadruple representations for every odd l up to the given odd
/// maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrupleTable {
    pub max: BigInt,
    pub rows: BTreeMap<BigInt, Vec<(BigInt, BigInt, BigInt)>>,
}

pub fn quadruple_table(lmax: &BigInt) -> Result<QuadrupleTable> {
    if !lmax.is_positive() || lmax.is_even() {
        return Err(Error::InvalidArgument(format!(
            "table maximum must be odd positive, got {lmax}"
        )));
    }
    let mut rows = BTreeMap::new();
    let mut l = BigInt::one();
    while l <= *lmax {
        rows.insert(l.clone(), primitive_quadruples(&l)?);
        l += 2u8;
    }
    Ok(QuadrupleTable {
        max: lmax.clone(),
        rows,
    })
}

/// Outcome of the witness search for the polynomial k t^2 + 2t + 1.
#[derive(Debug, Clone)]
pub enum KSearchOutcome {
    Found {
        pair: TwinPair,
        poly: EhrhartPolynomial,
        attempts: u64,
    },
    Exhausted {
        attempts: u64,
        budget: u64,
    },
}

/// Searches for a square whose polynomial is exactly k t^2 + 2t + 1: first
/// through planes of representation pairs of k^2, then through minimal
/// quaternion pairs of norm k. Every candidate construction counts against
/// the budget.
pub fn search_k_square(k: &BigInt, budget: u64) -> Result<KSearchOutcome> {
    if !k.is_positive() || k.is_even() || k < &bi(9) {
        return Err(Error::InvalidArgument(format!(
            "search targets odd k >= 9, got {k}"
        )));
    }
    let target = EhrhartPolynomial::new(vec![BigInt::one(), bi(2), k.clone()]);
    let mut attempts = 0u64;

    let reps = primitive_quadruples(k)?;
    'rep_pairs: for i in 0..reps.len() {
        for j in (i + 1)..reps.len() {
            if attempts >= budget {
                break 'rep_pairs;
            }
            attempts += 1;
            let PlaneFromReps::Plane(plane) =
                plane_from_representations(k, &reps[i], &reps[j])?
            else {
                continue;
            };
            let found = match minimal_square_in_plane(&plane, None) {
                Ok(found) => found,
                Err(Error::NotFoundWithinBound { .. }) => continue,
                Err(e) => return Err(e),
            };
            let poly = ehrhart_square_generic(&found.pair)?;
            if poly.poly() == &target {
                return Ok(KSearchOutcome::Found {
                    pair: found.pair,
                    poly: target,
                    attempts,
                });
            }
        }
    }

    // quaternion route: odd primitive quaternions of norm k, checked as
    // minimal pairs under each choice of conjugation units
    let mut quats = Vec::new();
    let r = k.sqrt();
    let mut x = BigInt::zero();
    while &x <= &r {
        let rx = k - &x * &x;
        let mut y = -rx.sqrt();
        while &(&y * &y) <= &rx {
            let rxy = &rx - &y * &y;
            let mut z = -rxy.sqrt();
            while &(&z * &z) <= &rxy {
                let tt = &rxy - &z * &z;
                if let Some(t_abs) = exact_sqrt(&tt) {
                    for t in [t_abs.clone(), -&t_abs] {
                        let q = Quaternion::new(x.clone(), y.clone(), z.clone(), t.clone());
                        if q.content().is_one() {
                            quats.push(q);
                        }
                        if t_abs.is_zero() {
                            break;
                        }
                    }
                }
                z += 1u8;
            }
            y += 1u8;
        }
        x += 1u8;
    }
    quats.sort_by_key(|q| (q.x.clone(), q.y.clone(), q.z.clone(), q.t.clone()));
    quats.dedup();
    let unit_choices = [
        (UnitSymbol::J, UnitSymbol::K),
        (UnitSymbol::I, UnitSymbol::K),
        (UnitSymbol::I, UnitSymbol::J),
    ];
    'quat_pairs: for i in 0..quats.len() {
        for j in i..quats.len() {
            if attempts >= budget {
                break 'quat_pairs;
            }
            attempts += 1;
            for (e2, e3) in unit_choices {
                let (u, v) = crate::quaternion::square_from_quaternion_pair(
                    &quats[i], &quats[j], e2, e3,
                )?;
                let pair = validate_twin(&u, &v)?;
                let poly = ehrhart_square_generic(&pair)?;
                if poly.poly() == &target {
                    return Ok(KSearchOutcome::Found {
                        pair,
                        poly: target,
                        attempts,
                    });
                }
            }
        }
    }
    Ok(KSearchOutcome::Exhausted { attempts, budget })
}

/// Fundamental volume helper re-exported for table verification.
pub fn witness_volume(pair: &TwinPair) -> Result<BigInt> {
    plane_lattice_volume(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aps2_small_prefix() {
        let table = aps2_terms(&bi(17));
        assert_eq!(
            table.terms,
            vec![bi(0), bi(1), bi(4), bi(5), bi(9), bi(12), bi(13), bi(16), bi(17)]
        );
        assert!(table.complete);
        // every witness re-evaluates to its term
        for (term, (pair, t)) in &table.witnesses {
            let poly = ehrhart_square_generic(pair).unwrap();
            assert_eq!(&poly.interior(&bi(*t as i64)), term);
        }
    }

    #[test]
    fn aps2_exclusions() {
        let table = aps2_terms(&bi(30));
        assert!(!table.terms.contains(&bi(20)));
        assert!(table.terms.contains(&bi(24)));
    }

    #[test]
    fn quadruple_tables_match_reference() {
        let t = quadruple_table(&bi(19)).unwrap();
        let row = |l: i64| t.rows.get(&bi(l)).unwrap();
        let q = |a: i64, b: i64, c: i64| (bi(a), bi(b), bi(c));
        assert_eq!(row(1), &vec![q(1, 0, 0)]);
        assert_eq!(row(3), &vec![q(1, 2, 2)]);
        assert_eq!(row(5), &vec![q(3, 4, 0)]);
        assert_eq!(row(7), &vec![q(3, 6, 2)]);
        assert_eq!(row(9), &vec![q(1, 8, 4), q(7, 4, 4)]);
        assert_eq!(row(11), &vec![q(7, 6, 6), q(9, 6, 2)]);
        assert_eq!(row(13), &vec![q(3, 12, 4), q(5, 12, 0)]);
        assert_eq!(row(15), &vec![q(5, 14, 2), q(11, 10, 2)]);
        assert_eq!(row(17), &vec![q(1, 12, 12), q(9, 12, 8), q(15, 8, 0)]);
        assert_eq!(row(19), &vec![q(1, 18, 6), q(15, 10, 6), q(17, 6, 6)]);
    }

    #[test]
    fn witnessed_3d_contains_standard_examples() {
        let table = aps_witnessed(3, 4, &bi(20)).unwrap();
        for needed in [2i64, 3, 17] {
            assert!(
                table.terms.contains(&bi(needed)),
                "missing term {needed} in {:?}",
                table.terms
            );
        }
        assert!(!table.complete);
    }

    #[test]
    fn search_finds_eleven() {
        let outcome = search_k_square(&bi(11), 50).unwrap();
        let KSearchOutcome::Found { pair, poly, .. } = outcome else {
            panic!("search for 11 must succeed");
        };
        assert_eq!(poly, EhrhartPolynomial::from_i64(&[1, 2, 11]));
        assert_eq!(pair.norm_sq(), &bi(121));
    }

    #[test]
    fn search_finds_nine_via_quaternions() {
        let outcome = search_k_square(&bi(9), 5000).unwrap();
        let KSearchOutcome::Found { pair, poly, .. } = outcome else {
            panic!("search for 9 must succeed through the quaternion route");
        };
        assert_eq!(poly, EhrhartPolynomial::from_i64(&[1, 2, 9]));
        assert_eq!(pair.norm_sq(), &bi(81));
    }
}
