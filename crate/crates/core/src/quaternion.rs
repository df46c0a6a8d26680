//! Integer quaternion arithmetic and the square/quadruple parametrizations
//! built on it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{bi, decompose_two_squares, prime_factors};
use crate::error::{Error, Result};
use crate::gaussian::{gaussian_gcd, GaussianInt};
use crate::linalg::IntVector;

/// x + y i + z j + t k with integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub t: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitSymbol {
    One,
    I,
    J,
    K,
}

impl UnitSymbol {
    pub fn quaternion(self) -> Quaternion {
        match self {
            UnitSymbol::One => Quaternion::from_i64(1, 0, 0, 0),
            UnitSymbol::I => Quaternion::from_i64(0, 1, 0, 0),
            UnitSymbol::J => Quaternion::from_i64(0, 0, 1, 0),
            UnitSymbol::K => Quaternion::from_i64(0, 0, 0, 1),
        }
    }

    pub fn is_imaginary(self) -> bool {
        self != UnitSymbol::One
    }

    pub const ALL: [UnitSymbol; 4] = [UnitSymbol::One, UnitSymbol::I, UnitSymbol::J, UnitSymbol::K];

    pub fn name(self) -> &'static str {
        match self {
            UnitSymbol::One => "1",
            UnitSymbol::I => "i",
            UnitSymbol::J => "j",
            UnitSymbol::K => "k",
        }
    }
}

impl Quaternion {
    pub fn new(x: BigInt, y: BigInt, z: BigInt, t: BigInt) -> Self {
        Quaternion { x, y, z, t }
    }

    pub fn from_i64(x: i64, y: i64, z: i64, t: i64) -> Self {
        Quaternion::new(bi(x), bi(y), bi(z), bi(t))
    }

    pub fn zero() -> Self {
        Quaternion::from_i64(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quaternion::from_i64(1, 0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero() && self.t.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(self.x.clone(), -&self.y, -&self.z, -&self.t)
    }

    pub fn norm(&self) -> BigInt {
        &self.x * &self.x + &self.y * &self.y + &self.z * &self.z + &self.t * &self.t
    }

    pub fn is_odd(&self) -> bool {
        self.norm().is_odd()
    }

    /// Coordinate gcd, 0 only for the zero quaternion.
    pub fn content(&self) -> BigInt {
        crate::arith::gcd_many(&[
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            self.t.clone(),
        ])
        .expect("four coordinates")
    }

    /// The vector (x, y, z, t) under the standard embedding of Z^4.
    pub fn to_vector(&self) -> IntVector {
        IntVector(vec![
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            self.t.clone(),
        ])
    }

    pub fn from_vector(v: &IntVector) -> Result<Self> {
        if v.dim() != 4 {
            return Err(Error::Dimension(format!(
                "quaternion needs 4 coordinates, got {}",
                v.dim()
            )));
        }
        Ok(Quaternion::new(
            v.0[0].clone(),
            v.0[1].clone(),
            v.0[2].clone(),
            v.0[3].clone(),
        ))
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        Quaternion::new(&self.x * c, &self.y * c, &self.z * c, &self.t * c)
    }

    /// Exact division by an integer scalar; None when not divisible.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Option<Self> {
        let q = |a: &BigInt| -> Option<BigInt> {
            let (q, r) = a.div_mod_floor(d);
            r.is_zero().then_some(q)
        };
        Some(Quaternion::new(
            q(&self.x)?,
            q(&self.y)?,
            q(&self.z)?,
            q(&self.t)?,
        ))
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.x, self.y, self.z, self.t)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    // Hamilton product: i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i,
    // ki = -ik = j.
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a, b) = (self, rhs);
        Quaternion::new(
            &a.x * &b.x - &a.y * &b.y - &a.z * &b.z - &a.t * &b.t,
            &a.x * &b.y + &a.y * &b.x + &a.z * &b.t - &a.t * &b.z,
            &a.x * &b.z - &a.y * &b.t + &a.z * &b.x + &a.t * &b.y,
            &a.x * &b.t + &a.y * &b.z - &a.z * &b.y + &a.t * &b.x,
        )
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
            &self.t + &rhs.t,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
            &self.t - &rhs.t,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.x, -&self.y, -&self.z, -&self.t)
    }
}

/// True iff q = w * d for some integer quaternion w, i.e. q * conj(d) has all
/// four components divisible by N(d). Returns the quotient on success.
pub fn right_divides(d: &Quaternion, q: &Quaternion) -> Result<Option<Quaternion>> {
    if d.is_zero() {
        return Err(Error::ZeroInput("right divisor"));
    }
    let n = d.norm();
    let prod = q * &d.conjugate();
    Ok(prod.div_scalar_exact(&n))
}

/// The six dyadic tails of the unique factorization q = 2^l * core * tail
/// with odd core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DyadicTail {
    One,
    OnePlusI,
    OnePlusJ,
    OnePlusK,
    OnePlusJTimesOnePlusI,
    OneMinusKTimesOnePlusI,
}

impl DyadicTail {
    pub fn quaternion(self) -> Quaternion {
        match self {
            DyadicTail::One => Quaternion::from_i64(1, 0, 0, 0),
            DyadicTail::OnePlusI => Quaternion::from_i64(1, 1, 0, 0),
            DyadicTail::OnePlusJ => Quaternion::from_i64(1, 0, 1, 0),
            DyadicTail::OnePlusK => Quaternion::from_i64(1, 0, 0, 1),
            // (1+j)(1+i) = 1 + i + j - k
            DyadicTail::OnePlusJTimesOnePlusI => Quaternion::from_i64(1, 1, 1, -1),
            // (1-k)(1+i) = 1 + i - j - k
            DyadicTail::OneMinusKTimesOnePlusI => Quaternion::from_i64(1, 1, -1, -1),
        }
    }

    pub const ALL: [DyadicTail; 6] = [
        DyadicTail::One,
        DyadicTail::OnePlusI,
        DyadicTail::OnePlusJ,
        DyadicTail::OnePlusK,
        DyadicTail::OnePlusJTimesOnePlusI,
        DyadicTail::OneMinusKTimesOnePlusI,
    ];

    /// Ends in a right factor 1 + i.
    pub fn has_one_plus_i_factor(self) -> bool {
        matches!(
            self,
            DyadicTail::OnePlusI
                | DyadicTail::OnePlusJTimesOnePlusI
                | DyadicTail::OneMinusKTimesOnePlusI
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            DyadicTail::One => "1",
            DyadicTail::OnePlusI => "1+i",
            DyadicTail::OnePlusJ => "1+j",
            DyadicTail::OnePlusK => "1+k",
            DyadicTail::OnePlusJTimesOnePlusI => "(1+j)(1+i)",
            DyadicTail::OneMinusKTimesOnePlusI => "(1-k)(1+i)",
        }
    }
}

/// Unique factorization q = 2^exponent * core * tail with core odd and tail
/// one of the six dyadic tails. The candidate check is exhaustive, and
/// exactly one candidate must yield an odd integral quotient.
pub fn factor_dyadic(q: &Quaternion) -> Result<(u32, Quaternion, DyadicTail)> {
    if q.is_zero() {
        return Err(Error::ZeroInput("quaternion to factor"));
    }
    let mut exponent = 0u32;
    let mut m = q.clone();
    let two = bi(2);
    while let Some(half) = m.div_scalar_exact(&two) {
        m = half;
        exponent += 1;
    }
    let mut found: Option<(Quaternion, DyadicTail)> = None;
    for tail in DyadicTail::ALL {
        let tq = tail.quaternion();
        if let Some(core) = right_divides(&tq, &m)? {
            if core.is_odd() {
                if found.is_some() {
                    return Err(Error::InvariantViolation(format!(
                        "two dyadic tails divide {m} with odd quotient"
                    )));
                }
                found = Some((core, tail));
            }
        }
    }
    match found {
        Some((core, tail)) => Ok((exponent, core, tail)),
        None => Err(Error::InvariantViolation(format!(
            "no dyadic tail yields an odd quotient for {m}"
        ))),
    }
}

/// The pure-imaginary components of q * eps * conj(q) as (n1, n2, n3), the
/// coefficients of i, j, k. The real part vanishes identically.
pub fn quadruple_from_quaternion(q: &Quaternion, eps: UnitSymbol) -> (BigInt, BigInt, BigInt) {
    assert!(eps.is_imaginary(), "conjugation unit must be imaginary");
    let prod = &(q * &eps.quaternion()) * &q.conjugate();
    debug_assert!(prod.x.is_zero());
    (prod.y, prod.z, prod.t)
}

/// How a computed quadruple maps back onto a requested one:
/// requested[i] = signs[i] * quadruple[perm[i]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrupleMap {
    pub perm: [usize; 3],
    pub signs: [i8; 3],
}

impl QuadrupleMap {
    pub fn identity() -> Self {
        QuadrupleMap {
            perm: [0, 1, 2],
            signs: [1, 1, 1],
        }
    }

    pub fn apply(&self, quad: &(BigInt, BigInt, BigInt)) -> (BigInt, BigInt, BigInt) {
        let items = [&quad.0, &quad.1, &quad.2];
        let pick = |i: usize| -> BigInt {
            let v = items[self.perm[i]].clone();
            if self.signs[i] < 0 {
                -v
            } else {
                v
            }
        };
        (pick(0), pick(1), pick(2))
    }
}

/// Inverts a primitive Pythagorean quadruple n1^2 + n2^2 + n3^2 = l^2 (l odd)
/// into a quaternion q with N(q) = l such that the returned map sends
/// `quadruple_from_quaternion(q, K)` to the requested (n1, n2, n3).
///
/// Construction: move the odd entry into the third slot, split
/// (l + n3)(l - n3) = n1^2 + n2^2 over the Gaussian integers, and read the
/// two gcd factors as (x, t) and (z, -y).
pub fn quaternion_from_quadruple(
    n1: &BigInt,
    n2: &BigInt,
    n3: &BigInt,
    l: &BigInt,
) -> Result<(Quaternion, QuadrupleMap)> {
    if !l.is_positive() || l.is_even() {
        return Err(Error::InvalidArgument(format!(
            "l must be odd and positive, got {l}"
        )));
    }
    if &(n1 * n1 + n2 * n2 + n3 * n3) != &(l * l) {
        return Err(Error::InvalidArgument(format!(
            "({n1}, {n2}, {n3}) is not a representation of {l}^2"
        )));
    }
    let g = crate::arith::gcd_many(&[n1.clone(), n2.clone(), n3.clone()])?;
    if !g.is_one() {
        return Err(Error::InvalidArgument(format!(
            "quadruple ({n1}, {n2}, {n3}) is not primitive (gcd {g})"
        )));
    }
    let odd_pos: Vec<usize> = [n1, n2, n3]
        .iter()
        .enumerate()
        .filter(|(_, n)| n.is_odd())
        .map(|(i, _)| i)
        .collect();
    if odd_pos.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "primitive quadruple of odd {l} must have exactly one odd entry"
        )));
    }
    // normalized = (m1, m2, m3) with m3 odd; perm_to_norm[i] = index in the
    // input that lands at normalized slot i
    let perm_to_norm: [usize; 3] = match odd_pos[0] {
        0 => [1, 2, 0],
        1 => [0, 2, 1],
        _ => [0, 1, 2],
    };
    let input = [n1, n2, n3];
    let m1 = input[perm_to_norm[0]].clone();
    let m2 = input[perm_to_norm[1]].clone();
    let m3 = input[perm_to_norm[2]].clone();

    let two = bi(2);
    let alpha: BigInt = (l + &m3) / &two;
    let beta: BigInt = (l - &m3) / &two;
    let a: BigInt = &m1 / &two;
    let b: BigInt = &m2 / &two;
    let ab = GaussianInt::new(a.clone(), b.clone());

    // w1 = x + t i with |w1|^2 = alpha, w2 = z - y i with |w2|^2 = beta,
    // w1 * w2 = a + b i
    let (w1, w2) = if beta.is_zero() {
        (GaussianInt::new(bi(1), bi(0)), GaussianInt::zero())
    } else if alpha.is_zero() {
        (GaussianInt::zero(), GaussianInt::new(bi(1), bi(0)))
    } else {
        let g1 = gaussian_gcd(&ab, &GaussianInt::new(alpha.clone(), BigInt::zero()))?;
        let g2 = gaussian_gcd(&ab, &GaussianInt::new(beta.clone(), BigInt::zero()))?;
        if g1.norm() != alpha {
            return Err(Error::InvariantViolation(format!(
                "gcd with {alpha} has norm {} instead of {alpha}",
                g1.norm()
            )));
        }
        if g2.norm() != beta {
            return Err(Error::InvariantViolation(format!(
                "gcd with {beta} has norm {} instead of {beta}",
                g2.norm()
            )));
        }
        let units = [
            GaussianInt::from_i64(1, 0),
            GaussianInt::from_i64(0, 1),
            GaussianInt::from_i64(-1, 0),
            GaussianInt::from_i64(0, -1),
        ];
        let mut fixed = None;
        for u in &units {
            let cand = &g2 * u;
            if &(&g1 * &cand) == &ab {
                fixed = Some(cand);
                break;
            }
        }
        let Some(w2) = fixed else {
            return Err(Error::InvariantViolation(format!(
                "no unit aligns {g1} * {g2} with {ab}"
            )));
        };
        (g1, w2)
    };

    let q = Quaternion::new(w1.re.clone(), -&w2.im, w2.re.clone(), w1.im.clone());
    if q.norm() != *l {
        return Err(Error::InvariantViolation(format!(
            "constructed quaternion {q} has norm {} instead of {l}",
            q.norm()
        )));
    }
    let quad = quadruple_from_quaternion(&q, UnitSymbol::K);
    if quad != (m1.clone(), m2.clone(), m3.clone()) {
        return Err(Error::InvariantViolation(format!(
            "construction for ({n1}, {n2}, {n3}) reproduced {quad:?} instead"
        )));
    }
    // requested[perm_to_norm[i]] = quad[i]  =>  map.perm inverts perm_to_norm
    let mut perm = [0usize; 3];
    for (slot, &src) in perm_to_norm.iter().enumerate() {
        perm[src] = slot;
    }
    let map = QuadrupleMap {
        perm,
        signs: [1, 1, 1],
    };
    debug_assert_eq!(map.apply(&quad), (n1.clone(), n2.clone(), n3.clone()));
    Ok((q, map))
}

/// Right factors extracted while reducing the quadruple of q to a primitive
/// one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveReduction {
    pub reduced: Quaternion,
    pub factors: Vec<Quaternion>,
}

/// Repeatedly extracts right factors (unit tails 1+e', or a + b*eps with
/// a^2 + b^2 prime, or an inert rational prime) while the quadruple of q with
/// respect to `eps` has gcd > 1.
pub fn primitive_reduce(q: &Quaternion, eps: UnitSymbol) -> Result<PrimitiveReduction> {
    if q.is_zero() {
        return Err(Error::ZeroInput("quaternion to reduce"));
    }
    assert!(eps.is_imaginary());
    let mut cur = q.clone();
    let mut factors = Vec::new();
    loop {
        let (a, b, c) = quadruple_from_quaternion(&cur, eps);
        let g = crate::arith::gcd_many(&[a, b, c])?;
        if g.is_one() {
            return Ok(PrimitiveReduction {
                reduced: cur,
                factors,
            });
        }
        if g.is_zero() {
            return Err(Error::InvariantViolation(
                "quadruple vanished during reduction".into(),
            ));
        }
        let p = prime_factors(&g)
            .into_iter()
            .next()
            .expect("g > 1 has a prime factor");
        let mut candidates: Vec<Quaternion> = Vec::new();
        if p == bi(2) {
            candidates.push(Quaternion::from_i64(1, 1, 0, 0));
            candidates.push(Quaternion::from_i64(1, 0, 1, 0));
            candidates.push(Quaternion::from_i64(1, 0, 0, 1));
        } else if let Some((a, b)) = decompose_two_squares(&p) {
            let e = eps.quaternion();
            let mk = |s: &BigInt, c: &BigInt| -> Quaternion {
                let mut q = e.scaled(c);
                q.x = s.clone();
                q
            };
            candidates.push(mk(&a, &b));
            candidates.push(mk(&a, &-&b));
            if a != b {
                candidates.push(mk(&b, &a));
            }
        } else {
            // p = 3 mod 4: only the rational prime itself can occur
            candidates.push(Quaternion::new(
                p.clone(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::zero(),
            ));
        }
        let mut extracted = false;
        for cand in candidates {
            if let Some(quotient) = right_divides(&cand, &cur)? {
                factors.push(cand);
                cur = quotient;
                extracted = true;
                break;
            }
        }
        if !extracted {
            return Err(Error::InvariantViolation(format!(
                "no right factor for prime {p} divides {cur}"
            )));
        }
    }
}

/// u = q1 * eps2 * conj(q2), v = q1 * eps3 * conj(q2): an orthogonal pair of
/// equal squared length N(q1) N(q2).
pub fn square_from_quaternion_pair(
    q1: &Quaternion,
    q2: &Quaternion,
    eps2: UnitSymbol,
    eps3: UnitSymbol,
) -> Result<(IntVector, IntVector)> {
    if q1.is_zero() || q2.is_zero() {
        return Err(Error::ZeroInput("pair quaternion"));
    }
    if !eps2.is_imaginary() || !eps3.is_imaginary() {
        return Err(Error::InvalidArgument(
            "conjugation units must be imaginary".into(),
        ));
    }
    if eps2 == eps3 {
        return Err(Error::InvalidArgument(
            "the two conjugation units must differ".into(),
        ));
    }
    let c2 = q2.conjugate();
    let u = &(q1 * &eps2.quaternion()) * &c2;
    let v = &(q1 * &eps3.quaternion()) * &c2;
    Ok((u.to_vector(), v.to_vector()))
}

/// The third imaginary unit, i.e. the one not used to build the square.
pub fn complementary_unit(eps2: UnitSymbol, eps3: UnitSymbol) -> Result<UnitSymbol> {
    if !eps2.is_imaginary() || !eps3.is_imaginary() || eps2 == eps3 {
        return Err(Error::InvalidArgument(
            "need two distinct imaginary units".into(),
        ));
    }
    Ok(*[UnitSymbol::I, UnitSymbol::J, UnitSymbol::K]
        .iter()
        .find(|e| **e != eps2 && **e != eps3)
        .expect("three imaginary units"))
}

/// Minimality of the square built with conjugation units whose complement is
/// `eps1`: a right factor a + b*eps1 of either quaternion rotates the square
/// onto a smaller one in the same plane, so none may exist. Candidate
/// factors are the scalar primes (coordinate content), 1 + eps1, and
/// a +- b*eps1 for each prime a^2 + b^2 dividing N(q1) N(q2).
pub fn is_minimal_pair_for_units(
    q1: &Quaternion,
    q2: &Quaternion,
    eps1: UnitSymbol,
) -> Result<bool> {
    if q1.is_zero() || q2.is_zero() {
        return Err(Error::ZeroInput("pair quaternion"));
    }
    if !eps1.is_imaginary() {
        return Err(Error::InvalidArgument(
            "obstruction unit must be imaginary".into(),
        ));
    }
    let e = eps1.quaternion();
    let embed = |a: &BigInt, b: &BigInt| -> Quaternion {
        let mut q = e.scaled(b);
        q.x = a.clone();
        q
    };
    for q in [q1, q2] {
        if !q.content().is_one() {
            return Ok(false);
        }
    }
    let total = q1.norm() * q2.norm();
    for p in prime_factors(&total) {
        let Some((a, b)) = decompose_two_squares(&p) else {
            continue;
        };
        let pi = embed(&a, &b);
        let pi_conj = embed(&a, &-&b);
        for q in [q1, q2] {
            if right_divides(&pi, q)?.is_some() || right_divides(&pi_conj, q)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Minimality for the default conjugation units (j, k), whose obstruction
/// factors have the form a + b i. Equivalent to requiring, in the dyadic
/// factorization, no power of two, a tail among {1, 1+j, 1+k}, and no
/// odd-prime-norm right factor a + b i.
pub fn is_minimal_pair(q1: &Quaternion, q2: &Quaternion) -> Result<bool> {
    is_minimal_pair_for_units(q1, q2, UnitSymbol::I)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64, y: i64, z: i64, t: i64) -> Quaternion {
        Quaternion::from_i64(x, y, z, t)
    }

    #[test]
    fn hamilton_table() {
        let units = [q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)];
        let (one, i, j, k) = (&units[0], &units[1], &units[2], &units[3]);
        let minus = |a: &Quaternion| -a;
        let table = [
            (one, one, one.clone()),
            (one, i, i.clone()),
            (i, one, i.clone()),
            (i, i, minus(one)),
            (i, j, k.clone()),
            (j, i, minus(k)),
            (j, k, i.clone()),
            (k, j, minus(i)),
            (k, i, j.clone()),
            (i, k, minus(j)),
            (j, j, minus(one)),
            (k, k, minus(one)),
            (one, j, j.clone()),
            (j, one, j.clone()),
            (one, k, k.clone()),
            (k, one, k.clone()),
        ];
        for (a, b, expect) in table {
            assert_eq!(&(a * b), &expect);
        }
    }

    #[test]
    fn norm_and_parity() {
        let v = q(1, 1, 1, 1);
        assert_eq!(v.norm(), bi(4));
        assert!(!v.is_odd());
        assert!(q(1, 1, 1, 0).is_odd());
    }

    #[test]
    fn right_division() {
        let d = q(1, 1, 0, 0);
        assert_eq!(right_divides(&d, &q(2, 0, 0, 0)).unwrap(), Some(q(1, -1, 0, 0)));
        let d = q(1, 2, 0, 0);
        let w = q(3, 0, 1, 0);
        let prod = &w * &d;
        assert_eq!(right_divides(&d, &prod).unwrap(), Some(w));
        assert_eq!(right_divides(&d, &Quaternion::one()).unwrap(), None);
        assert!(right_divides(&Quaternion::zero(), &Quaternion::one()).is_err());
    }

    #[test]
    fn dyadic_factorization_examples() {
        let (e, core, tail) = factor_dyadic(&q(2, 0, 0, 0)).unwrap();
        assert_eq!((e, core, tail), (1, Quaternion::one(), DyadicTail::One));

        let (e, core, tail) = factor_dyadic(&q(1, 1, 0, 0)).unwrap();
        assert_eq!((e, core, tail), (0, Quaternion::one(), DyadicTail::OnePlusI));

        let built = &q(3, 1, 1, 0) * &DyadicTail::OnePlusJTimesOnePlusI.quaternion();
        let (e, core, tail) = factor_dyadic(&built).unwrap();
        assert_eq!(e, 0);
        assert_eq!(core, q(3, 1, 1, 0));
        assert_eq!(tail, DyadicTail::OnePlusJTimesOnePlusI);
    }

    #[test]
    fn quadruple_components() {
        assert_eq!(
            quadruple_from_quaternion(&Quaternion::one(), UnitSymbol::K),
            (bi(0), bi(0), bi(1))
        );
        // (x,y,z,t) = (3,1,1,0): j-conjugation reads (2(zy-tx), z^2-t^2+x^2-y^2, 2(tz+yx))
        let v = q(3, 1, 1, 0);
        assert_eq!(
            quadruple_from_quaternion(&v, UnitSymbol::J),
            (bi(2), bi(9), bi(6))
        );
        // and the (i, k, j) reading is (2, 6, 9), a signed permutation of [9, 2, 6]
        assert_eq!(
            quadruple_from_quaternion(&v, UnitSymbol::K),
            (bi(6), bi(-6), bi(7))
        );
    }

    #[test]
    fn quadruple_inversion_examples() {
        let (qq, map) = quaternion_from_quadruple(&bi(0), &bi(0), &bi(1), &bi(1)).unwrap();
        assert_eq!(qq, Quaternion::one());
        assert_eq!(map, QuadrupleMap::identity());

        let (qq, map) = quaternion_from_quadruple(&bi(1), &bi(2), &bi(2), &bi(3)).unwrap();
        assert_eq!(qq.norm(), bi(3));
        let quad = quadruple_from_quaternion(&qq, UnitSymbol::K);
        assert_eq!(map.apply(&quad), (bi(1), bi(2), bi(2)));

        let (qq, map) = quaternion_from_quadruple(&bi(9), &bi(2), &bi(6), &bi(11)).unwrap();
        assert_eq!(qq.norm(), bi(11));
        let quad = quadruple_from_quaternion(&qq, UnitSymbol::K);
        assert_eq!(map.apply(&quad), (bi(9), bi(2), bi(6)));
    }

    #[test]
    fn quadruple_inversion_rejects_bad_input() {
        assert!(quaternion_from_quadruple(&bi(2), &bi(4), &bi(4), &bi(6)).is_err());
        assert!(quaternion_from_quadruple(&bi(1), &bi(2), &bi(2), &bi(4)).is_err());
        assert!(quaternion_from_quadruple(&bi(3), &bi(6), &bi(6), &bi(9)).is_err());
    }

    #[test]
    fn primitive_reduction_scalar() {
        let red = primitive_reduce(&q(3, 0, 0, 0), UnitSymbol::K).unwrap();
        assert_eq!(red.reduced, Quaternion::one());
        assert_eq!(red.factors, vec![q(3, 0, 0, 0)]);
    }

    #[test]
    fn primitive_reduction_even_tail() {
        let start = &q(1, 0, 1, 0) * &q(1, 1, 0, 0); // (1+j)(1+i)
        let red = primitive_reduce(&start, UnitSymbol::K).unwrap();
        assert!(red.reduced.norm().is_one());
        let (a, b, c) = quadruple_from_quaternion(&red.reduced, UnitSymbol::K);
        assert!(crate::arith::gcd_many(&[a, b, c]).unwrap().is_one());
    }

    #[test]
    fn primitive_reduction_recovers_gaussian_factor() {
        let base = q(2, 0, 1, 0); // primitive quadruple (3, 0, -4) under i
        let factor = q(2, 1, 0, 0);
        let built = &base * &factor;
        let red = primitive_reduce(&built, UnitSymbol::I).unwrap();
        assert!(red
            .factors
            .iter()
            .any(|f| f.norm() == bi(5)));
        let (a, b, c) = quadruple_from_quaternion(&red.reduced, UnitSymbol::I);
        assert!(crate::arith::gcd_many(&[a, b, c]).unwrap().is_one());
    }

    #[test]
    fn square_pair_unit_case() {
        let (u, v) = square_from_quaternion_pair(
            &Quaternion::one(),
            &Quaternion::one(),
            UnitSymbol::J,
            UnitSymbol::K,
        )
        .unwrap();
        assert_eq!(u, IntVector::from_i64(&[0, 0, 1, 0]));
        assert_eq!(v, IntVector::from_i64(&[0, 0, 0, 1]));
    }

    #[test]
    fn square_pair_example_parameters() {
        // q1 = 1 + 3i + j + 2k, q2 = 1 + 2i + 2k
        let q1 = q(1, 3, 1, 2);
        let q2 = q(1, 2, 0, 2);
        let (u, v) =
            square_from_quaternion_pair(&q1, &q2, UnitSymbol::J, UnitSymbol::K).unwrap();
        assert_eq!(u.norm_sq(), bi(135));
        assert_eq!(v.norm_sq(), bi(135));
        assert!(u.dot(&v).is_zero());
    }

    #[test]
    fn square_pair_rejects_equal_units() {
        assert!(square_from_quaternion_pair(
            &Quaternion::one(),
            &Quaternion::one(),
            UnitSymbol::J,
            UnitSymbol::J
        )
        .is_err());
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal_pair(&Quaternion::one(), &Quaternion::one()).unwrap());
        // 1 + 3i + j + 2k = (1 + i + k)(2 + i), so the default-unit test
        // fails, while the complementary unit j raises no obstruction
        let q1 = q(1, 3, 1, 2);
        let q2 = q(1, 2, 0, 2);
        assert_eq!(&q(1, 1, 0, 1) * &q(2, 1, 0, 0), q1);
        assert!(!is_minimal_pair(&q1, &q2).unwrap());
        assert!(is_minimal_pair_for_units(&q1, &q2, UnitSymbol::J).unwrap());

        let base = q(1, 1, 0, 1);
        assert!(is_minimal_pair(&base, &q2).unwrap());
        let spoiled = &base * &q(1, 2, 0, 0);
        assert!(!is_minimal_pair(&spoiled, &q2).unwrap());
    }
}
