//! Integer vectors and matrices, saturated kernels via Hermite reduction,
//! Gram determinants and fundamental-domain volumes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{exact_sqrt, gcd_many};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(pub Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> BigInt {
        self.dot(self)
    }

    /// gcd of the coordinates (nonnegative; 0 for the zero vector).
    pub fn coord_gcd(&self) -> BigInt {
        gcd_many(&self.0).expect("vector is never empty")
    }

    pub fn scaled(&self, c: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    /// Exact division of every coordinate; None if any is not divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<IntVector> {
        let mut out = Vec::with_capacity(self.dim());
        for c in &self.0 {
            let (q, r) = c.div_mod_floor(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntVector(out))
    }

    /// Cross product in dimension three.
    pub fn cross(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.dim(), 3);
        assert_eq!(other.dim(), 3);
        let (a, b) = (&self.0, &other.0);
        IntVector(vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    /// Flips signs so the first nonzero coordinate is positive.
    pub fn sign_normalized(&self) -> IntVector {
        for c in &self.0 {
            if c.is_positive() {
                return self.clone();
            }
            if c.is_negative() {
                return self.neg();
            }
        }
        self.clone()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        if let Some(first) = rows.first() {
            let n = first.len();
            assert!(rows.iter().all(|r| r.len() == n), "ragged matrix");
        }
        IntMatrix { rows }
    }

    pub fn from_vectors(vs: &[IntVector]) -> Self {
        IntMatrix::from_rows(vs.iter().map(|v| v.0.clone()).collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = BigInt::from(1);
        }
        IntMatrix { rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector(self.rows[i].clone())
    }

    pub fn col(&self, j: usize) -> IntVector {
        IntVector(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.rows {
            row.swap(a, b);
        }
    }

    /// col_a -= q * col_b
    fn sub_col(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for row in &mut self.rows {
            let delta = q * &row[b];
            row[a] -= delta;
        }
    }

    fn negate_col(&mut self, a: usize) {
        for row in &mut self.rows {
            let v = -&row[a];
            row[a] = v;
        }
    }

    /// Exact determinant by cofactor expansion (matrices here are at most 4x4).
    pub fn determinant(&self) -> BigInt {
        let n = self.n_rows();
        assert_eq!(n, self.n_cols(), "determinant of non-square matrix");
        match n {
            0 => BigInt::from(1),
            1 => self.rows[0][0].clone(),
            _ => {
                let mut det = BigInt::zero();
                for j in 0..n {
                    if self.rows[0][j].is_zero() {
                        continue;
                    }
                    let minor_rows: Vec<Vec<BigInt>> = self.rows[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(c, _)| *c != j)
                                .map(|(_, x)| x.clone())
                                .collect()
                        })
                        .collect();
                    let cofactor = IntMatrix::from_rows(minor_rows).determinant();
                    let term = &self.rows[0][j] * cofactor;
                    if j % 2 == 0 {
                        det += term;
                    } else {
                        det -= term;
                    }
                }
                det
            }
        }
    }

    pub fn rank(&self) -> usize {
        column_echelon(self).2
    }
}

/// Column echelon form by unimodular column operations.
/// Returns (H, U, rank) with self * U = H.
fn column_echelon(m: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.n_cols());
    let (nr, nc) = (h.n_rows(), h.n_cols());
    let mut pivot_col = 0;
    for r in 0..nr {
        if pivot_col >= nc {
            break;
        }
        // Euclid across columns pivot_col.. until row r has at most one nonzero
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            let mut nonzero = 0;
            for j in pivot_col..nc {
                let v = h.at(r, j).abs();
                if !v.is_zero() {
                    nonzero += 1;
                    match &best {
                        Some((_, bv)) if *bv <= v => {}
                        _ => best = Some((j, v)),
                    }
                }
            }
            let Some((jmin, _)) = best else { break };
            if jmin != pivot_col {
                h.swap_cols(jmin, pivot_col);
                u.swap_cols(jmin, pivot_col);
            }
            if nonzero == 1 {
                break;
            }
            let pivot = h.at(r, pivot_col).clone();
            for j in (pivot_col + 1)..nc {
                let q = h.at(r, j).div_floor(&pivot);
                h.sub_col(j, pivot_col, &q);
                u.sub_col(j, pivot_col, &q);
            }
        }
        if !h.at(r, pivot_col).is_zero() {
            if h.at(r, pivot_col).is_negative() {
                h.negate_col(pivot_col);
                u.negate_col(pivot_col);
            }
            pivot_col += 1;
        }
    }
    (h, u, pivot_col)
}

/// Row Hermite normal form of a full-row-rank basis: pivots positive, rows
/// ordered by pivot column, pivot-column entries of earlier rows reduced into
/// [0, pivot). This is the canonical presentation of a sublattice basis.
pub fn basis_hnf(basis: &[IntVector]) -> Vec<IntVector> {
    if basis.is_empty() {
        return Vec::new();
    }
    let n = basis[0].dim();
    let mut rows: Vec<Vec<BigInt>> = basis.iter().map(|v| v.0.clone()).collect();
    let k = rows.len();
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row >= k {
            break;
        }
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            let mut nonzero = 0;
            for i in pivot_row..k {
                let v = rows[i][col].abs();
                if !v.is_zero() {
                    nonzero += 1;
                    match &best {
                        Some((_, bv)) if *bv <= v => {}
                        _ => best = Some((i, v)),
                    }
                }
            }
            let Some((imin, _)) = best else { break };
            rows.swap(imin, pivot_row);
            if nonzero == 1 {
                break;
            }
            let pivot = rows[pivot_row][col].clone();
            for i in (pivot_row + 1)..k {
                let q = rows[i][col].div_floor(&pivot);
                if !q.is_zero() {
                    for j in 0..n {
                        let delta = &q * &rows[pivot_row][j];
                        rows[i][j] -= delta;
                    }
                }
            }
        }
        if !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for x in rows[pivot_row].iter_mut() {
                    *x = -&*x;
                }
            }
            let pivot = rows[pivot_row][col].clone();
            for i in 0..pivot_row {
                let q = rows[i][col].div_floor(&pivot);
                if !q.is_zero() {
                    for j in 0..n {
                        let delta = &q * &rows[pivot_row][j];
                        rows[i][j] -= delta;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    rows.into_iter().map(IntVector).collect()
}

/// Basis of the saturated integer kernel {x : m x = 0}, canonicalized by
/// [`basis_hnf`]. Unimodular column reduction makes the result saturated:
/// every integer vector of the rational kernel is an integer combination of
/// the returned basis.
pub fn integer_kernel(m: &IntMatrix) -> Vec<IntVector> {
    let (h, u, _) = column_echelon(m);
    let mut kernel = Vec::new();
    for j in 0..h.n_cols() {
        if (0..h.n_rows()).all(|i| h.at(i, j).is_zero()) {
            kernel.push(u.col(j));
        }
    }
    basis_hnf(&kernel)
}

pub fn gram_matrix(vs: &[IntVector]) -> IntMatrix {
    let k = vs.len();
    let mut rows = vec![vec![BigInt::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            rows[i][j] = vs[i].dot(&vs[j]);
        }
    }
    IntMatrix::from_rows(rows)
}

/// Square root of the Gram determinant. Every sublattice in scope has an
/// integer covolume, so a non-square determinant signals a caller error.
pub fn gram_volume(vs: &[IntVector]) -> Result<BigInt> {
    let det = gram_matrix(vs).determinant();
    exact_sqrt(&det).ok_or(Error::NonSquareGram { det })
}

/// Lagrange (Gauss) reduction of a rank-2 basis; returns a basis of the same
/// lattice with near-orthogonal, short vectors. Used to keep enumeration
/// boxes tight; canonical output is not needed here.
pub fn gauss_reduce(b1: &IntVector, b2: &IntVector) -> (IntVector, IntVector) {
    let mut a = b1.clone();
    let mut b = b2.clone();
    loop {
        if a.norm_sq() > b.norm_sq() {
            std::mem::swap(&mut a, &mut b);
        }
        let na = a.norm_sq();
        if na.is_zero() {
            return (a, b);
        }
        // nearest integer to (a.b)/|a|^2
        let two_dot: BigInt = a.dot(&b) * BigInt::from(2);
        let two_na: BigInt = &na * BigInt::from(2);
        let mu = two_dot.div_floor(&two_na) + {
            let r = two_dot.mod_floor(&two_na);
            if r > na {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        };
        if mu.is_zero() {
            return (a, b);
        }
        b = b.sub(&a.scaled(&mu));
    }
}
