//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers. The matrices are
//! small (a handful of rows, a few dozen columns) but their minors overflow
//! fixed-width integers quickly, so nothing in this module ever touches a
//! float.

mod primes;
mod snf;

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use primes::{is_prime, prime_factors, require_prime};
pub use snf::{smith_normal_form, SmithDecomposition};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows. All rows must have the same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Builds a `rows x cols.len()` matrix whose columns are the given vectors.
    pub fn from_columns<C: AsRef<[i64]>>(rows: usize, columns: &[C]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            let c = c.as_ref();
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, got: c.len() });
            }
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = BigInt::from(x);
            }
        }
        Ok(m)
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &x) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(x);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Entry as `i64`, if it fits.
    pub fn get_i64(&self, i: usize, j: usize) -> Option<i64> {
        self[(i, j)].to_i64()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Sub-matrix made of the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m.data[i * cols.len() + k] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Rank over the rationals, by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        bareiss(self).0
    }

    /// Determinant of a square matrix (Bareiss elimination, exact).
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows == 0 {
            return Ok(BigInt::one());
        }
        let (rank, det) = bareiss(self);
        Ok(if rank < self.rows { BigInt::zero() } else { det })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            self.data[i * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Returns (rank, last nonzero pivot). For a nonsingular square matrix the
/// pivot is the determinant.
fn bareiss(m: &IntMatrix) -> (usize, BigInt) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap_rows(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[(r, c)] * &a[(i, j)] - &a[(i, c)] * &a[(r, j)]) / &prev;
                a.set(i, j, v);
            }
            a.set(i, c, BigInt::zero());
        }
        prev = a[(r, c)].clone();
        r += 1;
    }
    let last = if sign < 0 { -prev } else { prev };
    (r, last)
}

/// Gcd of all `r x r` minors, where `r` is the rank of `m` over the
/// rationals. Equal to the product of the nonzero elementary divisors.
/// A rank-0 matrix (including an empty one) gives 1.
pub fn rank_minor_gcd(m: &IntMatrix) -> BigInt {
    smith_normal_form(m)
        .elementary_divisors
        .iter()
        .fold(BigInt::one(), |acc, d| acc * d)
}

/// Rank of `m` with entries reduced modulo the prime `p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    require_prime(p)?;
    let modulus = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.mod_floor(&modulus).to_u64().expect("residue fits u64"))
                .collect()
        })
        .collect();
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut rank = 0;
    for c in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(piv) = (rank..m.rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for i in rank + 1..m.rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mulmod(a[i][c], inv);
            for j in c..m.cols {
                let sub = mulmod(f, a[rank][j]);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for an integer vector.
    pub fn apply(&self, v: &[i64]) -> Vec<BigRational> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| v[j] != 0)
                    .map(|j| self.get(i, j) * BigInt::from(v[j]))
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Bilinear form `x^T self y` for integer vectors.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> BigRational {
        let sy = self.apply(y);
        x.iter()
            .zip(sy)
            .filter(|(a, _)| **a != 0)
            .map(|(a, b)| b * BigInt::from(*a))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Converts to an integer matrix if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().any(|x| !x.is_integer()) {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.to_integer()).collect(),
        })
    }

    /// Least common multiple of all entry denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

/// Exact inverse of a nonsingular square integer matrix.
pub fn invert_rational(m: &IntMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = RatMatrix::from_int(m);
    let mut inv = RatMatrix::identity(n);
    for c in 0..n {
        let piv = (c..n).find(|&i| !a.get(i, c).is_zero()).ok_or(Error::Singular)?;
        if piv != c {
            for j in 0..n {
                a.data.swap(piv * n + j, c * n + j);
                inv.data.swap(piv * n + j, c * n + j);
            }
        }
        let p = a.get(c, c).clone();
        for j in 0..n {
            a.data[c * n + j] /= &p;
            inv.data[c * n + j] /= &p;
        }
        for i in 0..n {
            if i == c || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in 0..n {
                let da = &f * a.get(c, j);
                a.data[i * n + j] -= da;
                let di = &f * inv.get(c, j);
                inv.data[i * n + j] -= di;
            }
        }
    }
    Ok(inv)
}

/// Gcd of a slice of integers (0 for an empty slice), always nonnegative.
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_minor_gcd_examples() {
        assert_eq!(rank_minor_gcd(&IntMatrix::identity(3)), BigInt::one());
        assert_eq!(rank_minor_gcd(&m(&[&[2, 0, -2]])), BigInt::from(2));
        assert_eq!(rank_minor_gcd(&IntMatrix::diagonal(&[2, 3])), BigInt::from(6));
    }

    #[test]
    fn rank_minor_gcd_of_rank_zero_is_one() {
        assert_eq!(rank_minor_gcd(&IntMatrix::zeros(2, 2)), BigInt::one());
        assert_eq!(rank_minor_gcd(&IntMatrix::zeros(0, 0)), BigInt::one());
        assert_eq!(rank_minor_gcd(&IntMatrix::zeros(3, 0)), BigInt::one());
    }

    #[test]
    fn rank_mod_p_examples() {
        let nu = m(&[&[2, 0, -2]]);
        assert_eq!(rank_mod_p(&nu, 2).unwrap(), 0);
        assert_eq!(rank_mod_p(&nu, 3).unwrap(), 1);
        for p in [2, 3, 5, 7, 101] {
            assert_eq!(rank_mod_p(&IntMatrix::identity(4), p).unwrap(), 4);
        }
    }

    #[test]
    fn rank_mod_p_rejects_composites() {
        assert_eq!(rank_mod_p(&IntMatrix::identity(2), 4), Err(Error::NotPrime(4)));
        assert_eq!(rank_mod_p(&IntMatrix::identity(2), 1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn inverse_examples() {
        let inv = invert_rational(&m(&[&[2]])).unwrap();
        assert_eq!(inv.get(0, 0), &q(1, 2));

        let cartan = m(&[&[2, -1], &[-1, 2]]);
        let inv = invert_rational(&cartan).unwrap();
        assert_eq!(inv.get(0, 0), &q(2, 3));
        assert_eq!(inv.get(0, 1), &q(1, 3));
        assert_eq!(inv.get(1, 0), &q(1, 3));
        assert_eq!(inv.get(1, 1), &q(2, 3));
        assert_eq!(RatMatrix::from_int(&cartan).mul(&inv).unwrap(), RatMatrix::identity(2));

        assert_eq!(invert_rational(&IntMatrix::identity(3)).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn inverse_of_singular_is_reported() {
        assert_eq!(invert_rational(&m(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
        assert!(matches!(invert_rational(&m(&[&[1, 2]])), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(m(&[&[2, 4], &[6, 8]]).determinant().unwrap(), BigInt::from(-8));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(IntMatrix::zeros(0, 4).rank(), 0);
    }
}
