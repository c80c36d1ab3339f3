//! Dense square matrices over exact scalars.
//!
//! [`IntMatrix`] holds arbitrary-precision integers and [`RatMatrix`] holds
//! reduced rationals. All public accessors use 1-based `(row, column)`
//! indices; storage is row-major.

mod exact;
mod poly;

pub use exact::{det_exact, nullspace_rational, rank_exact, rank_int_rows, rank_rat_rows};
pub use poly::{char_poly_exact, IntPoly};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Ring operations needed by [`Matrix`].
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    /// Builds an order-`n` matrix from row-major entries.
    pub fn new(n: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::BadShape { n, len: data.len(), expected: n * n });
        }
        Ok(Self { n, data })
    }

    /// Builds a matrix from `f(i, j)` with 1-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n, "index ({i},{j}) out of range");
        &self.data[(i - 1) * self.n + (j - 1)]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    // 0-based internal accessor
    pub(crate) fn at0(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.at0(j - 1, i - 1).clone())
    }

    /// `J·A`: rows reversed.
    pub fn flip_rows(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.at0(n - i, j - 1).clone())
    }

    /// `A·J`: columns reversed.
    pub fn flip_cols(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.at0(i - 1, n - j).clone())
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The all-ones matrix `E = e eᵀ`.
    pub fn ones(n: usize) -> Self {
        Self { n, data: vec![T::one(); n * n] }
    }

    pub fn constant(n: usize, c: T) -> Self {
        Self { n, data: vec![c; n * n] }
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.at0(i, i).clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    let a = self.at0(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * other.at0(k, j).clone();
                }
                data.push(acc);
            }
        }
        Ok(Self { n, data })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { n: self.n, data })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Self { n: self.n, data })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn row_sums(&self) -> Vec<T> {
        self.rows().map(|r| r.iter().cloned().fold(T::zero(), |a, b| a + b)).collect()
    }

    pub fn col_sums(&self) -> Vec<T> {
        (0..self.n)
            .map(|j| (0..self.n).fold(T::zero(), |a, i| a + self.at0(i, j).clone()))
            .collect()
    }

    /// `tr(J·A)`, the sum along the minor diagonal.
    pub fn anti_trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.at0(i, self.n - 1 - i).clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        self.rows()
            .map(|r| r.iter().zip(v).fold(T::zero(), |a, (x, y)| a + x.clone() * y.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::OrderMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

impl<'a, T: Scalar> Mul<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    /// Panics on order mismatch; use [`Matrix::checked_mul`] for a `Result`.
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix orders differ")
    }
}

impl<'a, T: Scalar> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix orders differ")
    }
}

impl<'a, T: Scalar> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix orders differ")
    }
}

/// The reverse matrix `J` with `J[i,j] = 1` iff `i + j = n + 1`.
pub fn reverse_matrix(n: usize) -> IntMatrix {
    Matrix::from_fn(n, |i, j| if i + j == n + 1 { BigInt::one() } else { BigInt::zero() })
}

impl IntMatrix {
    pub fn from_i64(n: usize, data: &[i64]) -> Result<Self> {
        Self::new(n, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        let data: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_i64(n, &data)
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.data.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl RatMatrix {
    /// Multiplies through by `d` and returns the integer matrix, if every
    /// entry becomes integral.
    pub fn scaled_to_int(&self, d: &BigInt) -> Option<IntMatrix> {
        let scaled: Option<Vec<BigInt>> = self
            .data
            .iter()
            .map(|x| {
                let y = x * BigRational::from_integer(d.clone());
                y.is_integer().then(|| y.to_integer())
            })
            .collect();
        scaled.map(|data| Matrix { n: self.n, data })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Shared text format: order on the first line, then one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.at0(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.at0(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
