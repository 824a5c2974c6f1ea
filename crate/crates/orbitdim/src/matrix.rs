//! Dense matrices over exact rationals, with a float mirror for the
//! numerical rank cross-check.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Row-major matrix of arbitrary-precision rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<BigRational>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        assert!(columns.iter().all(|c| c.len() == rows));
        let mut m = Self::zero(rows, cols);
        for (c, column) in columns.iter().enumerate() {
            for (r, value) in column.iter().enumerate() {
                m.data[r * cols + c] = value.clone();
            }
        }
        m
    }

    pub fn from_rows(rows_data: Vec<Vec<BigRational>>) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, Vec::len);
        assert!(rows_data.iter().all(|r| r.len() == cols));
        Self {
            rows,
            cols,
            data: rows_data.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigRational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    /// Returns a copy with extra columns appended on the right.
    pub fn with_appended_columns(&self, columns: &[Vec<BigRational>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == self.rows));
        let cols = self.cols + columns.len();
        let mut m = Self::zero(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * cols + c] = self.entry(r, c).clone();
            }
            for (k, column) in columns.iter().enumerate() {
                m.data[r * cols + self.cols + k] = column[r].clone();
            }
        }
        m
    }

    pub fn transposed(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[c * self.rows + r] = self.entry(r, c).clone();
            }
        }
        m
    }

    /// Clears denominators column by column, yielding a row-major integer
    /// matrix with the same rank: each column is scaled by the lcm of its
    /// denominators, which never changes linear independence.
    pub fn integerized(&self) -> IntMatrix {
        let mut data = vec![BigInt::zero(); self.rows * self.cols];
        for c in 0..self.cols {
            let mut lcm = BigInt::one();
            for r in 0..self.rows {
                lcm = lcm.lcm(self.entry(r, c).denom());
            }
            for r in 0..self.rows {
                let q = self.entry(r, c);
                data[r * self.cols + c] = q.numer() * (&lcm / q.denom());
            }
        }
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Float mirror for the SVD cross-check path.
    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.entry(r, c).to_f64().unwrap_or(f64::NAN)
        })
    }
}

/// Row-major matrix of arbitrary-precision integers used by the
/// fraction-free elimination.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    pub(crate) rows: usize,
    pub(crate) cols: usize,
    pub(crate) data: Vec<BigInt>,
}

impl IntMatrix {
    pub(crate) fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}
