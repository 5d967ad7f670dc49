use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix backing every operator in the crate.
pub type CMatrix = DMatrix<Complex64>;

/// A dense complex matrix standing for a bounded operator on a
/// finite-dimensional Hilbert space (or between two of them when
/// rectangular).
///
/// Construction from external data validates shape and finiteness. The
/// arithmetic operators on `&Operator` panic on shape mismatch, the same
/// way `nalgebra` does; use [`Operator::try_mul`] where the shapes come
/// from user input.
#[derive(Clone, PartialEq)]
pub struct Operator(CMatrix);

impl Operator {
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Self::from_matrix(CMatrix::from_row_slice(rows, cols, &entries))
    }

    /// Real-valued entries, row-major.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        Self::from_row_major(
            rows,
            cols,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn from_matrix(matrix: CMatrix) -> Result<Self> {
        let (rows, cols) = matrix.shape();
        if rows == 0 || cols == 0 {
            return Err(Error::Empty { rows, cols });
        }
        for j in 0..cols {
            for i in 0..rows {
                let z = matrix[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self(matrix))
    }

    /// Wraps a matrix produced by internal arithmetic on finite operators.
    pub(crate) fn wrap(matrix: CMatrix) -> Self {
        debug_assert!(matrix.nrows() > 0 && matrix.ncols() > 0);
        Self(matrix)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(rows > 0 && cols > 0, "operator dimensions must be positive");
        Self(CMatrix::from_fn(rows, cols, f))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "operator dimensions must be positive");
        Self(CMatrix::zeros(rows, cols))
    }

    pub fn identity(dim: usize) -> Self {
        assert!(dim > 0, "operator dimension must be positive");
        Self(CMatrix::identity(dim, dim))
    }

    pub fn diag(values: &[Complex64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i] } else { Complex64::new(0.0, 0.0) })
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            Complex64::new(if i == j { values[i] } else { 0.0 }, 0.0)
        })
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.0.shape()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }

    pub fn to_row_major(&self) -> Vec<Complex64> {
        let (rows, cols) = self.shape();
        let mut out = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                out.push(self.0[(i, j)]);
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.scale(factor))
    }

    pub fn try_mul(&self, rhs: &Operator) -> Result<Self> {
        if self.cols() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                op: "multiply",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(self * rhs)
    }

    /// `self^k`, with `self^0 = I`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square("pow")?;
        let mut acc = Self::identity(self.rows());
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    pub(crate) fn require_same_shape(&self, other: &Operator, op: &'static str) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            })
        }
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({}x{})", self.rows(), self.cols())?;
        if f.alternate() {
            for i in 0..self.rows() {
                write!(f, "\n  [")?;
                for j in 0..self.cols() {
                    let z = self.0[(i, j)];
                    write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
                }
                write!(f, " ]")?;
            }
        }
        Ok(())
    }
}

impl<'a> Mul<&'a Operator> for &'a Operator {
    type Output = Operator;

    fn mul(self, rhs: &'a Operator) -> Operator {
        Operator(&self.0 * &rhs.0)
    }
}

impl<'a> Add<&'a Operator> for &'a Operator {
    type Output = Operator;

    fn add(self, rhs: &'a Operator) -> Operator {
        Operator(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a Operator> for &'a Operator {
    type Output = Operator;

    fn sub(self, rhs: &'a Operator) -> Operator {
        Operator(&self.0 - &rhs.0)
    }
}

impl Neg for &Operator {
    type Output = Operator;

    fn neg(self) -> Operator {
        Operator(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes_and_values() {
        assert!(matches!(
            Operator::from_real(0, 2, &[]),
            Err(Error::Empty { .. })
        ));
        assert!(matches!(
            Operator::from_real(2, 2, &[1.0, 2.0, 3.0]),
            Err(Error::EntryCount { expected: 4, actual: 3, .. })
        ));
        assert!(matches!(
            Operator::from_real(1, 2, &[1.0, f64::NAN]),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
    }

    #[test]
    fn row_major_layout() {
        let t = Operator::from_real(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(t.get(0, 2).re, 3.0);
        assert_eq!(t.get(1, 0).re, 4.0);
        assert_eq!(t.to_row_major()[4].re, 5.0);
    }

    #[test]
    fn pow_of_nilpotent() {
        let j = Operator::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(j.pow(0).unwrap(), Operator::identity(2));
        assert_eq!(j.pow(2).unwrap(), Operator::zeros(2, 2));
        assert!(Operator::zeros(2, 3).pow(2).is_err());
    }

    #[test]
    fn try_mul_checks_inner_dimension() {
        let a = Operator::zeros(2, 3);
        let b = Operator::zeros(2, 3);
        assert!(a.try_mul(&b).is_err());
        assert_eq!(a.try_mul(&b.adjoint()).unwrap().shape(), (2, 2));
    }
}
