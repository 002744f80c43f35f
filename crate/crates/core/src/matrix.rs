//! Dense row-major matrices over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "construct",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from row vectors. An empty list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    op: "from_rows",
                    left: (n_rows, n_cols),
                    right: (1, row.len()),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    /// Convenience constructor from small integer rows; panics on ragged input.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| T::from_int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { T::zero() })
    }

    /// Assembles `[[tl, tr], [bl, br]]`.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Result<Self> {
        let mismatch = |a: &Self, b: &Self| Error::DimensionMismatch {
            op: "from_blocks",
            left: a.shape(),
            right: b.shape(),
        };
        if tl.rows != tr.rows {
            return Err(mismatch(tl, tr));
        }
        if bl.rows != br.rows {
            return Err(mismatch(bl, br));
        }
        if tl.cols != bl.cols {
            return Err(mismatch(tl, bl));
        }
        if tr.cols != br.cols {
            return Err(mismatch(tr, br));
        }
        let split_r = tl.rows;
        let split_c = tl.cols;
        Ok(Self::from_fn(tl.rows + bl.rows, tl.cols + tr.cols, |i, j| {
            match (i < split_r, j < split_c) {
                (true, true) => tl.get(i, j).clone(),
                (true, false) => tr.get(i, j - split_c).clone(),
                (false, true) => bl.get(i - split_r, j).clone(),
                (false, false) => br.get(i - split_r, j - split_c).clone(),
            }
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Dimension of a square matrix, or `NonSquare`.
    pub fn square_dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && &(self * self) == self
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Keeps the first `n` rows.
    pub fn top_rows(&self, n: usize) -> Self {
        Self::from_fn(n, self.cols, |i, j| self.get(i, j).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
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

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        Ok(self.zip_with(other, |x, y| x.clone() + y.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        Ok(self.zip_with(other, |x, y| x.clone() - y.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    /// `self^exp` with `self^0 = I`.
    pub fn pow(&self, exp: u32) -> Result<Self> {
        let n = self.square_dim()?;
        let mut result = Self::identity(n);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| f(x, y)).collect(),
        }
    }
}

// Operator forms panic on shape mismatch; use the `try_*` methods where the
// shapes are not already known to agree.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Field> $trait<&Matrix<T>> for &Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: &Matrix<T>) -> Matrix<T> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<T: Field> $trait<Matrix<T>> for Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: Matrix<T>) -> Matrix<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Field> $trait<&Matrix<T>> for Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: &Matrix<T>) -> Matrix<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Field> $trait<Matrix<T>> for &Matrix<T> {
            type Output = Matrix<T>;
            fn $method(self, rhs: Matrix<T>) -> Matrix<T> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<T: Field> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        -&self
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[] ({}x{})", self.rows, self.cols);
        }
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
