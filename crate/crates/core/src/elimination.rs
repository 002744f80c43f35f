//! Rank-revealing Gauss-Jordan elimination and the factorizations built on it.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, PartialEq, Eq)]
pub struct Rref<T> {
    pub reduced: Matrix<T>,
    pub pivot_columns: Vec<usize>,
}

impl<T: Field> std::fmt::Debug for Rref<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Rref")
            .field("reduced", &self.reduced)
            .field("pivot_columns", &self.pivot_columns)
            .finish()
    }
}

impl<T> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivot_columns.len()
    }
}

/// Row-reduces `a`. The pivot in each column is the first nonzero entry at or
/// below the current pivot row; exact arithmetic needs no magnitude pivoting.
pub fn rref<T: Field>(a: &Matrix<T>) -> Rref<T> {
    let (m, n) = a.shape();
    let mut rows = a.to_rows();
    let mut pivot_columns = Vec::new();
    let mut pivot_row = 0;

    for col in 0..n {
        if pivot_row == m {
            break;
        }
        let Some(found) = (pivot_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(found, pivot_row);

        let pivot = rows[pivot_row][col].clone();
        if !pivot.is_one() {
            for x in rows[pivot_row][col..].iter_mut() {
                *x = x.clone() / pivot.clone();
            }
        }

        let pivot_vals = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_vals[col..]) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }

        pivot_columns.push(col);
        pivot_row += 1;
    }

    let reduced = if m == 0 {
        Matrix::zeros(0, n)
    } else {
        Matrix::from_rows(rows).expect("row lengths preserved by elimination")
    };
    Rref {
        reduced,
        pivot_columns,
    }
}

pub fn rank<T: Field>(a: &Matrix<T>) -> usize {
    rref(a).rank()
}

/// Exact inverse via elimination on `[A | I]`.
pub fn invert<T: Field>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let n = a.square_dim()?;
    let augmented = Matrix::from_blocks(
        a,
        &Matrix::identity(n),
        &Matrix::zeros(0, n),
        &Matrix::zeros(0, n),
    )?;
    let Rref {
        reduced,
        pivot_columns,
    } = rref(&augmented);
    let rank = pivot_columns.iter().take_while(|&&c| c < n).count();
    if rank < n {
        return Err(Error::Singular { rank, dim: n });
    }
    Ok(Matrix::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
}

/// Full-rank factorization `A = B·C`: `B` holds the pivot columns of `A` and
/// `C` the nonzero rows of `rref(A)`. For rank 0 the factors are `n×0` and `0×m`.
pub fn full_rank_factorize<T: Field>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let Rref {
        reduced,
        pivot_columns,
    } = rref(a);
    let b = a.select_columns(&pivot_columns);
    let c = reduced.top_rows(pivot_columns.len());
    (b, c)
}
