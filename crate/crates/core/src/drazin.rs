//! General-purpose Drazin inverse, index, and axiom verifiers.
//!
//! The inverse is computed by the full-rank factorization recursion
//! `A^D = B ((C B)^D)^2 C` where `A = B C`; the index is computed separately
//! from the rank chain `rank(A^k) = rank(A^{k+1})`, so the two cross-check
//! each other.

use serde::Serialize;

use crate::elimination::{full_rank_factorize, invert, rank};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct DrazinResult<T> {
    pub inverse: Matrix<T>,
    pub index: u32,
}

impl<T: Field> std::fmt::Debug for DrazinResult<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DrazinResult")
            .field("inverse", &self.inverse)
            .field("index", &self.index)
            .finish()
    }
}

/// Smallest `k >= 0` with `rank(A^k) = rank(A^{k+1})`.
pub fn index_of<T: Field>(a: &Matrix<T>) -> Result<u32> {
    let n = a.square_dim()?;
    let mut power = Matrix::identity(n);
    let mut current = n;
    let mut k = 0;
    loop {
        let next_power = &power * a;
        let next = rank(&next_power);
        if next == current {
            return Ok(k);
        }
        power = next_power;
        current = next;
        k += 1;
    }
}

pub fn drazin_oracle<T: Field>(a: &Matrix<T>) -> Result<DrazinResult<T>> {
    let index = index_of(a)?;
    Ok(DrazinResult {
        inverse: drazin_inverse(a),
        index,
    })
}

fn drazin_inverse<T: Field>(a: &Matrix<T>) -> Matrix<T> {
    let n = a.rows();
    if a.is_zero() {
        return Matrix::zeros(n, n);
    }
    match invert(a) {
        Ok(inv) => inv,
        Err(_) => {
            // rank(A) < n, so C·B is strictly smaller than A.
            let (b, c) = full_rank_factorize(a);
            let inner = drazin_inverse(&(&c * &b));
            &b * &(&(&inner * &inner) * &c)
        }
    }
}

/// Outcome of checking the three Drazin identities separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DrazinCheck {
    /// `B A B = B`
    pub reflexive: bool,
    /// `A B = B A`
    pub commutes: bool,
    /// `A^{k+1} B = A^k`
    pub index_identity: bool,
}

impl DrazinCheck {
    pub fn passed(&self) -> bool {
        self.reflexive && self.commutes && self.index_identity
    }

    /// Names of the identities that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.reflexive {
            out.push("BAB = B");
        }
        if !self.commutes {
            out.push("AB = BA");
        }
        if !self.index_identity {
            out.push("A^(k+1)B = A^k");
        }
        out
    }
}

fn check_pair_shape<T: Field>(a: &Matrix<T>, b: &Matrix<T>, op: &'static str) -> Result<usize> {
    let n = a.square_dim()?;
    b.square_dim()?;
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op,
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(n)
}

pub fn verify_drazin<T: Field>(a: &Matrix<T>, b: &Matrix<T>, k: u32) -> Result<DrazinCheck> {
    check_pair_shape(a, b, "verify_drazin")?;
    let ab = a * b;
    let ak = a.pow(k)?;
    Ok(DrazinCheck {
        reflexive: &(b * &ab) == b,
        commutes: ab == b * a,
        index_identity: &ak * &ab == ak,
    })
}

/// `BAB = B`, `AB = BA`, and `A - A^2 B` nilpotent.
pub fn verify_nilpotent_form<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool> {
    let n = check_pair_shape(a, b, "verify_nilpotent_form")?;
    let ab = a * b;
    if &(b * &ab) != b || ab != b * a {
        return Ok(false);
    }
    let residual = a - &(a * &ab);
    Ok(residual.pow(n as u32)?.is_zero())
}

/// `BAB = B`, `AB = BA`, `ABA = A`.
pub fn verify_group<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool> {
    check_pair_shape(a, b, "verify_group")?;
    let ab = a * b;
    Ok(&(b * &ab) == b && ab == b * a && &(&ab * a) == a)
}

/// The group inverse, present exactly when `ind(A) <= 1`.
pub fn group_inverse<T: Field>(a: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    if index_of(a)? <= 1 {
        Ok(Some(drazin_inverse(a)))
    } else {
        Ok(None)
    }
}
