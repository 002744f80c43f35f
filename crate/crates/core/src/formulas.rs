//! Closed-form Drazin and group inverses of `aP + bQ` for idempotent pairs
//! satisfying one of five multiplicative relations.
//!
//! Each formula is stored once as a [`Combination`] of the words
//! `I, P, Q, PQ, QP, QPQ`; the matrix route here and the quotient-algebra
//! route in [`crate::symbolic`] both evaluate the same coefficients.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, PairMember, Result};
use crate::matrix::Matrix;
use crate::scalar::Field;
use crate::symbolic::word::{word, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConditionClass {
    /// `PQP = 0`
    #[serde(rename = "PQP_ZERO")]
    PqpZero,
    /// `PQP = P`
    #[serde(rename = "PQP_P")]
    PqpP,
    /// `PQP = Q`
    #[serde(rename = "PQP_Q")]
    PqpQ,
    /// `PQ = QP`
    #[serde(rename = "COMMUTE")]
    Commute,
    /// `PQP = PQ`
    #[serde(rename = "PQP_PQ")]
    PqpPq,
}

impl ConditionClass {
    pub const ALL: [ConditionClass; 5] = [
        ConditionClass::PqpZero,
        ConditionClass::PqpP,
        ConditionClass::PqpQ,
        ConditionClass::Commute,
        ConditionClass::PqpPq,
    ];

    /// Order in which [`drazin_by_formula`] tries the classes.
    pub const DISPATCH_PRIORITY: [ConditionClass; 5] = [
        ConditionClass::Commute,
        ConditionClass::PqpQ,
        ConditionClass::PqpP,
        ConditionClass::PqpPq,
        ConditionClass::PqpZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConditionClass::PqpZero => "PQP_ZERO",
            ConditionClass::PqpP => "PQP_P",
            ConditionClass::PqpQ => "PQP_Q",
            ConditionClass::Commute => "COMMUTE",
            ConditionClass::PqpPq => "PQP_PQ",
        }
    }

    pub fn equation(self) -> &'static str {
        match self {
            ConditionClass::PqpZero => "PQP = 0",
            ConditionClass::PqpP => "PQP = P",
            ConditionClass::PqpQ => "PQP = Q",
            ConditionClass::Commute => "PQ = QP",
            ConditionClass::PqpPq => "PQP = PQ",
        }
    }

    pub fn holds<T: Field>(self, pair: &IdempotentPair<T>) -> bool {
        match self {
            ConditionClass::PqpZero => pair.pqp.is_zero(),
            ConditionClass::PqpP => pair.pqp == pair.p,
            ConditionClass::PqpQ => pair.pqp == pair.q,
            ConditionClass::Commute => pair.pq == pair.qp,
            ConditionClass::PqpPq => pair.pqp == pair.pq,
        }
    }
}

impl fmt::Display for ConditionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConditionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        ConditionClass::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown condition class {s:?}")))
    }
}

/// Which side of the `a + b = 0` split a formula uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    #[serde(rename = "a+b!=0")]
    SumNonzero,
    #[serde(rename = "a+b=0")]
    SumZero,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::SumNonzero => "a+b!=0",
            Branch::SumZero => "a+b=0",
        })
    }
}

/// Nonzero scalars `a`, `b` of the combination `aP + bQ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinationSpec<T> {
    a: T,
    b: T,
}

impl<T: Field> CombinationSpec<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroScalar {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        Ok(Self { a, b })
    }

    pub fn ints(a: i64, b: i64) -> Result<Self> {
        Self::new(T::from_int(a), T::from_int(b))
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn branch(&self) -> Branch {
        if (self.a.clone() + self.b.clone()).is_zero() {
            Branch::SumZero
        } else {
            Branch::SumNonzero
        }
    }

    /// `(c·a, c·b)`.
    pub fn scaled(&self, c: &T) -> Result<Self> {
        Self::new(self.a.clone() * c.clone(), self.b.clone() * c.clone())
    }

    pub fn combine(&self, p: &Matrix<T>, q: &Matrix<T>) -> Matrix<T> {
        p.scale(&self.a) + q.scale(&self.b)
    }
}

/// A linear combination of words with field coefficients.
pub type Combination<T> = Vec<(Word, T)>;

/// Every closed-form inverse provided for the five classes, split by branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FormulaKind {
    /// `PQP = 0`, any nonzero `a`, `b`.
    PqpZero,
    /// `PQP = P`, `a + b != 0`.
    PqpP,
    /// `PQP = P`, `a + b = 0`: `(1/a) Q(P - I)Q`.
    PqpPDiff,
    /// `PQ = QP`, `a + b != 0`.
    Commute,
    /// `PQ = QP`, `a + b = 0`: `(1/a)(P - Q)`.
    CommuteDiff,
    /// `PQP = Q`, `a + b != 0`.
    PqpQ,
    /// `PQP = Q`, `a + b = 0`.
    PqpQDiff,
    /// `PQP = PQ`, `a = b`: group inverse of the sum.
    PqpPqSum,
    /// `PQP = PQ`, `a = -b`: Drazin inverse of the difference.
    PqpPqDiff,
}

impl FormulaKind {
    pub const ALL: [FormulaKind; 9] = [
        FormulaKind::PqpZero,
        FormulaKind::PqpP,
        FormulaKind::PqpPDiff,
        FormulaKind::Commute,
        FormulaKind::CommuteDiff,
        FormulaKind::PqpQ,
        FormulaKind::PqpQDiff,
        FormulaKind::PqpPqSum,
        FormulaKind::PqpPqDiff,
    ];

    /// Identifier used on the command line.
    pub fn id(self) -> &'static str {
        match self {
            FormulaKind::PqpZero => "pqp-zero",
            FormulaKind::PqpP => "pqp-p",
            FormulaKind::PqpPDiff => "pqp-p-diff",
            FormulaKind::Commute => "commute",
            FormulaKind::CommuteDiff => "commute-diff",
            FormulaKind::PqpQ => "pqp-q",
            FormulaKind::PqpQDiff => "pqp-q-diff",
            FormulaKind::PqpPqSum => "pqp-pq-sum",
            FormulaKind::PqpPqDiff => "pqp-pq-diff",
        }
    }

    pub fn class(self) -> ConditionClass {
        match self {
            FormulaKind::PqpZero => ConditionClass::PqpZero,
            FormulaKind::PqpP | FormulaKind::PqpPDiff => ConditionClass::PqpP,
            FormulaKind::Commute | FormulaKind::CommuteDiff => ConditionClass::Commute,
            FormulaKind::PqpQ | FormulaKind::PqpQDiff => ConditionClass::PqpQ,
            FormulaKind::PqpPqSum | FormulaKind::PqpPqDiff => ConditionClass::PqpPq,
        }
    }

    /// Upper bound on `ind(aP + bQ)` guaranteed alongside the formula.
    pub fn index_bound(self) -> u32 {
        match self {
            FormulaKind::PqpZero
            | FormulaKind::Commute
            | FormulaKind::CommuteDiff
            | FormulaKind::PqpQ
            | FormulaKind::PqpQDiff
            | FormulaKind::PqpPqSum => 1,
            FormulaKind::PqpP | FormulaKind::PqpPqDiff => 2,
            FormulaKind::PqpPDiff => 3,
        }
    }

    /// The branch this formula requires, if it branches on `a + b`.
    pub fn branch(self) -> Option<Branch> {
        match self {
            FormulaKind::PqpZero => None,
            FormulaKind::PqpP | FormulaKind::Commute | FormulaKind::PqpQ | FormulaKind::PqpPqSum => {
                Some(Branch::SumNonzero)
            }
            FormulaKind::PqpPDiff
            | FormulaKind::CommuteDiff
            | FormulaKind::PqpQDiff
            | FormulaKind::PqpPqDiff => Some(Branch::SumZero),
        }
    }

    /// Picks the formula of `class` that covers `spec`.
    pub fn select<T: Field>(class: ConditionClass, spec: &CombinationSpec<T>) -> Result<Self> {
        let zero_sum = spec.branch() == Branch::SumZero;
        Ok(match class {
            ConditionClass::PqpZero => FormulaKind::PqpZero,
            ConditionClass::PqpP if zero_sum => FormulaKind::PqpPDiff,
            ConditionClass::PqpP => FormulaKind::PqpP,
            ConditionClass::Commute if zero_sum => FormulaKind::CommuteDiff,
            ConditionClass::Commute => FormulaKind::Commute,
            ConditionClass::PqpQ if zero_sum => FormulaKind::PqpQDiff,
            ConditionClass::PqpQ => FormulaKind::PqpQ,
            ConditionClass::PqpPq if zero_sum => FormulaKind::PqpPqDiff,
            ConditionClass::PqpPq if spec.a == spec.b => FormulaKind::PqpPqSum,
            ConditionClass::PqpPq => {
                return Err(Error::UnsupportedCombination {
                    class,
                    a: spec.a.to_string(),
                    b: spec.b.to_string(),
                })
            }
        })
    }

    fn check_scalars<T: Field>(self, a: &T, b: &T) -> Result<()> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroScalar {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        let sum_zero = (a.clone() + b.clone()).is_zero();
        let ok = match self {
            FormulaKind::PqpZero => true,
            FormulaKind::PqpPqSum => a == b,
            _ => match self.branch() {
                Some(Branch::SumZero) => sum_zero,
                _ => !sum_zero,
            },
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BranchViolation(format!(
                "{} does not cover a = {a}, b = {b}",
                self.id()
            )))
        }
    }

    /// Coefficients of the claimed inverse of `aP + bQ` over the words
    /// `P, Q, PQ, QP, QPQ`.
    pub fn coefficients<T: Field>(self, a: &T, b: &T) -> Result<Combination<T>> {
        self.check_scalars(a, b)?;
        let one = T::one();
        let int = T::from_int;
        let inv_a = one.clone() / a.clone();
        let inv_b = one.clone() / b.clone();
        let c = |s: &str, x: T| (word(s), x);
        Ok(match self {
            FormulaKind::PqpZero => {
                let cross = -(inv_a.clone() + inv_b.clone());
                vec![
                    c("P", inv_a.clone()),
                    c("Q", inv_b.clone()),
                    c("PQ", cross.clone()),
                    c("QP", cross),
                    c("QPQ", inv_a + int(2) * inv_b),
                ]
            }
            FormulaKind::PqpP => {
                let s = a.clone() + b.clone();
                let s3 = s.clone() * s.clone() * s;
                let mixed = a.clone() * b.clone() / s3.clone();
                vec![
                    c("P", a.clone() * a.clone() / s3.clone()),
                    c("Q", inv_b.clone()),
                    c("PQ", mixed.clone()),
                    c("QP", mixed),
                    c("QPQ", b.clone() * b.clone() / s3 - inv_b),
                ]
            }
            FormulaKind::PqpPDiff => vec![c("Q", -inv_a.clone()), c("QPQ", inv_a)],
            FormulaKind::Commute => {
                let s = a.clone() + b.clone();
                vec![
                    c("P", inv_a.clone()),
                    c("Q", inv_b.clone()),
                    c("PQ", one / s - inv_a - inv_b),
                ]
            }
            FormulaKind::CommuteDiff | FormulaKind::PqpQDiff => {
                vec![c("P", inv_a.clone()), c("Q", -inv_a)]
            }
            FormulaKind::PqpQ => {
                let s = a.clone() + b.clone();
                vec![c("P", inv_a.clone()), c("Q", one / s - inv_a)]
            }
            FormulaKind::PqpPqSum => {
                // (1/a)(P + Q - 2QP - 3/4 PQ + 5/4 QPQ)
                let q = |n: i64, d: i64| T::from_frac(n, d).expect("nonzero denominator") * inv_a.clone();
                vec![
                    c("P", q(1, 1)),
                    c("Q", q(1, 1)),
                    c("PQ", q(-3, 4)),
                    c("QP", q(-2, 1)),
                    c("QPQ", q(5, 4)),
                ]
            }
            FormulaKind::PqpPqDiff => {
                // (1/a)(P - Q - PQ + QPQ)
                vec![
                    c("P", inv_a.clone()),
                    c("Q", -inv_a.clone()),
                    c("PQ", -inv_a.clone()),
                    c("QPQ", inv_a),
                ]
            }
        })
    }
}

impl fmt::Display for FormulaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FormulaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaKind::ALL
            .into_iter()
            .find(|k| k.id() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown formula {s:?}")))
    }
}

/// Two idempotents of equal dimension with their short products cached.
#[derive(Clone)]
pub struct IdempotentPair<T> {
    pub p: Matrix<T>,
    pub q: Matrix<T>,
    pub pq: Matrix<T>,
    pub qp: Matrix<T>,
    pub pqp: Matrix<T>,
    pub qpq: Matrix<T>,
}

impl<T: Field> std::fmt::Debug for IdempotentPair<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdempotentPair")
            .field("p", &self.p)
            .field("q", &self.q)
            .finish()
    }
}

impl<T: Field> IdempotentPair<T> {
    pub fn new(p: &Matrix<T>, q: &Matrix<T>) -> Result<Self> {
        p.square_dim()?;
        q.square_dim()?;
        if p.shape() != q.shape() {
            return Err(Error::DimensionMismatch {
                op: "idempotent pair",
                left: p.shape(),
                right: q.shape(),
            });
        }
        if !p.is_idempotent() {
            return Err(Error::NotIdempotent(PairMember::P));
        }
        if !q.is_idempotent() {
            return Err(Error::NotIdempotent(PairMember::Q));
        }
        let pq = p * q;
        let qp = q * p;
        let pqp = &pq * p;
        let qpq = &qp * q;
        Ok(Self {
            p: p.clone(),
            q: q.clone(),
            pq,
            qp,
            pqp,
            qpq,
        })
    }

    pub fn dim(&self) -> usize {
        self.p.rows()
    }

    pub fn identity(&self) -> Matrix<T> {
        Matrix::identity(self.dim())
    }

    pub fn classes(&self) -> BTreeSet<ConditionClass> {
        ConditionClass::ALL
            .into_iter()
            .filter(|c| c.holds(self))
            .collect()
    }

    pub fn require(&self, class: ConditionClass) -> Result<()> {
        if class.holds(self) {
            Ok(())
        } else {
            Err(Error::ConditionViolated(class))
        }
    }

    /// Matrix of an arbitrary word in `P` and `Q`.
    pub fn eval_word(&self, w: &Word) -> Matrix<T> {
        let cached = match w.to_string().as_str() {
            "I" => Some(self.identity()),
            "P" => Some(self.p.clone()),
            "Q" => Some(self.q.clone()),
            "PQ" => Some(self.pq.clone()),
            "QP" => Some(self.qp.clone()),
            "PQP" => Some(self.pqp.clone()),
            "QPQ" => Some(self.qpq.clone()),
            _ => None,
        };
        cached.unwrap_or_else(|| {
            w.letters().iter().fold(self.identity(), |acc, l| match l {
                Letter::P => &acc * &self.p,
                Letter::Q => &acc * &self.q,
            })
        })
    }

    pub fn eval(&self, combo: &[(Word, T)]) -> Matrix<T> {
        combo.iter().fold(Matrix::zeros(self.dim(), self.dim()), |acc, (w, c)| {
            acc + self.eval_word(w).scale(c)
        })
    }

    pub fn combine(&self, spec: &CombinationSpec<T>) -> Matrix<T> {
        spec.combine(&self.p, &self.q)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FormulaResult<T> {
    pub inverse: Matrix<T>,
    pub index_bound: u32,
    pub class_used: ConditionClass,
    pub kind: FormulaKind,
    /// `None` for formulas that do not branch on `a + b`.
    pub branch: Option<Branch>,
}

impl<T: Field> std::fmt::Debug for FormulaResult<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FormulaResult")
            .field("inverse", &self.inverse)
            .field("index_bound", &self.index_bound)
            .field("class_used", &self.class_used)
            .field("kind", &self.kind)
            .field("branch", &self.branch)
            .finish()
    }
}

fn apply_formula<T: Field>(
    pair: &IdempotentPair<T>,
    kind: FormulaKind,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    pair.require(kind.class())?;
    let combo = kind.coefficients(&spec.a, &spec.b)?;
    Ok(FormulaResult {
        inverse: pair.eval(&combo),
        index_bound: kind.index_bound(),
        class_used: kind.class(),
        kind,
        branch: kind.branch(),
    })
}

fn formula_for_class<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    class: ConditionClass,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    let pair = IdempotentPair::new(p, q)?;
    pair.require(class)?;
    apply_formula(&pair, FormulaKind::select(class, spec)?, spec)
}

pub fn classify_pair<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<BTreeSet<ConditionClass>> {
    Ok(IdempotentPair::new(p, q)?.classes())
}

/// Inverse of `aP + bQ` under `PQP = 0`; valid for every nonzero `a`, `b`.
pub fn drazin_pqp_zero<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    formula_for_class(p, q, ConditionClass::PqpZero, spec)
}

/// Under `PQP = 0`: `ind(aP + bQ) = 0` iff `P + Q + QPQ = I + PQ + QP`.
pub fn ind_zero_pqp_zero<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<bool> {
    let pair = IdempotentPair::new(p, q)?;
    pair.require(ConditionClass::PqpZero)?;
    Ok(&pair.p + &pair.q + &pair.qpq == pair.identity() + &pair.pq + &pair.qp)
}

/// Inverse of `aP + bQ` under `PQP = P`; index bound 2, or 3 when `a + b = 0`.
pub fn drazin_pqp_p<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    formula_for_class(p, q, ConditionClass::PqpP, spec)
}

/// Under `PQP = P`: `ind(a(P - Q)) = 3` iff `P + QPQ != PQ + QP`.
pub fn ind3_exact_pqp_p<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<bool> {
    let pair = IdempotentPair::new(p, q)?;
    pair.require(ConditionClass::PqpP)?;
    Ok(&pair.p + &pair.qpq != &pair.pq + &pair.qp)
}

pub fn drazin_commute<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    formula_for_class(p, q, ConditionClass::Commute, spec)
}

/// Under `PQ = QP`: invertibility of `aP + bQ`, i.e. `P + Q = I + PQ` when
/// `a + b != 0` and `P + Q = I + 2PQ` when `a + b = 0`.
pub fn ind_zero_commute<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    spec: &CombinationSpec<T>,
) -> Result<bool> {
    let pair = IdempotentPair::new(p, q)?;
    pair.require(ConditionClass::Commute)?;
    let lhs = &pair.p + &pair.q;
    let rhs = match spec.branch() {
        Branch::SumNonzero => pair.identity() + &pair.pq,
        Branch::SumZero => pair.identity() + pair.pq.scale(&T::from_int(2)),
    };
    Ok(lhs == rhs)
}

pub fn drazin_pqp_q<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    formula_for_class(p, q, ConditionClass::PqpQ, spec)
}

/// Under `PQP = PQ`, `(aP + bQ)` with `a = b` or `a = -b`.
pub fn drazin_pqp_pq<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    formula_for_class(p, q, ConditionClass::PqpPq, spec)
}

/// Under `PQP = PQ`: the group inverse of `P + Q`.
pub fn sum_group_pqp_pq<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<Matrix<T>> {
    let spec = CombinationSpec::ints(1, 1)?;
    Ok(formula_for_class(p, q, ConditionClass::PqpPq, &spec)?.inverse)
}

/// Under `PQP = PQ`: `(P - Q)^D = P - Q - PQ + QPQ` with index at most 2.
pub fn diff_drazin_pqp_pq<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<FormulaResult<T>> {
    let spec = CombinationSpec::ints(1, -1)?;
    formula_for_class(p, q, ConditionClass::PqpPq, &spec)
}

/// Under `PQP = PQ`: `P - Q` has a group inverse iff `PQ = QPQ`.
pub fn group_exists_diff_pqp_pq<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<bool> {
    let pair = IdempotentPair::new(p, q)?;
    pair.require(ConditionClass::PqpPq)?;
    Ok(pair.pq == pair.qpq)
}

/// Under `PQP = P`: `P + Q` has a group inverse iff `P + QPQ = PQ + QP`.
pub fn group_exists_sum_pqp_p<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<bool> {
    let pair = IdempotentPair::new(p, q)?;
    pair.require(ConditionClass::PqpP)?;
    Ok(&pair.p + &pair.qpq == &pair.pq + &pair.qp)
}

/// Under `PQP = P`: `P - Q` has a group inverse iff `P = QPQ`.
pub fn group_exists_diff_pqp_p<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<bool> {
    let pair = IdempotentPair::new(p, q)?;
    pair.require(ConditionClass::PqpP)?;
    Ok(pair.p == pair.qpq)
}

/// For any idempotent pair: `(P - Q)^D = P - Q` iff `PQP = QPQ`.
pub fn diff_fixed_point_check<T: Field>(p: &Matrix<T>, q: &Matrix<T>) -> Result<bool> {
    let pair = IdempotentPair::new(p, q)?;
    Ok(pair.pqp == pair.qpq)
}

/// Classifies the pair and applies the first class in
/// [`ConditionClass::DISPATCH_PRIORITY`] whose formulas cover `spec`.
pub fn drazin_by_formula<T: Field>(
    p: &Matrix<T>,
    q: &Matrix<T>,
    spec: &CombinationSpec<T>,
) -> Result<FormulaResult<T>> {
    let pair = IdempotentPair::new(p, q)?;
    let classes = pair.classes();
    ConditionClass::DISPATCH_PRIORITY
        .into_iter()
        .filter(|c| classes.contains(c))
        .find_map(|c| FormulaKind::select(c, spec).ok())
        .map_or(Err(Error::NoApplicableCondition), |kind| {
            apply_formula(&pair, kind, spec)
        })
}
