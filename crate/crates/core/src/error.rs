use thiserror::Error;

use crate::formulas::ConditionClass;

/// Which member of an idempotent pair failed a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMember {
    P,
    Q,
}

impl std::fmt::Display for PairMember {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairMember::P => f.write_str("P"),
            PairMember::Q => f.write_str("Q"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is singular (rank {rank} < {dim})")]
    Singular { rank: usize, dim: usize },

    #[error("{0} is not idempotent")]
    NotIdempotent(PairMember),

    #[error("pair does not satisfy {0}")]
    ConditionViolated(ConditionClass),

    #[error("no condition class with a closed-form inverse applies to this pair")]
    NoApplicableCondition,

    #[error("{class} formula has no branch for a = {a}, b = {b}")]
    UnsupportedCombination {
        class: ConditionClass,
        a: String,
        b: String,
    },

    #[error("scalars must be nonzero (a = {a}, b = {b})")]
    ZeroScalar { a: String, b: String },

    #[error("branch violation: {0}")]
    BranchViolation(String),

    #[error("elements belong to different quotient algebras")]
    AlgebraMismatch,

    #[error("quotient algebra closure exceeded {cap} basis words")]
    ClosureDiverged { cap: usize },

    #[error("rewrite system for {class} is not locally confluent at {word}")]
    NotConfluent { class: ConditionClass, word: String },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
