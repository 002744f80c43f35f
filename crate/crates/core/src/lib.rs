//! Exact Drazin and group inverses of linear combinations `aP + bQ` of two
//! idempotent matrices.
//!
//! * [`elimination`] and [`matrix`]: exact rational kernel.
//! * [`drazin`]: general-purpose Drazin oracle, index, and axiom checks.
//! * [`formulas`]: closed-form inverses for five pair relations.
//! * [`symbolic`]: the same formulas checked in finite quotient algebras.
//! * [`generator`]: seeded construction of pairs in each relation class.
//!
//! All numeric code is generic over [`Field`]; the aliases below fix the
//! scalar to arbitrary-precision rationals.

pub mod drazin;
pub mod elimination;
pub mod error;
pub mod formulas;
pub mod generator;
pub mod json;
pub mod matrix;
pub mod scalar;
pub mod symbolic;

pub use drazin::{
    drazin_oracle, group_inverse, index_of, verify_drazin, verify_group, verify_nilpotent_form,
    DrazinCheck, DrazinResult,
};
pub use elimination::{full_rank_factorize, invert, rank, rref, Rref};
pub use error::{Error, PairMember, Result};
pub use formulas::{
    classify_pair, drazin_by_formula, Branch, CombinationSpec, ConditionClass, FormulaKind,
    FormulaResult, IdempotentPair,
};
pub use generator::{conjugate, gen_pair, random_similarity, GeneratorSpec, SplitMix64};
pub use json::{MatrixJson, PairDocument, PairJson};
pub use matrix::Matrix;
pub use scalar::{parse_rational, Field};

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;
/// Rational with `i64` parts; overflows on large intermediates.
pub type Rational64 = num_rational::Rational64;

pub type RationalMatrix = Matrix<Rational>;
pub type Rational64Matrix = Matrix<Rational64>;
pub type RationalPair = IdempotentPair<Rational>;
pub type RationalSpec = CombinationSpec<Rational>;
