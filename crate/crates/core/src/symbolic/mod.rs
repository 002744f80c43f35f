//! Symbolic verification in the quotient algebra generated by two idempotent
//! symbols modulo a condition relation.
//!
//! A formula that satisfies the Drazin identities here holds for every pair
//! of idempotents obeying the relation, in any associative algebra.

pub mod algebra;
pub mod rewrite;
pub mod theorems;
pub mod word;

pub use algebra::{AlgebraElement, QuotientAlgebra, MAX_BASIS};
pub use rewrite::{CriticalPair, RewriteSystem, Rule, Strategy};
pub use theorems::{theorem_element, verify_theorem_symbolically, IdentityCheck, SymbolicReport, TheoremElement};
pub use word::{word, Letter, Word};
