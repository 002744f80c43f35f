use serde::Serialize;

use super::algebra::{AlgebraElement, QuotientAlgebra};
use super::word::word;
use crate::error::Result;
use crate::formulas::{ConditionClass, FormulaKind};
use crate::scalar::Field;

/// `X = aP + bQ`, the claimed inverse `M`, and the claimed index bound `k`.
#[derive(Clone)]
pub struct TheoremElement<'a, T> {
    pub x: AlgebraElement<'a, T>,
    pub m: AlgebraElement<'a, T>,
    pub k: u32,
}

pub fn theorem_element<'a, T: Field>(
    algebra: &'a QuotientAlgebra,
    kind: FormulaKind,
    a: &T,
    b: &T,
) -> Result<TheoremElement<'a, T>> {
    let combo = kind.coefficients(a, b)?;
    let x = algebra.from_combination(&[(word("P"), a.clone()), (word("Q"), b.clone())]);
    Ok(TheoremElement {
        x,
        m: algebra.from_combination(&combo),
        k: kind.index_bound(),
    })
}

/// One identity checked in the algebra. `residual` holds `lhs - rhs` in the
/// basis when the identity fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<String>>,
}

impl IdentityCheck {
    fn compare<T: Field>(name: &str, lhs: &AlgebraElement<'_, T>, rhs: &AlgebraElement<'_, T>) -> Self {
        let diff = lhs - rhs;
        let holds = diff.is_zero();
        Self {
            name: name.to_string(),
            holds,
            residual: (!holds).then(|| diff.coefficients().iter().map(ToString::to_string).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicReport {
    pub formula: FormulaKind,
    pub class: ConditionClass,
    pub a: String,
    pub b: String,
    pub k: u32,
    pub basis: Vec<String>,
    pub inverse: String,
    pub inverse_coefficients: Vec<String>,
    /// `XM = MX`, `MXM = M`, `X^(k+1) M = X^k`.
    pub checks: Vec<IdentityCheck>,
    /// Further identities recorded for information; they do not affect `passed`.
    pub supplementary: Vec<IdentityCheck>,
}

impl SymbolicReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn power(base: &str, k: u32) -> String {
    match k {
        0 => "I".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

/// Checks the three Drazin identities for `kind` at the scalars `(a, b)` in
/// the quotient algebra of its class.
pub fn verify_theorem_symbolically<T: Field>(kind: FormulaKind, a: &T, b: &T) -> Result<SymbolicReport> {
    let algebra = QuotientAlgebra::build(kind.class())?;
    let TheoremElement { x, m, k } = theorem_element(&algebra, kind, a, b)?;

    let xm = &x * &m;
    let mx = &m * &x;
    let xk = x.pow(k);
    let checks = vec![
        IdentityCheck::compare("XM = MX", &xm, &mx),
        IdentityCheck::compare("MXM = M", &(&mx * &m), &m),
        IdentityCheck::compare(
            &format!("{} M = {}", power("X", k + 1), power("X", k)),
            &(&(&xk * &x) * &m),
            &xk,
        ),
    ];

    let mut supplementary = Vec::new();
    match kind {
        FormulaKind::PqpPqDiff => {
            let x2 = x.pow(2);
            supplementary.push(IdentityCheck::compare("X^2 M = M", &(&x2 * &m), &m));
            supplementary.push(IdentityCheck::compare("X M = X^2", &xm, &x2));
        }
        FormulaKind::PqpPqSum => {
            supplementary.push(IdentityCheck::compare("XMX = X", &(&xm * &x), &x));
        }
        FormulaKind::PqpPDiff => {
            // ind = 3 exactly iff X^3 M != X^2, i.e. iff P + QPQ != PQ + QP.
            let x2 = x.pow(2);
            supplementary.push(IdentityCheck::compare("X^3 M = X^2", &(&x2 * &xm), &x2));
        }
        _ => {}
    }

    Ok(SymbolicReport {
        formula: kind,
        class: kind.class(),
        a: a.to_string(),
        b: b.to_string(),
        k,
        basis: algebra.basis().iter().map(ToString::to_string).collect(),
        inverse: m.to_string(),
        inverse_coefficients: m.coefficients().iter().map(ToString::to_string).collect(),
        checks,
        supplementary,
    })
}
