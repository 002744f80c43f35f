use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rewrite::{RewriteSystem, Strategy};
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::formulas::{ConditionClass, IdempotentPair};
use crate::matrix::Matrix;
use crate::scalar::Field;

/// Hard cap on the basis size; every supported class closes well below it.
pub const MAX_BASIS: usize = 16;

/// Algebra generated by two idempotents modulo one class relation, with a
/// basis of normal-form words and a multiplication table computed by closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    system: RewriteSystem,
    basis: Vec<Word>,
    // table[i][j] is the basis index of basis[i]·basis[j], or None for zero.
    table: Vec<Vec<Option<usize>>>,
}

impl QuotientAlgebra {
    pub fn build(class: ConditionClass) -> Result<Self> {
        Self::build_with_cap(class, MAX_BASIS)
    }

    fn build_with_cap(class: ConditionClass, cap: usize) -> Result<Self> {
        let system = RewriteSystem::for_class(class);
        system.check_local_confluence()?;

        let mut words: BTreeSet<Word> = [Word::unit(), Word::new(vec![Letter::P]), Word::new(vec![Letter::Q])]
            .iter()
            .filter_map(|w| system.normalize(w, Strategy::Leftmost))
            .collect();
        loop {
            let current: Vec<Word> = words.iter().cloned().collect();
            let mut grew = false;
            for x in &current {
                for y in &current {
                    if let Some(w) = system.normalize(&x.concat(y), Strategy::Leftmost) {
                        grew |= words.insert(w);
                    }
                }
            }
            if words.len() > cap {
                return Err(Error::ClosureDiverged { cap });
            }
            if !grew {
                break;
            }
        }

        let basis: Vec<Word> = words.into_iter().collect();
        let table = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| {
                        system
                            .normalize(&x.concat(y), Strategy::Leftmost)
                            .map(|w| basis.binary_search(&w).expect("basis closed under products"))
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            system,
            basis,
            table,
        })
    }

    pub fn class(&self) -> ConditionClass {
        self.system.class()
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of_word(&self, w: &Word) -> Option<usize> {
        self.basis.binary_search(w).ok()
    }

    /// Basis index of `basis[i]·basis[j]`, `None` when the product is zero.
    pub fn product_index(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j]
    }

    /// Coefficient vector of `basis[i]·basis[j]`.
    pub fn structure_constants<T: Field>(&self, i: usize, j: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim()];
        if let Some(k) = self.table[i][j] {
            v[k] = T::one();
        }
        v
    }

    pub fn zero<T: Field>(&self) -> AlgebraElement<'_, T> {
        AlgebraElement {
            algebra: self,
            coeffs: vec![T::zero(); self.dim()],
        }
    }

    pub fn one<T: Field>(&self) -> AlgebraElement<'_, T> {
        self.basis_element(0)
    }

    pub fn basis_element<T: Field>(&self, i: usize) -> AlgebraElement<'_, T> {
        let mut e = self.zero();
        e.coeffs[i] = T::one();
        e
    }

    /// Normal form of an arbitrary word: zero or a single basis element.
    pub fn normalize<T: Field>(&self, w: &Word) -> AlgebraElement<'_, T> {
        match self.system.normalize(w, Strategy::Leftmost) {
            None => self.zero(),
            Some(nf) => self.basis_element(self.index_of_word(&nf).expect("normal forms lie in the basis")),
        }
    }

    pub fn from_combination<T: Field>(&self, combo: &[(Word, T)]) -> AlgebraElement<'_, T> {
        combo.iter().fold(self.zero(), |acc, (w, c)| acc + self.normalize(w).scale(c))
    }

    pub fn from_coefficients<T: Field>(&self, coeffs: Vec<T>) -> Result<AlgebraElement<'_, T>> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                op: "algebra element",
                left: (self.dim(), 1),
                right: (coeffs.len(), 1),
            });
        }
        Ok(AlgebraElement {
            algebra: self,
            coeffs,
        })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement<'a, T> {
    algebra: &'a QuotientAlgebra,
    coeffs: Vec<T>,
}

impl<'a, T: Field> AlgebraElement<'a, T> {
    pub fn algebra(&self) -> &'a QuotientAlgebra {
        self.algebra
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coefficient(&self, w: &Word) -> T {
        self.algebra
            .index_of_word(w)
            .map_or_else(T::zero, |i| self.coeffs[i].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra.class() == other.algebra.class() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            algebra: self.algebra,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Product through the structure constants.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out: AlgebraElement<'a, T> = self.algebra.zero();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if let Some(k) = self.algebra.product_index(i, j) {
                    out.coeffs[k] = out.coeffs[k].clone() + x.clone() * y.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(self.algebra.one(), |acc, _| &acc * self)
    }

    /// Image under the evaluation map `P -> pair.p`, `Q -> pair.q`.
    pub fn evaluate(&self, pair: &IdempotentPair<T>) -> Matrix<T> {
        let n = pair.dim();
        self.algebra
            .basis
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (w, c)| acc + pair.eval_word(w).scale(c))
    }
}

macro_rules! element_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, T: Field> $trait<&AlgebraElement<'a, T>> for &AlgebraElement<'a, T> {
            type Output = AlgebraElement<'a, T>;
            fn $method(self, rhs: &AlgebraElement<'a, T>) -> AlgebraElement<'a, T> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, T: Field> $trait<AlgebraElement<'a, T>> for AlgebraElement<'a, T> {
            type Output = AlgebraElement<'a, T>;
            fn $method(self, rhs: AlgebraElement<'a, T>) -> AlgebraElement<'a, T> {
                (&self).$method(&rhs)
            }
        }
    };
}

element_binop!(Add, add, try_add);
element_binop!(Sub, sub, try_sub);
element_binop!(Mul, mul, try_mul);

impl<'a, T: Field> Neg for &AlgebraElement<'a, T> {
    type Output = AlgebraElement<'a, T>;
    fn neg(self) -> AlgebraElement<'a, T> {
        self.scale(&-T::one())
    }
}

impl<T: Field> fmt::Display for AlgebraElement<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.algebra.basis.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c}){w}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for AlgebraElement<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.algebra.class(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::word::word;
    use crate::Rational;

    fn basis_names(class: ConditionClass) -> Vec<String> {
        QuotientAlgebra::build(class)
            .unwrap()
            .basis()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn basis_per_class() {
        assert_eq!(basis_names(ConditionClass::PqpZero), ["I", "P", "Q", "PQ", "QP", "QPQ"]);
        assert_eq!(basis_names(ConditionClass::PqpP), ["I", "P", "Q", "PQ", "QP", "QPQ"]);
        assert_eq!(basis_names(ConditionClass::PqpPq), ["I", "P", "Q", "PQ", "QP", "QPQ"]);
        assert_eq!(basis_names(ConditionClass::Commute), ["I", "P", "Q", "PQ"]);
        assert_eq!(basis_names(ConditionClass::PqpQ), ["I", "P", "Q"]);
    }

    #[test]
    fn unit_is_two_sided_identity() {
        for class in ConditionClass::ALL {
            let alg = QuotientAlgebra::build(class).unwrap();
            for i in 0..alg.dim() {
                assert_eq!(alg.product_index(0, i), Some(i));
                assert_eq!(alg.product_index(i, 0), Some(i));
            }
        }
    }

    #[test]
    fn spot_checks() {
        let alg = QuotientAlgebra::build(ConditionClass::PqpZero).unwrap();
        let qpq = alg.normalize::<Rational>(&word("QPQ"));
        let p = alg.normalize::<Rational>(&word("P"));
        assert!((&qpq * &p).is_zero());

        let alg = QuotientAlgebra::build(ConditionClass::Commute).unwrap();
        let p = alg.normalize::<Rational>(&word("P"));
        let q = alg.normalize::<Rational>(&word("Q"));
        assert_eq!(&p * &q, alg.normalize(&word("PQ")));
        let s = &p + &q;
        let expected = &s + &alg.normalize(&word("PQ")).scale(&Rational::from_int(2));
        assert_eq!(&s * &s, expected);
        assert_eq!((&s * &s).to_string(), "P + Q + (2)PQ");
    }

    #[test]
    fn mixing_algebras_is_an_error() {
        let a = QuotientAlgebra::build(ConditionClass::Commute).unwrap();
        let b = QuotientAlgebra::build(ConditionClass::PqpQ).unwrap();
        let x = a.one::<Rational>();
        let y = b.one::<Rational>();
        assert_eq!(x.try_add(&y), Err(Error::AlgebraMismatch));
        assert_eq!(x.try_mul(&y), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn closure_cap_is_enforced() {
        assert_eq!(
            QuotientAlgebra::build_with_cap(ConditionClass::PqpZero, 4),
            Err(Error::ClosureDiverged { cap: 4 })
        );
    }

    #[test]
    fn structure_constants_are_unit_vectors() {
        let alg = QuotientAlgebra::build(ConditionClass::PqpP).unwrap();
        let i = alg.index_of_word(&word("PQ")).unwrap();
        let j = alg.index_of_word(&word("P")).unwrap();
        let v: Vec<Rational> = alg.structure_constants(i, j);
        let p = alg.index_of_word(&word("P")).unwrap();
        for (k, x) in v.iter().enumerate() {
            assert_eq!(*x, Rational::from_int(i64::from(k == p)));
        }
    }
}
