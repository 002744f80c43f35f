mod common;

use common::{class_specs, generated, q, random_nonzero_rational};
use idemdrazin::{
    conjugate, drazin_by_formula, drazin_oracle, index_of, invert, random_similarity, verify_drazin,
    ConditionClass, Error, Field, FormulaKind, IdempotentPair, Rational, RationalMatrix,
    RationalSpec, SplitMix64,
};
use idemdrazin::generator::random_idempotent;
use proptest::prelude::*;

fn class() -> impl Strategy<Value = ConditionClass> {
    prop::sample::select(ConditionClass::ALL.to_vec())
}

fn formula(
    class: ConditionClass,
    p: &RationalMatrix,
    qm: &RationalMatrix,
    spec: &RationalSpec,
) -> idemdrazin::Result<idemdrazin::FormulaResult<Rational>> {
    let pair = IdempotentPair::new(p, qm)?;
    pair.require(class)?;
    let kind = FormulaKind::select(class, spec)?;
    let inverse = pair.eval(&kind.coefficients(spec.a(), spec.b())?);
    Ok(idemdrazin::FormulaResult {
        inverse,
        index_bound: kind.index_bound(),
        class_used: class,
        kind,
        branch: kind.branch(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formula_matches_oracle(class in class(), n in 2usize..=6, seed in any::<u64>(), which in 0usize..5) {
        let (p, qm) = generated(class, n, seed);
        let spec = &class_specs(class)[which];
        let x = spec.combine(&p, &qm);
        let res = formula(class, &p, &qm, spec).unwrap();
        prop_assert_eq!(&res.inverse, &drazin_oracle(&x).unwrap().inverse);
        prop_assert!(index_of(&x).unwrap() <= res.index_bound);
        prop_assert!(verify_drazin(&x, &res.inverse, res.index_bound).unwrap().passed());
    }

    #[test]
    fn scalar_covariance(class in class(), n in 2usize..=5, seed in any::<u64>(), which in 0usize..5, cseed in any::<u64>()) {
        let (p, qm) = generated(class, n, seed);
        let spec = &class_specs(class)[which];
        let c = random_nonzero_rational(&mut SplitMix64::new(cseed));
        let base = formula(class, &p, &qm, spec).unwrap();
        let scaled = formula(class, &p, &qm, &spec.scaled(&c).unwrap()).unwrap();
        prop_assert_eq!(scaled.inverse, base.inverse.scale(&c.checked_inv().unwrap()));
    }

    #[test]
    fn similarity_covariance(class in class(), n in 2usize..=5, seed in any::<u64>(), which in 0usize..5, sseed in any::<u64>()) {
        let (p, qm) = generated(class, n, seed);
        let spec = &class_specs(class)[which];
        let s = random_similarity::<Rational>(n, sseed, 3);
        let s_inv = invert(&s).unwrap();
        let (p2, q2) = conjugate(&p, &qm, &s).unwrap();
        let base = formula(class, &p, &qm, spec).unwrap();
        let moved = formula(class, &p2, &q2, spec).unwrap();
        prop_assert_eq!(moved.inverse, &(&s_inv * &base.inverse) * &s);
    }

    #[test]
    fn overlapping_classes_agree(n in 2usize..=6, seed in any::<u64>(), which in 0usize..5) {
        // Commuting pairs usually satisfy further relations; every formula that
        // applies must give the same matrix.
        let (p, qm) = generated(ConditionClass::Commute, n, seed);
        let pair = IdempotentPair::new(&p, &qm).unwrap();
        let spec = &class_specs(ConditionClass::Commute)[which];
        let reference = formula(ConditionClass::Commute, &p, &qm, spec).unwrap().inverse;
        for class in pair.classes() {
            match formula(class, &p, &qm, spec) {
                Ok(res) => prop_assert_eq!(&res.inverse, &reference, "{} disagrees", class),
                Err(Error::UnsupportedCombination { .. }) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn dispatcher_picks_an_applicable_class(class in class(), n in 2usize..=5, seed in any::<u64>(), which in 0usize..5) {
        let (p, qm) = generated(class, n, seed);
        let spec = &class_specs(class)[which];
        let res = drazin_by_formula(&p, &qm, spec).unwrap();
        prop_assert!(idemdrazin::classify_pair(&p, &qm).unwrap().contains(&res.class_used));
        prop_assert_eq!(res.inverse, drazin_oracle(&spec.combine(&p, &qm)).unwrap().inverse);
    }
}

#[test]
fn pqp_p_coefficients_at_unit_scalars() {
    let one = q(1, 1);
    let got = FormulaKind::PqpP.coefficients(&one, &one).unwrap();
    let values: Vec<_> = got.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    assert_eq!(values, ["P:1/8", "Q:1", "PQ:1/8", "QP:1/8", "QPQ:-7/8"]);

    let diff = FormulaKind::PqpPDiff.coefficients(&one, &-one.clone()).unwrap();
    let values: Vec<_> = diff.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    assert_eq!(values, ["Q:-1", "QPQ:1"]);
}

#[test]
fn unrelated_idempotents_have_no_formula() {
    let spec = RationalSpec::ints(1, 1).unwrap();
    let mut tried = 0;
    for seed in 0..200u64 {
        let p: RationalMatrix = random_idempotent(4, seed, 2);
        let qm: RationalMatrix = random_idempotent(4, seed + 1000, 2);
        if !idemdrazin::classify_pair(&p, &qm).unwrap().is_empty() {
            continue;
        }
        assert_eq!(drazin_by_formula(&p, &qm, &spec), Err(Error::NoApplicableCondition));
        tried += 1;
    }
    assert!(tried >= 10, "only {tried} unrelated pairs");
}
