#![allow(dead_code)]

use idemdrazin::{
    gen_pair, ConditionClass, Field, GeneratorSpec, Rational, RationalMatrix, RationalSpec,
    SplitMix64,
};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_frac(n, d).unwrap()
}

pub fn spec(a: Rational, b: Rational) -> RationalSpec {
    RationalSpec::new(a, b).unwrap()
}

/// Five scalar specs per class. The `PQP = PQ` formulas only cover `a = b`
/// and `a = -b`, so that class gets its own list.
pub fn class_specs(class: ConditionClass) -> Vec<RationalSpec> {
    match class {
        ConditionClass::PqpPq => vec![
            spec(q(1, 1), q(1, 1)),
            spec(q(-3, 2), q(-3, 2)),
            spec(q(5, 1), q(5, 1)),
            spec(q(1, 1), q(-1, 1)),
            spec(q(-2, 3), q(2, 3)),
        ],
        _ => vec![
            spec(q(1, 1), q(1, 1)),
            spec(q(2, 1), q(-3, 1)),
            spec(q(1, 2), q(7, 3)),
            spec(q(1, 1), q(-1, 1)),
            spec(q(-5, 2), q(5, 2)),
        ],
    }
}

pub fn generated(class: ConditionClass, dimension: usize, seed: u64) -> (RationalMatrix, RationalMatrix) {
    gen_pair(&GeneratorSpec::new(class, dimension, seed)).unwrap()
}

pub struct Case {
    pub class: ConditionClass,
    pub dimension: usize,
    pub seed: u64,
    pub p: RationalMatrix,
    pub q: RationalMatrix,
}

pub fn corpus(dimensions: &[usize], seeds: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for class in ConditionClass::ALL {
        for &dimension in dimensions {
            for seed in 0..seeds {
                let (p, q) = generated(class, dimension, seed);
                out.push(Case { class, dimension, seed, p, q });
            }
        }
    }
    out
}

/// A square matrix with entries in `[-3, 3]` of one of three shapes: dense,
/// a rank-deficient product `X·Y`, or a nonsingular block beside a nilpotent
/// Jordan block, conjugated so that the index can exceed 1.
pub fn random_matrix(rng: &mut SplitMix64, n: usize) -> RationalMatrix {
    let entry = |rng: &mut SplitMix64| Rational::from_int(rng.int_in(-3, 3));
    match rng.below(3) {
        0 => RationalMatrix::from_fn(n, n, |_, _| entry(rng)),
        1 => {
            let r = rng.below(n as u64) as usize;
            let x = RationalMatrix::from_fn(n, r, |_, _| entry(rng));
            let y = RationalMatrix::from_fn(r, n, |_, _| entry(rng));
            &x * &y
        }
        _ => {
            let nil = 1 + rng.below(n as u64) as usize;
            let mut core = RationalMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    if i < nil && j < nil {
                        if j == i + 1 {
                            core.set(i, j, Rational::from_int(1));
                        }
                    } else if i >= nil && j >= nil {
                        let v = if i == j { rng.int_in(1, 3) } else { rng.int_in(-3, 3) };
                        core.set(i, j, Rational::from_int(v));
                    }
                }
            }
            let s = idemdrazin::random_similarity(n, rng.next_u64(), 2);
            let s_inv = idemdrazin::invert(&s).unwrap();
            &(&s_inv * &core) * &s
        }
    }
}

pub fn random_nonzero_rational(rng: &mut SplitMix64) -> Rational {
    let mut n = rng.int_in(-9, 9);
    if n == 0 {
        n = 1;
    }
    q(n, rng.int_in(1, 7))
}
