//! Seeded construction of idempotent pairs satisfying each condition class.
//!
//! Pairs are built from block templates in a canonical basis and then
//! conjugated by a random unit-triangular similarity. All randomness comes
//! from [`SplitMix64`], so a [`GeneratorSpec`] fixes the output bit for bit.
//!
//! # Draw order
//!
//! `gen_pair` consumes one stream seeded with `spec.seed`:
//!
//! 1. `p = 1 + below(n - 1)`, the rank of the `I_p` block of `P` (skipped for
//!    the diagonal classes `COMMUTE` and `PQP_Q`).
//! 2. The class template, in the order documented on each template function.
//! 3. One `next_u64()` used as the seed of [`random_similarity`].
//!
//! `below(k)` is `next_u64() % k`, `int_in(lo, hi)` is
//! `lo + below(hi - lo + 1)`, and `bit()` is the top bit of `next_u64()`.
//! Matrices are filled in row-major order.

use crate::elimination::invert;
use crate::error::{Error, Result};
use crate::formulas::ConditionClass;
use crate::matrix::Matrix;
use crate::scalar::Field;

/// The splitmix64 generator: state advances by `0x9E3779B97F4A7C15` and each
/// output is mixed with the multipliers `0xBF58476D1CE4E5B9` and
/// `0x94D049BB133111EB` (shifts 30, 27, 31).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
    pub const MIX1: u64 = 0xBF58_476D_1CE4_E5B9;
    pub const MIX2: u64 = 0x94D0_49BB_1331_11EB;

    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(Self::GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(Self::MIX1);
        z = (z ^ (z >> 27)).wrapping_mul(Self::MIX2);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, k: u64) -> u64 {
        assert!(k > 0, "empty range");
        self.next_u64() % k
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }

    pub fn bit(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

pub const DEFAULT_ENTRY_BOUND: i64 = 3;
pub const MIN_DIMENSION: usize = 2;
pub const MAX_DIMENSION: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub class: ConditionClass,
    pub dimension: usize,
    pub seed: u64,
    pub entry_bound: i64,
}

impl GeneratorSpec {
    pub fn new(class: ConditionClass, dimension: usize, seed: u64) -> Self {
        Self {
            class,
            dimension,
            seed,
            entry_bound: DEFAULT_ENTRY_BOUND,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&self.dimension) {
            return Err(Error::InvalidSpec(format!(
                "dimension {} outside {MIN_DIMENSION}..={MAX_DIMENSION}",
                self.dimension
            )));
        }
        if self.entry_bound < 1 {
            return Err(Error::InvalidSpec(format!(
                "entry bound {} must be positive",
                self.entry_bound
            )));
        }
        Ok(())
    }
}

/// Generates an idempotent pair satisfying `spec.class`.
pub fn gen_pair<T: Field>(spec: &GeneratorSpec) -> Result<(Matrix<T>, Matrix<T>)> {
    spec.validate()?;
    let n = spec.dimension;
    let bound = spec.entry_bound;
    let mut rng = SplitMix64::new(spec.seed);
    let (p, q) = match spec.class {
        ConditionClass::Commute => commute_template(n, &mut rng),
        ConditionClass::PqpQ => pqp_q_template(n, &mut rng),
        class => {
            let rank_p = 1 + rng.below(n as u64 - 1) as usize;
            let m = n - rank_p;
            match class {
                ConditionClass::PqpZero => pqp_zero_template(rank_p, m, &mut rng, bound),
                ConditionClass::PqpP => pqp_p_template(rank_p, m, &mut rng, bound),
                _ => pqp_pq_template(rank_p, m, &mut rng, bound),
            }
        }
    };
    let s = random_similarity(n, rng.next_u64(), bound);
    conjugate(&p, &q, &s)
}

/// `S = L·U` with unit lower- and upper-triangular integer factors whose
/// off-diagonal entries lie in `[-entry_bound, entry_bound]` (L filled first,
/// then U, both row-major). `det S = 1`.
pub fn random_similarity<T: Field>(dimension: usize, seed: u64, entry_bound: i64) -> Matrix<T> {
    let mut rng = SplitMix64::new(seed);
    let mut lower = Matrix::identity(dimension);
    for i in 0..dimension {
        for j in 0..i {
            lower.set(i, j, T::from_int(rng.int_in(-entry_bound, entry_bound)));
        }
    }
    let mut upper = Matrix::identity(dimension);
    for i in 0..dimension {
        for j in i + 1..dimension {
            upper.set(i, j, T::from_int(rng.int_in(-entry_bound, entry_bound)));
        }
    }
    &lower * &upper
}

/// `(S^-1 P S, S^-1 Q S)`.
pub fn conjugate<T: Field>(p: &Matrix<T>, q: &Matrix<T>, s: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    let s_inv = invert(s)?;
    let p2 = &(&s_inv * p) * s;
    let q2 = &(&s_inv * q) * s;
    Ok((p2, q2))
}

/// `S·diag(bits)·S^-1` with the diagonal drawn first, then the seed of `S`.
pub fn random_idempotent<T: Field>(dimension: usize, seed: u64, entry_bound: i64) -> Matrix<T> {
    let mut rng = SplitMix64::new(seed);
    idempotent_from(dimension, &mut rng, entry_bound)
}

fn idempotent_from<T: Field>(dimension: usize, rng: &mut SplitMix64, entry_bound: i64) -> Matrix<T> {
    let d = diagonal_bits::<T>(dimension, rng);
    let s = random_similarity::<T>(dimension, rng.next_u64(), entry_bound);
    let s_inv = invert(&s).expect("unit-triangular product is invertible");
    &(&s * &d) * &s_inv
}

fn bits(n: usize, rng: &mut SplitMix64) -> Vec<bool> {
    (0..n).map(|_| rng.bit()).collect()
}

fn diag_of<T: Field>(bits: &[bool]) -> Matrix<T> {
    let d: Vec<T> = bits.iter().map(|&b| if b { T::one() } else { T::zero() }).collect();
    Matrix::from_diagonal(&d)
}

fn diagonal_bits<T: Field>(n: usize, rng: &mut SplitMix64) -> Matrix<T> {
    diag_of(&bits(n, rng))
}

fn block_p<T: Field>(rank_p: usize, m: usize) -> Matrix<T> {
    let mut d = vec![true; rank_p];
    d.extend(std::iter::repeat_n(false, m));
    diag_of(&d)
}

/// Random entries on `rows × cols`, zero outside the given row and column supports.
fn supported<T: Field>(rows: &[bool], cols: &[bool], rng: &mut SplitMix64, bound: i64) -> Matrix<T> {
    Matrix::from_fn(rows.len(), cols.len(), |i, j| {
        if rows[i] && cols[j] {
            T::from_int(rng.int_in(-bound, bound))
        } else {
            T::zero()
        }
    })
}

fn random_ints<T: Field>(rows: usize, cols: usize, rng: &mut SplitMix64, bound: i64) -> Matrix<T> {
    Matrix::from_fn(rows, cols, |_, _| T::from_int(rng.int_in(-bound, bound)))
}

/// Draws: `n` bits for `P`, then `n` bits for `Q`.
fn commute_template<T: Field>(n: usize, rng: &mut SplitMix64) -> (Matrix<T>, Matrix<T>) {
    let p = bits(n, rng);
    let q = bits(n, rng);
    (diag_of(&p), diag_of(&q))
}

/// Draws: `n` bits for `P`, then `n` bits masked by `P` for `Q <= P`.
fn pqp_q_template<T: Field>(n: usize, rng: &mut SplitMix64) -> (Matrix<T>, Matrix<T>) {
    let p = bits(n, rng);
    let mask = bits(n, rng);
    let q: Vec<bool> = p.iter().zip(&mask).map(|(&a, &b)| a && b).collect();
    (diag_of(&p), diag_of(&q))
}

/// `P = [[I, 0], [0, 0]]`, `Q = [[0, B], [C, D]]` with `D` a 0/1 diagonal.
/// `B` lives on rows `K1` and columns `R1`, `C` on rows `R2` and columns `K2`,
/// where `R1 ⊔ R2` splits the range of `D` and `K1 ⊔ K2` splits `1..p`; then
/// `BD = B`, `DC = C`, `BC = 0` and `CB = 0`.
///
/// Draws: per bottom index `d` then (if `d`) the `R1`/`R2` side; per top
/// index the `K1`/`K2` side; entries of `B`; entries of `C`.
fn pqp_zero_template<T: Field>(rank_p: usize, m: usize, rng: &mut SplitMix64, bound: i64) -> (Matrix<T>, Matrix<T>) {
    let mut d = vec![false; m];
    let mut r1 = vec![false; m];
    let mut r2 = vec![false; m];
    for r in 0..m {
        d[r] = rng.bit();
        if d[r] {
            if rng.bit() {
                r1[r] = true;
            } else {
                r2[r] = true;
            }
        }
    }
    let k1 = bits(rank_p, rng);
    let k2: Vec<bool> = k1.iter().map(|&x| !x).collect();
    let b = supported::<T>(&k1, &r1, rng, bound);
    let c = supported::<T>(&r2, &k2, rng, bound);
    let q = Matrix::from_blocks(&Matrix::zeros(rank_p, rank_p), &b, &c, &diag_of(&d)).expect("block shapes agree");
    (block_p(rank_p, m), q)
}

/// `P = [[I, 0], [0, 0]]`, `Q = [[I, B], [C, E + CB]]` with `E` a 0/1
/// diagonal. `B` lives on rows `K1` and columns `N1`, `C` on rows `N2` and
/// columns `K2`, where `N1 ⊔ N2` splits the kernel indices of `E` and `K1`,
/// `K2` are independent subsets of `1..p`. Then `BC = 0`, `BE = 0`, `EC = 0`,
/// which makes `Q` idempotent with `PQP = P`. `CB` may be nonzero when `K1`
/// and `K2` meet, which is what lets `ind(P + Q)` reach 2 and `ind(P - Q)` 3.
///
/// Draws: per bottom index `e` then (if not `e`) the `N1`/`N2` side; `K1`
/// bits; `K2` bits; entries of `B`; entries of `C`.
fn pqp_p_template<T: Field>(rank_p: usize, m: usize, rng: &mut SplitMix64, bound: i64) -> (Matrix<T>, Matrix<T>) {
    let mut e = vec![false; m];
    let mut n1 = vec![false; m];
    let mut n2 = vec![false; m];
    for r in 0..m {
        e[r] = rng.bit();
        if !e[r] {
            if rng.bit() {
                n1[r] = true;
            } else {
                n2[r] = true;
            }
        }
    }
    let k1 = bits(rank_p, rng);
    let k2 = bits(rank_p, rng);
    let b = supported::<T>(&k1, &n1, rng, bound);
    let c = supported::<T>(&n2, &k2, rng, bound);
    let d = diag_of::<T>(&e) + &c * &b;
    let q = Matrix::from_blocks(&Matrix::identity(rank_p), &b, &c, &d).expect("block shapes agree");
    (block_p(rank_p, m), q)
}

/// `P = [[I, 0], [0, 0]]`, `Q = [[A, 0], [C, D]]` with `A`, `D` random
/// idempotents and `C = D Y (I - A) + (I - D) Z A`, so `CA + DC = C`.
///
/// Draws: `A`; `D` (each as diagonal bits then a similarity seed); `Y`; `Z`.
fn pqp_pq_template<T: Field>(rank_p: usize, m: usize, rng: &mut SplitMix64, bound: i64) -> (Matrix<T>, Matrix<T>) {
    let a = idempotent_from::<T>(rank_p, rng, bound);
    let d = idempotent_from::<T>(m, rng, bound);
    let y = random_ints::<T>(m, rank_p, rng, bound);
    let z = random_ints::<T>(m, rank_p, rng, bound);
    let ip = Matrix::identity(rank_p);
    let im = Matrix::identity(m);
    let c = &(&d * &y) * &(&ip - &a) + &(&(&im - &d) * &z) * &a;
    let q = Matrix::from_blocks(&a, &Matrix::zeros(rank_p, m), &c, &d).expect("block shapes agree");
    (block_p(rank_p, m), q)
}
