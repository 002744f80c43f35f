//! String rewriting modulo idempotency plus one class relation.

use std::fmt;

use super::word::{word, Letter, Word};
use crate::error::{Error, Result};
use crate::formulas::ConditionClass;

/// `lhs -> rhs`, where `rhs = None` rewrites to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Option<Word>,
}

impl Rule {
    fn new(lhs: &str, rhs: Option<&str>) -> Self {
        Self {
            lhs: word(lhs),
            rhs: rhs.map(word),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rhs {
            Some(r) => write!(f, "{} -> {}", self.lhs, r),
            None => write!(f, "{} -> 0", self.lhs),
        }
    }
}

/// Which redex to contract first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A word reachable from an overlap of two left-hand sides, reduced both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub word: Word,
    pub left: Option<Word>,
    pub right: Option<Word>,
}

impl CriticalPair {
    pub fn joinable(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    class: ConditionClass,
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn for_class(class: ConditionClass) -> Self {
        let mut rules = vec![Rule::new("PP", Some("P")), Rule::new("QQ", Some("Q"))];
        match class {
            ConditionClass::PqpZero => rules.push(Rule::new("PQP", None)),
            ConditionClass::PqpP => rules.push(Rule::new("PQP", Some("P"))),
            ConditionClass::PqpQ => {
                rules.push(Rule::new("PQP", Some("Q")));
                // PQP = Q forces Q = QP = PQ.
                rules.push(Rule::new("PQ", Some("Q")));
                rules.push(Rule::new("QP", Some("Q")));
            }
            ConditionClass::Commute => rules.push(Rule::new("QP", Some("PQ"))),
            ConditionClass::PqpPq => rules.push(Rule::new("PQP", Some("PQ"))),
        }
        Self { class, rules }
    }

    pub fn class(&self) -> ConditionClass {
        self.class
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    fn occurrences<'a>(&'a self, w: &'a [Letter]) -> impl Iterator<Item = (usize, &'a Rule)> + 'a {
        self.rules.iter().flat_map(move |rule| {
            let l = rule.lhs.letters();
            (0..=w.len().saturating_sub(l.len()))
                .filter(move |&i| w.len() >= l.len() && &w[i..i + l.len()] == l)
                .map(move |i| (i, rule))
        })
    }

    /// Contracts the redex of `rule` at `pos`. `None` means the word became zero.
    fn apply(w: &[Letter], pos: usize, rule: &Rule) -> Option<Word> {
        let rhs = rule.rhs.as_ref()?;
        let mut out = w[..pos].to_vec();
        out.extend_from_slice(rhs.letters());
        out.extend_from_slice(&w[pos + rule.lhs.len()..]);
        Some(Word::new(out))
    }

    /// Rewrites to a fixed point. `None` is the zero element.
    pub fn normalize(&self, w: &Word, strategy: Strategy) -> Option<Word> {
        let mut current = w.clone();
        loop {
            let letters = current.letters();
            let redex = match strategy {
                Strategy::Leftmost => self.occurrences(letters).min_by_key(|(i, _)| *i),
                Strategy::Rightmost => self.occurrences(letters).max_by_key(|(i, _)| *i),
            };
            match redex {
                None => return Some(current),
                Some((pos, rule)) => current = Self::apply(letters, pos, rule)?,
            }
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.occurrences(w.letters()).next().is_none()
    }

    /// All critical pairs: proper overlaps of a suffix of one left-hand side
    /// with a prefix of another, and inclusions of one inside another.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let mut out = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let l1 = r1.lhs.letters();
                let l2 = r2.lhs.letters();
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut overlap = l1.to_vec();
                        overlap.extend_from_slice(&l2[k..]);
                        out.push(self.resolve(&overlap, (0, r1), (l1.len() - k, r2)));
                    }
                }
                if i != j && l2.len() <= l1.len() {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] == *l2 {
                            out.push(self.resolve(l1, (0, r1), (pos, r2)));
                        }
                    }
                }
            }
        }
        out
    }

    fn resolve(&self, w: &[Letter], first: (usize, &Rule), second: (usize, &Rule)) -> CriticalPair {
        let reduce = |(pos, rule): (usize, &Rule)| {
            Self::apply(w, pos, rule).and_then(|x| self.normalize(&x, Strategy::Leftmost))
        };
        CriticalPair {
            word: Word::new(w.to_vec()),
            left: reduce(first),
            right: reduce(second),
        }
    }

    pub fn check_local_confluence(&self) -> Result<()> {
        match self.critical_pairs().into_iter().find(|cp| !cp.joinable()) {
            None => Ok(()),
            Some(cp) => Err(Error::NotConfluent {
                class: self.class,
                word: cp.word.to_string(),
            }),
        }
    }
}
