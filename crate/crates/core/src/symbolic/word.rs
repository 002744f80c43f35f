use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    P,
    Q,
}

/// A monomial in the two generators. The empty word is the unit `I`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The empty word, i.e. the identity `I`.
    pub fn is_unit(&self) -> bool {
        self.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Every word of exactly `len` letters, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0u64..1 << len).map(move |bits| {
            Word(
                (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Letter::P
                        } else {
                            Letter::Q
                        }
                    })
                    .collect(),
            )
        })
    }
}

/// Shortlex: shorter words first, then lexicographic with `P < Q`.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::P => "P",
                Letter::Q => "Q",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "I" {
            return Ok(Word::unit());
        }
        s.chars()
            .map(|c| match c {
                'P' => Ok(Letter::P),
                'Q' => Ok(Letter::Q),
                _ => Err(Error::Parse(format!("invalid word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Shorthand for building words in code and tests; panics on bad input.
pub fn word(s: &str) -> Word {
    s.parse().expect("invalid word literal")
}
