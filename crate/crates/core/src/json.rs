//! JSON encodings shared by the library and the CLI.
//!
//! A matrix is `{"rows": n, "cols": m, "entries": [["1", "-2/3"], ...]}` with
//! every entry a rational string. A pair document is
//! `{"P": <matrix>, "Q": <matrix>, "a": "1", "b": "-1"}` where `a` and `b`
//! are optional and default to 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Field};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn encode<T: Field>(m: &Matrix<T>) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn decode<T: Field>(&self) -> Result<Matrix<T>> {
        if self.entries.len() != self.rows {
            return Err(Error::Parse(format!(
                "declared {} rows but found {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    self.cols
                )));
            }
            for entry in row {
                data.push(parse_rational(entry)?);
            }
        }
        Matrix::new(self.rows, self.cols, data)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    #[serde(rename = "P")]
    pub p: MatrixJson,
    #[serde(rename = "Q")]
    pub q: MatrixJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
}

/// Decoded pair document.
#[derive(Clone, PartialEq, Eq)]
pub struct PairDocument<T> {
    pub p: Matrix<T>,
    pub q: Matrix<T>,
    pub a: T,
    pub b: T,
}

impl<T: Field> std::fmt::Debug for PairDocument<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PairDocument")
            .field("p", &self.p)
            .field("q", &self.q)
            .field("a", &self.a)
            .field("b", &self.b)
            .finish()
    }
}

impl<T: Field> PairDocument<T> {
    pub fn new(p: Matrix<T>, q: Matrix<T>, a: T, b: T) -> Result<Self> {
        let doc = Self { p, q, a, b };
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        self.p.square_dim()?;
        self.q.square_dim()?;
        if self.p.shape() != self.q.shape() {
            return Err(Error::DimensionMismatch {
                op: "pair",
                left: self.p.shape(),
                right: self.q.shape(),
            });
        }
        Ok(())
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: PairJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.decode()
    }

    pub fn to_json(&self) -> PairJson {
        PairJson {
            p: MatrixJson::encode(&self.p),
            q: MatrixJson::encode(&self.q),
            a: Some(self.a.to_string()),
            b: Some(self.b.to_string()),
        }
    }
}

impl PairJson {
    pub fn decode<T: Field>(&self) -> Result<PairDocument<T>> {
        let scalar = |s: &Option<String>| match s {
            Some(text) => parse_rational(text),
            None => Ok(T::one()),
        };
        PairDocument::new(
            self.p.decode()?,
            self.q.decode()?,
            scalar(&self.a)?,
            scalar(&self.b)?,
        )
    }
}

pub fn matrix_from_json_str<T: Field>(text: &str) -> Result<Matrix<T>> {
    let raw: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.decode()
}

pub fn matrix_to_json_string<T: Field>(m: &Matrix<T>) -> String {
    serde_json::to_string(&MatrixJson::encode(m)).expect("matrix JSON is always serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, RationalMatrix};

    #[test]
    fn matrix_round_trip_canonicalizes() {
        let text = r#"{"rows": 2, "cols": 2, "entries": [["2/4", "-3"], ["0", "7/1"]]}"#;
        let m: RationalMatrix = matrix_from_json_str(text).unwrap();
        assert_eq!(*m.get(0, 0), Rational::from_frac(1, 2).unwrap());
        let out = matrix_to_json_string(&m);
        assert_eq!(out, r#"{"rows":2,"cols":2,"entries":[["1/2","-3"],["0","7"]]}"#);
        assert_eq!(matrix_from_json_str::<Rational>(&out).unwrap(), m);
    }

    #[test]
    fn matrix_rejects_bad_input() {
        for text in [
            r#"{"rows": 1, "cols": 1, "entries": [["1/0"]]}"#,
            r#"{"rows": 2, "cols": 1, "entries": [["1"]]}"#,
            r#"{"rows": 1, "cols": 2, "entries": [["1"]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [[1]]}"#,
            r#"{"rows": 1, "cols": 1, "entries": [["1"]], "extra": 0}"#,
        ] {
            assert!(matrix_from_json_str::<Rational>(text).is_err(), "{text}");
        }
    }

    #[test]
    fn pair_defaults_scalars_to_one() {
        let text = r#"{"P": {"rows":1,"cols":1,"entries":[["1"]]},
                       "Q": {"rows":1,"cols":1,"entries":[["0"]]}}"#;
        let doc = PairDocument::<Rational>::from_json_str(text).unwrap();
        assert_eq!(doc.a, Rational::from_int(1));
        assert_eq!(doc.b, Rational::from_int(1));

        let text = r#"{"P": {"rows":1,"cols":1,"entries":[["1"]]},
                       "Q": {"rows":2,"cols":2,"entries":[["0","0"],["0","0"]]}}"#;
        assert!(matches!(
            PairDocument::<Rational>::from_json_str(text),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
