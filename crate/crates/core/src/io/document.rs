//! Lossless JSON form of a coefficient matrix, laid out with the coefficient
//! of `x^d y^d` top-left: `entries[r][c]` is the coefficient of
//! `x^(d-r) y^(d-c)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::InputError;
use crate::algebra::{ExactMatrix, GaussianRational};
use crate::correspondence::Correspondence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalEntry {
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexEntry {
    pub re: RationalEntry,
    pub im: RationalEntry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub d: usize,
    pub entries: Vec<Vec<ComplexEntry>>,
}

fn rational_entry(q: &BigRational) -> RationalEntry {
    RationalEntry { num: q.numer().to_string(), den: q.denom().to_string() }
}

fn parse_int(s: &str, what: &str, r: usize, c: usize) -> Result<BigInt, InputError> {
    let ok = !s.is_empty() && s.strip_prefix('-').unwrap_or(s).bytes().all(|b| b.is_ascii_digit());
    let parsed = if ok { s.parse::<BigInt>().ok() } else { None };
    parsed.ok_or_else(|| InputError::Document(format!("entry [{r}][{c}]: {what} '{s}' is not a decimal integer")))
}

fn rational(e: &RationalEntry, r: usize, c: usize) -> Result<BigRational, InputError> {
    let num = parse_int(&e.num, "numerator", r, c)?;
    let den = parse_int(&e.den, "denominator", r, c)?;
    if !den.is_positive() {
        return Err(InputError::Document(format!("entry [{r}][{c}]: denominator must be positive, got {den}")));
    }
    Ok(BigRational::new(num, den))
}

/// Serializes a correspondence in display layout with reduced fractions.
pub fn save_matrix(f: &Correspondence) -> MatrixDocument {
    let d = f.degree();
    let entries = (0..=d)
        .map(|r| {
            (0..=d)
                .map(|c| {
                    let a = f.coeff(d - r, d - c);
                    ComplexEntry { re: rational_entry(a.re()), im: rational_entry(a.im()) }
                })
                .collect()
        })
        .collect();
    MatrixDocument { d, entries }
}

/// Reads a document back, validating shape, integers and the correspondence.
pub fn load_matrix(doc: &MatrixDocument) -> Result<Correspondence, InputError> {
    let d = doc.d;
    if d == 0 {
        return Err(InputError::Document("d must be at least 1".into()));
    }
    if doc.entries.len() != d + 1 || doc.entries.iter().any(|row| row.len() != d + 1) {
        return Err(InputError::Document(format!("entries must be a {0}x{0} array for d = {d}", d + 1)));
    }
    let mut m = ExactMatrix::zeros(d + 1, d + 1);
    for (r, row) in doc.entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            m[(d - r, d - c)] = GaussianRational::new(rational(&e.re, r, c)?, rational(&e.im, r, c)?);
        }
    }
    Ok(Correspondence::new(m)?)
}

impl MatrixDocument {
    /// Pretty-printed JSON with a trailing newline; identical inputs give
    /// identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(src: &str) -> Result<Self, InputError> {
        serde_json::from_str(src).map_err(|e| InputError::Json(e.to_string()))
    }
}

/// Builds a correspondence from rows in display layout, each entry an
/// expression accepted by [`super::parse_scalar`].
pub fn matrix_from_display_rows(rows: &[&[&str]]) -> Result<Correspondence, InputError> {
    let n = rows.len();
    if n < 2 || rows.iter().any(|r| r.len() != n) {
        return Err(InputError::Document("display rows must form a square array of side at least 2".into()));
    }
    let d = n - 1;
    let mut m = ExactMatrix::zeros(n, n);
    for (r, row) in rows.iter().enumerate() {
        for (c, src) in row.iter().enumerate() {
            m[(d - r, d - c)] = super::parse_scalar(src)?;
        }
    }
    Ok(Correspondence::new(m)?)
}
