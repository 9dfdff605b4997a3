//! Text and JSON input/output, and the embedded worked examples.

mod document;
mod fixtures;
mod parse;
mod report;

pub use document::{load_matrix, matrix_from_display_rows, save_matrix, ComplexEntry, MatrixDocument, RationalEntry};
pub use fixtures::{
    example3_discrepancy, fixture, Example3Discrepancy, ExpectedClass, ExpectedSymmetry, Fixture, FixtureOutcome,
    Source, FIXTURES,
};
pub use parse::{parse_bipoly, parse_fractional_map, parse_polynomial, parse_scalar, MAX_DEGREE, MAX_EXPONENT};
pub use report::{
    classification_headline, classification_text, symmetry_text, witness_text, ClassificationJson, FactorizationJson,
    OracleJson, Report, SymmetryJson,
};

use thiserror::Error;

use crate::correspondence::{Correspondence, CorrespondenceError, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },
    #[error("unsupported coefficient '{text}' at column {}: only Gaussian rationals are allowed", position + 1)]
    UnsupportedCoefficient { position: usize, text: String },
    #[error("exponent at column {} exceeds {max}", position + 1)]
    ExponentTooLarge { position: usize, max: u32 },
    #[error("degree {degree} exceeds the limit {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("unexpected variable '{found}' at column {}: this map is in {expected}", position + 1)]
    WrongVariable { position: usize, found: char, expected: Variable },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("invalid matrix document: {0}")]
    Document(String),
    #[error(transparent)]
    Invalid(#[from] CorrespondenceError),
}

impl InputError {
    /// Zero-based character offset into the source, for errors that have one.
    pub fn position(&self) -> Option<usize> {
        match self {
            InputError::Syntax { position, .. }
            | InputError::UnsupportedCoefficient { position, .. }
            | InputError::ExponentTooLarge { position, .. }
            | InputError::WrongVariable { position, .. } => Some(*position),
            _ => None,
        }
    }

    /// The message followed by the source line with a caret under the
    /// offending column, when there is one.
    pub fn annotate(&self, src: &str) -> String {
        match self.position() {
            Some(p) if !src.contains('\n') => format!("{self}\n  {src}\n  {}^", " ".repeat(p)),
            _ => self.to_string(),
        }
    }
}

/// Reads either a matrix document (text starting with `{`) or a polynomial.
pub fn read_correspondence(src: &str) -> Result<Correspondence, InputError> {
    if src.trim_start().starts_with('{') {
        load_matrix(&MatrixDocument::from_json(src)?)
    } else {
        parse_polynomial(src.trim())
    }
}
