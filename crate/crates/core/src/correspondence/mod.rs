//! Polynomial correspondences `f(x, y) = 0` of degree `d` in each variable,
//! the separated form `Φ(x) = Ψ(y)`, and the classification of `f` as a map
//! of `d`-tuples.

mod classify;
mod maps;
mod symmetry;

pub use classify::{classify, Classification};
pub use maps::{compose, compose_matrix, factorize, mobius_postcompose, Factorization, FractionalMap, Mobius};
pub use symmetry::{check_symm_factor_condition, check_timerev_factor_condition, symmetry_report, SymmetryReport};

use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{bipoly_content_y, rank_exact, AlgebraError, BiPoly, ExactMatrix, GaussianRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    X,
    Y,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variable::X => "x",
            Variable::Y => "y",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("coefficient matrix must be square with side at least 2, got {rows}x{cols}")]
    Shape { rows: usize, cols: usize },
    #[error("coefficient matrix is identically zero")]
    ZeroMatrix,
    #[error("degree in {variable} is below {degree}: the top {variable}-coefficients all vanish")]
    DegenerateDegree { variable: Variable, degree: usize },
    #[error("polynomial has a factor {factor} in {variable} alone (a line component)")]
    LineComponent { variable: Variable, factor: String },
    #[error("maps have different degrees ({phi} and {psi})")]
    DegreeMismatch { phi: usize, psi: usize },
    #[error("coefficient matrix has rank {rank}, expected 2")]
    RankNotTwo { rank: usize },
    #[error("factorization produced a non-reduced map; the input has a hidden line component")]
    InternalNonreduced,
    #[error("Möbius transformation has zero determinant")]
    SingularMobius,
    #[error("denominator of a fractional map is zero")]
    ZeroDenominator,
    #[error("fractional map is constant")]
    ConstantMap,
    #[error("numerator and denominator share the factor {0}")]
    NotReduced(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A validated correspondence: `matrix[(i, j)]` is the coefficient of `x^i y^j`.
///
/// Validation enforces that `f` is genuinely `d`-valued in both directions
/// (top row and top column nonzero) and that no factor depends on one
/// variable alone.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Correspondence {
    degree: usize,
    matrix: ExactMatrix,
}

/// Validates a square coefficient matrix indexed by `(x-power, y-power)`.
pub fn new_correspondence(matrix: ExactMatrix) -> Result<Correspondence, CorrespondenceError> {
    if !matrix.is_square() || matrix.rows() < 2 {
        return Err(CorrespondenceError::Shape { rows: matrix.rows(), cols: matrix.cols() });
    }
    if matrix.is_zero() {
        return Err(CorrespondenceError::ZeroMatrix);
    }
    let f = BiPoly::from_matrix(&matrix);
    let x_factor = bipoly_content_y(&f)?;
    if !x_factor.is_constant() {
        return Err(CorrespondenceError::LineComponent { variable: Variable::X, factor: x_factor.display_in('x') });
    }
    let y_factor = bipoly_content_y(&f.swap_variables())?;
    if !y_factor.is_constant() {
        return Err(CorrespondenceError::LineComponent { variable: Variable::Y, factor: y_factor.display_in('y') });
    }
    let d = matrix.rows() - 1;
    if matrix.row(d).iter().all(Zero::is_zero) {
        return Err(CorrespondenceError::DegenerateDegree { variable: Variable::X, degree: d });
    }
    if (0..=d).all(|i| matrix[(i, d)].is_zero()) {
        return Err(CorrespondenceError::DegenerateDegree { variable: Variable::Y, degree: d });
    }
    Ok(Correspondence { degree: d, matrix })
}

impl Correspondence {
    pub fn new(matrix: ExactMatrix) -> Result<Self, CorrespondenceError> {
        new_correspondence(matrix)
    }

    /// Validates a polynomial, taking `d = max(deg_x, deg_y)`.
    pub fn from_bipoly(f: &BiPoly) -> Result<Self, CorrespondenceError> {
        let d = f.deg_x().unwrap_or(0).max(f.deg_y().unwrap_or(0)).max(1);
        new_correspondence(f.to_matrix(d + 1).expect("degrees fit by construction"))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> &GaussianRational {
        &self.matrix[(i, j)]
    }

    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_matrix(&self.matrix)
    }

    pub fn rank(&self) -> usize {
        rank_exact(&self.matrix)
    }

    /// `f(y, x)`: the transposed coefficient matrix.
    pub fn swap_variables(&self) -> Self {
        Self { degree: self.degree, matrix: self.matrix.transpose() }
    }

    /// `f̄`: every coefficient conjugated, so `f̄(x̄, ȳ) = conj(f(x, y))`.
    pub fn conjugate_coeffs(&self) -> Self {
        Self { degree: self.degree, matrix: self.matrix.map(GaussianRational::conj) }
    }

    /// `c` with `self = c · other`, if the two define the same zero set that way.
    pub fn scalar_multiple_of(&self, other: &Self) -> Option<GaussianRational> {
        self.matrix.scalar_multiple_of(&other.matrix)
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bipoly().display())
    }
}

pub fn swap_variables(f: &Correspondence) -> Correspondence {
    f.swap_variables()
}

pub fn conjugate_coeffs(f: &Correspondence) -> Correspondence {
    f.conjugate_coeffs()
}
