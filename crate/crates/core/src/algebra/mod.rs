//! Exact arithmetic over the Gaussian rationals `Q(i)`: scalars, univariate
//! and bivariate polynomials, and dense matrices.

mod bipoly;
mod gaussian;
mod matrix;
mod unipoly;

pub use bipoly::{bipoly_content_y, bipoly_gcd_y, perfect_power_extract, BiPoly};
pub use gaussian::GaussianRational;
pub use matrix::{rank_exact, row_basis_decompose, ExactMatrix, RowBasis};
pub use unipoly::{squarefree_decomposition, unipoly_gcd, UniPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("matrix has rank {rank}, expected 2")]
    RankNotTwo { rank: usize },
    #[error("bad perfect-power exponent {m}: {reason}")]
    BadExponent { m: usize, reason: &'static str },
}
