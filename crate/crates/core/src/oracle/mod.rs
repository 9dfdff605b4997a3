//! Floating-point check of the tuple property: fibers by root finding on the
//! Riemann sphere, back-fibers compared by optimal chordal matching.

mod assignment;
mod fiber;
mod roots;
mod sphere;
mod verify;
mod witness;

pub use assignment::{min_cost_assignment, multiset_match};
pub use fiber::{fiber_x, fiber_y, Fiber, NumericCorrespondence};
pub use roots::{effective_degree, poly_roots, poly_roots_padded, root_set, RootSet};
pub use sphere::{canonical_order, chordal_distance, SpherePoint};
pub use verify::{verify_factorization, verify_map_of_tuples, FactorizationCheck, OracleVerdict, SAMPLE_RADIUS};
pub use witness::{d_tuple_witness, d_tuple_witness_y, TupleWitness};

use thiserror::Error;

/// Default chordal matching tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("polynomial is numerically zero")]
    NumericallyZeroPolynomial,
    #[error("roots are too close to tell apart from a multiple root")]
    IllConditionedRoots,
    #[error("fiber is degenerate: the specialized polynomial vanishes identically")]
    DegenerateFiber,
    #[error("sample point is not generic")]
    DegenerateSample,
    #[error("fibers have different lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("only {accepted} of {requested} samples were generic after drawing {drawn} candidates")]
    TooManyDegenerateSamples { accepted: usize, requested: usize, drawn: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
