use serde::Serialize;

use super::fiber::NumericCorrespondence;
use super::roots::RootSet;
use super::{chordal_distance, multiset_match, Fiber, OracleError, SpherePoint};
use crate::correspondence::{Correspondence, Variable};

/// One numeric check of the tuple property from a start point `x1`: the
/// back-fibers over every forward point must be the same multiset.
#[derive(Clone, Debug, Serialize)]
pub struct TupleWitness {
    /// Which variable `x1` belongs to; `Y` means the roles were exchanged.
    pub start: Variable,
    pub x1: SpherePoint,
    pub forward: Fiber,
    pub back: Vec<Fiber>,
    pub verdict: bool,
    pub max_mismatch: f64,
}

fn degenerate(e: OracleError) -> OracleError {
    match e {
        OracleError::DegenerateFiber | OracleError::IllConditionedRoots | OracleError::NumericallyZeroPolynomial => {
            OracleError::DegenerateSample
        }
        other => other,
    }
}

pub(crate) fn witness_from_forward(
    nc: &NumericCorrespondence,
    transposed: &NumericCorrespondence,
    x1: SpherePoint,
    forward: &RootSet,
    tol: f64,
    start: Variable,
) -> Result<TupleWitness, OracleError> {
    let forward = Fiber::new(&forward.points());
    debug_assert_eq!(forward.len(), nc.degree());
    let back =
        forward.points().iter().map(|y| transposed.fiber_y(y)).collect::<Result<Vec<_>, _>>().map_err(degenerate)?;
    let mut worst: f64 = 0.0;
    for b in &back {
        let (_, m) = multiset_match(back[0].points(), b.points(), tol)?;
        let contains = b.points().iter().map(|p| chordal_distance(p, &x1)).fold(f64::INFINITY, f64::min);
        worst = worst.max(m).max(contains);
    }
    Ok(TupleWitness { start, x1, forward, back, verdict: worst <= tol, max_mismatch: worst })
}

/// Checks the tuple property starting from `x1` on the `x`-side.
pub fn d_tuple_witness(f: &Correspondence, x1: &SpherePoint, tol: f64) -> Result<TupleWitness, OracleError> {
    let nc = NumericCorrespondence::new(f);
    let forward = nc.roots_over(x1).map_err(degenerate)?;
    witness_from_forward(&nc, &nc.transpose(), *x1, &forward, tol, Variable::X)
}

/// Checks the tuple property starting from `y1` on the `y`-side.
pub fn d_tuple_witness_y(f: &Correspondence, y1: &SpherePoint, tol: f64) -> Result<TupleWitness, OracleError> {
    let nc = NumericCorrespondence::new(f).transpose();
    let forward = nc.roots_over(y1).map_err(degenerate)?;
    witness_from_forward(&nc, &nc.transpose(), *y1, &forward, tol, Variable::Y)
}
