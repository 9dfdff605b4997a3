use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::fiber::NumericCorrespondence;
use super::roots::{root_set, RootSet};
use super::witness::{witness_from_forward, TupleWitness};
use super::{chordal_distance, multiset_match, OracleError, SpherePoint};
use crate::correspondence::{Correspondence, Factorization, Variable};

/// Samples are drawn uniformly from the disk of this radius.
pub const SAMPLE_RADIUS: f64 = 3.0;
const LEADING_FLOOR: f64 = 1e-9;
const POOL_FACTOR: usize = 10;

#[derive(Clone, Debug, Serialize)]
pub struct OracleVerdict {
    pub passed: bool,
    pub samples: usize,
    pub rejected: usize,
    /// The witness with the largest mismatch.
    pub worst: TupleWitness,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactorizationCheck {
    pub passed: bool,
    pub samples: usize,
    pub rejected: usize,
    pub max_mismatch: f64,
}

fn check_params(n_samples: usize, tol: f64) -> Result<(), OracleError> {
    if n_samples == 0 {
        return Err(OracleError::InvalidParameter("sample count must be at least 1"));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(OracleError::InvalidParameter("tolerance must be positive and finite"));
    }
    Ok(())
}

fn candidate_pool(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = SAMPLE_RADIUS * rng.gen::<f64>().sqrt();
            let theta = std::f64::consts::TAU * rng.gen::<f64>();
            Complex64::from_polar(r, theta)
        })
        .collect()
}

/// Forward roots over a generic `x1`, or `None` when `x1` is too close to a
/// pole of the leading coefficient, a branch point, or a cluster.
fn generic_forward(nc: &NumericCorrespondence, x1: &SpherePoint, tol: f64) -> Option<RootSet> {
    let (coeffs, scale) = nc.specialize(x1);
    if coeffs[nc.degree()].norm() < LEADING_FLOOR * scale {
        return None;
    }
    let set = root_set(&coeffs, Some(nc.degree())).ok()?;
    separated(&set, tol).then_some(set)
}

fn separated(set: &RootSet, tol: f64) -> bool {
    let pts: Vec<SpherePoint> = set.clusters.iter().map(|&(z, _)| z.into()).collect();
    pts.iter().enumerate().all(|(i, p)| pts[i + 1..].iter().all(|q| chordal_distance(p, q) >= 10.0 * tol))
}

/// Evaluates candidates in parallel, in fixed-size chunks, keeping the first
/// `n` accepted results in candidate order.
fn sample<T: Send>(
    n: usize,
    seed: u64,
    eval: impl Fn(usize, Complex64) -> Option<T> + Sync,
) -> Result<(Vec<T>, usize), OracleError> {
    let pool = candidate_pool(POOL_FACTOR * n, seed);
    let mut accepted = Vec::with_capacity(n);
    let mut rejected = 0;
    for (k, chunk) in pool.chunks(n).enumerate() {
        let results: Vec<Option<T>> = chunk.par_iter().enumerate().map(|(i, &z)| eval(k * n + i, z)).collect();
        for r in results {
            if accepted.len() == n {
                break;
            }
            match r {
                Some(t) => accepted.push(t),
                None => rejected += 1,
            }
        }
        if accepted.len() == n {
            return Ok((accepted, rejected));
        }
    }
    Err(OracleError::TooManyDegenerateSamples { accepted: accepted.len(), requested: n, drawn: pool.len() })
}

/// Numeric test of the tuple property at `n_samples` random start points,
/// alternating between the `x`- and `y`-sides.
pub fn verify_map_of_tuples(
    f: &Correspondence,
    n_samples: usize,
    tol: f64,
    seed: u64,
) -> Result<OracleVerdict, OracleError> {
    check_params(n_samples, tol)?;
    let nc = NumericCorrespondence::new(f);
    let nt = nc.transpose();
    let (witnesses, rejected) = sample(n_samples, seed, |idx, z| {
        let (fwd, back, start) = if idx % 2 == 0 { (&nc, &nt, Variable::X) } else { (&nt, &nc, Variable::Y) };
        let x1 = SpherePoint::finite(z);
        let forward = generic_forward(fwd, &x1, tol)?;
        witness_from_forward(fwd, back, x1, &forward, tol, start).ok()
    })?;
    let passed = witnesses.iter().all(|w| w.verdict);
    let worst = witnesses
        .into_iter()
        .reduce(|a, b| if b.max_mismatch > a.max_mismatch { b } else { a })
        .expect("at least one sample");
    Ok(OracleVerdict { passed, samples: n_samples, rejected, worst })
}

fn eval_complex(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// Compares the fibers of `f` with the solutions of `Ψ(y) = Φ(x1)`.
pub fn verify_factorization(
    f: &Correspondence,
    fact: &Factorization,
    n_samples: usize,
    tol: f64,
    seed: u64,
) -> Result<FactorizationCheck, OracleError> {
    check_params(n_samples, tol)?;
    let d = f.degree();
    if fact.degree() != d {
        return Ok(FactorizationCheck { passed: false, samples: 0, rejected: 0, max_mismatch: 2.0 });
    }
    let numeric = |v: Vec<crate::algebra::GaussianRational>| v.iter().map(|c| c.to_complex64()).collect::<Vec<_>>();
    let (kappa, lambda) = (numeric(fact.phi.num_coeffs()), numeric(fact.phi.den_coeffs()));
    let (mu, nu) = (numeric(fact.psi.num_coeffs()), numeric(fact.psi.den_coeffs()));
    let nc = NumericCorrespondence::new(f);
    let (mismatches, rejected) = sample(n_samples, seed, |_, z| {
        let x1 = SpherePoint::finite(z);
        let forward = generic_forward(&nc, &x1, tol)?;
        let (k, l) = (eval_complex(&kappa, z), eval_complex(&lambda, z));
        let target: Vec<Complex64> = mu.iter().zip(&nu).map(|(&m, &n)| l * m - k * n).collect();
        let roots = root_set(&target, Some(d)).ok()?;
        let (_, worst) = multiset_match(&forward.points(), &roots.points(), tol).ok()?;
        Some(worst)
    })?;
    let max_mismatch = mismatches.into_iter().fold(0.0, f64::max);
    Ok(FactorizationCheck { passed: max_mismatch <= tol, samples: n_samples, rejected, max_mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BiPoly, ExactMatrix, GaussianRational, UniPoly};
    use crate::correspondence::{compose, factorize, new_correspondence, FractionalMap};
    use crate::oracle::{d_tuple_witness, d_tuple_witness_y};

    fn corr(rows: &[&[i64]]) -> Correspondence {
        let rows = rows.iter().map(|r| r.iter().map(|&v| GaussianRational::from(v)).collect()).collect();
        new_correspondence(ExactMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn rank_three() -> Correspondence {
        // x^2 y^2 + x y + x^2 + 1
        corr(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]])
    }

    #[test]
    fn roots_of_unity_witness() {
        let f = corr(&[&[0, 0, 0, -1], &[0; 4], &[0; 4], &[1, 0, 0, 0]]);
        let w = d_tuple_witness(&f, &SpherePoint::finite(Complex64::new(1.0, 0.0)), 1e-6).unwrap();
        assert!(w.verdict);
        for p in w.forward.points() {
            assert!((p.as_complex().unwrap().norm() - 1.0).abs() < 1e-12);
        }
        assert!(d_tuple_witness_y(&f, &SpherePoint::finite(Complex64::new(0.3, 0.2)), 1e-6).unwrap().verdict);
    }

    #[test]
    fn rank_three_fails() {
        let f = rank_three();
        let v = verify_map_of_tuples(&f, 20, 1e-6, 7).unwrap();
        assert!(!v.passed);
        assert!(v.worst.max_mismatch > 1e-3);
    }

    #[test]
    fn cube_of_mobius_passes() {
        let g = BiPoly::new(vec![UniPoly::from_integers(&[2, 1]), UniPoly::from_integers(&[1, 1])]);
        let f = Correspondence::from_bipoly(&g.pow(3)).unwrap();
        let v = verify_map_of_tuples(&f, 50, 1e-6, 0).unwrap();
        assert!(v.passed, "worst mismatch {}", v.worst.max_mismatch);
    }

    #[test]
    fn composed_map_and_its_factorization() {
        let phi =
            FractionalMap::new(UniPoly::from_integers(&[1, -2, 0, 3]), UniPoly::from_integers(&[2, 0, 1])).unwrap();
        let psi =
            FractionalMap::new(UniPoly::from_integers(&[0, 1, 1, 1]), UniPoly::from_integers(&[5, 0, 0, 2])).unwrap();
        let f = compose(&phi, &psi).unwrap();
        assert!(verify_map_of_tuples(&f, 40, 1e-6, 3).unwrap().passed);
        let fact = factorize(&f).unwrap();
        assert!(verify_factorization(&f, &fact, 40, 1e-6, 3).unwrap().passed);
        let wrong = Factorization::new(psi.clone(), phi.clone()).unwrap();
        assert!(!verify_factorization(&f, &wrong, 40, 1e-6, 3).unwrap().passed);
    }

    #[test]
    fn deterministic_for_seed() {
        let f = rank_three();
        let a = verify_map_of_tuples(&f, 10, 1e-6, 11).unwrap();
        let b = verify_map_of_tuples(&f, 10, 1e-6, 11).unwrap();
        assert_eq!(a.worst.max_mismatch, b.worst.max_mismatch);
        assert_eq!(a.worst.x1, b.worst.x1);
    }

    #[test]
    fn parameters_are_checked() {
        let f = rank_three();
        assert!(matches!(verify_map_of_tuples(&f, 0, 1e-6, 0), Err(OracleError::InvalidParameter(_))));
        assert!(matches!(verify_map_of_tuples(&f, 1, -1.0, 0), Err(OracleError::InvalidParameter(_))));
    }
}
