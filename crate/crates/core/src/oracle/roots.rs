//! Aberth–Ehrlich root finding with multiple-root consolidation.

use num_complex::Complex64;

use super::{OracleError, SpherePoint};

/// Leading coefficients at or below this fraction of the largest are zero.
pub const DEADBAND: f64 = 1e-12;
/// Residual bound `|p(r)| ≤ RESIDUAL · Σ|c_i||r|^i` for accepted roots.
pub const RESIDUAL: f64 = 1e-8;
/// Roots closer than this (relative to `max(1, |z|)`) are one multiple root.
const CLUSTER_RADIUS: f64 = 1e-2;
const DERIVATIVE_RESIDUAL: f64 = 1e-6;
const MAX_ITERATIONS: usize = 2000;

/// Distinct roots with multiplicities, plus how many fell to infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub clusters: Vec<(Complex64, usize)>,
    pub at_infinity: usize,
}

impl RootSet {
    /// Each root repeated by multiplicity, then the infinite ones.
    pub fn points(&self) -> Vec<SpherePoint> {
        let mut out: Vec<SpherePoint> =
            self.clusters.iter().flat_map(|&(z, k)| std::iter::repeat_n(SpherePoint::finite(z), k)).collect();
        out.extend(std::iter::repeat_n(SpherePoint::Infinity, self.at_infinity));
        out
    }
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

fn horner_abs(c: &[Complex64], r: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
}

fn derivative(c: &[Complex64]) -> Vec<Complex64> {
    c.iter().enumerate().skip(1).map(|(i, &a)| a * i as f64).collect()
}

/// Degree after discarding negligible leading coefficients.
pub fn effective_degree(c: &[Complex64]) -> Result<usize, OracleError> {
    let max = c.iter().map(|a| a.norm()).fold(0.0, f64::max);
    if !max.is_finite() || max <= 0.0 {
        return Err(OracleError::NumericallyZeroPolynomial);
    }
    Ok(c.iter().rposition(|a| a.norm() > DEADBAND * max).expect("max is attained"))
}

fn aberth(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let a: Vec<Complex64> = c.iter().map(|&x| x / lead).collect();
    if n == 1 {
        return vec![-a[0]];
    }
    let da = derivative(&a);
    let radius = a[0].norm().powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4)).collect();
    for _ in 0..MAX_ITERATIONS {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let p = horner(&a, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let dp = horner(&da, z[k]);
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let mut step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                step = Complex64::new(0.0, 0.0);
            }
            z[k] -= step;
            worst = worst.max(step.norm() / (1.0 + z[k].norm()));
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

fn newton(c: &[Complex64], mut z: Complex64, steps: usize) -> Complex64 {
    let dc = derivative(c);
    for _ in 0..steps {
        let p = horner(c, z);
        let dp = horner(&dc, z);
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let next = z - p / dp;
        if !next.is_finite() || horner(c, next).norm() >= p.norm() {
            break;
        }
        z = next;
    }
    z
}

fn group(z: &[Complex64]) -> Vec<Vec<Complex64>> {
    let mut parent: Vec<usize> = (0..z.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            let scale = 1f64.max(z[i].norm()).max(z[j].norm());
            if (z[i] - z[j]).norm() < CLUSTER_RADIUS * scale {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for (i, &zi) in z.iter().enumerate() {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, g)) => g.push(zi),
            None => groups.push((r, vec![zi])),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

/// Checks that `z` is a root of multiplicity at least `k` of `c`.
fn is_multiple_root(c: &[Complex64], z: Complex64, k: usize) -> bool {
    let mut d = c.to_vec();
    for j in 0..k {
        let bound = if j == 0 { RESIDUAL } else { DERIVATIVE_RESIDUAL };
        if horner(&d, z).norm() > bound * horner_abs(&d, z.norm()) {
            return false;
        }
        d = derivative(&d);
    }
    true
}

/// Roots of `Σ c_i t^i` as `degree`-many points on the sphere, padding the
/// degree deficit with infinity. Passing `degree = None` uses the effective
/// degree (no infinite roots).
pub fn root_set(c: &[Complex64], degree: Option<usize>) -> Result<RootSet, OracleError> {
    let n = effective_degree(c)?;
    let c = &c[..=n];
    let at_infinity = degree.map_or(0, |d| d.saturating_sub(n));
    let zeros = c.iter().position(|a| a.norm() != 0.0).expect("c has a nonzero entry");
    let mut clusters = Vec::new();
    if zeros > 0 {
        clusters.push((Complex64::new(0.0, 0.0), zeros));
    }
    if n > zeros {
        for g in group(&aberth(&c[zeros..])) {
            let k = g.len();
            let centroid = g.iter().sum::<Complex64>() / k as f64;
            let z = if k == 1 {
                newton(c, centroid, 8)
            } else {
                let mut dk = c.to_vec();
                for _ in 1..k {
                    dk = derivative(&dk);
                }
                newton(&dk, centroid, 20)
            };
            if !is_multiple_root(c, z, k) {
                return Err(OracleError::IllConditionedRoots);
            }
            clusters.push((z, k));
        }
    }
    Ok(RootSet { clusters, at_infinity })
}

/// All finite roots of `Σ c_i t^i`, repeated by multiplicity.
pub fn poly_roots(c: &[Complex64]) -> Result<Vec<SpherePoint>, OracleError> {
    Ok(root_set(c, None)?.points())
}

/// Roots in a degree-`d` context: exactly `d` points, infinity filling the
/// deficit.
pub fn poly_roots_padded(c: &[Complex64], d: usize) -> Result<Vec<SpherePoint>, OracleError> {
    Ok(root_set(c, Some(d))?.points())
}
