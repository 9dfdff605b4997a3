use num_complex::Complex64;
use serde::Serialize;

use super::roots::{root_set, RootSet, DEADBAND};
use super::{canonical_order, OracleError, SpherePoint};
use crate::correspondence::Correspondence;

/// The `d` points over a base point, canonically ordered.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct Fiber {
    points: Vec<SpherePoint>,
}

impl Fiber {
    pub fn new(points: &[SpherePoint]) -> Self {
        Self { points: canonical_order(points) }
    }

    pub fn points(&self) -> &[SpherePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Double-precision copy of a coefficient matrix, scaled to unit max-norm.
#[derive(Clone, Debug)]
pub struct NumericCorrespondence {
    d: usize,
    a: Vec<Complex64>,
}

impl NumericCorrespondence {
    pub fn new(f: &Correspondence) -> Self {
        let d = f.degree();
        let mut a: Vec<Complex64> = f.matrix().entries().iter().map(|e| e.to_complex64()).collect();
        let max = a.iter().map(|z| z.norm()).fold(0.0, f64::max);
        a.iter_mut().for_each(|z| *z /= max);
        Self { d, a }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    fn at(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * (self.d + 1) + j]
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        let n = self.d + 1;
        Self { d: self.d, a: (0..n * n).map(|k| self.at(k % n, k / n)).collect() }
    }

    /// Coefficients in `y` of `f(x0, y)`; at infinity, the top `x`-row.
    /// Also returns the magnitude scale the coefficients are measured against.
    pub fn specialize(&self, x0: &SpherePoint) -> (Vec<Complex64>, f64) {
        let n = self.d + 1;
        match x0.as_complex() {
            Some(x) => {
                let r = x.norm();
                let coeffs: Vec<Complex64> = (0..n)
                    .map(|j| (0..n).rev().fold(Complex64::new(0.0, 0.0), |acc, i| acc * x + self.at(i, j)))
                    .collect();
                let scale =
                    (0..n).map(|j| (0..n).rev().fold(0.0, |acc, i| acc * r + self.at(i, j).norm())).fold(0.0, f64::max);
                (coeffs, scale)
            }
            None => {
                let coeffs: Vec<Complex64> = (0..n).map(|j| self.at(self.d, j)).collect();
                let scale = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
                (coeffs, scale)
            }
        }
    }

    pub fn roots_over(&self, x0: &SpherePoint) -> Result<RootSet, OracleError> {
        let (coeffs, scale) = self.specialize(x0);
        let max = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if max.is_nan() || max <= DEADBAND * scale {
            return Err(OracleError::DegenerateFiber);
        }
        root_set(&coeffs, Some(self.d))
    }

    /// `Π_y` of the points of the graph over `x0`.
    pub fn fiber_y(&self, x0: &SpherePoint) -> Result<Fiber, OracleError> {
        Ok(Fiber::new(&self.roots_over(x0)?.points()))
    }
}

/// The `y`-values with `f(x0, y) = 0`, infinity included.
pub fn fiber_y(f: &Correspondence, x0: &SpherePoint) -> Result<Fiber, OracleError> {
    NumericCorrespondence::new(f).fiber_y(x0)
}

/// The `x`-values with `f(x, y0) = 0`, infinity included.
pub fn fiber_x(f: &Correspondence, y0: &SpherePoint) -> Result<Fiber, OracleError> {
    NumericCorrespondence::new(f).transpose().fiber_y(y0)
}
