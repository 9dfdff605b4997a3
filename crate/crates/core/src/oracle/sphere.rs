use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A point of the Riemann sphere.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpherePoint {
    Finite { re: f64, im: f64 },
    Infinity,
}

impl SpherePoint {
    pub fn finite(z: Complex64) -> Self {
        debug_assert!(!z.re.is_nan() && !z.im.is_nan());
        SpherePoint::Finite { re: z.re, im: z.im }
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match *self {
            SpherePoint::Finite { re, im } => Some(Complex64::new(re, im)),
            SpherePoint::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }
}

impl From<Complex64> for SpherePoint {
    fn from(z: Complex64) -> Self {
        SpherePoint::finite(z)
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite { re, im } if *im >= 0.0 => write!(f, "{re:.9} + {im:.9}i"),
            SpherePoint::Finite { re, im } => write!(f, "{re:.9} - {:.9}i", -im),
            SpherePoint::Infinity => f.write_str("inf"),
        }
    }
}

/// `2|p − q| / √((1 + |p|²)(1 + |q|²))`, with the limit values at infinity.
pub fn chordal_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    match (p.as_complex(), q.as_complex()) {
        (Some(a), Some(b)) => 2.0 * (a - b).norm() / ((1.0 + a.norm_sqr()) * (1.0 + b.norm_sqr())).sqrt(),
        (Some(a), None) | (None, Some(a)) => 2.0 / (1.0 + a.norm_sqr()).sqrt(),
        (None, None) => 0.0,
    }
}

fn sort_key(p: &SpherePoint) -> (f64, f64) {
    match p.as_complex() {
        Some(z) => {
            let arg = z.im.atan2(z.re);
            (z.norm(), if arg < 0.0 { arg + TAU } else { arg })
        }
        None => (f64::INFINITY, 0.0),
    }
}

/// Stable sort by modulus, then argument in `[0, 2π)`; infinity last.
pub fn canonical_order(points: &[SpherePoint]) -> Vec<SpherePoint> {
    let mut out = points.to_vec();
    out.sort_by(|a, b| {
        let (ka, kb) = (sort_key(a), sort_key(b));
        ka.0.partial_cmp(&kb.0).unwrap_or(Ordering::Equal).then(ka.1.partial_cmp(&kb.1).unwrap_or(Ordering::Equal))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(re: f64, im: f64) -> SpherePoint {
        SpherePoint::Finite { re, im }
    }

    #[test]
    fn chordal_reference_values() {
        assert_eq!(chordal_distance(&pt(0.3, -1.0), &pt(0.3, -1.0)), 0.0);
        assert_eq!(chordal_distance(&pt(0.0, 0.0), &SpherePoint::Infinity), 2.0);
        assert!((chordal_distance(&pt(0.0, 0.0), &pt(1.0, 0.0)) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(chordal_distance(&SpherePoint::Infinity, &SpherePoint::Infinity), 0.0);
    }

    #[test]
    fn ordering_examples() {
        let o = canonical_order(&[pt(1.0, 0.0), pt(-1.0, 0.0), pt(0.0, 1.0)]);
        assert_eq!(o, vec![pt(1.0, 0.0), pt(0.0, 1.0), pt(-1.0, 0.0)]);
        let o = canonical_order(&[pt(2.0, 0.0), SpherePoint::Infinity, pt(0.0, 0.0)]);
        assert_eq!(o, vec![pt(0.0, 0.0), pt(2.0, 0.0), SpherePoint::Infinity]);
        assert_eq!(canonical_order(&[pt(-2.0, 0.0), pt(1.0, 0.0)]), vec![pt(1.0, 0.0), pt(-2.0, 0.0)]);
    }

    #[test]
    fn negative_real_axis_has_argument_pi() {
        let o = canonical_order(&[pt(-1.0, -0.0), pt(0.0, -1.0)]);
        assert_eq!(o[0], pt(-1.0, -0.0));
    }
}
