//! Seeded generators for random exact objects.
#![allow(dead_code)]

use dtuple::algebra::{ExactMatrix, GaussianRational, UniPoly};
use dtuple::correspondence::{compose, new_correspondence, Correspondence, FractionalMap, Mobius};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small Gaussian integer, optionally with a small denominator.
pub fn gauss(rng: &mut ChaCha8Rng, complex: bool) -> GaussianRational {
    let re = rng.gen_range(-5..=5);
    let im = if complex && rng.gen_bool(0.5) { rng.gen_range(-3..=3) } else { 0 };
    let den = if rng.gen_bool(0.15) { rng.gen_range(2..=4) } else { 1 };
    GaussianRational::from_fractions(re, den, im, den)
}

pub fn nonzero(rng: &mut ChaCha8Rng, complex: bool) -> GaussianRational {
    loop {
        let g = gauss(rng, complex);
        if g != GaussianRational::from(0) {
            return g;
        }
    }
}

pub fn unipoly(rng: &mut ChaCha8Rng, d: usize, complex: bool) -> UniPoly {
    UniPoly::new((0..=d).map(|_| gauss(rng, complex)).collect())
}

/// A reduced map of exact degree `d`.
pub fn map(rng: &mut ChaCha8Rng, d: usize, complex: bool) -> FractionalMap {
    loop {
        let mut num: Vec<_> = (0..=d).map(|_| gauss(rng, complex)).collect();
        num[d] = nonzero(rng, complex);
        let den = unipoly(rng, d, complex);
        if let Ok(m) = FractionalMap::new(UniPoly::new(num), den) {
            if m.degree() == d {
                return m;
            }
        }
    }
}

/// Maps whose composite passes validation.
pub fn pair(rng: &mut ChaCha8Rng, d: usize, complex: bool) -> (FractionalMap, FractionalMap, Correspondence) {
    loop {
        let (phi, psi) = (map(rng, d, complex), map(rng, d, complex));
        if let Ok(f) = compose(&phi, &psi) {
            return (phi, psi, f);
        }
    }
}

pub fn mobius(rng: &mut ChaCha8Rng, complex: bool) -> Mobius {
    loop {
        let m = Mobius::new(gauss(rng, complex), gauss(rng, complex), gauss(rng, complex), gauss(rng, complex));
        if let Ok(m) = m {
            return m;
        }
    }
}

/// A valid correspondence of degree `d` whose matrix has rank exactly 3,
/// built as a product of random `(d+1)×3` and `3×(d+1)` factors.
pub fn rank_three(rng: &mut ChaCha8Rng, d: usize, complex: bool) -> Correspondence {
    assert!(d >= 2);
    let n = d + 1;
    loop {
        let p = ExactMatrix::from_fn(n, 3, |_, _| gauss(rng, complex));
        let q = ExactMatrix::from_fn(3, n, |_, _| gauss(rng, complex));
        let m = ExactMatrix::from_fn(n, n, |i, j| {
            (0..3).fold(GaussianRational::from(0), |acc, k| &acc + &(&p[(i, k)] * &q[(k, j)]))
        });
        if let Ok(f) = new_correspondence(m) {
            if f.rank() == 3 {
                return f;
            }
        }
    }
}

/// `g^m` for a random map of `k`-tuples `g` with `k·m ≤ 4`.
pub fn perfect_power(rng: &mut ChaCha8Rng, complex: bool) -> (Correspondence, usize, Correspondence) {
    let (k, m) = [(1, 2), (1, 3), (1, 4), (2, 2)][rng.gen_range(0..4)];
    let (_, _, g) = pair(rng, k, complex);
    let f = Correspondence::from_bipoly(&g.to_bipoly().pow(m as u32)).expect("a power of a valid map is valid");
    (f, m, g)
}

/// A symmetric rank-2 composite: `Φ = u/v`, `Ψ = -u/v`.
pub fn symmetric(rng: &mut ChaCha8Rng, d: usize, complex: bool) -> Correspondence {
    loop {
        let phi = map(rng, d, complex);
        let psi = FractionalMap::new(-phi.num(), phi.den().clone()).expect("negation keeps a map reduced");
        if let Ok(f) = compose(&phi, &psi) {
            return f;
        }
    }
}
