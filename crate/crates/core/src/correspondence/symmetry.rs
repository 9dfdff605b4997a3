use num_traits::{One, Zero};

use super::{Correspondence, Factorization};
use crate::algebra::GaussianRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetryReport {
    /// `Aᵀ = A`.
    pub symmetric: bool,
    /// `c` with `Aᵀ = c·A`; necessarily `c = ±1` when present.
    pub swap_scalar: Option<GaussianRational>,
    /// `w` such that `A / w` is entrywise real.
    pub real_up_to_constant: Option<GaussianRational>,
    /// `u` with `|u|² = 1` and `A* = u·A`.
    pub hermitian_up_to_unimodular: Option<GaussianRational>,
}

impl SymmetryReport {
    pub fn is_real_up_to_constant(&self) -> bool {
        self.real_up_to_constant.is_some()
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.hermitian_up_to_unimodular.as_ref().is_some_and(|u| *u == -GaussianRational::one())
    }
}

/// First nonzero coefficient scanning from `x^d y^d` downwards, row by row.
fn first_nonzero(f: &Correspondence) -> (usize, usize, &GaussianRational) {
    let d = f.degree();
    (0..=d)
        .rev()
        .flat_map(|i| (0..=d).rev().map(move |j| (i, j)))
        .map(|(i, j)| (i, j, f.coeff(i, j)))
        .find(|(_, _, c)| !c.is_zero())
        .expect("a valid correspondence has a nonzero coefficient")
}

pub fn symmetry_report(f: &Correspondence) -> SymmetryReport {
    let a = f.matrix();
    let at = a.transpose();
    let symmetric = &at == a;
    let swap_scalar = at.scalar_multiple_of(a);

    let (i0, j0, w) = first_nonzero(f);
    let real_up_to_constant = a.entries().iter().all(|e| (e / w).is_real()).then(|| w.clone());

    let star = at.map(GaussianRational::conj);
    let u = &f.coeff(j0, i0).conj() / w;
    let hermitian_up_to_unimodular = (u.abs_square().is_one() && star == a.scale(&u)).then_some(u);

    SymmetryReport { symmetric, swap_scalar, real_up_to_constant, hermitian_up_to_unimodular }
}

/// `κ_i ν_j + λ_j μ_i = κ_j ν_i + λ_i μ_j` for all `i, j`; equivalent to the
/// composed matrix being symmetric.
pub fn check_symm_factor_condition(fact: &Factorization) -> bool {
    let (kappa, lambda) = (fact.phi.num_coeffs(), fact.phi.den_coeffs());
    let (mu, nu) = (fact.psi.num_coeffs(), fact.psi.den_coeffs());
    let n = fact.degree() + 1;
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = &(&kappa[i] * &nu[j]) + &(&lambda[j] * &mu[i]);
            let rhs = &(&kappa[j] * &nu[i]) + &(&lambda[i] * &mu[j]);
            lhs == rhs
        })
    })
}

/// `κ_i = conj(μ_i)` and `λ_i = conj(ν_i)` for all `i`.
pub fn check_timerev_factor_condition(fact: &Factorization) -> bool {
    let pairs = |p: Vec<GaussianRational>, q: Vec<GaussianRational>| p.iter().zip(&q).all(|(a, b)| *a == b.conj());
    pairs(fact.phi.num_coeffs(), fact.psi.num_coeffs()) && pairs(fact.phi.den_coeffs(), fact.psi.den_coeffs())
}
