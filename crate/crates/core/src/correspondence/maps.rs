//! Fractional degree-`d` maps, the separated form `Φ(x) = Ψ(y)`, and the
//! Möbius action on it.

use std::fmt;

use num_traits::{One, Zero};

use super::{new_correspondence, Correspondence, CorrespondenceError};
use crate::algebra::{row_basis_decompose, unipoly_gcd, AlgebraError, ExactMatrix, GaussianRational, UniPoly};

/// A rational map `num(t) / den(t)` in lowest terms; its degree is
/// `max(deg num, deg den)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FractionalMap {
    num: UniPoly,
    den: UniPoly,
    degree: usize,
}

impl FractionalMap {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, CorrespondenceError> {
        if den.is_zero() {
            return Err(CorrespondenceError::ZeroDenominator);
        }
        let degree = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        if degree == 0 {
            return Err(CorrespondenceError::ConstantMap);
        }
        let g = unipoly_gcd(&num, &den)?;
        if !g.is_constant() {
            return Err(CorrespondenceError::NotReduced(g.to_string()));
        }
        Ok(Self { num, den, degree })
    }

    /// From ascending coefficient lists.
    pub fn from_coeffs(num: Vec<GaussianRational>, den: Vec<GaussianRational>) -> Result<Self, CorrespondenceError> {
        Self::new(UniPoly::new(num), UniPoly::new(den))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Numerator coefficients `[c_0, …, c_d]`, zero-padded to length `d + 1`.
    pub fn num_coeffs(&self) -> Vec<GaussianRational> {
        self.num.padded(self.degree + 1)
    }

    /// Denominator coefficients `[c_0, …, c_d]`, zero-padded to length `d + 1`.
    pub fn den_coeffs(&self) -> Vec<GaussianRational> {
        self.den.padded(self.degree + 1)
    }

    /// Formats as `(num) / (den)` in the given variable.
    pub fn display_in(&self, var: char) -> String {
        format!("({}) / ({})", self.num.display_in(var), self.den.display_in(var))
    }
}

impl fmt::Display for FractionalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in('x'))
    }
}

/// `Φ(x) = Ψ(y)` with both maps of the same degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Factorization {
    pub phi: FractionalMap,
    pub psi: FractionalMap,
}

impl Factorization {
    pub fn new(phi: FractionalMap, psi: FractionalMap) -> Result<Self, CorrespondenceError> {
        if phi.degree() != psi.degree() {
            return Err(CorrespondenceError::DegreeMismatch { phi: phi.degree(), psi: psi.degree() });
        }
        Ok(Self { phi, psi })
    }

    pub fn degree(&self) -> usize {
        self.phi.degree()
    }

    pub fn compose(&self) -> Result<Correspondence, CorrespondenceError> {
        compose(&self.phi, &self.psi)
    }

    /// `c` with `compose(Φ, Ψ) = c · f`, if the factorization describes `f`.
    pub fn round_trip_scalar(&self, f: &Correspondence) -> Option<GaussianRational> {
        let composed = compose_matrix(&self.phi, &self.psi).ok()?;
        composed.scalar_multiple_of(f.matrix()).filter(|c| !c.is_zero())
    }
}

/// The coefficient matrix of `num_Φ(x)·den_Ψ(y) − den_Φ(x)·num_Ψ(y)`, without
/// validating it: entry `(i, j)` is `κ_i ν_j − λ_i μ_j`.
pub fn compose_matrix(phi: &FractionalMap, psi: &FractionalMap) -> Result<ExactMatrix, CorrespondenceError> {
    if phi.degree() != psi.degree() {
        return Err(CorrespondenceError::DegreeMismatch { phi: phi.degree(), psi: psi.degree() });
    }
    let (kappa, lambda) = (phi.num_coeffs(), phi.den_coeffs());
    let (mu, nu) = (psi.num_coeffs(), psi.den_coeffs());
    let n = phi.degree() + 1;
    Ok(ExactMatrix::from_fn(n, n, |i, j| &(&kappa[i] * &nu[j]) - &(&lambda[i] * &mu[j])))
}

/// The correspondence `Φ(x) = Ψ(y)`, cleared of denominators and validated.
pub fn compose(phi: &FractionalMap, psi: &FractionalMap) -> Result<Correspondence, CorrespondenceError> {
    new_correspondence(compose_matrix(phi, psi)?)
}

/// Separates variables in a rank-2 correspondence.
///
/// With rows `R_a`, `R_b` the first two independent rows and
/// `R_i = σ_i R_a + τ_i R_b`, the polynomial is `p(x)·u(y) + q(x)·v(y)` where
/// `p = Σ σ_i x^i`, `q = Σ τ_i x^i`, `u = R_a·Y`, `v = R_b·Y`. So `f = 0` iff
/// `p/q = −v/u`, and composing the result reproduces `f` exactly.
pub fn factorize(f: &Correspondence) -> Result<Factorization, CorrespondenceError> {
    let basis = row_basis_decompose(f.matrix()).map_err(|e| match e {
        AlgebraError::RankNotTwo { rank } => CorrespondenceError::RankNotTwo { rank },
        other => other.into(),
    })?;
    let p = UniPoly::new(basis.sigma);
    let q = UniPoly::new(basis.tau);
    let u = UniPoly::new(f.matrix().row(basis.a).to_vec());
    let v = UniPoly::new(f.matrix().row(basis.b).to_vec());
    let reduced = |n: &UniPoly, d: &UniPoly| unipoly_gcd(n, d).map(|g| g.is_constant()).unwrap_or(false);
    if !reduced(&p, &q) || !reduced(&v, &u) {
        return Err(CorrespondenceError::InternalNonreduced);
    }
    let phi = FractionalMap::new(p, q)?;
    let psi = FractionalMap::new(-&v, u)?;
    Factorization::new(phi, psi)
}

/// `z ↦ (a z + b) / (c z + d)` with nonzero determinant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mobius {
    a: GaussianRational,
    b: GaussianRational,
    c: GaussianRational,
    d: GaussianRational,
}

impl Mobius {
    pub fn new(
        a: GaussianRational,
        b: GaussianRational,
        c: GaussianRational,
        d: GaussianRational,
    ) -> Result<Self, CorrespondenceError> {
        let m = Self { a, b, c, d };
        if m.det().is_zero() {
            return Err(CorrespondenceError::SingularMobius);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self {
            a: GaussianRational::one(),
            b: GaussianRational::zero(),
            c: GaussianRational::zero(),
            d: GaussianRational::one(),
        }
    }

    pub fn det(&self) -> GaussianRational {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// The adjugate, which inverts the map projectively.
    pub fn inverse(&self) -> Self {
        Self { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn entries(&self) -> [&GaussianRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

/// `M ∘ φ`: numerator `a·num + b·den`, denominator `c·num + d·den`.
pub fn mobius_postcompose(m: &Mobius, phi: &FractionalMap) -> FractionalMap {
    let num = &phi.num.scale(&m.a) + &phi.den.scale(&m.b);
    let den = &phi.num.scale(&m.c) + &phi.den.scale(&m.d);
    FractionalMap::new(num, den).expect("an invertible Möbius map preserves reduced form and degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_integers(re, im)
    }

    fn map(num: &[i64], den: &[i64]) -> FractionalMap {
        FractionalMap::new(UniPoly::from_integers(num), UniPoly::from_integers(den)).unwrap()
    }

    #[test]
    fn monomial_outer_product() {
        // Φ = x^3 / 1, Ψ = y^3 / 1 gives x^3 - y^3.
        let phi = map(&[0, 0, 0, 1], &[1]);
        let f = compose(&phi, &phi).unwrap();
        for i in 0..=3 {
            for j in 0..=3 {
                let expected = match (i, j) {
                    (3, 0) => g(1, 0),
                    (0, 3) => g(-1, 0),
                    _ => g(0, 0),
                };
                assert_eq!(f.coeff(i, j), &expected, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn monomial_factorization_round_trips() {
        let phi = map(&[0, 0, 1], &[1]);
        let f = compose(&phi, &phi).unwrap();
        let fact = factorize(&f).unwrap();
        assert_eq!(fact.round_trip_scalar(&f), Some(g(1, 0)));
        assert_eq!(fact.degree(), 2);
    }

    #[test]
    fn factorize_rejects_other_ranks() {
        // x^2 y^2 + x y + 1 has rank 3.
        let mut a = ExactMatrix::identity(3);
        a[(1, 1)] = 1.into();
        let f = new_correspondence(a).unwrap();
        assert_eq!(factorize(&f), Err(CorrespondenceError::RankNotTwo { rank: 3 }));
    }

    #[test]
    fn fractional_map_validation() {
        assert_eq!(
            FractionalMap::new(UniPoly::from_integers(&[1, 1]), UniPoly::zero()),
            Err(CorrespondenceError::ZeroDenominator)
        );
        assert_eq!(
            FractionalMap::new(UniPoly::from_integers(&[3]), UniPoly::from_integers(&[1])),
            Err(CorrespondenceError::ConstantMap)
        );
        assert!(matches!(
            FractionalMap::new(UniPoly::from_integers(&[-1, 0, 1]), UniPoly::from_integers(&[1, 1])),
            Err(CorrespondenceError::NotReduced(_))
        ));
    }

    #[test]
    fn mobius_basics() {
        let x = map(&[0, 1], &[1]);
        assert_eq!(mobius_postcompose(&Mobius::identity(), &x), x);
        let flip = Mobius::new(g(0, 0), g(1, 0), g(1, 0), g(0, 0)).unwrap();
        assert_eq!(mobius_postcompose(&flip, &x), map(&[1], &[0, 1]));
        assert_eq!(Mobius::new(g(1, 0), g(2, 0), g(2, 0), g(4, 0)), Err(CorrespondenceError::SingularMobius));
    }

    #[test]
    fn mobius_inverse_recovers_map_up_to_scalar() {
        let phi = map(&[5, 0, 1, 2], &[1, 3, 0, 1]);
        let m = Mobius::new(g(1, 2), g(0, -1), g(3, 0), g(1, 1)).unwrap();
        let back = mobius_postcompose(&m.inverse(), &mobius_postcompose(&m, &phi));
        let c = back.num().leading().unwrap() / phi.num().leading().unwrap();
        assert_eq!(back.num(), &phi.num().scale(&c));
        assert_eq!(back.den(), &phi.den().scale(&c));
    }

    #[test]
    fn degree_mismatch() {
        let a = map(&[0, 1], &[1]);
        let b = map(&[0, 0, 1], &[1]);
        assert_eq!(compose(&a, &b), Err(CorrespondenceError::DegreeMismatch { phi: 1, psi: 2 }));
    }
}
