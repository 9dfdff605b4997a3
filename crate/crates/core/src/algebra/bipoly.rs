//! Bivariate polynomials viewed as polynomials in `y` whose coefficients are
//! polynomials in `x`, i.e. elements of `Q(i)[x][y]`.
//!
//! GCDs are taken in `Q(i)(x)[y]` via subresultant remainder sequences and
//! returned primitive (no factor depending on `x` alone). Because `Q(i)[x]`
//! is a UFD, division by a primitive divisor that divides over `Q(i)(x)` is
//! exact in `Q(i)[x][y]`, which is what the square-free machinery relies on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::unipoly::{push_term, squarefree_decomposition, unipoly_gcd};
use super::{AlgebraError, ExactMatrix, GaussianRational, UniPoly};

/// `coeffs[j]` is the coefficient of `y^j`, a polynomial in `x`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![UniPoly::constant(c)])
    }

    pub fn x() -> Self {
        Self::new(vec![UniPoly::monomial(GaussianRational::one(), 1)])
    }

    pub fn y() -> Self {
        Self::new(vec![UniPoly::zero(), UniPoly::one()])
    }

    /// `matrix[(i, j)]` is the coefficient of `x^i y^j`.
    pub fn from_matrix(matrix: &ExactMatrix) -> Self {
        Self::new(
            (0..matrix.cols())
                .map(|j| UniPoly::new((0..matrix.rows()).map(|i| matrix[(i, j)].clone()).collect()))
                .collect(),
        )
    }

    /// Square `(size × size)` coefficient matrix indexed by `(x-power, y-power)`,
    /// or `None` if some degree does not fit.
    pub fn to_matrix(&self, size: usize) -> Option<ExactMatrix> {
        if self.deg_x().is_some_and(|d| d >= size) || self.deg_y().is_some_and(|d| d >= size) {
            return None;
        }
        Some(ExactMatrix::from_fn(size, size, |i, j| self.coeff(i, j)))
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> GaussianRational {
        self.coeffs.get(j).map_or_else(GaussianRational::zero, |p| p.coeff(i))
    }

    pub fn y_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    pub fn lc_y(&self) -> Option<&UniPoly> {
        self.coeffs.last()
    }

    /// Leading term in lexicographic order with `x > y`: highest power of
    /// `x`, then highest power of `y` among those. Returns `(i, j, coeff)`.
    pub fn leading_lex(&self) -> Option<(usize, usize, GaussianRational)> {
        let dx = self.deg_x()?;
        let j = (0..self.coeffs.len()).rev().find(|&j| !self.coeff(dx, j).is_zero())?;
        Some((dx, j, self.coeff(dx, j)))
    }

    /// Scaled so the lexicographic leading coefficient is 1.
    pub fn normalize_lex(&self) -> Self {
        match self.leading_lex() {
            Some((_, _, lc)) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
            None => Self::zero(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiplies every `y`-coefficient by a polynomial in `x`.
    pub fn mul_x_poly(&self, p: &UniPoly) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * p).collect())
    }

    /// Divides every `y`-coefficient by `p`, failing unless all divisions are exact.
    pub fn div_x_poly(&self, p: &UniPoly) -> Option<Self> {
        self.coeffs.iter().map(|c| c.exact_div(p)).collect::<Option<Vec<_>>>().map(Self::new)
    }

    /// Multiplies by `y^k`.
    pub fn shift_y(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative_y(&self) -> Self {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(j, c)| c.scale(&GaussianRational::from(j as i64))).collect(),
        )
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_variables(&self) -> Self {
        let dx = self.deg_x().map_or(0, |d| d + 1);
        Self::new((0..dx).map(|i| UniPoly::new((0..self.coeffs.len()).map(|j| self.coeff(i, j)).collect())).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Exact quotient in `Q(i)[x][y]`, `None` if `divisor` does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.deg_y()?;
        let lc = divisor.lc_y()?;
        let mut rem = self.clone();
        let mut quot: Vec<UniPoly> = Vec::new();
        while let Some(dr) = rem.deg_y() {
            if dr < db {
                return None;
            }
            let t = rem.lc_y()?.exact_div(lc)?;
            let k = dr - db;
            if quot.len() <= k {
                quot.resize(k + 1, UniPoly::zero());
            }
            rem = &rem - &divisor.mul_x_poly(&t).shift_y(k);
            if rem.deg_y() == Some(dr) {
                return None;
            }
            quot[k] = t;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder in `y`: `lc(divisor)^(δ+1) · self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.deg_y().expect("pseudo-division by zero");
        let lc = divisor.lc_y().expect("nonzero divisor");
        let Some(da) = self.deg_y() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let mut rem = self.clone();
        let mut e = da - db + 1;
        while let Some(dr) = rem.deg_y() {
            if dr < db {
                break;
            }
            let t = rem.lc_y().expect("nonzero").clone();
            rem = &rem.mul_x_poly(lc) - &divisor.mul_x_poly(&t).shift_y(dr - db);
            e -= 1;
        }
        rem.mul_x_poly(&lc.pow(e as u32))
    }

    pub fn primitive_part_y(&self) -> Self {
        match bipoly_content_y(self) {
            Ok(c) => self.div_x_poly(&c).expect("content divides every coefficient"),
            Err(_) => Self::zero(),
        }
    }

    /// Formats as a sum of `x^i*y^j` terms in descending lexicographic order.
    pub fn display(&self) -> String {
        let mut out = String::new();
        let dx = self.deg_x().unwrap_or(0);
        for i in (0..=dx).rev() {
            for j in (0..self.coeffs.len()).rev() {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    (_, 0) => super::unipoly::monomial_text('x', i),
                    (0, _) => super::unipoly::monomial_text('y', j),
                    _ => format!("{}*{}", super::unipoly::monomial_text('x', i), super::unipoly::monomial_text('y', j)),
                };
                push_term(&mut out, &c, &mono);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = UniPoly::zero();
        BiPoly::new((0..n).map(|j| self.coeffs.get(j).unwrap_or(&zero) + rhs.coeffs.get(j).unwrap_or(&zero)).collect())
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = UniPoly::zero();
        BiPoly::new((0..n).map(|j| self.coeffs.get(j).unwrap_or(&zero) - rhs.coeffs.get(j).unwrap_or(&zero)).collect())
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Monic GCD of the `y`-coefficients (each a polynomial in `x`). A
/// non-constant result is a factor depending on `x` alone, i.e. a vertical
/// line component of the zero set.
pub fn bipoly_content_y(f: &BiPoly) -> Result<UniPoly, AlgebraError> {
    let mut nonzero = f.coeffs.iter().filter(|c| !c.is_zero());
    let first = nonzero.next().ok_or(AlgebraError::ZeroPolynomial)?;
    let mut g = first.monic();
    for c in nonzero {
        if g.is_constant() {
            break;
        }
        g = unipoly_gcd(&g, c)?;
    }
    Ok(g)
}

/// GCD in `Q(i)(x)[y]` by the subresultant PRS, returned primitive in `y`
/// and scaled so its lexicographic leading coefficient is 1.
pub fn bipoly_gcd_y(f: &BiPoly, g: &BiPoly) -> Result<BiPoly, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (mut a, mut b) = {
        let (pf, pg) = (f.primitive_part_y(), g.primitive_part_y());
        if pf.deg_y() >= pg.deg_y() {
            (pf, pg)
        } else {
            (pg, pf)
        }
    };
    if b.deg_y() == Some(0) {
        return Ok(BiPoly::one());
    }
    let mut lead = UniPoly::one();
    let mut h = UniPoly::one();
    loop {
        let delta = a.deg_y().expect("nonzero") - b.deg_y().expect("nonzero");
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            break;
        }
        if r.deg_y() == Some(0) {
            return Ok(BiPoly::one());
        }
        let divisor = &lead * &h.pow(delta as u32);
        a = b;
        b = r.div_x_poly(&divisor).expect("subresultant division is exact");
        lead = a.lc_y().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => lead.clone(),
            _ => lead.pow(delta as u32).exact_div(&h.pow(delta as u32 - 1)).expect("subresultant h update is exact"),
        };
    }
    Ok(b.primitive_part_y().normalize_lex())
}

/// Square-free decomposition in `y` of a primitive polynomial (Yun). Entry
/// `k - 1` holds the primitive factor of multiplicity `k`.
fn squarefree_decomposition_y(p: &BiPoly) -> Vec<BiPoly> {
    if p.deg_y().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let gcd_or_pp = |u: &BiPoly, v: &BiPoly| -> BiPoly {
        if v.is_zero() {
            u.primitive_part_y().normalize_lex()
        } else {
            bipoly_gcd_y(u, v).expect("u is nonzero")
        }
    };
    let dp = p.derivative_y();
    let a0 = gcd_or_pp(p, &dp);
    let mut b = p.exact_div(&a0).expect("gcd divides p");
    let c = dp.exact_div(&a0).expect("gcd divides dp");
    let mut d = &c - &b.derivative_y();
    let mut factors = Vec::new();
    while b.deg_y().unwrap_or(0) > 0 {
        let a = gcd_or_pp(&b, &d);
        b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &b.derivative_y();
        factors.push(a);
    }
    factors
}

/// `Π a_k^(k/m)` over a multiplicity list, `None` if some nontrivial factor
/// has multiplicity not divisible by `m`.
fn root_from_multiplicities<T>(
    factors: Vec<T>,
    m: usize,
    one: T,
    is_trivial: impl Fn(&T) -> bool,
    mul: impl Fn(&T, &T) -> T,
) -> Option<T> {
    let mut root = one;
    for (k, a) in factors.into_iter().enumerate() {
        if is_trivial(&a) {
            continue;
        }
        let mult = k + 1;
        if mult % m != 0 {
            return None;
        }
        for _ in 0..mult / m {
            root = mul(&root, &a);
        }
    }
    Some(root)
}

/// Writes `f = c · g^m` with `g` normalized (lexicographic leading
/// coefficient 1), if possible.
///
/// The candidate comes from square-free decomposition (derivative GCDs) of
/// the primitive part in `y` and of the `x`-content; it is accepted only if
/// re-expanding `c · g^m` reproduces `f` exactly.
pub fn perfect_power_extract(f: &BiPoly, m: usize) -> Result<Option<(GaussianRational, BiPoly)>, AlgebraError> {
    let (Some(dx), Some(dy)) = (f.deg_x(), f.deg_y()) else {
        return Err(AlgebraError::BadExponent { m, reason: "polynomial is zero" });
    };
    if m < 2 {
        return Err(AlgebraError::BadExponent { m, reason: "exponent must be at least 2" });
    }
    if dx % m != 0 || dy % m != 0 {
        return Err(AlgebraError::BadExponent { m, reason: "exponent must divide both degrees" });
    }
    let content = bipoly_content_y(f)?;
    let primitive = f.div_x_poly(&content).expect("content divides");

    let Some(content_root) = root_from_multiplicities(
        squarefree_decomposition(&content),
        m,
        UniPoly::one(),
        UniPoly::is_constant,
        |a, b| a * b,
    ) else {
        return Ok(None);
    };
    let Some(primitive_root) = root_from_multiplicities(
        squarefree_decomposition_y(&primitive),
        m,
        BiPoly::one(),
        |a: &BiPoly| a.deg_y().unwrap_or(0) == 0,
        |a, b| a * b,
    ) else {
        return Ok(None);
    };

    let g = primitive_root.mul_x_poly(&content_root).normalize_lex();
    let (_, _, c) = f.leading_lex().expect("f is nonzero");
    if g.pow(m as u32).scale(&c) == *f {
        Ok(Some((c, g)))
    } else {
        Ok(None)
    }
}
