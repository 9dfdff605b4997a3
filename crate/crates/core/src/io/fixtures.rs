//! The worked examples: each as printed (polynomial or display-layout
//! matrix), with its expected classification, symmetry and, where printed,
//! its separated form.

use num_traits::Zero;
use serde::Serialize;

use super::{matrix_from_display_rows, parse_fractional_map, parse_polynomial, parse_scalar, InputError};
use crate::algebra::{GaussianRational, UniPoly};
use crate::correspondence::{
    classify, compose_matrix, symmetry_report, Classification, Correspondence, Factorization, Variable,
};
use crate::oracle::{fiber_y, poly_roots, verify_map_of_tuples, SpherePoint};

#[derive(Clone, Copy, Debug)]
pub enum Source {
    Polynomial(&'static str),
    /// Rows in display layout, top-left the coefficient of `x^d y^d`.
    Matrix(&'static [&'static [&'static str]]),
}

#[derive(Clone, Copy, Debug)]
pub enum ExpectedClass {
    Rank2,
    PerfectPower { m: usize, base: &'static str, base_rank: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct ExpectedSymmetry {
    pub symmetric: bool,
    pub real_up_to_constant: bool,
    pub hermitian_u: Option<&'static str>,
}

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub degree: usize,
    pub source: Source,
    /// The printed separated form `Φ(x) = Ψ(y)`, if any.
    pub maps: Option<(&'static str, &'static str)>,
    pub class: ExpectedClass,
    pub symmetry: ExpectedSymmetry,
}

const EXAMPLE1_ROWS: &[&[&str]] = &[
    &["5", "5", "10", "7", "1 + 6*i", "11"],
    &["7", "4", "8", "11", "2 + 3*i", "7"],
    &["9 - i", "3 - 2*i", "6 - 4*i", "15 - i", "6", "3 - 5*i"],
    &["15", "10", "20", "23", "4 + 9*i", "19"],
    &["16", "7", "14", "26", "5 + 3*i", "10"],
    &["7", "9", "18", "9", "1 + 12*i", "21"],
];

const EXAMPLE5_ROWS: &[&[&str]] = &[
    &["28*i", "6*i - 25", "19*i - 7", "-31"],
    &["25 + 6*i", "12*i", "17 + 5*i", "-15 + 4*i"],
    &["7 + 19*i", "-17 + 5*i", "12*i", "-2*i - 28"],
    &["31", "15 + 4*i", "28 - 2*i", "-20*i"],
];

pub const EXAMPLE3_POLYNOMIAL: &str = "3*x^3*y^3 + 10*x^3*y^2 - 51*x^3*y - 26*x^3 + 10*x^2*y^3 - 32*x^2*y^2 \
    + 26*x^2*y - 68*x^2 - 51*x*y^3 + 26*x*y^2 + 279*x*y + 386*x - 26*y^3 - 68*y^2 + 386*y + 220";

pub const EXAMPLE4_POLYNOMIAL: &str = "3*x^4*y^4 + 16*x^4*y^3 + 9*x^4*y^2 + 8*x^4*y + 20*x^4 + 8*x^3*y^4 \
    + 31*x^3*y^3 + 31*x^3*y^2 + 33*x^3*y + 44*x^3 + 11*x^2*y^4 + 72*x^2*y^3 + 25*x^2*y^2 + 16*x^2*y \
    + 84*x^2 + 5*x*y^4 + 15*x*y^3 + 22*x*y^2 + 25*x*y + 24*x + 8*y^4 + 51*y^3 + 19*y^2 + 13*y + 60";

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "example1",
        degree: 5,
        source: Source::Matrix(EXAMPLE1_ROWS),
        maps: Some((
            "(x^5 + 2*x^4 + 3*x^3 + 4*x^2 + 5*x + 1) / (2*x^5 + x^4 - i*x^3 + 3*x^2 + x + 4)",
            "-(y^5 + 2*y^4 + 4*y^3 + y^2 + 3*i*y + 5) / (3*y^5 + y^4 + 2*y^3 + 5*y^2 + y + 1)",
        )),
        class: ExpectedClass::Rank2,
        symmetry: ExpectedSymmetry { symmetric: false, real_up_to_constant: false, hermitian_u: None },
    },
    Fixture {
        name: "example2a",
        degree: 3,
        source: Source::Polynomial(
            "x^3*y^3 + 3*x^3*y^2 + 3*x^3*y + x^3 + 3*x^2*y^3 + 12*x^2*y^2 + 15*x^2*y + 6*x^2 \
             + 3*x*y^3 + 15*x*y^2 + 24*x*y + 12*x + y^3 + 6*y^2 + 12*y + 8",
        ),
        maps: None,
        class: ExpectedClass::PerfectPower { m: 3, base: "x*y + x + y + 2", base_rank: 2 },
        symmetry: ExpectedSymmetry { symmetric: true, real_up_to_constant: true, hermitian_u: Some("1") },
    },
    Fixture {
        name: "example2b",
        degree: 4,
        source: Source::Polynomial(
            "x^4*y^4 + 2*x^4*y^2 + x^4 + 2*x^3*y^4 + 4*x^3*y^2 + 2*x^3 + 3*x^2*y^4 + 8*x^2*y^2 \
             + 5*x^2 + 2*x*y^4 + 6*x*y^2 + 4*x + y^4 + 4*y^2 + 4",
        ),
        maps: None,
        class: ExpectedClass::PerfectPower { m: 2, base: "x^2*y^2 + x^2 + x*y^2 + x + y^2 + 2", base_rank: 2 },
        symmetry: ExpectedSymmetry { symmetric: false, real_up_to_constant: true, hermitian_u: None },
    },
    Fixture {
        name: "example3",
        degree: 3,
        source: Source::Polynomial(EXAMPLE3_POLYNOMIAL),
        maps: Some((
            "(x^3 - 6*x^2 + 11*x - 6) / (-x^3 - 8*x^2 + 31*x + 10)",
            "(2*y^3 + 2*y^2 - 20*y - 16) / (y^3 + 8*y^2 - 31*y - 10)",
        )),
        class: ExpectedClass::Rank2,
        symmetry: ExpectedSymmetry { symmetric: true, real_up_to_constant: true, hermitian_u: Some("1") },
    },
    Fixture {
        name: "example4",
        degree: 4,
        source: Source::Polynomial(EXAMPLE4_POLYNOMIAL),
        maps: Some((
            "(2*x^4 + 3*x^3 + 10*x^2 + x + 7) / (x^4 + 5*x^3 + x^2 + 4*x + 1)",
            "-(y^4 + 2*y^3 + 5*y^2 + 6*y + 4) / (y^4 + 7*y^3 + 2*y^2 + y + 8)",
        )),
        class: ExpectedClass::Rank2,
        symmetry: ExpectedSymmetry { symmetric: false, real_up_to_constant: true, hermitian_u: None },
    },
    Fixture {
        name: "example5",
        degree: 3,
        source: Source::Matrix(EXAMPLE5_ROWS),
        maps: Some((
            "(2*i*x^3 + 3*x^2 + (1 + i)*x + 5) / (7*x^3 + (3 - 2*i)*x^2 + 6*x + 2*i)",
            "(-2*i*y^3 + 3*y^2 + (1 - i)*y + 5) / (7*y^3 + (3 + 2*i)*y^2 + 6*y - 2*i)",
        )),
        class: ExpectedClass::Rank2,
        symmetry: ExpectedSymmetry { symmetric: false, real_up_to_constant: false, hermitian_u: Some("-1") },
    },
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn correspondence(&self) -> Result<Correspondence, InputError> {
        match self.source {
            Source::Polynomial(src) => parse_polynomial(src),
            Source::Matrix(rows) => matrix_from_display_rows(rows),
        }
    }

    pub fn factorization(&self) -> Option<Result<Factorization, InputError>> {
        let (phi, psi) = self.maps?;
        Some((|| {
            let phi = parse_fractional_map(phi, Variable::X, None)?;
            let psi = parse_fractional_map(psi, Variable::Y, None)?;
            Ok(Factorization::new(phi, psi)?)
        })())
    }

    /// Runs every check against the expectations.
    pub fn check(&self, samples: usize, tol: f64, seed: u64) -> FixtureOutcome {
        let mut outcome = FixtureOutcome { name: self.name, ..FixtureOutcome::default() };
        let f = match self.correspondence() {
            Ok(f) => f,
            Err(e) => {
                outcome.notes.push(format!("fixture does not load: {e}"));
                return outcome;
            }
        };
        outcome.degree_ok = f.degree() == self.degree;
        outcome.classification_ok = match (classify(&f), self.class) {
            (Ok(Classification::Rank2 { .. }), ExpectedClass::Rank2) => true,
            (
                Ok(Classification::PerfectPower { m, base, c, .. }),
                ExpectedClass::PerfectPower { m: em, base: eb, base_rank },
            ) => {
                let printed = parse_polynomial(eb).ok();
                let same_base = printed.is_some_and(|p| base.scalar_multiple_of(&p).is_some());
                let expands = base.to_bipoly().pow(m as u32).scale(&c) == f.to_bipoly();
                m == em && base.rank() == base_rank && same_base && expands
            }
            (other, _) => {
                outcome
                    .notes
                    .push(format!("classified as {}", other.map_or_else(|e| e.to_string(), |c| c.kind().to_string())));
                false
            }
        };
        let report = symmetry_report(&f);
        let u = self.symmetry.hermitian_u.map(|s| parse_scalar(s).expect("fixture constant parses"));
        outcome.symmetry_ok = report.symmetric == self.symmetry.symmetric
            && report.is_real_up_to_constant() == self.symmetry.real_up_to_constant
            && report.hermitian_up_to_unimodular == u;
        outcome.factorization_ok = self.factorization().map(|fact| {
            let scalar =
                fact.ok().and_then(|fact| compose_matrix(&fact.phi, &fact.psi).ok()?.scalar_multiple_of(f.matrix()));
            matches!(scalar, Some(c) if !c.is_zero())
        });
        outcome.oracle_ok = match verify_map_of_tuples(&f, samples, tol, seed) {
            Ok(v) => v.passed,
            Err(e) => {
                outcome.notes.push(format!("oracle: {e}"));
                false
            }
        };
        outcome
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub degree_ok: bool,
    pub classification_ok: bool,
    pub symmetry_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization_ok: Option<bool>,
    pub oracle_ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.degree_ok
            && self.classification_ok
            && self.symmetry_ok
            && self.factorization_ok != Some(false)
            && self.oracle_ok
    }
}

/// The fiber of the third example over the value 0 of `Φ`, compared with the
/// `y`-triple printed alongside it.
#[derive(Clone, Debug, Serialize)]
pub struct Example3Discrepancy {
    /// Roots of the numerator of `Φ`, numerically.
    pub x_fiber: Vec<SpherePoint>,
    /// The numerator of `Φ` equals `(x - 1)(x - 2)(x - 3)` exactly.
    pub x_fiber_exact: bool,
    /// `y`-fiber of the correspondence over `x = 1`.
    pub y_fiber: Vec<SpherePoint>,
    pub printed_y_triple: [i64; 3],
    /// The numerator of `Ψ` at each printed `y`, exactly.
    pub printed_values: Vec<(i64, String)>,
    /// Flipping the sign of the `y^2` coefficient makes the printed triple
    /// the exact roots.
    pub sign_flip_fits: bool,
    /// The printed triple does not solve `Ψ(y) = 0`.
    pub discrepancy: bool,
}

pub fn example3_discrepancy() -> Result<Example3Discrepancy, InputError> {
    let ex = fixture("example3").expect("example3 is embedded");
    let f = ex.correspondence()?;
    let fact = ex.factorization().expect("example3 has printed maps")?;
    let kappa = fact.phi.num();
    let expected = [1, 2, 3].iter().fold(UniPoly::one(), |acc, &r| &acc * &UniPoly::from_integers(&[-r, 1]));
    let x_fiber = poly_roots(&kappa.coeffs().iter().map(GaussianRational::to_complex64).collect::<Vec<_>>())
        .map_err(|e| InputError::Document(e.to_string()))?;
    let y_fiber = fiber_y(&f, &SpherePoint::Finite { re: 1.0, im: 0.0 })
        .map_err(|e| InputError::Document(e.to_string()))?
        .points()
        .to_vec();
    let mu = fact.psi.num();
    let printed_y_triple = [-1, -2, 4];
    let values: Vec<GaussianRational> = printed_y_triple.iter().map(|&y| mu.eval(&y.into())).collect();
    let flipped = UniPoly::from_integers(&[-16, -20, -2, 2]);
    let sign_flip_fits = printed_y_triple.iter().all(|&y| flipped.eval(&y.into()).is_zero());
    Ok(Example3Discrepancy {
        x_fiber,
        x_fiber_exact: kappa == &expected,
        y_fiber,
        printed_y_triple,
        discrepancy: values.iter().any(|v| !v.is_zero()),
        printed_values: printed_y_triple.iter().zip(&values).map(|(&y, v)| (y, v.to_string())).collect(),
        sign_flip_fits,
    })
}
