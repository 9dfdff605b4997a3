//! Worked examples for the exact layers.

use dtuple::algebra::{
    bipoly_content_y, bipoly_gcd_y, perfect_power_extract, rank_exact, row_basis_decompose, unipoly_gcd, AlgebraError,
    BiPoly, ExactMatrix, GaussianRational, UniPoly,
};
use dtuple::correspondence::{
    check_symm_factor_condition, check_timerev_factor_condition, classify, compose, compose_matrix, factorize,
    mobius_postcompose, new_correspondence, symmetry_report, Classification, CorrespondenceError, Factorization,
    FractionalMap, Mobius, Variable,
};
use dtuple::io::{
    fixture, load_matrix, parse_bipoly, parse_fractional_map, parse_polynomial, save_matrix, ComplexEntry, InputError,
    RationalEntry,
};
use num_traits::Zero;

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_integers(re, im)
}

fn poly(src: &str) -> BiPoly {
    parse_bipoly(src).unwrap()
}

fn upoly(c: &[i64]) -> UniPoly {
    UniPoly::from_integers(c)
}

fn map(src: &str, var: Variable) -> FractionalMap {
    parse_fractional_map(src, var, None).unwrap()
}

fn example_matrix(name: &str) -> ExactMatrix {
    fixture(name).unwrap().correspondence().unwrap().matrix().clone()
}

fn example_maps(name: &str) -> Factorization {
    fixture(name).unwrap().factorization().unwrap().unwrap()
}

/// Solves `row = σ·Ra + τ·Rb` by Cramer's rule on the first pair of columns
/// with a nonzero minor.
fn cramer(
    ra: &[GaussianRational],
    rb: &[GaussianRational],
    row: &[GaussianRational],
) -> (GaussianRational, GaussianRational) {
    let n = ra.len();
    for j in 0..n {
        for k in j + 1..n {
            let det = &(&ra[j] * &rb[k]) - &(&ra[k] * &rb[j]);
            if det.is_zero() {
                continue;
            }
            let s = &(&(&row[j] * &rb[k]) - &(&row[k] * &rb[j])) / &det;
            let t = &(&(&ra[j] * &row[k]) - &(&ra[k] * &row[j])) / &det;
            return (s, t);
        }
    }
    panic!("rows are dependent");
}

#[test]
fn ranks() {
    assert_eq!(rank_exact(&example_matrix("example1")), 2);
    assert_eq!(rank_exact(&ExactMatrix::identity(3)), 3);
    assert_eq!(rank_exact(&ExactMatrix::zeros(4, 4)), 0);
}

#[test]
fn example1_row_basis_agrees_with_cramer() {
    let m = example_matrix("example1");
    let basis = row_basis_decompose(&m).unwrap();
    assert_eq!((basis.a, basis.b), (0, 1));
    for i in 0..m.rows() {
        let (s, t) = cramer(m.row(0), m.row(1), m.row(i));
        assert_eq!((&basis.sigma[i], &basis.tau[i]), (&s, &t), "row {i}");
        for j in 0..m.cols() {
            assert_eq!(&(&s * &m[(0, j)]) + &(&t * &m[(1, j)]), m[(i, j)]);
        }
    }
}

#[test]
fn row_basis_with_duplicate_row() {
    let r = vec![g(1, 0), g(2, 0), g(3, 0)];
    let s = vec![g(0, 1), g(1, 0), g(5, 0)];
    let m = ExactMatrix::from_rows(vec![r.clone(), r, s]).unwrap();
    let basis = row_basis_decompose(&m).unwrap();
    assert_eq!((basis.a, basis.b), (0, 2));
    assert_eq!(basis.sigma, vec![g(1, 0), g(1, 0), g(0, 0)]);
    assert_eq!(basis.tau, vec![g(0, 0), g(0, 0), g(1, 0)]);
    let rank_one = ExactMatrix::from_fn(3, 3, |i, j| g((i + 1) as i64 * (j + 1) as i64, 0));
    assert_eq!(row_basis_decompose(&rank_one), Err(AlgebraError::RankNotTwo { rank: 1 }));
}

#[test]
fn univariate_gcds() {
    assert_eq!(unipoly_gcd(&upoly(&[-1, 0, 1]), &upoly(&[-1, 1])).unwrap(), upoly(&[-1, 1]));
    assert_eq!(unipoly_gcd(&upoly(&[1, 0, 1]), &upoly(&[1, 1])).unwrap(), UniPoly::one());
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6 has simple roots.
    let p = upoly(&[-6, 11, -6, 1]);
    assert_eq!(unipoly_gcd(&p, &p.derivative()).unwrap(), UniPoly::one());
}

#[test]
fn contents_in_x() {
    assert_eq!(bipoly_content_y(&poly("(x-1)*(y^2+y+1)")).unwrap(), upoly(&[-1, 1]));
    assert_eq!(bipoly_content_y(&poly("x*y+1")).unwrap(), UniPoly::one());
    let cube = fixture("example2a").unwrap().correspondence().unwrap().to_bipoly();
    // The y-coefficients of the cube, gcd'd one by one.
    let by_hand = cube.y_coeffs().iter().fold(UniPoly::zero(), |acc, c| {
        if acc.is_zero() {
            c.monic()
        } else {
            unipoly_gcd(&acc, c).unwrap()
        }
    });
    assert_eq!(by_hand, UniPoly::one());
    assert_eq!(bipoly_content_y(&cube).unwrap(), UniPoly::one());
}

#[test]
fn bivariate_gcds() {
    let base = poly("x*y + x + y + 2");
    let cube = base.pow(3);
    let deriv = &base.pow(2).scale(&g(3, 0)) * &base.derivative_y();
    let gcd = bipoly_gcd_y(&cube, &deriv).unwrap();
    let square = base.pow(2);
    let (i, j, c) = square.leading_lex().unwrap();
    assert_eq!(gcd.scale(&c), square, "leading term x^{i} y^{j}");
    assert_eq!(bipoly_gcd_y(&poly("x*y+1"), &poly("x*y-1")).unwrap(), BiPoly::one());
    let f = poly("3*x^2*y + x + 6");
    assert_eq!(bipoly_gcd_y(&f, &f).unwrap(), f.normalize_lex());
}

#[test]
fn perfect_powers() {
    let a = fixture("example2a").unwrap().correspondence().unwrap().to_bipoly();
    assert_eq!(perfect_power_extract(&a, 3).unwrap(), Some((g(1, 0), poly("x*y + x + y + 2"))));
    let b = fixture("example2b").unwrap().correspondence().unwrap().to_bipoly();
    assert_eq!(perfect_power_extract(&b, 2).unwrap(), Some((g(1, 0), poly("x^2*y^2 + x^2 + x*y^2 + x + y^2 + 2"))));
    assert!(matches!(perfect_power_extract(&poly("x*y + 1"), 2), Err(AlgebraError::BadExponent { m: 2, .. })));
    assert_eq!(perfect_power_extract(&poly("x^2*y^2 + 1"), 2).unwrap(), None);
}

#[test]
fn validation() {
    let f = new_correspondence(example_matrix("example1")).unwrap();
    assert_eq!(f.degree(), 5);
    let line = poly("(x-1)*(y^2+1)").to_matrix(3).unwrap();
    assert!(matches!(new_correspondence(line), Err(CorrespondenceError::LineComponent { variable: Variable::X, .. })));
    assert_eq!(new_correspondence(ExactMatrix::zeros(3, 3)), Err(CorrespondenceError::ZeroMatrix));
}

#[test]
fn classifications() {
    let f1 = fixture("example1").unwrap().correspondence().unwrap();
    assert!(matches!(classify(&f1).unwrap(), Classification::Rank2 { .. }));
    let f2a = fixture("example2a").unwrap().correspondence().unwrap();
    match classify(&f2a).unwrap() {
        Classification::PerfectPower { m: 3, base, .. } => assert_eq!(base.to_bipoly(), poly("x*y + x + y + 2")),
        other => panic!("{other:?}"),
    }
    let f2b = fixture("example2b").unwrap().correspondence().unwrap();
    match classify(&f2b).unwrap() {
        Classification::PerfectPower { m: 2, base_class, .. } => {
            assert!(matches!(*base_class, Classification::Rank2 { .. }))
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn factorizations() {
    let f1 = fixture("example1").unwrap().correspondence().unwrap();
    let fact = factorize(&f1).unwrap();
    // Expand the separated form directly rather than through the library.
    let (kappa, lambda) = (fact.phi.num_coeffs(), fact.phi.den_coeffs());
    let (mu, nu) = (fact.psi.num_coeffs(), fact.psi.den_coeffs());
    let by_hand = ExactMatrix::from_fn(6, 6, |i, j| &(&kappa[i] * &nu[j]) - &(&lambda[i] * &mu[j]));
    assert!(by_hand.scalar_multiple_of(f1.matrix()).is_some_and(|c| !c.is_zero()));

    for d in 1..=4 {
        let f = parse_polynomial(&format!("x^{d} - y^{d}")).unwrap();
        let fact = factorize(&f).unwrap();
        assert!(fact.round_trip_scalar(&f).is_some_and(|c| !c.is_zero()));
    }
    let rank_one = new_correspondence(poly("(x+1)*(y+1)*(x*y+2)").to_matrix(3).unwrap());
    assert!(rank_one.is_err() || factorize(&rank_one.unwrap()).is_err());
    let f = new_correspondence(ExactMatrix::from_fn(2, 2, |_, _| g(1, 0)));
    assert!(f.is_err(), "(x+1)(y+1) has line components");
}

#[test]
fn compositions() {
    let fact = example_maps("example1");
    let a = compose_matrix(&fact.phi, &fact.psi).unwrap();
    assert_eq!(a, example_matrix("example1"));
    assert_eq!(a[(5, 5)], g(5, 0));
    assert_eq!(a[(3, 5)], g(9, -1));

    let d = 3;
    let mono = map(&format!("x^{d} / 1"), Variable::X);
    let a = compose_matrix(&mono, &mono).unwrap();
    for i in 0..=d {
        for j in 0..=d {
            let expected = match (i, j) {
                (3, 0) => g(1, 0),
                (0, 3) => g(-1, 0),
                _ => g(0, 0),
            };
            assert_eq!(a[(i, j)], expected);
        }
    }

    let fact = example_maps("example5");
    let a = compose_matrix(&fact.phi, &fact.psi).unwrap();
    assert_eq!(a[(3, 3)], g(0, 28));
    assert_eq!(a, example_matrix("example5"));
}

#[test]
fn mobius_actions() {
    let x = map("x / 1", Variable::X);
    assert_eq!(mobius_postcompose(&Mobius::identity(), &x), x);
    let flip = Mobius::new(g(0, 0), g(1, 0), g(1, 0), g(0, 0)).unwrap();
    assert_eq!(mobius_postcompose(&flip, &x), map("1 / x", Variable::X));
    let fact = example_maps("example1");
    let m = Mobius::new(g(2, 1), g(-1, 0), g(3, 0), g(0, 1)).unwrap();
    let back = mobius_postcompose(&m.inverse(), &mobius_postcompose(&m, &fact.phi));
    let c = back.num().leading().unwrap() / fact.phi.num().leading().unwrap();
    assert_eq!((back.num(), back.den()), (&fact.phi.num().scale(&c), &fact.phi.den().scale(&c)));
}

#[test]
fn swaps_and_conjugates() {
    let f3 = fixture("example3").unwrap().correspondence().unwrap();
    assert_eq!(f3.swap_variables(), f3);
    let f4 = fixture("example4").unwrap().correspondence().unwrap();
    assert_eq!(f4.conjugate_coeffs(), f4);
    let mut a = ExactMatrix::zeros(2, 2);
    a[(1, 0)] = GaussianRational::i();
    a[(1, 1)] = g(1, 0);
    a[(0, 1)] = g(2, 0);
    let f = new_correspondence(a).unwrap();
    assert_eq!(f.swap_variables().coeff(0, 1), &GaussianRational::i());
}

#[test]
fn symmetry_reports() {
    let r3 = symmetry_report(&fixture("example3").unwrap().correspondence().unwrap());
    assert!(r3.symmetric);
    let r4 = symmetry_report(&fixture("example4").unwrap().correspondence().unwrap());
    assert!(r4.is_real_up_to_constant());
    let r5 = symmetry_report(&fixture("example5").unwrap().correspondence().unwrap());
    assert_eq!(r5.hermitian_up_to_unimodular, Some(g(-1, 0)));
}

#[test]
fn symmetric_factor_conditions() {
    let f3 = fixture("example3").unwrap().correspondence().unwrap();
    assert!(check_symm_factor_condition(&factorize(&f3).unwrap()));
    // x^2 - y^2 is antisymmetric, not symmetric: the condition fails at (2, 0).
    let sq = map("x^2 / 1", Variable::X);
    let fact = Factorization::new(sq.clone(), sq).unwrap();
    assert!(!check_symm_factor_condition(&fact));
    assert_eq!(
        compose(&fact.phi, &fact.psi).unwrap().matrix().transpose(),
        compose_matrix(&fact.phi, &fact.psi).unwrap().scale(&g(-1, 0))
    );
    assert!(!check_symm_factor_condition(&example_maps("example1")));
}

#[test]
fn time_reversal_conditions() {
    assert!(check_timerev_factor_condition(&example_maps("example5")));
    let mono = map("x^3 / 1", Variable::X);
    assert!(check_timerev_factor_condition(&Factorization::new(mono.clone(), mono).unwrap()));
    let fact = example_maps("example1");
    assert_eq!(fact.phi.num_coeffs()[3], g(3, 0));
    assert_eq!(fact.psi.num_coeffs()[3].conj(), g(-4, 0));
    assert!(!check_timerev_factor_condition(&fact));
}

#[test]
fn parsing() {
    let f = parse_polynomial("(x*y+x+y+2)^3").unwrap();
    assert_eq!(f, fixture("example2a").unwrap().correspondence().unwrap());
    assert_eq!(f.coeff(2, 1), &g(15, 0));
    let f = parse_polynomial("x*y - 1").unwrap();
    assert_eq!(f.matrix(), &ExactMatrix::from_rows(vec![vec![g(-1, 0), g(0, 0)], vec![g(0, 0), g(1, 0)]]).unwrap());
    match parse_polynomial("x^2 + + y") {
        Err(InputError::Syntax { position, .. }) => assert_eq!(position, 6),
        other => panic!("{other:?}"),
    }
}

#[test]
fn example1_map_text() {
    let phi = map(fixture("example1").unwrap().maps.unwrap().0, Variable::X);
    assert_eq!(phi.num_coeffs(), [1, 5, 4, 3, 2, 1].map(|c| g(c, 0)).to_vec());
    assert_eq!(phi.den_coeffs(), vec![g(4, 0), g(1, 0), g(3, 0), g(0, -1), g(1, 0), g(2, 0)]);
}

#[test]
fn documents() {
    let f5 = fixture("example5").unwrap().correspondence().unwrap();
    let mut doc = save_matrix(&f5);
    assert_eq!(load_matrix(&doc).unwrap(), f5);
    doc.entries[0][0] = ComplexEntry {
        re: RationalEntry { num: "1".into(), den: "0".into() },
        im: RationalEntry { num: "0".into(), den: "1".into() },
    };
    assert!(matches!(load_matrix(&doc), Err(InputError::Document(_))));
}
