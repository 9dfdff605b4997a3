//! Expression syntax:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := 'x' | 'y' | 'i' | uint | uint '/' uint | '(' expr ')'
//! map    := expr ['/' expr]
//! ```
//!
//! A rational literal `p/q` is written without spaces; any other `/` splits
//! a fractional map into numerator and denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::InputError;
use crate::algebra::{BiPoly, GaussianRational, UniPoly};
use crate::correspondence::{Correspondence, FractionalMap, Variable};

/// Largest degree in either variable an expression may expand to.
pub const MAX_DEGREE: usize = 512;
/// Largest exponent literal accepted.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    X,
    Y,
    I,
    Num(BigRational),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::X) => "'x'".into(),
        Some(Tok::Y) => "'y'".into(),
        Some(Tok::I) => "'i'".into(),
        Some(Tok::Num(n)) => format!("number {n}"),
        Some(Tok::Plus) => "'+'".into(),
        Some(Tok::Minus) => "'-'".into(),
        Some(Tok::Star) => "'*'".into(),
        Some(Tok::Caret) => "'^'".into(),
        Some(Tok::Slash) => "'/'".into(),
        Some(Tok::LParen) => "'('".into(),
        Some(Tok::RParen) => "')'".into(),
    }
}

fn syntax(position: usize, message: impl Into<String>) -> InputError {
    InputError::Syntax { position, message: message.into() }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, InputError> {
    let chars: Vec<char> = src.chars().collect();
    let digits_from = |mut k: usize| {
        let start = k;
        while k < chars.len() && chars[k].is_ascii_digit() {
            k += 1;
        }
        (chars[start..k].iter().collect::<String>(), k)
    };
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let tok = match c {
            c if c.is_whitespace() => {
                k += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let (num, mut next) = digits_from(k);
                if next < chars.len() && (chars[next] == '.' || chars[next] == 'e' || chars[next] == 'E') {
                    let end = (next..chars.len()).find(|&j| !chars[j].is_alphanumeric() && chars[j] != '.');
                    let text: String = chars[k..end.unwrap_or(chars.len())].iter().collect();
                    return Err(InputError::UnsupportedCoefficient { position: k, text });
                }
                let mut value = BigRational::from_integer(num.parse::<BigInt>().expect("ascii digits"));
                if next + 1 < chars.len() && chars[next] == '/' && chars[next + 1].is_ascii_digit() {
                    let (den, after) = digits_from(next + 1);
                    let den = den.parse::<BigInt>().expect("ascii digits");
                    if den.is_zero() {
                        return Err(syntax(next + 1, "zero denominator in rational literal"));
                    }
                    value /= BigRational::from_integer(den);
                    next = after;
                }
                out.push((k, Tok::Num(value)));
                k = next;
                continue;
            }
            c if c.is_alphabetic() => {
                let end = (k..chars.len()).find(|&j| !chars[j].is_alphanumeric()).unwrap_or(chars.len());
                let word: String = chars[k..end].iter().collect();
                match word.as_str() {
                    "x" => Tok::X,
                    "y" => Tok::Y,
                    "i" => Tok::I,
                    w if w.chars().all(|c| matches!(c, 'x' | 'y' | 'i')) => {
                        return Err(syntax(
                            k + 1,
                            format!("implicit multiplication in '{w}'; write products with '*'"),
                        ));
                    }
                    _ => return Err(InputError::UnsupportedCoefficient { position: k, text: word }),
                }
            }
            other => return Err(syntax(k, format!("unexpected character '{other}'"))),
        };
        out.push((k, tok));
        k += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    first_x: Option<usize>,
    first_y: Option<usize>,
}

impl Parser {
    fn new(src: &str) -> Result<Self, InputError> {
        Ok(Self { toks: tokenize(src)?, pos: 0, end: src.chars().count(), first_x: None, first_y: None })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<BiPoly, InputError> {
        let negate = self.peek() == Some(&Tok::Minus);
        if negate {
            self.bump();
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, InputError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                    self.check_degree(&acc)?;
                }
                Some(Tok::X | Tok::Y | Tok::I | Tok::Num(_) | Tok::LParen) => {
                    return Err(syntax(self.offset(), "implicit multiplication; insert '*'"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn check_degree(&self, p: &BiPoly) -> Result<(), InputError> {
        let deg = p.deg_x().unwrap_or(0).max(p.deg_y().unwrap_or(0));
        if deg > MAX_DEGREE {
            return Err(InputError::DegreeOverflow { degree: deg, max: MAX_DEGREE });
        }
        Ok(())
    }

    fn factor(&mut self) -> Result<BiPoly, InputError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let exp = match self.bump() {
            Some(Tok::Num(n)) if n.is_integer() => n.to_integer(),
            other => {
                return Err(syntax(
                    at,
                    format!("expected a nonnegative integer exponent, found {}", describe(other.as_ref())),
                ))
            }
        };
        let exp = match exp.to_u32() {
            Some(e) if e <= MAX_EXPONENT => e,
            _ => return Err(InputError::ExponentTooLarge { position: at, max: MAX_EXPONENT }),
        };
        let base_deg = base.deg_x().unwrap_or(0).max(base.deg_y().unwrap_or(0));
        if base_deg * exp as usize > MAX_DEGREE {
            return Err(InputError::DegreeOverflow { degree: base_deg * exp as usize, max: MAX_DEGREE });
        }
        Ok(base.pow(exp))
    }

    fn base(&mut self) -> Result<BiPoly, InputError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::X) => {
                self.first_x.get_or_insert(at);
                Ok(BiPoly::x())
            }
            Some(Tok::Y) => {
                self.first_y.get_or_insert(at);
                Ok(BiPoly::y())
            }
            Some(Tok::I) => Ok(BiPoly::constant(GaussianRational::i())),
            Some(Tok::Num(n)) => Ok(BiPoly::constant(n.into())),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    other => Err(syntax(close, format!("expected ')', found {}", describe(other.as_ref())))),
                }
            }
            other => Err(syntax(at, format!("expected a term, found {}", describe(other.as_ref())))),
        }
    }

    fn finish(&mut self) -> Result<(), InputError> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Slash) => {
                Err(syntax(self.offset(), "'/' is only allowed in a fractional map or a rational literal"))
            }
            Some(Tok::RParen) => Err(syntax(self.offset(), "unmatched ')'")),
            other => Err(syntax(self.offset(), format!("unexpected {}", describe(other)))),
        }
    }
}

/// Parses and expands a polynomial in `x` and `y`.
pub fn parse_bipoly(src: &str) -> Result<BiPoly, InputError> {
    let mut p = Parser::new(src)?;
    let f = p.expr()?;
    p.finish()?;
    Ok(f)
}

/// Parses a polynomial and validates it as a correspondence of degree
/// `max(deg_x, deg_y)`.
pub fn parse_polynomial(src: &str) -> Result<Correspondence, InputError> {
    Ok(Correspondence::from_bipoly(&parse_bipoly(src)?)?)
}

/// Parses a constant such as `3`, `-1/2` or `9 - i`.
pub fn parse_scalar(src: &str) -> Result<GaussianRational, InputError> {
    let mut p = Parser::new(src)?;
    let f = p.expr()?;
    p.finish()?;
    if let Some(at) = p.first_x.or(p.first_y) {
        return Err(syntax(at, "expected a constant"));
    }
    Ok(f.coeff(0, 0))
}

/// Parses `num / den` (or a bare numerator) in the single variable `var`.
pub fn parse_fractional_map(src: &str, var: Variable, max_degree: Option<usize>) -> Result<FractionalMap, InputError> {
    let mut p = Parser::new(src)?;
    let num = p.expr()?;
    let den = if p.peek() == Some(&Tok::Slash) {
        p.bump();
        p.expr()?
    } else {
        BiPoly::one()
    };
    p.finish()?;
    let (wrong, name) = match var {
        Variable::X => (p.first_y, 'y'),
        Variable::Y => (p.first_x, 'x'),
    };
    if let Some(position) = wrong {
        return Err(InputError::WrongVariable { position, found: name, expected: var });
    }
    let single = |f: &BiPoly| -> UniPoly {
        match var {
            Variable::X => f.y_coeffs().first().cloned().unwrap_or_else(UniPoly::zero),
            Variable::Y => f.swap_variables().y_coeffs().first().cloned().unwrap_or_else(UniPoly::zero),
        }
    };
    let map = FractionalMap::new(single(&num), single(&den))?;
    if let Some(max) = max_degree {
        if map.degree() > max {
            return Err(InputError::DegreeOverflow { degree: map.degree(), max });
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::CorrespondenceError;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_integers(re, im)
    }

    #[test]
    fn simple_polynomial() {
        let f = parse_polynomial("x*y - 1").unwrap();
        assert_eq!(f.coeff(1, 1), &g(1, 0));
        assert_eq!(f.coeff(0, 0), &g(-1, 0));
        assert_eq!(f.coeff(1, 0), &g(0, 0));
    }

    #[test]
    fn cube_expansion() {
        let f = parse_polynomial("(x*y+x+y+2)^3").unwrap();
        assert_eq!(f.coeff(2, 1), &g(15, 0));
        assert_eq!(f.coeff(0, 0), &g(8, 0));
    }

    #[test]
    fn syntax_error_position() {
        assert_eq!(
            parse_bipoly("x^2 + + y").unwrap_err(),
            InputError::Syntax { position: 6, message: "expected a term, found '+'".into() }
        );
    }

    #[test]
    fn unsupported_and_implicit() {
        assert!(matches!(parse_bipoly("1.5*x"), Err(InputError::UnsupportedCoefficient { position: 0, .. })));
        assert!(matches!(parse_bipoly("sqrt(2)*x"), Err(InputError::UnsupportedCoefficient { .. })));
        assert!(matches!(parse_bipoly("3x"), Err(InputError::Syntax { position: 1, .. })));
        assert!(matches!(parse_bipoly("x y"), Err(InputError::Syntax { position: 2, .. })));
        assert!(matches!(parse_bipoly("xy"), Err(InputError::Syntax { .. })));
        assert!(matches!(parse_bipoly("(x + 1"), Err(InputError::Syntax { position: 6, .. })));
        assert!(matches!(parse_bipoly("x^-1"), Err(InputError::Syntax { position: 2, .. })));
        assert!(matches!(parse_bipoly("x^1000"), Err(InputError::DegreeOverflow { .. })));
        assert!(matches!(parse_bipoly("2^99999"), Err(InputError::ExponentTooLarge { position: 2, .. })));
        assert!(matches!(parse_bipoly("x / y"), Err(InputError::Syntax { position: 2, .. })));
    }

    #[test]
    fn rationals_and_unicode_minus() {
        let f = parse_bipoly("1/2*x \u{2212} 3/4*i").unwrap();
        assert_eq!(f.coeff(1, 0), GaussianRational::from_fractions(1, 2, 0, 1));
        assert_eq!(f.coeff(0, 0), GaussianRational::from_fractions(0, 1, -3, 4));
        assert!(matches!(parse_bipoly("1/0"), Err(InputError::Syntax { position: 2, .. })));
        assert_eq!(parse_scalar("9 - i").unwrap(), g(9, -1));
        assert_eq!(parse_scalar("-(2 + 3*i)^2").unwrap(), g(5, -12));
    }

    #[test]
    fn fractional_maps() {
        let phi = parse_fractional_map(
            "(x^5 + 2*x^4 + 3*x^3 + 4*x^2 + 5*x + 1) / (2*x^5 + x^4 - i*x^3 + 3*x^2 + x + 4)",
            Variable::X,
            None,
        )
        .unwrap();
        let ints = |v: &[i64]| v.iter().map(|&k| g(k, 0)).collect::<Vec<_>>();
        assert_eq!(phi.num_coeffs(), ints(&[1, 5, 4, 3, 2, 1]));
        assert_eq!(phi.den_coeffs(), vec![g(4, 0), g(1, 0), g(3, 0), g(0, -1), g(1, 0), g(2, 0)]);
        let psi = parse_fractional_map("-(y^2 + 1) / y", Variable::Y, Some(2)).unwrap();
        assert_eq!(psi.num_coeffs(), ints(&[-1, 0, -1]));
        assert!(matches!(
            parse_fractional_map("x / y", Variable::X, None),
            Err(InputError::WrongVariable { position: 4, found: 'y', .. })
        ));
        assert!(matches!(
            parse_fractional_map("x^3 / 1", Variable::X, Some(2)),
            Err(InputError::DegreeOverflow { degree: 3, max: 2 })
        ));
        assert_eq!(
            parse_fractional_map("x / 0", Variable::X, None),
            Err(InputError::Invalid(CorrespondenceError::ZeroDenominator))
        );
    }
}
