//! Text grammar for polynomials: signed sums of `*`-separated factors, where a
//! factor is an integer or fraction literal `a/b`, or a variable optionally
//! raised to a power `x^k`. Linear forms are the degree-one subset (plus `0`).

use num_bigint::BigInt;
use num_rational::BigRational;

use super::linear::LinearForm;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::RingRef;
use super::PolyError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((col, Tok::Num(s.parse().expect("digits"))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((col, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(PolyError::Parse {
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end_col)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            column: self.col(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                None if !first => return Ok(acc),
                _ if first => false,
                _ => return self.err("expected `+` or `-`"),
            };
            first = false;
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            if self.peek().is_none() {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let field = self.ring.field();
        let n = self.ring.nvars();
        let mut coeff = BigRational::from_integer(1.into());
        let mut exps = vec![0u16; n];
        loop {
            match self.peek().cloned() {
                Some(Tok::Num(a)) => {
                    self.pos += 1;
                    let mut q = BigRational::from_integer(a);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Tok::Num(b)) if b != BigInt::from(0) => {
                                self.pos += 1;
                                q /= BigRational::from_integer(b);
                            }
                            _ => return self.err("expected nonzero denominator"),
                        }
                    }
                    coeff *= q;
                }
                Some(Tok::Ident(name)) => {
                    let col = self.col();
                    self.pos += 1;
                    let idx = self
                        .ring
                        .var_index(&name)
                        .ok_or(PolyError::UnknownVariable { name, column: col })?;
                    let mut e = 1u16;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Tok::Num(k)) => {
                                self.pos += 1;
                                e = u16::try_from(k).or_else(|_| self.err("exponent too large"))?;
                            }
                            _ => return self.err("expected exponent"),
                        }
                    }
                    exps[idx] += e;
                }
                _ => return self.err("expected a number or a variable"),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        let c = field.from_rational(&coeff)?;
        Ok(Polynomial::monomial(self.ring, c, Monomial::from_exponents(exps)))
    }
}

pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Parse {
            column: 1,
            message: "empty expression".into(),
        });
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    p.expr()
}

/// Parses a linear form; anything of degree other than one is rejected
/// (the literal `0` is the zero form).
pub fn parse_linear_form(ring: &RingRef, text: &str) -> Result<LinearForm, PolyError> {
    let p = parse_polynomial(ring, text)?;
    LinearForm::new(p).map_err(|_| PolyError::NotLinear(text.trim().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{Field, MonomialOrder, Ring};

    fn ring() -> RingRef {
        Ring::indexed("x", 6, Field::Rational, MonomialOrder::DegRevLex)
    }

    #[test]
    fn parses_signed_sums() {
        let r = ring();
        let p = parse_polynomial(&r, "x1 - x3 + x4").unwrap();
        assert_eq!(p.len(), 3);
        let q = parse_polynomial(&r, "-x6 + 1/2*x2 + 2*x2").unwrap();
        assert_eq!(q.to_string(), "5/2*x2 - x6");
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
    }

    #[test]
    fn reports_columns() {
        let r = ring();
        match parse_polynomial(&r, "x1 + x9") {
            Err(PolyError::UnknownVariable { name, column }) => {
                assert_eq!(name, "x9");
                assert_eq!(column, 6);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial(&r, "x1 + ") {
            Err(PolyError::Parse { column, .. }) => assert_eq!(column, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial(&r, "x1 $"), Err(PolyError::Parse { column: 4, .. })));
    }

    #[test]
    fn linear_grammar() {
        let r = ring();
        assert!(parse_linear_form(&r, "x1+x6").is_ok());
        assert!(parse_linear_form(&r, "0").unwrap().is_zero());
        assert!(matches!(parse_linear_form(&r, "x1*x2"), Err(PolyError::NotLinear(_))));
        assert!(matches!(parse_linear_form(&r, "3"), Err(PolyError::NotLinear(_))));
    }

    #[test]
    fn powers_and_display_round_trip() {
        let r = ring();
        let p = parse_polynomial(&r, "x1*x4^2 - 2*x2*x3*x4 + x3^3").unwrap();
        let again = parse_polynomial(&r, &p.to_string()).unwrap();
        assert_eq!(p, again);
    }
}
