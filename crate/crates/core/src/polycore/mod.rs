//! Exact sparse multivariate polynomials over the rationals and prime fields.

mod field;
pub mod linalg;
mod linear;
mod monomial;
mod parse;
mod poly;
mod ring;
pub mod univariate;

use thiserror::Error;

pub use field::{is_prime, parse_rational, Field, FieldElem, FieldError, MAX_PRIME};
pub use linear::{substitute_linear, LinearForm, LinearSubstitution};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_linear_form, parse_polynomial};
pub use poly::{Polynomial, Term};
pub use ring::{same_ring, Ring, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("duplicate or empty variable name `{0}`")]
    DuplicateVariable(String),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("no image for variable `{0}`")]
    UndefinedVariable(String),
    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },
    #[error("`{0}` is not a linear form")]
    NotLinear(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(field: Field) -> RingRef {
        Ring::new(
            vec!["x".into(), "y".into(), "z".into()],
            field,
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    fn arb_poly(field: Field) -> impl Strategy<Value = Polynomial> {
        let r = ring(field);
        prop::collection::vec((-5i64..=5, 0u16..3, 0u16..3, 0u16..3), 0..6).prop_map(move |ts| {
            Polynomial::from_terms(
                &r,
                ts.into_iter().map(|(c, a, b, d)| {
                    (Monomial::from_exponents(vec![a, b, d]), r.field().from_i64(c))
                }),
            )
        })
    }

    #[test]
    fn cancellation_and_identity() {
        let r = ring(Field::Rational);
        let xy = parse_polynomial(&r, "x + y").unwrap();
        let mx = parse_polynomial(&r, "-x").unwrap();
        assert_eq!(&xy + &mx, Polynomial::var(&r, 1));
        let minor = parse_polynomial(&r, "x*y - y*z").unwrap();
        assert_eq!(&minor * &Polynomial::one(&r), minor);
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = ring(Field::prime(2).unwrap());
        let s = parse_polynomial(&r, "x + y").unwrap();
        assert_eq!(s.pow(2), parse_polynomial(&r, "x^2 + y^2").unwrap());
    }

    #[test]
    fn evaluation() {
        let r = Ring::indexed("x", 7, Field::Rational, MonomialOrder::DegRevLex);
        let f = parse_polynomial(&r, "x1*x7 - x2*x6").unwrap();
        let ones = vec![r.field().one(); 7];
        assert!(f.evaluate(&ones).unwrap().is_zero());
        assert!(matches!(f.evaluate(&ones[..3]), Err(PolyError::LengthMismatch { .. })));

        let f5 = Field::prime(5).unwrap();
        let r5 = Ring::new(vec!["x".into()], f5, MonomialOrder::DegRevLex).unwrap();
        let x = Polynomial::var(&r5, 0);
        assert_eq!(x.evaluate(&[f5.from_i64(3)]).unwrap(), f5.from_i64(3));

        let rz = Ring::new(
            vec!["z0".into(), "z1".into(), "z2".into()],
            Field::Rational,
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let f1 = parse_polynomial(&rz, "z0*z2 - z1^2").unwrap();
        let pt: Vec<FieldElem> = [1, 2, 4].iter().map(|&v| Field::Rational.from_i64(v)).collect();
        assert!(f1.evaluate(&pt).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::var(&ring(Field::Rational), 0);
        let b = Polynomial::var(&ring(Field::prime(7).unwrap()), 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::RingMismatch));
        assert_eq!(a.checked_mul(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn terms_sorted_and_nonzero() {
        let r = ring(Field::Rational);
        let p = parse_polynomial(&r, "z + x^2 + y*z - z + 0*x").unwrap();
        let order = r.order();
        for w in p.terms().windows(2) {
            assert_eq!(w[0].0.cmp_with(&w[1].0, order), std::cmp::Ordering::Greater);
        }
        assert!(p.terms().iter().all(|(_, c)| !c.is_zero()));
    }

    proptest! {
        #[test]
        fn ring_axioms_over_rationals(a in arb_poly(Field::Rational), b in arb_poly(Field::Rational), c in arb_poly(Field::Rational)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn ring_axioms_mod_p(a in arb_poly(Field::Prime(7)), b in arb_poly(Field::Prime(7)), c in arb_poly(Field::Prime(7))) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn difference_vanishes_iff_identical(a in arb_poly(Field::Rational), b in arb_poly(Field::Rational)) {
            prop_assert_eq!((&a - &b).is_zero(), a.terms() == b.terms());
        }

        #[test]
        fn sub_mul_term_matches_generic_ops(a in arb_poly(Field::Rational), b in arb_poly(Field::Rational), c in -4i64..4, e in 0u16..3) {
            let r = a.ring().clone();
            let m = Monomial::from_exponents(vec![e, 1, 0]);
            let coeff = r.field().from_i64(c);
            let mut lhs = a.clone();
            lhs.sub_mul_term(&coeff, &m, &b);
            let rhs = &a - &b.mul_term(&coeff, &m);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
