//! Groebner bases and the membership queries built on them.

mod buchberger;
mod height;
mod membership;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polycore::{same_ring, PolyError, Polynomial, RingRef};

pub use buchberger::{buchberger, buchberger_with, GroebnerBasis};
pub use height::{ideal_height, ideal_height_with, MAX_HEIGHT_VARS};
pub use membership::{
    equal_radical, equal_radical_with, ideal_member, ideal_member_with, radical_member,
    radical_member_with, radical_member_in,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("resource cap exceeded: more than {0} S-pairs")]
    PairCap(usize),
    #[error("resource cap exceeded: S-pair of degree {degree} above limit {limit}")]
    DegreeCap { degree: u32, limit: u32 },
    #[error("height search over {0} variables exceeds the limit of {MAX_HEIGHT_VARS}")]
    TooManyVariables(usize),
    #[error("the ideal contains 1")]
    ImproperIdeal,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl GroebnerError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            GroebnerError::PairCap(_) | GroebnerError::DegreeCap { .. } | GroebnerError::TooManyVariables(_)
        )
    }
}

/// Resource caps for a single Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_pairs: usize,
    pub max_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 50_000,
            max_degree: 40,
        }
    }
}

/// A finite generating list in a fixed ring. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: RingRef,
    gens: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(ring: &RingRef, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self, GroebnerError> {
        let mut out = Vec::new();
        for g in gens {
            if !same_ring(g.ring(), ring) {
                return Err(GroebnerError::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            gens: out,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The same generators moved into `target` by variable name.
    pub fn embed(&self, target: &RingRef) -> Result<Self, GroebnerError> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(target))
            .collect::<Result<Vec<_>, _>>()?;
        IdealPresentation::new(target, gens)
    }

    /// Sum of two ideals in the same ring.
    pub fn sum(&self, other: &IdealPresentation) -> Result<Self, GroebnerError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(GroebnerError::RingMismatch);
        }
        IdealPresentation::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }
}

impl std::fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::{KWForm, LinMatrix};
    use crate::polycore::{parse_polynomial, Field, MonomialOrder, Ring};
    use proptest::prelude::*;

    fn ideal(ring: &RingRef, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(ring, gens.iter().map(|g| parse_polynomial(ring, g).unwrap())).unwrap()
    }

    fn minors(m: &LinMatrix) -> IdealPresentation {
        IdealPresentation::new(m.ring(), m.minor_generators()).unwrap()
    }

    fn strs(gb: &GroebnerBasis) -> Vec<String> {
        gb.basis().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn single_term() {
        let r = Ring::indexed("x", 1, Field::Rational, MonomialOrder::DegRevLex);
        let gb = buchberger(&ideal(&r, &["x1^2"]), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(strs(&gb), ["x1^2"]);
    }

    #[test]
    fn lex_elimination() {
        let r = Ring::new(vec!["y".into(), "x".into()], Field::Rational, MonomialOrder::Lex).unwrap();
        let gb = buchberger(&ideal(&r, &["y - x^2", "x*y - 1"]), MonomialOrder::Lex).unwrap();
        let expect = ideal(&r, &["x^3 - 1", "y - x^2"]);
        assert_eq!(gb.basis(), expect.generators());
    }

    #[test]
    fn nilpotent_block_minors() {
        // N(2): rows (x1 x2 0; 0 x1 x2), minors x1^2, x1*x2, x2^2
        let form = KWForm::parse("N(2)", Field::Rational, MonomialOrder::DegRevLex).unwrap();
        let i = minors(form.matrix());
        let gb = buchberger(&i, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(strs(&gb), ["x1_2^2", "x1_1*x1_2", "x1_1^2"]);
        let r = form.ring();
        for v in 0..2 {
            assert!(radical_member(&Polynomial::var(r, v), &i).unwrap());
            assert!(!ideal_member(&Polynomial::var(r, v), &i).unwrap());
        }
        assert_eq!(ideal_height(&i).unwrap(), 2);
    }

    #[test]
    fn membership_basics() {
        let r = Ring::indexed("x", 2, Field::Rational, MonomialOrder::DegRevLex);
        let i = ideal(&r, &["x1^2 + x1*x2", "x2^3"]);
        for g in i.generators() {
            assert!(ideal_member(g, &i).unwrap());
        }
        assert!(!ideal_member(&Polynomial::one(&r), &i).unwrap());
        let f = parse_polynomial(&r, "x1 + 2*x2").unwrap();
        let sq = IdealPresentation::new(&r, [f.pow(2)]).unwrap();
        assert!(radical_member(&f, &sq).unwrap());
        assert!(!radical_member(&Polynomial::var(&r, 0), &ideal(&r, &["x2"])).unwrap());
        assert!(equal_radical(&i, &i).unwrap());
        assert!(!equal_radical(&ideal(&r, &["x1"]), &ideal(&r, &["x2"])).unwrap());
        assert!(equal_radical(&i, &ideal(&r, &["x1", "x2"])).unwrap());
    }

    #[test]
    fn heights() {
        let r = Ring::indexed("x", 5, Field::Rational, MonomialOrder::DegRevLex);
        assert_eq!(ideal_height(&ideal(&r, &["x1", "x2", "x3"])).unwrap(), 3);
        assert_eq!(ideal_height(&IdealPresentation::new(&r, []).unwrap()).unwrap(), 0);
        assert_eq!(ideal_height(&ideal(&r, &["x1", "1 + x1"])), Err(GroebnerError::ImproperIdeal).map(|_: ()| 0));
        let a4 = LinMatrix::parse(
            &Ring::indexed("x", 6, Field::Rational, MonomialOrder::DegRevLex),
            &["0", "x1", "x2", "x3"],
            &["x4", "x5", "x6", "0"],
            Default::default(),
        )
        .unwrap();
        assert_eq!(ideal_height(&minors(&a4)).unwrap(), 3);
        let generic = KWForm::parse("B(1) B(1) B(1) B(1) B(1)", Field::Rational, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(ideal_height(&minors(generic.matrix())).unwrap(), 4);
        let big = Ring::indexed("x", 21, Field::Rational, MonomialOrder::DegRevLex);
        assert_eq!(
            ideal_height(&ideal(&big, &["x1"])),
            Err(GroebnerError::TooManyVariables(21)).map(|_: ()| 0)
        );
    }

    #[test]
    fn caps_are_errors() {
        let r = Ring::indexed("x", 3, Field::Rational, MonomialOrder::DegRevLex);
        let i = ideal(&r, &["x1^3 - x2*x3^2", "x2^3 - x1*x3^2", "x1*x2 - x3^2"]);
        let tight = Limits { max_pairs: 1, max_degree: 40 };
        assert!(buchberger_with(&i, MonomialOrder::DegRevLex, &tight).unwrap_err().is_resource_cap());
        let low = Limits { max_pairs: 100, max_degree: 2 };
        assert!(matches!(
            buchberger_with(&i, MonomialOrder::DegRevLex, &low),
            Err(GroebnerError::DegreeCap { .. })
        ));
    }

    #[test]
    fn jordan_first_minor_is_a_member() {
        // first two columns of J(0,2) give y1_1^2 up to sign
        let form = KWForm::parse("J(0,2) J(1,1)", Field::Rational, MonomialOrder::DegRevLex).unwrap();
        let i = minors(form.matrix());
        let y = Polynomial::var(form.ring(), 0);
        assert!(ideal_member(&y.pow(2), &i).unwrap());
    }

    fn arb_monomial_ideal(r: RingRef) -> impl Strategy<Value = IdealPresentation> {
        prop::collection::vec(prop::collection::vec(0u16..3, 4), 1..4).prop_map(move |es| {
            let gens = es.into_iter().map(|e| {
                Polynomial::monomial(&r, r.field().one(), crate::polycore::Monomial::from_exponents(e))
            });
            IdealPresentation::new(&r, gens).unwrap()
        })
    }

    fn arb_poly(r: RingRef) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u16..3, 4), -3i64..=3), 1..4).prop_map(move |ts| {
            Polynomial::from_terms(
                &r,
                ts.into_iter()
                    .map(|(e, c)| (crate::polycore::Monomial::from_exponents(e), r.field().from_i64(c))),
            )
        })
    }

    fn ring4() -> RingRef {
        Ring::indexed("x", 4, Field::Prime(7), MonomialOrder::DegRevLex)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reduced_basis_is_unique(a in arb_poly(ring4()), b in arb_poly(ring4()), c in arb_poly(ring4())) {
            let r = ring4();
            let i = IdealPresentation::new(&r, [a.clone(), b.clone(), c.clone()]).unwrap();
            let j = IdealPresentation::new(&r, [&a + &b, b.clone(), &c - &(&a * &b), c.clone(), a.clone()]).unwrap();
            let gi = buchberger(&i, MonomialOrder::DegRevLex).unwrap();
            let gj = buchberger(&j, MonomialOrder::DegRevLex).unwrap();
            prop_assert_eq!(gi.basis(), gj.basis());
            for g in gi.basis() {
                prop_assert!(g.leading_coeff().unwrap().is_one());
            }
            // every S-polynomial reduces to zero: adding them changes nothing
            let again = IdealPresentation::new(gi.ring(), gi.basis().iter().cloned()).unwrap();
            let gagain = buchberger(&again, MonomialOrder::DegRevLex).unwrap();
            prop_assert_eq!(gagain.basis(), gi.basis());
        }

        #[test]
        fn member_implies_radical_member(a in arb_poly(ring4()), b in arb_poly(ring4()), f in arb_poly(ring4())) {
            let r = ring4();
            let i = IdealPresentation::new(&r, [a.clone(), b.clone()]).unwrap();
            let g = &(&f * &a) + &b;
            prop_assert!(ideal_member(&g, &i).unwrap());
            prop_assert!(radical_member(&g, &i).unwrap());
            if ideal_member(&f, &i).unwrap() {
                prop_assert!(radical_member(&f, &i).unwrap());
            }
        }

        #[test]
        fn equal_radical_is_an_equivalence(a in arb_monomial_ideal(ring4()), b in arb_monomial_ideal(ring4()), c in arb_monomial_ideal(ring4())) {
            let ab = equal_radical(&a, &b).unwrap();
            prop_assert_eq!(ab, equal_radical(&b, &a).unwrap());
            prop_assert!(equal_radical(&a, &a).unwrap());
            if ab && equal_radical(&b, &c).unwrap() {
                prop_assert!(equal_radical(&a, &c).unwrap());
            }
        }
    }
}
