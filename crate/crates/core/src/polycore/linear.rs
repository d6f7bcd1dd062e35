use super::field::FieldElem;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::{same_ring, RingRef};
use super::PolyError;

/// A polynomial that is homogeneous of degree one, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm(Polynomial);

impl LinearForm {
    pub fn new(p: Polynomial) -> Result<Self, PolyError> {
        if p.terms().iter().all(|(m, _)| m.degree() == 1) {
            Ok(LinearForm(p))
        } else {
            Err(PolyError::NotLinear(p.to_string()))
        }
    }

    pub fn zero(ring: &RingRef) -> Self {
        LinearForm(Polynomial::zero(ring))
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        LinearForm(Polynomial::var(ring, i))
    }

    /// `sum coeffs[i] * x_i`; `coeffs` must have one entry per ring variable.
    pub fn from_coefficients(ring: &RingRef, coeffs: &[FieldElem]) -> Self {
        assert_eq!(coeffs.len(), ring.nvars());
        let n = ring.nvars();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Monomial::var(n, i), c.clone()));
        LinearForm(Polynomial::from_terms(ring, terms))
    }

    /// Dense coefficient vector indexed by ring variable.
    pub fn coefficients(&self) -> Vec<FieldElem> {
        let ring = self.0.ring();
        let mut out = vec![ring.field().zero(); ring.nvars()];
        for (m, c) in self.0.terms() {
            let i = m.support().next().expect("degree one monomial");
            out[i] = c.clone();
        }
        out
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_poly(self) -> Polynomial {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn ring(&self) -> &RingRef {
        self.0.ring()
    }
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Assignment of a linear form (in `target`) to variables of a source ring.
#[derive(Clone, Debug)]
pub struct LinearSubstitution {
    target: RingRef,
    images: Vec<Option<LinearForm>>,
}

impl LinearSubstitution {
    pub fn new(target: &RingRef, images: Vec<Option<LinearForm>>) -> Result<Self, PolyError> {
        for img in images.iter().flatten() {
            if !same_ring(img.ring(), target) {
                return Err(PolyError::RingMismatch);
            }
        }
        Ok(LinearSubstitution {
            target: target.clone(),
            images,
        })
    }

    pub fn total(target: &RingRef, images: Vec<LinearForm>) -> Result<Self, PolyError> {
        Self::new(target, images.into_iter().map(Some).collect())
    }

    pub fn identity(ring: &RingRef) -> Self {
        let images = (0..ring.nvars()).map(|i| Some(LinearForm::var(ring, i))).collect();
        LinearSubstitution {
            target: ring.clone(),
            images,
        }
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn image(&self, i: usize) -> Option<&LinearForm> {
        self.images.get(i).and_then(|o| o.as_ref())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}

/// Substitutes a linear form for every variable of `f`.
pub fn substitute_linear(f: &Polynomial, map: &LinearSubstitution) -> Result<Polynomial, PolyError> {
    let source = f.ring();
    let target = &map.target;
    let mut acc = Polynomial::zero(target);
    for (m, c) in f.terms() {
        let mut term = Polynomial::constant(target, target.field().coerce(c)?);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let img = map
                .image(i)
                .ok_or_else(|| PolyError::UndefinedVariable(source.name(i).to_string()))?;
            term = &term * &img.poly().pow(e as u32);
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, Field, MonomialOrder, Ring};

    fn ring(names: &[&str]) -> RingRef {
        Ring::new(
            names.iter().map(|s| s.to_string()).collect(),
            Field::Rational,
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    #[test]
    fn change_of_variables_on_single_variable() {
        let src = ring(&["x1", "x5"]);
        let dst = ring(&["x1", "y1"]);
        let f = parse_polynomial(&src, "x5").unwrap();
        let img = LinearForm::new(parse_polynomial(&dst, "y1 - x1").unwrap()).unwrap();
        let map = LinearSubstitution::new(&dst, vec![Some(LinearForm::var(&dst, 0)), Some(img)]).unwrap();
        let g = substitute_linear(&f, &map).unwrap();
        assert_eq!(g, parse_polynomial(&dst, "y1 - x1").unwrap());
    }

    #[test]
    fn identity_substitution() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_polynomial(&r, "x^2*y - 3/2*z + y*z").unwrap();
        assert_eq!(substitute_linear(&f, &LinearSubstitution::identity(&r)).unwrap(), f);
    }

    #[test]
    fn inverse_shear_composes_to_identity() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial(&r, "x^2").unwrap();
        let fwd = LinearSubstitution::total(
            &r,
            vec![
                LinearForm::new(parse_polynomial(&r, "x + y").unwrap()).unwrap(),
                LinearForm::var(&r, 1),
            ],
        )
        .unwrap();
        let back = LinearSubstitution::total(
            &r,
            vec![
                LinearForm::new(parse_polynomial(&r, "x - y").unwrap()).unwrap(),
                LinearForm::var(&r, 1),
            ],
        )
        .unwrap();
        let g = substitute_linear(&substitute_linear(&f, &fwd).unwrap(), &back).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn missing_image_is_an_error() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial(&r, "x*y").unwrap();
        let map = LinearSubstitution::new(&r, vec![Some(LinearForm::var(&r, 0)), None]).unwrap();
        assert_eq!(
            substitute_linear(&f, &map),
            Err(PolyError::UndefinedVariable("y".into()))
        );
    }

    #[test]
    fn linear_form_rejects_higher_degree() {
        let r = ring(&["x", "y"]);
        assert!(LinearForm::new(parse_polynomial(&r, "x*y").unwrap()).is_err());
        assert!(LinearForm::new(parse_polynomial(&r, "x + 1").unwrap()).is_err());
        assert!(LinearForm::new(Polynomial::zero(&r)).is_ok());
    }
}
