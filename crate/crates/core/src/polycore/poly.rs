use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, FieldElem};
use super::monomial::{Monomial, MonomialOrder};
use super::ring::{same_ring, RingRef};
use super::PolyError;

pub type Term = (Monomial, FieldElem);

/// Sparse polynomial. Terms are sorted strictly descending in the ring's
/// monomial order and carry no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: FieldElem) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &RingRef, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, ring.field().one(), Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &RingRef, c: FieldElem, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = Term>) -> Self {
        let order = ring.order();
        let mut raw: Vec<Term> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        raw.sort_by(|a, b| b.0.cmp_with(&a.0, order));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = &*lc + &c;
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((m, c)),
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<Term>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            let part = big.mul_term(c, m);
            acc = acc.merge(&part, false);
        }
        Ok(acc)
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_with(&b[j].0, order) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if subtract { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `c * m * self`; the order is preserved since monomial orders are multiplicative.
    pub fn mul_term(&self, c: &FieldElem, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), tc * c))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, tc)| (m.clone(), tc * c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// In-place `self -= c * m * g`.
    pub(crate) fn sub_mul_term(&mut self, c: &FieldElem, m: &Monomial, g: &Polynomial) {
        if c.is_zero() {
            return;
        }
        let order = self.ring.order();
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + g.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = g.terms.iter().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (Some(x), Some((bm, _))) => {
                    let prod = bm.mul(m);
                    match x.0.cmp_with(&prod, order) {
                        Ordering::Greater => out.push(ai.next().unwrap()),
                        Ordering::Less => {
                            let (_, bc) = bi.next().unwrap();
                            out.push((prod, -&(bc * c)));
                        }
                        Ordering::Equal => {
                            let (xm, xc) = ai.next().unwrap();
                            let (_, bc) = bi.next().unwrap();
                            let v = &xc - &(bc * c);
                            if !v.is_zero() {
                                out.push((xm, v));
                            }
                        }
                    }
                }
                (Some(_), None) => out.push(ai.next().unwrap()),
                (None, Some(_)) => {
                    let (bm, bc) = bi.next().unwrap();
                    out.push((bm.mul(m), -&(bc * c)));
                }
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    pub fn evaluate(&self, point: &[FieldElem]) -> Result<FieldElem, PolyError> {
        if point.len() != self.ring.nvars() {
            return Err(PolyError::LengthMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = &v * &point[i].pow(e as u32);
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to `var_map[i]`.
    /// Coefficients are coerced into the target field.
    pub fn map_into(&self, target: &RingRef, var_map: &[usize]) -> Result<Polynomial, PolyError> {
        if var_map.len() != self.ring.nvars() {
            return Err(PolyError::LengthMismatch {
                expected: self.ring.nvars(),
                got: var_map.len(),
            });
        }
        let n = target.nvars();
        let field = target.field();
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; n];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let j = *var_map.get(i).filter(|&&j| j < n).ok_or_else(|| {
                        PolyError::UndefinedVariable(self.ring.name(i).to_string())
                    })?;
                    exps[j] += e;
                }
            }
            terms.push((Monomial::from_exponents(exps), field.coerce(c)?));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves into a ring whose variables extend this ring's variables by name.
    pub fn embed(&self, target: &RingRef) -> Result<Polynomial, PolyError> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let map = self
            .ring
            .names()
            .iter()
            .map(|n| {
                target
                    .var_index(n)
                    .ok_or_else(|| PolyError::UndefinedVariable(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.map_into(target, &map)
    }

    pub fn change_field(&self, field: Field) -> Result<Polynomial, PolyError> {
        let target = self.ring.with_field(field);
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_into(&target, &map)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let target = self.ring.with_order(order);
        Polynomial::from_terms(&target, self.terms.iter().cloned())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &RingRef, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}
