//! Dense univariate polynomials, just enough for eigenvalue search:
//! interpolation, gcd, and roots lying in the base field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FieldElem};

/// Prime fields above this size are not searched exhaustively for roots.
pub const ROOT_SEARCH_PRIME_LIMIT: u64 = 1 << 24;

/// Trial division gives up on integers with a cofactor above this.
const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    /// Coefficients from the constant term up; no trailing zeros.
    coeffs: Vec<FieldElem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSearchError {
    /// The field is too large to enumerate.
    FieldTooLarge(u64),
    /// Integer coefficients too large to factor by trial division.
    CoefficientTooLarge,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    /// `t - a`
    pub fn linear(a: &FieldElem) -> Self {
        let f = a.field();
        UniPoly::new(f, vec![-a, f.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                UniPoly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (UniPoly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(self.field, quot), UniPoly::new(self.field, rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The unique polynomial of degree < `xs.len()` through the given points.
    pub fn interpolate(field: Field, xs: &[FieldElem], ys: &[FieldElem]) -> UniPoly {
        assert_eq!(xs.len(), ys.len());
        let mut acc = UniPoly::zero(field);
        for (i, xi) in xs.iter().enumerate() {
            let mut basis = UniPoly::new(field, vec![field.one()]);
            let mut denom = field.one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&UniPoly::linear(xj));
                    denom = &denom * &(xi - xj);
                }
            }
            let scale = &ys[i] * &denom.inv().expect("distinct nodes");
            let term = UniPoly::new(field, basis.coeffs.iter().map(|c| c * &scale).collect());
            acc = acc.add(&term);
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
            .collect();
        UniPoly::new(self.field, out)
    }

    /// Distinct roots in the base field, ascending in canonical order.
    pub fn roots(&self) -> Result<Vec<FieldElem>, RootSearchError> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        let mut roots = match self.field {
            Field::Prime(p) => {
                if p >= ROOT_SEARCH_PRIME_LIMIT {
                    return Err(RootSearchError::FieldTooLarge(p));
                }
                (0..p as i64)
                    .map(|v| self.field.from_i64(v))
                    .filter(|x| self.eval(x).is_zero())
                    .collect::<Vec<_>>()
            }
            Field::Rational => self.rational_roots()?,
        };
        roots.sort_by(|a, b| a.canonical_cmp(b));
        roots.dedup();
        Ok(roots)
    }

    fn rational_roots(&self) -> Result<Vec<FieldElem>, RootSearchError> {
        let q = Field::Rational;
        let mut ints = integer_coefficients(&self.coeffs);
        let mut roots = Vec::new();
        let lead = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if lead > 0 {
            roots.push(q.zero());
            ints.drain(..lead);
        }
        if ints.len() <= 1 {
            return Ok(roots);
        }
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let ps = divisors(&a0)?;
        let qs = divisors(&an)?;
        for num in &ps {
            for den in &qs {
                if !num.gcd(den).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let cand = BigRational::new(num * sign, den.clone());
                    let x = FieldElem::Rational(cand);
                    if self.eval(&x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
        Ok(roots)
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn integer_coefficients(coeffs: &[FieldElem]) -> Vec<BigInt> {
    let rats: Vec<&BigRational> = coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&l / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, RootSearchError> {
    let mut rest = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d: u64 = 2;
    while BigInt::from(d) * BigInt::from(d) <= rest {
        if d > TRIAL_DIVISION_LIMIT {
            return Err(RootSearchError::CoefficientTooLarge);
        }
        let bd = BigInt::from(d);
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for v in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(v * &pw);
                pw *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: Field, cs: &[i64]) -> UniPoly {
        UniPoly::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    #[test]
    fn gcd_and_division() {
        let q = Field::Rational;
        // (t-1)(t-2) and (t-1)(t+3)
        let a = poly(q, &[2, -3, 1]);
        let b = poly(q, &[-3, 2, 1]);
        assert_eq!(a.gcd(&b), poly(q, &[-1, 1]));
        let (quo, rem) = a.div_rem(&poly(q, &[-1, 1]));
        assert_eq!(quo, poly(q, &[-2, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let q = Field::Rational;
        let f = poly(q, &[5, 0, -2, 1]);
        let xs: Vec<FieldElem> = (0..4).map(|v| q.from_i64(v)).collect();
        let ys: Vec<FieldElem> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(q, &xs, &ys), f);
    }

    #[test]
    fn rational_roots() {
        let q = Field::Rational;
        // (2t - 1) t (t + 3) (t^2 + 1)
        let f = poly(q, &[-1, 2])
            .mul(&poly(q, &[0, 1]))
            .mul(&poly(q, &[3, 1]))
            .mul(&poly(q, &[1, 0, 1]));
        let roots = f.roots().unwrap();
        let expect: Vec<FieldElem> = ["-3", "0", "1/2"]
            .iter()
            .map(|s| q.from_rational(&s.parse().unwrap()).unwrap())
            .collect();
        assert_eq!(roots, expect);
        assert!(poly(q, &[2, 0, -1]).roots().unwrap().is_empty());
    }

    #[test]
    fn prime_field_roots() {
        let f7 = Field::prime(7).unwrap();
        // t^2 + 1 has no roots mod 7, t^2 - 2 has 3 and 4
        assert!(poly(f7, &[1, 0, 1]).roots().unwrap().is_empty());
        let r = poly(f7, &[-2, 0, 1]).roots().unwrap();
        assert_eq!(r, vec![f7.from_i64(3), f7.from_i64(4)]);
    }
}
