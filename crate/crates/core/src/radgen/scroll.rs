use num_bigint::BigInt;

use crate::pencil::{BlockKind, KWForm};
use crate::polycore::{Field, Monomial, MonomialOrder, Polynomial, RingRef};

use super::{Construction, RadgenError, WitnessSet};

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `F_1 .. F_n` on the variables `z[0] .. z[n+1]` (indices into `ring`), where
/// `F_i = sum_a (-1)^a C(i,a) z(i+1)^(i-a) z_a z_i^a`.
pub fn scroll_sci_in(ring: &RingRef, z: &[usize]) -> Vec<Polynomial> {
    let n = z.len().saturating_sub(2);
    let field = ring.field();
    let nv = ring.nvars();
    (1..=n)
        .map(|i| {
            let terms = (0..=i).map(|a| {
                let mut e = vec![0u16; nv];
                e[z[i + 1]] += (i - a) as u16;
                e[z[a]] += 1;
                e[z[i]] += a as u16;
                let mut c = field.from_bigint(&binomial(i, a));
                if a % 2 == 1 {
                    c = -c;
                }
                (Monomial::from_exponents(e), c)
            });
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

/// The `n` polynomials for the single scroll block `B(n+1)`.
pub fn scroll_sci(n: usize, field: Field, order: MonomialOrder) -> Result<WitnessSet, RadgenError> {
    if n == 0 {
        return Err(RadgenError::InvalidArgument("need n >= 1".into()));
    }
    let form = KWForm::from_kinds(&[BlockKind::Scroll(n + 1)], field, order)?;
    let z: Vec<usize> = (0..n + 2).collect();
    let polys = scroll_sci_in(form.ring(), &z);
    WitnessSet::for_matrix(polys, form.matrix(), Construction::ScrollSci)
}
