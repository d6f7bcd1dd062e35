use rayon::prelude::*;

use crate::polycore::{MonomialOrder, Polynomial};

use super::{buchberger_with, GroebnerBasis, GroebnerError, IdealPresentation, Limits};

/// Highest power tried before falling back to the auxiliary-variable test.
const POWER_SHORTCUT: u32 = 4;

fn basis_of(ideal: &IdealPresentation, limits: &Limits) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(ideal, MonomialOrder::DegRevLex, limits)
}

pub fn ideal_member(f: &Polynomial, ideal: &IdealPresentation) -> Result<bool, GroebnerError> {
    ideal_member_with(f, ideal, &Limits::default())
}

pub fn ideal_member_with(f: &Polynomial, ideal: &IdealPresentation, limits: &Limits) -> Result<bool, GroebnerError> {
    basis_of(ideal, limits)?.contains(f)
}

pub fn radical_member(f: &Polynomial, ideal: &IdealPresentation) -> Result<bool, GroebnerError> {
    radical_member_with(f, ideal, &Limits::default())
}

pub fn radical_member_with(f: &Polynomial, ideal: &IdealPresentation, limits: &Limits) -> Result<bool, GroebnerError> {
    radical_member_in(&basis_of(ideal, limits)?, f, limits)
}

/// Decides `f` in the radical of the ideal whose basis is `gb`: 1 must lie in
/// the ideal plus `1 - t*f` over one extra variable `t`. Small powers of `f`
/// are tried first since they settle most positive cases cheaply.
pub fn radical_member_in(gb: &GroebnerBasis, f: &Polynomial, limits: &Limits) -> Result<bool, GroebnerError> {
    let nf = gb.reduce(f)?;
    if nf.is_zero() {
        return Ok(true);
    }
    if gb.is_unit() {
        return Ok(true);
    }
    let deg = f.total_degree().unwrap_or(0);
    let mut power = f.clone();
    for k in 2..=POWER_SHORTCUT {
        if deg * k > limits.max_degree {
            break;
        }
        power = &power * f;
        if gb.contains(&power)? {
            return Ok(true);
        }
    }
    let ring = gb.ring();
    let t = ring.fresh_name("t");
    let ext = ring.extend(&[t])?;
    let tvar = Polynomial::var(&ext, ring.nvars());
    let fe = nf.embed(&ext)?;
    let aux = &Polynomial::one(&ext) - &(&tvar * &fe);
    let basis = gb.extend_in(&ext, &[aux], limits)?;
    Ok(basis.iter().any(|g| g.is_unit()))
}

pub fn equal_radical(a: &IdealPresentation, b: &IdealPresentation) -> Result<bool, GroebnerError> {
    equal_radical_with(a, b, &Limits::default())
}

/// Both radicals agree iff every generator of each side is in the radical of
/// the other. The membership queries run in parallel.
pub fn equal_radical_with(a: &IdealPresentation, b: &IdealPresentation, limits: &Limits) -> Result<bool, GroebnerError> {
    if a.ring().names() != b.ring().names() || a.ring().field() != b.ring().field() {
        return Err(GroebnerError::RingMismatch);
    }
    let (ga, gb) = rayon::join(|| basis_of(a, limits), || basis_of(b, limits));
    let (ga, gb) = (ga?, gb?);
    let queries: Vec<(&GroebnerBasis, &Polynomial)> = a
        .generators()
        .iter()
        .map(|f| (&gb, f))
        .chain(b.generators().iter().map(|f| (&ga, f)))
        .collect();
    let answers = queries
        .par_iter()
        .map(|(g, f)| radical_member_in(g, f, limits))
        .collect::<Result<Vec<bool>, _>>()?;
    Ok(answers.into_iter().all(|x| x))
}
