use crate::polycore::MonomialOrder;

use super::{buchberger_with, GroebnerError, IdealPresentation, Limits};

/// Largest number of variables for the exhaustive dimension search.
pub const MAX_HEIGHT_VARS: usize = 20;

pub fn ideal_height(ideal: &IdealPresentation) -> Result<usize, GroebnerError> {
    ideal_height_with(ideal, &Limits::default())
}

/// Height as the least number of variables meeting the support of every
/// leading monomial; the complement is a maximal independent set of the
/// leading-term ideal.
pub fn ideal_height_with(ideal: &IdealPresentation, limits: &Limits) -> Result<usize, GroebnerError> {
    let n = ideal.ring().nvars();
    if n > MAX_HEIGHT_VARS {
        return Err(GroebnerError::TooManyVariables(n));
    }
    let gb = buchberger_with(ideal, MonomialOrder::DegRevLex, limits)?;
    if gb.is_unit() {
        return Err(GroebnerError::ImproperIdeal);
    }
    let mut supports: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    supports.sort_unstable();
    supports.dedup();
    // drop supports containing another one; they are hit automatically
    let minimal: Vec<u32> = supports
        .iter()
        .copied()
        .filter(|&s| !supports.iter().any(|&t| t != s && t & s == t))
        .collect();
    if minimal.is_empty() {
        return Ok(0);
    }
    for k in 1..=n {
        if combinations(n, k).any(|cover| minimal.iter().all(|&s| s & cover != 0)) {
            return Ok(k);
        }
    }
    unreachable!("the full variable set meets every nonempty support")
}

/// Bit masks of all `k`-subsets of `0..n`, in Gosper order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let mut cur = if k == 0 { 0u64 } else { (1u64 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done || cur >= limit {
            return None;
        }
        let out = cur as u32;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::combinations;

    #[test]
    fn gosper_enumerates_binomially_many() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(6, 3).count(), 20);
        assert_eq!(combinations(4, 4).count(), 1);
        assert!(combinations(6, 3).all(|m| m.count_ones() == 3));
    }
}
