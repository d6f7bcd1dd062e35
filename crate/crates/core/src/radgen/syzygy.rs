use crate::pencil::LinMatrix;
use crate::polycore::{same_ring, Polynomial};

use crate::groebner::IdealPresentation;

use super::{Construction, RadgenError, WitnessSet};

/// Given `f_1 .. f_k`, a syzygy `g` of `f_1 .. f_(k-1)` and cofactors `h` with
/// `f_k^r = sum h_i g_i`, returns `q_i = f_k h_i + f_i`, which generate the
/// same radical as the `f`.
pub fn syzygy_reduce(
    f: &[Polynomial],
    g: &[Polynomial],
    h: &[Polynomial],
    r: u32,
) -> Result<WitnessSet, RadgenError> {
    let k = f.len();
    if k < 2 || g.len() != k - 1 || h.len() != k - 1 || r == 0 {
        return Err(RadgenError::InvalidArgument(format!(
            "need k >= 2 polynomials, k - 1 syzygy entries and cofactors, r >= 1 (got {k}, {}, {}, {r})",
            g.len(),
            h.len()
        )));
    }
    let ring = f[0].ring().clone();
    if f.iter().chain(g).chain(h).any(|p| !same_ring(p.ring(), &ring)) {
        return Err(RadgenError::Poly(crate::polycore::PolyError::RingMismatch));
    }
    let zero = Polynomial::zero(&ring);
    let relation = g.iter().zip(f).fold(zero.clone(), |acc, (gi, fi)| &acc + &(gi * fi));
    if !relation.is_zero() {
        return Err(RadgenError::SyzygyInvalid);
    }
    let last = &f[k - 1];
    let combo = h.iter().zip(g).fold(zero, |acc, (hi, gi)| &acc + &(hi * gi));
    if combo != last.pow(r) {
        return Err(RadgenError::PowerNotInSyzygyIdeal);
    }
    let polys = h.iter().zip(f).map(|(hi, fi)| &(last * hi) + fi).collect();
    let target = IdealPresentation::new(&ring, f.iter().cloned())?;
    Ok(WitnessSet::new(polys, target, Construction::SyzygyReduce))
}

/// `(b, -a)`, the Koszul syzygy of `(a, b)`.
pub fn koszul_syzygy(a: &Polynomial, b: &Polynomial) -> [Polynomial; 2] {
    [b.clone(), -a.clone()]
}

/// `([j2,j3], -[j1,j3], [j1,j2])`, a syzygy of `([j1,h], [j2,h], [j3,h])`
/// coming from the Pluecker relation. Indices use the matrix's labels.
pub fn plucker_syzygy(m: &LinMatrix, j1: usize, j2: usize, j3: usize) -> Result<[Polynomial; 3], RadgenError> {
    Ok([m.minor2(j2, j3)?, -m.minor2(j1, j3)?, m.minor2(j1, j2)?])
}

/// `[h,j1][j2,j3] - [h,j2][j1,j3] + [h,j3][j1,j2]`, identically zero.
pub fn plucker_identity(m: &LinMatrix, h: usize, j1: usize, j2: usize, j3: usize) -> Result<Polynomial, RadgenError> {
    let b = |a: usize, c: usize| m.minor2(a, c);
    let t1 = &b(h, j1)? * &b(j2, j3)?;
    let t2 = &b(h, j2)? * &b(j1, j3)?;
    let t3 = &b(h, j3)? * &b(j1, j2)?;
    Ok(&(&t1 - &t2) + &t3)
}
