use crate::pencil::LinMatrix;
use crate::polycore::{Field, MonomialOrder, Polynomial};

use super::bruns::bruns_index_sets;
use super::schmitt_vogel::SVPartition;
use super::{Construction, RadgenError, WitnessSet};

fn check(n: usize) -> Result<(), RadgenError> {
    if n < 4 {
        return Err(RadgenError::InvalidArgument(format!("need n >= 4, got {n}")));
    }
    Ok(())
}

/// `2n - 5` polynomials generating the 2-minors of the corner-zero matrix
/// `(0 x1 .. x(n-1); xn .. x(2n-2) 0)` up to radical: Bruns sums of the inner
/// columns, the upper ones absorbing the monomial sums `q_i`.
pub fn corner_zero_generators(n: usize, field: Field, order: MonomialOrder) -> Result<WitnessSet, RadgenError> {
    check(n)?;
    let m = LinMatrix::corner_zero(n, field, order)?;
    let minor = |i: usize, j: usize| m.minor2(i, j).expect("column in range");
    let q: Vec<Polynomial> = (1..n)
        .map(|i| {
            if i == 1 {
                -minor(0, n - 1)
            } else {
                &(-minor(0, i - 1)) - &minor(i - 1, n - 1)
            }
        })
        .collect();
    // inner columns 1 .. n-2 keep their labels as 1-based positions
    let p: Vec<Polynomial> = bruns_index_sets(n - 2)?
        .iter()
        .map(|level| {
            level
                .iter()
                .fold(Polynomial::zero(m.ring()), |acc, &(a, b)| &acc + &minor(a, b))
        })
        .collect();
    let mut polys: Vec<Polynomial> = p[..n - 4].to_vec();
    for i in 1..=n - 3 {
        polys.push(&q[i - 1] + &p[n - 4 + i - 1]);
    }
    polys.push(q[n - 3].clone());
    polys.push(q[n - 2].clone());
    WitnessSet::for_matrix(polys, &m, Construction::CornerZero)
}

/// The monomial generators of the corner-zero ideal split into
/// `{x(n-1) xn}, {x1 xn, x(n-1) x(n+1)}, .., {x(n-2) xn, x(n-1) x(2n-2)}`.
pub fn corner_zero_monomial_partition(n: usize, field: Field, order: MonomialOrder) -> Result<SVPartition, RadgenError> {
    check(n)?;
    let m = LinMatrix::corner_zero(n, field, order)?;
    let r = m.ring();
    // 1-based variable x_i has index i - 1
    let x = |i: usize| Polynomial::var(r, i - 1);
    let mut levels = vec![vec![&x(n - 1) * &x(n)]];
    for i in 2..n {
        levels.push(vec![&x(i - 1) * &x(n), &x(n - 1) * &x(n + i - 1)]);
    }
    Ok(SVPartition::from_levels(levels))
}
