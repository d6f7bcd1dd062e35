use crate::pencil::LinMatrix;
use crate::polycore::{Field, MonomialOrder, Polynomial};

use super::{Construction, RadgenError, WitnessSet};

/// The 2-minors `[a,b]` (1-based, `a < b`) of a 2 x n matrix under
/// `[a,b] <= [c,d]` iff `a <= c` and `b <= d`, ranked by longest chains.
#[derive(Clone, Debug)]
pub struct MinorPoset {
    n: usize,
    elements: Vec<(usize, usize)>,
    ranks: Vec<usize>,
}

impl MinorPoset {
    pub fn new(n: usize) -> Self {
        let mut elements: Vec<(usize, usize)> = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                elements.push((a, b));
            }
        }
        // a < c or b < d whenever x < y, so sorting by a + b is a linear extension
        elements.sort_by_key(|&(a, b)| (a + b, a));
        let mut ranks = vec![1; elements.len()];
        for i in 0..elements.len() {
            for j in 0..i {
                if Self::leq(elements[j], elements[i]) && elements[j] != elements[i] {
                    ranks[i] = ranks[i].max(ranks[j] + 1);
                }
            }
        }
        MinorPoset { n, elements, ranks }
    }

    pub fn leq(x: (usize, usize), y: (usize, usize)) -> bool {
        x.0 <= y.0 && x.1 <= y.1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    pub fn rank_of(&self, x: (usize, usize)) -> Option<usize> {
        self.elements.iter().position(|&e| e == x).map(|i| self.ranks[i])
    }

    /// Elements of rank `j`, ordered by first index.
    pub fn level(&self, j: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .elements
            .iter()
            .zip(&self.ranks)
            .filter(|(_, &r)| r == j)
            .map(|(&e, _)| e)
            .collect();
        out.sort();
        out
    }
}

/// Column pairs summed in each `p_j`, `j = 1 .. 2n-3`, from the closed form.
pub fn bruns_index_sets(n: usize) -> Result<Vec<Vec<(usize, usize)>>, RadgenError> {
    if n < 2 {
        return Err(RadgenError::InvalidArgument(format!("need n >= 2, got {n}")));
    }
    let n = n as i64;
    Ok((1..=2 * n - 3)
        .map(|j| {
            let delta = (j - n + 1) * (j / n);
            let top = (j + 1) / 2 - 1 - delta;
            (0..=top)
                .map(|k| ((k + 1 + delta) as usize, (j - k + 1 - delta) as usize))
                .collect()
        })
        .collect())
}

/// The `2n - 3` polynomials for the generic matrix `(x1 .. xn; x(n+1) .. x(2n))`.
pub fn bruns_poset_polys(n: usize, field: Field, order: MonomialOrder) -> Result<WitnessSet, RadgenError> {
    bruns_index_sets(n)?;
    let m = LinMatrix::generic(n, field, order)?;
    let mut w = bruns_polys_for(&m)?;
    w.construction = Construction::BrunsPoset;
    Ok(w)
}

/// The same sums with the minors of an arbitrary matrix substituted, columns
/// taken by position. Sums that vanish are dropped.
pub fn bruns_polys_for(matrix: &LinMatrix) -> Result<WitnessSet, RadgenError> {
    let n = matrix.ncols();
    let polys = if n < 2 {
        Vec::new()
    } else {
        bruns_index_sets(n)?
            .iter()
            .map(|level| {
                level.iter().fold(Polynomial::zero(matrix.ring()), |acc, &(a, b)| {
                    &acc + &matrix.minor_at(a - 1, b - 1)
                })
            })
            .filter(|p| !p.is_zero())
            .collect()
    };
    WitnessSet::for_matrix(polys, matrix, Construction::BrunsPoset)
}
