use crate::pencil::{BlockKind, KWForm};
use crate::polycore::{FieldElem, Polynomial, RingRef};

use super::schmitt_vogel::SVPartition;
use super::{Construction, RadgenError, WitnessSet};

struct Classes {
    /// Per eigenvalue class (sorted by decreasing size), per block, the
    /// variable indices of the block.
    blocks: Vec<Vec<Vec<usize>>>,
}

fn classes(form: &KWForm) -> Result<Classes, RadgenError> {
    let ring = form.ring();
    let mut by_value: Vec<(FieldElem, Vec<Vec<usize>>)> = Vec::new();
    for b in form.blocks() {
        let lambda = match &b.kind {
            BlockKind::Jordan(l, _) => l.clone(),
            other => return Err(RadgenError::NotJordan(other.to_string())),
        };
        let idx = b
            .vars
            .iter()
            .map(|v| ring.var_index(v).expect("block variable in ring"))
            .collect();
        match by_value.iter_mut().find(|(l, _)| *l == lambda) {
            Some((_, list)) => list.push(idx),
            None => by_value.push((lambda, vec![idx])),
        }
    }
    if by_value.is_empty() {
        return Err(RadgenError::InvalidArgument("no Jordan blocks".into()));
    }
    by_value.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then_with(|| a.0.canonical_cmp(&b.0)));
    Ok(Classes {
        blocks: by_value.into_iter().map(|(_, b)| b).collect(),
    })
}

/// Nonzero antidiagonals of the product matrix of last variables: columns
/// run over classes `1 .. d-1`, rows over classes `d, d-1, .., 2`, and an
/// entry is present when the row class comes after the column class.
fn antidiagonals(ring: &RingRef, cls: &Classes) -> Vec<Vec<Polynomial>> {
    let d = cls.blocks.len();
    let last = |j: usize| -> Vec<usize> { cls.blocks[j].iter().map(|b| *b.last().unwrap()).collect() };
    let cols: Vec<(usize, usize)> = (0..d - 1).flat_map(|j| last(j).into_iter().map(move |v| (j, v))).collect();
    let rows: Vec<(usize, usize)> = (1..d).rev().flat_map(|k| last(k).into_iter().map(move |v| (k, v))).collect();
    let mut diags: Vec<Vec<Polynomial>> = vec![Vec::new(); rows.len() + cols.len()];
    for (r, &(k, rv)) in rows.iter().enumerate() {
        for (c, &(j, cv)) in cols.iter().enumerate() {
            if k > j {
                let p = &Polynomial::var(ring, cv) * &Polynomial::var(ring, rv);
                diags[r + c].push(p);
            }
        }
    }
    diags.retain(|d| !d.is_empty());
    diags
}

/// Schmitt-Vogel partition of the edge ideal on last variables; empty when
/// only one eigenvalue occurs.
pub fn jordan_q_partition(form: &KWForm) -> Result<Option<SVPartition>, RadgenError> {
    let cls = classes(form)?;
    if cls.blocks.len() < 2 {
        return Ok(None);
    }
    Ok(Some(SVPartition::from_levels(antidiagonals(form.ring(), &cls))))
}

/// All block variables except the last of each block, followed (with more
/// than one eigenvalue) by the antidiagonal sums of the product matrix.
pub fn jordan_generators(form: &KWForm) -> Result<WitnessSet, RadgenError> {
    let cls = classes(form)?;
    let ring = form.ring().clone();
    let mut polys: Vec<Polynomial> = cls
        .blocks
        .iter()
        .flatten()
        .flat_map(|b| b[..b.len() - 1].iter().map(|&v| Polynomial::var(&ring, v)))
        .collect();
    if cls.blocks.len() > 1 {
        for diag in antidiagonals(&ring, &cls) {
            polys.push(diag.iter().fold(Polynomial::zero(&ring), |acc, p| &acc + p));
        }
    }
    WitnessSet::for_matrix(polys, form.matrix(), Construction::JordanQ)
}
