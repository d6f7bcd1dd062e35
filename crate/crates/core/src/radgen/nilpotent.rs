use crate::pencil::{Block, BlockKind, KWForm, LinMatrix};
use crate::polycore::{Field, MonomialOrder, Polynomial};

use super::{Construction, RadgenError, WitnessSet};

/// The `k` variables of a lone nilpotent block `N(k)`.
pub fn nilpotent_witness(k: usize, field: Field, order: MonomialOrder) -> Result<WitnessSet, RadgenError> {
    let form = KWForm::from_kinds(&[BlockKind::Nilpotent(k)], field, order)?;
    let polys = (0..k).map(|i| Polynomial::var(form.ring(), i)).collect();
    WitnessSet::for_matrix(polys, form.matrix(), Construction::NilpotentExtend)
}

/// Appends a nilpotent block on the fresh variables `names` to the base
/// witness's matrix; the witness gains those variables.
pub fn nilpotent_extend(base: &WitnessSet, names: &[String]) -> Result<WitnessSet, RadgenError> {
    let matrix = base
        .matrix
        .as_ref()
        .ok_or_else(|| RadgenError::InvalidArgument("base witness has no matrix".into()))?;
    let ring = base.ring();
    if let Some(v) = names.iter().find(|v| ring.var_index(v).is_some()) {
        return Err(RadgenError::VariableCollision(v.clone()));
    }
    let ext = ring.extend(names)?;
    let block = Block::new(BlockKind::Nilpotent(names.len()), names.to_vec())?;
    let (top, bottom) = block.columns(&ext)?;
    let tail = LinMatrix::new(&ext, top, bottom, matrix.labeling())?;
    let joined = matrix.embed(&ext)?.hconcat(&tail)?;
    let mut polys = base
        .polys
        .iter()
        .map(|p| p.embed(&ext))
        .collect::<Result<Vec<_>, _>>()?;
    polys.extend((ring.nvars()..ext.nvars()).map(|i| Polynomial::var(&ext, i)));
    WitnessSet::for_matrix(polys, &joined, Construction::NilpotentExtend)
}
