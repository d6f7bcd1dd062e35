use std::collections::HashSet;
use std::str::FromStr;

use crate::polycore::{parse_rational, Field, FieldElem, LinearForm, MonomialOrder, Ring, RingRef};

use super::matrix::{Labeling, LinMatrix};
use super::PencilError;

/// Shape of a canonical block.
///
/// `Nilpotent(k)` has `k` variables and `k + 1` columns (`k = 0` is a zero
/// column), `Jordan(λ, m)` has `m` variables and columns, `Scroll(l)` has
/// `l + 1` variables and `l` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Nilpotent(usize),
    Jordan(FieldElem, usize),
    Scroll(usize),
}

impl BlockKind {
    pub fn ncols(&self) -> usize {
        match self {
            BlockKind::Nilpotent(k) => k + 1,
            BlockKind::Jordan(_, m) => *m,
            BlockKind::Scroll(l) => *l,
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            BlockKind::Nilpotent(k) => *k,
            BlockKind::Jordan(_, m) => *m,
            BlockKind::Scroll(l) => l + 1,
        }
    }

    pub fn validate(&self) -> Result<(), PencilError> {
        match self {
            BlockKind::Jordan(_, 0) | BlockKind::Scroll(0) => {
                Err(PencilError::InvalidBlock(format!("{self}: length must be positive")))
            }
            _ => Ok(()),
        }
    }

    /// Coerces a Jordan eigenvalue into `field`.
    pub fn in_field(&self, field: Field) -> Result<BlockKind, PencilError> {
        Ok(match self {
            BlockKind::Jordan(l, m) => BlockKind::Jordan(field.coerce(l)?, *m),
            other => other.clone(),
        })
    }
}

impl std::fmt::Display for BlockKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BlockKind::Nilpotent(k) => write!(f, "N({k})"),
            BlockKind::Jordan(l, m) => write!(f, "J({l},{m})"),
            BlockKind::Scroll(l) => write!(f, "B({l})"),
        }
    }
}

impl FromStr for BlockKind {
    type Err = PencilError;

    /// One token of the block-spec grammar: `N(k)`, `J(lambda,m)` or `B(l)`.
    fn from_str(tok: &str) -> Result<Self, Self::Err> {
        let bad = || PencilError::InvalidBlock(format!("malformed block token `{tok}`"));
        let t = tok.trim();
        let open = t.find('(').ok_or_else(bad)?;
        if !t.ends_with(')') {
            return Err(bad());
        }
        let head = &t[..open];
        let args: Vec<&str> = t[open + 1..t.len() - 1].split(',').map(str::trim).collect();
        let length = |s: &str| -> Result<usize, PencilError> {
            let v: i64 = s.parse().map_err(|_| bad())?;
            usize::try_from(v)
                .map_err(|_| PencilError::InvalidBlock(format!("{tok}: length must be nonnegative")))
        };
        let kind = match (head, args.as_slice()) {
            ("N", [k]) => BlockKind::Nilpotent(length(k)?),
            ("B", [l]) => BlockKind::Scroll(length(l)?),
            ("J", [lambda, m]) => {
                let q = parse_rational(lambda).ok_or_else(bad)?;
                BlockKind::Jordan(FieldElem::Rational(q), length(m)?)
            }
            _ => return Err(bad()),
        };
        kind.validate()?;
        Ok(kind)
    }
}

/// Parses a whitespace-separated block spec such as `J(0,1) B(1) B(1) J(1,1)`.
pub fn parse_block_kinds(spec: &str, field: Field) -> Result<Vec<BlockKind>, PencilError> {
    let kinds = spec
        .split_whitespace()
        .map(|t| t.parse::<BlockKind>()?.in_field(field))
        .collect::<Result<Vec<_>, _>>()?;
    if kinds.is_empty() {
        return Err(PencilError::Empty);
    }
    Ok(kinds)
}

/// A block together with the names of the variables it introduces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub vars: Vec<String>,
}

impl Block {
    pub fn new(kind: BlockKind, vars: Vec<String>) -> Result<Self, PencilError> {
        kind.validate()?;
        if vars.len() != kind.nvars() {
            return Err(PencilError::InvalidBlock(format!(
                "{kind} needs {} variables, got {}",
                kind.nvars(),
                vars.len()
            )));
        }
        Ok(Block { kind, vars })
    }

    /// Entries of the block as (top, bottom) rows in `ring`, which must
    /// contain the block's variables.
    pub fn columns(&self, ring: &RingRef) -> Result<(Vec<LinearForm>, Vec<LinearForm>), PencilError> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| ring.var_index(v).ok_or_else(|| PencilError::UnknownVariable(v.clone())))
            .collect::<Result<_, _>>()?;
        let var = |h: usize| LinearForm::var(ring, idx[h]);
        let zero = || LinearForm::zero(ring);
        Ok(match &self.kind {
            BlockKind::Nilpotent(k) => {
                let top = (0..=*k).map(|c| if c < *k { var(c) } else { zero() }).collect();
                let bottom = (0..=*k).map(|c| if c > 0 { var(c - 1) } else { zero() }).collect();
                (top, bottom)
            }
            BlockKind::Jordan(lambda, m) => {
                let lambda = ring.field().coerce(lambda)?;
                let top = (0..*m).map(var).collect();
                let bottom = (0..*m)
                    .map(|c| {
                        let mut p = var(c).into_poly().scale(&lambda);
                        if c > 0 {
                            p = &p + var(c - 1).poly();
                        }
                        LinearForm::new(p).expect("linear")
                    })
                    .collect();
                (top, bottom)
            }
            BlockKind::Scroll(l) => ((0..*l).map(var).collect(), (1..=*l).map(var).collect()),
        })
    }
}

/// Default variable names: `x{i}_{h}` for the i-th nilpotent block,
/// `y{j}_{h}` for Jordan blocks (h from 1), `z{p}_{h}` for scrolls (h from 0).
pub fn name_blocks(kinds: &[BlockKind]) -> Vec<Block> {
    let (mut ni, mut ji, mut si) = (0, 0, 0);
    kinds
        .iter()
        .map(|k| {
            let vars = match k {
                BlockKind::Nilpotent(n) => {
                    ni += 1;
                    (1..=*n).map(|h| format!("x{ni}_{h}")).collect()
                }
                BlockKind::Jordan(_, m) => {
                    ji += 1;
                    (1..=*m).map(|h| format!("y{ji}_{h}")).collect()
                }
                BlockKind::Scroll(l) => {
                    si += 1;
                    (0..=*l).map(|h| format!("z{si}_{h}")).collect()
                }
            };
            Block {
                kind: k.clone(),
                vars,
            }
        })
        .collect()
}

/// Ring on the blocks' variables followed by `extra`.
pub fn block_ring(
    blocks: &[Block],
    extra: &[String],
    field: Field,
    order: MonomialOrder,
) -> Result<RingRef, PencilError> {
    let mut seen = HashSet::new();
    let mut names = Vec::new();
    for v in blocks.iter().flat_map(|b| b.vars.iter()).chain(extra) {
        if !seen.insert(v.clone()) {
            return Err(PencilError::VariableCollision(v.clone()));
        }
        names.push(v.clone());
    }
    Ok(Ring::new(names, field, order)?)
}

/// The displayed matrix of a single block, in the ring of its own variables.
pub fn make_block(block: &Block, field: Field) -> Result<LinMatrix, PencilError> {
    concat(std::slice::from_ref(block), field)
}

/// Horizontal concatenation of blocks over the ring of all their variables.
pub fn concat(blocks: &[Block], field: Field) -> Result<LinMatrix, PencilError> {
    let ring = block_ring(blocks, &[], field, MonomialOrder::default())?;
    concat_in(blocks, &ring)
}

/// Concatenation inside a given ring.
pub fn concat_in(blocks: &[Block], ring: &RingRef) -> Result<LinMatrix, PencilError> {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for b in blocks {
        let (t, u) = b.columns(ring)?;
        top.extend(t);
        bottom.extend(u);
    }
    LinMatrix::new(ring, top, bottom, Labeling::OneBased)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn scroll_is_hankel() {
        let b = &name_blocks(&[BlockKind::Scroll(3)])[0];
        let m = make_block(b, q()).unwrap();
        let names: Vec<String> = (0..3).map(|c| m.entry(0, c).to_string()).collect();
        assert_eq!(names, ["z1_0", "z1_1", "z1_2"]);
        let names: Vec<String> = (0..3).map(|c| m.entry(1, c).to_string()).collect();
        assert_eq!(names, ["z1_1", "z1_2", "z1_3"]);
    }

    #[test]
    fn length_one_blocks() {
        let zero = make_block(&name_blocks(&[BlockKind::Nilpotent(0)])[0], q()).unwrap();
        assert_eq!(zero.ncols(), 1);
        assert!(zero.entry(0, 0).is_zero() && zero.entry(1, 0).is_zero());
        let j = make_block(&name_blocks(&[BlockKind::Jordan(q().from_i64(3), 1)])[0], q()).unwrap();
        assert_eq!(j.entry(0, 0).to_string(), "y1_1");
        assert_eq!(j.entry(1, 0).to_string(), "3*y1_1");
    }

    #[test]
    fn nilpotent_shape() {
        let m = make_block(&name_blocks(&[BlockKind::Nilpotent(2)])[0], q()).unwrap();
        let top: Vec<String> = (0..3).map(|c| m.entry(0, c).to_string()).collect();
        let bottom: Vec<String> = (0..3).map(|c| m.entry(1, c).to_string()).collect();
        assert_eq!(top, ["x1_1", "x1_2", "0"]);
        assert_eq!(bottom, ["0", "x1_1", "x1_2"]);
    }

    #[test]
    fn jordan_shape() {
        let m = make_block(&name_blocks(&[BlockKind::Jordan(q().from_i64(2), 2)])[0], q()).unwrap();
        let r = m.ring();
        assert_eq!(m.entry(1, 1).poly(), &parse_polynomial(r, "y1_1 + 2*y1_2").unwrap());
    }

    #[test]
    fn corner_zero_form_concatenation() {
        let kinds = parse_block_kinds("J(0,1) B(1) B(1) J(1,1)", q()).unwrap();
        let m = concat(&name_blocks(&kinds), q()).unwrap();
        assert_eq!(m.ncols(), 4);
        assert!(m.entry(1, 0).is_zero());
        assert_eq!(m.entry(0, 3).to_string(), m.entry(1, 3).to_string());
        assert_eq!(m.ring().nvars(), 6);
    }

    #[test]
    fn generic_is_concatenation_of_b1() {
        let kinds = vec![BlockKind::Scroll(1); 4];
        let m = concat(&name_blocks(&kinds), q()).unwrap();
        assert_eq!(m.ncols(), 4);
        assert_eq!(m.ring().nvars(), 8);
        assert_eq!(m.minor_generators().len(), 6);
    }

    #[test]
    fn collisions_and_malformed_tokens() {
        let b = Block::new(BlockKind::Scroll(1), vec!["a".into(), "b".into()]).unwrap();
        let c = Block::new(BlockKind::Scroll(1), vec!["b".into(), "c".into()]).unwrap();
        assert!(matches!(concat(&[b, c], q()), Err(PencilError::VariableCollision(v)) if v == "b"));
        assert!("B(0)".parse::<BlockKind>().is_err());
        assert!("J(1)".parse::<BlockKind>().is_err());
        assert!("Q(2)".parse::<BlockKind>().is_err());
        assert!("B(-1)".parse::<BlockKind>().is_err());
        assert_eq!("J(1/2,3)".parse::<BlockKind>().unwrap().to_string(), "J(1/2,3)");
    }
}
