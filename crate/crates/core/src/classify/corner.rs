use crate::pencil::{Block, BlockKind, Certificate, KWForm, LinMatrix};
use crate::polycore::linalg::Matrix;
use crate::polycore::{FieldElem, LinearSubstitution, Polynomial};

use super::ClassifyError;

/// A form of corner-zero shape, with a certificate relating it to the
/// corner-zero matrix `(0 x1 .. x(n-1); xn .. x(2n-2) 0)`.
#[derive(Clone, Debug)]
pub struct Normalization {
    /// The input form, its certificate replaced by one against `target`.
    pub form: KWForm,
    pub target: LinMatrix,
}

impl Normalization {
    pub fn n(&self) -> usize {
        self.target.ncols()
    }

    /// Moves a polynomial on the corner-zero variables into the form's ring.
    pub fn pull_back(&self, f: &Polynomial) -> Result<Polynomial, ClassifyError> {
        let map: LinearSubstitution = self.form.certificate().forward(self.form.ring())?;
        Ok(crate::polycore::substitute_linear(f, &map)?)
    }
}

/// Two length-1 Jordan blocks with distinct eigenvalues and any number of
/// length-1 scrolls, nothing else.
pub fn is_corner_zero(blocks: &[Block]) -> bool {
    let mut eig: Vec<&FieldElem> = Vec::new();
    for b in blocks {
        match &b.kind {
            BlockKind::Jordan(l, 1) => eig.push(l),
            BlockKind::Scroll(1) => {}
            _ => return false,
        }
    }
    eig.len() == 2 && eig[0] != eig[1]
}

/// Certificate sending the corner-zero matrix to the given form, which
/// must satisfy [`is_corner_zero`] and have no free variables.
///
/// The first Jordan block (eigenvalue `a`) becomes column 1, the scrolls
/// columns `2 .. n-1` in order, the second (eigenvalue `b`) column `n`, after
/// the row action `(r1, r2) -> (a r1 - r2, b r1 - r2)`.
pub fn corner_zero_normalization(form: &KWForm) -> Result<Option<Normalization>, ClassifyError> {
    if !is_corner_zero(form.blocks()) || !form.free_vars().is_empty() {
        return Ok(None);
    }
    let ring = form.ring();
    let field = ring.field();
    let n = form.matrix().ncols();
    let target = LinMatrix::corner_zero(n, field, ring.order())?;
    let idx = |v: &String| ring.var_index(v).expect("block variable in ring");

    let mut jordans: Vec<(FieldElem, usize, usize)> = Vec::new();
    let mut scrolls: Vec<(usize, usize, usize)> = Vec::new();
    for (b, cols) in form.blocks().iter().zip(form.block_columns()) {
        match &b.kind {
            BlockKind::Jordan(l, _) => jordans.push((l.clone(), idx(&b.vars[0]), cols.start)),
            _ => scrolls.push((idx(&b.vars[0]), idx(&b.vars[1]), cols.start)),
        }
    }
    let (a, y1, c1) = jordans[0].clone();
    let (b, y2, c2) = jordans[1].clone();

    let c0 = Matrix::from_rows(field, vec![vec![a.clone(), -field.one()], vec![b.clone(), -field.one()]]);
    let c = c0.inverse().expect("distinct eigenvalues");

    // (X P)[:, j] = X[:, pi(j)]
    let mut pi = vec![c1];
    pi.extend(scrolls.iter().map(|s| s.2));
    pi.push(c2);
    let mut p = Matrix::zeros(field, n, n);
    for (j, &src) in pi.iter().enumerate() {
        p.set(src, j, field.one());
    }
    let c_prime = p.transpose();

    let nv = ring.nvars();
    let mut v = Matrix::zeros(field, 2 * n - 2, nv);
    for (i, &(z0, z1, _)) in scrolls.iter().enumerate() {
        v.set(i, z0, a.clone());
        v.set(i, z1, -field.one());
        v.set(n + i, z0, b.clone());
        v.set(n + i, z1, -field.one());
    }
    v.set(n - 2, y2, &a - &b);
    v.set(n - 1, y1, &b - &a);

    let certificate = Certificate {
        original_ring: target.ring().clone(),
        c,
        c_prime,
        v,
    };
    Ok(Some(Normalization {
        form: form.clone().with_certificate(certificate),
        target,
    }))
}
