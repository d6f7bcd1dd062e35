use serde::{Deserialize, Serialize};

use crate::polycore::linalg::Matrix;
use crate::polycore::{
    parse_linear_form, same_ring, substitute_linear, Field, FieldElem, LinearForm,
    LinearSubstitution, MonomialOrder, Polynomial, Ring, RingRef,
};

use super::PencilError;

/// How column indices are written in minors `[i,j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Labeling {
    ZeroBased,
    #[default]
    OneBased,
}

impl Labeling {
    pub fn offset(self) -> usize {
        match self {
            Labeling::ZeroBased => 0,
            Labeling::OneBased => 1,
        }
    }
}

/// A 2 x n matrix of linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMatrix {
    ring: RingRef,
    rows: [Vec<LinearForm>; 2],
    labeling: Labeling,
}

impl LinMatrix {
    pub fn new(
        ring: &RingRef,
        top: Vec<LinearForm>,
        bottom: Vec<LinearForm>,
        labeling: Labeling,
    ) -> Result<Self, PencilError> {
        if top.len() != bottom.len() {
            return Err(PencilError::RaggedRows {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        if top.is_empty() {
            return Err(PencilError::Empty);
        }
        if top.iter().chain(&bottom).any(|f| !same_ring(f.ring(), ring)) {
            return Err(PencilError::RingMismatch);
        }
        Ok(LinMatrix {
            ring: ring.clone(),
            rows: [top, bottom],
            labeling,
        })
    }

    /// Parses two rows of entry texts in the given ring.
    pub fn parse(
        ring: &RingRef,
        top: &[&str],
        bottom: &[&str],
        labeling: Labeling,
    ) -> Result<Self, PencilError> {
        let parse_row = |row: &[&str]| -> Result<Vec<LinearForm>, PencilError> {
            row.iter()
                .map(|s| parse_linear_form(ring, s).map_err(PencilError::from))
                .collect()
        };
        Self::new(ring, parse_row(top)?, parse_row(bottom)?, labeling)
    }

    /// The matrix whose first row has coefficient matrix `e` and second row
    /// `f` (both `nvars x ncols`, row = variable, column = matrix column).
    pub fn from_coefficients(
        ring: &RingRef,
        e: &Matrix,
        f: &Matrix,
        labeling: Labeling,
    ) -> Result<Self, PencilError> {
        let build = |m: &Matrix| -> Vec<LinearForm> {
            (0..m.cols())
                .map(|c| LinearForm::from_coefficients(ring, &m.column(c)))
                .collect()
        };
        Self::new(ring, build(e), build(f), labeling)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    pub fn with_labeling(mut self, labeling: Labeling) -> Self {
        self.labeling = labeling;
        self
    }

    pub fn entry(&self, row: usize, col: usize) -> &LinearForm {
        &self.rows[row][col]
    }

    pub fn row(&self, row: usize) -> &[LinearForm] {
        &self.rows[row]
    }

    fn position(&self, label: usize) -> Result<usize, PencilError> {
        let off = self.labeling.offset();
        if label < off || label - off >= self.ncols() {
            return Err(PencilError::IndexOutOfRange {
                index: label,
                ncols: self.ncols(),
                labeling: self.labeling,
            });
        }
        Ok(label - off)
    }

    /// The minor `[i,j]` on columns labelled `i` and `j`.
    pub fn minor2(&self, i: usize, j: usize) -> Result<Polynomial, PencilError> {
        let a = self.position(i)?;
        let b = self.position(j)?;
        Ok(self.minor_at(a, b))
    }

    /// Minor on 0-based column positions.
    pub fn minor_at(&self, a: usize, b: usize) -> Polynomial {
        let r = &self.rows;
        &(r[0][a].poly() * r[1][b].poly()) - &(r[0][b].poly() * r[1][a].poly())
    }

    /// All minors on column pairs `a < b`, in lexicographic order of the pair.
    pub fn minors(&self) -> Vec<Polynomial> {
        let n = self.ncols();
        let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for a in 0..n {
            for b in a + 1..n {
                out.push(self.minor_at(a, b));
            }
        }
        out
    }

    /// Nonzero minors, duplicates removed; a generating set for the ideal.
    pub fn minor_generators(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for m in self.minors() {
            if !m.is_zero() && !out.contains(&m) {
                out.push(m);
            }
        }
        out
    }

    /// Coefficient matrix of one row: `nvars x ncols`.
    pub fn coefficient_matrix(&self, row: usize) -> Matrix {
        let field = self.ring.field();
        let mut m = Matrix::zeros(field, self.ring.nvars(), self.ncols());
        for (c, form) in self.rows[row].iter().enumerate() {
            for (v, coeff) in form.coefficients().into_iter().enumerate() {
                if !coeff.is_zero() {
                    m.set(v, c, coeff);
                }
            }
        }
        m
    }

    /// Indices of variables that occur in some entry.
    pub fn used_variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for form in self.rows.iter().flatten() {
            for v in form.poly().variables() {
                used[v] = true;
            }
        }
        (0..used.len()).filter(|&v| used[v]).collect()
    }

    pub fn substitute(&self, map: &LinearSubstitution) -> Result<LinMatrix, PencilError> {
        let sub = |row: &[LinearForm]| -> Result<Vec<LinearForm>, PencilError> {
            row.iter()
                .map(|f| {
                    let p = substitute_linear(f.poly(), map)?;
                    Ok(LinearForm::new(p)?)
                })
                .collect()
        };
        LinMatrix::new(map.target(), sub(&self.rows[0])?, sub(&self.rows[1])?, self.labeling)
    }

    /// `c * self * c_prime` for scalar matrices `c` (2x2) and `c_prime` (n x n).
    pub fn transform(&self, c: &Matrix, c_prime: &Matrix) -> Result<LinMatrix, PencilError> {
        let n = self.ncols();
        if c.rows() != 2 || c.cols() != 2 || c_prime.rows() != n || c_prime.cols() != n {
            return Err(PencilError::DimensionMismatch);
        }
        let mixed: Vec<Vec<Polynomial>> = (0..2)
            .map(|i| {
                (0..n)
                    .map(|col| {
                        &self.rows[0][col].poly().scale(c.get(i, 0))
                            + &self.rows[1][col].poly().scale(c.get(i, 1))
                    })
                    .collect()
            })
            .collect();
        let mut out = [Vec::with_capacity(n), Vec::with_capacity(n)];
        for (i, row) in mixed.iter().enumerate() {
            for j in 0..n {
                let mut acc = Polynomial::zero(&self.ring);
                for (k, p) in row.iter().enumerate() {
                    let s = c_prime.get(k, j);
                    if !s.is_zero() {
                        acc = &acc + &p.scale(s);
                    }
                }
                out[i].push(LinearForm::new(acc)?);
            }
        }
        let [top, bottom] = out;
        LinMatrix::new(&self.ring, top, bottom, self.labeling)
    }

    /// The generic matrix `(x1 .. xn; x(n+1) .. x(2n))`.
    pub fn generic(n: usize, field: Field, order: MonomialOrder) -> Result<Self, PencilError> {
        let ring = Ring::indexed("x", 2 * n, field, order);
        let top = (0..n).map(|i| LinearForm::var(&ring, i)).collect();
        let bottom = (n..2 * n).map(|i| LinearForm::var(&ring, i)).collect();
        LinMatrix::new(&ring, top, bottom, Labeling::OneBased)
    }

    /// `(0 x1 .. x(n-1); xn .. x(2n-2) 0)` in `2n - 2` variables, with
    /// columns labelled from 0.
    pub fn corner_zero(n: usize, field: Field, order: MonomialOrder) -> Result<Self, PencilError> {
        if n < 2 {
            return Err(PencilError::InvalidBlock(format!("corner-zero matrix needs n >= 2, got {n}")));
        }
        let ring = Ring::indexed("x", 2 * n - 2, field, order);
        let zero = || LinearForm::zero(&ring);
        let top = std::iter::once(zero())
            .chain((0..n - 1).map(|i| LinearForm::var(&ring, i)))
            .collect();
        let bottom = (n - 1..2 * n - 2)
            .map(|i| LinearForm::var(&ring, i))
            .chain(std::iter::once(zero()))
            .collect();
        LinMatrix::new(&ring, top, bottom, Labeling::ZeroBased)
    }

    /// The same matrix in a ring containing all of its variables by name.
    pub fn embed(&self, target: &RingRef) -> Result<LinMatrix, PencilError> {
        let mv = |r: usize| -> Result<Vec<LinearForm>, PencilError> {
            self.rows[r]
                .iter()
                .map(|f| Ok(LinearForm::new(f.poly().embed(target)?)?))
                .collect()
        };
        LinMatrix::new(target, mv(0)?, mv(1)?, self.labeling)
    }

    /// Horizontal concatenation over a common ring.
    pub fn hconcat(&self, other: &LinMatrix) -> Result<LinMatrix, PencilError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PencilError::RingMismatch);
        }
        let join = |r: usize| [self.rows[r].clone(), other.rows[r].clone()].concat();
        LinMatrix::new(&self.ring, join(0), join(1), self.labeling)
    }

    /// Columns `cols` (0-based positions) as a new matrix in the same ring.
    pub fn select_columns(&self, cols: &[usize]) -> Result<LinMatrix, PencilError> {
        let pick = |r: usize| cols.iter().map(|&c| self.rows[r][c].clone()).collect();
        LinMatrix::new(&self.ring, pick(0), pick(1), self.labeling)
    }

    /// Evaluates every entry at a point.
    pub fn evaluate(&self, point: &[FieldElem]) -> Result<[Vec<FieldElem>; 2], PencilError> {
        let ev = |r: usize| -> Result<Vec<FieldElem>, PencilError> {
            self.rows[r]
                .iter()
                .map(|f| f.poly().evaluate(point).map_err(PencilError::from))
                .collect()
        };
        Ok([ev(0)?, ev(1)?])
    }
}

impl std::fmt::Display for LinMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.ncols())
            .map(|c| cells[0][c].len().max(cells[1][c].len()))
            .collect();
        for (i, row) in cells.iter().enumerate() {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            write!(f, "[ {} ]", line.join(" | "))?;
            if i == 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, Field, MonomialOrder, Ring};
    use proptest::prelude::*;

    fn generic(n: usize) -> LinMatrix {
        let r = Ring::indexed("x", 2 * n, Field::Rational, MonomialOrder::DegRevLex);
        let top: Vec<LinearForm> = (0..n).map(|i| LinearForm::var(&r, i)).collect();
        let bottom: Vec<LinearForm> = (0..n).map(|i| LinearForm::var(&r, n + i)).collect();
        LinMatrix::new(&r, top, bottom, Labeling::OneBased).unwrap()
    }

    #[test]
    fn generic_minor_matches_listed_polynomial() {
        let m = generic(5);
        let expect = parse_polynomial(m.ring(), "x1*x7 - x2*x6").unwrap();
        assert_eq!(m.minor2(1, 2).unwrap(), expect);
        assert!(m.minor2(3, 3).unwrap().is_zero());
        assert!(matches!(m.minor2(0, 2), Err(PencilError::IndexOutOfRange { .. })));
        assert!(matches!(m.minor2(1, 6), Err(PencilError::IndexOutOfRange { .. })));
    }

    #[test]
    fn corner_zero_minor_zero_based() {
        let r = Ring::indexed("x", 6, Field::Rational, MonomialOrder::DegRevLex);
        let m = LinMatrix::parse(
            &r,
            &["0", "x1", "x2", "x3"],
            &["x4", "x5", "x6", "0"],
            Labeling::ZeroBased,
        )
        .unwrap();
        assert_eq!(m.minor2(0, 3).unwrap(), parse_polynomial(&r, "-x3*x4").unwrap());
    }

    #[test]
    fn transform_by_identity_is_trivial() {
        let m = generic(3);
        let q = Field::Rational;
        let t = m.transform(&Matrix::identity(q, 2), &Matrix::identity(q, 3)).unwrap();
        assert_eq!(t, m);
    }

    fn arb_matrix() -> impl Strategy<Value = LinMatrix> {
        (2usize..6, 1usize..5).prop_flat_map(|(n, vars)| {
            prop::collection::vec(-3i64..=3, 2 * n * vars).prop_map(move |cs| {
                let f = Field::prime(101).unwrap();
                let r = Ring::indexed("x", vars, f, MonomialOrder::DegRevLex);
                let e = |k: usize| {
                    let coeffs: Vec<FieldElem> =
                        cs[k * vars..(k + 1) * vars].iter().map(|&v| f.from_i64(v)).collect();
                    LinearForm::from_coefficients(&r, &coeffs)
                };
                let top = (0..n).map(e).collect();
                let bottom = (n..2 * n).map(e).collect();
                LinMatrix::new(&r, top, bottom, Labeling::ZeroBased).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn minors_are_antisymmetric(m in arb_matrix()) {
            let n = m.ncols();
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(m.minor2(i, j).unwrap(), -&m.minor2(j, i).unwrap());
                }
            }
        }

        #[test]
        fn coefficient_matrices_round_trip(m in arb_matrix()) {
            let e = m.coefficient_matrix(0);
            let f = m.coefficient_matrix(1);
            let back = LinMatrix::from_coefficients(m.ring(), &e, &f, m.labeling()).unwrap();
            prop_assert_eq!(back, m);
        }
    }
}
