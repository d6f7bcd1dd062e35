//! Dense exact matrices over a [`Field`]. Rank and determinant over the
//! rationals go through fraction-free (Bareiss) elimination on integer rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, FieldElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add_scaled(&self, other: &Matrix, c: &FieldElem) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + &(b * c))
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Integer rows proportional to the rational rows.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, v| {
                    acc.lcm(v.as_rational().expect("rational entry").denom())
                });
                row.iter()
                    .map(|v| {
                        let q = v.as_rational().unwrap();
                        q.numer() * (&l / q.denom())
                    })
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => bareiss(self.integer_rows(), self.cols).0,
            Field::Prime(_) => self.rref().1.len(),
        }
    }

    pub fn det(&self) -> FieldElem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        match self.field {
            Field::Rational => {
                let mut scale = BigInt::one();
                for i in 0..self.rows {
                    let l = self.row(i).iter().fold(BigInt::one(), |acc, v| {
                        acc.lcm(v.as_rational().unwrap().denom())
                    });
                    scale *= l;
                }
                let (rank, d) = bareiss(self.integer_rows(), self.cols);
                if rank < self.rows {
                    return self.field.zero();
                }
                FieldElem::Rational(BigRational::new(d, scale))
            }
            Field::Prime(_) => {
                let mut m = self.clone();
                let mut det = self.field.one();
                for c in 0..self.cols {
                    let Some(p) = (c..self.rows).find(|&r| !m.get(r, c).is_zero()) else {
                        return self.field.zero();
                    };
                    if p != c {
                        m.swap_rows(p, c);
                        det = -det;
                    }
                    let piv = m.get(c, c).clone();
                    det = &det * &piv;
                    let inv = piv.inv().unwrap();
                    for r in c + 1..self.rows {
                        let f = m.get(r, c) * &inv;
                        if !f.is_zero() {
                            m.row_axpy(r, c, &f);
                        }
                    }
                }
                det
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] -= f * row[src]`
    fn row_axpy(&mut self, dst: usize, src: usize, f: &FieldElem) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, j) - &(s * f);
            self.set(dst, j, v);
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().unwrap();
            for j in 0..self.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r {
                    let f = m.get(i, c).clone();
                    if !f.is_zero() {
                        m.row_axpy(i, r, &f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{ v : self * v = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<FieldElem>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }
}

/// Fraction-free elimination. Returns the rank and, for full-rank square
/// input, the determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    let det = if r == rows && rows == cols && rows > 0 {
        prev * sign
    } else if rows == 0 && cols == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    (r, det)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det_over_rationals() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.det(), q.from_i64(-3));
        let s = Matrix::from_i64(q, &[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(s.rank(), 2);
        assert!(s.det().is_zero());
        let half = q.from_rational(&"1/2".parse().unwrap()).unwrap();
        let mut h = Matrix::identity(q, 2);
        h.set(0, 0, half.clone());
        assert_eq!(h.det(), half);
    }

    #[test]
    fn bareiss_matches_elimination_mod_p() {
        let p = Field::prime(101).unwrap();
        let m = Matrix::from_i64(p, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(m.det(), p.from_i64(-3));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn inverse_and_nullspace() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q, 2));
        let s = Matrix::from_i64(q, &[&[1, 2, 3], &[2, 4, 6]]);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(s.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        assert!(Matrix::from_i64(q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
