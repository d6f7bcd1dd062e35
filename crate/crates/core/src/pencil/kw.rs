//! Kronecker-Weierstrass decomposition of a 2 x n matrix of linear forms.
//!
//! The matrix is read as a pencil of two `nvars x ncols` coefficient
//! matrices `(E, F)`, one per row. Singular blocks are counted from kernel
//! dimensions of block Toeplitz matrices, eigenvalues come from the
//! determinantal divisor of random compressions, Jordan sizes from ranks of
//! block bidiagonal matrices. The transformation is then recovered by
//! solving the linear system `E P = R E_X`, `F P = R F_X`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polycore::linalg::Matrix;
use crate::polycore::univariate::{RootSearchError, UniPoly};
use crate::polycore::{Field, FieldElem, LinearForm, LinearSubstitution, MonomialOrder, RingRef};

use super::block::{block_ring, concat_in, name_blocks, parse_block_kinds, Block, BlockKind};
use super::matrix::LinMatrix;
use super::PencilError;

const SEED: u64 = 0x6b77_2d64_6563;
const CERTIFICATE_ATTEMPTS: usize = 64;
const COMPRESSION_ATTEMPTS: usize = 8;

/// `C * M(V z) * C'` equals the canonical matrix, where `V` sends each
/// original variable to a linear form in the canonical ring.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub original_ring: RingRef,
    /// 2 x 2 row mix.
    pub c: Matrix,
    /// ncols x ncols column operation.
    pub c_prime: Matrix,
    /// Row `v` holds the coefficients (over canonical variables) of the
    /// image of original variable `v`.
    pub v: Matrix,
}

impl Certificate {
    pub fn identity(ring: &RingRef, ncols: usize) -> Self {
        let f = ring.field();
        Certificate {
            original_ring: ring.clone(),
            c: Matrix::identity(f, 2),
            c_prime: Matrix::identity(f, ncols),
            v: Matrix::identity(f, ring.nvars()),
        }
    }

    /// Original variables as linear forms in the canonical ring.
    pub fn forward(&self, canonical: &RingRef) -> Result<LinearSubstitution, PencilError> {
        if self.v.rows() != self.original_ring.nvars() || self.v.cols() != canonical.nvars() {
            return Err(PencilError::DimensionMismatch);
        }
        let images = (0..self.v.rows())
            .map(|i| LinearForm::from_coefficients(canonical, self.v.row(i)))
            .collect();
        Ok(LinearSubstitution::total(canonical, images)?)
    }

    /// Canonical variables as linear forms in the original ring.
    pub fn backward(&self) -> Result<LinearSubstitution, PencilError> {
        let inv = self.v.inverse().ok_or(PencilError::SingularCertificate)?;
        let ring = &self.original_ring;
        let images = (0..inv.rows())
            .map(|u| LinearForm::from_coefficients(ring, &inv.column(u)))
            .collect();
        Ok(LinearSubstitution::total(ring, images)?)
    }
}

/// Canonical blocks, the assembled matrix, and the transformation back to
/// the input.
#[derive(Clone, Debug)]
pub struct KWForm {
    blocks: Vec<Block>,
    free_vars: Vec<String>,
    matrix: LinMatrix,
    certificate: Certificate,
}

impl KWForm {
    /// A form given directly by its blocks, with identity certificate.
    pub fn from_kinds(kinds: &[BlockKind], field: Field, order: MonomialOrder) -> Result<Self, PencilError> {
        let kinds = kinds
            .iter()
            .map(|k| k.in_field(field))
            .collect::<Result<Vec<_>, _>>()?;
        let blocks = name_blocks(&kinds);
        let ring = block_ring(&blocks, &[], field, order)?;
        let matrix = concat_in(&blocks, &ring)?;
        let certificate = Certificate::identity(&ring, matrix.ncols());
        Ok(KWForm {
            blocks,
            free_vars: Vec::new(),
            matrix,
            certificate,
        })
    }

    /// Parses the block-spec grammar, e.g. `J(1,2) B(2) N(1)`.
    pub fn parse(spec: &str, field: Field, order: MonomialOrder) -> Result<Self, PencilError> {
        Self::from_kinds(&parse_block_kinds(spec, field)?, field, order)
    }

    /// Assembles a form from explicit parts; the certificate is not checked.
    pub fn from_parts(
        blocks: Vec<Block>,
        free_vars: Vec<String>,
        ring: &RingRef,
        certificate: Certificate,
    ) -> Result<Self, PencilError> {
        let matrix = concat_in(&blocks, ring)?;
        Ok(KWForm {
            blocks,
            free_vars,
            matrix,
            certificate,
        })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn kinds(&self) -> Vec<BlockKind> {
        self.blocks.iter().map(|b| b.kind.clone()).collect()
    }

    /// Variables of the canonical ring that occur in no block.
    pub fn free_vars(&self) -> &[String] {
        &self.free_vars
    }

    pub fn matrix(&self) -> &LinMatrix {
        &self.matrix
    }

    pub fn ring(&self) -> &RingRef {
        self.matrix.ring()
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn with_certificate(mut self, certificate: Certificate) -> Self {
        self.certificate = certificate;
        self
    }

    /// Column positions (0-based) covered by each block.
    pub fn block_columns(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|b| {
                let r = start..start + b.kind.ncols();
                start = r.end;
                r
            })
            .collect()
    }
}

impl std::fmt::Display for KWForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.kind.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// One eigenvalue class of Jordan blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanClass {
    pub eigenvalue: FieldElem,
    pub lengths: Vec<usize>,
}

/// Numeric invariants read off a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KWInvariants {
    /// Variable counts of the nilpotent blocks.
    pub nilpotent: Vec<usize>,
    pub scroll: Vec<usize>,
    /// Classes in order of first occurrence.
    pub jordan: Vec<JordanClass>,
    pub ncols: usize,
}

impl KWInvariants {
    pub fn c(&self) -> usize {
        self.nilpotent.len()
    }

    pub fn g(&self) -> usize {
        self.scroll.len()
    }

    pub fn d(&self) -> usize {
        self.jordan.len()
    }

    pub fn alphas(&self) -> Vec<usize> {
        self.jordan.iter().map(|c| c.lengths.len()).collect()
    }

    pub fn alpha(&self) -> usize {
        self.alphas().iter().sum()
    }

    pub fn gamma(&self) -> usize {
        self.alphas().into_iter().max().unwrap_or(0)
    }

    /// Number of Jordan variables.
    pub fn jordan_vars(&self) -> usize {
        self.jordan.iter().flat_map(|c| &c.lengths).sum()
    }

    pub fn nilpotent_vars(&self) -> usize {
        self.nilpotent.iter().sum()
    }

    pub fn scroll_len(&self) -> usize {
        self.scroll.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.nilpotent.is_empty() && self.scroll.is_empty() && self.jordan.is_empty()
    }

    /// Per-class length partitions, sorted, for comparing forms whose
    /// eigenvalues differ.
    pub fn jordan_partitions(&self) -> Vec<Vec<usize>> {
        let mut parts: Vec<Vec<usize>> = self
            .jordan
            .iter()
            .map(|c| {
                let mut l = c.lengths.clone();
                l.sort_unstable_by(|a, b| b.cmp(a));
                l
            })
            .collect();
        parts.sort();
        parts
    }
}

pub fn kw_invariants(form: &KWForm) -> KWInvariants {
    invariants_of_kinds(&form.kinds())
}

pub fn invariants_of_kinds(kinds: &[BlockKind]) -> KWInvariants {
    let mut inv = KWInvariants {
        nilpotent: Vec::new(),
        scroll: Vec::new(),
        jordan: Vec::new(),
        ncols: kinds.iter().map(BlockKind::ncols).sum(),
    };
    for k in kinds {
        match k {
            BlockKind::Nilpotent(n) => inv.nilpotent.push(*n),
            BlockKind::Scroll(l) => inv.scroll.push(*l),
            BlockKind::Jordan(lambda, m) => match inv.jordan.iter_mut().find(|c| &c.eigenvalue == lambda) {
                Some(class) => class.lengths.push(*m),
                None => inv.jordan.push(JordanClass {
                    eigenvalue: lambda.clone(),
                    lengths: vec![*m],
                }),
            },
        }
    }
    inv
}

/// True iff `C * original(V z) * C'` equals the canonical matrix entry by
/// entry and all three transformations are invertible.
pub fn verify_certificate(form: &KWForm, original: &LinMatrix) -> bool {
    let cert = &form.certificate;
    let canon = form.ring();
    let orig_ring = original.ring();
    if orig_ring.names() != cert.original_ring.names() || orig_ring.field() != canon.field() {
        return false;
    }
    if original.ncols() != form.matrix.ncols() || cert.v.rows() != cert.v.cols() {
        return false;
    }
    if !(cert.c.is_invertible() && cert.c_prime.is_invertible() && cert.v.is_invertible()) {
        return false;
    }
    let Ok(map) = cert.forward(canon) else {
        return false;
    };
    let Ok(sub) = original.substitute(&map) else {
        return false;
    };
    let Ok(x) = sub.transform(&cert.c, &cert.c_prime) else {
        return false;
    };
    (0..2).all(|r| x.row(r) == form.matrix.row(r))
}

struct Pencil {
    field: Field,
    e: Matrix,
    f: Matrix,
}

impl Pencil {
    fn m(&self) -> usize {
        self.e.rows()
    }

    fn n(&self) -> usize {
        self.e.cols()
    }

    /// `F - t E`
    fn at(&self, t: &FieldElem) -> Matrix {
        self.f.add_scaled(&self.e, &-t)
    }

    fn point(&self, k: usize) -> FieldElem {
        self.field.from_i64(k as i64)
    }

    fn normal_rank(&self) -> usize {
        let tries = self.m().min(self.n()) + 1;
        (0..tries).map(|k| self.at(&self.point(k)).rank()).max().unwrap_or(0)
    }

    fn transpose(&self) -> Pencil {
        Pencil {
            field: self.field,
            e: self.e.transpose(),
            f: self.f.transpose(),
        }
    }

    /// Minimal indices of the right null space of `E + s F`, counted from the
    /// kernels of block Toeplitz matrices.
    fn minimal_indices(&self, total: usize) -> Vec<usize> {
        let (m, n) = (self.m(), self.n());
        let mut out = Vec::new();
        let (mut d1, mut d2) = (0i64, 0i64);
        let mut k = 0;
        while out.len() < total {
            let mut t = Matrix::zeros(self.field, (k + 2) * m, (k + 1) * n);
            for j in 0..=k {
                place(&mut t, &self.e, j * m, j * n);
                place(&mut t, &self.f, (j + 1) * m, j * n);
            }
            let dk = ((k + 1) * n - t.rank()) as i64;
            let count = dk - 2 * d1 + d2;
            for _ in 0..count.max(0) {
                out.push(k);
            }
            d2 = d1;
            d1 = dk;
            k += 1;
            assert!(k <= m + n + 1, "minimal index search did not terminate");
        }
        out
    }

    /// Kernel dimension of the k x k block bidiagonal matrix with `F - t E`
    /// on the diagonal and `E` below it.
    fn chain_nullity(&self, t: &FieldElem, k: usize) -> usize {
        let (m, n) = (self.m(), self.n());
        let g = self.at(t);
        let mut big = Matrix::zeros(self.field, k * m, k * n);
        for j in 0..k {
            place(&mut big, &g, j * m, j * n);
            if j + 1 < k {
                place(&mut big, &self.e, (j + 1) * m, j * n);
            }
        }
        k * n - big.rank()
    }

    /// Sizes of Jordan blocks at eigenvalue `t`, given a regular point `mu`.
    fn jordan_sizes(&self, t: &FieldElem, mu: &FieldElem) -> Vec<usize> {
        let delta = |k: usize| -> usize {
            if k == 0 {
                0
            } else {
                self.chain_nullity(t, k) - self.chain_nullity(mu, k)
            }
        };
        let mut at_least = vec![usize::MAX];
        let mut prev = 0;
        let mut k = 1;
        loop {
            let dk = delta(k);
            let c = dk - prev;
            if c == 0 {
                break;
            }
            at_least.push(c);
            prev = dk;
            k += 1;
        }
        let mut sizes = Vec::new();
        for k in 1..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..at_least[k] - next {
                sizes.push(k);
            }
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    fn random_matrix(&self, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, random_elem(self.field, rng));
            }
        }
        out
    }

    /// Determinantal divisor of degree `rho`: gcd of the determinants of
    /// random `rho x rho` compressions.
    fn divisor(&self, rho: usize, expected: usize, rng: &mut ChaCha8Rng) -> UniPoly {
        let xs: Vec<FieldElem> = (0..=rho).map(|k| self.point(k)).collect();
        let mut g = UniPoly::zero(self.field);
        for _ in 0..COMPRESSION_ATTEMPTS {
            let y = self.random_matrix(rng, rho, self.m());
            let z = self.random_matrix(rng, self.n(), rho);
            let ys: Vec<FieldElem> = xs.iter().map(|x| y.mul(&self.at(x)).mul(&z).det()).collect();
            let h = UniPoly::interpolate(self.field, &xs, &ys);
            if h.is_zero() {
                continue;
            }
            g = g.gcd(&h);
            if g.degree() == Some(expected) {
                break;
            }
        }
        g
    }
}

fn random_elem(field: Field, rng: &mut ChaCha8Rng) -> FieldElem {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-40..=40)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

fn place(target: &mut Matrix, block: &Matrix, r0: usize, c0: usize) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if !v.is_zero() {
                target.set(r0 + i, c0 + j, v.clone());
            }
        }
    }
}

/// Computes a Kronecker-Weierstrass form of `m` with a certificate.
///
/// Jordan eigenvalues are those of the pencil after a row mix that removes
/// infinite eigenvalues; they must lie in the base field.
pub fn kw_decompose(m: &LinMatrix) -> Result<KWForm, PencilError> {
    let ring = m.ring();
    let field = ring.field();
    let raw = Pencil {
        field,
        e: m.coefficient_matrix(0),
        f: m.coefficient_matrix(1),
    };
    let (nv, nc) = (raw.m(), raw.n());
    let rho = raw.normal_rank();

    // Mix the rows until the first one has full normal rank.
    let mix = (0..=nv.min(nc) + 1)
        .map(|k| raw.point(k))
        .find(|c| raw.e.add_scaled(&raw.f, c).rank() == rho)
        .ok_or(PencilError::FieldTooSmall)?;
    let p = Pencil {
        field,
        e: raw.e.add_scaled(&raw.f, &mix),
        f: raw.f.clone(),
    };

    let eps = p.minimal_indices(nc - rho);
    let eta = p.transpose().minimal_indices(nv - rho);
    let singular_cols: usize = eps.iter().map(|e| e + 1).sum::<usize>() + eta.iter().sum::<usize>();
    let regular = nc - singular_cols;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut classes: Vec<(FieldElem, Vec<usize>)> = Vec::new();
    if regular > 0 {
        let divisor = p.divisor(rho, regular, &mut rng);
        let candidates = divisor.roots().map_err(|e| match e {
            RootSearchError::FieldTooLarge(q) => PencilError::RootSearch(format!(
                "exhaustive eigenvalue search is limited to primes below 2^24, got {q}"
            )),
            RootSearchError::CoefficientTooLarge => {
                PencilError::RootSearch("eigenvalue polynomial coefficients too large to factor".into())
            }
        })?;
        let eigen: Vec<FieldElem> = candidates.into_iter().filter(|t| p.at(t).rank() < rho).collect();
        let mu = (0..)
            .map(|k| p.point(k))
            .take(nv.min(nc) + 2 + eigen.len())
            .find(|t| !eigen.contains(t) && p.at(t).rank() == rho)
            .ok_or(PencilError::FieldTooSmall)?;
        let mut residual = divisor.clone();
        for t in eigen {
            let sizes = p.jordan_sizes(&t, &mu);
            for _ in 0..sizes.iter().sum::<usize>() {
                let (q, r) = residual.div_rem(&UniPoly::linear(&t));
                if r.is_zero() {
                    residual = q;
                }
            }
            classes.push((t, sizes));
        }
        let found: usize = classes.iter().flat_map(|c| &c.1).sum();
        if found < regular {
            return Err(PencilError::EigenvaluesNotInField {
                factor: residual.monic().to_string(),
            });
        }
    }

    let mut kinds = Vec::new();
    let mut eps_sorted = eps.clone();
    eps_sorted.sort_unstable_by(|a, b| b.cmp(a));
    kinds.extend(eps_sorted.into_iter().map(BlockKind::Nilpotent));
    for (t, sizes) in &classes {
        kinds.extend(sizes.iter().map(|&s| BlockKind::Jordan(t.clone(), s)));
    }
    let mut scrolls: Vec<usize> = eta.iter().copied().filter(|&e| e > 0).collect();
    scrolls.sort_unstable_by(|a, b| b.cmp(a));
    kinds.extend(scrolls.into_iter().map(BlockKind::Scroll));
    let free: Vec<String> = (1..=eta.iter().filter(|&&e| e == 0).count())
        .map(|k| format!("w{k}"))
        .collect();

    let blocks = name_blocks(&kinds);
    let canon_ring = block_ring(&blocks, &free, field, ring.order())?;
    let canonical = concat_in(&blocks, &canon_ring)?;
    debug_assert_eq!(canon_ring.nvars(), nv);

    let (c_prime, r) = solve_transformation(&p, &canonical, &mut rng)?;
    let v = r.inverse().ok_or(PencilError::SingularCertificate)?.transpose();
    let mut c = Matrix::identity(field, 2);
    c.set(0, 1, mix);
    let form = KWForm {
        blocks,
        free_vars: free,
        matrix: canonical,
        certificate: Certificate {
            original_ring: ring.clone(),
            c,
            c_prime,
            v,
        },
    };
    debug_assert!(verify_certificate(&form, m));
    Ok(form)
}

/// Finds invertible `P` (ncols x ncols) and `R` (nvars x nvars) with
/// `E P = R E_X` and `F P = R F_X`.
fn solve_transformation(
    p: &Pencil,
    canonical: &LinMatrix,
    rng: &mut ChaCha8Rng,
) -> Result<(Matrix, Matrix), PencilError> {
    let field = p.field;
    let (m, n) = (p.m(), p.n());
    let ex = canonical.coefficient_matrix(0);
    let fx = canonical.coefficient_matrix(1);
    let unknowns = n * n + m * m;
    let p_idx = |k: usize, c: usize| k * n + c;
    let r_idx = |v: usize, u: usize| n * n + v * m + u;
    let mut sys = Matrix::zeros(field, 2 * m * n, unknowns);
    for (s, (lhs, rhs)) in [(&p.e, &ex), (&p.f, &fx)].into_iter().enumerate() {
        for v in 0..m {
            for c in 0..n {
                let row = s * m * n + v * n + c;
                for k in 0..n {
                    let a = lhs.get(v, k);
                    if !a.is_zero() {
                        sys.set(row, p_idx(k, c), a.clone());
                    }
                }
                for u in 0..m {
                    let b = rhs.get(u, c);
                    if !b.is_zero() {
                        sys.set(row, r_idx(v, u), -b);
                    }
                }
            }
        }
    }
    let basis = sys.nullspace();
    if basis.is_empty() {
        return Err(PencilError::SingularCertificate);
    }
    for _ in 0..CERTIFICATE_ATTEMPTS {
        let mut sol = vec![field.zero(); unknowns];
        for b in &basis {
            let w = random_elem(field, rng);
            for (s, x) in sol.iter_mut().zip(b) {
                if !x.is_zero() {
                    *s = &*s + &(&w * x);
                }
            }
        }
        let mut pm = Matrix::zeros(field, n, n);
        for k in 0..n {
            for c in 0..n {
                pm.set(k, c, sol[p_idx(k, c)].clone());
            }
        }
        let mut rm = Matrix::zeros(field, m, m);
        for v in 0..m {
            for u in 0..m {
                rm.set(v, u, sol[r_idx(v, u)].clone());
            }
        }
        if pm.is_invertible() && rm.is_invertible() {
            return Ok((pm, rm));
        }
    }
    Err(PencilError::SingularCertificate)
}
