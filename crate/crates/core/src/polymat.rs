//! Polynomial matrices over the field: sliding block-Toeplitz constructors,
//! minimal-degree kernels, rank over the rational function field, and
//! left-primeness.

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::matrix::{combinations, Matrix, Support};
use crate::poly::{self, Poly};

/// Matrix with polynomial entries, stored as constant coefficient matrices
/// M_0..M_d (coefficient of z^t is M_t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub coeffs: Vec<Matrix>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows, cols, coeffs: vec![Matrix::zero(rows, cols)] }
    }

    /// Build from coefficient matrices, trimming zero top coefficients.
    pub fn from_coeffs(coeffs: Vec<Matrix>) -> Result<PolyMatrix> {
        if coeffs.is_empty() {
            return Err(Error::DimensionMismatch("no coefficient matrices".into()));
        }
        let rows = coeffs[0].rows;
        let cols = coeffs[0].cols;
        if coeffs.iter().any(|m| m.rows != rows || m.cols != cols) {
            return Err(Error::DimensionMismatch("coefficient shapes differ".into()));
        }
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        Ok(PolyMatrix { rows, cols, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^t; matrices beyond the stored degree are zero.
    pub fn coeff(&self, t: usize) -> Matrix {
        if t < self.coeffs.len() {
            self.coeffs[t].clone()
        } else {
            Matrix::zero(self.rows, self.cols)
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> Poly {
        let mut p: Poly = self.coeffs.iter().map(|m| m.get(r, c)).collect();
        poly::trim(&mut p);
        p
    }

    pub fn from_entries(entries: Vec<Vec<Poly>>, f: &FieldSpec) -> Result<PolyMatrix> {
        let _ = f;
        let rows = entries.len();
        let cols = entries.first().map(|r| r.len()).unwrap_or(0);
        let d = entries
            .iter()
            .flat_map(|r| r.iter().map(poly::degree))
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Matrix::zero(rows, cols); d + 1];
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch("ragged entries".into()));
            }
            for (j, p) in row.iter().enumerate() {
                for (t, &c) in p.iter().enumerate() {
                    if t < coeffs.len() {
                        coeffs[t].set(i, j, c);
                    } else {
                        debug_assert_eq!(c, 0);
                    }
                }
            }
        }
        PolyMatrix::from_coeffs(coeffs)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            coeffs: self.coeffs.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|m| m.is_zero())
    }

    /// Product of two polynomial matrices.
    pub fn mul(&self, rhs: &PolyMatrix, f: &FieldSpec) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch("polymat product shapes".into()));
        }
        let d = self.degree() + rhs.degree();
        let mut coeffs = vec![Matrix::zero(self.rows, rhs.cols); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.mul(b, f)?;
                let tgt = &mut coeffs[i + j];
                for k in 0..prod.data.len() {
                    tgt.data[k] = f.add(tgt.data[k], prod.data[k]);
                }
            }
        }
        PolyMatrix::from_coeffs(coeffs)
    }

    /// Horizontal concatenation [self | rhs].
    pub fn hconcat(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hconcat row counts".into()));
        }
        let d = self.degree().max(rhs.degree());
        let mut coeffs = Vec::with_capacity(d + 1);
        for t in 0..=d {
            let a = self.coeff(t);
            let b = rhs.coeff(t);
            let mut m = Matrix::zero(self.rows, self.cols + rhs.cols);
            for r in 0..self.rows {
                for c in 0..self.cols {
                    m.set(r, c, a.get(r, c));
                }
                for c in 0..rhs.cols {
                    m.set(r, self.cols + c, b.get(r, c));
                }
            }
            coeffs.push(m);
        }
        PolyMatrix::from_coeffs(coeffs)
    }

    /// Determinant as a polynomial (cofactor expansion; small matrices only).
    pub fn det_poly(&self, f: &FieldSpec) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("det of non-square polymat".into()));
        }
        let n = self.rows;
        let entries: Vec<Vec<Poly>> = (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c)).collect())
            .collect();
        Ok(det_rec(&entries, &(0..n).collect::<Vec<_>>(), 0, f))
    }

    /// Rank over F(z): the largest s with some nonzero s x s minor.
    pub fn rank_poly(&self, f: &FieldSpec) -> usize {
        let max = self.rows.min(self.cols);
        for s in (1..=max).rev() {
            for rs in combinations(self.rows, s) {
                for cs in combinations(self.cols, s) {
                    let sub = self.select(&rs, &cs);
                    if !poly::is_zero(&sub.det_poly(f).expect("square")) {
                        return s;
                    }
                }
            }
        }
        0
    }

    fn select(&self, row_sel: &[usize], col_sel: &[usize]) -> PolyMatrix {
        let coeffs = self.coeffs.iter().map(|m| m.submatrix(row_sel, col_sel)).collect();
        PolyMatrix::from_coeffs(coeffs).expect("shapes agree")
    }
}

fn det_rec(entries: &[Vec<Poly>], cols: &[usize], row: usize, f: &FieldSpec) -> Poly {
    if cols.is_empty() {
        return vec![1];
    }
    let mut acc: Poly = vec![0];
    for (k, &c) in cols.iter().enumerate() {
        let e = &entries[row][c];
        if poly::is_zero(e) {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(entries, &rest, row + 1, f);
        let term = poly::mul(e, &minor, f);
        // sign: (-1)^k; in characteristic 2 this is the identity
        let term = if k % 2 == 1 {
            poly::scale(&term, f.neg(1), f)
        } else {
            term
        };
        acc = poly::add(&acc, &term, f);
    }
    acc
}

/// Which sliding block matrix to assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlidingKind {
    /// Full window matrix with all parity coefficients,
    /// shape (j+1)(n-k) x (nu+j+1)n; block (r,c) = H_{nu-(c-r)}.
    FullParity,
    /// Last (j+1)n columns of the full window, lower block triangular;
    /// block (r,c) = H_{r-c}.
    TruncatedParity,
    /// Lower block-triangular generator window, shape (j+1)n x (j+1)k;
    /// block (r,c) = G_{r-c}.
    TruncatedGenerator,
    /// Partial parity-check matrix: the full window at j = L.
    PartialParity,
}

/// Assemble a sliding block-Toeplitz matrix from polynomial coefficients.
/// Coefficients beyond the stored degree are zero blocks.
pub fn sliding(kind: SlidingKind, coeffs: &PolyMatrix, j: usize) -> Matrix {
    let nu = coeffs.degree();
    let (br, bc) = (coeffs.rows, coeffs.cols);
    match kind {
        SlidingKind::FullParity | SlidingKind::PartialParity => {
            let rows = (j + 1) * br;
            let cols = (nu + j + 1) * bc;
            let mut m = Matrix::zero(rows, cols);
            for r in 0..=j {
                for c in 0..=nu + j {
                    if c >= r && c - r <= nu {
                        let blk = coeffs.coeff(nu - (c - r));
                        blit(&mut m, &blk, r * br, c * bc);
                    }
                }
            }
            m
        }
        SlidingKind::TruncatedParity => {
            let rows = (j + 1) * br;
            let cols = (j + 1) * bc;
            let mut m = Matrix::zero(rows, cols);
            for r in 0..=j {
                for c in 0..=r {
                    if r - c <= nu {
                        let blk = coeffs.coeff(r - c);
                        blit(&mut m, &blk, r * br, c * bc);
                    }
                }
            }
            m
        }
        SlidingKind::TruncatedGenerator => {
            let rows = (j + 1) * br;
            let cols = (j + 1) * bc;
            let mut m = Matrix::zero(rows, cols);
            for r in 0..=j {
                for c in 0..=r {
                    if r - c <= nu {
                        let blk = coeffs.coeff(r - c);
                        blit(&mut m, &blk, r * br, c * bc);
                    }
                }
            }
            m
        }
    }
}

/// Structural support of a sliding matrix: in-band blocks are all-true,
/// out-of-band blocks all-false. This is the support used for the
/// "trivially zero" decision (entries inside present blocks are free).
pub fn sliding_support(kind: SlidingKind, coeffs: &PolyMatrix, j: usize) -> Support {
    let nu = coeffs.degree();
    let (br, bc) = (coeffs.rows, coeffs.cols);
    match kind {
        SlidingKind::FullParity | SlidingKind::PartialParity => {
            let mut s = Support::new((j + 1) * br, (nu + j + 1) * bc);
            for r in 0..=j {
                for c in 0..=nu + j {
                    if c >= r && c - r <= nu {
                        fill(&mut s, r * br, c * bc, br, bc);
                    }
                }
            }
            s
        }
        SlidingKind::TruncatedParity | SlidingKind::TruncatedGenerator => {
            let mut s = Support::new((j + 1) * br, (j + 1) * bc);
            for r in 0..=j {
                for c in 0..=r {
                    if r - c <= nu {
                        fill(&mut s, r * br, c * bc, br, bc);
                    }
                }
            }
            s
        }
    }
}

fn blit(dst: &mut Matrix, src: &Matrix, r0: usize, c0: usize) {
    for r in 0..src.rows {
        for c in 0..src.cols {
            dst.set(r0 + r, c0 + c, src.get(r, c));
        }
    }
}

fn fill(dst: &mut Support, r0: usize, c0: usize, rows: usize, cols: usize) {
    for r in 0..rows {
        for c in 0..cols {
            dst.set(r0 + r, c0 + c, true);
        }
    }
}

/// Minimal-degree full-row-rank left annihilator H with H G = 0.
///
/// Searches degree by degree: the kernel vectors of the stacked constant
/// system at degree nu are exactly the annihilator rows of degree <= nu, and
/// greedy selection by effective degree yields a minimal basis. Returns an
/// empty 0 x n matrix when n = k.
pub fn left_kernel_min_degree(g: &PolyMatrix, degree_cap: usize, f: &FieldSpec) -> Result<PolyMatrix> {
    let n = g.rows;
    let k = g.cols;
    if g.rank_poly(f) < k {
        return Err(Error::RankDeficientGenerator);
    }
    let want = n - k;
    if want == 0 {
        return Ok(PolyMatrix { rows: 0, cols: n, coeffs: vec![Matrix::zero(0, n)] });
    }
    let mu = g.degree();
    for nu in 0..=degree_cap {
        // S: (nu+1)n x (nu+mu+1)k, block (i,t) = G_{t-i}
        let rows = (nu + 1) * n;
        let cols = (nu + mu + 1) * k;
        let mut s = Matrix::zero(rows, cols);
        for i in 0..=nu {
            for t in 0..=nu + mu {
                if t >= i && t - i <= mu {
                    blit(&mut s, &g.coeff(t - i), i * n, t * k);
                }
            }
        }
        // left kernel of S = right kernel of S^T
        let mut cand = s.transpose().kernel(f);
        // effective degree: index of the last nonzero length-n block
        let eff = |v: &Vec<Elem>| -> usize {
            let mut d = 0;
            for (idx, &x) in v.iter().enumerate() {
                if x != 0 {
                    d = idx / n;
                }
            }
            d
        };
        cand.sort_by_key(&eff);
        let mut rows_sel: Vec<Vec<Elem>> = Vec::new();
        for v in cand {
            if rows_sel.len() == want {
                break;
            }
            let mut trial = rows_sel.clone();
            trial.push(v.clone());
            let h = rows_to_polymat(&trial, n, nu);
            if h.rank_poly(f) == trial.len() {
                rows_sel = trial;
            }
        }
        if rows_sel.len() == want {
            let h = rows_to_polymat(&rows_sel, n, nu);
            debug_assert!(h.mul(g, f)?.is_zero());
            return Ok(h);
        }
    }
    Err(Error::NoAnnihilator(degree_cap))
}

/// Minimal-degree full-column-rank right kernel: G with H G = 0.
pub fn right_kernel_min_degree(h: &PolyMatrix, degree_cap: usize, f: &FieldSpec) -> Result<PolyMatrix> {
    let ht = h.transpose();
    let gt = left_kernel_min_degree(&ht, degree_cap, f)?;
    Ok(gt.transpose())
}

fn rows_to_polymat(rows: &[Vec<Elem>], n: usize, nu: usize) -> PolyMatrix {
    let mut coeffs = vec![Matrix::zero(rows.len(), n); nu + 1];
    for (r, v) in rows.iter().enumerate() {
        for (idx, &x) in v.iter().enumerate() {
            let t = idx / n;
            let c = idx % n;
            coeffs[t].set(r, c, x);
        }
    }
    PolyMatrix::from_coeffs(coeffs).expect("consistent shapes")
}

/// True iff the gcd of all full-size minors of H is a nonzero constant.
pub fn is_left_prime(h: &PolyMatrix, f: &FieldSpec) -> bool {
    if h.rows == 0 {
        return true;
    }
    let rows: Vec<usize> = (0..h.rows).collect();
    let mut g: Poly = vec![0];
    for cs in combinations(h.cols, h.rows) {
        let sub = h.select(&rows, &cs);
        let d = sub.det_poly(f).expect("square");
        g = poly::gcd(&g, &d, f);
        if poly::degree(&g) == 0 && !poly::is_zero(&g) {
            return true;
        }
    }
    poly::degree(&g) == 0 && !poly::is_zero(&g)
}

/// True iff the gcd of all full-size minors of G (tall) is a nonzero
/// constant, i.e. G is right prime and the code it generates is
/// noncatastrophic.
pub fn is_right_prime(g: &PolyMatrix, f: &FieldSpec) -> bool {
    is_left_prime(&g.transpose(), f)
}
