//! Constant matrices over the field: exact Gaussian elimination, kernels,
//! structural-zero (matching) tests, and superregularity.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};

/// Dense row-major matrix of field-element reps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elem>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix, f: &FieldSpec) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Elem], f: &FieldSpec) -> Result<Vec<Elem>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!("{}x{} * {}", self.rows, self.cols, v.len())));
        }
        let mut out = vec![0; self.rows];
        for i in 0..self.rows {
            let mut acc = 0;
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0 && v[k] != 0 {
                    acc = f.add(acc, f.mul(a, v[k]));
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn submatrix(&self, row_sel: &[usize], col_sel: &[usize]) -> Matrix {
        let mut m = Matrix::zero(row_sel.len(), col_sel.len());
        for (i, &r) in row_sel.iter().enumerate() {
            for (j, &c) in col_sel.iter().enumerate() {
                m.set(i, j, self.get(r, c));
            }
        }
        m
    }

    /// Row echelon form in place; returns pivot column per pivot row.
    /// First-nonzero pivot, no pivoting strategy: arithmetic is exact.
    fn echelon(&mut self, f: &FieldSpec) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut piv = None;
            for r in row..self.rows {
                if self.get(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != row {
                for c in 0..self.cols {
                    let (a, b) = (self.get(row, c), self.get(piv, c));
                    self.set(row, c, b);
                    self.set(piv, c, a);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot nonzero");
            for c in col..self.cols {
                let v = self.get(row, c);
                self.set(row, c, f.mul(v, inv));
            }
            for r in 0..self.rows {
                if r != row {
                    let factor = self.get(r, col);
                    if factor != 0 {
                        for c in col..self.cols {
                            let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                            self.set(r, c, v);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FieldSpec) -> usize {
        let mut m = self.clone();
        m.echelon(f).len()
    }

    pub fn det(&self, f: &FieldSpec) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("det of non-square".into()));
        }
        // Gaussian elimination tracking row swaps and pivot products.
        let mut m = self.clone();
        let mut det: Elem = 1;
        for col in 0..m.cols {
            let mut piv = None;
            for r in col..m.rows {
                if m.get(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { return Ok(0) };
            if piv != col {
                for c in 0..m.cols {
                    let (a, b) = (m.get(col, c), m.get(piv, c));
                    m.set(col, c, b);
                    m.set(piv, c, a);
                }
                det = f.neg(det);
            }
            let pv = m.get(col, col);
            det = f.mul(det, pv);
            let inv = f.inv(pv)?;
            for r in col + 1..m.rows {
                let factor = f.mul(m.get(r, col), inv);
                if factor != 0 {
                    for c in col..m.cols {
                        let v = f.sub(m.get(r, c), f.mul(factor, m.get(col, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        Ok(det)
    }

    /// Basis of the right kernel.
    pub fn kernel(&self, f: &FieldSpec) -> Vec<Vec<Elem>> {
        let mut m = self.clone();
        let pivots = m.echelon(f);
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &pivots {
                s[c] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (prow, &pcol) in pivots.iter().enumerate() {
                // row: x_pcol + sum coeff * x_free = 0
                let coeff = m.get(prow, free);
                if coeff != 0 {
                    v[pcol] = f.neg(coeff);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Outcome of an exact linear solve A x = b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    Unique(Vec<Elem>),
    /// Underdetermined: one particular solution plus a kernel basis.
    Family { particular: Vec<Elem>, kernel: Vec<Vec<Elem>> },
    Inconsistent,
}

/// Exact Gaussian elimination over the field.
pub fn rank_solve(a: &Matrix, b: &[Elem], f: &FieldSpec) -> Result<Solve> {
    if a.rows != b.len() {
        return Err(Error::DimensionMismatch(format!("A {}x{}, b {}", a.rows, a.cols, b.len())));
    }
    // augment
    let mut aug = Matrix::zero(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug.set(r, c, a.get(r, c));
        }
        aug.set(r, a.cols, b[r]);
    }
    let pivots = aug.echelon(f);
    if pivots.last() == Some(&a.cols) {
        return Ok(Solve::Inconsistent);
    }
    let mut particular = vec![0; a.cols];
    for (prow, &pcol) in pivots.iter().enumerate() {
        particular[pcol] = aug.get(prow, a.cols);
    }
    if pivots.len() == a.cols {
        return Ok(Solve::Unique(particular));
    }
    let mut pivot_set = vec![false; a.cols];
    for &c in &pivots {
        pivot_set[c] = true;
    }
    let mut kernel = Vec::new();
    for free in 0..a.cols {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![0; a.cols];
        v[free] = 1;
        for (prow, &pcol) in pivots.iter().enumerate() {
            let coeff = aug.get(prow, free);
            if coeff != 0 {
                v[pcol] = f.neg(coeff);
            }
        }
        kernel.push(v);
    }
    Ok(Solve::Family { particular, kernel })
}

impl Solve {
    /// Coordinates whose value is constant across the solution family, with
    /// that value. Unique solutions determine every coordinate.
    pub fn determined(&self) -> Option<Vec<(usize, Elem)>> {
        match self {
            Solve::Unique(x) => Some(x.iter().copied().enumerate().collect()),
            Solve::Family { particular, kernel } => {
                let mut out = Vec::new();
                'coord: for i in 0..particular.len() {
                    for k in kernel {
                        if k[i] != 0 {
                            continue 'coord;
                        }
                    }
                    out.push((i, particular[i]));
                }
                Some(out)
            }
            Solve::Inconsistent => None,
        }
    }
}

/// Boolean support pattern for structural-zero reasoning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub rows: usize,
    pub cols: usize,
    pub mask: Vec<bool>,
}

impl Support {
    pub fn new(rows: usize, cols: usize) -> Support {
        Support { rows, cols, mask: vec![false; rows * cols] }
    }

    pub fn from_matrix(m: &Matrix) -> Support {
        Support { rows: m.rows, cols: m.cols, mask: m.data.iter().map(|&x| x != 0).collect() }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.mask[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.mask[r * self.cols + c] = v;
    }
}

/// True iff the selected square submatrix admits a perfect matching on its
/// support, i.e. some permutation term avoids every structural zero. Minors
/// failing this are trivially zero regardless of the free coefficients.
pub fn minor_not_trivially_zero(support: &Support, row_sel: &[usize], col_sel: &[usize]) -> bool {
    assert_eq!(row_sel.len(), col_sel.len(), "minor selection must be square");
    let n = row_sel.len();
    // Hopcroft-Karp is overkill at these sizes; augmenting paths suffice.
    let mut match_col: Vec<Option<usize>> = vec![None; n];
    fn augment(
        support: &Support,
        row_sel: &[usize],
        col_sel: &[usize],
        r: usize,
        seen: &mut [bool],
        match_col: &mut [Option<usize>],
    ) -> bool {
        for c in 0..col_sel.len() {
            if support.get(row_sel[r], col_sel[c]) && !seen[c] {
                seen[c] = true;
                if match_col[c].is_none()
                    || augment(support, row_sel, col_sel, match_col[c].unwrap(), seen, match_col)
                {
                    match_col[c] = Some(r);
                    return true;
                }
            }
        }
        false
    }
    for r in 0..n {
        let mut seen = vec![false; n];
        if !augment(support, row_sel, col_sel, r, &mut seen, &mut match_col) {
            return false;
        }
    }
    true
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k as isize - 1;
        while i >= 0 && idx[i as usize] == n - k + i as usize {
            i -= 1;
        }
        if i < 0 {
            return out;
        }
        let i = i as usize;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Iterate all square selections (every size) and check that each minor that
/// is not trivially zero is nonzero in the field.
pub fn is_superregular(b: &Matrix, f: &FieldSpec) -> bool {
    let support = Support::from_matrix(b);
    let max = b.rows.min(b.cols);
    for s in 1..=max {
        let row_choices = combinations(b.rows, s);
        let col_choices = combinations(b.cols, s);
        for rs in &row_choices {
            for cs in &col_choices {
                if minor_not_trivially_zero(&support, rs, cs) {
                    let sub = b.submatrix(rs, cs);
                    if sub.det(f).expect("square") == 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Check that every full-size minor of a wide matrix that is not trivially
/// zero (under the given structural support) is nonzero.
pub fn full_size_minors_nonzero(m: &Matrix, support: &Support, f: &FieldSpec) -> bool {
    debug_assert!(m.rows <= m.cols);
    let rows: Vec<usize> = (0..m.rows).collect();
    for cs in combinations(m.cols, m.rows) {
        if minor_not_trivially_zero(support, &rows, &cs) {
            let sub = m.submatrix(&rows, &cs);
            if sub.det(f).expect("square") == 0 {
                return false;
            }
        }
    }
    true
}

/// Exponent pattern for the superregularity hypothesis check: entries are
/// either structurally zero or gamma raised to a positive integer.
pub type ExpoPattern = Vec<Vec<Option<BigUint>>>;

/// Validate the four hypothesis conditions on an exponent pattern:
/// 1. nonzero entries are gamma^beta with beta a positive integer;
/// 2. a zero entry zeroes the rest of its column downward or its row leftward;
/// 3. within a row, exponents at least double moving right;
/// 4. within a column, exponents at least double moving down.
pub fn validate_superregular_exponents(pattern: &ExpoPattern) -> bool {
    let rows = pattern.len();
    if rows == 0 {
        return true;
    }
    let cols = pattern[0].len();
    if pattern.iter().any(|r| r.len() != cols) {
        return false;
    }
    let one = BigUint::from(1u32);
    for r in 0..rows {
        for c in 0..cols {
            match &pattern[r][c] {
                Some(beta) => {
                    if beta < &one {
                        return false; // condition 1: beta positive
                    }
                }
                None => {
                    // condition 2
                    let col_zero_below = (r + 1..rows).all(|r2| pattern[r2][c].is_none());
                    let row_zero_left = (0..c).all(|c2| pattern[r][c2].is_none());
                    if !col_zero_below && !row_zero_left {
                        return false;
                    }
                }
            }
        }
    }
    for r in 0..rows {
        for c1 in 0..cols {
            for c2 in c1 + 1..cols {
                if let (Some(b1), Some(b2)) = (&pattern[r][c1], &pattern[r][c2]) {
                    if &(b1 * 2u32) > b2 {
                        return false; // condition 3
                    }
                }
            }
        }
    }
    for c in 0..cols {
        for r1 in 0..rows {
            for r2 in r1 + 1..rows {
                if let (Some(b1), Some(b2)) = (&pattern[r1][c], &pattern[r2][c]) {
                    if &(b1 * 2u32) > b2 {
                        return false; // condition 4
                    }
                }
            }
        }
    }
    true
}
