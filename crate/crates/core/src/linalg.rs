//! Exact Gaussian elimination over `GF(2)` (bit-packed rows) and over `F_q`.
//!
//! Pivots are chosen leftmost-first, scanning rows in order, so every result
//! is deterministic.

use crate::gf::{FieldElement, GfField};

/// Dense `GF(2)` vector packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the bitwise AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    fn first_one_from(&self, start: usize) -> Option<usize> {
        self.ones().find(|&i| i >= start)
    }
}

/// Row-major `GF(2)` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].flip(i);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { cols, rows }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for i in col.ones() {
                m.rows[i].flip(j);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value)
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_columns(self.cols, &self.rows)
    }

    /// `A x`.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        BitVec::from_ones(
            self.nrows(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.dot(x))
                .map(|(i, _)| i),
        )
    }

    /// In-place reduced row-echelon form; returns pivot columns. Zero rows are dropped.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| self.rows[i].get(c)) else {
                continue;
            };
            self.rows.swap(r, p);
            let pivot = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.rows.truncate(r);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : A x = 0}`, returned in reduced row-echelon form.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<BitVec> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVec::zeros(self.cols);
                v.flip(f);
                for (row, &p) in m.rows.iter().zip(&pivots) {
                    if row.get(f) {
                        v.flip(p);
                    }
                }
                v
            })
            .collect();
        let mut basis = BitMatrix::from_rows(self.cols, vectors);
        basis.rref();
        basis.rows
    }

    /// Whether `v` lies in the row span.
    pub fn row_space_contains(&self, v: &BitVec) -> bool {
        let mut m = self.clone();
        let before = m.rank();
        m.rows.push(v.clone());
        m.rank() == before
    }
}

/// Leading index of a reduced vector, used when testing echelon form.
pub fn leading_one(v: &BitVec) -> Option<usize> {
    v.first_one_from(0)
}

/// Row-major matrix over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FqMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn from_bits(m: &BitMatrix) -> Self {
        let mut out = Self::zeros(m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            for j in m.row(i).ones() {
                out.set(i, j, FieldElement::ONE);
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: &[FieldElement]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// In-place reduced row-echelon form; returns pivot columns. Zero rows are dropped.
    pub fn rref(&mut self, field: &GfField) -> Vec<usize> {
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(r * cols + j, p * cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = field.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            let pivot: Vec<FieldElement> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i == r || f.is_zero() {
                    continue;
                }
                field.axpy(&mut self.data[i * cols + c..(i + 1) * cols], &pivot, f);
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(r * cols);
        self.rows = r;
        pivots
    }

    /// Rank by incremental forward elimination; rows are streamed against a
    /// growing echelon basis, so tall matrices cost `rows * rank * cols`.
    pub fn rank(&self, field: &GfField) -> usize {
        // (pivot column, normalized row) kept sorted by pivot column.
        let mut basis: Vec<(usize, Vec<FieldElement>)> = Vec::new();
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            for (c, b) in &basis {
                let f = row[*c];
                if !f.is_zero() {
                    field.axpy(&mut row[*c..], &b[*c..], f);
                }
            }
            if let Some(c) = row.iter().position(|x| !x.is_zero()) {
                let inv = field.inv(row[c]).expect("nonzero");
                for x in &mut row[c..] {
                    *x = field.mul(*x, inv);
                }
                let at = basis.partition_point(|(p, _)| *p < c);
                basis.insert(at, (c, row));
                if basis.len() == self.cols {
                    break;
                }
            }
        }
        basis.len()
    }

    /// Basis of `{x : A x = 0}` in reduced row-echelon form.
    pub fn kernel_basis(&self, field: &GfField) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = FqMatrix::zeros(0, self.cols);
        for f in (0..self.cols).filter(|&f| !is_pivot[f]) {
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[f] = FieldElement::ONE;
            // Characteristic 2: -a = a.
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = m.get(i, f);
            }
            basis.push_row(&v);
        }
        basis.rref(field);
        (0..basis.rows).map(|i| basis.row(i).to_vec()).collect()
    }
}
