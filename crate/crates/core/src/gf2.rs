//! Bit-packed linear algebra over the two-element field.
//!
//! Row reduction always pivots on the leftmost available column, so echelon
//! forms, kernel bases and quotient projections are canonical: two runs over
//! the same input produce identical output.

use crate::{Error, Result};
use std::fmt;

const WORD: usize = 64;

/// A vector over GF(2) with a fixed length, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b != 0);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, e.g. `"0110"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::InvalidStructure(format!(
                        "bit string may only contain 0/1, got {c:?}"
                    )))
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range 0..{}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "coordinate {i} out of range 0..{}", self.len);
        if bit {
            self.words[i / WORD] |= 1 << (i % WORD);
        } else {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors of different length");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Index of the lowest set coordinate.
    pub fn leading(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        if self.len == 0 {
            write!(f, "-")?;
        }
        Ok(())
    }
}

/// A matrix over GF(2), stored as one bit-packed row per matrix row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
        }
        BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_bits(rows: usize, cols: usize, bits: &[u8]) -> Self {
        assert_eq!(bits.len(), rows * cols, "entry count must be rows*cols");
        let data = (0..rows)
            .map(|r| BitVector::from_bits(&bits[r * cols..(r + 1) * cols]))
            .collect();
        BitMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        self.data[r].set(c, bit);
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].iter_ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(
            v.len(),
            self.cols,
            "matrix has {} columns, vector has length {}",
            self.cols,
            v.len()
        );
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.data[r].words.iter().zip(&v.words) {
                acc ^= a & b;
            }
            out.set(r, acc.count_ones() % 2 == 1);
        }
        out
    }

    /// `self * other`, sizes `(r×k) * (k×c) -> (r×c)`.
    pub fn mul_mat(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in self.data[r].iter_ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        out
    }

    /// Row echelon form with leftmost pivots, together with the pivot columns.
    pub fn echelon(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.data.swap(row, p);
            for r in 0..m.rows {
                if r != row && m.get(r, col) {
                    let (a, b) = if r < row {
                        let (lo, hi) = m.data.split_at_mut(row);
                        (&mut lo[r], &hi[0])
                    } else {
                        let (lo, hi) = m.data.split_at_mut(r);
                        (&mut hi[0], &lo[row])
                    };
                    a.xor_assign(b);
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column, ordered by
    /// free column index.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let (ech, pivots) = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = BitVector::unit(self.cols, free);
            for (r, &p) in pivots.iter().enumerate() {
                if ech.get(r, free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Is `v` in the row space?
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        let mut stacked = self.data.clone();
        stacked.push(v.clone());
        BitMatrix::from_rows(self.cols, stacked).rank() == self.rank()
    }

    /// One solution `x` of `self * x = rhs`, if any.
    pub fn solve(&self, rhs: &BitVector) -> Option<BitVector> {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal row count");
        // Eliminate on the augmented matrix [self | rhs].
        let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in self.data[r].iter_ones() {
                aug.set(r, c, true);
            }
            if rhs.get(r) {
                aug.set(r, self.cols, true);
            }
        }
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| aug.get(r, col)) else {
                continue;
            };
            aug.data.swap(row, p);
            for r in 0..self.rows {
                if r != row && aug.get(r, col) {
                    let (a, b) = if r < row {
                        let (lo, hi) = aug.data.split_at_mut(row);
                        (&mut lo[r], &hi[0])
                    } else {
                        let (lo, hi) = aug.data.split_at_mut(r);
                        (&mut hi[0], &lo[row])
                    };
                    a.xor_assign(b);
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        // Inconsistent if a zero row has rhs bit set.
        for r in 0..self.rows {
            let coeff_zero = (0..self.cols).all(|c| !aug.get(r, c));
            if coeff_zero && aug.get(r, self.cols) {
                return None;
            }
        }
        let mut x = BitVector::zeros(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            if aug.get(r, self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_bijective(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Inverse of a bijective matrix.
    pub fn inverse(&self) -> Option<BitMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = BitMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in self.data[r].iter_ones() {
                aug.set(r, c, true);
            }
            aug.set(r, n + r, true);
        }
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| aug.get(r, col)) else {
                return None;
            };
            aug.data.swap(row, p);
            for r in 0..n {
                if r != row && aug.get(r, col) {
                    let (a, b) = if r < row {
                        let (lo, hi) = aug.data.split_at_mut(row);
                        (&mut lo[r], &hi[0])
                    } else {
                        let (lo, hi) = aug.data.split_at_mut(r);
                        (&mut hi[0], &lo[row])
                    };
                    a.xor_assign(b);
                }
            }
            row += 1;
        }
        let mut inv = BitMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in &self.data {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// The data of a quotient `F_2^ambient / span(subspace)`.
///
/// `projection * v` is the class of `v`; it is zero exactly on the span of the
/// subspace. The class of the `j`-th quotient basis vector lifts to the unit
/// vector at `lifts[j]`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub projection: BitMatrix,
    pub dim: usize,
    pub lifts: Vec<usize>,
}

/// Quotient of `F_2^ambient_dim` by the span of `subspace`.
pub fn quotient_structure(ambient_dim: usize, subspace: &[BitVector]) -> Quotient {
    for v in subspace {
        assert_eq!(v.len(), ambient_dim, "subspace vector length mismatch");
    }
    let (ech, pivots) = BitMatrix::from_rows(ambient_dim, subspace.to_vec()).echelon();
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let lifts: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let dim = lifts.len();
    // Column c of the projection is the reduction of e_c restricted to the
    // free coordinates.
    let mut projection = BitMatrix::zeros(dim, ambient_dim);
    for (j, &free) in lifts.iter().enumerate() {
        projection.set(j, free, true);
    }
    for (r, &p) in pivots.iter().enumerate() {
        // e_p reduces to the free part of the echelon row (with e_p removed).
        for (j, &free) in lifts.iter().enumerate() {
            if ech.get(r, free) {
                projection.set(j, p, true);
            }
        }
    }
    Quotient {
        projection,
        dim,
        lifts,
    }
}

/// A GF(2)-bilinear map `F_2^left_dim x F_2^right_dim -> F_2^out_dim`, given
/// by its values on basis pairs. Application is bilinear by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct BilinearTable {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    entries: Vec<BitVector>,
}

impl BilinearTable {
    pub fn new(left_dim: usize, right_dim: usize, out_dim: usize, entries: Vec<BitVector>) -> Result<Self> {
        if entries.len() != left_dim * right_dim {
            return Err(Error::DimensionMismatch(format!(
                "bilinear table needs {} entries, got {}",
                left_dim * right_dim,
                entries.len()
            )));
        }
        for e in &entries {
            if e.len() != out_dim {
                return Err(Error::DimensionMismatch(format!(
                    "bilinear table entry has length {}, expected {}",
                    e.len(),
                    out_dim
                )));
            }
        }
        Ok(BilinearTable {
            left_dim,
            right_dim,
            out_dim,
            entries,
        })
    }

    pub fn zero(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        BilinearTable {
            left_dim,
            right_dim,
            out_dim,
            entries: vec![BitVector::zeros(out_dim); left_dim * right_dim],
        }
    }

    pub fn from_fn(
        left_dim: usize,
        right_dim: usize,
        out_dim: usize,
        mut f: impl FnMut(usize, usize) -> BitVector,
    ) -> Self {
        let mut entries = Vec::with_capacity(left_dim * right_dim);
        for i in 0..left_dim {
            for j in 0..right_dim {
                let v = f(i, j);
                assert_eq!(v.len(), out_dim);
                entries.push(v);
            }
        }
        BilinearTable {
            left_dim,
            right_dim,
            out_dim,
            entries,
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left_dim, self.right_dim, self.out_dim)
    }

    pub fn entry(&self, i: usize, j: usize) -> &BitVector {
        &self.entries[i * self.right_dim + j]
    }

    pub fn apply(&self, u: &BitVector, v: &BitVector) -> Result<BitVector> {
        if u.len() != self.left_dim || v.len() != self.right_dim {
            return Err(Error::DimensionMismatch(format!(
                "bilinear apply: got ({}, {}), table expects ({}, {})",
                u.len(),
                v.len(),
                self.left_dim,
                self.right_dim
            )));
        }
        let mut out = BitVector::zeros(self.out_dim);
        for i in u.iter_ones() {
            for j in v.iter_ones() {
                out.xor_assign(self.entry(i, j));
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BilinearTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BilinearTable({}x{} -> {})",
            self.left_dim, self.right_dim, self.out_dim
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        // Third row is the sum of the first two.
        let m = BitMatrix::from_bits(3, 3, &[1, 1, 0, 0, 1, 1, 1, 0, 1]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(BitMatrix::identity(2).kernel_basis().is_empty());
        assert_eq!(BitMatrix::zeros(1, 2).kernel_basis().len(), 2);
        // x + y = 0 over GF(2) has the single solution direction (1,1).
        let m = BitMatrix::from_bits(1, 2, &[1, 1]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![BitVector::from_bits(&[1, 1])]);
    }

    #[test]
    fn kernel_vectors_satisfy_mv_zero() {
        let m = BitMatrix::from_bits(3, 5, &[1, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1]);
        let ker = m.kernel_basis();
        assert_eq!(m.cols(), m.rank() + ker.len());
        for v in &ker {
            assert!(m.mul_vec(v).is_zero());
        }
        // Independence: stacking the kernel vectors has full rank.
        assert_eq!(BitMatrix::from_rows(5, ker.clone()).rank(), ker.len());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_structure(2, &[]);
        assert_eq!(q.dim, 2);
        assert!(q.projection.is_bijective());

        let q = quotient_structure(2, &[BitVector::from_bits(&[1, 1])]);
        assert_eq!(q.dim, 1);

        let full: Vec<_> = (0..3).map(|i| BitVector::unit(3, i)).collect();
        assert_eq!(quotient_structure(3, &full).dim, 0);
    }

    #[test]
    fn quotient_annihilates_exactly_the_span() {
        let gens = vec![
            BitVector::from_bits(&[1, 1, 0, 0]),
            BitVector::from_bits(&[0, 0, 1, 1]),
        ];
        let q = quotient_structure(4, &gens);
        assert_eq!(q.dim, 2);
        let gen_mat = BitMatrix::from_rows(4, gens.clone());
        for x in 0u32..16 {
            let v = BitVector::from_bits(&[
                (x & 1) as u8,
                (x >> 1 & 1) as u8,
                (x >> 2 & 1) as u8,
                (x >> 3 & 1) as u8,
            ]);
            let in_span = gen_mat.row_space_contains(&v);
            assert_eq!(q.projection.mul_vec(&v).is_zero(), in_span);
        }
        // Lifts map back to unit vectors of the quotient.
        for (j, &c) in q.lifts.iter().enumerate() {
            let e = BitVector::unit(4, c);
            assert_eq!(q.projection.mul_vec(&e), BitVector::unit(q.dim, j));
        }
    }

    #[test]
    fn solve_finds_preimages() {
        let m = BitMatrix::from_bits(3, 3, &[1, 1, 0, 0, 1, 1, 1, 0, 1]);
        let rhs = BitVector::from_bits(&[1, 1, 0]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul_vec(&x), rhs);
        // (1,1,1) is not in the column space of this rank-2 matrix.
        assert!(m.solve(&BitVector::from_bits(&[1, 1, 1])).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = BitMatrix::from_bits(3, 3, &[1, 1, 0, 0, 1, 0, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), BitMatrix::identity(3));
        assert_eq!(inv.mul_mat(&m), BitMatrix::identity(3));
        assert!(BitMatrix::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn bilinear_zero_and_scalar() {
        let t = BilinearTable::from_fn(2, 2, 2, |i, j| {
            if i == j {
                BitVector::unit(2, i)
            } else {
                BitVector::zeros(2)
            }
        });
        let zero = BitVector::zeros(2);
        let u = BitVector::from_bits(&[1, 1]);
        assert!(t.apply(&zero, &u).unwrap().is_zero());

        let one = BilinearTable::from_fn(1, 1, 1, |_, _| BitVector::unit(1, 0));
        let e = BitVector::unit(1, 0);
        assert_eq!(one.apply(&e, &e).unwrap(), e);

        assert!(t.apply(&u, &BitVector::zeros(3)).is_err());
    }
}
