//! Bit-packed linear algebra over the two-element field.
//!
//! Vectors are stored in 64-bit limbs; bit `i` of a vector is column `i`.
//! [`Gf2Basis`] keeps a subspace in reduced row-echelon form where the pivot
//! of a row is its lowest set column, so reducing a vector against the basis
//! yields a canonical coset representative in one pass.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const LIMB: usize = 64;

fn limbs_for(len: usize) -> usize {
    len.div_ceil(LIMB)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gf2Vec {
    len: usize,
    limbs: Vec<u64>,
}

impl Gf2Vec {
    pub fn zeros(len: usize) -> Self {
        Gf2Vec {
            len,
            limbs: vec![0; limbs_for(len)],
        }
    }

    /// The vector with ones exactly at `indices`; repeated indices cancel.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Gf2Vec::zeros(len);
        for i in indices {
            if i >= len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    got: i + 1,
                });
            }
            v.flip(i);
        }
        Ok(v)
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Gf2Vec::zeros(len);
        v.set(i, true);
        v
    }

    /// Builds a vector from the low `len` bits of a word.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= LIMB);
        let mut v = Gf2Vec::zeros(len);
        if len > 0 {
            v.limbs[0] = if len == LIMB { word } else { word & ((1u64 << len) - 1) };
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.limbs[i / LIMB] >> (i % LIMB)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % LIMB);
        if bit {
            self.limbs[i / LIMB] |= mask;
        } else {
            self.limbs[i / LIMB] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.limbs[i / LIMB] ^= 1u64 << (i % LIMB);
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// `self ^= other`. Panics on length mismatch; see [`Gf2Vec::try_xor`].
    #[inline]
    pub fn xor_assign(&mut self, other: &Gf2Vec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= *b;
        }
    }

    pub fn try_xor(&self, other: &Gf2Vec) -> Result<Gf2Vec> {
        check_len(self.len, other.len)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Parity of the bitwise AND.
    pub fn dot(&self, other: &Gf2Vec) -> bool {
        assert_eq!(self.len, other.len);
        self.limbs
            .iter()
            .zip(&other.limbs)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.limbs
            .iter()
            .enumerate()
            .find(|(_, &l)| l != 0)
            .map(|(k, &l)| k * LIMB + l.trailing_zeros() as usize)
    }

    /// Indices of set bits in increasing order.
    pub fn ones(&self) -> Ones<'_> {
        Ones {
            limbs: &self.limbs,
            limb: 0,
            cur: self.limbs.first().copied().unwrap_or(0),
        }
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.ones().collect()
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

pub struct Ones<'a> {
    limbs: &'a [u64],
    limb: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.limb * LIMB + tz);
            }
            self.limb += 1;
            if self.limb >= self.limbs.len() {
                return None;
            }
            self.cur = self.limbs[self.limb];
        }
    }
}

/// Bit strings read left to right: the first character is column 0.
impl FromStr for Gf2Vec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Gf2Vec::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::parse(i, format!("expected 0 or 1, found {c:?}"))),
            }
        }
        Ok(v)
    }
}

impl fmt::Display for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Vec({self})")
    }
}

/// A subspace of GF(2)^n held in reduced row-echelon form.
///
/// Rows are sorted by pivot, and each pivot column is set in exactly one row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Basis {
    ambient_dim: usize,
    rows: Vec<Gf2Vec>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub fn new(ambient_dim: usize) -> Self {
        Gf2Basis {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf2Vec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient_dim - self.rank());
        let mut p = self.pivots.iter().peekable();
        for c in 0..self.ambient_dim {
            if p.peek() == Some(&&c) {
                p.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Adds `v` to the spanning set; returns whether the span grew.
    pub fn insert(&mut self, v: Gf2Vec) -> Result<bool> {
        check_len(self.ambient_dim, v.len())?;
        Ok(self.insert_reduced(self.reduce_unchecked(v)).is_some())
    }

    /// Inserts a vector already reduced against this basis. Returns the index
    /// of its pivot when it was nonzero.
    pub(crate) fn insert_reduced(&mut self, v: Gf2Vec) -> Option<usize> {
        let pivot = v.first_one()?;
        for row in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        Some(pivot)
    }

    /// The unique element of `v + span` that vanishes on every pivot column.
    pub fn reduce(&self, v: &Gf2Vec) -> Result<Gf2Vec> {
        check_len(self.ambient_dim, v.len())?;
        Ok(self.reduce_unchecked(v.clone()))
    }

    pub(crate) fn reduce_unchecked(&self, mut v: Gf2Vec) -> Gf2Vec {
        self.reduce_in_place(&mut v);
        v
    }

    #[inline]
    pub(crate) fn reduce_in_place(&self, v: &mut Gf2Vec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &Gf2Vec) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Same subspace, regardless of how either basis was built.
    pub fn same_span(&self, other: &Gf2Basis) -> bool {
        // Reduced echelon form is unique, so spans agree iff rows agree.
        self == other
    }
}

/// A dense matrix over GF(2) stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<Gf2Vec>,
}

impl Gf2Matrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Gf2Matrix {
            n_rows,
            n_cols,
            rows: vec![Gf2Vec::zeros(n_cols); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(n_cols: usize, rows: Vec<Gf2Vec>) -> Result<Self> {
        for r in &rows {
            check_len(n_cols, r.len())?;
        }
        Ok(Gf2Matrix {
            n_rows: rows.len(),
            n_cols,
            rows,
        })
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(n_rows: usize, cols: &[Gf2Vec]) -> Result<Self> {
        let mut m = Gf2Matrix::zeros(n_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            check_len(n_rows, c.len())?;
            for i in c.ones() {
                m.rows[i].set(j, true);
            }
        }
        Ok(m)
    }

    /// Parses rows of `0`/`1` characters, e.g. `["011", "001", "100"]`.
    pub fn from_bit_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows.iter().map(|r| r.parse::<Gf2Vec>()).collect::<Result<Vec<_>>>()?;
        let n_cols = parsed.first().map_or(0, Gf2Vec::len);
        Gf2Matrix::from_rows(n_cols, parsed)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[Gf2Vec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        self.rows[i].set(j, bit)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.n_cols, self.n_rows);
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &Gf2Vec) -> Result<Gf2Vec> {
        check_len(self.n_cols, x.len())?;
        let mut out = Gf2Vec::zeros(self.n_rows);
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(x) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        check_len(self.n_cols, other.n_rows)?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = Gf2Vec::zeros(other.n_cols);
                for k in row.ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            n_rows: self.n_rows,
            n_cols: other.n_cols,
            rows,
        })
    }

    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        check_len(self.n_rows, other.n_rows)?;
        check_len(self.n_cols, other.n_cols)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.xor_assign(b);
                r
            })
            .collect();
        Ok(Gf2Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            rows,
        })
    }

    /// Places `block` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &Gf2Matrix) {
        for i in 0..block.n_rows {
            for j in 0..block.n_cols {
                self.rows[row + i].set(col + j, block.get(i, j));
            }
        }
    }

    pub fn rank(&self) -> usize {
        let mut basis = Gf2Basis::new(self.n_cols);
        for row in &self.rows {
            basis.insert_reduced(basis.reduce_unchecked(row.clone()));
        }
        basis.rank()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Gf2Vec) -> Result<Option<Gf2Vec>> {
        check_len(self.n_rows, b.len())?;
        // Eliminate the augmented rows [row | b_i]; the right-hand side sits in
        // the last column, so a pivot there means 0 = 1.
        let width = self.n_cols + 1;
        let mut basis = Gf2Basis::new(width);
        for (i, row) in self.rows.iter().enumerate() {
            let mut aug = Gf2Vec::zeros(width);
            for j in row.ones() {
                aug.set(j, true);
            }
            if b.get(i) {
                aug.set(self.n_cols, true);
            }
            basis.insert_reduced(basis.reduce_unchecked(aug));
        }
        if basis.pivots.last() == Some(&self.n_cols) {
            return Ok(None);
        }
        let mut x = Gf2Vec::zeros(self.n_cols);
        for (row, &p) in basis.rows.iter().zip(&basis.pivots) {
            if row.get(self.n_cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    pub fn is_identity(&self) -> bool {
        self.n_rows == self.n_cols && *self == Gf2Matrix::identity(self.n_rows)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.n_rows, self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Gf2Vec {
        s.parse().unwrap()
    }

    fn basis(rows: &[&str]) -> Gf2Basis {
        let mut b = Gf2Basis::new(rows[0].len());
        for r in rows {
            b.insert(v(r)).unwrap();
        }
        b
    }

    #[test]
    fn insert_examples() {
        let mut b = Gf2Basis::new(4);
        assert!(b.insert(v("1010")).unwrap());
        assert_eq!(b.rank(), 1);
        assert!(!b.insert(v("1010")).unwrap());
        assert_eq!(b.rank(), 1);

        let mut b = basis(&["1100", "0110"]);
        assert!(!b.insert(v("1010")).unwrap());
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn insert_rejects_wrong_length() {
        let mut b = Gf2Basis::new(4);
        assert_eq!(
            b.insert(v("101")),
            Err(Error::DimensionMismatch { expected: 4, got: 3 })
        );
        assert!(b.reduce(&v("10101")).is_err());
    }

    #[test]
    fn reduce_examples() {
        let b = basis(&["1100"]);
        assert_eq!(b.reduce(&v("0000")).unwrap(), v("0000"));
        assert_eq!(b.reduce(&v("1000")).unwrap(), v("0100"));
        let full = basis(&["1000", "0100", "0010", "0001"]);
        assert!(full.reduce(&v("1011")).unwrap().is_zero());
    }

    #[test]
    fn rref_shape() {
        let b = basis(&["0111", "1101", "0110"]);
        assert_eq!(b.pivots(), &[0, 1, 3]);
        for (row, &p) in b.rows().iter().zip(b.pivots()) {
            assert_eq!(row.first_one(), Some(p));
            for (other, _) in b.rows().iter().zip(b.pivots()).filter(|(r, _)| *r != row) {
                assert!(!other.get(p));
            }
        }
        assert_eq!(b.free_columns(), vec![2]);
    }

    #[test]
    fn solve_examples() {
        let id = Gf2Matrix::identity(3);
        assert_eq!(id.solve(&v("101")).unwrap(), Some(v("101")));
        let z = Gf2Matrix::zeros(3, 3);
        assert_eq!(z.solve(&v("010")).unwrap(), None);
        let m = Gf2Matrix::from_bit_rows(&["11", "01"]).unwrap();
        let found: Vec<Gf2Vec> = ["00", "01", "10", "11"]
            .iter()
            .map(|s| v(s))
            .filter(|x| m.mul_vec(x).unwrap() == v("10"))
            .collect();
        assert_eq!(found, vec![v("10")]);
        assert_eq!(m.solve(&v("10")).unwrap(), Some(v("10")));
        assert_eq!(m.solve(&v("01")).unwrap(), Some(v("11")));
        assert!(m.solve(&v("101")).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(5).rank(), 5);
        assert_eq!(Gf2Matrix::zeros(4, 4).rank(), 0);
        let u = Gf2Matrix::from_bit_rows(&["011", "001", "100"]).unwrap();
        assert_eq!(u.rank(), 3);
    }

    #[test]
    fn wide_vectors_cross_limbs() {
        let mut a = Gf2Vec::zeros(130);
        a.set(0, true);
        a.set(64, true);
        a.set(129, true);
        assert_eq!(a.to_indices(), vec![0, 64, 129]);
        assert_eq!(a.count_ones(), 3);
        let mut b = Gf2Basis::new(130);
        b.insert(a.clone()).unwrap();
        let mut probe = Gf2Vec::zeros(130);
        probe.set(0, true);
        assert_eq!(b.reduce(&probe).unwrap().to_indices(), vec![64, 129]);
    }
}
