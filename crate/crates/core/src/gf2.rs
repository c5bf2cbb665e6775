//! Dense bit-packed matrices over GF(2).

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    // row-major, `stride` words per row; bits past `cols` are always zero
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("ragged row {r}")));
            }
            for (c, &b) in row.iter().enumerate() {
                m.set(r, c, b & 1 == 1);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / WORD] >> (c % WORD) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / WORD];
        let bit = 1u64 << (c % WORD);
        if v {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / WORD] ^= 1u64 << (c % WORD);
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Adds row `src` into row `dst`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert!(src != dst);
        let s = self.stride;
        let (lo, hi) = self.data.split_at_mut(src.max(dst) * s);
        let (from, to) = if src < dst {
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (t, f) in to.iter_mut().zip(from) {
            *t ^= f;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for k in 0..s {
            self.data.swap(a * s + k, b * s + k);
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for (wi, &w) in self.row_words(r).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let c = wi * WORD + bits.trailing_zeros() as usize;
                    t.set(c, r, true);
                    bits &= bits - 1;
                }
            }
        }
        t
    }

    /// Rank over GF(2). Eliminates on a private copy.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.clone();
        let s = m.stride;
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let wi = col / WORD;
            let bit = 1u64 << (col % WORD);
            let Some(p) = (rank..m.rows).find(|&r| m.data[r * s + wi] & bit != 0) else {
                continue;
            };
            m.swap_rows(rank, p);
            let (head, tail) = m.data.split_at_mut((rank + 1) * s);
            // columns before `wi` are already zero in the pivot row
            let pivot = &head[rank * s + wi..(rank + 1) * s];
            for row in tail.chunks_exact_mut(s) {
                if row[wi] & bit != 0 {
                    for (t, p) in row[wi..].iter_mut().zip(pivot) {
                        *t ^= p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// GF(2) product `self * other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        let s = out.stride;
        for r in 0..self.rows {
            let dst = r * s;
            for (wi, &w) in self.row_words(r).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let k = wi * WORD + bits.trailing_zeros() as usize;
                    let src = other.row_words(k);
                    for (t, f) in out.data[dst..dst + s].iter_mut().zip(src) {
                        *t ^= f;
                    }
                    bits &= bits - 1;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            let line: String = (0..self.cols.min(64)).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(BitMatrix::zeros(4, 4).rank(), 0);
        let m = BitMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
        // caller's copy untouched
        assert!(m.get(1, 0));
    }

    #[test]
    fn mul_examples() {
        let m = BitMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.mul(&BitMatrix::identity(3)).unwrap(), m);
        let a = BitMatrix::from_rows(&[vec![1, 1]]).unwrap();
        let b = BitMatrix::from_rows(&[vec![1], vec![1]]).unwrap();
        assert_eq!(a.mul(&b).unwrap(), BitMatrix::zeros(1, 1));
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn wide_rows_and_padding() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(2, 64, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
        m.add_row(0, 1);
        assert!(!m.get(1, 129));
        m.flip(1, 0);
        assert_eq!(m.rank(), 3);
    }
}
