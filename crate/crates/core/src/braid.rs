//! Braid words, their permutations, and the reduced Burau representation.
//!
//! Text form is `l:w`, `w` a space-separated list of nonzero integers where
//! `k` is the generator σ_k and `-k` its inverse, e.g. `3:1 -2 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::laurent::{Laurent2, PolyMatrix};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    // signed generator indices, never 0, |g| <= strands - 1
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BraidParse("braid needs at least one strand".into()));
        }
        for &g in &letters {
            let idx = g.unsigned_abs() as usize;
            if g == 0 || idx >= strands {
                return Err(Error::BraidIndex { index: g as i64, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::DimensionMismatch(format!(
                "braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|g| -g).collect() }
    }

    /// `perm[p]` is the position (0-based) where the strand starting at
    /// position `p` ends after reading the word left to right.
    pub fn permutation(&self) -> Vec<usize> {
        // occupant[q] = starting position of the strand currently at q
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            occupant.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (q, &start) in occupant.iter().enumerate() {
            perm[start] = q;
        }
        perm
    }

    /// Number of components of the closure, i.e. cycles of the permutation.
    pub fn closure_component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    /// Reduced Burau matrix in `Z[t, t^-1]`; `t` is stored as the second
    /// variable of [`Laurent2`].
    pub fn burau(&self) -> Result<PolyMatrix> {
        if self.strands < 2 {
            return Err(Error::TooFewStrands);
        }
        let mut acc = PolyMatrix::identity(self.strands - 1)?;
        for &g in &self.letters {
            let gen = burau_generator(self.strands, g.unsigned_abs() as usize, g < 0)?;
            acc = acc.mul(&gen)?;
        }
        Ok(acc)
    }
}

/// Image of σ_i (or its inverse) in the reduced Burau representation of `B_l`.
///
/// σ_i acts as the identity except on rows/columns `i-1, i, i+1` (1-based),
/// where the block is `[[1,0,0],[t,-t,1],[0,0,1]]`; the inverse block is
/// `[[1,0,0],[1,-t^-1,t^-1],[0,0,1]]`. Rows/columns outside `1..l-1` are
/// dropped.
pub fn burau_generator(strands: usize, index: usize, inverse: bool) -> Result<PolyMatrix> {
    if strands < 2 {
        return Err(Error::TooFewStrands);
    }
    if index == 0 || index >= strands {
        return Err(Error::BraidIndex { index: index as i64, strands });
    }
    let n = strands - 1;
    let t = Laurent2::y();
    let tinv = Laurent2::monomial(1, 0, -1);
    let (left, center, right) = if inverse {
        (Laurent2::one(), -&tinv, tinv.clone())
    } else {
        (t.clone(), -&t, Laurent2::one())
    };
    let mut m = PolyMatrix::identity(n)?;
    let row = index - 1; // 0-based position of the center entry
    m.set(row, row, center);
    if row >= 1 {
        m.set(row, row - 1, left);
    }
    if row + 1 < n {
        m.set(row, row + 1, right);
    }
    Ok(m)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        let parts: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, w) = s
            .split_once(':')
            .ok_or_else(|| Error::BraidParse(format!("missing ':' in {s:?}")))?;
        let strands: usize = l
            .trim()
            .parse()
            .map_err(|_| Error::BraidParse(format!("bad strand count {l:?}")))?;
        let mut letters = Vec::new();
        for tok in w.split_whitespace() {
            let g: i32 = tok
                .parse()
                .map_err(|_| Error::BraidParse(format!("bad generator {tok:?}")))?;
            if g == 0 {
                return Err(Error::BraidParse("generator 0 is not allowed".into()));
            }
            letters.push(g);
        }
        BraidWord::new(strands, letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w("3:").permutation(), vec![0, 1, 2]);
        assert_eq!(w("2:1").permutation(), vec![1, 0]);
        // strand 1 -> 2 -> 3, strand 2 -> 1, strand 3 -> 2
        assert_eq!(w("3:1 2").permutation(), vec![2, 0, 1]);
    }

    #[test]
    fn component_count_examples() {
        assert_eq!(w("2:1").closure_component_count(), 1);
        assert_eq!(w("3:").closure_component_count(), 3);
        assert_eq!(w("2:1 1").closure_component_count(), 2);
    }

    #[test]
    fn burau_examples() {
        let m = w("2:1").burau().unwrap();
        assert_eq!(m.rows(), vec![vec![Laurent2::parse("-t").unwrap()]]);
        let m = w("3:1").burau().unwrap();
        assert_eq!(
            m.rows(),
            vec![
                vec![Laurent2::parse("-t").unwrap(), Laurent2::one()],
                vec![Laurent2::zero(), Laurent2::one()]
            ]
        );
        assert!(w("4:1 -1").burau().unwrap().is_identity());
        assert_eq!(w("1:").burau().unwrap_err(), Error::TooFewStrands);
        assert_eq!(
            Error::TooFewStrands.to_string(),
            "reduced Burau undefined for fewer than 2 strands"
        );
    }

    #[test]
    fn inverse_generators_invert() {
        for l in 2..=6 {
            for i in 1..l {
                let g = burau_generator(l, i, false).unwrap();
                let h = burau_generator(l, i, true).unwrap();
                assert!(g.mul(&h).unwrap().is_identity(), "l={l} i={i}");
                assert!(h.mul(&g).unwrap().is_identity(), "l={l} i={i}");
            }
        }
    }

    #[test]
    fn last_generator_truncates_right() {
        let m = w("3:2").burau().unwrap();
        assert_eq!(
            m.rows(),
            vec![
                vec![Laurent2::one(), Laurent2::zero()],
                vec![Laurent2::y(), Laurent2::parse("-t").unwrap()]
            ]
        );
    }

    #[test]
    fn parse_errors() {
        assert!("2".parse::<BraidWord>().is_err());
        assert!("2:0".parse::<BraidWord>().is_err());
        assert!("2:2".parse::<BraidWord>().is_err());
        assert!("x:1".parse::<BraidWord>().is_err());
        assert!("0:".parse::<BraidWord>().is_err());
        assert_eq!(w("3:1 -2").to_string(), "3:1 -2");
    }
}
