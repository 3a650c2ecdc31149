use std::fmt;

use rayon::prelude::*;

use crate::bits::{flip_in_word, word_mask, PARITY_WORD};
use crate::{Error, Result};

/// Largest variable count for which tables are materialized.
pub const MAX_VARS: usize = 26;

/// Word count above which table-wide loops go parallel.
pub(crate) const PAR_WORDS: usize = 1 << 12;

/// A Boolean function on `n` variables stored as `2^n` packed bits.
///
/// Bit `x` of the table is `f(x)`, where point `x` has `x_1` as its least
/// significant bit. Tables with fewer than 64 entries use the low bits of a
/// single word and keep the rest zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

fn check_vars(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::arg("a truth table needs at least one variable"));
    }
    if n > MAX_VARS {
        return Err(Error::capacity(format!("{n} variables exceeds the materialization cap of {MAX_VARS}")));
    }
    Ok(())
}

fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

impl TruthTable {
    /// Constant table with every entry equal to `value`.
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        check_vars(n)?;
        let fill = if value { word_mask(n) } else { 0 };
        Ok(TruthTable { n, words: vec![fill; word_count(n)] })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::constant(n, false)
    }

    /// Builds a table from a predicate on point indices.
    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(usize) -> bool + Sync,
    {
        check_vars(n)?;
        let per_word = 1usize << n.min(6);
        let fill = |w: usize| {
            let base = w << 6;
            let mut acc = 0u64;
            for b in 0..per_word {
                if f(base | b) {
                    acc |= 1 << b;
                }
            }
            acc
        };
        let nw = word_count(n);
        let words = if nw >= PAR_WORDS / 16 {
            (0..nw).into_par_iter().map(fill).collect()
        } else {
            (0..nw).map(fill).collect()
        };
        Ok(TruthTable { n, words })
    }

    /// Builds a table from `2^n` explicit values.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self> {
        check_vars(n)?;
        if bits.len() != 1 << n {
            return Err(Error::arg(format!("expected {} bits for n={n}, got {}", 1usize << n, bits.len())));
        }
        Self::from_fn(n, |x| bits[x])
    }

    /// Builds a table from packed words; bits outside the table must be zero.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_vars(n)?;
        if words.len() != word_count(n) {
            return Err(Error::arg(format!("expected {} words for n={n}, got {}", word_count(n), words.len())));
        }
        if n < 6 && words[0] & !word_mask(n) != 0 {
            return Err(Error::arg("bits set beyond the end of the table"));
        }
        Ok(TruthTable { n, words })
    }

    /// Table on `n <= 6` variables from a single word.
    pub fn from_u64(n: usize, word: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::arg("single-word tables have at most 6 variables"));
        }
        Self::from_words(n, vec![word])
    }

    /// The parity function `x_1 ⊕ ... ⊕ x_n`.
    pub fn parity_fn(n: usize) -> Result<Self> {
        check_vars(n)?;
        let words = (0..word_count(n))
            .map(|j| {
                let w = if j.count_ones() & 1 == 1 { !PARITY_WORD } else { PARITY_WORD };
                w & word_mask(n)
            })
            .collect();
        Ok(TruthTable { n, words })
    }

    /// The linear function `u·x`.
    pub fn linear(n: usize, u: usize) -> Result<Self> {
        Self::from_fn(n, |x| (x & u).count_ones() & 1 == 1)
    }

    /// Conjunction of all `n` variables.
    pub fn and_fn(n: usize) -> Result<Self> {
        let full = (1usize << n) - 1;
        Self::from_fn(n, |x| x == full)
    }

    /// Majority (ties, possible for even `n`, count as 0).
    pub fn majority(n: usize) -> Result<Self> {
        Self::from_fn(n, |x| 2 * x.count_ones() as usize > n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The single packed word of a table with `n <= 6`.
    pub fn as_u64(&self) -> Option<u64> {
        (self.n <= 6).then(|| self.words[0])
    }

    /// Value at point index `x`; panics if `x >= 2^n`.
    #[inline]
    pub fn bit(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        (self.words[x >> 6] >> (x & 63)) & 1 == 1
    }

    /// Value at point index `x`, checking the range.
    pub fn eval(&self, x: usize) -> Result<bool> {
        if x >= self.len() {
            return Err(Error::arg(format!("point {x} out of range for {} variables", self.n)));
        }
        Ok(self.bit(x))
    }

    /// Value at a point given coordinate-wise.
    pub fn eval_point(&self, point: &[bool]) -> Result<bool> {
        if point.len() != self.n {
            return Err(Error::arg(format!("point has {} coordinates, function has {}", point.len(), self.n)));
        }
        Ok(self.bit(crate::bits::index_of(point)))
    }

    /// Number of points mapped to 1.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.len() as u64
    }

    /// Pointwise XOR of two tables on the same variables.
    pub fn xor(&self, other: &TruthTable) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::arg("tables have different variable counts"));
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(TruthTable { n: self.n, words })
    }

    /// Pointwise negation.
    pub fn complement(&self) -> Self {
        let m = word_mask(self.n);
        TruthTable { n: self.n, words: self.words.iter().map(|w| !w & m).collect() }
    }

    /// The table of `x -> f(x ⊕ e_{i+1})`.
    pub fn flip_var(&self, i: usize) -> Self {
        TruthTable { n: self.n, words: flip_words(&self.words, i) }
    }

    /// The table of `x -> f(x ⊕ z)`.
    pub fn translate(&self, z: usize) -> Self {
        let mut words = self.words.clone();
        for i in 0..self.n {
            if (z >> i) & 1 == 1 {
                words = flip_words(&words, i);
            }
        }
        TruthTable { n: self.n, words }
    }

    /// Indices of all points mapped to 1, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(j, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((j << 6) | b)
            })
        })
    }

    /// All values in index order.
    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len()).map(|x| self.bit(x)).collect()
    }
}

/// Packed words of `x -> t(x ⊕ e_{i+1})`.
pub(crate) fn flip_words(words: &[u64], i: usize) -> Vec<u64> {
    if i < 6 {
        if words.len() >= PAR_WORDS {
            words.par_iter().map(|&w| flip_in_word(w, i)).collect()
        } else {
            words.iter().map(|&w| flip_in_word(w, i)).collect()
        }
    } else {
        let step = 1usize << (i - 6);
        if words.len() >= PAR_WORDS {
            (0..words.len()).into_par_iter().map(|j| words[j ^ step]).collect()
        } else {
            (0..words.len()).map(|j| words[j ^ step]).collect()
        }
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 10 {
            write!(f, "TruthTable(n={}, {})", self.n, crate::to_hex(self))
        } else {
            write!(f, "TruthTable(n={}, weight={})", self.n, self.weight())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        let p3 = TruthTable::parity_fn(3).unwrap();
        assert!(!p3.eval_point(&[true, true, false]).unwrap());
        assert!(p3.bit(7));
        let a3 = TruthTable::and_fn(3).unwrap();
        assert!(a3.eval_point(&[true, true, true]).unwrap());
        assert_eq!(a3.weight(), 1);
        for n in 1..=9 {
            let p = TruthTable::parity_fn(n).unwrap();
            let q = TruthTable::from_fn(n, |x| x.count_ones() % 2 == 1).unwrap();
            assert_eq!(p, q);
            assert!(p.is_balanced());
        }
    }

    #[test]
    fn range_checks() {
        let t = TruthTable::zero(3).unwrap();
        assert!(t.eval(8).is_err());
        assert!(t.eval_point(&[true]).is_err());
        assert!(matches!(TruthTable::zero(27), Err(Error::Capacity(_))));
        assert!(TruthTable::zero(0).is_err());
        assert!(TruthTable::from_u64(2, 0x10).is_err());
    }

    #[test]
    fn translate_matches_definition() {
        let t = TruthTable::from_fn(8, |x| (x * 2654435761) % 7 < 3).unwrap();
        for z in [0usize, 1, 5, 64, 200, 255] {
            let s = t.translate(z);
            for x in 0..256 {
                assert_eq!(s.bit(x), t.bit(x ^ z));
            }
        }
    }

    #[test]
    fn ones_iterates_support() {
        let t = TruthTable::from_fn(7, |x| x % 5 == 0).unwrap();
        let v: Vec<usize> = t.ones().collect();
        assert_eq!(v, (0..128).filter(|x| x % 5 == 0).collect::<Vec<_>>());
        assert_eq!(t.complement().weight(), 128 - v.len() as u64);
    }
}
