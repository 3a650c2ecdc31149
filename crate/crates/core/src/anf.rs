use rayon::prelude::*;

use crate::bits::LO_MASKS;
use crate::table::PAR_WORDS;
use crate::TruthTable;

/// Algebraic normal form: bit `S` is the coefficient of `Π_{j∈S} x_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnfPolynomial {
    coeffs: TruthTable,
}

fn mobius_words(words: &mut [u64], n: usize) {
    for i in 0..n.min(6) {
        let s = 1u32 << i;
        let m = LO_MASKS[i];
        for w in words.iter_mut() {
            *w ^= (*w & m) << s;
        }
    }
    for i in 6..n {
        let step = 1usize << (i - 6);
        let pass = |chunk: &mut [u64]| {
            let (lo, hi) = chunk.split_at_mut(step);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        };
        if words.len() >= PAR_WORDS {
            words.par_chunks_mut(2 * step).for_each(pass);
        } else {
            words.chunks_mut(2 * step).for_each(pass);
        }
    }
}

fn transform(t: &TruthTable) -> TruthTable {
    let mut words = t.words().to_vec();
    mobius_words(&mut words, t.n());
    TruthTable::from_words(t.n(), words).expect("same shape")
}

impl AnfPolynomial {
    /// ANF of `f` via the binary Möbius transform.
    pub fn of(f: &TruthTable) -> Self {
        AnfPolynomial { coeffs: transform(f) }
    }

    /// Wraps a coefficient vector stored as a table.
    pub fn from_coefficients(coeffs: TruthTable) -> Self {
        AnfPolynomial { coeffs }
    }

    /// Monomials given as variable masks.
    pub fn from_monomials(n: usize, monomials: &[usize]) -> crate::Result<Self> {
        let mut bits = vec![false; 1 << n];
        for &m in monomials {
            if m >= bits.len() {
                return Err(crate::Error::arg(format!("monomial {m:#x} out of range")));
            }
            bits[m] ^= true;
        }
        Ok(AnfPolynomial { coeffs: TruthTable::from_bits(n, &bits)? })
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }

    pub fn coefficients(&self) -> &TruthTable {
        &self.coeffs
    }

    pub fn coeff(&self, monomial: usize) -> bool {
        self.coeffs.bit(monomial)
    }

    /// Monomials with coefficient 1, as variable masks in increasing order.
    pub fn monomials(&self) -> Vec<usize> {
        self.coeffs.ones().collect()
    }

    /// Largest monomial size; 0 for constants.
    pub fn degree(&self) -> usize {
        self.coeffs.ones().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    /// The function this polynomial evaluates to.
    pub fn to_truth_table(&self) -> TruthTable {
        transform(&self.coeffs)
    }
}

pub fn mobius_anf(f: &TruthTable) -> AnfPolynomial {
    AnfPolynomial::of(f)
}

pub fn algebraic_degree(f: &TruthTable) -> usize {
    AnfPolynomial::of(f).degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_anf(f: &TruthTable) -> Vec<usize> {
        (0..f.len()).filter(|&s| (0..f.len()).filter(|&x| x & !s == 0).fold(false, |acc, x| acc ^ f.bit(x))).collect()
    }

    #[test]
    fn known_forms() {
        assert_eq!(mobius_anf(&TruthTable::parity_fn(3).unwrap()).monomials(), vec![1, 2, 4]);
        assert_eq!(mobius_anf(&TruthTable::and_fn(2).unwrap()).monomials(), vec![3]);
        let maj = TruthTable::majority(3).unwrap();
        assert_eq!(mobius_anf(&maj).monomials(), vec![3, 5, 6]);
        assert_eq!(algebraic_degree(&maj), 2);
        assert_eq!(algebraic_degree(&TruthTable::and_fn(5).unwrap()), 5);
        assert_eq!(algebraic_degree(&TruthTable::zero(4).unwrap()), 0);
    }

    #[test]
    fn matches_subset_sums_and_inverts() {
        for n in [1, 3, 6, 8] {
            let f = TruthTable::from_fn(n, |x| (x * 131 + 7) % 11 < 5).unwrap();
            let a = mobius_anf(&f);
            assert_eq!(a.monomials(), brute_anf(&f));
            assert_eq!(a.to_truth_table(), f);
        }
    }

    #[test]
    fn from_monomials_roundtrip() {
        let a = AnfPolynomial::from_monomials(3, &[3, 5, 6]).unwrap();
        assert_eq!(a.to_truth_table(), TruthTable::majority(3).unwrap());
        assert!(AnfPolynomial::from_monomials(2, &[4]).is_err());
    }
}
