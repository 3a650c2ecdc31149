use rayon::prelude::*;

use crate::table::PAR_WORDS;
use crate::{Error, Result, TruthTable};

/// Walsh spectrum `W_f(u) = Σ_x (-1)^{f(x) ⊕ u·x}`, indexed like points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalshSpectrum {
    n: usize,
    coeffs: Vec<i32>,
}

const PAR_LEN: usize = PAR_WORDS * 64;

/// In-place unnormalized Walsh-Hadamard butterfly.
pub fn fwht<T>(data: &mut [T])
where
    T: Copy + Send + Sync + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let len = data.len();
    assert!(len.is_power_of_two(), "transform length must be a power of two");
    let mut h = 1;
    while h < len {
        if len >= PAR_LEN {
            data.par_chunks_mut(2 * h).for_each(|c| butterfly(c, h));
        } else {
            data.chunks_mut(2 * h).for_each(|c| butterfly(c, h));
        }
        h *= 2;
    }
}

fn butterfly<T>(chunk: &mut [T], h: usize)
where
    T: Copy + Send + Sync + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let (a, b) = chunk.split_at_mut(h);
    let step = |(x, y): (&mut T, &mut T)| {
        let (p, q) = (*x, *y);
        *x = p + q;
        *y = p - q;
    };
    if h >= PAR_LEN / 4 {
        a.par_iter_mut().zip(b.par_iter_mut()).for_each(step);
    } else {
        a.iter_mut().zip(b.iter_mut()).for_each(step);
    }
}

impl WalshSpectrum {
    /// Spectrum of `f`.
    pub fn of(f: &TruthTable) -> Self {
        let len = f.len();
        let sign = |x: usize| if f.bit(x) { -1 } else { 1 };
        let mut coeffs: Vec<i32> =
            if len >= PAR_LEN { (0..len).into_par_iter().map(sign).collect() } else { (0..len).map(sign).collect() };
        fwht(&mut coeffs);
        WalshSpectrum { n: f.n(), coeffs }
    }

    /// Wraps raw coefficients; the length must be `2^n`.
    pub fn from_coeffs(n: usize, coeffs: Vec<i32>) -> Result<Self> {
        if n == 0 || n > crate::MAX_VARS {
            return Err(Error::capacity(format!("unsupported variable count {n}")));
        }
        if coeffs.len() != 1 << n {
            return Err(Error::arg("spectrum length must be 2^n"));
        }
        Ok(WalshSpectrum { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    #[inline]
    pub fn get(&self, u: usize) -> i32 {
        self.coeffs[u]
    }

    /// Spectrum of the complemented function.
    pub fn negated(&self) -> Self {
        WalshSpectrum { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// `max_u |W(u)|`.
    pub fn max_abs(&self) -> u32 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    /// `Σ_u W(u)^2`, which equals `2^{2n}` for every Boolean function.
    pub fn parseval_sum(&self) -> u128 {
        self.coeffs.iter().map(|&c| (c as i128 * c as i128) as u128).sum()
    }

    /// Largest weight of a point in the support.
    pub fn pdeg(&self) -> usize {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(u, _)| u.count_ones() as usize).max().unwrap_or(0)
    }

    /// Smallest weight of a point in the support.
    pub fn min_support_weight(&self) -> usize {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(u, _)| u.count_ones() as usize).min().unwrap_or(0)
    }

    /// `-1` when unbalanced, otherwise the largest `m` with `W(u) = 0` for
    /// all `wt(u) <= m`.
    pub fn resiliency_order(&self) -> i32 {
        if self.coeffs[0] != 0 {
            return -1;
        }
        self.min_support_weight() as i32 - 1
    }

    /// `2^{n-1} - max|W| / 2`.
    pub fn nonlinearity(&self) -> u64 {
        (1u64 << (self.n - 1)) - (self.max_abs() as u64) / 2
    }

    /// Inverse transform; fails if the coefficients are not the spectrum of
    /// a Boolean function.
    pub fn inverse(&self) -> Result<TruthTable> {
        let mut v: Vec<i64> = self.coeffs.iter().map(|&c| c as i64).collect();
        fwht(&mut v);
        let scale = 1i64 << self.n;
        if let Some(x) = v.iter().position(|&s| s != scale && s != -scale) {
            return Err(Error::arg(format!("coefficients are not a Boolean spectrum (entry {x})")));
        }
        TruthTable::from_fn(self.n, |x| v[x] < 0)
    }
}

/// Walsh spectrum of `f`.
pub fn walsh_transform(f: &TruthTable) -> WalshSpectrum {
    WalshSpectrum::of(f)
}

/// Real polynomial degree: the largest weight in the Walsh support.
pub fn pdeg(f: &TruthTable) -> usize {
    WalshSpectrum::of(f).pdeg()
}

pub fn resiliency_order(f: &TruthTable) -> i32 {
    WalshSpectrum::of(f).resiliency_order()
}

pub fn nonlinearity(f: &TruthTable) -> u64 {
    WalshSpectrum::of(f).nonlinearity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(f: &TruthTable, u: usize) -> i32 {
        (0..f.len())
            .map(|x| {
                let e = f.bit(x) as u32 ^ ((u & x).count_ones() & 1);
                if e == 0 {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    #[test]
    fn small_spectra() {
        let c = TruthTable::zero(2).unwrap();
        assert_eq!(walsh_transform(&c).coeffs(), &[4, 0, 0, 0]);
        let p = TruthTable::parity_fn(2).unwrap();
        assert_eq!(walsh_transform(&p).coeffs(), &[0, 0, 0, 4]);
        let a = TruthTable::and_fn(2).unwrap();
        let w = walsh_transform(&a);
        for u in 0..4 {
            assert_eq!(w.get(u), brute(&a, u));
        }
        assert_eq!(w.coeffs(), &[2, 2, 2, -2]);
    }

    #[test]
    fn butterfly_matches_definition() {
        let f = TruthTable::from_fn(7, |x| (x * 37 + 11) % 13 < 6).unwrap();
        let w = walsh_transform(&f);
        for u in 0..128 {
            assert_eq!(w.get(u), brute(&f, u));
        }
        assert_eq!(w.inverse().unwrap(), f);
    }

    #[test]
    fn degree_resiliency_nonlinearity() {
        for n in 1..=8 {
            let p = TruthTable::parity_fn(n).unwrap();
            assert_eq!(pdeg(&p), n);
            assert_eq!(resiliency_order(&p), n as i32 - 1);
            assert_eq!(nonlinearity(&p), 0);
            let one = TruthTable::constant(n, true).unwrap();
            assert_eq!(pdeg(&one), 0);
            assert_eq!(resiliency_order(&one), -1);
        }
        let bent = TruthTable::from_fn(4, |x| ((x & 1) & (x >> 1 & 1)) ^ ((x >> 2 & 1) & (x >> 3 & 1)) == 1).unwrap();
        assert_eq!(nonlinearity(&bent), 6);
        assert!(walsh_transform(&bent).coeffs().iter().all(|c| c.abs() == 4));
    }

    #[test]
    fn inverse_rejects_non_boolean() {
        let s = WalshSpectrum::from_coeffs(2, vec![2, 2, 2, 2]).unwrap();
        assert!(s.inverse().is_err());
        assert!(WalshSpectrum::from_coeffs(2, vec![0; 3]).is_err());
    }

    #[test]
    fn parallel_path_agrees() {
        let n = 19;
        let f = TruthTable::from_fn(n, |x| (x.wrapping_mul(0x9e37_79b9) >> 7) & 1 == 1).unwrap();
        let w = walsh_transform(&f);
        assert_eq!(w.parseval_sum(), 1u128 << (2 * n));
        for u in [0usize, 1, 77, 1 << 18, (1 << 19) - 1] {
            assert_eq!(w.get(u), brute(&f, u));
        }
    }
}
