use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{flip_in_word, subsets_of_size, word_mask};
use crate::table::PAR_WORDS;
use crate::TruthTable;

/// A maximal order together with the lowest point attaining it.
///
/// `witness` is `None` exactly when `order` is 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderWitness {
    pub order: usize,
    pub witness: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// Every flip of 1..=k bits changes the value.
    Plain,
    /// Odd flips keep the value, even flips change it.
    Dual,
}

impl Kind {
    #[inline]
    fn holds(self, fx: bool, fxz: bool, flips: usize) -> bool {
        match self {
            Kind::Plain => fx != fxz,
            Kind::Dual => (fx != fxz) == (flips % 2 == 0),
        }
    }
}

/// Number of single-bit flips at `x` that change `f`.
pub fn sensitivity_at(f: &TruthTable, x: usize) -> usize {
    let fx = f.bit(x);
    (0..f.n()).filter(|&i| f.bit(x ^ (1 << i)) != fx).count()
}

/// `s(f)` with the lowest point index attaining it.
pub fn sensitivity(f: &TruthTable) -> (usize, usize) {
    let n = f.n();
    let words = f.words();
    let valid = word_mask(n);
    let per_word = |j: usize| -> (u32, u64) {
        let w = words[j];
        let mut planes = [0u64; 5];
        for i in 0..n {
            let partner = if i < 6 { flip_in_word(w, i) } else { words[j ^ (1 << (i - 6))] };
            let mut carry = w ^ partner;
            for p in planes.iter_mut() {
                let t = *p & carry;
                *p ^= carry;
                carry = t;
                if carry == 0 {
                    break;
                }
            }
        }
        let mut cand = valid;
        let mut val = 0u32;
        for p in (0..5).rev() {
            let t = cand & planes[p];
            if t != 0 {
                cand = t;
                val |= 1 << p;
            }
        }
        (val, cand)
    };
    let best: Vec<(u32, u64)> = if words.len() >= PAR_WORDS {
        (0..words.len()).into_par_iter().map(per_word).collect()
    } else {
        (0..words.len()).map(per_word).collect()
    };
    let top = best.iter().map(|b| b.0).max().unwrap_or(0);
    let j = best.iter().position(|b| b.0 == top).unwrap_or(0);
    (top as usize, (j << 6) | best[j].1.trailing_zeros() as usize)
}

fn all_hold(f: &TruthTable, x: usize, k: usize, kind: Kind) -> bool {
    let fx = f.bit(x);
    (1..=k.min(f.n())).all(|w| subsets_of_size(f.n(), w).all(|z| kind.holds(fx, f.bit(x ^ z as usize), w)))
}

/// Whether every flip of between 1 and `k` coordinates at `x` changes `f`.
pub fn is_k_order_sensitive_at(f: &TruthTable, x: usize, k: usize) -> bool {
    all_hold(f, x, k, Kind::Plain)
}

/// Whether at `x` every odd flip of at most `k` coordinates keeps `f` and
/// every even one changes it.
pub fn is_k_order_dual_sensitive_at(f: &TruthTable, x: usize, k: usize) -> bool {
    all_hold(f, x, k, Kind::Dual)
}

/// Local order at `x`, assuming every flip of weight below `from` holds.
fn local_order(f: &TruthTable, x: usize, kind: Kind, from: usize) -> usize {
    let n = f.n();
    let fx = f.bit(x);
    for w in from.max(1)..=n {
        if !subsets_of_size(n, w).all(|z| kind.holds(fx, f.bit(x ^ z as usize), w)) {
            return w - 1;
        }
    }
    n
}

/// Largest `k` with `f` `k`-th order sensitive at `x`.
pub fn sensitivity_order_at(f: &TruthTable, x: usize) -> usize {
    local_order(f, x, Kind::Plain, 1)
}

/// Largest `k` with `f` `k`-th order dual sensitive at `x`.
pub fn dual_sensitivity_order_at(f: &TruthTable, x: usize) -> usize {
    local_order(f, x, Kind::Dual, 1)
}

/// Points where the flip by `z` satisfies the condition, as packed words.
fn flip_mask(f: &TruthTable, z: usize, kind: Kind) -> Vec<u64> {
    let t = f.translate(z);
    let valid = word_mask(f.n());
    let invert = kind == Kind::Dual && z.count_ones() % 2 == 1;
    f.words()
        .iter()
        .zip(t.words())
        .map(|(a, b)| {
            let d = a ^ b;
            if invert {
                !d & valid
            } else {
                d
            }
        })
        .collect()
}

fn lowest(words: &[u64]) -> Option<usize> {
    words.iter().position(|&w| w != 0).map(|j| (j << 6) | words[j].trailing_zeros() as usize)
}

fn max_order(f: &TruthTable, kind: Kind) -> OrderWitness {
    let n = f.n();
    let nw = f.words().len();
    let mut cand = vec![word_mask(n); nw];
    let mut level = 0;
    // Filter whole levels with table-wide masks while candidates are dense.
    while level < n {
        let count: u64 = cand.iter().map(|w| w.count_ones() as u64).sum();
        if level >= 1 && count <= 4 * nw as u64 {
            break;
        }
        let w = level + 1;
        let mut next = cand.clone();
        for z in subsets_of_size(n, w) {
            let m = flip_mask(f, z as usize, kind);
            let mut any = 0u64;
            for (c, m) in next.iter_mut().zip(&m) {
                *c &= m;
                any |= *c;
            }
            if any == 0 {
                break;
            }
        }
        if lowest(&next).is_none() {
            return OrderWitness { order: level, witness: if level == 0 { None } else { lowest(&cand) } };
        }
        cand = next;
        level = w;
    }
    let mut best = level;
    let mut best_x = lowest(&cand).expect("candidate set is non-empty");
    if best < n {
        for x in TruthTable::from_words(n, cand).expect("same shape").ones() {
            let o = local_order(f, x, kind, level + 1);
            if o > best {
                best = o;
                best_x = x;
                if best == n {
                    break;
                }
            }
        }
    }
    OrderWitness { order: best, witness: (best > 0).then_some(best_x) }
}

/// Largest `k` such that `f` is `k`-th order sensitive at some point.
pub fn max_sensitivity_order(f: &TruthTable) -> OrderWitness {
    max_order(f, Kind::Plain)
}

/// Largest `k` such that `f` is `k`-th order dual sensitive at some point.
pub fn max_dual_sensitivity_order(f: &TruthTable) -> OrderWitness {
    max_order(f, Kind::Dual)
}

/// `f ⊕ L_n`.
pub fn dual(f: &TruthTable) -> TruthTable {
    f.xor(&TruthTable::parity_fn(f.n()).expect("valid n")).expect("same n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(f: &TruthTable, kind: Kind) -> OrderWitness {
        let mut best = OrderWitness { order: 0, witness: None };
        for x in 0..f.len() {
            let o = (0..=f.n()).rev().find(|&k| all_hold(f, x, k, kind)).unwrap();
            if o > best.order {
                best = OrderWitness { order: o, witness: Some(x) };
            }
        }
        best
    }

    #[test]
    fn basic_functions() {
        for n in 1..=7 {
            let p = TruthTable::parity_fn(n).unwrap();
            assert_eq!(sensitivity(&p).0, n);
            assert_eq!(max_sensitivity_order(&p).order, 1.min(n));
            let a = TruthTable::and_fn(n).unwrap();
            let o = max_sensitivity_order(&a);
            assert_eq!(o.order, n);
            if n > 1 {
                assert_eq!(o.witness, Some((1 << n) - 1));
            }
            assert_eq!(sensitivity(&TruthTable::zero(n).unwrap()).0, 0);
            assert_eq!(dual(&p), TruthTable::zero(n).unwrap());
        }
        assert_eq!(sensitivity(&TruthTable::and_fn(3).unwrap()), (3, 7));
        assert_eq!(max_dual_sensitivity_order(&TruthTable::zero(4).unwrap()).order, 1);
    }

    #[test]
    fn maj_xor_parity() {
        let maj = TruthTable::majority(3).unwrap();
        let g = dual(&maj);
        assert_eq!(max_sensitivity_order(&g).order, 2);
        assert_eq!(max_dual_sensitivity_order(&maj).order, 2);
    }

    #[test]
    fn masks_agree_with_pointwise() {
        for seed in 0..40usize {
            for n in [3, 5, 7, 8] {
                let f = TruthTable::from_fn(n, |x| (x.wrapping_mul(2654435761).wrapping_add(seed * 977) >> 5) % 3 == 0)
                    .unwrap();
                for kind in [Kind::Plain, Kind::Dual] {
                    assert_eq!(max_order(&f, kind), brute_order(&f, kind), "n={n} seed={seed}");
                }
            }
        }
    }

    #[test]
    fn sensitivity_matches_pointwise() {
        for n in [2, 6, 9, 13] {
            let f = TruthTable::from_fn(n, |x| (x * 7919 + 13) % 17 < 8).unwrap();
            let m = (0..f.len()).map(|x| sensitivity_at(&f, x)).max().unwrap();
            let w = (0..f.len()).find(|&x| sensitivity_at(&f, x) == m).unwrap();
            assert_eq!(sensitivity(&f), (m, w));
        }
    }
}
