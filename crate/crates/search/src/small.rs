//! Kernels for tables on at most six variables packed in one `u64`.

use hosens_core::bits::{flip_in_word, word_mask};

/// Walsh coefficients of a single-word table; entries past `2^n` are 0.
pub fn walsh(t: u64, n: usize) -> [i32; 64] {
    let len = 1usize << n;
    let mut w = [0i32; 64];
    for (x, c) in w.iter_mut().enumerate().take(len) {
        *c = if (t >> x) & 1 == 1 { -1 } else { 1 };
    }
    let mut h = 1;
    while h < len {
        for i in (0..len).step_by(2 * h) {
            for j in i..i + h {
                let (a, b) = (w[j], w[j + h]);
                w[j] = a + b;
                w[j + h] = a - b;
            }
        }
        h *= 2;
    }
    w
}

/// Translates of `t` by every `z < 2^n`, i.e. `out[z](x) = t(x ⊕ z)`.
pub fn translates(t: u64, n: usize) -> [u64; 64] {
    let mut out = [0u64; 64];
    out[0] = t;
    for z in 1..1usize << n {
        let low = z.trailing_zeros() as usize;
        out[z] = flip_in_word(out[z & (z - 1)], low);
    }
    out
}

/// Mask of points where `t` is dual sensitive of order at least 1.
pub fn dual_first_order_mask(t: u64, n: usize) -> u64 {
    let mut m = word_mask(n);
    for i in 0..n {
        m &= !(t ^ flip_in_word(t, i));
    }
    m
}

/// Maximum dual sensitivity order of `t` and the mask of points attaining it.
pub fn max_dual_order(t: u64, n: usize) -> (usize, u64) {
    max_order_masked(t, n, word_mask(n))
}

/// Like [`max_dual_order`] with an initial candidate mask already known to
/// satisfy order 1 (or `word_mask(n)` for no prior knowledge).
pub fn max_order_masked(t: u64, n: usize, start: u64) -> (usize, u64) {
    let tr = translates(t, n);
    let mut cand = start;
    if cand == 0 {
        return (0, 0);
    }
    let mut order = 0;
    for w in 1..=n {
        let mut next = cand;
        for z in hosens_core::bits::subsets_of_size(n, w) {
            let d = t ^ tr[z as usize];
            next &= if w % 2 == 1 { !d } else { d };
            if next == 0 {
                return (order, cand);
            }
        }
        cand = next;
        order = w;
    }
    (order, cand)
}

/// Weight-1 Walsh signature `(W(e_1), ..., W(e_n))`.
pub fn weight_one_signature(w: &[i32; 64], n: usize) -> Vec<i8> {
    (0..n).map(|i| w[1 << i] as i8).collect()
}

/// Walsh values at all weight-`k` points in increasing index order.
pub fn weight_signature(w: &[i32; 64], n: usize, k: usize) -> Vec<i8> {
    hosens_core::bits::subsets_of_size(n, k).map(|u| w[u as usize] as i8).collect()
}
