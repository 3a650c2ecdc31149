//! Small bit-twiddling helpers for point indices and packed tables.

/// `LO_MASKS[i]` has bit `x` set for every `x < 64` with `x_{i+1} = 0`.
pub const LO_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Parity of the 6-bit index of every bit position in a word.
pub const PARITY_WORD: u64 = 0x6996_9669_9669_6996;

/// Mask of the valid bits of a single-word table on `n <= 6` variables.
pub fn word_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

/// Swap the two halves selected by variable `i` inside one word (`i < 6`).
#[inline]
pub fn flip_in_word(w: u64, i: usize) -> u64 {
    let s = 1u32 << i;
    let m = LO_MASKS[i];
    ((w >> s) & m) | ((w & m) << s)
}

/// Hamming weight of a point index.
#[inline]
pub fn wt(x: usize) -> usize {
    x.count_ones() as usize
}

/// Index of a point given as bits `x_1, ..., x_n`.
pub fn index_of(bits: &[bool]) -> usize {
    bits.iter().enumerate().fold(0usize, |acc, (j, &b)| acc | ((b as usize) << j))
}

/// The `n` coordinates of point index `x`, starting with `x_1`.
pub fn point_of(x: usize, n: usize) -> Vec<bool> {
    (0..n).map(|j| (x >> j) & 1 == 1).collect()
}

/// Next integer with the same popcount (Gosper's hack).
#[inline]
pub fn next_same_weight(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// All subsets of `{0..n}` with exactly `k` elements, as bit masks in
/// increasing numeric order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let end = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut cur = if k == 0 {
        Some(0)
    } else if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let v = cur?;
        cur = if v == 0 {
            None
        } else {
            let nx = next_same_weight(v);
            if nx < end && nx > v {
                Some(nx)
            } else {
                None
            }
        };
        Some(v)
    })
}

/// Binomial coefficient as `u64` (saturating).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc.min(u64::MAX as u128) as u64
}
