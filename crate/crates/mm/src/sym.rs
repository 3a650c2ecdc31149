use hosens_core::{Error, Result, TruthTable, MAX_VARS};

/// `sym^k_m`: the XOR of every monomial of degree `1..=k` on `m` variables.
///
/// On a point of weight `w` this is the parity of `Σ_{j=1..k} C(w, j)`.
/// `C(w, j)` is odd exactly when the bits of `j` are a subset of those of
/// `w`, which avoids big binomials.
pub fn sym_k(m: usize, k: usize) -> Result<TruthTable> {
    if m == 0 || m > MAX_VARS {
        return Err(Error::capacity(format!("unsupported variable count {m}")));
    }
    if k == 0 || k > m {
        return Err(Error::arg(format!("need 1 <= k <= m, got k={k}, m={m}")));
    }
    let by_weight: Vec<bool> = (0..=m).map(|w| (1..=k).filter(|&j| j & w == j).count() % 2 == 1).collect();
    TruthTable::from_fn(m, |y| by_weight[y.count_ones() as usize])
}
