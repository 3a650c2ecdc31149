//! Walsh values of `f(g_1(x_1), ..., g_s(x_s))` from the spectra of the
//! parts, and the nonlinearity/resiliency bounds that follow.

use serde::Serialize;

use hosens_core::{bits, Error, Result, WalshSpectrum};

use crate::compose::ComposedFunction;

fn check_parts(outer: &WalshSpectrum, inners: &[WalshSpectrum], complemented: &[bool], w: &[bool]) -> Result<usize> {
    let s = outer.n();
    if inners.len() != s || complemented.len() != s {
        return Err(Error::arg(format!(
            "outer has {s} variables but {} inners and {} flags were given",
            inners.len(),
            complemented.len()
        )));
    }
    let u = inners[0].n();
    if inners.iter().any(|g| g.n() != u) {
        return Err(Error::arg("inner functions must share one variable count"));
    }
    if w.len() != s * u {
        return Err(Error::arg(format!("point has {} coordinates, expected {}", w.len(), s * u)));
    }
    Ok(u)
}

/// `2^{-s} Σ_v W_f(v) Π_i W_{v_i g_i}(w_i)` given, per block, the value
/// `W_{g_i}(w_i)` (sign already applied) and whether `w_i = 0`.
fn combine(outer: &WalshSpectrum, u: usize, inner: &[i128], zero: &[bool]) -> i128 {
    let s = outer.n();
    let full = 1i128 << u;
    // Blocks with w_i != 0 force v_i = 1; the others range over both.
    let forced: usize = (0..s).filter(|&i| !zero[i]).map(|i| 1 << i).sum();
    let free: usize = ((1 << s) - 1) ^ forced;
    let mut total = 0i128;
    let mut sub = free;
    loop {
        let v = forced | sub;
        let wf = i128::from(outer.get(v));
        if wf != 0 {
            let mut prod = wf;
            for i in 0..s {
                prod *= if v >> i & 1 == 1 { inner[i] } else { full };
                if prod == 0 {
                    break;
                }
            }
            total += prod;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    total >> s
}

fn block_index(w: &[bool], i: usize, u: usize) -> usize {
    bits::index_of(&w[i * u..(i + 1) * u])
}

/// Exact Walsh value of the cascade at `w`; `complemented[i]` means the
/// `i`-th inner is `g_i ⊕ 1`.
pub fn cascaded_walsh(
    outer: &WalshSpectrum,
    inners: &[WalshSpectrum],
    complemented: &[bool],
    w: &[bool],
) -> Result<i128> {
    let u = check_parts(outer, inners, complemented, w)?;
    let s = outer.n();
    let mut inner = Vec::with_capacity(s);
    let mut zero = Vec::with_capacity(s);
    for i in 0..s {
        let wi = block_index(w, i, u);
        let v = i128::from(inners[i].get(wi));
        inner.push(if complemented[i] { -v } else { v });
        zero.push(wi == 0);
    }
    Ok(combine(outer, u, &inner, &zero))
}

/// Single-term form for balanced inners: only `v_i = [w_i != 0]` survives.
pub fn cascaded_walsh_balanced(
    outer: &WalshSpectrum,
    inners: &[WalshSpectrum],
    complemented: &[bool],
    w: &[bool],
) -> Result<i128> {
    let u = check_parts(outer, inners, complemented, w)?;
    if let Some(i) = inners.iter().position(|g| g.get(0) != 0) {
        return Err(Error::arg(format!("inner {i} is not balanced")));
    }
    let s = outer.n();
    let mut v = 0usize;
    let mut prod = 1i128;
    for i in 0..s {
        let wi = block_index(w, i, u);
        if wi == 0 {
            prod <<= u;
        } else {
            v |= 1 << i;
            let g = i128::from(inners[i].get(wi));
            prod *= if complemented[i] { -g } else { g };
        }
    }
    Ok((i128::from(outer.get(v)) * prod) >> s)
}

impl ComposedFunction {
    /// `W_{f^u}(w)` by recursion over levels; `O(n·2^d)` per point.
    pub fn walsh_at(&self, w: &[bool]) -> Result<i128> {
        if w.len() != self.n() {
            return Err(Error::arg(format!("point has {} coordinates, expected {}", w.len(), self.n())));
        }
        let spec = WalshSpectrum::of(self.base());
        let d = self.d();
        // Level-1 values per block of d coordinates.
        let mut vals: Vec<i128> = w.chunks(d).map(|c| i128::from(spec.get(bits::index_of(c)))).collect();
        let mut zeros: Vec<bool> = w.chunks(d).map(|c| c.iter().all(|b| !b)).collect();
        let mut width = d;
        for level in 2..=self.depth() {
            let flip = self.level_flip(level);
            let mut next_vals = Vec::with_capacity(vals.len() / d);
            let mut next_zeros = Vec::with_capacity(vals.len() / d);
            for (cv, cz) in vals.chunks(d).zip(zeros.chunks(d)) {
                let signed: Vec<i128> =
                    cv.iter().enumerate().map(|(j, &x)| if flip >> j & 1 == 1 { -x } else { x }).collect();
                next_vals.push(combine(&spec, width, &signed, cz));
                next_zeros.push(cz.iter().all(|&z| z));
            }
            vals = next_vals;
            zeros = next_zeros;
            width *= d;
        }
        Ok(vals[0])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CascadeBounds {
    /// Lower bound on NL of the cascade. Needs a balanced outer as well as
    /// balanced inners: otherwise `|W(0)| = 2^{ks-s}|W_f(0)|` can exceed it.
    pub nl_lower: i128,
    /// `(m+1)^2 - 1` for an m-resilient self-composition.
    pub resiliency_lower: i64,
    /// `s·k - (m'-1)^2 - 1`: resiliency of the dual of a self-composition
    /// whose base spectrum vanishes at weight `>= m'`.
    pub support_resiliency: i64,
}

fn nl_bound(nl_f: i128, s: u32, nl_g: i128, k: u32) -> Result<i128> {
    if s == 0 || k == 0 || s * k > 120 {
        return Err(Error::capacity(format!("cascade bounds need 1 <= s, k and s·k <= 120, got s={s} k={k}")));
    }
    if nl_f > 1 << (s - 1) || nl_g > 1 << (k - 1) {
        return Err(Error::arg("nonlinearity above 2^(n-1)"));
    }
    // 2^{ks-k-s-1}(2^s - 2a)(2^k - 2b) = 2^{ks-k-s+1}(2^{s-1} - a)(2^{k-1} - b)
    let ks = s * k;
    let x = (((1i128 << (s - 1)) - nl_f) * ((1i128 << (k - 1)) - nl_g)) << (ks + 1 - k - s);
    Ok((1i128 << (ks - 1)) - x)
}

/// Bounds for an `s`-variable outer with nonlinearity `nl_f` over inners on
/// `k` variables with smallest nonlinearity `min_nl_g`.
pub fn cascade_bounds(nl_f: u64, s: u32, k: u32, min_nl_g: u64, m: i64, m_prime: i64) -> Result<CascadeBounds> {
    Ok(CascadeBounds {
        nl_lower: nl_bound(nl_f.into(), s, min_nl_g.into(), k)?,
        resiliency_lower: (m + 1) * (m + 1) - 1,
        support_resiliency: i64::from(s * k) - (m_prime - 1) * (m_prime - 1) - 1,
    })
}

/// Lower bounds on `NL(f^i)`, `i = 1..=u`, for plain powers of an
/// `n`-variable balanced base.
pub fn nl_power_bounds(nl_f: u64, n: u32, u: u32) -> Result<Vec<i128>> {
    let mut out = vec![i128::from(nl_f)];
    let mut width = n;
    for _ in 1..u {
        let prev = out[out.len() - 1];
        out.push(nl_bound(nl_f.into(), n, prev, width)?);
        width *= n;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hosens_core::TruthTable;

    #[test]
    fn identity_outer() {
        let outer = WalshSpectrum::of(&TruthTable::from_u64(1, 0b10).unwrap());
        let g = TruthTable::and_fn(2).unwrap();
        let gs = WalshSpectrum::of(&g);
        for w in 0..4 {
            let pt = [w & 1 == 1, w & 2 == 2];
            assert_eq!(
                cascaded_walsh(&outer, std::slice::from_ref(&gs), &[false], &pt).unwrap(),
                i128::from(gs.get(w))
            );
        }
    }

    #[test]
    fn perfect_outer_factor() {
        let b = cascade_bounds(4, 3, 3, 1, 0, 0).unwrap();
        assert_eq!(b.nl_lower, 1 << 8);
        let b = cascade_bounds(2, 3, 3, 2, 0, 3).unwrap();
        assert_eq!(b.resiliency_lower, 0);
        assert_eq!(b.support_resiliency, 4);
    }
}
