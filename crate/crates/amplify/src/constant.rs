use serde::Serialize;

use hosens_core::{dual, Error, Result, TruthTable};

use crate::compose::{modified_power, ComposedFunction};

/// Balanced function dual sensitive at `0` of order `n - 1` (odd `n`) or
/// `n - 2` (even `n`), the largest orders a balanced function can reach.
///
/// Points at odd distance `<= k` from `0` take value 0 and points at even
/// distance `<= k` take value 1 (including `f(0) = 0`). The remaining
/// points are filled in ascending index order, zeros first, until the
/// table is balanced.
pub fn max_order_balanced(n: usize) -> Result<TruthTable> {
    if n < 2 {
        return Err(Error::arg("max_order_balanced needs n >= 2"));
    }
    if n > 26 {
        return Err(Error::capacity(format!("{n} variables cannot be materialized")));
    }
    let k = if n % 2 == 1 { n - 1 } else { n - 2 };
    let len = 1usize << n;
    let mut value: Vec<Option<bool>> = (0..len)
        .map(|x| {
            let d = x.count_ones() as usize;
            match d {
                0 => Some(false),
                d if d <= k => Some(d % 2 == 0),
                _ => None,
            }
        })
        .collect();
    let zeros = value.iter().filter(|v| **v == Some(false)).count();
    let mut need_zeros = (len / 2).checked_sub(zeros).ok_or_else(|| Error::arg("cannot balance"))?;
    for v in value.iter_mut().filter(|v| v.is_none()) {
        *v = Some(need_zeros == 0);
        need_zeros = need_zeros.saturating_sub(1);
    }
    let bits: Vec<bool> = value.into_iter().map(|v| v.unwrap_or(false)).collect();
    TruthTable::from_bits(n, &bits)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyProfile {
    pub base_vars: usize,
    pub n: usize,
    /// Sensitivity order guaranteed at the repeated witness `0`.
    pub order: usize,
    /// `pdeg(base)^u`.
    pub pdeg: usize,
}

/// `k`-th order sensitive functions with `pdeg` polynomially below `n`:
/// the dual of `max_order_balanced(k + 2)` amplified `u` times at
/// witness `0`. For even `k` the profile is `((k+2)^u, k, (k+1)^u)`; for
/// odd `k` the base has order `k + 1`, which gives `((k+2)^u, k+1, (k+1)^u)`.
pub fn constant_order_family(k: usize, u: usize) -> Result<(ComposedFunction, FamilyProfile)> {
    if k == 0 || u == 0 {
        return Err(Error::arg("constant_order_family needs k >= 1 and u >= 1"));
    }
    let d = k + 2;
    let base = dual(&max_order_balanced(d)?);
    let f = modified_power(&base, u, 0)?;
    let order = if d % 2 == 1 { d - 1 } else { d - 2 };
    let profile = FamilyProfile { base_vars: d, n: f.n(), order, pdeg: (d - 1).pow(u as u32) };
    Ok((f, profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hosens_core::{max_dual_sensitivity_order, pdeg, walsh_transform};

    #[test]
    fn orders_and_balance() {
        for n in 2..=9 {
            let g = max_order_balanced(n).unwrap();
            assert!(g.is_balanced(), "n={n}");
            let want = if n % 2 == 1 { n - 1 } else { n - 2 };
            assert_eq!(max_dual_sensitivity_order(&g).order, want, "n={n}");
            assert!(pdeg(&dual(&g)) < n);
            assert_eq!(walsh_transform(&g).get(0), 0);
        }
    }

    #[test]
    fn small_profiles() {
        let (f, p) = constant_order_family(2, 2).unwrap();
        assert_eq!((p.n, p.order, p.pdeg), (16, 2, 9));
        let t = f.to_truth_table().unwrap();
        assert_eq!(pdeg(&t), 9);
        assert!(hosens_core::is_k_order_sensitive_at(&t, 0, 2));
        let (_, p) = constant_order_family(1, 2).unwrap();
        assert_eq!((p.n, p.order, p.pdeg), (9, 2, 4));
    }
}
