use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use hosens_core::{max_sensitivity_order, nonlinearity, pdeg, resiliency_order, Error, Result, TruthTable};

use crate::compose::{shifted_compose, shifted_power};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftedProfile {
    pub constants: usize,
    /// Resiliency of `f(f ⊕ a_1, ..., f ⊕ a_d) ⊕ L`.
    pub dual_resiliency: i32,
    pub nonlinearity: u64,
}

/// Exact profile of the dual of every one-level shifted composition of
/// `f`. Requires `d^2 <= 26`.
pub fn shifted_sweep(f: &TruthTable) -> Result<Vec<ShiftedProfile>> {
    let d = f.n();
    (0..1usize << d)
        .into_par_iter()
        .map(|a| {
            let t = shifted_compose(f, a)?.to_truth_table()?;
            let g = hosens_core::dual(&t);
            Ok(ShiftedProfile { constants: a, dual_resiliency: resiliency_order(&g), nonlinearity: nonlinearity(&g) })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CascadeCandidate {
    pub base: u64,
    pub constants: usize,
    pub n: usize,
    pub dual_resiliency: i32,
    pub nonlinearity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CascadeSweep {
    #[serde(skip)]
    hits: Vec<(u64, u64)>,
    pub d: usize,
    pub pairs_scored: u64,
    pub balanced_bases: u64,
    /// Highest nonlinearity among candidates meeting the resiliency floor,
    /// smallest (base, constants) first.
    pub best: Option<CascadeCandidate>,
    pub best_count: u64,
    /// Nonlinearity -> number of (base, constants) pairs meeting the floor.
    pub nl_histogram: BTreeMap<u64, u64>,
}

impl CascadeSweep {
    /// Smallest base (constants 0) meeting the floor with exactly `nl`.
    pub fn first_with_nl(&self, nl: u64) -> Option<u64> {
        self.hits.iter().find(|h| h.1 == nl).map(|h| h.0)
    }
}

/// Closed-form profile of `f(f ⊕ a_1, ..., f ⊕ a_d) ⊕ L` for balanced `f`:
/// only `v = ([w_1 != 0], ..., [w_d != 0])` contributes, so
/// `max |W| = max_v 2^{-d} |W_f(v)| 2^{d(d - wt v)} M^{wt v}` with `M` the
/// largest `|W_f|`, and the composite has `pdeg = pdeg(f)^2`. The
/// constants only change signs.
fn balanced_score(spec: &hosens_core::WalshSpectrum) -> (u64, usize) {
    let d = spec.n();
    let m = i128::from(spec.max_abs());
    let mut max_w = 0i128;
    for v in 1..1usize << d {
        let wf = i128::from(spec.get(v)).abs();
        if wf == 0 {
            continue;
        }
        let t = v.count_ones();
        let val = ((wf << (d * (d - t as usize))) * m.pow(t)) >> d;
        max_w = max_w.max(val);
    }
    let n = d * d;
    let nl = (1i128 << (n - 1)) - max_w / 2;
    (nl as u64, spec.pdeg().pow(2))
}

/// Scores every balanced `d`-variable base and constant vector by the
/// closed form and reports the most nonlinear dual with resiliency at
/// least `min_resiliency`. The best candidate is re-verified on its full
/// table when `d^2 <= 26`.
pub fn balanced_cascade_sweep(d: usize, min_resiliency: i32) -> Result<CascadeSweep> {
    if !(2..=5).contains(&d) {
        return Err(Error::arg(format!("cascade sweep supports 2 <= d <= 5, got {d}")));
    }
    let n = d * d;
    let total = 1u64 << (1 << d);
    let scored: Vec<(u64, u64, i32)> = (0..total)
        .into_par_iter()
        .filter_map(|t| {
            let f = TruthTable::from_u64(d, t).ok()?;
            if !f.is_balanced() {
                return None;
            }
            let (nl, pd) = balanced_score(&hosens_core::walsh_transform(&f));
            Some((t, nl, n as i32 - pd as i32 - 1))
        })
        .collect();
    let balanced = scored.len() as u64;
    let consts = 1u64 << d;
    let best_nl = scored.iter().filter(|s| s.2 >= min_resiliency).map(|s| s.1).max();
    let hits: Vec<(u64, u64)> = scored.iter().filter(|s| s.2 >= min_resiliency).map(|s| (s.0, s.1)).collect();
    let mut nl_histogram = BTreeMap::new();
    for h in &hits {
        *nl_histogram.entry(h.1).or_insert(0) += consts;
    }
    let mut best = None;
    let mut best_count = 0;
    if let Some(nl) = best_nl {
        let hits: Vec<&(u64, u64, i32)> = scored.iter().filter(|s| s.2 >= min_resiliency && s.1 == nl).collect();
        best_count = hits.len() as u64 * consts;
        let &(t, nl, res) = hits[0];
        let cand = CascadeCandidate { base: t, constants: 0, n, dual_resiliency: res, nonlinearity: nl };
        if n <= hosens_core::MAX_VARS {
            let f = TruthTable::from_u64(d, t)?;
            let g = hosens_core::dual(&shifted_compose(&f, 0)?.to_truth_table()?);
            if nonlinearity(&g) != nl || resiliency_order(&g) != res {
                return Err(Error::arg("closed-form score disagrees with the materialized table"));
            }
        }
        best = Some(cand);
    }
    Ok(CascadeSweep {
        d,
        pairs_scored: balanced * consts,
        balanced_bases: balanced,
        best,
        best_count,
        nl_histogram,
        hits,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCapCheck {
    pub compositions: u64,
    /// (d, base table, u, constants) of compositions reaching order d.
    pub violations: Vec<(usize, u64, usize, usize)>,
}

/// For every base on `d <= max_d` variables with `pdeg < d`, every depth
/// `u <= max_u` and every slot-complement pattern (the same at each
/// level), checks that the composition is not `d`-th order sensitive.
pub fn order_cap_spot_check(max_d: usize, max_u: usize) -> Result<OrderCapCheck> {
    let mut compositions = 0;
    let mut violations = Vec::new();
    for d in 1..=max_d {
        for t in 0..1u64 << (1 << d) {
            let f = TruthTable::from_u64(d, t)?;
            if pdeg(&f) >= d {
                continue;
            }
            for u in 1..=max_u {
                let patterns = if u == 1 { 1 } else { 1usize << d };
                for a in 0..patterns {
                    let c = shifted_power(&f, u, a)?.to_truth_table()?;
                    compositions += 1;
                    if max_sensitivity_order(&c).order >= d {
                        violations.push((d, t, u, a));
                    }
                }
            }
        }
    }
    Ok(OrderCapCheck { compositions, violations })
}
