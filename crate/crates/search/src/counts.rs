//! Profile counts for `n <= 6` by exhaustive or half-pairing enumeration.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::small::{
    dual_first_order_mask, max_dual_order, max_order_masked, walsh, weight_one_signature, weight_signature,
};
use hosens_core::{max_sensitivity_order, pdeg, TruthTable};

/// Counts of functions with dual order at least `k`, for `k = 1..=kmax`.
fn cumulative(hist: &BTreeMap<usize, u64>, kmax: usize) -> BTreeMap<usize, u64> {
    (1..=kmax).map(|k| (k, hist.range(k..).map(|(_, c)| c).sum())).collect()
}

fn histogram(orders: impl Iterator<Item = usize>) -> BTreeMap<usize, u64> {
    let mut h = BTreeMap::new();
    for o in orders {
        *h.entry(o).or_insert(0) += 1;
    }
    h
}

/// Dual-order histogram of all balanced 4-variable functions.
pub fn balanced_n4_histogram() -> BTreeMap<usize, u64> {
    histogram((0..1u64 << 16).filter(|t| t.count_ones() == 8).map(|t| max_dual_order(t, 4).0))
}

/// Number of balanced 4-variable functions of dual order at least `k`,
/// for `k = 1, 2, 3`.
pub fn count_profiles_n4() -> BTreeMap<usize, u64> {
    cumulative(&balanced_n4_histogram(), 3)
}

/// The same counts through the dual side: functions with `pdeg <= 3` and
/// sensitivity order at least `k`, computed with the generic table code.
pub fn count_profiles_n4_via_duals() -> BTreeMap<usize, u64> {
    let orders = (0..1u64 << 16).filter_map(|t| {
        let f = TruthTable::from_u64(4, t).expect("n=4");
        (pdeg(&f) <= 3).then(|| max_sensitivity_order(&f).order)
    });
    cumulative(&histogram(orders), 3)
}

/// Every 1-resilient function on five variables, ascending.
///
/// A 5-variable table is `f1 || f2` with `f1` the half where `x_5 = 0`.
/// It is 1-resilient exactly when both halves are balanced and
/// `W_{f2}(e_i) = -W_{f1}(e_i)` for `i <= 4`.
pub fn resilient_n5() -> Vec<u32> {
    let mut classes: HashMap<Vec<i8>, Vec<u32>> = HashMap::new();
    let balanced: Vec<u32> = (0..1u32 << 16).filter(|t| t.count_ones() == 8).collect();
    for &t in &balanced {
        let sig = weight_one_signature(&walsh(t as u64, 4), 4);
        classes.entry(sig).or_default().push(t);
    }
    let mut out: Vec<u32> = balanced
        .par_iter()
        .flat_map_iter(|&f1| {
            let neg: Vec<i8> = weight_one_signature(&walsh(f1 as u64, 4), 4).iter().map(|v| -v).collect();
            classes.get(&neg).into_iter().flatten().map(move |&f2| f1 | (f2 << 16))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Dual-order histogram over all 1-resilient 5-variable functions.
pub fn resilient_n5_histogram(resilient: &[u32]) -> BTreeMap<usize, u64> {
    let orders: Vec<usize> = resilient.par_iter().map(|&t| max_dual_order(t as u64, 5).0).collect();
    histogram(orders.into_iter())
}

/// Number of 1-resilient 5-variable functions of dual order at least `k`,
/// for `k = 1..=4`.
pub fn count_profiles_n5() -> BTreeMap<usize, u64> {
    cumulative(&resilient_n5_histogram(&resilient_n5()), 4)
}

/// How the halves of the found 6-variable functions split.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfCaseSplit {
    /// Both halves 2-resilient.
    pub both_two_resilient: u64,
    /// Both halves exactly 1-resilient.
    pub both_exactly_one_resilient: u64,
}

/// Outcome of the 6-variable search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N6Search {
    /// Count of 2-resilient functions with dual order at least `k`.
    pub counts: BTreeMap<usize, u64>,
    /// Histogram by exact dual order (order 0 functions are not generated).
    pub histogram: BTreeMap<usize, u64>,
    /// Every 2-resilient function of dual order at least 1, ascending.
    pub functions: Vec<u64>,
    pub split: HalfCaseSplit,
    /// Pairs of halves offered to the final check.
    pub candidate_pairs: u64,
}

struct Half {
    table: u32,
    ds: u32,
    two_resilient: bool,
}

/// All 2-resilient 6-variable functions of dual order at least 1.
///
/// `f = f1 || f2` is 2-resilient exactly when both halves are 1-resilient
/// and `W_{f2}(u) = -W_{f1}(u)` for `wt(u) = 2`. It is dual sensitive at
/// `(x, b)` exactly when the half selected by `b` is dual sensitive at `x`
/// and `f1(x) = f2(x)`, so one half must be dual sensitive somewhere.
pub fn search_n6(resilient: &[u32]) -> N6Search {
    let halves: Vec<(Vec<i8>, Half)> = resilient
        .par_iter()
        .map(|&t| {
            let sig = weight_signature(&walsh(t as u64, 5), 5, 2);
            let two = sig.iter().all(|&v| v == 0);
            let ds = dual_first_order_mask(t as u64, 5) as u32;
            (sig, Half { table: t, ds, two_resilient: two })
        })
        .collect();
    // class -> (dual sensitive halves, other halves)
    let mut classes: HashMap<&[i8], (Vec<&Half>, Vec<&Half>)> = HashMap::new();
    for (sig, h) in &halves {
        let e = classes.entry(sig.as_slice()).or_default();
        if h.ds != 0 {
            e.0.push(h);
        } else {
            e.1.push(h);
        }
    }
    let per_first: Vec<(Vec<(u64, usize)>, u64)> = halves
        .par_iter()
        .map(|(sig, h1)| {
            let neg: Vec<i8> = sig.iter().map(|v| -v).collect();
            let mut found = Vec::new();
            let mut tried = 0u64;
            let Some((ds, other)) = classes.get(neg.as_slice()) else {
                return (found, 0);
            };
            let partners: Box<dyn Iterator<Item = &&Half>> =
                if h1.ds != 0 { Box::new(ds.iter().chain(other.iter())) } else { Box::new(ds.iter()) };
            for h2 in partners {
                tried += 1;
                let agree = !(h1.table ^ h2.table);
                let lo = (h1.ds & agree) as u64;
                let hi = (h2.ds & agree) as u64;
                if lo | hi == 0 {
                    continue;
                }
                let t = h1.table as u64 | ((h2.table as u64) << 32);
                let (order, _) = max_order_masked(t, 6, lo | (hi << 32));
                found.push((t, order));
            }
            (found, tried)
        })
        .collect();
    let mut all: Vec<(u64, usize)> = Vec::new();
    let mut candidate_pairs = 0;
    for (f, t) in per_first {
        all.extend(f);
        candidate_pairs += t;
    }
    all.sort_unstable();
    let two: std::collections::HashSet<u32> =
        halves.iter().filter(|(_, h)| h.two_resilient).map(|(_, h)| h.table).collect();
    let mut split = HalfCaseSplit::default();
    for &(t, _) in &all {
        let a = two.contains(&(t as u32));
        let b = two.contains(&((t >> 32) as u32));
        match (a, b) {
            (true, true) => split.both_two_resilient += 1,
            (false, false) => split.both_exactly_one_resilient += 1,
            _ => unreachable!("halves share their weight-2 signature up to sign"),
        }
    }
    let hist = histogram(all.iter().map(|&(_, o)| o));
    N6Search {
        counts: cumulative(&hist, 6),
        histogram: hist,
        functions: all.into_iter().map(|(t, _)| t).collect(),
        split,
        candidate_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hosens_core::{max_dual_sensitivity_order, resiliency_order};

    #[test]
    fn n4_pipelines_agree() {
        assert_eq!(count_profiles_n4(), count_profiles_n4_via_duals());
    }

    #[test]
    fn n5_pairing_is_exact_on_a_sample() {
        let res = resilient_n5();
        assert!(res.windows(2).all(|w| w[0] < w[1]));
        let set: std::collections::HashSet<u32> = res.iter().copied().collect();
        // every 1-resilient table among a strided sample must be in the list
        for t in (0..u32::MAX).step_by(65_537) {
            let f = TruthTable::from_u64(5, t as u64).unwrap();
            assert_eq!(resiliency_order(&f) >= 1, set.contains(&t), "{t:#x}");
        }
        for &t in res.iter().step_by(997) {
            let f = TruthTable::from_u64(5, t as u64).unwrap();
            assert!(resiliency_order(&f) >= 1);
            assert_eq!(max_dual_order(t as u64, 5).0, max_dual_sensitivity_order(&f).order);
        }
    }
}
