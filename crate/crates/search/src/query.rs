use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::counts::{resilient_n5, search_n6};
use crate::small::{max_dual_order, walsh};
use hosens_core::{Error, Result, TruthTable};

/// A request for all `n`-variable functions with resiliency at least
/// `min_resiliency` and dual sensitivity order in the requested range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileQuery {
    pub n: usize,
    pub min_resiliency: i32,
    /// Keep functions of dual order at least this.
    pub min_dual_order: usize,
    /// Keep only functions of exactly this dual order.
    pub exact_dual_order: Option<usize>,
    pub count_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryResult {
    pub query: ProfileQuery,
    pub count: u64,
    /// Exact dual-order histogram of the enumerated resilient functions.
    pub histogram: BTreeMap<usize, u64>,
    /// Matching tables, ascending; empty when `count_only`.
    pub functions: Vec<u64>,
}

impl ProfileQuery {
    fn keeps(&self, order: usize) -> bool {
        order >= self.min_dual_order && self.exact_dual_order.is_none_or(|k| k == order)
    }
}

fn resiliency(t: u64, n: usize) -> i32 {
    let w = walsh(t, n);
    if w[0] != 0 {
        return -1;
    }
    (1..1usize << n).filter(|&u| w[u] != 0).map(|u| u.count_ones() as i32).min().unwrap_or(n as i32) - 1
}

/// Runs a profile query. Supported: any resiliency for `n <= 4`,
/// resiliency at least 1 for `n = 5`, and resiliency at least 2 with dual
/// order at least 1 for `n = 6`.
pub fn run_query(q: &ProfileQuery) -> Result<QueryResult> {
    if q.n == 0 || q.min_resiliency >= q.n as i32 {
        return Err(Error::arg("resiliency must be below n"));
    }
    if q.exact_dual_order.is_some_and(|k| k > q.n) {
        return Err(Error::arg("dual order cannot exceed n"));
    }
    let n = q.n;
    let tables: Vec<(u64, usize)> = match n {
        1..=4 => (0..1u64 << (1 << n))
            .filter(|&t| resiliency(t, n) >= q.min_resiliency)
            .map(|t| (t, max_dual_order(t, n).0))
            .collect(),
        5 if q.min_resiliency >= 1 => resilient_n5()
            .into_iter()
            .map(|t| t as u64)
            .filter(|&t| resiliency(t, 5) >= q.min_resiliency)
            .map(|t| (t, max_dual_order(t, 5).0))
            .collect(),
        6 if q.min_resiliency >= 2 && (q.min_dual_order >= 1 || q.exact_dual_order.is_some_and(|k| k >= 1)) => {
            search_n6(&resilient_n5())
                .functions
                .into_iter()
                .filter(|&t| resiliency(t, 6) >= q.min_resiliency)
                .map(|t| (t, max_dual_order(t, 6).0))
                .collect()
        }
        _ => return Err(Error::arg(format!("no exhaustive search for n={n} with resiliency {}", q.min_resiliency))),
    };
    let mut histogram = BTreeMap::new();
    for &(_, o) in &tables {
        *histogram.entry(o).or_insert(0) += 1;
    }
    let kept: Vec<u64> = tables.iter().filter(|(_, o)| q.keeps(*o)).map(|&(t, _)| t).collect();
    Ok(QueryResult {
        query: q.clone(),
        count: kept.len() as u64,
        histogram,
        functions: if q.count_only { Vec::new() } else { kept },
    })
}

impl QueryResult {
    pub fn tables(&self) -> Vec<TruthTable> {
        self.functions.iter().map(|&t| TruthTable::from_u64(self.query.n, t).expect("n <= 6")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: usize, m: i32, k: usize) -> ProfileQuery {
        ProfileQuery { n, min_resiliency: m, min_dual_order: k, exact_dual_order: None, count_only: false }
    }

    #[test]
    fn n4_counts() {
        assert_eq!(run_query(&q(4, 0, 1)).unwrap().count, 3760);
        assert_eq!(run_query(&q(4, 0, 2)).unwrap().count, 256);
        let mut e = q(4, 0, 0);
        e.exact_dual_order = Some(1);
        assert_eq!(run_query(&e).unwrap().count, 3760 - 256);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(run_query(&q(7, 2, 1)).is_err());
        assert!(run_query(&q(4, 4, 1)).is_err());
        assert!(run_query(&q(5, 0, 1)).is_err());
    }
}
