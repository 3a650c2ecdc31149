use hosens_core::{is_k_order_sensitive_at, pdeg, TruthTable};
use serde::{Deserialize, Serialize};

use crate::build::{check_korder_sizes, korder_witness, ladder_seed, verify_full_sensitivity};
use crate::error::{MmError, Result};
use crate::ledger::{LedgerEntry, TermLedger, YForm};
use crate::spec::{mm_truth_table, MMSpec};
use crate::sym::sym_k;

/// Result of a degree ladder. `reduction` counts completed levels beyond the
/// seed; `pdeg` is measured on the final table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Ladder {
    pub spec: MMSpec,
    pub ledger: TermLedger,
    pub reduction: usize,
    pub pdeg: usize,
    pub seed_pdeg: usize,
}

/// Levels allowed for the first-order ladder: the largest `z` with
/// `Σ_{i<z} 2·3^i = 3^z - 1 <= n1 - 1`.
pub fn ladder_budget(n1: usize) -> usize {
    let mut z = 0;
    while 3usize.pow(z as u32 + 1) <= n1 {
        z += 1;
    }
    z
}

/// Levels allowed for the order-`k` ladder: the largest `p` with
/// `k (2^k - 1)^p <= n1 - k`; `k = 1` uses [`ladder_budget`].
pub fn korder_budget(n1: usize, k: usize) -> usize {
    if k == 1 {
        return ladder_budget(n1);
    }
    if k > n1 || k > n1 - k {
        return 0;
    }
    let mut p = 0u32;
    while (k as u128) * ((1u128 << k) - 1).pow(p + 1) <= (n1 - k) as u128 {
        p += 1;
    }
    p as usize
}

/// Real multilinear coefficients of `h` (Möbius transform over the reals).
fn coefficients(h: &[i8]) -> Vec<i64> {
    let mut c: Vec<i64> = h.iter().map(|&v| v as i64).collect();
    let mut bit = 1;
    while bit < c.len() {
        for s in 0..c.len() {
            if s & bit != 0 {
                c[s] -= c[s ^ bit];
            }
        }
        bit <<= 1;
    }
    c
}

fn degree(c: &[i64]) -> Option<usize> {
    c.iter().enumerate().filter(|(_, &v)| v != 0).map(|(s, _)| s.count_ones() as usize).max()
}

/// Degree reduction on `h`, the `±1/0` weight of the top-degree leaf over
/// `F_2^{n1}`. A monomial `c·X^M` is cancelled by setting the points of
/// `(Π_{M\Z} x)(Π_Z (1 - x))` to `-sign(c)(-1)^{|Z|}`, with `|Z| = zeros`.
struct Engine {
    n1: usize,
    zeros: usize,
    h: Vec<i8>,
    locked: Vec<bool>,
}

impl Engine {
    fn degree(&self) -> usize {
        degree(&coefficients(&self.h)).unwrap_or(0)
    }

    /// Candidate zero sets inside `m`: windows of consecutive positions from
    /// the top down, then all remaining subsets in descending order.
    fn zero_sets(&self, m: usize) -> Vec<usize> {
        let pos: Vec<usize> = (0..self.n1).rev().filter(|&i| m >> i & 1 == 1).collect();
        let r = self.zeros;
        let mut out = Vec::new();
        for top in (r - 1..self.n1).rev() {
            let w = ((1usize << r) - 1) << (top + 1 - r);
            if w & m == w {
                out.push(w);
            }
        }
        let mut idx: Vec<usize> = (0..r).collect();
        if pos.len() >= r {
            loop {
                let z = idx.iter().fold(0usize, |acc, &i| acc | 1 << pos[i]);
                if !out.contains(&z) {
                    out.push(z);
                }
                let mut j = r;
                while j > 0 && idx[j - 1] == pos.len() - r + j - 1 {
                    j -= 1;
                }
                if j == 0 {
                    break;
                }
                idx[j - 1] += 1;
                for t in j..r {
                    idx[t] = idx[t - 1] + 1;
                }
            }
        }
        out
    }

    fn support(&self, ones: usize, free: usize) -> impl Iterator<Item = usize> {
        let mut s = 0usize;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let a = ones | s;
            s = s.wrapping_sub(free) & free;
            done = s == 0;
            Some(a)
        })
    }

    /// One level: cancels every monomial of the current top degree. Returns
    /// the entries added, or `None` (with `h` unchanged) when some monomial
    /// finds no free support.
    fn level(&mut self, level: usize, forms: (YForm, YForm), y_degree: usize) -> Option<Vec<LedgerEntry>> {
        let full = (1usize << self.n1) - 1;
        let c = coefficients(&self.h);
        let d = degree(&c)?;
        let mut tops: Vec<(usize, i64)> = c
            .iter()
            .enumerate()
            .filter(|(s, &v)| v != 0 && s.count_ones() as usize == d)
            .map(|(s, &v)| (s, v))
            .collect();
        tops.sort_by_key(|t| std::cmp::Reverse(t.0));
        let saved = self.h.clone();
        let mut entries = Vec::new();
        for (m, coef) in tops {
            let parity = if self.zeros % 2 == 0 { 1 } else { -1 };
            let value = (-coef.signum() * parity) as i8;
            for _ in 0..coef.unsigned_abs() {
                let free = full & !m;
                let found = self
                    .zero_sets(m)
                    .into_iter()
                    .find(|&z| self.support(m & !z, free).all(|a| self.h[a] == 0 && !self.locked[a]));
                let Some(z) = found else {
                    self.h = saved;
                    return None;
                };
                let pts: Vec<usize> = self.support(m & !z, free).collect();
                for a in pts {
                    self.h[a] = value;
                }
                let form = if value > 0 { forms.0 } else { forms.1 };
                entries.push(LedgerEntry::new(self.n1, level, value, m & !z, z, form, y_degree));
            }
        }
        Some(entries)
    }

    /// Runs levels up to `cap`, recording them in `ledger`.
    fn run(&mut self, cap: usize, forms: (YForm, YForm), y_degree: usize, ledger: &mut TermLedger) {
        ledger.degree_by_level.push(self.degree() + y_degree);
        while ledger.level < cap {
            let before = self.degree();
            if before == 0 {
                ledger.notes.push("top group already constant".into());
                break;
            }
            match self.level(ledger.level + 1, forms, y_degree) {
                Some(entries) => {
                    for e in &entries {
                        ledger.consumed_slots.extend(e.zero_positions.iter().copied());
                    }
                    ledger.entries.extend(entries);
                    ledger.level += 1;
                    ledger.degree_by_level.push(self.degree() + y_degree);
                }
                None => {
                    ledger.notes.push(format!(
                        "level {} stopped: a degree-{before} monomial has no free support with {} zeros",
                        ledger.level + 1,
                        self.zeros
                    ));
                    break;
                }
            }
        }
        if ledger.level == cap {
            ledger.notes.push(format!("level budget {cap} reached"));
        }
    }
}

/// First-order degree ladder with the default level budget.
pub fn ladder_reduce(n1: usize, n2: usize) -> Result<Ladder> {
    ladder_reduce_levels(n1, n2, ladder_budget(n1))
}

/// First-order degree ladder stopping after at most `cap` levels.
pub fn ladder_reduce_levels(n1: usize, n2: usize, cap: usize) -> Result<Ladder> {
    let seed = ladder_seed(n1, n2)?;
    let top = (1usize << n1) - 1;
    let mut h = vec![0i8; 1 << n1];
    let mut locked = vec![false; 1 << n1];
    for (a, v) in h.iter_mut().enumerate() {
        if seed.phi(a).count_ones() as usize == n2 {
            *v = if seed.g(a) { -1 } else { 1 };
        }
    }
    locked[top] = true;
    for i in 0..n1 {
        locked[top ^ (1 << i)] = true;
    }
    let mut engine = Engine { n1, zeros: 2, h, locked };
    let mut ledger = TermLedger::default();
    engine.run(cap, (YForm::HalfOneMinusL, YForm::HalfOnePlusL), n2, &mut ledger);

    let mut spec = seed;
    let full = ((1u64 << n2) - 1) as u32;
    for (a, &v) in engine.h.iter().enumerate() {
        if v != 0 && !engine.locked[a] {
            spec.set_affine(a, full, v < 0)?;
        }
    }
    // Other groups are the single-variable leaves (degree n1 + 1) and the
    // zero leaves (degree at most n1).
    let predicted = (engine.degree() + n2).max(n1 + 1);
    let seed_pdeg = ledger.degree_by_level[0].max(n1 + 1);
    let (_, d) = verify_full_sensitivity(&spec, predicted, &ledger)?;
    if d != predicted {
        return Err(MmError::Verification {
            message: format!("pdeg {d} differs from the predicted {predicted}"),
            ledger: Box::new(ledger),
        });
    }
    Ok(Ladder { spec, reduction: ledger.level, ledger, pdeg: d, seed_pdeg })
}

/// Order-`k` degree ladder with the default level budget.
pub fn ladder_reduce_korder(n1: usize, n2: usize, k: usize) -> Result<Ladder> {
    check_korder_sizes(n1, n2, k)?;
    ladder_reduce_korder_levels(n1, n2, k, korder_budget(n1, k))
}

/// Order-`k` degree ladder stopping after at most `cap` levels. Added terms
/// carry `k + 1` forced zeros, so they stay outside the radius-`k` ball
/// around the witness.
pub fn ladder_reduce_korder_levels(n1: usize, n2: usize, k: usize, cap: usize) -> Result<Ladder> {
    let seed = crate::build::build_korder(n1, n2, k)?;
    let top = (1usize << n1) - 1;
    let sym = sym_k(n2, k)?;
    let sym_deg = pdeg(&sym);
    let mut h = vec![0i8; 1 << n1];
    h[top] = 1;
    let locked: Vec<bool> = (0..1usize << n1).map(|a| (top ^ a).count_ones() as usize <= k).collect();
    let mut engine = Engine { n1, zeros: k + 1, h, locked };
    let mut ledger = TermLedger::default();
    engine.run(cap, (YForm::Sym, YForm::OneMinusSym), sym_deg, &mut ledger);

    let mut spec = seed;
    let co_sym = sym.complement();
    for (a, &v) in engine.h.iter().enumerate() {
        if v != 0 && !engine.locked[a] {
            spec.set_override(a, if v > 0 { sym.clone() } else { co_sym.clone() })?;
        }
    }
    let fail =
        |message: String, ledger: &TermLedger| MmError::Verification { message, ledger: Box::new(ledger.clone()) };
    let t: TruthTable = mm_truth_table(&spec)?;
    if !is_k_order_sensitive_at(&t, korder_witness(n1), k) {
        return Err(fail(format!("not {k}-th order sensitive at the witness"), &ledger));
    }
    // The product of the symmetric part and h cannot be cancelled by the
    // x-only remainder, whose degree is at most n1.
    let main = engine.degree() + sym_deg;
    let d = pdeg(&t);
    if d > main.max(n1) || (main >= n1 && d != main) {
        return Err(fail(format!("pdeg {d} does not match the predicted {main}"), &ledger));
    }
    let seed_pdeg = ledger.degree_by_level[0].max(n1);
    Ok(Ladder { spec, reduction: ledger.level, ledger, pdeg: d, seed_pdeg })
}
