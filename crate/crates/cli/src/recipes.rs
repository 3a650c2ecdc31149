//! Named reproduction recipes. Each recipe recomputes a set of values,
//! re-checks them through `hosens_core` and compares them with the values
//! they are expected to take.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use hosens_amplify::{balanced_cascade_sweep, modified_power, shifted_compose, shifted_sweep};
use hosens_circuits::{
    amplified_circuit, append_parity, instance_count, scaled_gate_counts, synth_from_anf, Netlist, F3_NETLIST,
};
use hosens_core::{
    bits, dual, is_k_order_sensitive_at, max_dual_sensitivity_order, nonlinearity, pdeg, resiliency_order, sensitivity,
    sensitivity_at, sensitivity_order_at, walsh_transform, TruthTable,
};
use hosens_feasibility::{
    decode_solution, encode_existence, export_lp, parse_lp, solve_feasibility, Verdict, DEFAULT_NODE_BUDGET,
};
use hosens_mm::{
    build_korder, build_th1, check_mm_family, korder_witness, ladder_reduce, ladder_reduce_korder, mm_truth_table,
    seven_variable_example, sym_k,
};
use hosens_search::{
    count_profiles_n4, count_profiles_n4_via_duals, count_profiles_n5, resilient_n5, rotsym_search, search_n6,
};

use crate::CliError;

/// Wall-clock class of a recipe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Budget {
    /// Under two minutes.
    Fast,
    /// Under six hours.
    Long,
    /// Unbounded; run only on request.
    Extended,
}

impl Budget {
    pub fn name(self) -> &'static str {
        match self {
            Budget::Fast => "fast",
            Budget::Long => "long",
            Budget::Extended => "extended",
        }
    }
}

/// Where an expected value comes from: a reference value from the
/// literature, an independent computation, or a direct consequence of the
/// construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Reference,
    Computed,
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub tag: Tag,
    pub status: String,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl Display, got: impl Display, tag: Tag, ok: bool) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            tag,
            status: if ok { "PASS" } else { "FAIL" }.to_string(),
        }
    }

    fn eq<T: PartialEq + Display>(name: impl Into<String>, expected: T, got: T, tag: Tag) -> Self {
        let ok = expected == got;
        Self::new(name, expected, got, tag, ok)
    }

    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: String,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != "FAIL")
    }
}

type Body = fn() -> Result<Vec<Check>, CliError>;

pub struct Recipe {
    pub id: &'static str,
    pub budget: Budget,
    pub about: &'static str,
    body: Body,
}

pub const RECIPES: &[Recipe] = &[
    Recipe {
        id: "n4-counts",
        budget: Budget::Fast,
        about: "4-variable balanced counts by dual order",
        body: n4_counts,
    },
    Recipe {
        id: "n5-counts",
        budget: Budget::Fast,
        about: "5-variable 1-resilient counts by dual order",
        body: n5_counts,
    },
    Recipe {
        id: "n6-counts",
        budget: Budget::Long,
        about: "6-variable 2-resilient counts by dual order",
        body: n6_counts,
    },
    Recipe {
        id: "fullsens-existence",
        budget: Budget::Fast,
        about: "existence of fully sensitive functions with small pdeg",
        body: fullsens_existence,
    },
    Recipe { id: "rotsym7", budget: Budget::Fast, about: "7-variable rotation-symmetric search", body: rotsym7 },
    Recipe { id: "rotsym8", budget: Budget::Long, about: "8-variable rotation-symmetric search", body: rotsym8 },
    Recipe { id: "rotsym9", budget: Budget::Extended, about: "9-variable rotation-symmetric search", body: rotsym9 },
    Recipe { id: "rotsym10", budget: Budget::Extended, about: "10-variable rotation-symmetric search", body: rotsym10 },
    Recipe {
        id: "shifted-g9",
        budget: Budget::Fast,
        about: "9-variable shifted compositions of maj3 + L3",
        body: shifted_g9,
    },
    Recipe { id: "cascade-16var", budget: Budget::Fast, about: "16-variable balanced cascade sweep", body: cascade_16 },
    Recipe {
        id: "modified-amplify",
        budget: Budget::Fast,
        about: "order-preserving amplification",
        body: modified_amplify,
    },
    Recipe { id: "circuit-f3", budget: Budget::Fast, about: "layered circuits and gate counts", body: circuit_f3 },
    Recipe {
        id: "mm-example",
        budget: Budget::Fast,
        about: "7-variable MM example and the general builder",
        body: mm_example,
    },
    Recipe {
        id: "mm-ladder-20",
        budget: Budget::Fast,
        about: "degree ladder at (n1, n2) = (10, 10)",
        body: mm_ladder_20,
    },
    Recipe { id: "korder", budget: Budget::Fast, about: "sym_k and k-order MM constructions", body: korder_family },
    Recipe {
        id: "korder-ladder-24",
        budget: Budget::Fast,
        about: "order-2 ladder at (12, 12)",
        body: korder_ladder_24,
    },
];

pub fn find(id: &str) -> Option<&'static Recipe> {
    RECIPES.iter().find(|r| r.id == id)
}

impl Recipe {
    /// Runs the recipe when its class fits `budget`; otherwise every check
    /// is reported as skipped.
    pub fn run(&self, budget: Budget) -> Result<Report, CliError> {
        let start = Instant::now();
        let checks = if self.budget <= budget {
            (self.body)()?
        } else {
            vec![Check {
                name: self.about.to_string(),
                expected: String::new(),
                got: String::new(),
                tag: Tag::Direct,
                status: format!("SKIPPED({})", self.budget.name()),
            }]
        };
        Ok(Report { id: self.id.to_string(), checks, seconds: start.elapsed().as_secs_f64() })
    }
}

fn table(n: usize, t: u64) -> TruthTable {
    TruthTable::from_u64(n, t).expect("n <= 6")
}

/// Histogram of `max dual order` over `tables`, recomputed by core.
fn dual_histogram(n: usize, tables: &[u64]) -> BTreeMap<usize, u64> {
    tables
        .par_iter()
        .fold(BTreeMap::new, |mut h, &t| {
            *h.entry(max_dual_sensitivity_order(&table(n, t)).order).or_insert(0) += 1;
            h
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

fn at_least(h: &BTreeMap<usize, u64>, k: usize) -> u64 {
    h.range(k..).map(|(_, v)| v).sum()
}

fn n4_counts() -> Result<Vec<Check>, CliError> {
    let a = count_profiles_n4();
    let b = count_profiles_n4_via_duals();
    let balanced: Vec<u64> = (0..1u64 << 16).filter(|&t| table(4, t).is_balanced()).collect();
    let h = dual_histogram(4, &balanced);
    let mut checks = vec![Check::eq("two enumeration pipelines agree", "equal".into(), verdict(a == b), Tag::Direct)];
    for (k, want) in [(1, 3760), (2, 256), (3, 0)] {
        checks.push(Check::eq(format!("[4,{k},0]"), want, at_least(&h, k), Tag::Reference));
        checks.push(Check::eq(format!("[4,{k},0] search module"), at_least(&h, k), a[&k], Tag::Computed));
    }
    Ok(checks)
}

fn verdict(b: bool) -> String {
    if b { "equal" } else { "different" }.to_string()
}

fn n5_counts() -> Result<Vec<Check>, CliError> {
    let resilient: Vec<u64> = resilient_n5().into_iter().map(u64::from).collect();
    let bad = resilient.par_iter().filter(|&&t| resiliency_order(&table(5, t)) < 1).count();
    let h = dual_histogram(5, &resilient);
    let c = count_profiles_n5();
    let mut checks = vec![
        Check::eq("1-resilient 5-variable functions", 807_980, resilient.len(), Tag::Computed),
        Check::eq("listed functions failing resiliency", 0, bad, Tag::Direct),
    ];
    for (k, want) in [(1, 12_304u64), (2, 2_464), (3, 0), (4, 0)] {
        checks.push(Check::eq(format!("[5,{k},1]"), want, at_least(&h, k), Tag::Reference));
        checks.push(Check::eq(format!("[5,{k},1] search module"), at_least(&h, k), c[&k], Tag::Computed));
    }
    // Complementing the output preserves both properties without fixed
    // points, so halving counts each complementary pair once.
    checks.push(Check::eq("[5,1,1] up to complement", 12_304, at_least(&h, 1) / 2, Tag::Computed));
    checks.push(Check::eq("[5,2,1] up to complement", 2_464, at_least(&h, 2) / 2, Tag::Computed));
    Ok(checks)
}

fn n6_counts() -> Result<Vec<Check>, CliError> {
    let r = search_n6(&resilient_n5());
    let bad = r.functions.par_iter().filter(|&&t| resiliency_order(&table(6, t)) < 2).count();
    let h = dual_histogram(6, &r.functions);
    Ok(vec![
        Check::eq("listed functions failing 2-resiliency", 0, bad, Tag::Direct),
        Check::eq("[6,1,2]", 33_632, at_least(&h, 1), Tag::Reference),
        Check::eq("[6,2,2]", 192, at_least(&h, 2), Tag::Reference),
        Check::eq("[6,>2,2]", 0, at_least(&h, 3), Tag::Reference),
        Check::eq("[6,1,2] search module", at_least(&h, 1), r.counts[&1], Tag::Computed),
        Check::eq("[6,1,2] orbit of one function", 768, at_least(&h, 1), Tag::Computed),
    ])
}

fn fullsens_existence() -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    let infeasible = (0..16).all(|x| {
        encode_existence(4, 2, x)
            .and_then(|s| solve_feasibility(&s, u64::MAX))
            .is_ok_and(|o| o.verdict == Verdict::Infeasible)
    });
    checks.push(Check::eq(
        "n=4, pdeg<=2, every witness",
        "infeasible",
        pick(infeasible, "infeasible", "feasible somewhere"),
        Tag::Computed,
    ));
    let sys = encode_existence(4, 3, 0)?;
    let got = match solve_feasibility(&sys, u64::MAX)?.verdict {
        Verdict::Feasible(y) => {
            let f = decode_solution(&sys, &y)?;
            if pdeg(&f) <= 3 && sensitivity_at(&f, 0) == 4 {
                "feasible, decoded and verified"
            } else {
                "feasible, decode fails verification"
            }
        }
        v => v.name(),
    };
    checks.push(Check::eq("n=4, pdeg<=3", "feasible, decoded and verified", got, Tag::Computed));
    let sys = encode_existence(7, 3, 0)?;
    let text = export_lp(&sys);
    let same = export_lp(&parse_lp(&text)?) == text;
    checks.push(Check::eq(
        "LP export roundtrip",
        "identical".into(),
        pick(same, "identical", "different").to_string(),
        Tag::Direct,
    ));
    let out = solve_feasibility(&sys, DEFAULT_NODE_BUDGET)?;
    checks.push(Check::eq("n=7, pdeg<=3", "infeasible", out.verdict.name(), Tag::Reference));
    Ok(checks)
}

fn pick(ok: bool, want: &'static str, otherwise: &'static str) -> &'static str {
    if ok {
        want
    } else {
        otherwise
    }
}

fn rotation_symmetric(f: &TruthTable) -> bool {
    let n = f.n();
    let rot = |x: usize| (x << 1 | x >> (n - 1)) & ((1 << n) - 1);
    (0..f.len()).all(|x| f.bit(x) == f.bit(rot(x)))
}

/// Rotation-symmetric hits for (n, m, k), re-checked through core.
fn rotsym_checked(n: usize, m: usize, k: usize) -> Result<(Vec<TruthTable>, Check), CliError> {
    let hits = rotsym_search(n, m, k)?;
    let bad = hits
        .iter()
        .filter(|f| !rotation_symmetric(f) || resiliency_order(f) < m as i32 || max_dual_sensitivity_order(f).order < k)
        .count();
    Ok((hits, Check::eq(format!("({n},{m},{k}) hits failing re-check"), 0, bad, Tag::Direct)))
}

fn rotsym7() -> Result<Vec<Check>, CliError> {
    let (hits, check) = rotsym_checked(7, 1, 3)?;
    Ok(vec![check, Check::eq("1-resilient, dual order >= 3", 12, hits.len(), Tag::Reference)])
}

fn rotsym8() -> Result<Vec<Check>, CliError> {
    let (a, ca) = rotsym_checked(8, 3, 1)?;
    let (b, cb) = rotsym_checked(8, 3, 2)?;
    Ok(vec![
        ca,
        cb,
        Check::eq("[8,1,3]", 12, a.len(), Tag::Reference),
        Check::eq("[8,2,3]", 0, b.len(), Tag::Reference),
        Check::eq("[8,1,3] up to complement", 12, a.len() / 2, Tag::Computed),
    ])
}

fn rotsym9() -> Result<Vec<Check>, CliError> {
    let (a, ca) = rotsym_checked(9, 4, 1)?;
    let order2 = a.iter().filter(|f| max_dual_sensitivity_order(f).order == 2).count();
    let best = a.iter().map(nonlinearity).max().unwrap_or(0);
    Ok(vec![
        ca,
        Check::eq("[9,1,4]", 29, a.len(), Tag::Reference),
        Check::eq("[9,1,4] of dual order 2", 27, order2, Tag::Reference),
        Check::eq("largest nonlinearity", 224, best, Tag::Reference),
    ])
}

fn rotsym10() -> Result<Vec<Check>, CliError> {
    let (a, ca) = rotsym_checked(10, 5, 1)?;
    Ok(vec![ca, Check::eq("[10,1,5]", 0, a.len(), Tag::Reference)])
}

fn f3() -> Result<TruthTable, CliError> {
    Ok(Netlist::parse(F3_NETLIST)?.truth_table()?)
}

fn shifted_g9() -> Result<Vec<Check>, CliError> {
    let f = f3()?;
    let sweep = shifted_sweep(&f)?;
    let mut res = Vec::new();
    let mut nls = std::collections::BTreeSet::new();
    for p in &sweep {
        let g = dual(&shifted_compose(&f, p.constants)?.to_truth_table()?);
        res.push(resiliency_order(&g));
        nls.insert(nonlinearity(&g));
    }
    let all_four = res.iter().all(|&r| r == 4);
    Ok(vec![
        Check::eq(
            "resiliency of g9, all 8 constant vectors",
            "4".into(),
            pick(all_four, "4", "not always 4").to_string(),
            Tag::Reference,
        ),
        Check::eq("nonlinearities attained", "{96, 192}".into(), format!("{nls:?}"), Tag::Reference),
    ])
}

fn cascade_16() -> Result<Vec<Check>, CliError> {
    let s = balanced_cascade_sweep(4, 11)?;
    let base = s.first_with_nl(24_576);
    let mut checks = vec![Check::eq("NL 24576 attained with resiliency >= 11", true, base.is_some(), Tag::Reference)];
    if let Some(b) = base {
        let g = dual(&shifted_compose(&table(4, b), 0)?.to_truth_table()?);
        checks.push(Check::eq("re-checked resiliency", 11, resiliency_order(&g), Tag::Reference));
        checks.push(Check::eq("re-checked nonlinearity", 24_576, nonlinearity(&g), Tag::Reference));
    }
    if let Some(best) = &s.best {
        checks.push(Check::eq("largest nonlinearity in the sweep", 28_672, best.nonlinearity, Tag::Computed));
    }
    Ok(checks)
}

/// A 6-variable function of sensitivity order 2 at 0 with pdeg 3.
pub const F6: u64 = 0x7ff8_eca8_eac8_e001;

fn modified_amplify() -> Result<Vec<Check>, CliError> {
    let mut cases = 0;
    let mut order_ok = true;
    let mut pdeg_ok = true;
    for t in 0..256u64 {
        let f = table(3, t);
        for y in 0..8 {
            let k = sensitivity_order_at(&f, y);
            if !(1..=2).contains(&k) {
                continue;
            }
            let c = modified_power(&f, 2, y)?;
            let tt = c.to_truth_table()?;
            let yu = bits::index_of(&c.witness_point().expect("modified mode"));
            order_ok &= is_k_order_sensitive_at(&tt, yu, k);
            pdeg_ok &= pdeg(&tt) == pdeg(&f).pow(2);
            cases += 1;
        }
    }
    let mut checks = vec![
        Check::new("d=3 bases and witnesses of order 1 or 2", "> 0", cases, Tag::Direct, cases > 0),
        Check::eq("order k kept at y^2", true, order_ok, Tag::Reference),
        Check::eq("pdeg(f^2) = pdeg(f)^2", true, pdeg_ok, Tag::Reference),
    ];
    let (flips, ok, zeros) = thirty_six_variable_order()?;
    checks.push(Check::eq("36 variables: flips of size <= 2 changing the value", 666, ok, Tag::Direct));
    checks.push(Check::eq("36 variables: flips checked", 666, flips, Tag::Direct));
    checks.push(Check::eq("36 variables: sampled Walsh zeros above weight 9", 200, zeros, Tag::Computed));
    Ok(checks)
}

/// Flips of size one and two at the witness of the 36-variable power, how
/// many of them change the value, and how many of 200 sampled `w` with
/// `wt(w) > 9` have `W(w) = 0`.
pub fn thirty_six_variable_order() -> Result<(usize, usize, usize), CliError> {
    let c = modified_power(&table(6, F6), 2, 0)?;
    let y = c.witness_point().expect("modified mode");
    let v = c.eval(&y)?;
    let mut flips = 0;
    let mut changed = 0;
    for i in 0..36 {
        for j in i..36 {
            let mut x = y.clone();
            x[i] = !x[i];
            if j != i {
                x[j] = !x[j];
            }
            flips += 1;
            changed += usize::from(c.eval(&x)? != v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let mut sampled = 0;
    let mut zeros = 0;
    while sampled < 200 {
        let w: Vec<bool> = (0..36).map(|_| rng.gen_bool(0.4)).collect();
        if w.iter().filter(|b| **b).count() > 9 {
            sampled += 1;
            zeros += usize::from(c.walsh_at(&w)? == 0);
        }
    }
    Ok((flips, changed, zeros))
}

fn circuit_f3() -> Result<Vec<Check>, CliError> {
    let base = Netlist::parse(F3_NETLIST)?;
    let bs = base.stats();
    let f = base.truth_table()?;
    let g = shifted_compose(&f, 0)?;
    let net = amplified_circuit(&base, &g)?;
    let st = net.stats();
    let want = g.to_truth_table()?;
    let agree = (0..512usize).all(|x| {
        let p: Vec<bool> = (0..9).map(|i| x >> i & 1 == 1).collect();
        net.simulate(&p).is_ok_and(|v| v == want.bit(x))
    });
    let with = append_parity(&net)?;
    let synth = synth_from_anf(&f)?.truth_table()? == f;
    Ok(vec![
        Check::eq("base XOR/AND", "5/3".into(), format!("{}/{}", bs.xor_count, bs.and_count), Tag::Reference),
        Check::eq("u=2 XOR/AND", "20/12".into(), format!("{}/{}", st.xor_count, st.and_count), Tag::Reference),
        Check::eq("gates with parity", 41, with.stats().total, Tag::Reference),
        Check::eq("simulation agrees on 512 points", true, agree, Tag::Direct),
        Check::eq("instances for d=3, u=2", 4, instance_count(3, 2), Tag::Computed),
        Check::eq("depth u*t_d", 2 * bs.depth, st.depth, Tag::Computed),
        Check::eq("AND from 24 at d=6, u=2", 168, scaled_gate_counts(24, 21, 6, 2).0, Tag::Computed),
        Check::eq("XOR from 21 at d=6, u=2", 147, scaled_gate_counts(24, 21, 6, 2).1, Tag::Computed),
        Check::eq("ANF synthesis of the base is exact", true, synth, Tag::Direct),
    ])
}

fn mm_example() -> Result<Vec<Check>, CliError> {
    let spec = seven_variable_example();
    let t = mm_truth_table(&spec)?;
    let mut checks = vec![
        Check::eq("7-variable example s", 7, sensitivity(&t).0, Tag::Reference),
        Check::eq("7-variable example pdeg", 6, pdeg(&t), Tag::Reference),
        Check::eq("7-variable example meets the family conditions", false, check_mm_family(&spec), Tag::Computed),
    ];
    let mut ok = true;
    for (n1, n2) in [(2, 2), (3, 4), (4, 4), (5, 6), (6, 6), (7, 8), (8, 8), (9, 10), (10, 10)] {
        let t = mm_truth_table(&build_th1(n1, n2)?)?;
        let n = n1 + n2;
        ok &= sensitivity_at(&t, t.len() - 1) == n && pdeg(&t) < n;
    }
    checks.push(Check::eq("builder: s = n, pdeg <= n-1 for every valid size with n <= 22", true, ok, Tag::Computed));
    Ok(checks)
}

fn mm_ladder_20() -> Result<Vec<Check>, CliError> {
    let l = ladder_reduce(10, 10)?;
    let t = mm_truth_table(&l.spec)?;
    let d = pdeg(&t);
    Ok(vec![
        Check::eq("s", 20, sensitivity_at(&t, t.len() - 1), Tag::Computed),
        Check::new("pdeg", "<= 18", d, Tag::Computed, d <= 18),
        Check::eq("levels z", 2, l.reduction, Tag::Computed),
        Check::eq("family conditions", true, check_mm_family(&l.spec), Tag::Direct),
    ])
}

fn korder_family() -> Result<Vec<Check>, CliError> {
    let mut sym_ok = true;
    for m in 1..=12 {
        for k in 1..=4.min(m) {
            sym_ok &= sensitivity_order_at(&sym_k(m, k)?, 0) >= k;
        }
    }
    let mut mm_ok = true;
    for n1 in 3..=10 {
        for n2 in [n1, n1 + 1] {
            if n1 + n2 > 20 {
                continue;
            }
            for k in 1..=3.min(n1) {
                let t = mm_truth_table(&build_korder(n1, n2, k)?)?;
                mm_ok &= is_k_order_sensitive_at(&t, korder_witness(n1), k);
            }
        }
    }
    Ok(vec![
        Check::eq("sym_k(m, k) order >= k at 0, m <= 12, k <= 4", true, sym_ok, Tag::Computed),
        Check::eq("build_korder order k at the witness, n <= 20, k <= 3", true, mm_ok, Tag::Computed),
    ])
}

fn korder_ladder_24() -> Result<Vec<Check>, CliError> {
    let l = ladder_reduce_korder(12, 12, 2)?;
    let t = mm_truth_table(&l.spec)?;
    let d = walsh_transform(&t).pdeg();
    Ok(vec![
        Check::eq("order 2 at the witness", true, is_k_order_sensitive_at(&t, korder_witness(12), 2), Tag::Computed),
        Check::new("pdeg", "<= 23", d, Tag::Computed, d <= 23),
        Check::new("levels p", ">= 1", l.reduction, Tag::Computed, l.reduction >= 1),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = RECIPES.iter().map(|r| r.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), RECIPES.len());
    }

    #[test]
    fn budget_gate_skips() {
        let r = find("n6-counts").unwrap().run(Budget::Fast).unwrap();
        assert_eq!(r.checks[0].status, "SKIPPED(long)");
        assert!(r.passed());
    }

    #[test]
    fn rotation_check() {
        assert!(rotation_symmetric(&TruthTable::majority(5).unwrap()));
        assert!(!rotation_symmetric(&TruthTable::linear(3, 1).unwrap()));
    }
}
