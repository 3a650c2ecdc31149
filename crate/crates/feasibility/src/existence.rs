use rayon::prelude::*;
use serde::Serialize;

use hosens_core::{is_k_order_sensitive_at, pdeg, Error, Result, TruthTable};

use crate::encode::{decode_solution, encode_existence};
use crate::solver::{solve_feasibility, Verdict};

/// `Single` solves for the witness `0` only, which decides the question
/// because translating the input moves the witness without changing |W|.
/// `AllPoints` solves every witness separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessMode {
    Single,
    AllPoints,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessVerdict {
    pub witness: usize,
    pub verdict: &'static str,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceReport {
    pub n: usize,
    pub pdeg_cap: usize,
    pub mode: WitnessMode,
    /// "feasible" if any witness is, "infeasible" if all are, else "unknown".
    pub verdict: &'static str,
    pub witnesses: Vec<WitnessVerdict>,
    #[serde(skip)]
    pub example: Option<TruthTable>,
}

/// Does an n-variable function with `pdeg <= p` and full sensitivity exist?
/// Every Feasible answer is decoded and re-checked with core.
pub fn check_existence(n: usize, p: usize, mode: WitnessMode, budget: u64) -> Result<ExistenceReport> {
    let points: Vec<usize> = match mode {
        WitnessMode::Single => vec![0],
        WitnessMode::AllPoints => (0..1usize << n.min(crate::MAX_ENCODE_VARS)).collect(),
    };
    let results: Vec<(usize, Verdict, u64, Option<TruthTable>)> = points
        .into_par_iter()
        .map(|x| {
            let sys = encode_existence(n, p, x)?;
            let out = solve_feasibility(&sys, budget)?;
            let table = match &out.verdict {
                Verdict::Feasible(y) => {
                    let f = decode_solution(&sys, y)?;
                    if pdeg(&f) > p || !is_k_order_sensitive_at(&f, x, 1) {
                        return Err(Error::arg(format!("decoded solution for witness {x} fails re-verification")));
                    }
                    Some(f)
                }
                _ => None,
            };
            Ok((x, out.verdict, out.nodes, table))
        })
        .collect::<Result<_>>()?;
    let any = |name: &str| results.iter().any(|r| r.1.name() == name);
    let verdict = if any("feasible") {
        "feasible"
    } else if any("unknown") {
        "unknown"
    } else {
        "infeasible"
    };
    let example = results.iter().find_map(|r| r.3.clone());
    Ok(ExistenceReport {
        n,
        pdeg_cap: p,
        mode,
        verdict,
        witnesses: results
            .into_iter()
            .map(|(witness, v, nodes, _)| WitnessVerdict { witness, verdict: v.name(), nodes })
            .collect(),
        example,
    })
}
