use serde::{Deserialize, Serialize};

use crate::{
    algebraic_degree, max_dual_sensitivity_order, max_sensitivity_order, sensitivity, TruthTable, WalshSpectrum,
};

/// Every per-function quantity in one record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionProfile {
    pub n: usize,
    pub pdeg: usize,
    pub adeg: usize,
    pub resiliency_order: i32,
    pub nonlinearity: u64,
    pub balanced: bool,
    pub sensitivity: usize,
    /// Lowest point attaining `sensitivity`.
    pub sensitivity_point: usize,
    pub sensitivity_order: usize,
    pub sensitivity_witness: Option<usize>,
    pub dual_sensitivity_order: usize,
    pub dual_witness: Option<usize>,
}

pub fn profile(f: &TruthTable) -> FunctionProfile {
    let w = WalshSpectrum::of(f);
    let (s, sp) = sensitivity(f);
    let order = max_sensitivity_order(f);
    let dual = max_dual_sensitivity_order(f);
    FunctionProfile {
        n: f.n(),
        pdeg: w.pdeg(),
        adeg: algebraic_degree(f),
        resiliency_order: w.resiliency_order(),
        nonlinearity: w.nonlinearity(),
        balanced: f.is_balanced(),
        sensitivity: s,
        sensitivity_point: sp,
        sensitivity_order: order.order,
        sensitivity_witness: order.witness,
        dual_sensitivity_order: dual.order,
        dual_witness: dual.witness,
    }
}
