//! Maiorana-McFarland functions `f(x, y) = φ(x)·y ⊕ g(x)` and their
//! generalization with nonlinear leaves: full-sensitivity constructions,
//! degree-reduction ladders that lower the real degree while keeping the
//! sensitivity witness, and `k`-th order sensitive variants built on
//! `sym^k`.

mod build;
mod error;
mod ladder;
mod ledger;
mod spec;
mod sym;

pub use build::{build_korder, build_th1, korder_witness, ladder_seed, seven_variable_example};
pub use error::{MmError, Result};
pub use ladder::{
    korder_budget, ladder_budget, ladder_reduce, ladder_reduce_korder, ladder_reduce_korder_levels,
    ladder_reduce_levels, Ladder,
};
pub use ledger::{LedgerEntry, TermLedger, YForm};
pub use spec::{check_mm_family, mm_truth_table, parse_point, point_string, MMSpec};
pub use sym::sym_k;
