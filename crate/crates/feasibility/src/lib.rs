//! Existence of fully sensitive functions with bounded polynomial degree,
//! posed as 0/1 linear systems over the truth table. Systems can be exported
//! as LP text for an external solver or decided by the bounded exact solver
//! in [`solver`].

mod encode;
mod existence;
mod lp;
mod system;

pub mod solver;

pub use encode::{decode_solution, encode_existence, MAX_ENCODE_VARS};
pub use existence::{check_existence, ExistenceReport, WitnessMode, WitnessVerdict};
pub use lp::{export_lp, parse_lp};
pub use solver::{
    enumerate_solutions, solve_feasibility, CompiledSystem, Enumeration, SolveOutcome, Verdict, DEFAULT_NODE_BUDGET,
};
pub use system::{Equality, LinearConstraintSystem};
