//! Gate-level circuits for recursive amplification: a small netlist format
//! over NOT, XOR2 and AND2, bit-parallel simulation, synthesis from the
//! algebraic normal form, layered self-composition and the parity append
//! that turns `f^u` into its dual.

mod build;
mod netlist;

pub use build::{
    amplified_circuit, append_parity, instance_count, layered_amplify, linear_size_constant, scaled_gate_counts,
    synth_from_anf, MAX_SYNTH_VARS,
};
pub use netlist::{CircuitStats, Gate, Netlist};

/// The 3-variable base `maj(x1,x2,x3) ⊕ x1 ⊕ x2 ⊕ x3` with 5 XOR and 3 AND
/// gates, in netlist text form.
pub const F3_NETLIST: &str = include_str!("../data/f3.net");
