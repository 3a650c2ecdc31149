//! Boolean functions as packed truth tables, together with the spectral and
//! combinatorial quantities used throughout the workspace: Walsh spectrum,
//! algebraic normal form, real (polynomial) degree, resiliency,
//! nonlinearity, sensitivity and its higher-order and dual variants.
//!
//! Points of `F_2^n` are encoded as integers with `x_1` in the least
//! significant bit.

mod anf;
mod error;
mod profile;
mod sensitivity;
mod table;
mod text;
mod walsh;

pub mod bits;

pub use anf::{algebraic_degree, mobius_anf, AnfPolynomial};
pub use error::{Error, Result};
pub use profile::{profile, FunctionProfile};
pub use sensitivity::{
    dual, dual_sensitivity_order_at, is_k_order_dual_sensitive_at, is_k_order_sensitive_at, max_dual_sensitivity_order,
    max_sensitivity_order, sensitivity, sensitivity_at, sensitivity_order_at, OrderWitness,
};
pub use table::{TruthTable, MAX_VARS};
pub use text::{from_hex, from_text, to_hex, to_text};
pub use walsh::{fwht, nonlinearity, pdeg, resiliency_order, walsh_transform, WalshSpectrum};
