use hosens_core::{bits, Error, Result, TruthTable};

use crate::system::{Equality, LinearConstraintSystem};

/// Largest n for which systems are materialized.
pub const MAX_ENCODE_VARS: usize = 8;

/// System whose 0/1 solutions are exactly the n-variable tables with
/// `pdeg <= p` that are first-order sensitive at `witness` with
/// `f(witness) = 0`. Variable `y_i` is the value at point index `i`.
///
/// Each `u` with `wt(u) >= p + 1` gives `Σ_i (-1)^{u·i} y_i = 0`, the
/// 0/1 form of `W_f(u) = 0` (valid because `u != 0`).
pub fn encode_existence(n: usize, p: usize, witness: usize) -> Result<LinearConstraintSystem> {
    if n == 0 || n > MAX_ENCODE_VARS {
        return Err(Error::capacity(format!(
            "existence systems are materialized for 1 <= n <= {MAX_ENCODE_VARS}, got {n}"
        )));
    }
    if p >= n {
        return Err(Error::arg(format!("pdeg cap {p} >= n = {n} gives a vacuous system")));
    }
    let size = 1usize << n;
    if witness >= size {
        return Err(Error::arg(format!("witness {witness} out of range for n = {n}")));
    }
    let mut equalities = Vec::new();
    for u in 1..size {
        if bits::wt(u) <= p {
            continue;
        }
        let coeffs = (0..size).map(|i| (i, if bits::wt(u & i) % 2 == 0 { 1 } else { -1 })).collect();
        equalities.push(Equality::new(coeffs, 0));
    }
    let mut fixed = vec![(witness, false)];
    fixed.extend((0..n).map(|j| (witness ^ (1 << j), true)));
    LinearConstraintSystem::new(size, equalities, fixed)
}

/// Truth table with bit `i = y_i`. The system must have `2^n` variables.
/// Does not check the equalities; callers re-verify through core.
pub fn decode_solution(sys: &LinearConstraintSystem, assignment: &[bool]) -> Result<TruthTable> {
    if assignment.len() != sys.num_vars() {
        return Err(Error::arg(format!("assignment covers {} of {} variables", assignment.len(), sys.num_vars())));
    }
    let len = sys.num_vars();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::arg(format!("{len} variables is not a truth table size")));
    }
    TruthTable::from_bits(len.trailing_zeros() as usize, assignment)
}
