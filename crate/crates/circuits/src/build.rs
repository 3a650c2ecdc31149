use hosens_amplify::ComposedFunction;
use hosens_core::{mobius_anf, Error, Result, TruthTable};

use crate::netlist::{Gate, Netlist};

/// Largest input count accepted by [`synth_from_anf`].
pub const MAX_SYNTH_VARS: usize = 16;

/// Folds `wires` pairwise, level by level, into one wire.
fn balanced(net: &mut Netlist, mut wires: Vec<usize>, gate: fn(usize, usize) -> Gate) -> Option<usize> {
    while wires.len() > 1 {
        let mut next = Vec::with_capacity(wires.len().div_ceil(2));
        for pair in wires.chunks(2) {
            next.push(match pair {
                [a, b] => net.push(gate(*a, *b)),
                [a] => *a,
                _ => unreachable!(),
            });
        }
        wires = next;
    }
    wires.pop()
}

/// A circuit for `f` read off its algebraic normal form: each monomial is a
/// balanced AND tree and the monomials are XORed in a balanced tree. The
/// constant monomial becomes a final NOT.
pub fn synth_from_anf(f: &TruthTable) -> Result<Netlist> {
    let n = f.n();
    if n > MAX_SYNTH_VARS {
        return Err(Error::capacity(format!("{n} variables exceed {MAX_SYNTH_VARS}")));
    }
    let anf = mobius_anf(f);
    let mut net = Netlist::empty(n);
    let mut terms = Vec::new();
    let mut constant = false;
    for m in anf.monomials() {
        if m == 0 {
            constant = true;
            continue;
        }
        let vars = (0..n).filter(|&i| m >> i & 1 == 1).collect();
        terms.extend(balanced(&mut net, vars, Gate::And));
    }
    let out = match balanced(&mut net, terms, Gate::Xor) {
        Some(w) if constant => net.push(Gate::Not(w)),
        Some(w) => w,
        None => net.push(Gate::Const(constant)),
    };
    net.set_output(out);
    Ok(net)
}

/// `Σ_{i<u} d^i = (d^u - 1)/(d - 1)` copies of the base circuit.
pub fn instance_count(d: usize, u: usize) -> usize {
    (0..u).map(|i| d.pow(i as u32)).sum()
}

/// AND and XOR counts of a `u`-level layered circuit from the base counts.
pub fn scaled_gate_counts(and: usize, xor: usize, d: usize, u: usize) -> (usize, usize) {
    let k = instance_count(d, u);
    (and * k, xor * k)
}

/// `C` with `gates(layered + parity) <= C·n`: `c_d/(d - 1) + 1`.
pub fn linear_size_constant(base_gates: usize, d: usize) -> f64 {
    base_gates as f64 / (d as f64 - 1.0) + 1.0
}

/// Stacks `u` layers of `base`. Level 1 has `d^{u-1}` copies on consecutive
/// input blocks; each higher level reads `d` outputs of the level below.
/// `flips[i]` is the slot-complement mask on the inputs of level `i + 2`,
/// realized as NOT gates; an empty slice means no flips.
pub fn layered_amplify(base: &Netlist, u: usize, flips: &[usize]) -> Result<Netlist> {
    let d = base.inputs();
    if u == 0 {
        return Err(Error::arg("need at least one level"));
    }
    if !flips.is_empty() && flips.len() != u - 1 {
        return Err(Error::arg(format!("expected {} flip masks, got {}", u - 1, flips.len())));
    }
    if u == 1 {
        return Ok(base.clone());
    }
    if d < 2 {
        return Err(Error::arg("layering needs a base with at least two inputs"));
    }
    let n =
        d.checked_pow(u as u32).filter(|&n| n <= 1 << 20).ok_or_else(|| Error::capacity(format!("{d}^{u} inputs")))?;
    let mut net = Netlist::empty(n);
    let mut wires: Vec<usize> = (0..n).collect();
    for level in 1..=u {
        let flip = if level >= 2 && !flips.is_empty() { flips[level - 2] } else { 0 };
        let mut next = Vec::with_capacity(wires.len() / d);
        for block in wires.chunks(d) {
            let map: Vec<usize> = block
                .iter()
                .enumerate()
                .map(|(j, &w)| if flip >> j & 1 == 1 { net.push(Gate::Not(w)) } else { w })
                .collect();
            next.push(net.splice(base, &map));
        }
        wires = next;
    }
    net.set_output(wires[0]);
    Ok(net)
}

/// The layered circuit realizing a composed function; `base` must compute
/// its base table.
pub fn amplified_circuit(base: &Netlist, f: &ComposedFunction) -> Result<Netlist> {
    if base.truth_table()? != *f.base() {
        return Err(Error::arg("base netlist does not compute the composition's base function"));
    }
    let flips: Vec<usize> = (2..=f.depth()).map(|l| f.level_flip(l)).collect();
    layered_amplify(base, f.depth(), &flips)
}

/// XORs the parity of all inputs into the output: a balanced tree of `n - 1`
/// XOR gates over the inputs in index order plus one combining XOR.
pub fn append_parity(net: &Netlist) -> Result<Netlist> {
    let mut out = net.clone();
    let tree = balanced(&mut out, (0..net.inputs()).collect(), Gate::Xor).expect("at least one input");
    let w = out.push(Gate::Xor(net.output(), tree));
    out.set_output(w);
    Ok(out)
}
