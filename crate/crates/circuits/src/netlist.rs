use std::fmt::Write as _;

use hosens_core::{Error, Result, TruthTable, MAX_VARS};
use rayon::prelude::*;
use serde::Serialize;

/// A gate driven by earlier wires. Wires `0..inputs` are the primary inputs,
/// wire `inputs + i` is gate `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    Const(bool),
    Not(usize),
    Xor(usize, usize),
    And(usize, usize),
}

impl Gate {
    fn fanin(&self) -> impl Iterator<Item = usize> {
        let (a, b) = match *self {
            Gate::Const(_) => (None, None),
            Gate::Not(a) => (Some(a), None),
            Gate::Xor(a, b) | Gate::And(a, b) => (Some(a), Some(b)),
        };
        a.into_iter().chain(b)
    }
}

/// Single-output combinational circuit over NOT, XOR2 and AND2, in
/// topological order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Netlist {
    inputs: usize,
    gates: Vec<Gate>,
    output: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CircuitStats {
    pub and_count: usize,
    pub xor_count: usize,
    pub not_count: usize,
    pub const_count: usize,
    pub total: usize,
    /// Longest input-to-output path, counting gates.
    pub depth: usize,
}

impl Netlist {
    /// Validates fan-in order and the output wire.
    pub fn new(inputs: usize, gates: Vec<Gate>, output: usize) -> Result<Self> {
        if inputs == 0 {
            return Err(Error::arg("a netlist needs at least one input"));
        }
        for (i, g) in gates.iter().enumerate() {
            let id = inputs + i;
            if let Some(bad) = g.fanin().find(|&w| w >= id) {
                return Err(Error::arg(format!("gate g{id} reads g{bad}, which is not earlier")));
            }
        }
        if output >= inputs + gates.len() {
            return Err(Error::arg(format!("output g{output} does not exist")));
        }
        Ok(Netlist { inputs, gates, output })
    }

    /// The circuit with no gates whose output is input `i`.
    pub fn wire(inputs: usize, i: usize) -> Result<Self> {
        Self::new(inputs, Vec::new(), i)
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Evaluates on `x`, with `x[j]` driving input wire `j`.
    pub fn simulate(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.inputs {
            return Err(Error::arg(format!("expected {} inputs, got {}", self.inputs, x.len())));
        }
        let mut w: Vec<bool> = x.to_vec();
        w.reserve(self.gates.len());
        for g in &self.gates {
            let v = match *g {
                Gate::Const(c) => c,
                Gate::Not(a) => !w[a],
                Gate::Xor(a, b) => w[a] ^ w[b],
                Gate::And(a, b) => w[a] & w[b],
            };
            w.push(v);
        }
        Ok(w[self.output])
    }

    /// Simulates 64 points at once; `x[j]` holds input `j` for each lane.
    fn simulate_words(&self, x: &[u64]) -> u64 {
        let mut w: Vec<u64> = x.to_vec();
        w.reserve(self.gates.len());
        for g in &self.gates {
            let v = match *g {
                Gate::Const(c) => {
                    if c {
                        !0
                    } else {
                        0
                    }
                }
                Gate::Not(a) => !w[a],
                Gate::Xor(a, b) => w[a] ^ w[b],
                Gate::And(a, b) => w[a] & w[b],
            };
            w.push(v);
        }
        w[self.output]
    }

    /// The full truth table, with input `j` as variable `x_{j+1}`.
    pub fn truth_table(&self) -> Result<TruthTable> {
        let n = self.inputs;
        if n > MAX_VARS {
            return Err(Error::capacity(format!("{n} inputs exceed {MAX_VARS}")));
        }
        let nw = (1usize << n).div_ceil(64);
        let lanes = 1usize << n.min(6);
        let words: Vec<u64> = (0..nw)
            .into_par_iter()
            .map(|k| {
                let x: Vec<u64> = (0..n)
                    .map(|j| {
                        if j < 6 {
                            (0..lanes).filter(|b| b >> j & 1 == 1).fold(0u64, |m, b| m | 1 << b)
                        } else if k >> (j - 6) & 1 == 1 {
                            !0
                        } else {
                            0
                        }
                    })
                    .collect();
                let mask = if lanes == 64 { !0 } else { (1u64 << lanes) - 1 };
                self.simulate_words(&x) & mask
            })
            .collect();
        TruthTable::from_words(n, words)
    }

    pub fn stats(&self) -> CircuitStats {
        let mut s = CircuitStats::default();
        let mut depth = vec![0usize; self.inputs + self.gates.len()];
        for (i, g) in self.gates.iter().enumerate() {
            match g {
                Gate::Const(_) => s.const_count += 1,
                Gate::Not(_) => s.not_count += 1,
                Gate::Xor(..) => s.xor_count += 1,
                Gate::And(..) => s.and_count += 1,
            }
            depth[self.inputs + i] = match g {
                Gate::Const(_) => 0,
                _ => 1 + g.fanin().map(|w| depth[w]).max().unwrap_or(0),
            };
        }
        s.total = s.and_count + s.xor_count + s.not_count + s.const_count;
        s.depth = depth[self.output];
        s
    }

    /// Appends the gates of `other`, whose inputs are the wires `map`.
    /// Returns the wire carrying `other`'s output.
    pub(crate) fn splice(&mut self, other: &Netlist, map: &[usize]) -> usize {
        let base = self.inputs + self.gates.len();
        let remap = |w: usize| if w < other.inputs { map[w] } else { w - other.inputs + base };
        for g in &other.gates {
            let g = match *g {
                Gate::Const(c) => Gate::Const(c),
                Gate::Not(a) => Gate::Not(remap(a)),
                Gate::Xor(a, b) => Gate::Xor(remap(a), remap(b)),
                Gate::And(a, b) => Gate::And(remap(a), remap(b)),
            };
            self.gates.push(g);
        }
        remap(other.output)
    }

    pub(crate) fn push(&mut self, g: Gate) -> usize {
        self.gates.push(g);
        self.inputs + self.gates.len() - 1
    }

    pub(crate) fn empty(inputs: usize) -> Self {
        Netlist { inputs, gates: Vec::new(), output: 0 }
    }

    pub(crate) fn set_output(&mut self, w: usize) {
        self.output = w;
    }

    /// Canonical text form.
    pub fn emit(&self) -> String {
        let mut s = format!("inputs {}\n", self.inputs);
        for (i, g) in self.gates.iter().enumerate() {
            let id = self.inputs + i;
            let _ = match *g {
                Gate::Const(c) => writeln!(s, "g{id} = CONST{}", c as u8),
                Gate::Not(a) => writeln!(s, "g{id} = NOT g{a}"),
                Gate::Xor(a, b) => writeln!(s, "g{id} = XOR g{a} g{b}"),
                Gate::And(a, b) => writeln!(s, "g{id} = AND g{a} g{b}"),
            };
        }
        let _ = writeln!(s, "output g{}", self.output);
        s
    }

    /// Parses the text form. Gates must be numbered consecutively after the
    /// inputs; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut inputs = None;
        let mut gates = Vec::new();
        let mut output = None;
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tok: Vec<&str> = line.split_whitespace().collect();
            if output.is_some() {
                return Err(Error::parse(ln, "content after the output line"));
            }
            match tok[0] {
                "inputs" => {
                    if inputs.is_some() || tok.len() != 2 {
                        return Err(Error::parse(ln, "expected a single `inputs <n>` header"));
                    }
                    let n: usize = tok[1].parse().map_err(|_| Error::parse(ln, "bad input count"))?;
                    if n == 0 {
                        return Err(Error::parse(ln, "input count must be positive"));
                    }
                    inputs = Some(n);
                }
                "output" => {
                    let n = inputs.ok_or_else(|| Error::parse(ln, "output before inputs header"))?;
                    if tok.len() != 2 {
                        return Err(Error::parse(ln, "expected `output g<id>`"));
                    }
                    let w = wire(tok[1], ln)?;
                    if w >= n + gates.len() {
                        return Err(Error::parse(ln, format!("output {} is undefined", tok[1])));
                    }
                    output = Some(w);
                }
                _ => {
                    let n = inputs.ok_or_else(|| Error::parse(ln, "gate before inputs header"))?;
                    let id = n + gates.len();
                    if tok.len() < 3 || tok[1] != "=" {
                        return Err(Error::parse(ln, "expected `g<id> = KIND ...`"));
                    }
                    if wire(tok[0], ln)? != id {
                        return Err(Error::parse(ln, format!("expected gate g{id}")));
                    }
                    let args = tok[3..]
                        .iter()
                        .map(|t| {
                            let w = wire(t, ln)?;
                            if w >= id {
                                return Err(Error::parse(ln, format!("{t} is not defined before g{id}")));
                            }
                            Ok(w)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let g = match (tok[2], args.as_slice()) {
                        ("CONST0", []) => Gate::Const(false),
                        ("CONST1", []) => Gate::Const(true),
                        ("NOT", [a]) => Gate::Not(*a),
                        ("XOR", [a, b]) => Gate::Xor(*a, *b),
                        ("AND", [a, b]) => Gate::And(*a, *b),
                        (k, _) => return Err(Error::parse(ln, format!("bad gate {k} with {} inputs", args.len()))),
                    };
                    gates.push(g);
                }
            }
        }
        let n = inputs.ok_or_else(|| Error::parse(0, "missing inputs header"))?;
        let out = output.ok_or_else(|| Error::parse(text.lines().count(), "missing output line"))?;
        Netlist::new(n, gates, out)
    }
}

fn wire(tok: &str, ln: usize) -> Result<usize> {
    tok.strip_prefix('g').and_then(|d| d.parse().ok()).ok_or_else(|| Error::parse(ln, format!("bad wire name {tok:?}")))
}
