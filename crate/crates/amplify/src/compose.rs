use serde::Serialize;

use hosens_core::{sensitivity_order_at, Error, Result, TruthTable, MAX_VARS};

/// Largest arity handled by the lazy evaluator and spectral queries.
pub const MAX_COMPOSED_VARS: usize = 120;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum Mode {
    Plain,
    /// Blocks enter the next level as `f^{i-1}(block_j) ⊕ f^{i-1}(y^{i-1}) ⊕ y_j`.
    Modified {
        witness: usize,
    },
    /// Slot `j` of every level above the first is complemented when bit `j`
    /// of `constants` is set.
    Shifted {
        constants: usize,
    },
}

/// The `d`-ary self-composition of a base function, `u` levels deep, on
/// `d^u` variables. Block `j` of a level covers variables
/// `j·d^{i-1} .. (j+1)·d^{i-1}` of that level's input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposedFunction {
    base: TruthTable,
    depth: usize,
    mode: Mode,
    n: usize,
    /// `flips[i]`: slot-complement mask applied to the inputs of level
    /// `i + 2`.
    flips: Vec<usize>,
    /// `level_values[i] = f^{i+1}(y^{i+1})` in modified mode.
    level_values: Vec<bool>,
}

fn arity(d: usize, u: usize) -> Option<usize> {
    let mut n = 1usize;
    for _ in 0..u {
        n = n.checked_mul(d)?;
        if n > MAX_COMPOSED_VARS {
            return None;
        }
    }
    Some(n)
}

impl ComposedFunction {
    fn build(base: &TruthTable, u: usize, mode: Mode) -> Result<Self> {
        if u == 0 {
            return Err(Error::arg("composition depth must be at least 1"));
        }
        let d = base.n();
        let n = arity(d, u).ok_or_else(|| Error::capacity(format!("{d}^{u} variables exceeds {MAX_COMPOSED_VARS}")))?;
        let all = (1usize << d) - 1;
        let mut flips = Vec::with_capacity(u - 1);
        let mut level_values = Vec::new();
        match mode {
            Mode::Plain => flips.resize(u - 1, 0),
            Mode::Shifted { constants } => {
                if constants > all {
                    return Err(Error::arg(format!("constant vector {constants:#b} has more than {d} bits")));
                }
                flips.resize(u - 1, constants);
            }
            Mode::Modified { witness } => {
                if witness > all {
                    return Err(Error::arg(format!("witness {witness} out of range for {d} variables")));
                }
                if sensitivity_order_at(base, witness) == 0 {
                    return Err(Error::arg(format!("base is not first-order sensitive at witness {witness}")));
                }
                let mut c = base.bit(witness);
                level_values.push(c);
                for _ in 1..u {
                    let flip = if c { all ^ witness } else { witness };
                    flips.push(flip);
                    // Every block of y^i evaluates to c, so the next input is c^d ⊕ flip.
                    let input = if c { all } else { 0 } ^ flip;
                    c = base.bit(input);
                    level_values.push(c);
                }
            }
        }
        Ok(ComposedFunction { base: base.clone(), depth: u, mode, n, flips, level_values })
    }

    pub fn base(&self) -> &TruthTable {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.base.n()
    }

    /// Complement mask on the inputs of level `level` (2..=u).
    pub fn level_flip(&self, level: usize) -> usize {
        self.flips[level - 2]
    }

    /// `f^i(y^i)` for `i = 1..=u` in modified mode, empty otherwise.
    pub fn level_values(&self) -> &[bool] {
        &self.level_values
    }

    /// `y^u`, the base witness repeated, in modified mode.
    pub fn witness_point(&self) -> Option<Vec<bool>> {
        match self.mode {
            Mode::Modified { witness } => {
                let d = self.d();
                Some((0..self.n).map(|t| witness >> (t % d) & 1 == 1).collect())
            }
            _ => None,
        }
    }

    /// Evaluates the point with `x[t]` the value of variable `t + 1`.
    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::arg(format!("point has {} coordinates, expected {}", x.len(), self.n)));
        }
        let d = self.d();
        let mut vals: Vec<bool> = x.chunks(d).map(|c| self.base.bit(hosens_core::bits::index_of(c))).collect();
        for flip in &self.flips {
            vals = vals.chunks(d).map(|c| self.base.bit(hosens_core::bits::index_of(c) ^ flip)).collect();
        }
        Ok(vals[0])
    }

    /// Point evaluation for `n <= 64`, with variable `t + 1` in bit `t`.
    pub fn eval_index(&self, x: u64) -> Result<bool> {
        if self.n > 64 {
            return Err(Error::capacity("index evaluation needs n <= 64"));
        }
        self.eval(&(0..self.n).map(|t| x >> t & 1 == 1).collect::<Vec<_>>())
    }

    /// Full truth table, built level by level. Requires `n <= 26`.
    pub fn to_truth_table(&self) -> Result<TruthTable> {
        if self.n > MAX_VARS {
            return Err(Error::capacity(format!("{} variables cannot be materialized (limit {MAX_VARS})", self.n)));
        }
        let d = self.d();
        let mut table = self.base.clone();
        let mut width = d;
        for flip in &self.flips {
            let inner = table;
            let mask = (1usize << width) - 1;
            let w = width;
            table = TruthTable::from_fn(w * d, |x| {
                let mut input = 0usize;
                for j in 0..d {
                    if inner.bit(x >> (j * w) & mask) {
                        input |= 1 << j;
                    }
                }
                self.base.bit(input ^ flip)
            })?;
            width *= d;
        }
        Ok(table)
    }
}

/// `f^u` by plain self-composition.
pub fn plain_power(f: &TruthTable, u: usize) -> Result<ComposedFunction> {
    ComposedFunction::build(f, u, Mode::Plain)
}

/// Order-preserving amplification: `f^u` keeps the sensitivity order of
/// `f` at `witness`, reached at the repeated witness `y^u`.
pub fn modified_power(f: &TruthTable, u: usize, witness: usize) -> Result<ComposedFunction> {
    ComposedFunction::build(f, u, Mode::Modified { witness })
}

/// One level `f(f ⊕ a_1, ..., f ⊕ a_d)` with `a_j` bit `j - 1` of `constants`.
pub fn shifted_compose(f: &TruthTable, constants: usize) -> Result<ComposedFunction> {
    ComposedFunction::build(f, 2, Mode::Shifted { constants })
}

/// Shifted mode with the same constants at every level.
pub fn shifted_power(f: &TruthTable, u: usize, constants: usize) -> Result<ComposedFunction> {
    ComposedFunction::build(f, u, Mode::Shifted { constants })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hosens_core::{is_k_order_sensitive_at, pdeg};

    fn maj_xor_parity() -> TruthTable {
        TruthTable::majority(3).unwrap().xor(&TruthTable::parity_fn(3).unwrap()).unwrap()
    }

    #[test]
    fn depth_one_is_base() {
        let f = maj_xor_parity();
        for c in [plain_power(&f, 1).unwrap(), modified_power(&f, 1, 0).unwrap()] {
            assert_eq!(c.to_truth_table().unwrap(), f);
            assert_eq!(c.n(), 3);
        }
        assert_eq!(modified_power(&f, 1, 0).unwrap().witness_point().unwrap(), vec![false; 3]);
    }

    #[test]
    fn and_squared() {
        let f = TruthTable::and_fn(2).unwrap();
        assert_eq!(plain_power(&f, 2).unwrap().to_truth_table().unwrap(), TruthTable::and_fn(4).unwrap());
    }

    #[test]
    fn table_matches_point_evaluation() {
        let f = maj_xor_parity();
        for c in [plain_power(&f, 2).unwrap(), modified_power(&f, 2, 0).unwrap(), shifted_compose(&f, 0b101).unwrap()] {
            let t = c.to_truth_table().unwrap();
            assert!((0..512).all(|x| t.bit(x) == c.eval_index(x as u64).unwrap()));
        }
    }

    #[test]
    fn examples() {
        let f = maj_xor_parity();
        assert_eq!(pdeg(&f), 2);
        let p = plain_power(&f, 2).unwrap().to_truth_table().unwrap();
        assert_eq!(pdeg(&p), 4);
        let m = modified_power(&f, 2, 0).unwrap();
        let t = m.to_truth_table().unwrap();
        assert!(is_k_order_sensitive_at(&t, 0, 2));
        assert_eq!(pdeg(&t), 4);
        assert_eq!(shifted_compose(&f, 0).unwrap().to_truth_table().unwrap(), p);
    }

    #[test]
    fn rejects_bad_arguments() {
        let f = maj_xor_parity();
        assert!(plain_power(&f, 0).is_err());
        assert!(modified_power(&TruthTable::zero(3).unwrap(), 2, 0).is_err());
        assert!(modified_power(&f, 2, 8).is_err());
        assert!(shifted_compose(&f, 8).is_err());
        assert!(plain_power(&f, 3).unwrap().to_truth_table().is_err());
        assert!(plain_power(&f, 4).is_ok());
        assert!(plain_power(&f, 5).is_err());
    }
}
