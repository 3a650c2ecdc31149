use serde::{Deserialize, Serialize};

use hosens_core::{Error, Result};

/// `Σ coeffs · y = rhs`, with sparse coefficients sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equality {
    pub coeffs: Vec<(usize, i64)>,
    pub rhs: i64,
}

impl Equality {
    /// Drops zero coefficients, merges repeats and sorts by variable.
    pub fn new(mut coeffs: Vec<(usize, i64)>, rhs: i64) -> Self {
        coeffs.sort_by_key(|c| c.0);
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(coeffs.len());
        for (v, a) in coeffs {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += a,
                _ => merged.push((v, a)),
            }
        }
        merged.retain(|c| c.1 != 0);
        Equality { coeffs: merged, rhs }
    }

    pub fn evaluate(&self, y: &[bool]) -> i64 {
        self.coeffs.iter().filter(|(v, _)| y[*v]).map(|(_, a)| a).sum()
    }
}

/// Binary variables `y_0..y_{N-1}` subject to integer equalities and fixed
/// bits. There is no objective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearConstraintSystem {
    num_vars: usize,
    equalities: Vec<Equality>,
    fixed: Vec<(usize, bool)>,
}

impl LinearConstraintSystem {
    /// Checks that every equality has a nonzero coefficient and every index
    /// is in range. Conflicting fixed bits are allowed here and make the
    /// system infeasible.
    pub fn new(num_vars: usize, equalities: Vec<Equality>, fixed: Vec<(usize, bool)>) -> Result<Self> {
        for (j, e) in equalities.iter().enumerate() {
            if e.coeffs.is_empty() {
                return Err(Error::arg(format!("equality {j} has no nonzero coefficient")));
            }
            if let Some((v, _)) = e.coeffs.iter().find(|(v, _)| *v >= num_vars) {
                return Err(Error::arg(format!("equality {j} uses y{v} beyond {num_vars} variables")));
            }
        }
        if let Some((v, _)) = fixed.iter().find(|(v, _)| *v >= num_vars) {
            return Err(Error::arg(format!("fixed variable y{v} out of range")));
        }
        Ok(LinearConstraintSystem { num_vars, equalities, fixed })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn equalities(&self) -> &[Equality] {
        &self.equalities
    }

    pub fn fixed(&self) -> &[(usize, bool)] {
        &self.fixed
    }

    /// False when some variable is fixed to both 0 and 1.
    pub fn fixed_consistent(&self) -> bool {
        self.fixed_values().is_some()
    }

    pub(crate) fn fixed_values(&self) -> Option<Vec<Option<bool>>> {
        let mut v = vec![None; self.num_vars];
        for &(i, b) in &self.fixed {
            match v[i] {
                Some(old) if old != b => return None,
                _ => v[i] = Some(b),
            }
        }
        Some(v)
    }

    /// Whether a total assignment meets every equality and fixed bit.
    pub fn satisfied_by(&self, y: &[bool]) -> bool {
        y.len() == self.num_vars
            && self.fixed.iter().all(|&(i, b)| y[i] == b)
            && self.equalities.iter().all(|e| e.evaluate(y) == e.rhs)
    }
}
