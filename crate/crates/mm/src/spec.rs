use std::collections::BTreeMap;

use hosens_core::{from_hex, to_hex, Error, TruthTable, MAX_VARS};
use serde::{Deserialize, Serialize};

/// A Maiorana-McFarland style function `f(x, y) = φ(x)·y ⊕ g(x)` on
/// `n1 + n2` variables, with optional nonlinear leaves.
///
/// `x` occupies the low `n1` bits of a point index and `y` the high `n2`
/// bits. `phi[a]` is a mask over `y` (bit `i` is `y_{i+1}`). A leaf override
/// at `a` replaces the affine leaf `φ(a)·y ⊕ g(a)` by an arbitrary
/// `n2`-variable table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SpecFile", try_from = "SpecFile")]
pub struct MMSpec {
    n1: usize,
    n2: usize,
    phi: Vec<u32>,
    g_bits: Vec<bool>,
    leaf_override: BTreeMap<usize, TruthTable>,
}

impl MMSpec {
    /// The spec with every leaf constant 0.
    pub fn new(n1: usize, n2: usize) -> hosens_core::Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::arg("both halves need at least one variable"));
        }
        if n1 + n2 > MAX_VARS {
            return Err(Error::capacity(format!("n1 + n2 = {} exceeds {MAX_VARS}", n1 + n2)));
        }
        Ok(MMSpec { n1, n2, phi: vec![0; 1 << n1], g_bits: vec![false; 1 << n1], leaf_override: BTreeMap::new() })
    }

    pub fn from_tables(n1: usize, n2: usize, phi: Vec<u32>, g_bits: Vec<bool>) -> hosens_core::Result<Self> {
        let mut spec = Self::new(n1, n2)?;
        if phi.len() != 1 << n1 || g_bits.len() != 1 << n1 {
            return Err(Error::arg(format!("phi and g need {} entries", 1usize << n1)));
        }
        if let Some(bad) = phi.iter().find(|&&b| (b as u64) >> n2 != 0) {
            return Err(Error::arg(format!("phi value {bad:#b} has more than {n2} bits")));
        }
        spec.phi = phi;
        spec.g_bits = g_bits;
        Ok(spec)
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn phi(&self, a: usize) -> u32 {
        self.phi[a]
    }

    pub fn g(&self, a: usize) -> bool {
        self.g_bits[a]
    }

    pub fn phi_table(&self) -> &[u32] {
        &self.phi
    }

    pub fn g_table(&self) -> &[bool] {
        &self.g_bits
    }

    pub fn overrides(&self) -> &BTreeMap<usize, TruthTable> {
        &self.leaf_override
    }

    pub fn override_at(&self, a: usize) -> Option<&TruthTable> {
        self.leaf_override.get(&a)
    }

    /// Sets the affine leaf at `a` and drops any override there.
    pub fn set_affine(&mut self, a: usize, phi: u32, g: bool) -> hosens_core::Result<()> {
        self.check_point(a)?;
        if (phi as u64) >> self.n2 != 0 {
            return Err(Error::arg(format!("phi value {phi:#b} has more than {} bits", self.n2)));
        }
        self.phi[a] = phi;
        self.g_bits[a] = g;
        self.leaf_override.remove(&a);
        Ok(())
    }

    pub fn set_override(&mut self, a: usize, leaf: TruthTable) -> hosens_core::Result<()> {
        self.check_point(a)?;
        if leaf.n() != self.n2 {
            return Err(Error::arg(format!("leaf has {} variables, expected {}", leaf.n(), self.n2)));
        }
        self.leaf_override.insert(a, leaf);
        Ok(())
    }

    fn check_point(&self, a: usize) -> hosens_core::Result<()> {
        if a >> self.n1 != 0 {
            return Err(Error::arg(format!("point {a:#b} outside F_2^{}", self.n1)));
        }
        Ok(())
    }

    /// Value of the leaf at `a` on `y`.
    pub fn leaf_value(&self, a: usize, y: usize) -> bool {
        match self.leaf_override.get(&a) {
            Some(t) => t.bit(y),
            None => ((self.phi[a] as usize & y).count_ones() % 2 == 1) ^ self.g_bits[a],
        }
    }

    /// The leaf at `a` as an `n2`-variable table.
    pub fn leaf(&self, a: usize) -> TruthTable {
        TruthTable::from_fn(self.n2, |y| self.leaf_value(a, y)).expect("n2 within capacity")
    }
}

/// Full truth table of the spec.
pub fn mm_truth_table(spec: &MMSpec) -> hosens_core::Result<TruthTable> {
    let n1 = spec.n1;
    let mask = (1usize << n1) - 1;
    let leaves: Vec<Option<&TruthTable>> = (0..1usize << n1).map(|a| spec.leaf_override.get(&a)).collect();
    TruthTable::from_fn(spec.n(), |idx| {
        let a = idx & mask;
        let y = idx >> n1;
        match leaves[a] {
            Some(t) => t.bit(y),
            None => ((spec.phi[a] as usize & y).count_ones() % 2 == 1) ^ spec.g_bits[a],
        }
    })
}

/// Whether the spec meets the four conditions that force `s(f) = n` at the
/// all-ones point: `φ(1) = 1`, `g(1) = 0`, and at every neighbour `1^i` of
/// the all-ones `x` an odd-weight `φ` with `g ≡ n2 (mod 2)`. Specs with an
/// override at any of these points are rejected.
pub fn check_mm_family(spec: &MMSpec) -> bool {
    let top = (1usize << spec.n1) - 1;
    let full = ((1u64 << spec.n2) - 1) as u32;
    if spec.override_at(top).is_some() || spec.phi[top] != full || spec.g_bits[top] {
        return false;
    }
    (0..spec.n1).all(|i| {
        let a = top ^ (1 << i);
        spec.override_at(a).is_none() && spec.phi[a].count_ones() % 2 == 1 && spec.g_bits[a] == (spec.n2 % 2 == 1)
    })
}

/// `x` as the string `x_1 x_2 … x_{n1}`.
pub fn point_string(a: usize, n: usize) -> String {
    (0..n).map(|i| if a >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Inverse of [`point_string`].
pub fn parse_point(s: &str, n: usize) -> hosens_core::Result<usize> {
    if s.len() != n {
        return Err(Error::arg(format!("expected {n} bits, got {s:?}")));
    }
    s.chars().enumerate().try_fold(0usize, |acc, (i, c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        _ => Err(Error::arg(format!("bad bit {c:?} in {s:?}"))),
    })
}

/// On-disk form: bitstrings for `φ` rows and `g`, hex for overridden leaves.
#[derive(Serialize, Deserialize)]
struct SpecFile {
    n1: usize,
    n2: usize,
    phi: Vec<String>,
    g: String,
    #[serde(default)]
    overrides: BTreeMap<String, String>,
}

impl From<MMSpec> for SpecFile {
    fn from(s: MMSpec) -> Self {
        SpecFile {
            n1: s.n1,
            n2: s.n2,
            phi: s.phi.iter().map(|&b| point_string(b as usize, s.n2)).collect(),
            g: s.g_bits.iter().map(|&b| if b { '1' } else { '0' }).collect(),
            overrides: s.leaf_override.iter().map(|(&a, t)| (point_string(a, s.n1), to_hex(t))).collect(),
        }
    }
}

impl TryFrom<SpecFile> for MMSpec {
    type Error = Error;

    fn try_from(f: SpecFile) -> hosens_core::Result<Self> {
        let phi =
            f.phi.iter().map(|r| parse_point(r, f.n2).map(|v| v as u32)).collect::<hosens_core::Result<Vec<_>>>()?;
        let g = parse_point(&f.g, f.g.len()).map(|_| f.g.chars().map(|c| c == '1').collect::<Vec<_>>())?;
        let mut spec = MMSpec::from_tables(f.n1, f.n2, phi, g)?;
        for (a, hex) in &f.overrides {
            let a = parse_point(a, f.n1)?;
            spec.set_override(a, from_hex(f.n2, hex)?)?;
        }
        Ok(spec)
    }
}
