//! Rotation-symmetric functions: orbit structure and a pruned search over
//! orbit values for resilient functions.

use rayon::prelude::*;

use hosens_core::{max_dual_sensitivity_order, Error, Result, TruthTable, WalshSpectrum};
use hosens_feasibility::{CompiledSystem, Equality};

/// Orbits of `F_2^n` under cyclic rotation of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotSymClass {
    pub n: usize,
    /// Orbits in order of their smallest element; each orbit is ascending.
    pub orbits: Vec<Vec<usize>>,
    /// Smallest point index of each orbit.
    pub representatives: Vec<usize>,
    pub orbit_of: Vec<usize>,
}

/// Cyclic shift sending coordinate `x_i` to position `i + 1`.
pub fn rotate(x: usize, n: usize) -> usize {
    let mask = (1usize << n) - 1;
    ((x << 1) | (x >> (n - 1))) & mask
}

pub fn rotsym_orbits(n: usize) -> Result<RotSymClass> {
    if !(2..=16).contains(&n) {
        return Err(Error::arg(format!("orbit tables need 2 <= n <= 16, got {n}")));
    }
    let len = 1usize << n;
    let mut orbit_of = vec![usize::MAX; len];
    let mut orbits = Vec::new();
    let mut representatives = Vec::new();
    for x in 0..len {
        if orbit_of[x] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut y = x;
        loop {
            orbit_of[y] = id;
            orbit.push(y);
            y = rotate(y, n);
            if y == x {
                break;
            }
        }
        orbit.sort_unstable();
        representatives.push(x);
        orbits.push(orbit);
    }
    Ok(RotSymClass { n, orbits, representatives, orbit_of })
}

pub fn is_rotation_symmetric(f: &TruthTable) -> bool {
    let n = f.n();
    n < 2 || (0..f.len()).all(|x| f.bit(x) == f.bit(rotate(x, n)))
}

/// The table of `f` followed by the reverse of `f`, on `n + 1` variables.
pub fn reverse_concat(f: &TruthTable) -> Result<TruthTable> {
    let len = f.len();
    TruthTable::from_fn(f.n() + 1, |x| if x < len { f.bit(x) } else { f.bit(2 * len - 1 - x) })
}

/// Resiliency rows over orbit values `b_O`: for each representative `u`
/// with `wt(u) <= m`, `Σ_O c(u, O) b_O = 2^{n-1}·[u = 0]` where
/// `c(u, O) = Σ_{x in O} (-1)^{u·x}`.
fn resiliency_system(class: &RotSymClass, m: usize) -> Result<CompiledSystem> {
    let equalities: Vec<Equality> = class
        .representatives
        .iter()
        .filter(|u| u.count_ones() as usize <= m)
        .map(|&u| {
            let coeffs = class
                .orbits
                .iter()
                .enumerate()
                .map(|(o, orbit)| {
                    let c: i64 = orbit.iter().map(|&x| if (u & x).count_ones() % 2 == 0 { 1 } else { -1 }).sum();
                    (o, c)
                })
                .collect();
            let rhs = if u == 0 { 1i64 << (class.n - 1) } else { 0 };
            Equality::new(coeffs, rhs)
        })
        .collect();
    // Large orbits first, so small ones tend to be pivots.
    let mut order: Vec<usize> = (0..class.orbits.len()).collect();
    order.sort_by_key(|&o| (std::cmp::Reverse(class.orbits[o].len()), class.representatives[o]));
    CompiledSystem::new(class.orbits.len(), &equalities, &order)
}

fn sort_key(f: &TruthTable) -> Vec<u64> {
    f.words().iter().rev().copied().collect()
}

fn check_args(n: usize, m: usize) -> Result<RotSymClass> {
    if n > 10 {
        return Err(Error::capacity(format!("rotation-symmetric search supports n <= 10, got {n}")));
    }
    if m >= n {
        return Err(Error::arg("resiliency must be below n"));
    }
    rotsym_orbits(n)
}

fn tables(class: &RotSymClass, values: impl IntoIterator<Item = Vec<bool>>) -> Result<Vec<TruthTable>> {
    let mut out: Vec<TruthTable> =
        values.into_iter().map(|v| TruthTable::from_fn(class.n, |x| v[class.orbit_of[x]])).collect::<Result<_>>()?;
    out.sort_by_cached_key(sort_key);
    out.dedup();
    Ok(out)
}

/// All `m`-resilient rotation-symmetric functions on `n` variables, sorted
/// by table value (point 0 least significant).
pub fn rotsym_solutions(n: usize, m: usize) -> Result<Vec<TruthTable>> {
    let class = check_args(n, m)?;
    let sys = resiliency_system(&class, m)?;
    tables(&class, sys.enumerate(&[], u64::MAX).solutions)
}

/// Orbit values forced by `k`-th order dual sensitivity at `x` with
/// `f(x) = v`, or `None` on a conflict.
fn anchor(class: &RotSymClass, x: usize, v: bool, k: usize) -> Option<Vec<(usize, bool)>> {
    let n = class.n;
    let mut fixed = vec![None; class.orbits.len()];
    fixed[class.orbit_of[x]] = Some(v);
    for w in 1..=k.min(n) {
        let want = v ^ (w % 2 == 0);
        for z in hosens_core::bits::subsets_of_size(n, w) {
            let o = class.orbit_of[x ^ z as usize];
            match fixed[o] {
                Some(b) if b != want => return None,
                _ => fixed[o] = Some(want),
            }
        }
    }
    Some(fixed.iter().enumerate().filter_map(|(o, b)| b.map(|b| (o, b))).collect())
}

/// `m`-resilient rotation-symmetric functions of dual order at least `k`,
/// sorted by table value.
///
/// For `k >= 1` the search is anchored: a witness may be taken to be an
/// orbit representative, and the order condition there fixes the value of
/// every orbit within distance `k` before the resiliency rows are solved.
pub fn rotsym_search(n: usize, m: usize, k: usize) -> Result<Vec<TruthTable>> {
    if k == 0 {
        return rotsym_solutions(n, m);
    }
    let class = check_args(n, m)?;
    let sys = resiliency_system(&class, m)?;
    let anchors: Vec<(usize, bool)> = class.representatives.iter().flat_map(|&x| [(x, false), (x, true)]).collect();
    let values: Vec<Vec<bool>> = anchors
        .into_par_iter()
        .filter_map(|(x, v)| anchor(&class, x, v, k))
        .flat_map_iter(|fixed| sys.enumerate(&fixed, u64::MAX).solutions)
        .collect();
    let out = tables(&class, values)?;
    debug_assert!(out
        .iter()
        .all(|f| { WalshSpectrum::of(f).resiliency_order() >= m as i32 && max_dual_sensitivity_order(f).order >= k }));
    Ok(out)
}
