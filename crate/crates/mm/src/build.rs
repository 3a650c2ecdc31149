use hosens_core::{is_k_order_sensitive_at, pdeg, sensitivity, sensitivity_at, Error, TruthTable};

use crate::error::{MmError, Result};
use crate::ledger::TermLedger;
use crate::spec::{check_mm_family, mm_truth_table, MMSpec};
use crate::sym::sym_k;

fn check_th1_sizes(n1: usize, n2: usize) -> hosens_core::Result<()> {
    if n1 < 2 {
        return Err(Error::arg(format!("need n1 >= 2, got {n1}")));
    }
    if !(n1 <= n2 && n2 <= n1 + 1) || n2 % 2 != 0 {
        return Err(Error::arg(format!("need n1 <= n2 <= n1 + 1 with n2 even, got ({n1}, {n2})")));
    }
    Ok(())
}

/// The constrained points shared by [`build_th1`] and the ladder seed:
/// `φ = 1` at the all-ones point and at `1…100` (the latter complemented),
/// and `φ = e_i` at the neighbour `1^i`.
fn skeleton(n1: usize, n2: usize) -> hosens_core::Result<MMSpec> {
    check_th1_sizes(n1, n2)?;
    let mut spec = MMSpec::new(n1, n2)?;
    let top = (1usize << n1) - 1;
    let full = ((1u64 << n2) - 1) as u32;
    spec.set_affine(top, full, false)?;
    spec.set_affine(top >> 2, full, true)?;
    for i in 0..n1 {
        spec.set_affine(top ^ (1 << i), 1 << i, false)?;
    }
    Ok(spec)
}

/// Checks a first-order construction: family conditions, `s(f) = n` at the
/// all-ones point and `pdeg <= max_pdeg`. Returns the table and its pdeg.
pub(crate) fn verify_full_sensitivity(
    spec: &MMSpec,
    max_pdeg: usize,
    ledger: &TermLedger,
) -> Result<(TruthTable, usize)> {
    let fail = |message: String| MmError::Verification { message, ledger: Box::new(ledger.clone()) };
    if !check_mm_family(spec) {
        return Err(fail("family conditions do not hold".into()));
    }
    let t = mm_truth_table(spec)?;
    let n = spec.n();
    let top = t.len() - 1;
    if sensitivity_at(&t, top) != n || sensitivity(&t).0 != n {
        return Err(fail(format!("sensitivity below {n} at the all-ones point")));
    }
    let d = pdeg(&t);
    if d > max_pdeg {
        return Err(fail(format!("pdeg {d} exceeds {max_pdeg}")));
    }
    Ok((t, d))
}

/// Full-sensitivity construction with `pdeg <= n - 1`.
///
/// Besides the constrained points every other `x` gets the single-variable
/// leaf `y_{(a mod n2) + 1}`.
pub fn build_th1(n1: usize, n2: usize) -> Result<MMSpec> {
    let mut spec = skeleton(n1, n2)?;
    let top = (1usize << n1) - 1;
    for a in 0..top {
        if a != top >> 2 && (top ^ a).count_ones() != 1 {
            spec.set_affine(a, 1 << (a % n2), false)?;
        }
    }
    verify_full_sensitivity(&spec, spec.n() - 1, &TermLedger::default())?;
    Ok(spec)
}

/// The sparse starting point of the degree ladder: the constrained points of
/// [`build_th1`] and constant-0 leaves everywhere else.
pub fn ladder_seed(n1: usize, n2: usize) -> Result<MMSpec> {
    let spec = skeleton(n1, n2)?;
    verify_full_sensitivity(&spec, spec.n() - 1, &TermLedger::default())?;
    Ok(spec)
}

pub(crate) fn check_korder_sizes(n1: usize, n2: usize, k: usize) -> hosens_core::Result<()> {
    if k == 0 || k > n1.min(n2) {
        return Err(Error::arg(format!("need 1 <= k <= min(n1, n2), got k={k}")));
    }
    Ok(())
}

/// Point `(1_{n1}, 0_{n2})`, where the k-order constructions are sensitive.
pub fn korder_witness(n1: usize) -> usize {
    (1 << n1) - 1
}

/// `k`-th order sensitive construction: `sym^k` at the all-ones `x`, the
/// constant 1 at every `x` of weight in `[n1 - k, n1)`, constant 0 elsewhere.
pub fn build_korder(n1: usize, n2: usize, k: usize) -> Result<MMSpec> {
    check_korder_sizes(n1, n2, k)?;
    let mut spec = MMSpec::new(n1, n2)?;
    let top = (1usize << n1) - 1;
    spec.set_override(top, sym_k(n2, k)?)?;
    for a in 0..top {
        if (a.count_ones() as usize) + k >= n1 {
            spec.set_affine(a, 0, true)?;
        }
    }
    let t = mm_truth_table(&spec)?;
    if !is_k_order_sensitive_at(&t, korder_witness(n1), k) {
        return Err(MmError::Verification {
            message: format!("not {k}-th order sensitive at the witness"),
            ledger: Box::default(),
        });
    }
    Ok(spec)
}

/// A seven-variable full-sensitivity example with `n1 = 3`, `n2 = 4`,
/// listed as (x_1x_2x_3, leaf) rows.
pub fn seven_variable_example() -> MMSpec {
    // Rows: x string, y variables in the leaf, constant.
    const ROWS: [(&str, &[usize], bool); 8] = [
        ("000", &[2, 3], false),
        ("001", &[1], false),
        ("010", &[2], false),
        ("011", &[1, 2], false),
        ("100", &[1, 2, 3, 4], true),
        ("101", &[1, 3], false),
        ("110", &[3], false),
        ("111", &[1, 2, 3, 4], false),
    ];
    let mut spec = MMSpec::new(3, 4).expect("small sizes");
    for (x, ys, c) in ROWS {
        let a = crate::spec::parse_point(x, 3).expect("valid row");
        let phi = ys.iter().fold(0u32, |m, &i| m | 1 << (i - 1));
        spec.set_affine(a, phi, c).expect("valid row");
    }
    spec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn th1_sizes() {
        assert!(build_th1(3, 5).is_err());
        assert!(build_th1(4, 3).is_err());
        assert!(build_th1(1, 2).is_err());
        for (n1, n2) in [(2, 2), (3, 4), (4, 4), (5, 6)] {
            let spec = build_th1(n1, n2).unwrap();
            assert!(check_mm_family(&spec));
        }
    }

    #[test]
    fn korder_small() {
        for (n1, n2, k) in [(3, 3, 1), (3, 3, 2), (3, 3, 3), (4, 4, 2)] {
            build_korder(n1, n2, k).unwrap();
        }
        assert!(build_korder(3, 3, 4).is_err());
        assert!(build_korder(3, 3, 0).is_err());
    }
}
