use hosens_core::{is_k_order_sensitive_at, pdeg, walsh_transform, TruthTable};
use hosens_feasibility::{
    check_existence, decode_solution, encode_existence, export_lp, parse_lp, solve_feasibility, Verdict, WitnessMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// For each cap p, whether some table with f(0)=0, f(e_i)=1 has W(u)=0 for
/// all wt(u) > p. Gray-code walk over the free points with incremental
/// Walsh updates; `S = 2^n`.
fn oracle<const S: usize>(n: usize) -> Vec<bool> {
    assert_eq!(S, 1 << n);
    let free: Vec<usize> = (1..S).filter(|i| !i.is_power_of_two()).collect();
    let sign = |u: usize, x: usize| if (u & x).count_ones() % 2 == 0 { 1i32 } else { -1 };
    let mut f = [false; S];
    for j in 0..n {
        f[1 << j] = true;
    }
    let mut w = [0i32; S];
    for (u, wu) in w.iter_mut().enumerate() {
        *wu = (0..S).map(|x| sign(u, x) * if f[x] { -1 } else { 1 }).sum();
    }
    // above[p]: bitmask of u with wt(u) > p.
    let above: Vec<u64> =
        (0..=n).map(|p| (0..S).filter(|u| u.count_ones() as usize > p).map(|u| 1u64 << u).sum()).collect();
    let mut rows = vec![[0i32; S]; S];
    for (x, row) in rows.iter_mut().enumerate() {
        for (u, r) in row.iter_mut().enumerate() {
            *r = 2 * sign(u, x);
        }
    }
    let nonzero = |w: &[i32; S]| w.iter().enumerate().fold(0u64, |m, (u, &v)| m | (u64::from(v != 0) << u));
    let mut best = (0..=n).find(|&p| nonzero(&w) & above[p] == 0).unwrap();
    for step in 1u64..1 << free.len() {
        let x = free[step.trailing_zeros() as usize];
        let row = &rows[x];
        if f[x] {
            for (a, b) in w.iter_mut().zip(row) {
                *a += b;
            }
        } else {
            for (a, b) in w.iter_mut().zip(row) {
                *a -= b;
            }
        }
        f[x] = !f[x];
        if best > 0 && nonzero(&w) & above[best - 1] == 0 {
            best = (0..best).find(|&p| nonzero(&w) & above[p] == 0).unwrap();
        }
    }
    (0..n).map(|p| best <= p).collect()
}

#[test]
fn solver_agrees_with_exhaustive_oracle() {
    let oracles = [oracle::<4>(2), oracle::<8>(3), oracle::<16>(4), oracle::<32>(5)];
    for (exists, n) in oracles.iter().zip(2..) {
        for p in 0..n {
            let sys = encode_existence(n, p, 0).unwrap();
            let out = solve_feasibility(&sys, u64::MAX).unwrap();
            assert_eq!(matches!(out.verdict, Verdict::Feasible(_)), exists[p], "n={n} p={p}");
            assert_ne!(out.verdict, Verdict::Unknown);
        }
    }
}

#[test]
fn witness_translation_invariance() {
    for n in 3..=5 {
        for p in 0..n {
            let single = check_existence(n, p, WitnessMode::Single, u64::MAX).unwrap();
            let all = check_existence(n, p, WitnessMode::AllPoints, u64::MAX).unwrap();
            assert_eq!(all.witnesses.len(), 1 << n);
            assert!(all.witnesses.iter().all(|w| w.verdict == single.verdict), "n={n} p={p}");
        }
    }
}

#[test]
fn four_variable_examples() {
    for x in 0..16 {
        let sys = encode_existence(4, 2, x).unwrap();
        assert_eq!(solve_feasibility(&sys, u64::MAX).unwrap().verdict, Verdict::Infeasible);
    }
    let sys = encode_existence(4, 3, 0b1111).unwrap();
    let Verdict::Feasible(y) = solve_feasibility(&sys, u64::MAX).unwrap().verdict else {
        panic!("(4,3) should be feasible");
    };
    let f = decode_solution(&sys, &y).unwrap();
    assert!(is_k_order_sensitive_at(&f, 0b1111, 1));
    assert!(pdeg(&f) <= 3);
    assert_eq!(hosens_core::sensitivity(&f).0, 4);
}

#[test]
fn encoding_matches_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0..n);
        let bits: Vec<bool> = (0..1 << n).map(|_| rng.gen_bool(0.5)).collect();
        let f = TruthTable::from_bits(n, &bits).unwrap();
        let f = if rng.gen_bool(0.3) {
            // Push some tables towards low degree so both sides occur.
            let low = TruthTable::linear(n, rng.gen_range(0..1 << n)).unwrap();
            if rng.gen_bool(0.5) {
                low
            } else {
                low.complement()
            }
        } else {
            f
        };
        let sys = encode_existence(n, p, 0).unwrap();
        let y = f.to_bits();
        let eq_ok = sys.equalities().iter().all(|e| e.evaluate(&y) == e.rhs);
        let w = walsh_transform(&f);
        let spec_ok = (0..1usize << n).filter(|u| u.count_ones() as usize > p).all(|u| w.get(u) == 0);
        assert_eq!(eq_ok, spec_ok);
    }
}

#[test]
fn lp_roundtrip_is_byte_stable() {
    let sys = encode_existence(7, 3, 0).unwrap();
    let text = export_lp(&sys);
    assert_eq!(text, export_lp(&encode_existence(7, 3, 0).unwrap()));
    assert_eq!(text.lines().filter(|l| l.starts_with(" c")).count(), 64);
    let binaries: usize = text
        .split("Binary\n")
        .nth(1)
        .unwrap()
        .lines()
        .take_while(|l| *l != "End")
        .map(|l| l.split_whitespace().count())
        .sum();
    assert_eq!(binaries, 128);
    assert_eq!(parse_lp(&text).unwrap(), sys);
}
