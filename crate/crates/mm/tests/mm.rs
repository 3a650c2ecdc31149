use hosens_core::{is_k_order_sensitive_at, pdeg, sensitivity, sensitivity_at, TruthTable};
use hosens_mm::*;
use proptest::prelude::*;

fn table(spec: &MMSpec) -> TruthTable {
    mm_truth_table(spec).unwrap()
}

fn y_vars(phi: u32) -> Vec<usize> {
    (0..32).filter(|i| phi >> i & 1 == 1).map(|i| i + 1).collect()
}

#[test]
fn seven_variable_example_rows() {
    let spec = seven_variable_example();
    let at = |x: &str| parse_point(x, 3).unwrap();
    assert_eq!(y_vars(spec.phi(at("110"))), vec![3]);
    assert_eq!(y_vars(spec.phi(at("000"))), vec![2, 3]);
    assert_eq!(y_vars(spec.phi(at("100"))), vec![1, 2, 3, 4]);
    assert!(spec.g(at("100")) && !spec.g(at("111")));
    let t = table(&spec);
    assert_eq!(sensitivity(&t).0, 7);
    assert_eq!(pdeg(&t), 6);
    // The rows at 011 and 101 carry even-weight leaves, so the listed rows
    // miss a family condition: the all-ones point has sensitivity 5 and
    // s = 7 is reached elsewhere, e.g. at x = 111, y = 0001.
    assert_eq!(sensitivity_at(&t, 127), 5);
    assert_eq!(sensitivity_at(&t, 7 | 0b1000 << 3), 7);
    assert_eq!(y_vars(spec.phi(at("101"))), vec![1, 3]);
    assert!(!check_mm_family(&spec));
    let mut fixed = spec.clone();
    fixed.set_affine(at("011"), 0b0001, false).unwrap();
    fixed.set_affine(at("101"), 0b0010, false).unwrap();
    assert!(check_mm_family(&fixed));
    let t = table(&fixed);
    assert_eq!(sensitivity_at(&t, 127), 7);
    assert_eq!(pdeg(&t), 6);
}

#[test]
fn th1_up_to_twenty_variables() {
    for (n1, n2) in [(2, 2), (3, 4), (4, 4), (5, 6), (6, 6), (7, 8), (8, 8), (9, 10), (10, 10)] {
        let spec = build_th1(n1, n2).unwrap();
        assert!(check_mm_family(&spec));
        let t = table(&spec);
        let n = n1 + n2;
        assert_eq!(sensitivity_at(&t, t.len() - 1), n);
        assert_eq!(pdeg(&t), n - 1, "({n1},{n2})");
    }
    let t = table(&build_th1(3, 4).unwrap());
    assert_eq!((sensitivity(&t).0, pdeg(&t)), (7, 6));
}

#[test]
fn ladder_ten_ten() {
    let l = ladder_reduce(10, 10).unwrap();
    assert_eq!(l.reduction, 2);
    assert!(l.pdeg <= 18);
    assert_eq!(l.pdeg, 17);
    let t = table(&l.spec);
    assert_eq!(sensitivity_at(&t, t.len() - 1), 20);
    assert_eq!(pdeg(&t), l.pdeg);
    check_ledger(&l, 10, 10);
}

#[test]
fn ladder_small_sizes() {
    let l = ladder_reduce(5, 6).unwrap();
    assert_eq!((l.reduction, l.pdeg), (1, 9));
    check_ledger(&l, 5, 6);

    let l = ladder_reduce(3, 4).unwrap();
    assert_eq!(l.reduction, 0);
    assert_eq!(l.spec, ladder_seed(3, 4).unwrap());
    assert!(l.pdeg <= 6);
    assert!(!l.ledger.notes.is_empty());
}

#[test]
fn ladder_levels_decrease_degree() {
    for (n1, n2) in [(6, 6), (8, 8), (9, 10)] {
        let mut last = None;
        for cap in 0..=3 {
            let l = ladder_reduce_levels(n1, n2, cap).unwrap();
            check_ledger(&l, n1, n2);
            let d = pdeg(&table(&l.spec));
            if let Some((levels, prev)) = last {
                if l.reduction > levels {
                    assert!(d < prev, "({n1},{n2}) cap {cap}");
                } else {
                    assert_eq!(d, prev);
                }
            }
            last = Some((l.reduction, d));
        }
    }
}

/// Replays the ledger independently: every entry covers points that were
/// zero leaves in the seed, no two entries overlap, and the leaf at each
/// covered point is the full parity or its complement as recorded.
fn check_ledger(l: &Ladder, n1: usize, n2: usize) {
    let seed = ladder_seed(n1, n2).unwrap();
    let full = ((1u64 << n2) - 1) as u32;
    let mut covered = vec![false; 1 << n1];
    for e in &l.ledger.entries {
        let ones: usize = (1..=e.prefix_len).chain(e.extra_set.iter().copied()).fold(0, |m, p| m | 1 << (p - 1));
        let zeros: usize = e.zero_positions.iter().fold(0, |m, p| m | 1 << (p - 1));
        assert_eq!(e.zero_positions.len(), 2);
        assert_eq!(ones & zeros, 0);
        assert_eq!(e.degree, (ones | zeros).count_ones() as usize + n2);
        let mut count = 0;
        for a in 0..1usize << n1 {
            if a & ones == ones && a & zeros == 0 {
                count += 1;
                assert!(!covered[a], "overlap at {a:b}");
                covered[a] = true;
                assert_eq!((seed.phi(a), seed.g(a)), (0, false));
                assert_eq!(l.spec.phi(a), full);
                assert_eq!(l.spec.g(a), e.y_form == YForm::HalfOnePlusL);
                assert_eq!(e.sign == '-', e.y_form == YForm::HalfOnePlusL);
            }
        }
        assert_eq!(count, e.points);
    }
    for a in 0..1usize << n1 {
        if !covered[a] {
            assert_eq!((l.spec.phi(a), l.spec.g(a)), (seed.phi(a), seed.g(a)));
        }
    }
    let degs = &l.ledger.degree_by_level;
    assert_eq!(degs.len(), l.reduction + 1);
    assert!(degs.windows(2).all(|w| w[1] < w[0]));
    assert!(check_mm_family(&l.spec));
}

#[test]
fn korder_constructions() {
    for n1 in 3..=10 {
        for n2 in [n1, n1 + 1] {
            if n1 + n2 > 20 {
                continue;
            }
            for k in 1..=3.min(n1) {
                let spec = build_korder(n1, n2, k).unwrap();
                let t = table(&spec);
                assert!(is_k_order_sensitive_at(&t, korder_witness(n1), k), "({n1},{n2},{k})");
                assert_eq!(spec.leaf(korder_witness(n1)), sym_k(n2, k).unwrap());
            }
        }
    }
    // Every flip set of size one or two changes the value.
    let t = table(&build_korder(4, 4, 2).unwrap());
    let w = korder_witness(4);
    for z in 1..256usize {
        if z.count_ones() <= 2 {
            assert_ne!(t.bit(w), t.bit(w ^ z));
        }
    }
    let t = table(&build_korder(4, 4, 1).unwrap());
    assert_eq!(sensitivity_at(&t, korder_witness(4)), 8);
    // k = n1: every x below the top is in the constant-1 shell.
    let spec = build_korder(3, 3, 3).unwrap();
    for a in 0..7 {
        assert_eq!(spec.leaf(a), TruthTable::constant(3, true).unwrap());
    }
    assert!(is_k_order_sensitive_at(&table(&spec), 7, 3));
}

#[test]
fn korder_ladder_twenty_four_variables() {
    let l = ladder_reduce_korder(12, 12, 2).unwrap();
    assert!(l.reduction >= 1);
    let t = table(&l.spec);
    assert!(is_k_order_sensitive_at(&t, korder_witness(12), 2));
    let d = pdeg(&t);
    assert_eq!(d, l.pdeg);
    assert!(d <= 23);
    assert!(d < l.seed_pdeg);
}

#[test]
fn korder_ladder_small() {
    for (n1, n2, k) in [(8, 8, 2), (6, 6, 2), (8, 8, 3), (10, 10, 2)] {
        for cap in 0..=2 {
            let l = ladder_reduce_korder_levels(n1, n2, k, cap).unwrap();
            let t = table(&l.spec);
            assert!(is_k_order_sensitive_at(&t, korder_witness(n1), k));
            assert_eq!(pdeg(&t), l.pdeg);
            assert_eq!(l.pdeg + l.reduction, l.seed_pdeg, "({n1},{n2},{k}) cap {cap}");
            for e in &l.ledger.entries {
                assert_eq!(e.zero_positions.len(), k + 1);
            }
        }
    }
    let l = ladder_reduce_korder(8, 8, 2).unwrap();
    assert_eq!(l.reduction, korder_budget(8, 2));
}

#[test]
fn first_order_ladders_agree() {
    for n in 4..=9 {
        let a = ladder_reduce(n, n + n % 2).unwrap();
        let b = ladder_reduce_korder(n, n, 1).unwrap();
        assert!(a.reduction.abs_diff(b.reduction) <= 1, "n1={n}");
    }
}

fn family_spec(n1: usize, n2: usize, phi: Vec<u32>, g: Vec<bool>, crit: Vec<u32>) -> MMSpec {
    let mut spec = MMSpec::from_tables(n1, n2, phi, g).unwrap();
    let top = (1usize << n1) - 1;
    let full = ((1u64 << n2) - 1) as u32;
    spec.set_affine(top, full, false).unwrap();
    for i in 0..n1 {
        // Force odd weight by toggling y_1 when needed.
        let mut b = crit[i] & full;
        if b.count_ones() % 2 == 0 {
            b ^= 1;
        }
        spec.set_affine(top ^ (1 << i), b, n2 % 2 == 1).unwrap();
    }
    spec
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leaf_semantics(n1 in 1usize..5, n2 in 1usize..5, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = 1usize << n1;
        let phi: Vec<u32> = (0..m).map(|_| rng.gen::<u32>() & ((1 << n2) - 1)).collect();
        let g: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
        let mut spec = MMSpec::from_tables(n1, n2, phi.clone(), g.clone()).unwrap();
        let a0 = rng.gen_range(0..m);
        let bits: Vec<bool> = (0..1usize << n2).map(|_| rng.gen()).collect();
        let leaf = TruthTable::from_bits(n2, &bits).unwrap();
        spec.set_override(a0, leaf.clone()).unwrap();
        let t = table(&spec);
        for a in 0..m {
            for y in 0..1usize << n2 {
                let want = if a == a0 {
                    leaf.bit(y)
                } else {
                    ((phi[a] as usize & y).count_ones() % 2 == 1) ^ g[a]
                };
                prop_assert_eq!(t.bit(a | y << n1), want);
            }
        }
    }

    #[test]
    fn family_members_are_fully_sensitive(n1 in 1usize..6, n2 in 1usize..6, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = 1usize << n1;
        let phi = (0..m).map(|_| rng.gen::<u32>() & ((1 << n2) - 1)).collect();
        let g = (0..m).map(|_| rng.gen()).collect();
        let crit = (0..n1).map(|_| rng.gen()).collect();
        let spec = family_spec(n1, n2, phi, g, crit);
        prop_assert!(check_mm_family(&spec));
        let t = table(&spec);
        prop_assert_eq!(sensitivity_at(&t, t.len() - 1), n1 + n2);
    }
}
