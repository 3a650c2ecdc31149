use hosens_core::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_all(f: &TruthTable) {
    let n = f.n();
    let w = walsh_transform(f);
    assert_eq!(w.parseval_sum(), 1u128 << (2 * n));
    assert!(w.coeffs().iter().all(|c| c % 2 == 0 && c.unsigned_abs() <= 1 << n));
    assert_eq!(&w.inverse().unwrap(), f);
    let anf = mobius_anf(f);
    assert_eq!(&anf.to_truth_table(), f);
    assert_eq!(AnfPolynomial::of(anf.coefficients()).coefficients(), f);
    assert!(anf.degree() <= w.pdeg());
    let m = w.resiliency_order();
    let d = dual(f);
    if m >= 0 {
        assert_eq!(pdeg(&d) as i32, n as i32 - m - 1);
    }
    assert_eq!(dual(&d), *f);
    let o = max_sensitivity_order(f);
    let od = max_dual_sensitivity_order(&d);
    assert_eq!(o, od);
    assert_eq!(o.order >= 1, sensitivity(f).0 == n);
    if o.order == n {
        assert_eq!(w.pdeg(), n);
    }
    // W_f(u) = W_{f⊕L}(complement of u)
    let wd = walsh_transform(&d);
    let full = (1 << n) - 1;
    assert!((0..1 << n).all(|u| w.get(u) == wd.get(u ^ full)));
}

#[test]
fn exhaustive_up_to_four_variables() {
    for n in 1..=4usize {
        for t in 0..1u64 << (1 << n) {
            check_all(&TruthTable::from_u64(n, t).unwrap());
        }
    }
}

#[test]
fn random_five_to_eight_variables() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 5..=8usize {
        for _ in 0..2500 {
            let f = TruthTable::from_fn(n, |_| false).unwrap();
            let words: Vec<u64> = f.words().iter().map(|_| rng.gen()).collect();
            let words = if n == 5 { vec![words[0] & 0xffff_ffff] } else { words };
            check_all(&TruthTable::from_words(n, words).unwrap());
        }
    }
}

#[test]
fn order_witness_is_lowest() {
    for t in 0..1u64 << 16 {
        let f = TruthTable::from_u64(4, t).unwrap();
        let o = max_sensitivity_order(&f);
        let brute = (0..16).map(|x| sensitivity_order_at(&f, x)).collect::<Vec<_>>();
        let best = *brute.iter().max().unwrap();
        assert_eq!(o.order, best);
        if best > 0 {
            assert_eq!(o.witness, brute.iter().position(|&b| b == best));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_roundtrip(n in 1usize..=12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = TruthTable::from_fn(n, |_| false).unwrap();
        let mask = if n < 6 { (1u64 << (1 << n)) - 1 } else { u64::MAX };
        let words = f.words().iter().map(|_| rng.gen::<u64>() & mask).collect();
        let f = TruthTable::from_words(n, words).unwrap();
        prop_assert_eq!(from_text(&to_text(&f)).unwrap(), f);
    }

    #[test]
    fn translation_preserves_spectrum_magnitudes(seed in any::<u64>(), z in 0usize..512) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bits: Vec<bool> = (0..512).map(|_| rng.gen()).collect();
        let f = TruthTable::from_bits(9, &bits).unwrap();
        let a = walsh_transform(&f);
        let b = walsh_transform(&f.translate(z));
        for u in 0..512 {
            prop_assert_eq!(a.get(u).abs(), b.get(u).abs());
        }
    }
}
