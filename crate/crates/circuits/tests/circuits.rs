use hosens_amplify::{modified_power, plain_power, shifted_compose};
use hosens_circuits::*;
use hosens_core::{resiliency_order, sensitivity_order_at, TruthTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f3() -> Netlist {
    Netlist::parse(F3_NETLIST).unwrap()
}

fn random_table(rng: &mut ChaCha8Rng, n: usize) -> TruthTable {
    let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen()).collect();
    TruthTable::from_bits(n, &bits).unwrap()
}

#[test]
fn nine_variable_circuit() {
    let base = f3();
    let s = base.stats();
    assert_eq!((s.xor_count, s.and_count), (5, 3));
    let f3_table = base.truth_table().unwrap();
    for a in 0..8 {
        let f9 = shifted_compose(&f3_table, a).unwrap();
        let net = amplified_circuit(&base, &f9).unwrap();
        let table = f9.to_truth_table().unwrap();
        assert_eq!(net.truth_table().unwrap(), table);
        for x in 0..512usize {
            let p: Vec<bool> = (0..9).map(|i| x >> i & 1 == 1).collect();
            assert_eq!(net.simulate(&p).unwrap(), table.bit(x));
        }
        let st = net.stats();
        assert_eq!((st.xor_count, st.and_count), (20, 12));
        assert_eq!(st.not_count, a.count_ones() as usize);
        let g9 = append_parity(&net).unwrap();
        let gt = g9.truth_table().unwrap();
        assert_eq!(gt, table.xor(&TruthTable::parity_fn(9).unwrap()).unwrap());
        assert_eq!(resiliency_order(&gt), 4);
        if a == 0 {
            let gs = g9.stats();
            assert_eq!(gs.total, 41);
            assert_eq!(gs.total - st.total, 9);
            assert_eq!(st.depth, 8);
            assert!(gs.depth <= st.depth + 4 + 1);
        }
    }
}

#[test]
fn size_and_depth_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (d, max_u) in [(2usize, 4usize), (3, 2), (4, 2)] {
        for _ in 0..6 {
            let t = random_table(&mut rng, d);
            let base = synth_from_anf(&t).unwrap();
            let bs = base.stats();
            for u in 1..=max_u {
                let net = layered_amplify(&base, u, &[]).unwrap();
                let st = net.stats();
                assert_eq!(st.total, bs.total * instance_count(d, u));
                assert_eq!(instance_count(d, u), (d.pow(u as u32) - 1) / (d - 1));
                assert_eq!(st.depth, u * bs.depth, "d={d} u={u}");
                let reference = plain_power(&t, u).unwrap().to_truth_table().unwrap();
                assert_eq!(net.truth_table().unwrap(), reference);
                let n = d.pow(u as u32);
                let with = append_parity(&net).unwrap();
                let log2 = usize::BITS as usize - (n - 1).leading_zeros() as usize;
                assert!(with.stats().depth <= u * bs.depth + log2 + 1);
                assert_eq!(with.stats().total, st.total + n);
                assert!(with.stats().total as f64 <= linear_size_constant(bs.total, d) * n as f64);
            }
        }
    }
}

#[test]
fn modified_layers_match_the_evaluator() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 20 {
        let d = rng.gen_range(2..=4);
        let t = random_table(&mut rng, d);
        let w = rng.gen_range(0..1usize << d);
        if sensitivity_order_at(&t, w) == 0 {
            continue;
        }
        let u = if d == 2 { rng.gen_range(2..=4) } else { 2 };
        let f = modified_power(&t, u, w).unwrap();
        let net = amplified_circuit(&synth_from_anf(&t).unwrap(), &f).unwrap();
        assert_eq!(net.truth_table().unwrap(), f.to_truth_table().unwrap());
        done += 1;
    }
}

#[test]
fn thirty_six_variable_circuit() {
    let base_table = TruthTable::from_u64(6, 0x7ff8_eca8_eac8_e001).unwrap();
    let f = modified_power(&base_table, 2, 0).unwrap();
    let base = synth_from_anf(&base_table).unwrap();
    let net = amplified_circuit(&base, &f).unwrap();
    assert_eq!(net.inputs(), 36);
    assert_eq!(net.stats().total, 7 * base.stats().total + f.level_flip(2).count_ones() as usize);
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for _ in 0..10_000 {
        let x: Vec<bool> = (0..36).map(|_| rng.gen()).collect();
        assert_eq!(net.simulate(&x).unwrap(), f.eval(&x).unwrap());
    }
    let text = net.emit();
    assert_eq!(Netlist::parse(&text).unwrap().emit(), text);
}

#[test]
fn mismatched_base_is_rejected() {
    let f = plain_power(&TruthTable::majority(3).unwrap(), 2).unwrap();
    assert!(amplified_circuit(&f3(), &f).is_err());
}

#[test]
fn anf_synthesis_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=8 {
        for _ in 0..10 {
            let t = random_table(&mut rng, n);
            assert_eq!(synth_from_anf(&t).unwrap().truth_table().unwrap(), t);
        }
    }
    assert!(synth_from_anf(&TruthTable::zero(17).unwrap()).is_err());
}
