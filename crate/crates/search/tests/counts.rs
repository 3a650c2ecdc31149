use std::time::Instant;

use hosens_core::{max_dual_sensitivity_order, nonlinearity, resiliency_order, TruthTable};
use hosens_search::*;

#[test]
fn four_variable_counts() {
    let c = count_profiles_n4();
    assert_eq!((c[&1], c[&2], c[&3]), (3760, 256, 0));
    assert_eq!(c, count_profiles_n4_via_duals());
}

#[test]
fn five_variable_counts() {
    let t = Instant::now();
    let res = resilient_n5();
    assert_eq!(res.len(), 807_980);
    let h = resilient_n5_histogram(&res);
    assert_eq!(h.values().sum::<u64>(), 807_980);
    assert_eq!((h[&0], h[&1], h[&2]), (783_372, 19_680, 4_928));
    let c = count_profiles_n5();
    assert_eq!((c[&1], c[&2], c[&3], c[&4]), (24_608, 4_928, 0, 0));
    // Re-derive a sample through the generic table code.
    for &w in res.iter().step_by(997) {
        let f = TruthTable::from_u64(5, u64::from(w)).unwrap();
        assert!(resiliency_order(&f) >= 1);
    }
    eprintln!("n=5 histogram {h:?} in {:?}", t.elapsed());
}

#[test]
#[ignore = "known discrepancy: exhaustive counts are exactly twice these, see notes"]
fn reported_five_variable_counts() {
    let c = count_profiles_n5();
    assert_eq!((c[&1], c[&2], c[&3], c[&4]), (12_304, 2_464, 0, 0));
}

#[test]
fn six_variable_counts() {
    let t = Instant::now();
    let r = search_n6(&resilient_n5());
    assert_eq!((r.counts[&1], r.counts[&2], r.counts[&3]), (768, 768, 0));
    assert_eq!(r.split.both_two_resilient, 0);
    assert_eq!(r.split.both_exactly_one_resilient, 768);
    for &t in &r.functions {
        let f = TruthTable::from_u64(6, t).unwrap();
        assert!(resiliency_order(&f) >= 2);
        assert_eq!(max_dual_sensitivity_order(&f).order, 2);
    }
    eprintln!("n=6 pairs {} in {:?}", r.candidate_pairs, t.elapsed());
}

#[test]
#[ignore = "known discrepancy: exhaustive counts are 768/768/0, see notes"]
fn reported_six_variable_counts() {
    let r = search_n6(&resilient_n5());
    assert_eq!((r.counts[&1], r.counts[&2], r.counts[&3]), (33_632, 192, 0));
}

#[test]
fn rotation_symmetric_seven() {
    let hits = rotsym_search(7, 1, 3).unwrap();
    assert_eq!(hits.len(), 12);
    for f in &hits {
        assert!(is_rotation_symmetric(f));
        assert_eq!(max_dual_sensitivity_order(f).order, 4);
        assert_eq!(nonlinearity(f), 16);
        assert!(resiliency_order(f) >= 1);
    }
    assert!(rotsym_search(7, 3, 1).unwrap().is_empty());
}

#[test]
fn rotation_symmetric_eight() {
    let hits = rotsym_search(8, 3, 1).unwrap();
    assert_eq!(hits.len(), 24);
    assert!(hits.iter().all(|f| nonlinearity(f) == 96 && resiliency_order(f) == 3));
    assert!(rotsym_search(8, 3, 2).unwrap().is_empty());
    assert!(rotsym_search(8, 4, 1).unwrap().is_empty());
}

#[test]
#[ignore = "known discrepancy: exhaustive count is 24, see notes"]
fn reported_rotation_symmetric_eight() {
    assert_eq!(rotsym_search(8, 3, 1).unwrap().len(), 12);
}

#[test]
fn rotation_symmetric_nine() {
    let all = rotsym_solutions(9, 4).unwrap();
    assert_eq!(all.len(), 142);
    let filtered: Vec<TruthTable> = all.into_iter().filter(|f| max_dual_sensitivity_order(f).order >= 1).collect();
    let hits = rotsym_search(9, 4, 1).unwrap();
    assert_eq!(hits, filtered);
    assert_eq!(hits.len(), 38);
    assert_eq!(rotsym_search(9, 4, 2).unwrap(), hits);
    let nl224 = hits.iter().filter(|f| nonlinearity(f) == 224).count();
    let nl192 = hits.iter().filter(|f| nonlinearity(f) == 192).count();
    assert_eq!((nl224, nl192), (36, 2));
    assert!(rotsym_search(9, 5, 1).unwrap().is_empty());
    for f in &hits {
        let g = reverse_concat(f).unwrap();
        assert_eq!(resiliency_order(&g), 5);
        assert_eq!(max_dual_sensitivity_order(&g).order, 0);
    }
}

#[test]
#[ignore = "known discrepancy: exhaustive count is 38, all of order 2, see notes"]
fn reported_rotation_symmetric_nine() {
    let hits = rotsym_search(9, 4, 1).unwrap();
    assert_eq!(hits.len(), 29);
    assert_eq!(rotsym_search(9, 4, 2).unwrap().len(), 27);
}

#[test]
fn rotation_symmetric_ten() {
    assert!(rotsym_search(10, 5, 1).unwrap().is_empty());
}
