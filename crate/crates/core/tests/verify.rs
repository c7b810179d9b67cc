use mucodes::verify::{
    catalan, dyck_count_exact, has_min_distance, is_f_apd, is_kappa_wmu, is_mu_code, oracle_max_code_size,
    recheck_profile, OracleConstraints,
};
use mucodes::{Alphabet, Code, Seq};
use proptest::prelude::*;

// does some prefix of a of length in kappa..n equal a suffix of b
fn overlap(a: &[u8], b: &[u8], kappa: usize) -> bool {
    let n = a.len();
    (kappa.max(1)..n).any(|l| a[..l] == b[n - l..])
}

fn brute_wmu(code: &[Seq], kappa: usize) -> bool {
    code.iter()
        .all(|a| code.iter().all(|b| !overlap(a.symbols(), b.symbols(), kappa)))
}

fn small_code(q: u8) -> impl Strategy<Value = Vec<Seq>> {
    prop::collection::btree_set(prop::collection::vec(0..q, 5), 1..5).prop_map(move |set| {
        set.into_iter()
            .map(|v| Seq::new(Alphabet::new(q as u32).unwrap(), v).unwrap())
            .collect()
    })
}

proptest! {
    #[test]
    fn wmu_verifier_matches_brute_force(code in small_code(2), kappa in 1usize..5) {
        let report = is_kappa_wmu(&code, kappa);
        prop_assert_eq!(report.passed, brute_wmu(&code, kappa));
        if let Some(cx) = report.counterexample {
            prop_assert!(cx.replay());
        }
        prop_assert_eq!(is_mu_code(&code).passed, brute_wmu(&code, 1));
    }

    #[test]
    fn wmu_is_monotone_in_kappa(code in small_code(4), kappa in 1usize..4) {
        if is_kappa_wmu(&code, kappa).passed {
            prop_assert!(is_kappa_wmu(&code, kappa + 1).passed);
        }
    }

    #[test]
    fn apd_counterexamples_replay(code in small_code(4), f in 1usize..=5) {
        let r = is_f_apd(&code, f).unwrap();
        if let Some(cx) = r.counterexample {
            prop_assert!(cx.replay());
        }
        if r.passed && f < 5 {
            prop_assert!(is_f_apd(&code, f + 1).unwrap().passed);
        }
    }
}

#[test]
fn dyck_counts_match_enumeration() {
    for m in 1..=7usize {
        for cap in 1..=m {
            let mut brute = 0u128;
            for w in 0u32..(1 << (2 * m)) {
                let mut h = 0i32;
                let mut ok = w.count_ones() as usize == m;
                for i in (0..2 * m).rev() {
                    h += if w >> i & 1 == 1 { 1 } else { -1 };
                    ok &= h >= 0 && h <= cap as i32;
                }
                brute += ok as u128;
            }
            assert_eq!(dyck_count_exact(m, Some(cap)).unwrap(), brute, "m={m} cap={cap}");
        }
        assert_eq!(dyck_count_exact(m, None).unwrap(), catalan(m));
    }
}

#[test]
fn oracle_witness_is_valid_and_maximal() {
    for n in 3..=6 {
        let r = oracle_max_code_size(Alphabet::Binary, n, OracleConstraints::wmu(2)).unwrap();
        assert_eq!(r.size, r.witness.len());
        assert!(brute_wmu(r.witness.members(), 2));
        for rep in recheck_profile(&r.witness).unwrap() {
            assert!(rep.passed, "{rep}");
        }
    }
    // every two-word MU code of length 3: none exists beyond size 1
    let r = oracle_max_code_size(Alphabet::Binary, 3, OracleConstraints::mu()).unwrap();
    assert_eq!(r.size, 1);
    assert!(oracle_max_code_size(Alphabet::Quaternary, 7, OracleConstraints::mu()).is_err());
}

#[test]
fn spec_examples() {
    let code = Code::from_members(vec![Seq::parse("100").unwrap(), Seq::parse("011").unwrap()]).unwrap();
    assert!(is_kappa_wmu(&code, 2).passed);
    assert!(!is_mu_code(&code).passed);
    assert!(has_min_distance(&code, 3).unwrap().passed);
    let a = Seq::parse("ACGA").unwrap();
    let pair = Code::from_members(vec![a.clone(), a.complement()]).unwrap();
    assert!(!is_f_apd(&pair, 4).unwrap().passed);
}
