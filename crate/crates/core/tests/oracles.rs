mod common;

use common::{brute_2mds, brute_lightly_2mds, random_mds};
use hmds::hmds::{is_2mds, lightly_2mds_det};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinant_test_matches_brute_lightly(seed in any::<u64>()) {
        let c = random_mds(seed);
        prop_assert_eq!(lightly_2mds_det(&c).unwrap().0, brute_lightly_2mds(&c));
    }

    #[test]
    fn puncturing_test_matches_brute_strong(seed in any::<u64>()) {
        let c = random_mds(seed);
        let (fast, witness) = is_2mds(&c).unwrap();
        prop_assert_eq!(fast, brute_2mds(&c));
        prop_assert_eq!(fast, witness.is_none());
    }

    #[test]
    fn two_mds_is_preserved_by_duality(seed in any::<u64>()) {
        let c = random_mds(seed);
        let d = c.dual();
        prop_assert_eq!(is_2mds(&c).unwrap().0, is_2mds(&d).unwrap().0);
    }

    #[test]
    fn strong_witness_vectors_share_a_light_coset(seed in any::<u64>()) {
        let c = random_mds(seed);
        let (_, w) = hmds::cosets::is_strongly_list_decodable(&c, 2 * c.redundancy() as u64, 2).unwrap();
        if let Some(w) = w {
            let f = c.field();
            let syn: Vec<_> = w.vectors.iter()
                .map(|v| c.syndrome(&v.iter().map(|&x| f.from_u64(x)).collect::<Vec<_>>()))
                .collect();
            prop_assert!(syn.iter().all(|s| *s == syn[0]));
            let total: usize = w.vectors.iter().map(|v| v.iter().filter(|&&x| x != 0).count()).sum();
            prop_assert!(total as u64 <= 2 * c.redundancy() as u64);
            prop_assert_eq!(w.vectors.len(), 3);
        }
    }
}

#[test]
fn worked_gf7_code_is_lightly_but_not_fully_2mds() {
    let c = hmds::repro::gf7_code();
    assert!(lightly_2mds_det(&c).unwrap().0);
    assert!(brute_lightly_2mds(&c));
    assert!(!brute_2mds(&c));
    assert!(!is_2mds(&c).unwrap().0);
}

#[test]
fn dimension_two_mds_codes_are_2mds() {
    for seed in 0..20 {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let f = hmds::fields::FieldCtx::prime(11).unwrap();
        let c = common::random_grs(&mut rng, &f, 7, 2);
        assert!(is_2mds(&c).unwrap().0);
        assert!(brute_2mds(&c));
    }
}

#[test]
fn sample_contains_both_verdicts() {
    let verdicts: Vec<bool> = (0..120).map(|s| is_2mds(&random_mds(s)).unwrap().0).collect();
    assert!(verdicts.iter().any(|&v| v));
    assert!(verdicts.iter().any(|&v| !v));
}

#[test]
fn binary_2mds_codes_are_exactly_the_trivial_ones() {
    for n in 2..=7usize {
        for k in 1..n {
            for c in common::binary_codes(n, k) {
                let d = c.min_distance().unwrap();
                let brute = brute_2mds(&c);
                assert_eq!(is_2mds(&c).unwrap().0, brute, "n={n} k={k} d={d}");
                if (2..=n - 2).contains(&k) {
                    assert!(!brute, "n={n} k={k} d={d}");
                }
                if k == 1 || (k, d) == (n - 1, 2) {
                    assert!(brute, "n={n} k={k} d={d}");
                }
            }
        }
    }
}
