mod common;

use hmds::codes::LinearCode;
use hmds::fields::{interpolate, FieldCtx, Step};
use hmds::matgf::GfMatrix;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fields() -> Vec<FieldCtx> {
    vec![
        FieldCtx::prime(13).unwrap(),
        FieldCtx::binary(8).unwrap(),
        FieldCtx::binary(96).unwrap(),
        FieldCtx::new(3, &[Step::auto(2), Step::auto(3)]).unwrap(),
        FieldCtx::new(2, &[Step::auto(3), Step::auto(5)]).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(seed in any::<u64>(), which in 0usize..5) {
        let f = &fields()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if !a.is_zero() {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        let e = f.encode(&a);
        prop_assert!(e < *f.order());
        prop_assert_eq!(f.decode(&e).unwrap(), a.clone());
        let q = f.order().clone();
        prop_assert_eq!(f.pow(&a, &q), a);
    }

    #[test]
    fn det_vanishes_exactly_on_rank_drop(seed in any::<u64>(), n in 1usize..6) {
        let f = FieldCtx::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = GfMatrix::from_rows(&f, (0..n).map(|_| (0..n).map(|_| f.random(&mut rng)).collect()).collect());
        prop_assert_eq!(m.det().unwrap().is_zero(), m.rank() < n);
    }

    #[test]
    fn kernel_is_annihilated(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..7) {
        let f = FieldCtx::binary(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = GfMatrix::from_rows(&f, (0..rows).map(|_| (0..cols).map(|_| f.random(&mut rng)).collect()).collect());
        let k = m.kernel(hmds::matgf::Side::Right);
        prop_assert_eq!(k.rows(), cols - m.rank());
        if k.rows() > 0 {
            prop_assert!(m.mul(&k.transpose()).is_zero());
        }
    }

    #[test]
    fn generator_and_parity_check_are_orthogonal(seed in any::<u64>()) {
        let c = common::random_mds(seed);
        prop_assert!(c.parity_check().mul(&c.generator().transpose()).is_zero());
        let d = c.dual();
        prop_assert_eq!(d.k(), c.redundancy());
        prop_assert_eq!(d.dual().k(), c.k());
        for row in 0..c.k() {
            prop_assert!(c.is_codeword(c.generator().row(row)));
        }
    }

    #[test]
    fn mds_iff_distance_is_singleton(seed in any::<u64>()) {
        let c = common::random_mds(seed);
        prop_assert_eq!(c.min_distance().unwrap(), c.redundancy() + 1);
        prop_assert_eq!(c.min_distance_by_codewords().unwrap(), c.redundancy() + 1);
    }

    #[test]
    fn puncturing_an_mds_code_keeps_it_mds(seed in any::<u64>()) {
        let c = common::random_mds(seed);
        if c.redundancy() >= 2 {
            let p = c.puncture(&[0]).unwrap();
            prop_assert_eq!((p.n(), p.k()), (c.n() - 1, c.k()));
            prop_assert!(p.is_mds());
        }
    }

    #[test]
    fn interpolation_hits_every_point(seed in any::<u64>(), m in 1usize..8) {
        let f = FieldCtx::binary(10).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xs: Vec<_> = (0..m as u64).map(|i| f.from_u64(i * 37 + 1)).collect();
        let ys: Vec<_> = (0..m).map(|_| f.random(&mut rng)).collect();
        let p = interpolate(&f, &xs, &ys).unwrap();
        prop_assert!(p.degree().is_none_or(|d| d < m));
        for (x, y) in xs.iter().zip(&ys) {
            prop_assert_eq!(&p.eval(&f, x), y);
        }
    }

    #[test]
    fn code_json_roundtrip(seed in any::<u64>()) {
        let c = common::random_mds(seed);
        let j = serde_json::to_string(&c.to_json()).unwrap();
        let back = LinearCode::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        prop_assert_eq!(back.parity_check(), c.parity_check());
    }
}

#[test]
fn order_of_tower() {
    let f = FieldCtx::new(2, &[Step::auto(3), Step::auto(5)]).unwrap();
    assert_eq!(*f.order(), BigUint::from(1u64 << 15));
}

#[test]
fn grs_rejects_bad_inputs() {
    let f = FieldCtx::prime(7).unwrap();
    let x: Vec<_> = [1, 2, 2].iter().map(|&a| f.from_u64(a)).collect();
    assert!(LinearCode::grs(&f, &x, 1, None).is_err());
    let x: Vec<_> = (0..8).map(|a| f.from_u64(a)).collect();
    assert!(LinearCode::grs(&f, &x, 3, None).is_err());
}
