use hmds::codes::LinearCode;
use hmds::construct::*;
use hmds::fields::FieldCtx;
use hmds::hmds::{is_2mds, lightly_2mds_det};
use hmds::Error;

#[test]
fn rho3_h3_is_an_mds_2mds_code_over_gf2_96() {
    let (c, plan) = rho3_construction(3).unwrap();
    assert_eq!((c.n(), c.k()), (8, 5));
    assert_eq!(c.field().degree(), 96);
    assert!(c.is_mds());
    assert!(lightly_2mds_det(&c).unwrap().0);
    assert!(is_2mds(&c).unwrap().0);
    assert_eq!(plan.betas.len(), 8);
    assert_eq!(plan.points.len(), 6);
    assert!(c.meta.contains_key("plan"));
}

#[test]
fn rho3_locators_are_distinct_and_the_plan_is_consistent() {
    let (c, plan) = rho3_construction(3).unwrap();
    let locs = c.locators().unwrap();
    for i in 0..locs.len() {
        for j in 0..i {
            assert_ne!(locs[i], locs[j]);
        }
    }
    let k = FieldCtx::from_descriptor(&plan.intermediate).unwrap();
    assert_eq!(k.degree(), 6);
    for l in &plan.lambdas {
        assert!(l.len() <= 6);
    }
}

#[test]
fn constructions_are_deterministic() {
    let a = serde_json::to_string(&rho3_construction(3).unwrap().0.to_json()).unwrap();
    let b = serde_json::to_string(&rho3_construction(3).unwrap().0.to_json()).unwrap();
    assert_eq!(a, b);
    let f = FieldCtx::binary(13).unwrap();
    let a = serde_json::to_string(&greedy_rho3(&f, 7).unwrap().to_json()).unwrap();
    let b = serde_json::to_string(&greedy_rho3(&f, 7).unwrap().to_json()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rho3_json_roundtrip_keeps_the_code() {
    let (c, _) = rho3_construction(3).unwrap();
    let j = serde_json::to_string(&c.to_json()).unwrap();
    let back = LinearCode::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
    assert_eq!(back.parity_check(), c.parity_check());
}

#[test]
fn greedy_codes_are_2mds() {
    for (m, n) in [(13, 6), (13, 8), (17, 10)] {
        let c = greedy_rho3(&FieldCtx::binary(m).unwrap(), n).unwrap();
        assert_eq!((c.n(), c.k()), (n, n - 3));
        assert!(c.is_mds());
        assert!(is_2mds(&c).unwrap().0, "n={n} m={m}");
    }
}

#[test]
fn greedy_over_an_odd_prime_field() {
    let c = greedy_rho3(&FieldCtx::prime(10007).unwrap(), 8).unwrap();
    assert!(is_2mds(&c).unwrap().0);
}

#[test]
fn greedy_starts_from_the_first_five_elements() {
    let f = FieldCtx::binary(13).unwrap();
    let c = greedy_rho3(&f, 6).unwrap();
    let first: Vec<_> = c.locators().unwrap()[..5].iter().map(|a| f.to_u64(a).unwrap()).collect();
    assert_eq!(first, vec![0, 1, 2, 3, 4]);
}

#[test]
fn parameter_errors() {
    assert_eq!(rho3_construction(4).unwrap_err(), Error::EvenH);
    assert!(matches!(rho3_construction(1), Err(Error::ParameterTooSmall(_))));
    assert!(matches!(greedy_rho3(&FieldCtx::binary(8).unwrap(), 8), Err(Error::FieldTooSmall { .. })));
    assert!(matches!(greedy_rho3(&FieldCtx::binary(13).unwrap(), 5), Err(Error::ParameterTooSmall(_))));
    assert!(matches!(general_construction(2, 3), Err(Error::ParameterTooSmall(_))));
    assert!(matches!(general_construction(3, 2), Err(Error::ParameterTooSmall(_))));
    assert!(matches!(general_construction(4, 3), Err(Error::BudgetExceeded { .. })));
}

#[test]
fn sidon_translates_in_small_fields() {
    let k = FieldCtx::new(2, &[hmds::fields::Step::auto(2), hmds::fields::Step::auto(3)]).unwrap();
    let (_, betas) = sidon_elements(&k, 2).unwrap();
    assert_eq!(betas.len(), 4);
    assert!(verify_sidon(&k, &betas, 2).unwrap());
    assert!(verify_sidon(&k, &betas, 3).unwrap());
}

#[test]
fn theta_condition_for_the_rho3_betas() {
    let k = FieldCtx::new(2, &[hmds::fields::Step::auto(3), hmds::fields::Step::auto(2)]).unwrap();
    let (_, betas) = sidon_elements(&k, 3).unwrap();
    assert!(theta_check(&k, &betas));
}

#[test]
#[ignore = "long: builds GF(2^2502) and runs the full 2-MDS sweep"]
fn general_rho3_h3_is_2mds() {
    let (c, _) = general_construction(3, 3).unwrap();
    assert_eq!(c.field().degree(), 2502);
    assert!(is_2mds(&c).unwrap().0);
}

#[test]
#[ignore = "long: [32,29] code over GF(2^160)"]
fn rho3_h5_is_2mds() {
    let (c, _) = rho3_construction(5).unwrap();
    assert!(is_2mds(&c).unwrap().0);
}
