//! Embedded example codes and the reproduction suite for their numeric claims.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds;
use crate::codes::{CodeJson, LinearCode};
use crate::construct;
use crate::cosets::{self, ProfileMode};
use crate::error::{Error, Result};
use crate::fields::FieldCtx;
use crate::hmds;
use crate::matgf::GfMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Standard,
    Long,
}

impl std::str::FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tier> {
        match s {
            "fast" => Ok(Tier::Fast),
            "standard" => Ok(Tier::Standard),
            "long" => Ok(Tier::Long),
            _ => Err(Error::Parse(format!("unknown tier {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproCase {
    pub id: &'static str,
    pub tier: Tier,
    pub description: &'static str,
    /// Enumeration budget the case needs.
    pub budget: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproResult {
    pub id: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, expected: Value, got: Value) -> Check {
    Check { name: name.into(), pass: expected == got, expected, got }
}

pub const CASES: &[ReproCase] = &[
    ReproCase { id: "table1", tier: Tier::Fast, description: "coset weight distribution of the GF(7) [8,4] code", budget: 10_000_000 },
    ReproCase { id: "gf7", tier: Tier::Fast, description: "GF(7) [8,4]: (4,50) list decoding, not 50-MDS, L0 = 51, lightly 2-MDS only", budget: 10_000_000 },
    ReproCase { id: "gf5", tier: Tier::Fast, description: "GF(5) [6,2]: shared coset, violating L in {3..6}, L0 = 7", budget: 10_000_000 },
    ReproCase { id: "gf11", tier: Tier::Fast, description: "GF(11) [6,k] on (0 1 4 9 5 3), k = 2, 3: L-MDS for every L", budget: 10_000_000 },
    ReproCase { id: "gf73-k4", tier: Tier::Standard, description: "GF(73) [7,4] on (0 1 9 8 3 16 34): L-MDS for every L", budget: 100_000_000 },
    ReproCase { id: "gf73-k3", tier: Tier::Standard, description: "GF(73) [7,3]: L-MDS for every L (about 10^9 enumerations)", budget: 2_000_000_000 },
    ReproCase { id: "gf73-k2", tier: Tier::Long, description: "GF(73) [7,2]: L-MDS for every L (about 4*10^10 enumerations)", budget: 60_000_000_000 },
    ReproCase { id: "repetition", tier: Tier::Fast, description: "[5,1] repetition: (3,2) decodable, (4,2) not", budget: 10_000_000 },
    ReproCase { id: "bounds", tier: Tier::Fast, description: "bound and threshold arithmetic for (8,4,2) and (6,2)", budget: 1 },
    ReproCase { id: "sylvester-example", tier: Tier::Fast, description: "worked det M = -(Vandermonde) det S example and monomial counts", budget: 1_000_000 },
    ReproCase { id: "rho3-h3", tier: Tier::Fast, description: "[8,5] construction over GF(2^96) is 2-MDS", budget: 1 },
    ReproCase { id: "greedy", tier: Tier::Fast, description: "greedy [6,3], [8,5] over GF(2^13) and [10,7] over GF(2^17) are 2-MDS", budget: 1 },
    ReproCase { id: "rho3-h5", tier: Tier::Long, description: "[32,29] construction over GF(2^160) is 2-MDS", budget: 1 },
    ReproCase { id: "general-rho3-h3", tier: Tier::Long, description: "general construction [8,5] over GF(2^2502) is 2-MDS", budget: 1 },
];

pub fn gf7_code() -> LinearCode {
    let f = FieldCtx::prime(7).unwrap();
    let h = GfMatrix::from_u64(
        &f,
        &[
            vec![1, 1, 1, 1, 1, 1, 1, 0],
            vec![0, 1, 2, 3, 4, 5, 6, 0],
            vec![0, 1, 4, 2, 2, 4, 1, 0],
            vec![0, 1, 1, 6, 1, 6, 6, 1],
        ],
    );
    LinearCode::from_parity_check(h).unwrap()
}

pub const TABLE1_VECTOR: [u64; 8] = [0, 0, 0, 0, 0, 2, 6, 4];
pub const TABLE1: [u64; 9] = [0, 0, 0, 5, 45, 162, 566, 921, 702];

pub fn gf5_code() -> LinearCode {
    let f = FieldCtx::prime(5).unwrap();
    LinearCode::from_generator(GfMatrix::from_u64(&f, &[vec![1, 0, 1, 1, 1, 1], vec![0, 1, 1, 2, 3, 4]])).unwrap()
}

pub const GF5_VECTORS: [[u64; 6]; 4] = [[1, 1, 3, 0, 0, 0], [0, 4, 0, 0, 3, 1], [4, 0, 0, 1, 0, 4], [0, 0, 1, 2, 1, 0]];

/// Code with parity-check rows (a_j^i), i in [0, n-k), over GF(p).
pub fn power_code(p: u64, locators: &[u64], k: usize) -> LinearCode {
    let f = FieldCtx::prime(p).unwrap();
    let locs: Vec<_> = locators.iter().map(|&a| f.from_u64(a)).collect();
    LinearCode::grs(&f, &locs, k, None).unwrap()
}

pub const GF11_LOCATORS: [u64; 6] = [0, 1, 4, 9, 5, 3];
pub const GF73_LOCATORS: [u64; 7] = [0, 1, 9, 8, 3, 16, 34];

pub fn repetition(q: u64, n: usize) -> LinearCode {
    let f = FieldCtx::prime(q).unwrap();
    LinearCode::from_generator(GfMatrix::from_u64(&f, &[vec![1; n]])).unwrap()
}

/// Named fixtures for export.
pub fn fixtures() -> Vec<(&'static str, CodeJson)> {
    vec![
        ("gf7_8_4", gf7_code().to_json()),
        ("gf5_6_2", gf5_code().to_json()),
        ("gf11_6_2", power_code(11, &GF11_LOCATORS, 2).to_json()),
        ("gf11_6_3", power_code(11, &GF11_LOCATORS, 3).to_json()),
        ("gf73_7_2", power_code(73, &GF73_LOCATORS, 2).to_json()),
        ("gf73_7_3", power_code(73, &GF73_LOCATORS, 3).to_json()),
        ("gf73_7_4", power_code(73, &GF73_LOCATORS, 4).to_json()),
    ]
}

pub fn find(id: &str) -> Result<&'static ReproCase> {
    CASES.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCase(id.into()))
}

fn lmds_checks(code: &LinearCode, label: &str) -> Result<Vec<Check>> {
    let (n, k) = (code.n() as u64, code.k() as u64);
    let high = bounds::high_l_threshold(n, k);
    let l_max: u64 = high.try_into().unwrap_or(1).max(1);
    let p = cosets::l_mds_profile(code, l_max)?;
    Ok(vec![
        check(&format!("{label}: violating L up to {l_max}"), json!([]), json!(p.violating)),
        check(&format!("{label}: L0"), json!(1), json!(p.l0)),
        check(&format!("{label}: certified"), json!(true), json!(p.certified)),
    ])
}

fn two_mds(code: &LinearCode) -> Result<Value> {
    Ok(json!(hmds::is_2mds(code)?.0))
}

pub fn run_case(id: &str) -> Result<ReproResult> {
    let case = find(id)?;
    let checks = match case.id {
        "table1" => {
            let c = gf7_code();
            let y: Vec<_> = TABLE1_VECTOR.iter().map(|&v| c.field().from_u64(v)).collect();
            let d = cosets::coset_distribution(&c, &y)?;
            vec![
                check("A_0..A_8", json!(TABLE1), json!(d)),
                check("Bonneau identity", json!(true), json!(cosets::bonneau_check(&c)?)),
            ]
        }
        "gf7" => {
            let c = gf7_code();
            let y: Vec<_> = TABLE1_VECTOR.iter().map(|&v| c.field().from_u64(v)).collect();
            let light: usize = cosets::lightest_weights(&c, &y, 51, 5)?.iter().sum();
            let p = cosets::l_mds_profile(&c, 60)?;
            vec![
                check("(4,50)-list decodable", json!(true), json!(cosets::is_list_decodable(&c, 4, 50)?.0)),
                check("(4,49)-list decodable", json!(false), json!(cosets::is_list_decodable(&c, 4, 49)?.0)),
                check("lightest 51 weights in the coset", json!(200), json!(light)),
                check("50-MDS", json!(false), json!(cosets::is_strongly_list_decodable(&c, 200, 50)?.0)),
                check("50 violating", json!(true), json!(p.violating.contains(&50))),
                check("51 violating", json!(false), json!(p.violating.contains(&51))),
                check("L0", json!(51), json!(p.l0)),
                check("high-L threshold", json!("54"), json!(bounds::high_l_threshold(8, 4).to_string())),
                check("lightly 2-MDS (determinants)", json!(true), json!(hmds::lightly_2mds_det(&c)?.0)),
                check("2-MDS (puncturing)", json!(false), two_mds(&c)?),
                check("2-MDS (strong, T = 8)", json!(false), json!(cosets::is_strongly_list_decodable(&c, 8, 2)?.0)),
            ]
        }
        "gf5" => {
            let c = gf5_code();
            let e = cosets::Engine::new(&c)?;
            let syn: Vec<u64> = GF5_VECTORS.iter().map(|v| e.syndrome_of(&v.map(|x| x as u32))).collect();
            let p = cosets::l_mds_profile(&c, 10)?;
            vec![
                check("four vectors share a coset", json!(true), json!(syn.iter().all(|&s| s == syn[0]))),
                check("violating L in [1,10]", json!([3, 4, 5, 6]), json!(p.violating)),
                check("L0", json!(7), json!(p.l0)),
                check("high-L threshold", json!("7"), json!(bounds::high_l_threshold(6, 2).to_string())),
                check("(4,11)-list decodable", json!(true), json!(cosets::is_list_decodable(&c, 4, 11)?.0)),
                check("(4,10)-list decodable", json!(false), json!(cosets::is_list_decodable(&c, 4, 10)?.0)),
                check("(3,3)-list decodable", json!(false), json!(cosets::is_list_decodable(&c, 3, 3)?.0)),
                check("2-MDS (strong, T = 8)", json!(true), json!(cosets::is_strongly_list_decodable(&c, 8, 2)?.0)),
            ]
        }
        "gf11" => {
            let mut v = vec![];
            for k in [2, 3] {
                let c = power_code(11, &GF11_LOCATORS, k);
                v.extend(lmds_checks(&c, &format!("k={k}"))?);
                let th = bounds::high_l_threshold(6, k as u64);
                let l: u64 = th.try_into().unwrap();
                let full = cosets::profile_cosets(&c, ProfileMode::Full)?;
                let worst = full
                    .values()
                    .filter_map(|p| {
                        let d = p.distribution.as_ref()?;
                        let mut need = l + 1;
                        let mut s = 0u64;
                        for (w, &a) in d.iter().enumerate() {
                            let t = need.min(a);
                            s += t * w as u64;
                            need -= t;
                        }
                        (need == 0).then_some(s)
                    })
                    .min();
                v.push(check(&format!("k={k}: L-MDS at the high-L threshold (full profile)"), json!(true), json!(worst.is_none_or(|s| s > l * (6 - k as u64)))));
            }
            v
        }
        "gf73-k4" => lmds_checks(&power_code(73, &GF73_LOCATORS, 4), "k=4")?,
        "gf73-k3" => lmds_checks(&power_code(73, &GF73_LOCATORS, 3), "k=3")?,
        "gf73-k2" => lmds_checks(&power_code(73, &GF73_LOCATORS, 2), "k=2")?,
        "repetition" => {
            let c = repetition(5, 5);
            vec![
                check("(3,2)-list decodable", json!(true), json!(cosets::is_list_decodable(&c, 3, 2)?.0)),
                check("(4,2)-list decodable", json!(false), json!(cosets::is_list_decodable(&c, 4, 2)?.0)),
            ]
        }
        "bounds" => {
            let r = bounds::singleton_report(8, 4, 2)?;
            vec![
                check("tau_base", json!(3), json!(r.tau_base)),
                check("tau_improved", json!(2), json!(r.tau_improved)),
                check("(u, r)", json!([1, 1]), json!([r.u, r.r])),
                check("case", json!("a"), json!(r.case)),
                check("volume V_7(8,4)", json!("103873"), json!(bounds::volume(7, 8, 4).to_string())),
                check("nesting threshold (8,4)", json!("39/4"), json!(bounds::nesting_threshold(8, 4).to_string())),
                check("large-L field (8,4)", json!("56"), json!(bounds::large_l_field(8, 4).to_string())),
                check("high-L (6,2)", json!("7"), json!(bounds::high_l_threshold(6, 2).to_string())),
            ]
        }
        "sylvester-example" => {
            let f = FieldCtx::prime(7)?;
            let spec = hmds::PartitionSpec::new(3, vec![2, 2, 2])?;
            let x: Vec<_> = (0..6).map(|v| f.from_u64(v)).collect();
            let expansion = hmds::expand_m_rho(1_000_003, &spec)?;
            let allowed = hmds::admissible_exponents(&spec);
            vec![
                check("residual at (0..5)", json!(true), json!(hmds::conjecture_residual(&f, &spec, &x)?.is_zero())),
                check("N_rho", json!("48"), json!(hmds::n_rho(&spec).to_string())),
                check("N(3)", json!("24"), json!(hmds::n_cap(3)?.to_string())),
                check("monomials of det M", json!(48), json!(expansion.len())),
                check("monomials satisfy R1/R2", json!(true), json!(expansion.keys().all(|r| allowed.contains(r)))),
                check("coefficients are +-1", json!(true), json!(expansion.values().all(|c| c.abs() == 1))),
            ]
        }
        "rho3-h3" => {
            let (c, _) = construct::rho3_construction(3)?;
            vec![
                check("[n,k]", json!([8, 5]), json!([c.n(), c.k()])),
                check("field bits", json!(96), json!(c.field().degree())),
                check("MDS", json!(true), json!(c.is_mds())),
                check("lightly 2-MDS (determinants)", json!(true), json!(hmds::lightly_2mds_det(&c)?.0)),
                check("2-MDS", json!(true), two_mds(&c)?),
            ]
        }
        "greedy" => {
            let mut v = vec![];
            for (m, n) in [(13, 6), (13, 8), (17, 10)] {
                let c = construct::greedy_rho3(&FieldCtx::binary(m)?, n)?;
                v.push(check(&format!("n={n} over GF(2^{m}): 2-MDS"), json!(true), two_mds(&c)?));
            }
            v
        }
        "rho3-h5" => {
            let (c, _) = construct::rho3_construction(5)?;
            vec![check("[n,k]", json!([32, 29]), json!([c.n(), c.k()])), check("2-MDS", json!(true), two_mds(&c)?)]
        }
        "general-rho3-h3" => {
            let (c, _) = construct::general_construction(3, 3)?;
            vec![
                check("field bits", json!(2502), json!(c.field().degree())),
                check("2-MDS", json!(true), two_mds(&c)?),
            ]
        }
        other => return Err(Error::UnknownCase(other.into())),
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(ReproResult { id: id.into(), pass, checks })
}

/// Runs a case under its own budget unless a larger one is already set.
pub fn run_case_budgeted(id: &str) -> Result<ReproResult> {
    let case = find(id)?;
    let old = crate::budget();
    if case.budget > old {
        crate::set_budget(case.budget);
    }
    let r = run_case(id);
    crate::set_budget(old);
    r
}

/// Cases at or below the given tier.
pub fn cases_up_to(tier: Tier) -> Vec<&'static ReproCase> {
    CASES.iter().filter(|c| c.tier <= tier).collect()
}
