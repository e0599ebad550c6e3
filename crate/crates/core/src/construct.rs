//! Explicit 2-MDS GRS constructions over binary towers.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::codes::LinearCode;
use crate::comb::{binomial, Colex};
use crate::error::{Error, Result};
use crate::fields::{find_irreducible, interpolate, is_irreducible, FieldCtx, FieldDescriptor, Gf, Poly, Step};
use crate::hmds::{build_s, n_cap, PartitionSpec};
use crate::json::int_value;

/// Largest final field (in bits) the general construction will build.
pub const MAX_FIELD_BITS: u64 = 8192;

/// Everything chosen along the way to a construction's locators.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionPlan {
    pub kind: String,
    pub rho: usize,
    pub h: usize,
    pub intermediate: FieldDescriptor,
    pub field: FieldDescriptor,
    pub beta: Value,
    pub base: Vec<Value>,
    pub betas: Vec<Value>,
    pub points: Vec<Value>,
    /// Interpolation polynomial coefficients over the intermediate field, low degree first.
    pub lambdas: Vec<Vec<Value>>,
    /// Degree of the final field over the intermediate one.
    pub extension_degree: usize,
    pub n_cap: Option<Value>,
    pub locators: Vec<Value>,
}

fn enc(f: &FieldCtx, a: &Gf) -> Value {
    int_value(&f.encode(a))
}

/// The first canonical element of `k` outside all proper subfields, and its
/// translates by the 2^h elements with encodings below 2^h.
pub fn sidon_elements(k: &FieldCtx, h: usize) -> Result<(Gf, Vec<Gf>)> {
    if k.characteristic() != 2 || !(k.degree() as usize).is_multiple_of(h) || k.degree() as usize / h < 2 {
        return Err(Error::BadParameters(format!("GF({}^{}) is not a proper extension of GF(2^{h})", k.characteristic(), k.degree())));
    }
    let q = k.order_u64().unwrap_or(u64::MAX);
    let mut beta = None;
    for v in 2..q {
        let a = k.from_u64(v);
        if k.not_in_proper_subfield(&a)? {
            beta = Some(a);
            break;
        }
    }
    let beta = beta.ok_or(Error::NoQualifyingBeta)?;
    let betas: Vec<Gf> = (0..1u64 << h).map(|b| k.add(&beta, &k.from_u64(b))).collect();
    if betas.iter().any(|b| b.is_zero()) {
        return Err(Error::NoQualifyingBeta);
    }
    Ok((beta, betas))
}

/// Whether the products over distinct multisets of exactly `size` elements are all distinct.
pub fn verify_sidon(field: &FieldCtx, betas: &[Gf], size: usize) -> Result<bool> {
    let count = binomial((betas.len() + size).saturating_sub(1) as u64, size as u64);
    crate::cosets::check_budget_u(count.to_u64().unwrap_or(u64::MAX))?;
    let mut seen = HashSet::new();
    // multisets as nondecreasing index lists
    let mut idx = vec![0usize; size];
    loop {
        let p = idx.iter().fold(field.one(), |acc, &i| field.mul(&acc, &betas[i]));
        if !seen.insert(p) {
            return Ok(false);
        }
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if idx[i] + 1 < betas.len() {
                idx[i] += 1;
                for t in i + 1..size {
                    idx[t] = idx[i];
                }
                break;
            }
        }
    }
}

/// The polynomials of degree < |points| with lambda_j(points[i]) = betas[j]^(2i+1).
pub fn interpolation_polys(k: &FieldCtx, betas: &[Gf], points: &[Gf]) -> Result<Vec<Poly>> {
    betas
        .iter()
        .map(|b| {
            let b2 = k.square(b);
            let mut ys = vec![b.clone()];
            for _ in 1..points.len() {
                ys.push(k.mul(ys.last().unwrap(), &b2));
            }
            let p = interpolate(k, points, &ys)?;
            for (x, y) in points.iter().zip(&ys) {
                if p.eval(k, x) != *y {
                    return Err(Error::SpecViolation("interpolation check failed".into()));
                }
            }
            Ok(p)
        })
        .collect()
}

/// Whether among the 12 products beta_{k(j)} * prod_{l in block m} beta_{k(l)}
/// (pair blocks {0,1},{2,3},{4,5}, j outside block m) one value occurs once,
/// for every injective assignment k of six indices.
pub fn theta_check(field: &FieldCtx, betas: &[Gf]) -> bool {
    let n = betas.len();
    for sel in Colex::new(n, 6) {
        let mut perm: Vec<usize> = (0..6).collect();
        loop {
            let x: Vec<&Gf> = perm.iter().map(|&i| &betas[sel[i]]).collect();
            let mut thetas = vec![];
            for m in 0..3 {
                let block = field.mul(x[2 * m], x[2 * m + 1]);
                for (j, xj) in x.iter().enumerate() {
                    if j / 2 != m {
                        thetas.push(field.mul(&block, xj));
                    }
                }
            }
            if !thetas.iter().any(|t| thetas.iter().filter(|u| *u == t).count() == 1) {
                return false;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    true
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Binary tower GF(2^h) -> GF(2^(h*degree)); GF(2^h) is the leaf.
fn binary_tower(h: usize, degree: usize) -> Result<FieldCtx> {
    if h == 1 {
        FieldCtx::binary(degree)
    } else {
        FieldCtx::new(2, &[Step::auto(h), Step::auto(degree)])
    }
}

/// GF(2^h) as a level of `k`, paired with a map into `k` by encoding.
fn base_level(k: &FieldCtx, h: usize) -> Result<FieldCtx> {
    if h == 1 {
        FieldCtx::prime(2)
    } else {
        k.sublevel(&(BigUint::from(1u32) << h)).ok_or_else(|| Error::SpecViolation("missing base level".into()))
    }
}

fn locators_from(k: &FieldCtx, f: &FieldCtx, lambdas: &[Poly]) -> Vec<Gf> {
    lambdas
        .iter()
        .map(|l| {
            let mut c: Vec<Gf> = l.coeffs().to_vec();
            c.resize(f.top_degree(), k.zero());
            f.from_coefficients(&c)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn finish(
    kind: &str,
    rho: usize,
    h: usize,
    k: &FieldCtx,
    f: &FieldCtx,
    beta: &Gf,
    betas: &[Gf],
    points: &[Gf],
    lambdas: &[Poly],
    ncap: Option<&BigUint>,
) -> Result<(LinearCode, ConstructionPlan)> {
    let n = betas.len();
    let locators = locators_from(k, f, lambdas);
    let mut code = LinearCode::grs(f, &locators, n - rho, None)?;
    let plan = ConstructionPlan {
        kind: kind.into(),
        rho,
        h,
        intermediate: k.descriptor(),
        field: f.descriptor(),
        beta: enc(k, beta),
        base: (0..n as u64).map(|b| enc(k, &k.from_u64(b))).collect(),
        betas: betas.iter().map(|b| enc(k, b)).collect(),
        points: points.iter().map(|x| enc(k, x)).collect(),
        lambdas: lambdas.iter().map(|l| l.coeffs().iter().map(|c| enc(k, c)).collect()).collect(),
        extension_degree: f.top_degree(),
        n_cap: ncap.map(int_value),
        locators: locators.iter().map(|a| enc(f, a)).collect(),
    };
    code.meta.insert("plan".into(), serde_json::to_value(&plan).expect("plan serializes"));
    Ok((code, plan))
}

/// Degree of the final extension for redundancy rho: rho(rho-1)(N(rho)-1)+1.
pub fn mu(rho: usize) -> Result<BigUint> {
    let r = BigUint::from(rho * (rho - 1));
    Ok(&r * (n_cap(rho)? - 1u32) + 1u32)
}

/// [2^h, 2^h - rho] GRS code over a degree-mu extension of GF(2^(rho(rho-1)h)).
pub fn general_construction(rho: usize, h: usize) -> Result<(LinearCode, ConstructionPlan)> {
    if rho < 3 || h == 0 {
        return Err(Error::ParameterTooSmall(format!("need rho >= 3 and h >= 1, got rho = {rho}, h = {h}")));
    }
    let ncap = n_cap(rho)?;
    let kdeg = rho * (rho - 1);
    if h >= 63 || (1u64 << h) < 2 * rho as u64 {
        return Err(Error::ParameterTooSmall(format!("code length 2^{h} must be at least 2 rho = {}", 2 * rho)));
    }
    if BigUint::from(1u32) << (kdeg * h) < ncap {
        return Err(Error::ParameterTooSmall(format!("2^{} < N({rho}) = {ncap}", kdeg * h)));
    }
    let mu = mu(rho)?;
    let bits = &mu * (kdeg * h);
    if bits > BigUint::from(MAX_FIELD_BITS) {
        return Err(Error::BudgetExceeded { required: format!("{bits}-bit field"), budget: MAX_FIELD_BITS });
    }
    let mu = mu.to_usize().unwrap();
    let npts = ncap.to_usize().unwrap();
    let k = binary_tower(h, kdeg)?;
    let (beta, betas) = sidon_elements(&k, h)?;
    let points = k.enumerate(0, npts as u64)?;
    let lambdas = interpolation_polys(&k, &betas, &points)?;
    let base = base_level(&k, h)?;
    let g = find_irreducible(&base, mu)?;
    let lifted = Poly::new(&k, g.coeffs().iter().map(|c| k.from_u64(base.to_u64(c).unwrap())).collect());
    let f = k.extend(&lifted)?;
    finish("general", rho, h, &k, &f, &beta, &betas, &points, &lambdas, Some(&ncap))
}

/// [2^h, 2^h - 3] GRS code over GF(2^(32h)) for odd h >= 3.
pub fn rho3_construction(h: usize) -> Result<(LinearCode, ConstructionPlan)> {
    if h.is_multiple_of(2) {
        return Err(Error::EvenH);
    }
    if !(3..=31).contains(&h) {
        return Err(Error::ParameterTooSmall(format!("h must be an odd integer in [3, 31], got {h}")));
    }
    let k = binary_tower(h, 2)?;
    let omega = k.cube_roots_of_unity().into_iter().next().ok_or(Error::NoQualifyingBeta)?;
    let mut m = vec![k.zero(); 17];
    m[0] = omega;
    m[2] = k.one();
    m[3] = k.one();
    m[16] = k.one();
    let modulus = Poly::new(&k, m);
    if !is_irreducible(&k, &modulus) {
        return Err(Error::ReducibleModulus { step: 2 });
    }
    let f = k.extend(&modulus)?;
    let (beta, betas) = sidon_elements(&k, h)?;
    let points = k.enumerate(0, 6)?;
    let lambdas = interpolation_polys(&k, &betas, &points)?;
    finish("rho3", 3, h, &k, &f, &beta, &betas, &points, &lambdas, None)
}

/// Values of x that make det S (pair blocks) vanish when the other five
/// entries are fixed, over all ways to place `prior` into them.
fn forbidden_values(field: &FieldCtx, prior: &[Gf]) -> HashSet<Gf> {
    let spec = PartitionSpec::new(3, vec![2, 2, 2]).expect("valid partition");
    let mut out = HashSet::new();
    let det_at = |x: &[Gf]| build_s(field, &spec, x).and_then(|s| s.det()).expect("3x3");
    // x2 is the mate of the new locator; the other four split into two pairs
    const SPLITS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
    for five in Colex::new(prior.len(), 5) {
        for mate in 0..5 {
            let rest: Vec<&Gf> = (0..5).filter(|&i| i != mate).map(|i| &prior[five[i]]).collect();
            for s in SPLITS {
                let mut x = vec![field.zero(), prior[five[mate]].clone()];
                x.extend(s.iter().map(|&i| rest[i].clone()));
                let b = det_at(&x);
                x[0] = field.one();
                let a = field.sub(&det_at(&x), &b);
                if !a.is_zero() {
                    out.insert(field.neg(&field.div(&b, &a).unwrap()));
                }
            }
        }
    }
    out
}

/// [n, n-3] GRS code whose locators are picked one at a time in canonical
/// order, each avoiding the roots of det S with five earlier locators.
pub fn greedy_rho3(field: &FieldCtx, n: usize) -> Result<LinearCode> {
    if n < 6 {
        return Err(Error::ParameterTooSmall(format!("greedy selection needs n >= 6, got {n}")));
    }
    let need = BigUint::from(15u32) * binomial(n as u64 - 1, 5);
    if *field.order() <= need {
        return Err(Error::FieldTooSmall { need: format!("q > {need}") });
    }
    let mut locs: Vec<Gf> = field.enumerate(0, 5)?;
    let mut next = 5u64;
    while locs.len() < n {
        let bad = forbidden_values(field, &locs);
        let limit = field.order_u64().unwrap_or(u64::MAX);
        let pick = (next..limit).find(|&v| !bad.contains(&field.from_u64(v))).ok_or(Error::Exhausted)?;
        locs.push(field.from_u64(pick));
        next = pick + 1;
    }
    let mut code = LinearCode::grs(field, &locs, n - 3, None)?;
    code.meta.insert("construction".into(), Value::from("greedy-rho3"));
    Ok(code)
}
