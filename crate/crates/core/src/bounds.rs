//! Closed-form bounds and thresholds, all exact except the entropy-based ones.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::comb::binomial;
use crate::error::{Error, Result};

/// Tolerance for the float-valued entropy comparisons.
pub const FLOAT_TOL: f64 = 1e-12;

/// |B(n, tau)| = sum_{i <= tau} C(n, i) (q-1)^i.
pub fn volume(q: u64, n: u64, tau: u64) -> BigUint {
    let q1 = BigUint::from(q - 1);
    let mut pow = BigUint::from(1u32);
    let mut s = BigUint::zero();
    for i in 0..=tau.min(n) {
        s += binomial(n, i) * &pow;
        pow *= &q1;
    }
    s
}

/// Which corollary case guarantees the improved bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingletonReport {
    /// floor((L(n-k) + L - 1)/(L+1))
    pub tau_base: u64,
    /// floor(L(n-k)/(L+1))
    pub tau_improved: u64,
    pub u: u64,
    pub r: u64,
    pub improved_applies: bool,
    pub case: Option<Case>,
}

/// n - k = (L+1)u + r with r in [1, L+1].
pub fn split_redundancy(redundancy: u64, l: u64) -> (u64, u64) {
    let (mut u, mut r) = redundancy.div_rem(&(l + 1));
    if r == 0 && u > 0 {
        u -= 1;
        r = l + 1;
    }
    (u, r)
}

/// Smallest h >= 0 with C(k+h, k-1) >= L.
fn case_b_h(k: u64, l: u64) -> u64 {
    let target = BigUint::from(l);
    (0..).find(|&h| binomial(k + h, k - 1) >= target).unwrap()
}

pub fn corollary_case(n: u64, k: u64, l: u64) -> Option<Case> {
    let rd = n - k;
    if k >= l {
        return Some(Case::A);
    }
    if k >= 2 && n >= (l + 1) * case_b_h(k, l) + k {
        return Some(Case::B);
    }
    let m = rd % (l + 1);
    if k >= 2 && (m == 0 || m + 1 == l || m == l) {
        return Some(Case::C);
    }
    if rd <= l + 1 && BigUint::from(l) <= binomial(n - 1, k - 1) {
        return Some(Case::D);
    }
    None
}

pub fn singleton_report(n: u64, k: u64, l: u64) -> Result<SingletonReport> {
    if k == 0 || k >= n || l == 0 {
        return Err(Error::BadParameters(format!("need 1 <= k < n and L >= 1, got n={n}, k={k}, L={l}")));
    }
    let rd = n - k;
    let (u, r) = split_redundancy(rd, l);
    let applies = BigUint::from(l) <= binomial(k - 1 + u + r, k - 1);
    Ok(SingletonReport {
        tau_base: (l * rd + l - 1) / (l + 1),
        tau_improved: l * rd / (l + 1),
        u,
        r,
        improved_applies: applies,
        case: corollary_case(n, k, l),
    })
}

/// L <= C(n-1, k-1).
pub fn strongly_bound_applies(n: u64, k: u64, l: u64) -> bool {
    k >= 1 && k <= n && BigUint::from(l) <= binomial(n - 1, k - 1)
}

/// Binary entropy.
pub fn h2(x: f64) -> f64 {
    let t = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    t(x) + t(1.0 - x)
}

/// q-ary entropy, equal to 1 on [(q-1)/q, 1].
pub fn hq(q: u64, x: f64) -> f64 {
    let qf = q as f64;
    if x >= (qf - 1.0) / qf {
        return 1.0;
    }
    (h2(x) + x * (qf - 1.0).log2()) / qf.log2()
}

pub fn eta(q: u64, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::BadEpsilon);
    }
    let qf = q as f64;
    Ok(h2((qf - 1.0) / qf * (1.0 - eps)) - (1.0 - eps) * h2(1.0 / qf))
}

/// eta_q(eps) and the list-size threshold 2^(eta n) / sqrt(2n).
pub fn eta_threshold(q: u64, n: u64, eps: f64) -> Result<(f64, f64)> {
    let e = eta(q, eps)?;
    let nf = n as f64;
    Ok((e, (e * nf).exp2() / (2.0 * nf).sqrt()))
}

/// Lower bound q^(n H_q(tau/n)) / sqrt(2n) on the ball volume.
pub fn volume_lower_bound(q: u64, n: u64, tau: u64) -> f64 {
    let nf = n as f64;
    ((q as f64).log2() * nf * hq(q, tau as f64 / nf)).exp2() / (2.0 * nf).sqrt()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    /// Exact rational; L-MDS codes are l-MDS for all l <= L when L is below it.
    pub nesting: String,
    /// MDS codes are L-MDS for every L at least this.
    pub high_l: String,
    /// MDS codes over fields at least this large are not (n-k, L)-list decodable for L < C(n,k).
    pub large_l_field: String,
}

pub fn nesting_threshold(n: u64, k: u64) -> BigRational {
    let top = BigInt::from(binomial(n - 1, k - 1));
    let mid = (n + k).div_ceil(2).saturating_sub(2);
    let bottom = BigInt::from(binomial(mid, k - 1));
    let ratio = if bottom.is_zero() { None } else { Some(BigRational::new(top, bottom)) };
    let kr = BigRational::from_integer(BigInt::from(k));
    let m = match ratio {
        Some(r) if r > kr => r,
        _ => kr,
    };
    m + BigRational::from_integer(BigInt::from(1))
}

pub fn high_l_threshold(n: u64, k: u64) -> BigInt {
    BigInt::from(binomial(n, k)) - BigInt::from(k * (n - k))
}

pub fn large_l_field(n: u64, k: u64) -> BigUint {
    binomial(n, k + 1)
}

pub fn thresholds(n: u64, k: u64) -> Result<Thresholds> {
    if k == 0 || k > n {
        return Err(Error::BadParameters(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(Thresholds {
        nesting: nesting_threshold(n, k).to_string(),
        high_l: high_l_threshold(n, k).to_string(),
        large_l_field: large_l_field(n, k).to_string(),
    })
}

/// theta_w = (C(n-w, k) - (n-k-w+1)) / (n-k-w) for w in [0, n-k-1].
pub fn vartheta_seq(n: u64, k: u64) -> Result<Vec<BigRational>> {
    if k == 0 || k >= n {
        return Err(Error::BadParameters(format!("need 1 <= k < n, got n={n}, k={k}")));
    }
    Ok((0..n - k)
        .map(|w| {
            let num = BigInt::from(binomial(n - w, k)) - BigInt::from(n - k - w + 1);
            BigRational::new(num, BigInt::from(n - k - w))
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HittingSet {
    /// The chosen elements, or `None` if t greedy rounds did not hit every subset.
    pub set: Option<Vec<usize>>,
    /// Whether the count condition guarantees success.
    pub guaranteed: bool,
}

/// Greedy hitting set over [0, w): repeatedly take the element lying in the
/// most remaining subsets (smallest on ties), for at most t rounds.
pub fn hitting_set(subsets: &[Vec<usize>], w: usize, s: usize, t: usize) -> Result<HittingSet> {
    for j in subsets {
        if j.len() < s || j.iter().any(|&x| x >= w) {
            return Err(Error::BadParameters(format!("subset {j:?} must lie in [0, {w}) with size >= {s}")));
        }
    }
    let l = subsets.len();
    let ratio = if (w as u64) < s as u64 + t as u64 {
        None
    } else {
        Some(BigRational::new(BigInt::from(binomial(w as u64, t as u64)), BigInt::from(binomial((w - s) as u64, t as u64))))
    };
    let lr = BigRational::from_integer(BigInt::from(l));
    let guaranteed = l <= t || ratio.is_none_or(|r| lr < r);
    let mut left: Vec<&Vec<usize>> = subsets.iter().collect();
    let mut x = vec![];
    for _ in 0..t {
        if left.is_empty() {
            break;
        }
        let mut count = vec![0usize; w];
        for j in &left {
            for &e in j.iter() {
                count[e] += 1;
            }
        }
        let best = (0..w).filter(|e| !x.contains(e)).max_by_key(|&e| (count[e], std::cmp::Reverse(e))).unwrap();
        if count[best] == 0 {
            break;
        }
        x.push(best);
        left.retain(|j| !j.contains(&best));
    }
    Ok(HittingSet { set: left.is_empty().then(|| { x.sort_unstable(); x }), guaranteed })
}

/// Largest number of codewords of the [n,1] repetition code over GF(q) in a
/// radius-tau ball: the symbols agreeing with the center in >= n - tau places.
pub fn repetition_list_size(q: u64, n: u64, tau: u64) -> u64 {
    match n.saturating_sub(tau) {
        0 => q,
        m => q.min(n / m),
    }
}

/// Upper bound floor(L q^n / V_q(n, tau)) on the size of a (tau, L)-list decodable code.
pub fn sphere_packing_max(q: u64, n: u64, tau: u64, l: u64) -> BigUint {
    BigUint::from(l) * BigUint::from(q).pow(n as u32) / volume(q, n, tau)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub k: u64,
    pub q: u64,
    #[serde(rename = "L")]
    pub l: u64,
    pub eps: Option<f64>,
    pub tau: u64,
    pub volume: String,
    pub sphere_packing_max: String,
    pub singleton: SingletonReport,
    pub strongly_bound_applies: bool,
    pub eta: Option<f64>,
    pub eta_list_threshold: Option<f64>,
    pub thresholds: Thresholds,
    pub hq_tau: f64,
}

/// Everything for one parameter set; tau defaults to the improved Singleton radius.
pub fn report(n: u64, k: u64, q: u64, l: u64, eps: Option<f64>, tau: Option<u64>) -> Result<BoundReport> {
    if q < 2 {
        return Err(Error::BadParameters("q must be at least 2".into()));
    }
    let singleton = singleton_report(n, k, l)?;
    let tau = tau.unwrap_or(singleton.tau_improved).min(n);
    let (eta, thr) = match eps {
        Some(e) => {
            let (a, b) = eta_threshold(q, n, e)?;
            (Some(a), Some(b))
        }
        None => (None, None),
    };
    Ok(BoundReport {
        n,
        k,
        q,
        l,
        eps,
        tau,
        volume: volume(q, n, tau).to_string(),
        sphere_packing_max: sphere_packing_max(q, n, tau, l).to_string(),
        singleton,
        strongly_bound_applies: strongly_bound_applies(n, k, l),
        eta,
        eta_list_threshold: thr,
        thresholds: thresholds(n, k)?,
        hq_tau: hq(q, tau as f64 / n as f64),
    })
}

/// Float view of a rational, for display.
pub fn to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
