//! Exhaustive coset analysis over small fields (q <= 2^16).
//!
//! Vectors of a Hamming ball are enumerated weight-major, supports in colex
//! order, values with the last support position varying fastest. Syndromes
//! are indexed as sum s_i q^i over their canonical entries.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::volume;
use crate::codes::LinearCode;
use crate::comb::{binomial, Colex};
use crate::error::{Error, Result};
use crate::fields::{Gf, SmallField};

/// Dense per-syndrome tables are used up to this many bytes.
const DENSE_LIMIT_BYTES: u64 = 3 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    CosetVectors,
    SubsetTriple,
}

/// A concrete certificate that a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syndrome: Option<u64>,
    /// Coset vectors as canonical field encodings.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vectors: Vec<Vec<u64>>,
    /// Coordinate subsets (0-based).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subsets: Vec<Vec<usize>>,
    /// The violated quantity, e.g. a weight sum or a vector count.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub punctured_on: Option<Vec<usize>>,
}

impl Witness {
    pub fn vectors(syndrome: Option<u64>, vectors: Vec<Vec<u64>>, quantity: Option<u64>) -> Witness {
        Witness { kind: WitnessKind::CosetVectors, syndrome, vectors, subsets: vec![], quantity, punctured_on: None }
    }

    pub fn subsets(subsets: Vec<Vec<usize>>) -> Witness {
        Witness { kind: WitnessKind::SubsetTriple, syndrome: None, vectors: vec![], subsets, quantity: None, punctured_on: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileMode {
    /// All q^n vectors.
    Full,
    /// Vectors of weight <= weight_cap; keep up to list_cap lightest weights per coset.
    Capped { weight_cap: usize, list_cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetProfile {
    pub syndrome: u64,
    /// (A_w) for w in [0, n]; full mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distribution: Option<Vec<u64>>,
    /// Sorted lightest weights; capped mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lightest: Option<Vec<usize>>,
    /// Whether the coset has vectors heavier than the cap.
    pub tail_above_cap: bool,
    /// Number of enumerated vectors in the coset.
    pub count: u64,
}

/// Enumeration context for one code over a small field.
pub struct Engine {
    sf: SmallField,
    n: usize,
    r: usize,
    q: u32,
    qk: u128,
    /// contrib[j][a * r + i] = a * H[i][j]
    contrib: Vec<Vec<u32>>,
}

/// Weight histograms per syndrome for a ball of radius `cap`.
pub struct Histograms {
    cap: usize,
    store: Store,
}

enum Store {
    Dense { nsyn: u64, counts: Vec<u32> },
    Sparse(HashMap<u64, Vec<u32>>),
}

impl Histograms {
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Counts (index = weight) for one syndrome; all zero when absent.
    pub fn counts(&self, syn: u64) -> Vec<u32> {
        let w = self.cap + 1;
        match &self.store {
            Store::Dense { counts, .. } => counts[syn as usize * w..(syn as usize + 1) * w].to_vec(),
            Store::Sparse(m) => m.get(&syn).cloned().unwrap_or_else(|| vec![0; w]),
        }
    }

    /// Nonempty syndromes in ascending order with their counts.
    pub fn iter(&self) -> Box<dyn Iterator<Item = (u64, &[u32])> + '_> {
        let w = self.cap + 1;
        match &self.store {
            Store::Dense { nsyn, counts } => Box::new(
                (0..*nsyn)
                    .map(move |s| (s, &counts[s as usize * w..(s as usize + 1) * w]))
                    .filter(|(_, c)| c.iter().any(|&x| x > 0)),
            ),
            Store::Sparse(m) => {
                let mut keys: Vec<u64> = m.keys().copied().collect();
                keys.sort_unstable();
                Box::new(keys.into_iter().map(move |s| (s, m[&s].as_slice())))
            }
        }
    }

    pub fn nonempty(&self) -> usize {
        self.iter().count()
    }
}

fn check_budget(required: &BigUint) -> Result<()> {
    let budget = crate::budget();
    if *required > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { required: required.to_string(), budget });
    }
    Ok(())
}

pub(crate) fn check_budget_u(required: u64) -> Result<()> {
    check_budget(&BigUint::from(required))
}

impl Engine {
    pub fn new(code: &LinearCode) -> Result<Engine> {
        let f = code.field();
        let sf = SmallField::new(f)
            .ok_or_else(|| Error::Unsupported(format!("coset enumeration needs q <= {}", SmallField::MAX_ORDER)))?;
        let q = sf.order();
        let (n, r) = (code.n(), code.redundancy());
        if (q as f64).powi(r as i32) >= 2f64.powi(63) {
            return Err(Error::Unsupported("syndrome space exceeds 2^63".into()));
        }
        let h = code.parity_check();
        let contrib = (0..n)
            .map(|j| {
                let mut v = vec![0u32; q as usize * r];
                for a in 0..q {
                    for i in 0..r {
                        v[a as usize * r + i] = sf.mul(a, f.to_u64(h.get(i, j)).unwrap() as u32);
                    }
                }
                v
            })
            .collect();
        let qk = (q as u128).checked_pow(code.k() as u32).unwrap_or(u128::MAX);
        Ok(Engine { sf, n, r, q, qk, contrib })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vectors in each coset.
    pub fn coset_size(&self) -> u128 {
        self.qk
    }

    pub fn nsyn(&self) -> u64 {
        (self.q as u64).pow(self.r as u32)
    }

    fn index(&self, syn: &[u32]) -> u64 {
        syn.iter().rev().fold(0u64, |acc, &s| acc * self.q as u64 + s as u64)
    }

    /// Syndrome index of a vector given by canonical encodings.
    pub fn syndrome_of(&self, y: &[u32]) -> u64 {
        let mut s = vec![0u32; self.r];
        for (j, &a) in y.iter().enumerate() {
            for i in 0..self.r {
                s[i] = self.sf.add(s[i], self.contrib[j][a as usize * self.r + i]);
            }
        }
        self.index(&s)
    }

    pub fn syndrome_of_gf(&self, code: &LinearCode, y: &[Gf]) -> u64 {
        let v: Vec<u32> = y.iter().map(|a| code.field().to_u64(a).unwrap() as u32).collect();
        self.syndrome_of(&v)
    }

    /// Visits every vector with the given support (values nonzero). The
    /// visitor returns false to stop; the return value says whether to go on.
    fn walk_support<F: FnMut(&[u32], u64) -> bool>(&self, support: &[usize], visit: &mut F) -> bool {
        let w = support.len();
        let r = self.r;
        let mut vals = vec![1u32; w];
        let mut stack = vec![0u32; (w + 1) * r];
        let push = |stack: &mut [u32], t: usize, vals: &[u32]| {
            let c = &self.contrib[support[t]][vals[t] as usize * r..(vals[t] as usize + 1) * r];
            for i in 0..r {
                stack[(t + 1) * r + i] = self.sf.add(stack[t * r + i], c[i]);
            }
        };
        for t in 0..w {
            push(&mut stack, t, &vals);
        }
        loop {
            if !visit(&vals, self.index(&stack[w * r..])) {
                return false;
            }
            let mut t = w;
            loop {
                if t == 0 {
                    return true;
                }
                t -= 1;
                if vals[t] + 1 < self.q {
                    vals[t] += 1;
                    break;
                }
                vals[t] = 1;
            }
            for s in t..w {
                push(&mut stack, s, &vals);
            }
        }
    }

    /// Sequential walk over the ball of radius `cap` in enumeration order.
    pub fn walk<F: FnMut(&[usize], &[u32], u64) -> bool>(&self, cap: usize, mut visit: F) {
        for w in 0..=cap.min(self.n) {
            for support in Colex::new(self.n, w) {
                let mut v = |vals: &[u32], syn: u64| visit(&support, vals, syn);
                if !self.walk_support(&support, &mut v) {
                    return;
                }
            }
        }
    }

    pub fn histograms(&self, cap: usize) -> Result<Histograms> {
        let cap = cap.min(self.n);
        let vol = volume(self.q as u64, self.n as u64, cap as u64);
        check_budget(&vol)?;
        let nsyn = self.nsyn();
        let width = cap + 1;
        let dense_bytes = nsyn.saturating_mul(width as u64 * 4);
        let vol_u = vol.to_u64().unwrap_or(u64::MAX);
        let dense = dense_bytes <= (64 << 20) || (nsyn <= vol_u.saturating_mul(4) && dense_bytes <= DENSE_LIMIT_BYTES);
        let supports: Vec<(usize, Vec<usize>)> =
            (0..=cap).flat_map(|w| Colex::new(self.n, w).map(move |s| (w, s))).collect();
        let store = if dense {
            let counts: Vec<AtomicU32> = (0..nsyn as usize * width).map(|_| AtomicU32::new(0)).collect();
            supports.par_iter().for_each(|(w, s)| {
                self.walk_support(s, &mut |_, syn| {
                    counts[syn as usize * width + w].fetch_add(1, Ordering::Relaxed);
                    true
                });
            });
            Store::Dense { nsyn, counts: counts.into_iter().map(|a| a.into_inner()).collect() }
        } else {
            let map = supports
                .par_iter()
                .fold(HashMap::new, |mut m: HashMap<u64, Vec<u32>>, (w, s)| {
                    self.walk_support(s, &mut |_, syn| {
                        m.entry(syn).or_insert_with(|| vec![0; width])[*w] += 1;
                        true
                    });
                    m
                })
                .reduce(HashMap::new, |mut a, b| {
                    for (k, v) in b {
                        let e = a.entry(k).or_insert_with(|| vec![0; width]);
                        for (x, y) in e.iter_mut().zip(v) {
                            *x += y;
                        }
                    }
                    a
                });
            Store::Sparse(map)
        };
        Ok(Histograms { cap, store })
    }

    /// The first `count` vectors (enumeration order) in the coset `syn`, within radius `cap`.
    pub fn collect(&self, cap: usize, syn: u64, count: usize) -> Vec<Vec<u64>> {
        let mut out = vec![];
        if count == 0 {
            return out;
        }
        self.walk(cap, |support, vals, s| {
            if s == syn {
                let mut v = vec![0u64; self.n];
                for (t, &j) in support.iter().enumerate() {
                    v[j] = vals[t] as u64;
                }
                out.push(v);
            }
            out.len() < count
        });
        out
    }
}

fn weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Lower bound on the minimum distance: exact for MDS codes or when the
/// distance search fits the budget, 1 otherwise.
pub fn distance_lower_bound(code: &LinearCode) -> usize {
    if code.is_mds() {
        return code.redundancy() + 1;
    }
    code.min_distance().unwrap_or(1)
}

pub fn profile_cosets(code: &LinearCode, mode: ProfileMode) -> Result<BTreeMap<u64, CosetProfile>> {
    let e = Engine::new(code)?;
    let (cap, list_cap) = match mode {
        ProfileMode::Full => {
            check_budget(&BigUint::from(e.q).pow(e.n as u32))?;
            (e.n, usize::MAX)
        }
        ProfileMode::Capped { weight_cap, list_cap } => (weight_cap.min(e.n), list_cap),
    };
    let h = e.histograms(cap)?;
    let mut out = BTreeMap::new();
    for (syn, counts) in h.iter() {
        let count: u64 = counts.iter().map(|&c| c as u64).sum();
        let tail = (count as u128) < e.qk;
        let (distribution, lightest) = match mode {
            ProfileMode::Full => (Some(counts.iter().map(|&c| c as u64).collect()), None),
            ProfileMode::Capped { .. } => {
                let mut l = vec![];
                'outer: for (w, &c) in counts.iter().enumerate() {
                    for _ in 0..c {
                        if l.len() >= list_cap {
                            break 'outer;
                        }
                        l.push(w);
                    }
                }
                (None, Some(l))
            }
        };
        out.insert(syn, CosetProfile { syndrome: syn, distribution, lightest, tail_above_cap: tail, count });
    }
    Ok(out)
}

/// Ordinary (tau, L)-list decodability.
pub fn is_list_decodable(code: &LinearCode, tau: usize, l: u64) -> Result<(bool, Option<Witness>)> {
    let e = Engine::new(code)?;
    let h = e.histograms(tau)?;
    for (syn, counts) in h.iter() {
        let total: u64 = counts.iter().map(|&c| c as u64).sum();
        if total > l {
            let vecs = e.collect(tau, syn, l as usize + 1);
            return Ok((false, Some(Witness::vectors(Some(syn), vecs, Some(total)))));
        }
    }
    Ok((true, None))
}

/// Largest weight that can occur among the L+1 lightest vectors of a coset
/// whose weight sum is at most `t`, given minimum distance at least `d`.
/// `None` means no coset can reach the sum at all.
fn strong_cap(n: usize, d: usize, t: u64, l: u64) -> Option<usize> {
    let half = d.div_ceil(2) as u64;
    let floor = d as u64 + (l - 1) * half;
    if l >= 1 && floor > t && l >= 2 {
        return None;
    }
    let cap = if l == 1 { t } else { t - d as u64 - (l - 2) * half };
    Some(cap.min(n as u64) as usize)
}

/// Weight sum of the L+1 lightest entries in a histogram, if the histogram holds L+1 vectors.
fn lightest_sum(counts: &[u32], m: u64) -> Option<u64> {
    let mut need = m;
    let mut sum = 0u64;
    for (w, &c) in counts.iter().enumerate() {
        let take = need.min(c as u64);
        sum += take * w as u64;
        need -= take;
        if need == 0 {
            return Some(sum);
        }
    }
    None
}

/// Strong list decodability with integer weight-sum bound T = (L+1) tau:
/// every coset's L+1 lightest vectors must weigh more than T in total.
pub fn is_strongly_list_decodable(code: &LinearCode, t: u64, l: u64) -> Result<(bool, Option<Witness>)> {
    if l == 0 {
        return Err(Error::BadParameters("L must be positive".into()));
    }
    let d = distance_lower_bound(code);
    let Some(cap) = strong_cap(code.n(), d, t, l) else {
        return Ok((true, None));
    };
    strong_with_cap(code, t, l, cap)
}

fn strong_with_cap(code: &LinearCode, t: u64, l: u64, cap: usize) -> Result<(bool, Option<Witness>)> {
    let e = Engine::new(code)?;
    let h = e.histograms(cap)?;
    for (syn, counts) in h.iter() {
        if let Some(s) = lightest_sum(counts, l + 1) {
            if s <= t {
                let vecs = e.collect(cap, syn, l as usize + 1);
                return Ok((false, Some(Witness::vectors(Some(syn), vecs, Some(s)))));
            }
        }
    }
    Ok((true, None))
}

/// The L+1 = `count` lightest weights of the coset containing `y`.
pub fn lightest_weights(code: &LinearCode, y: &[Gf], count: usize, cap: usize) -> Result<Vec<usize>> {
    let e = Engine::new(code)?;
    let syn = e.syndrome_of_gf(code, y);
    Ok(e.collect(cap, syn, count).iter().map(|v| weight(v)).collect())
}

/// Weight distribution (A_0..A_n) of the coset containing `y`, by full enumeration.
pub fn coset_distribution(code: &LinearCode, y: &[Gf]) -> Result<Vec<u64>> {
    let e = Engine::new(code)?;
    check_budget(&BigUint::from(e.q).pow(e.n as u32))?;
    let syn = e.syndrome_of_gf(code, y);
    let mut dist = vec![0u64; e.n + 1];
    let supports: Vec<Vec<usize>> = (0..=e.n).flat_map(|w| Colex::new(e.n, w)).collect();
    let parts: Vec<(usize, u64)> = supports
        .par_iter()
        .map(|s| {
            let mut c = 0u64;
            e.walk_support(s, &mut |_, x| {
                c += u64::from(x == syn);
                true
            });
            (s.len(), c)
        })
        .collect();
    for (w, c) in parts {
        dist[w] += c;
    }
    Ok(dist)
}

/// Brute-force light list decodability: no L+1 nonzero same-coset vectors with
/// pairwise disjoint supports, each of weight <= d-1, with weight sum <= T.
pub fn is_lightly_list_decodable_bruteforce(code: &LinearCode, t: u64, l: u64) -> Result<(bool, Option<Witness>)> {
    let d = code.min_distance()?;
    if d <= 1 {
        return Ok((true, None));
    }
    let e = Engine::new(code)?;
    let cap = d - 1;
    check_budget(&volume(e.q as u64, e.n as u64, cap as u64))?;
    // first vector per (syndrome, support)
    let mut buckets: HashMap<u64, Vec<(u64, Vec<u64>)>> = HashMap::new();
    e.walk(cap, |support, vals, syn| {
        if !support.is_empty() {
            let mut v = vec![0u64; e.n];
            for (t, &j) in support.iter().enumerate() {
                v[j] = vals[t] as u64;
            }
            let m = crate::comb::mask(support);
            let b = buckets.entry(syn).or_default();
            if b.last().map(|(lm, _)| *lm) != Some(m) {
                b.push((m, v));
            }
        }
        true
    });
    let mut syns: Vec<u64> = buckets.keys().copied().collect();
    syns.sort_unstable();
    let need = l as usize + 1;
    for syn in syns {
        let b = &buckets[&syn];
        if b.len() < need {
            continue;
        }
        let items: Vec<(u64, usize)> = b.iter().map(|(m, _)| (*m, m.count_ones() as usize)).collect();
        let mut chosen = vec![];
        if disjoint_search(&items, need, t, 0, 0, 0, &mut chosen) {
            let vecs: Vec<Vec<u64>> = chosen.iter().map(|&i| b[i].1.clone()).collect();
            let s = chosen.iter().map(|&i| items[i].1 as u64).sum();
            return Ok((false, Some(Witness::vectors(Some(syn), vecs, Some(s)))));
        }
    }
    Ok((true, None))
}

fn disjoint_search(items: &[(u64, usize)], need: usize, t: u64, start: usize, used: u64, sum: u64, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == need {
        return true;
    }
    let left = (need - chosen.len()) as u64;
    for i in start..items.len() {
        let (m, w) = items[i];
        if m & used != 0 || sum + w as u64 + (left - 1) > t {
            continue;
        }
        chosen.push(i);
        if disjoint_search(items, need, t, i + 1, used | m, sum + w as u64, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Result of an L-MDS sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LmdsProfile {
    pub l_max: u64,
    /// L in [1, l_max] for which the code is not L-MDS.
    pub violating: Vec<u64>,
    /// Smallest L0 such that the code is L-MDS for all L >= L0 (a lower bound
    /// when `certified` is false).
    pub l0: u64,
    pub certified: bool,
    /// Largest enumerated weight.
    pub weight_cap: usize,
    /// Ranges of L left undecided by the enumeration.
    pub undetermined: Vec<(u64, u64)>,
}

/// Which L make the code fail L-MDS, via per-coset deficit sums
/// D(L) = (sum of the L+1 lightest weights) - L(n-k), which are convex in L.
pub fn l_mds_profile(code: &LinearCode, l_max: u64) -> Result<LmdsProfile> {
    let r = code.redundancy() as i64;
    let n = code.n();
    if r == 0 {
        return Ok(LmdsProfile { l_max, violating: vec![], l0: 1, certified: true, weight_cap: 0, undetermined: vec![] });
    }
    let e = Engine::new(code)?;
    let mut cap = r as usize;
    loop {
        let h = e.histograms(cap)?;
        let mut bad = std::collections::BTreeSet::new();
        let mut top = 0u64;
        let mut undetermined = vec![];
        for (_, counts) in h.iter() {
            let known: u64 = counts.iter().map(|&c| c as u64).sum();
            let weights = counts.iter().enumerate().flat_map(|(w, &c)| std::iter::repeat_n(w as i64, c as usize));
            let mut prefix = 0i64;
            let mut ell = 0u64;
            for w in weights {
                prefix += w;
                if ell >= 1 && prefix - ell as i64 * r <= 0 {
                    top = top.max(ell);
                    if ell <= l_max {
                        bad.insert(ell);
                    }
                }
                ell += 1;
            }
            // ell == known; L >= known involves unseen weights > cap
            if (known as u128) < e.qk {
                let step = cap as i64 + 1 - r;
                let lb = |big_l: u64| prefix + (big_l as i64 + 1 - known as i64) * (cap as i64 + 1) - big_l as i64 * r;
                let first = known.max(1);
                if lb(first) <= 0 {
                    let hi = first + ((-lb(first)) / step) as u64;
                    undetermined.push((first, hi));
                }
            }
        }
        let certified = undetermined.is_empty();
        if certified || cap >= n || volume(e.q as u64, n as u64, cap as u64 + 1) > BigUint::from(crate::budget()) {
            let mut violating: Vec<u64> = bad.into_iter().collect();
            violating.sort_unstable();
            return Ok(LmdsProfile { l_max, violating, l0: top + 1, certified, weight_cap: cap, undetermined });
        }
        cap += 1;
    }
}

/// Bonneau identity: sum over w <= n-k of C(n-w, k) A_w = C(n, k) in every coset.
pub fn bonneau_check(code: &LinearCode) -> Result<bool> {
    if !code.is_mds() {
        return Err(Error::NotMds);
    }
    let (n, k, r) = (code.n() as u64, code.k() as u64, code.redundancy());
    let e = Engine::new(code)?;
    let h = e.histograms(r)?;
    let target = binomial(n, k);
    let mut seen = 0u64;
    for (_, counts) in h.iter() {
        seen += 1;
        let s: BigUint = counts.iter().enumerate().map(|(w, &a)| binomial(n - w as u64, k) * a).sum();
        if s != target {
            return Ok(false);
        }
    }
    Ok(seen == e.nsyn())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::FieldCtx;
    use crate::matgf::GfMatrix;

    fn repetition(q: u64, n: usize) -> LinearCode {
        let f = FieldCtx::prime(q).unwrap();
        LinearCode::from_generator(GfMatrix::from_u64(&f, &[vec![1; n]])).unwrap()
    }

    #[test]
    fn repetition_list_decoding() {
        let c = repetition(5, 5);
        assert!(is_list_decodable(&c, 3, 2).unwrap().0);
        let (ok, w) = is_list_decodable(&c, 4, 2).unwrap();
        assert!(!ok);
        assert_eq!(w.unwrap().vectors.len(), 3);
    }

    #[test]
    fn trivial_coset_is_weight_distribution() {
        let c = repetition(3, 4);
        let p = profile_cosets(&c, ProfileMode::Full).unwrap();
        assert_eq!(p[&0].distribution.as_ref().unwrap(), &vec![1, 0, 0, 0, 2]);
        assert_eq!(p.len(), 27);
        assert!(p.values().all(|x| x.count == 3));
    }

    #[test]
    fn strong_with_zero_bound_holds() {
        let c = repetition(3, 4);
        assert!(is_strongly_list_decodable(&c, 0, 3).unwrap().0);
    }

    #[test]
    fn enumeration_order_is_weight_then_colex_then_values() {
        let c = repetition(3, 3);
        let e = Engine::new(&c).unwrap();
        let mut seen = vec![];
        e.walk(2, |s, v, _| {
            seen.push((s.to_vec(), v.to_vec()));
            seen.len() < 8
        });
        assert_eq!(seen[0], (vec![], vec![]));
        assert_eq!(seen[1], (vec![0], vec![1]));
        assert_eq!(seen[2], (vec![0], vec![2]));
        assert_eq!(seen[3], (vec![1], vec![1]));
        assert_eq!(seen[7], (vec![0, 1], vec![1, 1]));
    }

    #[test]
    fn strong_cap_bounds() {
        assert_eq!(strong_cap(8, 5, 200, 50), Some(8));
        assert_eq!(strong_cap(8, 5, 8, 2), Some(3));
        assert_eq!(strong_cap(8, 5, 7, 2), None);
        assert_eq!(strong_cap(6, 5, 9, 2), Some(4));
    }
}
