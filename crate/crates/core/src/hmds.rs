//! Determinant machinery for lightly-2-MDS and 2-MDS testing of codes, and
//! the generalized Sylvester matrix of a locator partition.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::LinearCode;
use crate::comb::{mask, Colex};
use crate::cosets::Witness;
use crate::error::{Error, Result};
use crate::fields::{FieldCtx, Gf};
use crate::matgf::GfMatrix;

fn check_subsets(h: &GfMatrix, subsets: &[Vec<usize>]) -> Result<()> {
    if subsets.len() < 2 {
        return Err(Error::BadParameters("need at least two subsets".into()));
    }
    for s in subsets {
        if let Some(&j) = s.iter().find(|&&j| j >= h.cols()) {
            return Err(Error::IndexOutOfRange(j));
        }
    }
    Ok(())
}

/// The L block rows `[-H_{J_0} | ... H_{J_m} ...]`, m = 1..L, with H_{J_m}
/// in block column m.
pub fn build_m(h: &GfMatrix, subsets: &[Vec<usize>]) -> Result<GfMatrix> {
    check_subsets(h, subsets)?;
    let r = h.rows();
    let l = subsets.len() - 1;
    let widths: Vec<usize> = subsets.iter().map(|s| s.len()).collect();
    let mut m = GfMatrix::zeros(h.field(), l * r, widths.iter().sum());
    let first = h.select_cols(&subsets[0]).neg();
    let mut col = widths[0];
    for b in 1..=l {
        m.put((b - 1) * r, 0, &first);
        m.put((b - 1) * r, col, &h.select_cols(&subsets[b]));
        col += widths[b];
    }
    Ok(m)
}

/// The variant with identity blocks: rows `[I | 0 .. H_{J_m} .. 0]` for
/// m = 0..L. Square when the subset sizes sum to L times the row count.
pub fn build_m_alt(h: &GfMatrix, subsets: &[Vec<usize>]) -> Result<GfMatrix> {
    check_subsets(h, subsets)?;
    let f = h.field();
    let r = h.rows();
    let widths: Vec<usize> = subsets.iter().map(|s| s.len()).collect();
    let cols = r + widths.iter().sum::<usize>();
    let mut m = GfMatrix::zeros(f, subsets.len() * r, cols);
    let id = GfMatrix::identity(f, r);
    let mut col = r;
    for (b, s) in subsets.iter().enumerate() {
        m.put(b * r, 0, &id);
        m.put(b * r, col, &h.select_cols(s));
        col += widths[b];
    }
    Ok(m)
}

/// Canonical order on coordinate subsets: size first, then colex.
fn key(s: &[usize]) -> (usize, u64) {
    (s.len(), mask(s))
}

/// Unordered triples of disjoint subsets with sizes in [2, r-1] summing to
/// 2r, each triple listed once with J0 < J1 < J2, in canonical order.
pub fn admissible_triples(n: usize, r: usize) -> Vec<[Vec<usize>; 3]> {
    let mut out = vec![];
    if r < 3 {
        return out;
    }
    for s0 in 2..r {
        for s1 in s0..r {
            let Some(s2) = (2 * r).checked_sub(s0 + s1) else { continue };
            if s2 < s1 || s2 >= r || s0 + s1 + s2 > n {
                continue;
            }
            for j0 in Colex::new(n, s0) {
                let m0 = mask(&j0);
                for j1 in Colex::new(n, s1) {
                    let m1 = mask(&j1);
                    if m1 & m0 != 0 || key(&j1) <= key(&j0) {
                        continue;
                    }
                    for j2 in Colex::new(n, s2) {
                        let m2 = mask(&j2);
                        if m2 & (m0 | m1) != 0 || key(&j2) <= key(&j1) {
                            continue;
                        }
                        out.push([j0.clone(), j1.clone(), j2]);
                    }
                }
            }
        }
    }
    out
}

/// Lightly-2-MDS test of an MDS code with rate at least 1/2: every
/// admissible triple must give a nonsingular M. The witness is the first
/// singular triple.
pub fn lightly_2mds_det(code: &LinearCode) -> Result<(bool, Option<Witness>)> {
    let (n, k) = (code.n(), code.k());
    if 2 * k < n {
        return Err(Error::PreconditionRate { n, k });
    }
    if !code.is_mds() {
        return Err(Error::NotMds);
    }
    let h = code.parity_check();
    let triples = admissible_triples(n, code.redundancy());
    let bad = triples.par_iter().find_first(|t| {
        let m = build_m(h, &t[..]).expect("subsets in range");
        m.det().expect("square").is_zero()
    });
    Ok(match bad {
        None => (true, None),
        Some(t) => (false, Some(Witness::subsets(t.to_vec()))),
    })
}

/// 2-MDS test: over GF(2) by dimension (for 2 <= k <= n-2 never; dimension 1
/// passes vacuously with two-vector cosets; redundancy 1 passes unless two
/// coordinates are unchecked), otherwise by
/// running the determinant test on every puncturing of the code on w
/// coordinates, max(0, n-2k) <= w <= n-k-3.
pub fn is_2mds(code: &LinearCode) -> Result<(bool, Option<Witness>)> {
    let f = code.field();
    let (n, k, r) = (code.n(), code.k(), code.redundancy());
    if f.order_u64() == Some(2) {
        let holds = match r {
            0 => true,
            1 => (0..n).filter(|&j| code.parity_check().get(0, j).is_zero()).count() <= 1,
            _ => k == 1,
        };
        return Ok((holds, None));
    }
    if !code.is_mds() {
        let cols = code.dependent_columns(r).expect("non-MDS code has r dependent columns");
        let c = code.codeword_on(&cols).expect("dependent columns carry a codeword");
        let a = f.from_u64(2);
        let ac: Vec<Gf> = c.iter().map(|x| f.mul(&a, x)).collect();
        let enc = |v: &[Gf]| v.iter().map(|x| f.to_u64(x).unwrap_or(u64::MAX)).collect::<Vec<u64>>();
        let w = c.iter().filter(|x| !x.is_zero()).count() as u64;
        let vecs = vec![vec![0; n], enc(&c), enc(&ac)];
        return Ok((false, Some(Witness::vectors(Some(0), vecs, Some(2 * w)))));
    }
    if k.min(r) <= 2 {
        return Ok((true, None));
    }
    for w in n.saturating_sub(2 * k)..=r - 3 {
        for j in Colex::new(n, w) {
            let p = if w == 0 { code.clone() } else { code.puncture(&j)? };
            let (ok, wit) = lightly_2mds_det(&p)?;
            if !ok {
                let keep: Vec<usize> = (0..n).filter(|c| !j.contains(c)).collect();
                let mut wit = wit.expect("failing test carries a witness");
                for s in wit.subsets.iter_mut() {
                    for c in s.iter_mut() {
                        *c = keep[*c];
                    }
                }
                wit.punctured_on = Some(j);
                return Ok((false, Some(wit)));
            }
        }
    }
    Ok((true, None))
}

/// A partition (rho_0 <= ... <= rho_L) of L*rho with L <= rho_0 and
/// rho_L < rho; block m of the variable vector has rho_m consecutive entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSpec {
    pub rho: usize,
    pub parts: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(rho: usize, parts: Vec<usize>) -> Result<PartitionSpec> {
        let l = parts.len().saturating_sub(1);
        let bad = |m: &str| Err(Error::SpecViolation(m.to_string()));
        if rho < 3 {
            return bad("rho must be at least 3");
        }
        if l < 2 {
            return bad("need at least three parts");
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return bad("parts must be nondecreasing");
        }
        if parts[0] < l || parts[l] >= rho {
            return bad("parts must lie in [L, rho-1]");
        }
        if parts.iter().sum::<usize>() != l * rho {
            return bad("parts must sum to L*rho");
        }
        Ok(PartitionSpec { rho, parts })
    }

    pub fn list_size(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn len(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index ranges of the blocks.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    /// All valid partitions for the given rho and list size.
    pub fn all(rho: usize, l: usize) -> Vec<PartitionSpec> {
        fn rec(rho: usize, l: usize, left: usize, lo: usize, acc: &mut Vec<usize>, out: &mut Vec<PartitionSpec>) {
            if acc.len() == l + 1 {
                if left == 0 {
                    out.push(PartitionSpec { rho, parts: acc.clone() });
                }
                return;
            }
            for p in lo..rho.min(left + 1) {
                acc.push(p);
                rec(rho, l, left - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = vec![];
        if rho >= 3 && l >= 2 {
            rec(rho, l, l * rho, l, &mut vec![], &mut out);
        }
        out
    }

    /// Sign exponent of the conjectured factorization of det M.
    pub fn sign_exponent(&self) -> usize {
        let odd: usize = self.parts.iter().skip(1).step_by(2).map(|&p| self.rho - p).sum();
        self.rho * odd
    }

    /// Total degree of det S.
    pub fn det_s_degree(&self) -> usize {
        let l = self.list_size();
        (l * self.rho * self.rho - self.parts.iter().map(|p| p * p).sum::<usize>()) / 2
    }

    fn check_x(&self, x: &[Gf]) -> Result<()> {
        if x.len() != self.len() {
            return Err(Error::SpecViolation(format!("expected {} values, got {}", self.len(), x.len())));
        }
        Ok(())
    }
}

/// M evaluated at x: the Vandermonde rows 0..rho-1 on the entries of x.
pub fn m_rho(field: &FieldCtx, spec: &PartitionSpec, x: &[Gf]) -> Result<GfMatrix> {
    spec.check_x(x)?;
    let rows = (0..spec.rho).map(|i| x.iter().map(|a| field.pow_u64(a, i as u64)).collect()).collect();
    let h = GfMatrix::from_rows(field, rows);
    let subsets: Vec<Vec<usize>> = spec.blocks().into_iter().map(|b| b.collect()).collect();
    build_m(&h, &subsets)
}

/// Coefficients (sigma_0 = 1, ..., sigma_d) of prod (z - a).
fn sigma(field: &FieldCtx, roots: &[Gf]) -> Vec<Gf> {
    let mut c = vec![field.one()];
    for a in roots {
        let na = field.neg(a);
        let mut next = c.clone();
        next.push(field.zero());
        for (j, cj) in c.iter().enumerate() {
            let t = field.mul(cj, &na);
            field.add_assign(&mut next[j + 1], &t);
        }
        c = next;
    }
    c
}

/// The generalized Sylvester matrix: for each block, rho - rho_m shifted
/// copies of the coefficient row of prod_{l in block}(z - x_l).
pub fn build_s(field: &FieldCtx, spec: &PartitionSpec, x: &[Gf]) -> Result<GfMatrix> {
    spec.check_x(x)?;
    let rho = spec.rho;
    let mut s = GfMatrix::zeros(field, rho, rho);
    let mut row = 0;
    for b in spec.blocks() {
        let sig = sigma(field, &x[b.clone()]);
        for shift in 0..rho - b.len() {
            for (j, c) in sig.iter().enumerate() {
                s.set(row, shift + j, c.clone());
            }
            row += 1;
        }
    }
    Ok(s)
}

fn blocks_distinct(spec: &PartitionSpec, x: &[Gf]) -> bool {
    spec.blocks().into_iter().all(|b| {
        let v = &x[b];
        (0..v.len()).all(|i| (0..i).all(|j| v[i] != v[j]))
    })
}

/// Whether [det M != 0] agrees with [det S != 0 and every block has distinct entries].
pub fn sylvester_equiv_check(field: &FieldCtx, spec: &PartitionSpec, x: &[Gf]) -> Result<bool> {
    let lhs = !m_rho(field, spec, x)?.det()?.is_zero();
    let rhs = blocks_distinct(spec, x) && !build_s(field, spec, x)?.det()?.is_zero();
    Ok(lhs == rhs)
}

/// det S times the in-block Vandermonde products, with the conjectured sign.
pub fn conjectured_det(field: &FieldCtx, spec: &PartitionSpec, x: &[Gf]) -> Result<Gf> {
    let mut g = build_s(field, spec, x)?.det()?;
    for b in spec.blocks() {
        for l in b.clone() {
            for l2 in b.start..l {
                g = field.mul(&g, &field.sub(&x[l], &x[l2]));
            }
        }
    }
    if spec.sign_exponent() % 2 == 1 {
        g = field.neg(&g);
    }
    Ok(g)
}

/// det M minus the conjectured factorization; zero where the conjecture holds.
pub fn conjecture_residual(field: &FieldCtx, spec: &PartitionSpec, x: &[Gf]) -> Result<Gf> {
    let d = m_rho(field, spec, x)?.det()?;
    Ok(field.sub(&d, &conjectured_det(field, spec, x)?))
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |a, b| a * b)
}

/// Number of monomials in the expansion of det M: rho! prod rho_m!/(rho-rho_m)!.
pub fn n_rho(spec: &PartitionSpec) -> BigUint {
    spec.parts.iter().fold(factorial(spec.rho), |acc, &p| acc * factorial(p) / factorial(spec.rho - p))
}

/// Half the largest monomial count over the valid three-part partitions of 2 rho.
pub fn n_cap(rho: usize) -> Result<BigUint> {
    PartitionSpec::all(rho, 2)
        .iter()
        .map(n_rho)
        .max()
        .map(|m| m / 2u32)
        .ok_or_else(|| Error::SpecViolation(format!("no valid partition for rho = {rho}")))
}

/// Exponent vectors allowed in det M: every exponent in [0, rho-1] is used
/// exactly twice, by entries in different blocks.
pub fn admissible_exponents(spec: &PartitionSpec) -> Vec<Vec<usize>> {
    let n = spec.len();
    let block_of: Vec<usize> = spec.blocks().iter().enumerate().flat_map(|(m, b)| b.clone().map(move |_| m)).collect();
    let mut out = vec![];
    let mut r = vec![0usize; n];
    loop {
        let mut ok = true;
        for e in 0..spec.rho {
            let who: Vec<usize> = (0..n).filter(|&l| r[l] == e).collect();
            if who.len() != 2 || block_of[who[0]] == block_of[who[1]] {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(r.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            r[i] += 1;
            if r[i] < spec.rho {
                break;
            }
            r[i] = 0;
            i += 1;
        }
    }
}

/// Full expansion of det M over GF(p) by interpolation on the grid
/// [0, rho-1]^len (each variable has degree below rho). Coefficients are
/// returned as signed representatives.
pub fn expand_m_rho(p: u64, spec: &PartitionSpec) -> Result<BTreeMap<Vec<usize>, i64>> {
    let f = FieldCtx::prime(p)?;
    let n = spec.len();
    let rho = spec.rho;
    let points = rho.pow(n as u32);
    crate::cosets::check_budget_u(points as u64)?;
    let grid: Vec<Gf> = (0..rho as u64).map(|v| f.from_u64(v)).collect();
    let mut vals: Vec<Gf> = (0..points)
        .into_par_iter()
        .map(|idx| {
            let mut t = idx;
            let x: Vec<Gf> = (0..n)
                .map(|_| {
                    let d = t % rho;
                    t /= rho;
                    grid[d].clone()
                })
                .collect();
            m_rho(&f, spec, &x).unwrap().det().unwrap()
        })
        .collect();
    // invert the Vandermonde transform on each axis (point values -> coefficients)
    let v = GfMatrix::from_rows(&f, grid.iter().map(|a| (0..rho as u64).map(|e| f.pow_u64(a, e)).collect()).collect());
    let vinv = invert(&v)?;
    let mut stride = 1;
    for _ in 0..n {
        let mut next = vals.clone();
        for base in 0..points {
            if (base / stride) % rho != 0 {
                continue;
            }
            for e in 0..rho {
                let mut acc = f.zero();
                for i in 0..rho {
                    let t = f.mul(vinv.get(e, i), &vals[base + i * stride]);
                    f.add_assign(&mut acc, &t);
                }
                next[base + e * stride] = acc;
            }
        }
        vals = next;
        stride *= rho;
    }
    let mut out = BTreeMap::new();
    for (idx, c) in vals.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = idx;
        let r: Vec<usize> = (0..n)
            .map(|_| {
                let d = t % rho;
                t /= rho;
                d
            })
            .collect();
        let u = f.to_u64(c).unwrap();
        let s = if u > p / 2 { u as i64 - p as i64 } else { u as i64 };
        out.insert(r, s);
    }
    Ok(out)
}

fn invert(m: &GfMatrix) -> Result<GfMatrix> {
    let f = m.field();
    let n = m.rows();
    let mut aug = GfMatrix::zeros(f, n, 2 * n);
    aug.put(0, 0, m);
    aug.put(0, n, &GfMatrix::identity(f, n));
    let (r, piv) = aug.rref();
    if piv.len() < n || piv[n - 1] >= n {
        return Err(Error::DivisionByZero);
    }
    Ok(r.select_cols(&(n..2 * n).collect::<Vec<_>>()))
}

/// Result of the random-code experiment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarlo {
    pub n: usize,
    pub k: usize,
    pub samples: usize,
    pub failures: usize,
    pub fraction: f64,
    pub seed: u64,
}

/// Fraction of uniformly random full-rank parity-check matrices whose code is not 2-MDS.
pub fn random_2mds_fraction(field: &FieldCtx, n: usize, k: usize, samples: usize, seed: u64) -> Result<MonteCarlo> {
    if k == 0 || k >= n {
        return Err(Error::BadParameters(format!("need 0 < k < n, got n = {n}, k = {k}")));
    }
    let r = n - k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut done = 0;
    while done < samples {
        let rows = (0..r).map(|_| (0..n).map(|_| field.random(&mut rng)).collect()).collect();
        let h = GfMatrix::from_rows(field, rows);
        if h.rank() < r {
            continue;
        }
        let code = LinearCode::from_parity_check(h)?;
        if !is_2mds(&code)?.0 {
            failures += 1;
        }
        done += 1;
    }
    let fraction = if samples == 0 { 0.0 } else { failures as f64 / samples as f64 };
    Ok(MonteCarlo { n, k, samples, failures, fraction, seed })
}

/// Upper bound 5^n / q from the almost-all theorem, for reference.
pub fn fraction_bound(n: usize, field: &FieldCtx) -> f64 {
    5f64.powi(n as i32) / field.order().to_f64().unwrap_or(f64::INFINITY)
}
