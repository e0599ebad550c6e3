//! Linear [n,k] codes over a finite field.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::comb::{binomial_u128, Colex};
use crate::error::{Error, Result};
use crate::fields::{FieldCtx, FieldDescriptor, Gf, SmallField};
use crate::json::{int_value, value_int};
use crate::matgf::{GfMatrix, MatrixJson, Side};

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FieldCtx,
    n: usize,
    k: usize,
    h: GfMatrix,
    g: GfMatrix,
    locators: Option<Vec<Gf>>,
    multipliers: Option<Vec<Gf>>,
    pub meta: Map<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "H")]
    pub h: MatrixJson,
    #[serde(rename = "G", default, skip_serializing_if = "Option::is_none")]
    pub g: Option<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locators: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<Value>>,
    #[serde(default)]
    pub meta: Map<String, Value>,
}

impl LinearCode {
    /// Code with the given full-rank parity-check matrix.
    pub fn from_parity_check(h: GfMatrix) -> Result<LinearCode> {
        let rank = h.rank();
        if rank != h.rows() {
            return Err(Error::RankDeficient { rank, expected: h.rows() });
        }
        let n = h.cols();
        if h.rows() >= n {
            return Err(Error::BadParameters("parity-check matrix leaves dimension 0".into()));
        }
        let g = h.kernel(Side::Right);
        Ok(LinearCode { field: h.field().clone(), n, k: n - h.rows(), h, g, locators: None, multipliers: None, meta: Map::new() })
    }

    /// Code with the given full-rank generator matrix.
    pub fn from_generator(g: GfMatrix) -> Result<LinearCode> {
        let rank = g.rank();
        if rank != g.rows() {
            return Err(Error::RankDeficient { rank, expected: g.rows() });
        }
        if g.rows() == 0 {
            return Err(Error::BadParameters("generator matrix has no rows".into()));
        }
        let h = g.kernel(Side::Right);
        Ok(LinearCode { field: g.field().clone(), n: g.cols(), k: g.rows(), h, g, locators: None, multipliers: None, meta: Map::new() })
    }

    /// GRS code with parity-check entries v_j a_j^i, i in [0, n-k).
    pub fn grs(field: &FieldCtx, locators: &[Gf], k: usize, multipliers: Option<&[Gf]>) -> Result<LinearCode> {
        let n = locators.len();
        if k < 1 || k >= n {
            return Err(Error::BadParameters(format!("GRS needs 1 <= k < n, got k={k}, n={n}")));
        }
        if BigUint::from(n) > *field.order() {
            return Err(Error::LengthExceedsField { n });
        }
        for i in 0..n {
            field.check(&locators[i])?;
            for j in 0..i {
                if locators[i] == locators[j] {
                    return Err(Error::RepeatedLocator(j, i));
                }
            }
        }
        let v: Vec<Gf> = match multipliers {
            Some(m) => {
                if m.len() != n {
                    return Err(Error::BadParameters("one multiplier per locator".into()));
                }
                if let Some(j) = m.iter().position(|x| x.is_zero()) {
                    return Err(Error::ZeroMultiplier(j));
                }
                m.to_vec()
            }
            None => vec![field.one(); n],
        };
        let r = n - k;
        let mut h = GfMatrix::zeros(field, r, n);
        for j in 0..n {
            let mut x = v[j].clone();
            for i in 0..r {
                h.set(i, j, x.clone());
                x = field.mul(&x, &locators[j]);
            }
        }
        let mut c = LinearCode::from_parity_check(h)?;
        c.locators = Some(locators.to_vec());
        c.multipliers = Some(v);
        Ok(c)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn parity_check(&self) -> &GfMatrix {
        &self.h
    }

    pub fn generator(&self) -> &GfMatrix {
        &self.g
    }

    pub fn locators(&self) -> Option<&[Gf]> {
        self.locators.as_deref()
    }

    pub fn multipliers(&self) -> Option<&[Gf]> {
        self.multipliers.as_deref()
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.n - self.k,
            h: self.g.clone(),
            g: self.h.clone(),
            locators: None,
            multipliers: None,
            meta: Map::new(),
        }
    }

    /// Syndrome H y^T.
    pub fn syndrome(&self, y: &[Gf]) -> Vec<Gf> {
        let f = &self.field;
        (0..self.h.rows())
            .map(|i| {
                let mut s = f.zero();
                for (j, yj) in y.iter().enumerate() {
                    if !yj.is_zero() {
                        f.add_assign(&mut s, &f.mul(self.h.get(i, j), yj));
                    }
                }
                s
            })
            .collect()
    }

    pub fn is_codeword(&self, y: &[Gf]) -> bool {
        self.syndrome(y).iter().all(|s| s.is_zero())
    }

    /// Code punctured on `coords`; parity-check matrix (P H) restricted to the
    /// kept columns, with P a left-kernel basis of H restricted to `coords`.
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode> {
        let r = self.redundancy();
        if let Some(&bad) = coords.iter().find(|&&j| j >= self.n) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let mut set = coords.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.len() > r {
            return Err(Error::TooManyCoordinates { got: set.len(), redundancy: r });
        }
        let hj = self.h.select_cols(&set);
        if hj.rank() < set.len() {
            return Err(Error::DimensionDrop);
        }
        let p = hj.kernel(Side::Left);
        let keep: Vec<usize> = (0..self.n).filter(|j| !set.contains(j)).collect();
        let hs = if p.rows() == 0 {
            GfMatrix::zeros(&self.field, 0, keep.len())
        } else {
            p.mul(&self.h).select_cols(&keep)
        };
        let mut c = if hs.rows() == 0 {
            let g = GfMatrix::identity(&self.field, keep.len());
            LinearCode {
                field: self.field.clone(),
                n: keep.len(),
                k: keep.len(),
                h: hs,
                g,
                locators: None,
                multipliers: None,
                meta: Map::new(),
            }
        } else {
            LinearCode::from_parity_check(hs)?
        };
        if let Some(l) = &self.locators {
            c.locators = Some(keep.iter().map(|&j| l[j].clone()).collect());
        }
        c.meta.insert("punctured_on".into(), Value::from(set.clone()));
        if set.len() == r {
            c.meta.insert("full_redundancy_puncture".into(), Value::Bool(true));
        }
        Ok(c)
    }

    /// First (colex) set of at most `max_size` linearly dependent columns of H.
    pub fn dependent_columns(&self, max_size: usize) -> Option<Vec<usize>> {
        for w in 1..=max_size.min(self.n) {
            for s in Colex::new(self.n, w) {
                if self.h.select_cols(&s).rank() < w {
                    return Some(s);
                }
            }
        }
        None
    }

    /// A nonzero codeword supported inside the dependent column set `cols`.
    pub fn codeword_on(&self, cols: &[usize]) -> Option<Vec<Gf>> {
        let kern = self.h.select_cols(cols).kernel(Side::Right);
        if kern.rows() == 0 {
            return None;
        }
        let mut c = vec![self.field.zero(); self.n];
        for (t, &j) in cols.iter().enumerate() {
            c[j] = kern.get(0, t).clone();
        }
        Some(c)
    }

    /// MDS test: every n-k columns of H are independent.
    pub fn is_mds(&self) -> bool {
        let r = self.redundancy();
        if r == 0 {
            return true;
        }
        Colex::new(self.n, r).all(|s| self.h.select_cols(&s).rank() == r)
    }

    /// Exact minimum distance. Uses the cheaper of a dependent-column search
    /// and codeword enumeration; errors when both exceed the budget.
    pub fn min_distance(&self) -> Result<usize> {
        if self.k == self.n {
            return Ok(1);
        }
        let budget = crate::budget();
        let r = self.redundancy();
        let subsets: u128 = (1..=r + 1).map(|w| binomial_u128(self.n as u64, w as u64)).fold(0u128, |a, b| a.saturating_add(b));
        let words = self.field.order().pow(self.k as u32);
        let words_small = words.to_u128().unwrap_or(u128::MAX);
        if subsets <= budget as u128 && subsets <= words_small {
            return Ok(self.dependent_columns(r + 1).map(|s| s.len()).unwrap_or(r + 1));
        }
        if words_small <= budget as u128 {
            return self.min_distance_by_codewords();
        }
        Err(Error::SearchBudgetExceeded { required: words.to_string(), budget })
    }

    /// Minimum distance by enumerating every codeword.
    pub fn min_distance_by_codewords(&self) -> Result<usize> {
        let budget = crate::budget();
        let words = self.field.order().pow(self.k as u32);
        if words > BigUint::from(budget) {
            return Err(Error::SearchBudgetExceeded { required: words.to_string(), budget });
        }
        if let Some(sf) = SmallField::new(&self.field) {
            let g: Vec<Vec<u32>> = (0..self.k)
                .map(|i| self.g.row(i).iter().map(|a| self.field.to_u64(a).unwrap() as u32).collect())
                .collect();
            return Ok(min_weight_small(&sf, &g, self.n));
        }
        let f = &self.field;
        let q = f.order_u64().unwrap();
        let mut best = self.n;
        let mut msg = vec![0u64; self.k];
        loop {
            let mut i = self.k;
            loop {
                if i == 0 {
                    return Ok(best);
                }
                i -= 1;
                msg[i] += 1;
                if msg[i] < q {
                    break;
                }
                msg[i] = 0;
            }
            let mut w = 0;
            for j in 0..self.n {
                let mut s = f.zero();
                for (t, &m) in msg.iter().enumerate() {
                    if m != 0 {
                        f.add_assign(&mut s, &f.mul(&f.from_u64(m), self.g.get(t, j)));
                    }
                }
                if !s.is_zero() {
                    w += 1;
                }
            }
            best = best.min(w);
        }
    }

    pub fn to_json(&self) -> CodeJson {
        let enc = |v: &[Gf]| v.iter().map(|a| int_value(&self.field.encode(a))).collect::<Vec<_>>();
        CodeJson {
            field: self.field.descriptor(),
            n: self.n,
            k: self.k,
            h: self.h.to_json(),
            g: Some(self.g.to_json()),
            locators: self.locators.as_deref().map(enc),
            multipliers: self.multipliers.as_deref().map(enc),
            meta: self.meta.clone(),
        }
    }

    pub fn from_json(j: &CodeJson) -> Result<LinearCode> {
        let field = FieldCtx::from_descriptor(&j.field)?;
        LinearCode::from_json_in(&field, j)
    }

    /// Like [`LinearCode::from_json`] but reusing an already built field.
    pub fn from_json_in(field: &FieldCtx, j: &CodeJson) -> Result<LinearCode> {
        let h = GfMatrix::from_json(field, &j.h)?;
        let mut c = if h.rows() == 0 {
            let g = GfMatrix::from_json(field, j.g.as_ref().ok_or_else(|| Error::Parse("G required when H is empty".into()))?)?;
            LinearCode::from_generator(g)?
        } else {
            LinearCode::from_parity_check(h)?
        };
        if c.n != j.n || c.k != j.k {
            return Err(Error::Parse(format!("declared [{}, {}] but matrices give [{}, {}]", j.n, j.k, c.n, c.k)));
        }
        if let Some(g) = &j.g {
            let g = GfMatrix::from_json(field, g)?;
            if g.rows() != c.k || g.rank() != c.k || !g.mul(&c.h.transpose()).is_zero() {
                return Err(Error::Parse("G is not a generator matrix for H".into()));
            }
        }
        let dec = |v: &Vec<Value>| -> Result<Vec<Gf>> { v.iter().map(|x| field.decode(&value_int(x)?)).collect() };
        c.locators = j.locators.as_ref().map(dec).transpose()?;
        c.multipliers = j.multipliers.as_ref().map(dec).transpose()?;
        c.meta = j.meta.clone();
        Ok(c)
    }
}

fn min_weight_small(sf: &SmallField, g: &[Vec<u32>], n: usize) -> usize {
    let k = g.len();
    let q = sf.order();
    let mut best = n;
    let mut msg = vec![0u32; k];
    let mut word = vec![0u32; n];
    // only messages whose leading nonzero entry is 1: one per projective point
    for lead in 0..k {
        msg.iter_mut().for_each(|m| *m = 0);
        msg[lead] = 1;
        for j in 0..n {
            word[j] = g[lead][j];
        }
        loop {
            let w = word.iter().filter(|&&x| x != 0).count();
            best = best.min(w);
            let mut i = k;
            let mut done = true;
            while i > lead + 1 {
                i -= 1;
                let old = msg[i];
                let new = if old + 1 == q { 0 } else { old + 1 };
                msg[i] = new;
                for j in 0..n {
                    let delta = sf.sub(sf.mul(new, g[i][j]), sf.mul(old, g[i][j]));
                    word[j] = sf.add(word[j], delta);
                }
                if new != 0 {
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    best
}
