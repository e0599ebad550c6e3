//! Finite fields: prime fields and towers of extensions over them.
//!
//! An element is stored flat as a vector of leaf words, coefficient 0 first.
//! The leaf is GF(p) for odd p, and a packed GF(2^m) (m <= 32) for binary
//! towers whose first step is small enough; otherwise the leaf is GF(2).

mod poly;
mod small;

pub use poly::{find_irreducible, interpolate, is_irreducible, Poly};
pub use small::SmallField;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 2]>;

/// A field element. Only meaningful together with the [`FieldCtx`] that made it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf(Words);

impl Gf {
    pub fn words(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

impl Ord for Gf {
    /// Canonical-encoding order (for elements of the same field).
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Gf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One extension step of a tower request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub degree: usize,
    /// Monic modulus, little-endian, coefficients as canonical integers of
    /// the previous level. `None` picks the first irreducible.
    pub modulus: Option<Vec<BigUint>>,
}

impl Step {
    pub fn auto(degree: usize) -> Step {
        Step { degree, modulus: None }
    }

    pub fn with_modulus(degree: usize, coeffs: &[u64]) -> Step {
        Step {
            degree,
            modulus: Some(coeffs.iter().map(|&c| BigUint::from(c)).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDescriptor {
    pub deg: usize,
    pub modulus: Vec<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub tower: Vec<StepDescriptor>,
}

enum Leaf {
    Prime,
    Binary {
        m: u32,
        poly: u64,
        /// exp table of length 2(q-1) and log table of length q
        tables: Option<(Vec<u32>, Vec<u32>)>,
    },
}

struct Ext {
    degree: usize,
    low: Vec<Gf>,
    nonzero: Vec<usize>,
    unit: Vec<bool>,
    encoded: Vec<BigUint>,
}

struct Tower {
    p: u64,
    leaf: Leaf,
    leaf_order: u64,
    leaf_modulus: Option<Vec<BigUint>>,
    exts: Vec<Ext>,
    widths: Vec<usize>,
    orders: Vec<BigUint>,
    degrees: Vec<u32>,
}

/// A finite field: one level of a (possibly trivial) tower.
#[derive(Clone)]
pub struct FieldCtx {
    tower: Arc<Tower>,
    level: usize,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.tower.p, self.degree())
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.tower, &other.tower) && self.level == other.level {
            return true;
        }
        self.descriptor() == other.descriptor()
    }
}

impl Eq for FieldCtx {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut r = 0u64;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    r
}

fn bin_reduce(mut r: u64, m: u32, poly: u64) -> u64 {
    let mut i = 63 - r.leading_zeros().min(63) as i32;
    while r != 0 && i >= m as i32 {
        if (r >> i) & 1 == 1 {
            r ^= poly << (i as u32 - m);
        }
        i -= 1;
    }
    r
}

impl Tower {
    fn leaf_add(&self, a: u64, b: u64) -> u64 {
        match self.leaf {
            Leaf::Prime => {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            Leaf::Binary { .. } => a ^ b,
        }
    }

    fn leaf_sub(&self, a: u64, b: u64) -> u64 {
        match self.leaf {
            Leaf::Prime => {
                if a >= b {
                    a - b
                } else {
                    a + self.p - b
                }
            }
            Leaf::Binary { .. } => a ^ b,
        }
    }

    fn leaf_mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.leaf {
            Leaf::Prime => (a * b) % self.p,
            Leaf::Binary { m, poly, tables } => match tables {
                Some((exp, log)) => exp[(log[a as usize] + log[b as usize]) as usize] as u64,
                None => bin_reduce(clmul(a, b), *m, *poly),
            },
        }
    }

    fn leaf_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.leaf_mul(r, base);
            }
            base = self.leaf_mul(base, base);
            e >>= 1;
        }
        r
    }

    fn leaf_inv(&self, a: u64) -> u64 {
        match &self.leaf {
            Leaf::Binary { tables: Some((exp, log)), .. } => {
                let n = self.leaf_order - 1;
                exp[((n - log[a as usize] as u64) % n) as usize] as u64
            }
            _ => self.leaf_pow(a, self.leaf_order - 2),
        }
    }

    fn add_assign(&self, acc: &mut [u64], x: &[u64]) {
        for (a, &b) in acc.iter_mut().zip(x) {
            *a = self.leaf_add(*a, b);
        }
    }

    fn sub_assign(&self, acc: &mut [u64], x: &[u64]) {
        for (a, &b) in acc.iter_mut().zip(x) {
            *a = self.leaf_sub(*a, b);
        }
    }

    fn mul_words(&self, level: usize, a: &[u64], b: &[u64], out: &mut [u64]) {
        if level == 0 {
            out[0] = self.leaf_mul(a[0], b[0]);
            return;
        }
        let ext = &self.exts[level - 1];
        let d = ext.degree;
        let w = self.widths[level - 1];
        let mut acc = vec![0u64; (2 * d - 1) * w];
        let mut t = vec![0u64; w];
        for i in 0..d {
            let ai = &a[i * w..(i + 1) * w];
            if ai.iter().all(|&x| x == 0) {
                continue;
            }
            for j in 0..d {
                let bj = &b[j * w..(j + 1) * w];
                if bj.iter().all(|&x| x == 0) {
                    continue;
                }
                self.mul_words(level - 1, ai, bj, &mut t);
                self.add_assign(&mut acc[(i + j) * w..(i + j + 1) * w], &t);
            }
        }
        let mut c = vec![0u64; w];
        for k in (d..2 * d - 1).rev() {
            c.copy_from_slice(&acc[k * w..(k + 1) * w]);
            if c.iter().all(|&x| x == 0) {
                continue;
            }
            for &j in &ext.nonzero {
                let dst = (k - d + j) * w;
                if ext.unit[j] {
                    self.sub_assign(&mut acc[dst..dst + w], &c);
                } else {
                    self.mul_words(level - 1, &c, &ext.low[j].0, &mut t);
                    self.sub_assign(&mut acc[dst..dst + w], &t);
                }
            }
        }
        out.copy_from_slice(&acc[..d * w]);
    }
}

impl FieldCtx {
    /// GF(p).
    pub fn prime(p: u64) -> Result<FieldCtx> {
        FieldCtx::new(p, &[])
    }

    /// GF(2^m) with the first irreducible modulus.
    pub fn binary(m: usize) -> Result<FieldCtx> {
        if m == 1 {
            return FieldCtx::prime(2);
        }
        FieldCtx::new(2, &[Step::auto(m)])
    }

    /// Builds GF(p) followed by the given extension steps.
    pub fn new(p: u64, steps: &[Step]) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic(p));
        }
        if p >= 1 << 31 {
            return Err(Error::Unsupported("characteristic must be below 2^31".into()));
        }
        for (i, s) in steps.iter().enumerate() {
            if s.degree < 2 {
                return Err(Error::DegreeMismatch(format!("step {i} has degree {} (< 2)", s.degree)));
            }
            if let Some(m) = &s.modulus {
                if m.len() != s.degree + 1 || !m[s.degree].is_one() {
                    return Err(Error::DegreeMismatch(format!(
                        "step {i} modulus must be monic with {} coefficients",
                        s.degree + 1
                    )));
                }
            }
        }
        let packed = p == 2 && steps.first().is_some_and(|s| s.degree <= 32);
        let mut ctx = if packed {
            let s = &steps[0];
            let gf2 = FieldCtx::base_prime(2);
            let poly = match &s.modulus {
                Some(m) => {
                    let f = gf2.poly_from_encodings(m)?;
                    if !is_irreducible(&gf2, &f) {
                        return Err(Error::ReducibleModulus { step: 0 });
                    }
                    f
                }
                None => find_irreducible(&gf2, s.degree)?,
            };
            let bits = poly
                .coeffs()
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, c)| acc | (c.0[0] << i));
            FieldCtx::base_binary(s.degree as u32, bits)
        } else {
            FieldCtx::base_prime(p)
        };
        let skip = usize::from(packed);
        for (i, s) in steps.iter().enumerate().skip(skip) {
            let f = match &s.modulus {
                Some(m) => {
                    let f = ctx.poly_from_encodings(m)?;
                    if !is_irreducible(&ctx, &f) {
                        return Err(Error::ReducibleModulus { step: i });
                    }
                    f
                }
                None => find_irreducible(&ctx, s.degree)?,
            };
            ctx = ctx.extend_with(&f);
        }
        Ok(ctx)
    }

    /// Extends this field by a monic irreducible polynomial over it. The
    /// polynomial is trusted; use [`FieldCtx::extend`] to have it verified.
    fn extend_with(&self, f: &Poly) -> FieldCtx {
        let t = &self.tower;
        let d = f.coeffs().len() - 1;
        let low: Vec<Gf> = f.coeffs()[..d].to_vec();
        let nonzero = (0..d).filter(|&j| !low[j].is_zero()).collect();
        let one = self.one();
        let unit = low.iter().map(|c| *c == one).collect();
        let encoded = f.coeffs().iter().map(|c| self.encode(c)).collect();
        let keep = self.level;
        let mut exts: Vec<Ext> = t.exts[..keep]
            .iter()
            .map(|e| Ext {
                degree: e.degree,
                low: e.low.clone(),
                nonzero: e.nonzero.clone(),
                unit: e.unit.clone(),
                encoded: e.encoded.clone(),
            })
            .collect();
        exts.push(Ext { degree: d, low, nonzero, unit, encoded });
        let leaf = match &t.leaf {
            Leaf::Prime => Leaf::Prime,
            Leaf::Binary { m, poly, tables } => Leaf::Binary { m: *m, poly: *poly, tables: tables.clone() },
        };
        let mut widths = t.widths[..=keep].to_vec();
        let mut orders = t.orders[..=keep].to_vec();
        let mut degrees = t.degrees[..=keep].to_vec();
        widths.push(widths[keep] * d);
        orders.push(orders[keep].pow(d as u32));
        degrees.push(degrees[keep] * d as u32);
        FieldCtx {
            tower: Arc::new(Tower {
                p: t.p,
                leaf,
                leaf_order: t.leaf_order,
                leaf_modulus: t.leaf_modulus.clone(),
                exts,
                widths,
                orders,
                degrees,
            }),
            level: keep + 1,
        }
    }

    /// Extends this field by a monic polynomial, verifying irreducibility.
    pub fn extend(&self, f: &Poly) -> Result<FieldCtx> {
        match f.degree() {
            Some(d) if d >= 2 && f.lead().map(|c| *c == self.one()).unwrap_or(false) => {}
            _ => return Err(Error::DegreeMismatch("extension modulus must be monic of degree >= 2".into())),
        }
        if !is_irreducible(self, f) {
            return Err(Error::ReducibleModulus { step: self.step_count() });
        }
        Ok(self.extend_with(f))
    }

    fn base_prime(p: u64) -> FieldCtx {
        FieldCtx {
            tower: Arc::new(Tower {
                p,
                leaf: Leaf::Prime,
                leaf_order: p,
                leaf_modulus: None,
                exts: vec![],
                widths: vec![1],
                orders: vec![BigUint::from(p)],
                degrees: vec![1],
            }),
            level: 0,
        }
    }

    fn base_binary(m: u32, poly: u64) -> FieldCtx {
        let q = 1u64 << m;
        let tables = if m <= 16 {
            let n = (q - 1) as usize;
            let order_of = |g: u64| {
                let mut x = g;
                let mut k = 1usize;
                while x != 1 {
                    x = bin_reduce(clmul(x, g), m, poly);
                    k += 1;
                    if k > n {
                        break;
                    }
                }
                k
            };
            let g = (1..q).find(|&g| order_of(g) == n).expect("multiplicative group is cyclic");
            let mut exp = vec![0u32; 2 * n];
            let mut log = vec![0u32; q as usize];
            let mut x = 1u64;
            for i in 0..n {
                exp[i] = x as u32;
                exp[i + n] = x as u32;
                log[x as usize] = i as u32;
                x = bin_reduce(clmul(x, g), m, poly);
            }
            Some((exp, log))
        } else {
            None
        };
        let leaf_modulus = Some((0..=m).map(|i| BigUint::from((poly >> i) & 1)).collect());
        FieldCtx {
            tower: Arc::new(Tower {
                p: 2,
                leaf: Leaf::Binary { m, poly, tables },
                leaf_order: q,
                leaf_modulus,
                exts: vec![],
                widths: vec![1],
                orders: vec![BigUint::from(q)],
                degrees: vec![m],
            }),
            level: 0,
        }
    }

    fn step_count(&self) -> usize {
        self.level + usize::from(self.tower.leaf_modulus.is_some())
    }

    pub fn characteristic(&self) -> u64 {
        self.tower.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.tower.degrees[self.level]
    }

    pub fn order(&self) -> &BigUint {
        &self.tower.orders[self.level]
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    /// Number of leaf words per element.
    pub fn width(&self) -> usize {
        self.tower.widths[self.level]
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree() == 1
    }

    /// The field one level down the tower, if any.
    pub fn base(&self) -> Option<FieldCtx> {
        if self.level == 0 {
            None
        } else {
            Some(FieldCtx { tower: self.tower.clone(), level: self.level - 1 })
        }
    }

    /// Degree of this level over the level below (over GF(p) at the leaf).
    pub fn top_degree(&self) -> usize {
        if self.level == 0 {
            self.tower.degrees[0] as usize
        } else {
            self.tower.exts[self.level - 1].degree
        }
    }

    /// Orders of all subfields that appear as tower levels, prime field included.
    pub fn level_orders(&self) -> Vec<BigUint> {
        let mut v = vec![BigUint::from(self.tower.p)];
        for l in 0..=self.level {
            if self.tower.orders[l] != v[v.len() - 1] {
                v.push(self.tower.orders[l].clone());
            }
        }
        v
    }

    /// The modulus of the top step over the level below.
    pub fn top_modulus(&self) -> Option<Vec<BigUint>> {
        if self.level == 0 {
            self.tower.leaf_modulus.clone()
        } else {
            Some(self.tower.exts[self.level - 1].encoded.clone())
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        let mut tower = vec![];
        if let Some(m) = &self.tower.leaf_modulus {
            tower.push(StepDescriptor {
                deg: m.len() - 1,
                modulus: m.iter().map(crate::json::int_value).collect(),
            });
        }
        for e in &self.tower.exts[..self.level] {
            tower.push(StepDescriptor {
                deg: e.degree,
                modulus: e.encoded.iter().map(crate::json::int_value).collect(),
            });
        }
        FieldDescriptor { p: self.tower.p, tower }
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<FieldCtx> {
        let mut steps = vec![];
        for s in &d.tower {
            let m = s.modulus.iter().map(crate::json::value_int).collect::<Result<Vec<_>>>()?;
            steps.push(Step { degree: s.deg, modulus: Some(m) });
        }
        FieldCtx::new(d.p, &steps)
    }

    pub fn zero(&self) -> Gf {
        Gf(SmallVec::from_elem(0, self.width()))
    }

    pub fn one(&self) -> Gf {
        let mut z = self.zero();
        z.0[0] = 1;
        z
    }

    pub fn is_one(&self, a: &Gf) -> bool {
        a.0[0] == 1 && a.0[1..].iter().all(|&w| w == 0)
    }

    /// Element with the given canonical encoding (reduced modulo the field order).
    pub fn from_u64(&self, v: u64) -> Gf {
        let mut z = self.zero();
        let q = self.tower.leaf_order;
        let mut v = v;
        for w in z.0.iter_mut() {
            if v == 0 {
                break;
            }
            *w = v % q;
            v /= q;
        }
        z
    }

    /// Embedding of the integer `v` through the prime subfield.
    pub fn from_int(&self, v: i64) -> Gf {
        let p = self.tower.p as i64;
        self.from_u64(v.rem_euclid(p) as u64)
    }

    pub fn encode(&self, a: &Gf) -> BigUint {
        let q = self.tower.leaf_order;
        if q.is_power_of_two() {
            let m = q.trailing_zeros() as usize;
            let mut r = BigUint::zero();
            for (i, &w) in a.0.iter().enumerate() {
                if w != 0 {
                    r |= BigUint::from(w) << (i * m);
                }
            }
            r
        } else {
            let mut r = BigUint::zero();
            for &w in a.0.iter().rev() {
                r = r * q + w;
            }
            r
        }
    }

    pub fn to_u64(&self, a: &Gf) -> Option<u64> {
        let q = self.tower.leaf_order as u128;
        let mut r: u128 = 0;
        for &w in a.0.iter().rev() {
            r = r.checked_mul(q)?.checked_add(w as u128)?;
            if r > u64::MAX as u128 {
                return None;
            }
        }
        Some(r as u64)
    }

    pub fn decode(&self, v: &BigUint) -> Result<Gf> {
        if v >= self.order() {
            return Err(Error::RangeOutOfBounds(format!("{v} is not below the field order")));
        }
        if let Some(x) = v.to_u64() {
            return Ok(self.from_u64(x));
        }
        let q = BigUint::from(self.tower.leaf_order);
        let mut z = self.zero();
        let mut v = v.clone();
        for w in z.0.iter_mut() {
            let (d, r) = v.div_rem(&q);
            *w = r.to_u64().unwrap();
            v = d;
        }
        Ok(z)
    }

    /// Errors unless `a` is a well-formed element of this field.
    pub fn check(&self, a: &Gf) -> Result<()> {
        if a.0.len() != self.width() || a.0.iter().any(|&w| w >= self.tower.leaf_order) {
            return Err(Error::ForeignElement);
        }
        Ok(())
    }

    pub fn add(&self, a: &Gf, b: &Gf) -> Gf {
        let mut r = a.clone();
        self.tower.add_assign(&mut r.0, &b.0);
        r
    }

    pub fn add_assign(&self, a: &mut Gf, b: &Gf) {
        self.tower.add_assign(&mut a.0, &b.0);
    }

    pub fn sub(&self, a: &Gf, b: &Gf) -> Gf {
        let mut r = a.clone();
        self.tower.sub_assign(&mut r.0, &b.0);
        r
    }

    pub fn sub_assign(&self, a: &mut Gf, b: &Gf) {
        self.tower.sub_assign(&mut a.0, &b.0);
    }

    pub fn neg(&self, a: &Gf) -> Gf {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        let mut r = self.zero();
        if a.is_zero() || b.is_zero() {
            return r;
        }
        self.tower.mul_words(self.level, &a.0, &b.0, &mut r.0);
        r
    }

    pub fn square(&self, a: &Gf) -> Gf {
        self.mul(a, a)
    }

    pub fn inv(&self, a: &Gf) -> Result<Gf> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.level == 0 {
            let mut r = self.zero();
            r.0[0] = self.tower.leaf_inv(a.0[0]);
            return Ok(r);
        }
        let base = self.base().unwrap();
        let e = &self.tower.exts[self.level - 1];
        let mut fc = e.low.clone();
        fc.push(base.one());
        let f = Poly::new(&base, fc);
        let g = Poly::new(&base, self.coefficients(a));
        let s = poly::inverse_mod(&base, &g, &f).ok_or(Error::DivisionByZero)?;
        let mut coeffs = s.coeffs().to_vec();
        coeffs.resize(e.degree, base.zero());
        Ok(self.from_coefficients(&coeffs))
    }

    pub fn div(&self, a: &Gf, b: &Gf) -> Result<Gf> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Gf, e: &BigUint) -> Gf {
        let mut r = self.one();
        for i in (0..e.bits()).rev() {
            r = self.square(&r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }

    pub fn pow_u64(&self, a: &Gf, e: u64) -> Gf {
        self.pow(a, &BigUint::from(e))
    }

    /// a^p.
    pub fn frobenius(&self, a: &Gf) -> Gf {
        self.pow_u64(a, self.tower.p)
    }

    /// Size of the Frobenius orbit of `a`: the degree of the smallest subfield containing it.
    pub fn orbit_size(&self, a: &Gf) -> u32 {
        let mut b = self.frobenius(a);
        let mut t = 1;
        while b != *a {
            b = self.frobenius(&b);
            t += 1;
        }
        t
    }

    pub fn not_in_proper_subfield(&self, a: &Gf) -> Result<bool> {
        self.check(a)?;
        Ok(self.orbit_size(a) == self.degree())
    }

    /// Coefficients of `a` over the level below.
    pub fn coefficients(&self, a: &Gf) -> Vec<Gf> {
        assert!(self.level > 0, "prime-level element has no coefficient vector");
        let w = self.tower.widths[self.level - 1];
        a.0.chunks(w).map(|c| Gf(c.into())).collect()
    }

    pub fn from_coefficients(&self, coeffs: &[Gf]) -> Gf {
        let mut z = self.zero();
        let w = self.tower.widths[self.level - 1];
        for (i, c) in coeffs.iter().enumerate() {
            z.0[i * w..(i + 1) * w].copy_from_slice(&c.0);
        }
        z
    }

    /// Embeds an element of a subfield level (same tower) into this field.
    pub fn lift(&self, a: &Gf) -> Gf {
        let mut z = self.zero();
        z.0[..a.0.len()].copy_from_slice(&a.0);
        z
    }

    /// The subfield level of the same tower with the given order, if present.
    pub fn sublevel(&self, order: &BigUint) -> Option<FieldCtx> {
        (0..=self.level)
            .find(|&l| &self.tower.orders[l] == order)
            .map(|l| FieldCtx { tower: self.tower.clone(), level: l })
    }

    pub fn enumerate(&self, start: u64, end: u64) -> Result<Vec<Gf>> {
        if start > end || BigUint::from(end) > *self.order() {
            return Err(Error::RangeOutOfBounds(format!("[{start},{end}) within field of order {}", self.order())));
        }
        Ok((start..end).map(|v| self.from_u64(v)).collect())
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Gf {
        let q = self.tower.leaf_order;
        let mut z = self.zero();
        for w in z.0.iter_mut() {
            *w = rng.gen_range(0..q);
        }
        z
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Gf {
        loop {
            let a = self.random(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// Roots of x^2 + x + 1 sorted by encoding: the primitive cube roots of unity.
    pub fn cube_roots_of_unity(&self) -> Vec<Gf> {
        let q1 = self.order() - 1u32;
        if !(&q1 % 3u32).is_zero() {
            return vec![];
        }
        let e = &q1 / 3u32;
        let one = self.one();
        let mut v = 2u64;
        loop {
            let r = self.pow(&self.from_u64(v), &e);
            if r != one {
                let r2 = self.square(&r);
                let mut roots = vec![r, r2];
                roots.sort();
                return roots;
            }
            v += 1;
        }
    }

    fn poly_from_encodings(&self, m: &[BigUint]) -> Result<Poly> {
        let c = m.iter().map(|v| self.decode(v)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(self, c))
    }

    pub fn format(&self, a: &Gf) -> String {
        self.encode(a).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gf7_basics() {
        let f = FieldCtx::prime(7).unwrap();
        assert_eq!(f.order_u64(), Some(7));
        let a = f.from_u64(3);
        let b = f.from_u64(5);
        assert!(f.is_one(&f.mul(&a, &b)));
        assert_eq!(f.inv(&f.one()).unwrap(), f.one());
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn composite_rejected() {
        assert_eq!(FieldCtx::prime(9).unwrap_err(), Error::CompositeCharacteristic(9));
    }

    #[test]
    fn gf8_modulus_is_first_irreducible() {
        let f = FieldCtx::binary(3).unwrap();
        assert_eq!(f.top_modulus().unwrap(), [1u32, 1, 0, 1].map(BigUint::from).to_vec());
        let e = f.enumerate(0, 3).unwrap();
        assert_eq!(e[2], f.from_u64(2));
    }

    #[test]
    fn gf4_omega() {
        let f = FieldCtx::binary(2).unwrap();
        let w = f.from_u64(2);
        let w1 = f.from_u64(3);
        assert!(f.is_one(&f.mul(&w, &w1)));
        assert!(f.not_in_proper_subfield(&w).unwrap());
        assert!(!f.not_in_proper_subfield(&f.one()).unwrap());
        assert_eq!(f.cube_roots_of_unity(), vec![w, w1]);
    }

    #[test]
    fn supplied_reducible_modulus_named() {
        let err = FieldCtx::new(2, &[Step::with_modulus(2, &[1, 0, 1])]).unwrap_err();
        assert_eq!(err, Error::ReducibleModulus { step: 0 });
        let err = FieldCtx::new(3, &[Step::with_modulus(2, &[1, 0, 2])]).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch("step 0 modulus must be monic with 3 coefficients".into()));
    }

    #[test]
    fn tower_gf2_96_with_omega() {
        let k = FieldCtx::binary(6).unwrap();
        let omega = k.cube_roots_of_unity()[0].clone();
        let w = k.encode(&omega).to_u64().unwrap();
        let f = FieldCtx::new(2, &[Step::auto(6), Step::with_modulus(16, &[w, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])])
            .unwrap();
        assert_eq!(f.degree(), 96);
        assert_eq!(*f.order(), BigUint::one() << 96);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let a = f.random(&mut rng);
            assert_eq!(f.pow(&a, f.order()), a);
            if !a.is_zero() {
                assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
            }
        }
    }

    #[test]
    fn large_leaf_uses_clmul() {
        let f = FieldCtx::binary(20).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let a = f.random_nonzero(&mut rng);
            assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
    }

    #[test]
    fn encode_decode_roundtrip_in_gf9_tower() {
        let f = FieldCtx::new(3, &[Step::auto(2)]).unwrap();
        for v in 0..9u64 {
            let a = f.from_u64(v);
            assert_eq!(f.encode(&a), BigUint::from(v));
            assert_eq!(f.decode(&BigUint::from(v)).unwrap(), a);
        }
        assert!(f.decode(&BigUint::from(9u32)).is_err());
    }

    #[test]
    fn enumerate_out_of_range() {
        let f = FieldCtx::prime(5).unwrap();
        assert_eq!(f.enumerate(0, 5).unwrap().len(), 5);
        assert!(matches!(f.enumerate(0, 6), Err(Error::RangeOutOfBounds(_))));
    }
}
