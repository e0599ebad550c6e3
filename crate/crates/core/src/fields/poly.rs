//! Univariate polynomials over a [`FieldCtx`].

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{FieldCtx, Gf};
use crate::error::{Error, Result};

/// Little-endian coefficient vector with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Gf>);

impl Poly {
    pub fn new(_ctx: &FieldCtx, mut coeffs: Vec<Gf>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Poly {
        Poly(vec![])
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly(vec![ctx.zero(), ctx.one()])
    }

    pub fn constant(ctx: &FieldCtx, c: Gf) -> Poly {
        Poly::new(ctx, vec![c])
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Gf> {
        self.0.last()
    }

    /// Coefficient `i`, zero past the degree.
    pub fn coeff(&self, ctx: &FieldCtx, i: usize) -> Gf {
        self.0.get(i).cloned().unwrap_or_else(|| ctx.zero())
    }

    pub fn add(&self, ctx: &FieldCtx, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n).map(|i| ctx.add(&self.coeff(ctx, i), &o.coeff(ctx, i))).collect();
        Poly::new(ctx, c)
    }

    pub fn sub(&self, ctx: &FieldCtx, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n).map(|i| ctx.sub(&self.coeff(ctx, i), &o.coeff(ctx, i))).collect();
        Poly::new(ctx, c)
    }

    pub fn scale(&self, ctx: &FieldCtx, s: &Gf) -> Poly {
        Poly::new(ctx, self.0.iter().map(|c| ctx.mul(c, s)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![ctx.zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    let t = ctx.mul(a, b);
                    ctx.add_assign(&mut c[i + j], &t);
                }
            }
        }
        Poly::new(ctx, c)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: &Gf) -> Gf {
        let mut r = ctx.zero();
        for c in self.0.iter().rev() {
            r = ctx.add(&ctx.mul(&r, x), c);
        }
        r
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, ctx: &FieldCtx, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let li = ctx.inv(d.lead().unwrap()).unwrap();
        let monic = ctx.is_one(&li);
        let mut q = vec![ctx.zero(); r.len() - dd];
        let nz: Vec<usize> = (0..dd).filter(|&j| !d.0[j].is_zero()).collect();
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = if monic { r[i].clone() } else { ctx.mul(&r[i], &li) };
            for &j in &nz {
                let t = ctx.mul(&c, &d.0[j]);
                ctx.sub_assign(&mut r[i - dd + j], &t);
            }
            r[i] = ctx.zero();
            q[i - dd] = c;
        }
        r.truncate(dd);
        (Poly::new(ctx, q), Poly::new(ctx, r))
    }

    pub fn rem(&self, ctx: &FieldCtx, d: &Poly) -> Poly {
        self.divrem(ctx, d).1
    }

    pub fn monic(&self, ctx: &FieldCtx) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => self.scale(ctx, &ctx.inv(l).unwrap()),
        }
    }

    fn square_mod(&self, ctx: &FieldCtx, f: &Poly) -> Poly {
        if ctx.characteristic() == 2 && !self.is_zero() {
            let mut c = vec![ctx.zero(); 2 * self.0.len() - 1];
            for (i, a) in self.0.iter().enumerate() {
                c[2 * i] = ctx.square(a);
            }
            Poly::new(ctx, c).rem(ctx, f)
        } else {
            self.mul(ctx, self).rem(ctx, f)
        }
    }

    /// self^e mod f.
    pub fn pow_mod(&self, ctx: &FieldCtx, e: &BigUint, f: &Poly) -> Poly {
        let mut r = Poly::constant(ctx, ctx.one());
        for i in (0..e.bits()).rev() {
            r = r.square_mod(ctx, f);
            if e.bit(i) {
                r = r.mul(ctx, self).rem(ctx, f);
            }
        }
        r
    }

    /// self^|ctx| mod f.
    fn pow_field_order(&self, ctx: &FieldCtx, f: &Poly) -> Poly {
        if ctx.characteristic() == 2 {
            let mut r = self.clone();
            for _ in 0..ctx.degree() {
                r = r.square_mod(ctx, f);
            }
            r
        } else {
            self.pow_mod(ctx, ctx.order(), f)
        }
    }
}

/// Monic gcd.
pub fn gcd(ctx: &FieldCtx, a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.rem(ctx, &b);
        a = b;
        b = r;
    }
    a.monic(ctx)
}

/// Inverse of `a` modulo `f`, if they are coprime.
pub fn inverse_mod(ctx: &FieldCtx, a: &Poly, f: &Poly) -> Option<Poly> {
    let (mut r0, mut r1) = (f.clone(), a.rem(ctx, f));
    let (mut s0, mut s1) = (Poly::zero(), Poly::constant(ctx, ctx.one()));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(ctx, &r1);
        let s = s0.sub(ctx, &q.mul(ctx, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.degree() != Some(0) {
        return None;
    }
    let c = ctx.inv(&r0.0[0]).ok()?;
    Some(s0.scale(ctx, &c))
}

/// Irreducibility of a monic polynomial by gcd with x^{q^i} - x, i <= deg/2.
pub fn is_irreducible(ctx: &FieldCtx, f: &Poly) -> bool {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    if f.0[0].is_zero() {
        return false;
    }
    let x = Poly::x(ctx);
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = h.pow_field_order(ctx, f);
        let g = gcd(ctx, &h.sub(ctx, &x), f);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

/// First monic irreducible of the given degree in canonical order: the
/// coefficient vector read as a base-q integer, constant term least significant.
pub fn find_irreducible(ctx: &FieldCtx, degree: usize) -> Result<Poly> {
    if degree < 2 {
        return Err(Error::DegreeMismatch(format!("irreducible search needs degree >= 2, got {degree}")));
    }
    let q = ctx
        .order()
        .to_u64()
        .ok_or_else(|| Error::Unsupported("coefficient field too large for candidate scan".into()))?;
    let mut digits = vec![0u64; degree];
    digits[0] = 1;
    loop {
        let mut c: Vec<Gf> = digits.iter().map(|&v| ctx.from_u64(v)).collect();
        c.push(ctx.one());
        let f = Poly::new(ctx, c);
        if is_irreducible(ctx, &f) {
            return Ok(f);
        }
        // advance, skipping a zero constant term
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
            if i == degree {
                return Err(Error::Exhausted);
            }
        }
        if digits[0] == 0 {
            digits[0] = 1;
        }
    }
}

/// Lagrange interpolation through distinct abscissae.
pub fn interpolate(ctx: &FieldCtx, xs: &[Gf], ys: &[Gf]) -> Result<Poly> {
    assert_eq!(xs.len(), ys.len());
    for i in 0..xs.len() {
        for j in 0..i {
            if xs[i] == xs[j] {
                return Err(Error::RepeatedPoint(i));
            }
        }
    }
    let mut acc = Poly::zero();
    for i in 0..xs.len() {
        let mut basis = Poly::constant(ctx, ctx.one());
        let mut denom = ctx.one();
        for j in 0..xs.len() {
            if i == j {
                continue;
            }
            basis = basis.mul(ctx, &Poly::new(ctx, vec![ctx.neg(&xs[j]), ctx.one()]));
            denom = ctx.mul(&denom, &ctx.sub(&xs[i], &xs[j]));
        }
        let s = ctx.mul(&ys[i], &ctx.inv(&denom)?);
        acc = acc.add(ctx, &basis.scale(ctx, &s));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(ctx: &FieldCtx, p: &Poly) -> Vec<u64> {
        p.coeffs().iter().map(|c| ctx.to_u64(c).unwrap()).collect()
    }

    #[test]
    fn first_irreducibles_over_gf2() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert_eq!(enc(&f2, &find_irreducible(&f2, 2).unwrap()), vec![1, 1, 1]);
        assert_eq!(enc(&f2, &find_irreducible(&f2, 3).unwrap()), vec![1, 1, 0, 1]);
        assert_eq!(enc(&f2, &find_irreducible(&f2, 6).unwrap()), vec![1, 1, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn degree_one_rejected() {
        let f2 = FieldCtx::prime(2).unwrap();
        assert!(matches!(find_irreducible(&f2, 1), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn interpolation_hits_points() {
        let f = FieldCtx::prime(11).unwrap();
        let xs: Vec<Gf> = (0..4).map(|v| f.from_u64(v)).collect();
        let ys: Vec<Gf> = [3, 1, 4, 1].iter().map(|&v| f.from_u64(v)).collect();
        let p = interpolate(&f, &xs, &ys).unwrap();
        assert!(p.degree().unwrap() < 4);
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(p.eval(&f, x), *y);
        }
        let dup = vec![f.one(), f.one()];
        assert_eq!(interpolate(&f, &dup, &ys[..2]).unwrap_err(), Error::RepeatedPoint(1));
    }

    #[test]
    fn inverse_mod_matches() {
        let f = FieldCtx::prime(7).unwrap();
        let m = Poly::new(&f, [3, 0, 1].iter().map(|&v| f.from_u64(v)).collect());
        let a = Poly::new(&f, [2, 5].iter().map(|&v| f.from_u64(v)).collect());
        let inv = inverse_mod(&f, &a, &m).unwrap();
        assert_eq!(enc(&f, &a.mul(&f, &inv).rem(&f, &m)), vec![1]);
    }
}
