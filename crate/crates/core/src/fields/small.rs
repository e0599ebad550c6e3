//! Table-driven arithmetic on canonical encodings, for fields with q <= 2^16.

use super::FieldCtx;

#[derive(Clone, Debug)]
enum AddRule {
    Prime(u32),
    Xor,
    Table { add: Vec<u32>, neg: Vec<u32> },
}

#[derive(Clone, Debug)]
pub struct SmallField {
    q: u32,
    rule: AddRule,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl SmallField {
    pub const MAX_ORDER: u64 = 1 << 16;

    pub fn new(ctx: &FieldCtx) -> Option<SmallField> {
        let q = ctx.order_u64().filter(|&q| q <= Self::MAX_ORDER)? as u32;
        let p = ctx.characteristic() as u32;
        let rule = if ctx.is_prime_field() {
            AddRule::Prime(p)
        } else if p == 2 {
            AddRule::Xor
        } else {
            let elems: Vec<_> = (0..q as u64).map(|v| ctx.from_u64(v)).collect();
            let mut add = vec![0u32; (q * q) as usize];
            let mut neg = vec![0u32; q as usize];
            for a in 0..q as usize {
                neg[a] = ctx.to_u64(&ctx.neg(&elems[a])).unwrap() as u32;
                for b in 0..q as usize {
                    add[a * q as usize + b] = ctx.to_u64(&ctx.add(&elems[a], &elems[b])).unwrap() as u32;
                }
            }
            AddRule::Table { add, neg }
        };
        let n = (q - 1) as usize;
        let one = ctx.one();
        let g = (1..q as u64)
            .map(|v| ctx.from_u64(v))
            .find(|g| {
                let mut x = g.clone();
                let mut k = 1;
                while x != one {
                    x = ctx.mul(&x, g);
                    k += 1;
                }
                k == n
            })
            .expect("cyclic multiplicative group");
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut x = one;
        for i in 0..n {
            let e = ctx.to_u64(&x).unwrap() as u32;
            exp[i] = e;
            exp[i + n] = e;
            log[e as usize] = i as u32;
            x = ctx.mul(&x, &g);
        }
        Some(SmallField { q, rule, exp, log })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.rule {
            AddRule::Prime(p) => {
                let s = a + b;
                if s >= *p {
                    s - p
                } else {
                    s
                }
            }
            AddRule::Xor => a ^ b,
            AddRule::Table { add, .. } => add[(a * self.q + b) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        match &self.rule {
            AddRule::Prime(p) => {
                if a == 0 {
                    0
                } else {
                    p - a
                }
            }
            AddRule::Xor => a,
            AddRule::Table { neg, .. } => neg[a as usize],
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Step;

    #[test]
    fn agrees_with_generic_arithmetic() {
        for ctx in [
            FieldCtx::prime(7).unwrap(),
            FieldCtx::binary(4).unwrap(),
            FieldCtx::new(3, &[Step::auto(2)]).unwrap(),
        ] {
            let s = SmallField::new(&ctx).unwrap();
            let q = s.order() as u64;
            for a in 0..q {
                for b in 0..q {
                    let (x, y) = (ctx.from_u64(a), ctx.from_u64(b));
                    assert_eq!(s.add(a as u32, b as u32) as u64, ctx.to_u64(&ctx.add(&x, &y)).unwrap());
                    assert_eq!(s.sub(a as u32, b as u32) as u64, ctx.to_u64(&ctx.sub(&x, &y)).unwrap());
                    assert_eq!(s.mul(a as u32, b as u32) as u64, ctx.to_u64(&ctx.mul(&x, &y)).unwrap());
                }
            }
        }
    }
}
