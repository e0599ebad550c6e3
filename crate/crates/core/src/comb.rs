//! Subset enumeration and small combinatorial helpers.

use num_bigint::BigUint;
use num_traits::One;

/// k-subsets of [0, n) in colex order.
#[derive(Clone, Debug)]
pub struct Colex {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Colex {
    pub fn new(n: usize, k: usize) -> Colex {
        Colex { n, cur: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let c = self.cur.as_mut().unwrap();
        let k = c.len();
        let mut i = 0;
        loop {
            if i == k {
                self.cur = None;
                break;
            }
            let limit = if i + 1 < k { c[i + 1] } else { self.n };
            if c[i] + 1 < limit {
                c[i] += 1;
                for (t, x) in c.iter_mut().enumerate().take(i) {
                    *x = t;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

pub fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &i| m | (1 << i))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Exact binomial when it fits, saturating otherwise.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = match r.checked_mul(n as u128 - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    r
}
