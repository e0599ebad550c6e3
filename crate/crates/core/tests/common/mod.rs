#![allow(dead_code)]

use hmds::codes::LinearCode;
use hmds::fields::FieldCtx;
use hmds::matgf::GfMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PRIMES: [u64; 3] = [7, 11, 13];

/// A random MDS code with n <= 8 and rate >= 1/2, reproducible from `seed`.
/// Half the time a GRS code with random multipliers, otherwise a random
/// parity-check matrix that happens to be MDS.
pub fn random_mds(seed: u64) -> LinearCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = PRIMES[rng.gen_range(0..PRIMES.len())];
    let f = FieldCtx::prime(p).unwrap();
    let n = rng.gen_range(4..=8usize.min(p as usize));
    let k = rng.gen_range(n.div_ceil(2)..n);
    if rng.gen_bool(0.5) {
        for _ in 0..200 {
            let rows = (0..n - k).map(|_| (0..n).map(|_| f.random(&mut rng)).collect()).collect();
            let h = GfMatrix::from_rows(&f, rows);
            if h.rank() < n - k {
                continue;
            }
            let c = LinearCode::from_parity_check(h).unwrap();
            if c.is_mds() {
                return c;
            }
        }
    }
    random_grs(&mut rng, &f, n, k)
}

pub fn random_grs(rng: &mut ChaCha8Rng, f: &FieldCtx, n: usize, k: usize) -> LinearCode {
    let q = f.order_u64().unwrap();
    let mut pool: Vec<u64> = (0..q).collect();
    pool.shuffle(rng);
    let locs: Vec<_> = pool[..n].iter().map(|&a| f.from_u64(a)).collect();
    let mult: Vec<_> = (0..n).map(|_| f.random_nonzero(rng)).collect();
    LinearCode::grs(f, &locs, k, Some(&mult)).unwrap()
}

/// Brute-force strong 2-MDS: T = 2(n-k), L = 2.
pub fn brute_2mds(c: &LinearCode) -> bool {
    hmds::cosets::is_strongly_list_decodable(c, 2 * c.redundancy() as u64, 2).unwrap().0
}

pub fn brute_lightly_2mds(c: &LinearCode) -> bool {
    hmds::cosets::is_lightly_list_decodable_bruteforce(c, 2 * c.redundancy() as u64, 2).unwrap().0
}

/// Every binary [n,k] code with n <= 7 up to coordinate permutation, as [I | A].
pub fn binary_codes(n: usize, k: usize) -> impl Iterator<Item = hmds::codes::LinearCode> {
    let f = hmds::fields::FieldCtx::prime(2).unwrap();
    let r = n - k;
    (0u64..1 << (r * k)).map(move |bits| {
        let rows: Vec<Vec<u64>> = (0..r)
            .map(|i| (0..n).map(|j| if j < r { (i == j) as u64 } else { (bits >> (i * k + j - r)) & 1 }).collect())
            .collect();
        hmds::codes::LinearCode::from_parity_check(hmds::matgf::GfMatrix::from_u64(&f, &rows)).unwrap()
    })
}
