use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};


pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Integer coefficients (constant term first) of the `n`-th cyclotomic polynomial.
///
/// Obtained by exact division of `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = divide_monic(&num, &div);
        }
    }
    let p = Arc::new(num);
    cache().write().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}
