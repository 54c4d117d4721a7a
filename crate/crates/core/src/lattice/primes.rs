use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// witness set that is exact below 2^64).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn require_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Set of primes dividing `n`, by trial division. Empty for `n <= 1`.
///
/// Panics if a prime factor does not fit in 64 bits; the values fed here are
/// minor gcds of small character matrices and never come close.
pub fn prime_factors(n: &BigUint) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    if n.is_zero() {
        return out;
    }
    if let Some(small) = n.to_u128() {
        let mut rest = small;
        let mut d = 2u128;
        while d * d <= rest {
            if rest % d == 0 {
                out.insert(d as u64);
                while rest % d == 0 {
                    rest /= d;
                }
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            out.insert(u64::try_from(rest).expect("prime factor exceeds 64 bits"));
        }
        return out;
    }
    let mut rest = n.clone();
    let mut d = 2u64;
    loop {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        if (&rest % &dd).is_zero() {
            out.insert(d);
            while (&rest % &dd).is_zero() {
                rest /= &dd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigUint::one() {
        out.insert(rest.to_u64().expect("prime factor exceeds 64 bits"));
    }
    out
}
