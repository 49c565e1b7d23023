//! Integer helpers: primality, prime-power decomposition, multiplicative order.

use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^e`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

pub fn pow_mod(base: u64, mut exp: u64, n: u64) -> u64 {
    let n = n as u128;
    let mut b = base as u128 % n;
    let mut acc = 1u128 % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        exp >>= 1;
    }
    acc as u64
}

/// Euler's totient, by factorization.
pub fn totient(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// Smallest `t >= 1` with `a^t = 1 (mod n)`.
///
/// The order divides `phi(n)`, so it is found by stripping prime factors
/// from `phi(n)` while the power stays at 1.
pub fn mult_order(a: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition(alloc::format!("modulus {n} must be at least 2")));
    }
    if gcd(a % n, n) != 1 {
        return Err(Error::NotCoprime { a, b: n });
    }
    let mut order = totient(n);
    for p in prime_factors(order) {
        while order.is_multiple_of(p) && pow_mod(a, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}
