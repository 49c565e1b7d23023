//! Dense univariate polynomials over a [`Field`], little-endian encodings.
//!
//! Only what the modulus search and the irreducibility ladder need.

use alloc::vec;
use alloc::vec::Vec;

use crate::galois::Field;

pub(crate) fn trim(p: &mut Vec<u32>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for zero.
pub(crate) fn degree(p: &[u32]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = f.sub(x, y);
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `m`.
pub(crate) fn rem(f: &Field, a: &[u32], m: &[u32]) -> Vec<u32> {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = f.inv(m[dm]).expect("nonzero leading coefficient");
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = f.mul(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &c) in m[..=dm].iter().enumerate() {
            r[i + shift] = f.sub(r[i + shift], f.mul(factor, c));
        }
        trim(&mut r);
    }
    r
}

/// Monic greatest common divisor.
pub(crate) fn gcd(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = f.inv(x[d]).expect("nonzero leading coefficient");
        for c in x.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    x
}

pub(crate) fn mul_mod(f: &Field, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    rem(f, &mul(f, a, b), m)
}

pub(crate) fn pow_mod(f: &Field, base: &[u32], mut exp: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = rem(f, &[1], m);
    let mut b = rem(f, base, m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(f, &acc, &b, m);
        }
        b = mul_mod(f, &b, &b, m);
        exp >>= 1;
    }
    acc
}

/// Irreducibility over `f` by the ladder `gcd(x^(q^i) - x, g) = 1` for
/// `1 <= i <= deg(g)/2`. Constants are not irreducible.
pub(crate) fn is_irreducible(f: &Field, g: &[u32]) -> bool {
    let d = match degree(g) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(d) => d,
    };
    let q = f.order() as u64;
    let x = [0, 1];
    let mut h = rem(f, &x, g);
    for _ in 1..=d / 2 {
        h = pow_mod(f, &h, q, g);
        let diff = sub(f, &h, &x);
        let common = gcd(f, &diff, g);
        if degree(&common) != Some(0) {
            return false;
        }
    }
    true
}

/// Smallest monic irreducible polynomial of the given degree over `f`.
///
/// Candidates are ordered by their coefficient vectors read from the
/// constant term upwards, comparing encodings.
pub(crate) fn smallest_irreducible(f: &Field, deg: usize) -> Vec<u32> {
    let q = f.order() as u64;
    let total = q.pow(deg as u32);
    let mut coeffs = vec![0u32; deg + 1];
    coeffs[deg] = 1;
    for idx in 0..total {
        // The constant term is the most significant digit of `idx`.
        let mut rest = idx;
        for i in (0..deg).rev() {
            coeffs[i] = (rest % q) as u32;
            rest /= q;
        }
        if is_irreducible(f, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn eval(f: &Field, p: &[u32], at: u32) -> u32 {
    p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, at), c))
}
