//! The ring `R(m, q) = F_q[x]/(x^m - 1)` and the Artin-condition checks on
//! `u(x) = (x^m - 1)/(x - 1)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::poly;

/// `F_q[x]/(x^m - 1)`.
///
/// Any `m >= 1` is accepted; the Artin-condition functions and the random
/// quasi-cyclic sampler require `gcd(m, q) = 1` themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: Field,
    m: usize,
}

impl Ring {
    pub fn new(field: &Field, m: usize) -> Result<Ring> {
        if m == 0 {
            return Err(Error::Precondition(String::from("co-index must be positive")));
        }
        Ok(Ring {
            field: field.clone(),
            m,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of elements, `q^m`, saturating.
    pub fn size(&self) -> u128 {
        (self.field.order() as u128).saturating_pow(self.m as u32)
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            ring: self.clone(),
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(&self) -> RingElement {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> RingElement {
        let mut e = self.zero();
        e.coeffs[0] = c;
        e
    }

    /// `x^j`, exponent taken mod `m`.
    pub fn monomial(&self, j: usize) -> RingElement {
        let mut e = self.zero();
        e.coeffs[j % self.m] = 1;
        e
    }

    /// Element from `m` coefficient encodings, coefficient of `x^j` at `j`.
    pub fn element(&self, coeffs: Vec<u32>) -> Result<RingElement> {
        if coeffs.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                found: coeffs.len(),
            });
        }
        for &c in &coeffs {
            self.field.check(c as u64)?;
        }
        Ok(RingElement {
            ring: self.clone(),
            coeffs,
        })
    }

    /// The element at position `index` in lexicographic coefficient order,
    /// where the constant term is the most significant digit.
    pub fn nth_element(&self, mut index: u128) -> RingElement {
        let q = self.field.order() as u128;
        let mut coeffs = vec![0; self.m];
        for c in coeffs.iter_mut().rev() {
            *c = (index % q) as u32;
            index /= q;
        }
        RingElement {
            ring: self.clone(),
            coeffs,
        }
    }
}

/// An element of `R(m, q)` as its coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    coeffs: Vec<u32>,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        &self.ring.field
    }

    pub fn m(&self) -> usize {
        self.ring.m
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else if self.ring.field != other.ring.field {
            Err(Error::FieldMismatch)
        } else {
            Err(Error::LengthMismatch {
                expected: self.ring.m,
                found: other.ring.m,
            })
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        let f = self.field();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(RingElement {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> RingElement {
        let f = self.field();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> RingElement {
        let f = self.field();
        RingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.mul(c, a)).collect(),
        }
    }

    /// Cyclic convolution: `sum_{i+j = k mod m} a_i b_j`.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        let f = self.field();
        let m = self.ring.m;
        let mut out = vec![0; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % m;
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        Ok(RingElement {
            ring: self.ring.clone(),
            coeffs: out,
        })
    }

    /// `a(x^{-1})`: coefficient of `x^j` becomes that of `x^{(m-j) mod m}`.
    pub fn reciprocal(&self) -> RingElement {
        let m = self.ring.m;
        let coeffs = (0..m).map(|j| self.coeffs[(m - j) % m]).collect();
        RingElement {
            ring: self.ring.clone(),
            coeffs,
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} in R({}, {})",
            self.coeffs,
            self.ring.m,
            self.ring.field.order()
        )
    }
}

fn field_for(q: u64) -> Result<Field> {
    Field::with_order(q)
}

/// `m` prime and `q` a primitive root modulo `m`; equivalently
/// `(x^m - 1)/(x - 1)` is irreducible over `F_q`.
pub fn is_artin_pair(q: u64, m: u64) -> Result<bool> {
    if arith::gcd(m, q) != 1 {
        return Err(Error::NotCoprime { a: m, b: q });
    }
    if m < 2 {
        return Err(Error::Precondition(format!("m = {m} must be at least 2")));
    }
    if !arith::is_prime(m) {
        return Ok(false);
    }
    Ok(arith::mult_order(q % m, m)? == m - 1)
}

/// Primes `m <= limit` with `(q, m)` an Artin pair, ascending.
///
/// Each returned `m > 2` is cross-checked by confirming that `u(x)` has no
/// root in `F_q`.
pub fn artin_primes(q: u64, limit: u64) -> Result<Vec<u64>> {
    let field = field_for(q)?;
    let mut out = Vec::new();
    for m in 2..=limit {
        if !arith::is_prime(m) || arith::gcd(m, q) != 1 {
            continue;
        }
        if !is_artin_pair(q, m)? {
            continue;
        }
        if m > 2 {
            let u = vec![1u32; m as usize];
            if let Some(root) = (0..field.order()).find(|&a| poly::eval(&field, &u, a) == 0) {
                return Err(Error::TheoremViolation(format!(
                    "u(x) for m = {m} has the root {root} in GF({q})"
                )));
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Irreducibility of `u(x) = 1 + x + ... + x^{m-1}` over `F_q`, decided by
/// the `x^{q^i}` gcd ladder. `m = 1` gives a constant, reported as `false`.
pub fn factor_check(q: u64, m: u64) -> Result<bool> {
    if arith::gcd(m, q) != 1 {
        return Err(Error::NotCoprime { a: m, b: q });
    }
    if m <= 1 {
        return Ok(false);
    }
    let field = field_for(q)?;
    let u = vec![1u32; m as usize];
    Ok(poly::is_irreducible(&field, &u))
}
