//! Circulant-based codes: double circulant `(I | A)`, four-circulant
//! `(I 0 A B ; 0 I -B^t A^t)`, exhaustive self-dual searches and a seeded
//! sampler of one-generator quasi-cyclic codes.
//!
//! Quasi-cyclic words are laid out as consecutive blocks of length `m`, and
//! row `i` of a circulant is `T^i` of its first row, so row `i` of
//! `circulant(a)` is the coefficient vector of `x^i a(x)`.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{shift, LinearCode};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::rings::{Ring, RingElement};

/// Square circulant matrix, stored as its generating polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantMatrix {
    poly: RingElement,
}

impl CirculantMatrix {
    pub fn new(a: &RingElement) -> CirculantMatrix {
        CirculantMatrix { poly: a.clone() }
    }

    pub fn order(&self) -> usize {
        self.poly.m()
    }

    pub fn first_row(&self) -> &[u32] {
        self.poly.coeffs()
    }

    pub fn polynomial(&self) -> &RingElement {
        &self.poly
    }

    pub fn row(&self, i: usize) -> Vec<u32> {
        shift(self.poly.coeffs(), i as i64)
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.order()).map(|i| self.row(i)).collect()
    }

    /// Product of circulants, via the ring product of their polynomials.
    pub fn mul(&self, other: &CirculantMatrix) -> Result<CirculantMatrix> {
        Ok(CirculantMatrix {
            poly: self.poly.mul(&other.poly)?,
        })
    }

    pub fn transpose(&self) -> CirculantMatrix {
        CirculantMatrix {
            poly: self.poly.reciprocal(),
        }
    }
}

pub fn circulant(a: &RingElement) -> CirculantMatrix {
    CirculantMatrix::new(a)
}

fn unit_row(m: usize, i: usize) -> Vec<u32> {
    let mut r = vec![0; m];
    r[i] = 1;
    r
}

/// The `[2m, m]` code generated by `(I_m | circulant(a))`.
pub fn double_circulant(a: &RingElement) -> LinearCode {
    let m = a.m();
    let circ = circulant(a);
    let rows = (0..m)
        .map(|i| {
            let mut row = unit_row(m, i);
            row.extend(circ.row(i));
            row
        })
        .collect();
    LinearCode::new(a.field(), 2 * m, rows).expect("double circulant rows are well formed")
}

fn is_minus_one(a: &RingElement) -> bool {
    let f = a.field();
    a.coeffs()[0] == f.minus_one() && a.coeffs()[1..].iter().all(|&c| c == 0)
}

/// `a(x) a(x^{-1}) = -1`, equivalent to self-duality of [`double_circulant`].
pub fn is_self_dual_dc(a: &RingElement) -> bool {
    let prod = a.mul(&a.reciprocal()).expect("same ring");
    is_minus_one(&prod)
}

/// Self-dual double circulant generators `a`, scanning the first
/// `min(q^m, budget)` ring elements in lexicographic coefficient order
/// (constant term most significant).
pub fn search_dcsd(field: &Field, m: usize, budget: u128) -> Result<Vec<RingElement>> {
    let ring = Ring::new(field, m)?;
    let total = ring.size().min(budget);
    Ok((0..total)
        .map(|i| ring.nth_element(i))
        .filter(is_self_dual_dc)
        .collect())
}

/// The `[4n, 2n]` code generated by `(I 0 A B ; 0 I -B^t A^t)`.
pub fn four_circulant(a: &RingElement, b: &RingElement) -> Result<LinearCode> {
    if a.ring() != b.ring() {
        return Err(if a.field() != b.field() {
            Error::FieldMismatch
        } else {
            Error::LengthMismatch {
                expected: a.m(),
                found: b.m(),
            }
        });
    }
    let n = a.m();
    let (ca, cb) = (circulant(a), circulant(b));
    let minus_bt = circulant(&b.reciprocal().neg());
    let at = ca.transpose();
    let zero = vec![0; n];
    let mut rows = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut row = unit_row(n, i);
        row.extend_from_slice(&zero);
        row.extend(ca.row(i));
        row.extend(cb.row(i));
        rows.push(row);
    }
    for i in 0..n {
        let mut row = zero.clone();
        row.extend(unit_row(n, i));
        row.extend(minus_bt.row(i));
        row.extend(at.row(i));
        rows.push(row);
    }
    LinearCode::new(a.field(), 4 * n, rows)
}

/// `1 + a a* + b b* = 0`, equivalent to self-duality of [`four_circulant`].
pub fn is_self_dual_fc(a: &RingElement, b: &RingElement) -> Result<bool> {
    let aa = a.mul(&a.reciprocal())?;
    let bb = b.mul(&b.reciprocal())?;
    let sum = aa.add(&bb)?.add(&a.ring().one())?;
    Ok(sum.is_zero())
}

/// Self-dual four-circulant pairs `(a, b)`, scanning the first
/// `min(q^{2n}, budget)` pairs with `a` as the major key.
pub fn search_fcsd(field: &Field, n: usize, budget: u128) -> Result<Vec<(RingElement, RingElement)>> {
    let ring = Ring::new(field, n)?;
    let per = ring.size();
    let total = per.saturating_mul(per).min(budget);
    let mut out = Vec::new();
    for idx in 0..total {
        let a = ring.nth_element(idx / per);
        let b = ring.nth_element(idx % per);
        if is_self_dual_fc(&a, &b)? {
            out.push((a, b));
        }
    }
    Ok(out)
}

/// The `R(m, q)`-module generated by one block row `(b_0, ..., b_{l-1})`:
/// generator rows are `x^j (b_0, ..., b_{l-1})` for `j < m`.
pub fn one_generator_qc(blocks: &[RingElement]) -> Result<LinearCode> {
    let first = blocks.first().ok_or(Error::EmptyCode)?;
    let ring = first.ring();
    if let Some(b) = blocks.iter().find(|b| b.ring() != ring) {
        return Err(Error::LengthMismatch {
            expected: ring.m(),
            found: b.m(),
        });
    }
    let m = ring.m();
    let rows = (0..m)
        .map(|j| blocks.iter().flat_map(|b| shift(b.coeffs(), j as i64)).collect())
        .collect();
    LinearCode::new(ring.field(), m * blocks.len(), rows)
}

/// Random one-generator `l`-quasi-cyclic code with generator block row
/// `(1, a_1, ..., a_{l-1})`, the `a_i` uniform in `R(m, q)` from a ChaCha8
/// stream seeded with `seed`.
pub fn random_qc(field: &Field, m: usize, l: usize, seed: u64) -> Result<LinearCode> {
    if l < 2 {
        return Err(Error::DegreeTooSmall { degree: l, min: 2 });
    }
    if crate::arith::gcd(m as u64, field.order() as u64) != 1 {
        return Err(Error::NotCoprime {
            a: m as u64,
            b: field.order() as u64,
        });
    }
    let ring = Ring::new(field, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order();
    let mut blocks = vec![ring.one()];
    for _ in 1..l {
        let coeffs = (0..m).map(|_| rng.random_range(0..q)).collect();
        blocks.push(ring.element(coeffs)?);
    }
    one_generator_qc(&blocks)
}

/// `(c_0, c_1) -> (c_1, c_0)` on a word of two length-`m` blocks.
pub fn swap_blocks(word: &[u32]) -> Vec<u32> {
    let m = word.len() / 2;
    let mut out = word[m..].to_vec();
    out.extend_from_slice(&word[..m]);
    out
}

/// `(c_0, c_1) -> (-c_1, c_0)` on a word of two length-`m` blocks.
pub fn twist_blocks(field: &Field, word: &[u32]) -> Vec<u32> {
    let m = word.len() / 2;
    let mut out: Vec<u32> = word[m..].iter().map(|&c| field.neg(c)).collect();
    out.extend_from_slice(&word[..m]);
    out
}
