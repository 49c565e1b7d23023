//! Exact arithmetic in `GF(p^e)` and explicit extensions `GF(q) -> GF(q^l)`.
//!
//! Every field is presented as a chain of simple extensions starting at the
//! prime field. An element of a field of relative degree `d` over its base
//! (order `b`) is a polynomial `sum c_i z^i` with `c_i` in the base, and its
//! canonical encoding is `sum enc(c_i) * b^i`. Unrolling the chain, the
//! encoding is always a base-`p` integer whose digits are the coordinates
//! over `GF(p)`, and an element of the base keeps its encoding inside the
//! extension. Both facts are relied on throughout the crate.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly;

/// Largest supported field order. Multiplication goes through log/exp
/// tables of this size.
pub const MAX_ORDER: u64 = 1 << 20;

/// Orders up to this value get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// Orders up to this value decide squareness by exhaustive squaring.
const SQUARE_SCAN_LIMIT: u32 = 1 << 16;

/// A finite field `GF(p^e)`, cheap to clone and share.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    p: u32,
    degree: u32,
    order: u32,
    base: Option<Field>,
    /// Monic, little-endian, over `base`. Empty for a prime field.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl Field {
    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_ORDER {
            return Err(Error::FieldTooLarge(p));
        }
        Ok(Field::build(p as u32, None, Vec::new()))
    }

    /// `GF(p^e)` over `GF(p)`, using the smallest monic irreducible modulus
    /// of degree `e` (coefficients compared from the constant term up).
    pub fn new(p: u64, e: u32) -> Result<Field> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let prime = Field::prime(p)?;
        if e == 1 {
            return Ok(prime);
        }
        prime.simple_extension(e as usize)
    }

    /// `GF(q)` for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, e)
    }

    /// Extension of degree `d` directly over `self` with the smallest monic
    /// irreducible modulus.
    fn simple_extension(&self, d: usize) -> Result<Field> {
        let order = (self.order() as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
        if order > MAX_ORDER {
            return Err(Error::FieldTooLarge(order));
        }
        let modulus = poly::smallest_irreducible(self, d);
        Ok(Field::build(self.p(), Some(self.clone()), modulus))
    }

    fn build(p: u32, base: Option<Field>, modulus: Vec<u32>) -> Field {
        let (degree, order) = match &base {
            None => (1, p),
            Some(b) => {
                let d = (modulus.len() - 1) as u32;
                (b.degree() * d, b.order().pow(d))
            }
        };

        let neg: Vec<u32> = (0..order).map(|a| digit_neg(p, a)).collect();
        let add = (order <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    t[(a * order + b) as usize] = digit_add(p, a, b);
                }
            }
            t
        });

        let slow_mul = |a: u32, b: u32| -> u32 {
            match &base {
                None => ((a as u64 * b as u64) % p as u64) as u32,
                Some(bf) => {
                    let bq = bf.order();
                    let prod = poly::mul(bf, &to_digits(a, bq, 0), &to_digits(b, bq, 0));
                    from_digits(&poly::rem(bf, &prod, &modulus), bq)
                }
            }
        };

        let group = (order - 1) as u64;
        let factors = arith::prime_factors(group);
        let slow_pow = |a: u32, mut e: u64| -> u32 {
            let mut acc = 1;
            let mut b = a;
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, b);
                }
                b = slow_mul(b, b);
                e >>= 1;
            }
            acc
        };
        let generator = (1..order)
            .find(|&g| factors.iter().all(|&r| slow_pow(g, group / r) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![0; order as usize];
        let mut x = 1;
        for i in 0..group as u32 {
            exp.push(x);
            log[x as usize] = i;
            x = slow_mul(x, generator);
        }

        Field(Arc::new(FieldInner {
            p,
            degree,
            order,
            base,
            modulus,
            exp,
            log,
            neg,
            add,
        }))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    /// Degree `e` over the prime field.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// The order `q = p^e`.
    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// The field this one was built over, `None` for a prime field.
    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    /// Monic defining polynomial over [`Field::base`], little-endian.
    /// Empty for a prime field.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// True when `sub` appears in the presentation chain of `self`
    /// (including `self`). Encodings of `sub` are then valid, and mean the
    /// same element, in `self`.
    pub fn contains_subfield(&self, sub: &Field) -> bool {
        let mut cur = Some(self);
        while let Some(f) = cur {
            if f == sub {
                return true;
            }
            cur = f.base();
        }
        false
    }

    pub fn check(&self, a: u64) -> Result<u32> {
        if a < self.order() as u64 {
            Ok(a as u32)
        } else {
            Err(Error::InvalidEncoding {
                value: a,
                order: self.order(),
            })
        }
    }

    pub fn element(&self, enc: u64) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.clone(),
            enc: self.check(enc)?,
        })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.p == 2 {
            return a ^ b;
        }
        match &inner.add {
            Some(t) => t[(a * inner.order + b) as usize],
            None => digit_add(inner.p, a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        let group = inner.order - 1;
        let s = inner.log[a as usize] + inner.log[b as usize];
        inner.exp[(if s >= group { s - group } else { s }) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let group = inner.order - 1;
        let l = inner.log[a as usize];
        Ok(inner.exp[((group - l) % group) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.0;
        let group = (inner.order - 1) as u64;
        let l = inner.log[a as usize] as u64;
        inner.exp[((l * (e % group)) % group) as usize]
    }

    pub fn minus_one(&self) -> u32 {
        self.neg(1)
    }

    /// Whether `a` has a square root in the field.
    pub fn is_square(&self, a: u32) -> bool {
        let q = self.order();
        if a == 0 {
            return true;
        }
        if q <= SQUARE_SCAN_LIMIT {
            return (0..q).any(|x| self.mul(x, x) == a);
        }
        if self.p() == 2 {
            return true;
        }
        self.pow(a, ((q - 1) / 2) as u64) == 1
    }

    /// Coordinates over `GF(p)`: `e` base-`p` digits, little-endian.
    pub fn prime_digits(&self, a: u32) -> Vec<u32> {
        to_digits(a, self.p(), self.degree() as usize)
    }

    /// Coordinates over [`Field::base`]. A prime field returns `[a]`.
    pub fn base_digits(&self, a: u32) -> Vec<u32> {
        match self.base() {
            None => vec![a],
            Some(b) => to_digits(a, b.order(), self.modulus().len() - 1),
        }
    }

    /// The residue of the indeterminate, `z`, generating this field over its
    /// base. For a prime field this is 1.
    pub fn generator(&self) -> u32 {
        self.base().map_or(1, Field::order)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())?;
        if let Some(b) = self.base() {
            write!(f, "[over GF({}) mod {:?}]", b.order(), self.modulus())?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

fn digit_add(p: u32, mut a: u32, mut b: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        let d = (a % p + b % p) % p;
        out += d * place;
        place *= p;
        a /= p;
        b /= p;
    }
    out
}

fn digit_neg(p: u32, mut a: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 {
        let d = a % p;
        out += ((p - d) % p) * place;
        place *= p;
        a /= p;
    }
    out
}

/// Base-`radix` digits of `a`, little-endian, padded to `len` (or trimmed
/// of trailing zeros when `len == 0`).
pub(crate) fn to_digits(mut a: u32, radix: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    while a > 0 || out.len() < len {
        out.push(a % radix);
        a /= radix;
    }
    out
}

pub(crate) fn from_digits(digits: &[u32], radix: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

/// An element of a [`Field`], carrying its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    enc: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer encoding in `[0, q)`.
    pub fn encoding(&self) -> u32 {
        self.enc
    }

    /// Polynomial coefficients over `GF(p)`, little-endian, length `e`.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.prime_digits(self.enc)
    }

    pub fn is_zero(&self) -> bool {
        self.enc == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, enc: u32) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            enc,
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.enc, other.enc)))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.enc, other.enc)))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.enc, other.enc)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.enc)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.enc, e))
    }

    pub fn is_square(&self) -> bool {
        self.field.is_square(self.enc)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.enc, self.field)
    }
}

// Operator forms panic on mixed fields; use the `try_*` methods to handle
// that case.
impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).expect("mixed fields")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("mixed fields")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("mixed fields")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.enc))
    }
}

/// `GF(q^l)` built directly over `GF(q)` together with the power basis
/// `{1, z, ..., z^(l-1)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTower {
    base: Field,
    top: Field,
}

impl ExtensionTower {
    pub fn new(base: &Field, degree: usize) -> Result<ExtensionTower> {
        if degree < 2 {
            return Err(Error::DegreeTooSmall { degree, min: 2 });
        }
        let top = base.simple_extension(degree)?;
        Ok(ExtensionTower {
            base: base.clone(),
            top,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// The extension field `GF(q^l)`.
    pub fn top(&self) -> &Field {
        &self.top
    }

    pub fn degree(&self) -> usize {
        self.top.modulus().len() - 1
    }

    /// Defining polynomial of `z` over the base.
    pub fn modulus(&self) -> &[u32] {
        self.top.modulus()
    }

    /// Encoding of `z` in the top field.
    pub fn z(&self) -> u32 {
        self.top.generator()
    }

    /// Encodings of the power basis `1, z, ..., z^(l-1)`.
    pub fn basis(&self) -> Vec<u32> {
        let q = self.base.order();
        (0..self.degree() as u32).map(|i| q.pow(i)).collect()
    }

    /// Coordinates of `a` with respect to the power basis.
    pub fn expand(&self, a: u32) -> Vec<u32> {
        to_digits(a, self.base.order(), self.degree())
    }

    /// Inverse of [`ExtensionTower::expand`].
    pub fn combine(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() != self.degree() {
            return Err(Error::LengthMismatch {
                expected: self.degree(),
                found: coords.len(),
            });
        }
        for &c in coords {
            self.base.check(c as u64)?;
        }
        Ok(from_digits(coords, self.base.order()))
    }

    /// Image of a base element in the top field.
    pub fn embed(&self, a: u32) -> u32 {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_poly_mod(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
        // Long division over GF(p) with a monic modulus, written out
        // independently of the `poly` helpers.
        let mut r = a.to_vec();
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = r.pop().unwrap();
            let shift = r.len() - dm;
            for i in 0..dm {
                r[shift + i] = (r[shift + i] + p * p - lead * m[i] % p) % p;
            }
        }
        r.resize(dm, 0);
        r
    }

    #[test]
    fn create_examples() {
        let gf2 = Field::new(2, 1).unwrap();
        assert_eq!(gf2.order(), 2);
        assert!(gf2.modulus().is_empty());
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(3, 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn gf9_modulus_is_lexicographic_minimum() {
        // Oracle: monic quadratics over GF(3) ordered by (c0, c1); a quadratic
        // is irreducible iff it has no root.
        let mut best = None;
        'outer: for c0 in 0..3u32 {
            for c1 in 0..3u32 {
                if (0..3u32).all(|x| (x * x + c1 * x + c0) % 3 != 0) {
                    best = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let gf9 = Field::new(3, 2).unwrap();
        assert_eq!(Some(gf9.modulus().to_vec()), best);
        assert_eq!(gf9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn gf9_z_squared_matches_division_oracle() {
        let gf9 = Field::new(3, 2).unwrap();
        let z = 3; // coefficient vector (0, 1)
        let got = gf9.prime_digits(gf9.mul(z, z));
        assert_eq!(got, brute_poly_mod(3, &[0, 0, 1], gf9.modulus()));
    }

    #[test]
    fn extension_products_match_division_oracle() {
        for (p, e) in [(2u32, 3u32), (2, 4), (3, 3), (5, 2), (7, 2)] {
            let f = Field::new(p as u64, e).unwrap();
            for a in 0..f.order() {
                for b in 0..f.order() {
                    let (da, db) = (f.prime_digits(a), f.prime_digits(b));
                    let mut prod = vec![0; 2 * e as usize - 1];
                    for i in 0..e as usize {
                        for j in 0..e as usize {
                            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                        }
                    }
                    let want = brute_poly_mod(p, &prod, f.modulus());
                    assert_eq!(f.prime_digits(f.mul(a, b)), want);
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        let gf2 = Field::prime(2).unwrap();
        assert_eq!(gf2.add(1, 1), 0);
        let gf5 = Field::prime(5).unwrap();
        assert_eq!(gf5.inv(2).unwrap(), 3);
        assert_eq!(gf5.inv(0), Err(Error::DivisionByZero));
        let a = gf5.element(2).unwrap();
        let b = Field::prime(3).unwrap().element(2).unwrap();
        assert_eq!(a.try_add(&b), Err(Error::FieldMismatch));
        assert_eq!((&a * &a).encoding(), 4);
        assert_eq!((-&a).encoding(), 3);
        assert!(gf5.element(5).is_err());
    }

    #[test]
    fn axioms_exhaustive_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = Field::with_order(q).unwrap();
            let n = f.order();
            for a in 0..n {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in [0, 1, n - 1, (a + b) % n] {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_exhaustive_up_to_81() {
        for q in [
            2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64, 67,
            71, 73, 79, 81,
        ] {
            let f = Field::with_order(q).unwrap();
            for a in 1..f.order() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn minus_one_squares() {
        let minus_one_square = |q| {
            let f = Field::with_order(q).unwrap();
            f.is_square(f.minus_one())
        };
        assert!(minus_one_square(5));
        assert!(!minus_one_square(3));
        assert!(minus_one_square(2));
        assert!(minus_one_square(9));
        assert!(!minus_one_square(7));
    }

    #[test]
    fn is_square_matches_scan_up_to_81() {
        for q in 2..=81u64 {
            let Ok(f) = Field::with_order(q) else { continue };
            let squares: Vec<u32> = (0..f.order()).map(|x| f.mul(x, x)).collect();
            for a in 0..f.order() {
                assert_eq!(f.is_square(a), squares.contains(&a));
            }
            // The Euler-criterion path agrees as well.
            if q % 2 == 1 {
                for a in 1..f.order() {
                    let euler = f.pow(a, (f.order() as u64 - 1) / 2) == 1;
                    assert_eq!(euler, squares.contains(&a));
                }
            }
        }
    }

    #[test]
    fn tower_expand_combine() {
        let gf2 = Field::prime(2).unwrap();
        let t = ExtensionTower::new(&gf2, 2).unwrap();
        assert_eq!(t.top(), &Field::new(2, 2).unwrap());
        assert_eq!(t.combine(&[1, 1]).unwrap(), 1 + t.z());
        assert_eq!(t.combine(&[1, 0]).unwrap(), t.embed(1));
        assert_eq!(t.basis(), vec![1, 2]);
        assert_eq!(
            ExtensionTower::new(&gf2, 1).unwrap_err(),
            Error::DegreeTooSmall { degree: 1, min: 2 }
        );

        let gf4 = Field::with_order(4).unwrap();
        for l in 2..=3 {
            let t = ExtensionTower::new(&gf4, l).unwrap();
            assert_eq!(t.top().order(), 4u32.pow(l as u32));
            assert!(t.top().contains_subfield(&gf4));
            let (base, top) = (t.base(), t.top());
            for a in 0..top.order() {
                let v = t.expand(a);
                assert_eq!(t.combine(&v).unwrap(), a);
                // Linearity over the base: c * a expands to c * expand(a).
                for c in 0..base.order() {
                    let scaled: Vec<u32> = v.iter().map(|&x| base.mul(c, x)).collect();
                    assert_eq!(t.expand(top.mul(t.embed(c), a)), scaled);
                }
            }
            // Embedded base arithmetic is the base arithmetic.
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(top.mul(a, b), gf4.mul(a, b));
                    assert_eq!(top.add(a, b), gf4.add(a, b));
                }
            }
        }
    }
}
