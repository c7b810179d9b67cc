//! Binary extension fields GF(2^t), 1 ≤ t ≤ 16.
//!
//! Elements are integers whose bit `i` is the coefficient of `x^i` in the
//! residue modulo the field's primitive polynomial. GF(4) uses
//! `x^2 + x + 1`, so `2` is ω and `3` is ω + 1 with ω² = ω + 1. This matches
//! the quaternary symbol indices of [`crate::seq`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 16;

/// Primitive polynomials indexed by extension degree, bit `i` = coefficient of `x^i`.
pub const PRIMITIVE_POLYNOMIALS: [u32; 17] = [
    0,
    0x3,     // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
];

pub struct Field {
    t: u32,
    modulus: u32,
    exp: Vec<u16>,
    log: Vec<u16>,
}

static FIELDS: Lazy<Vec<Field>> = Lazy::new(|| (1..=MAX_DEGREE).map(Field::build).collect());

/// The field GF(2^t).
pub fn gf(t: u32) -> Result<&'static Field> {
    if !(1..=MAX_DEGREE).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "field degree t = {t} outside 1..={MAX_DEGREE}"
        )));
    }
    Ok(&FIELDS[(t - 1) as usize])
}

pub fn f2() -> &'static Field {
    &FIELDS[0]
}

pub fn f4() -> &'static Field {
    &FIELDS[1]
}

impl Field {
    fn build(t: u32) -> Field {
        let modulus = PRIMITIVE_POLYNOMIALS[t as usize];
        let order = 1u32 << t;
        let cycle = (order - 1) as usize;
        let mut exp = vec![0u16; 2 * cycle];
        let mut log = vec![0u16; order as usize];
        let mut x = 1u32;
        for (i, slot) in exp.iter_mut().take(cycle).enumerate() {
            *slot = x as u16;
            log[x as usize] = i as u16;
            x <<= 1;
            if x & order != 0 {
                x ^= modulus;
            }
        }
        assert_eq!(x, 1, "polynomial {modulus:#x} is not primitive");
        for i in cycle..2 * cycle {
            exp[i] = exp[i - cycle];
        }
        Field {
            t,
            modulus,
            exp,
            log,
        }
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Number of elements, 2^t.
    pub fn order(&self) -> u32 {
        1 << self.t
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn contains(&self, a: u16) -> bool {
        (a as u32) < self.order()
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        a ^ b
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[i]
    }

    pub fn inv(&self, a: u16) -> Option<u16> {
        if a == 0 {
            return None;
        }
        let cycle = self.order() as usize - 1;
        let l = self.log[a as usize] as usize;
        Some(self.exp[(cycle - l) % cycle])
    }

    pub fn div(&self, a: u16, b: u16) -> Result<u16> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    /// α^i for the primitive element α = x.
    pub fn alpha_pow(&self, i: usize) -> u16 {
        let cycle = self.order() as usize - 1;
        self.exp[i % cycle]
    }

    pub fn pow(&self, a: u16, e: u64) -> u16 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let cycle = self.order() as u64 - 1;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % cycle)) % cycle) as usize]
    }

    pub fn element(&'static self, value: u16) -> Result<FieldElement> {
        if !self.contains(value) {
            return Err(Error::InvalidSymbol {
                symbol: value,
                q: self.order().min(255) as u8,
            });
        }
        Ok(FieldElement { field: self, value })
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.t)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t
    }
}

impl Eq for Field {}

pub(crate) fn same_field(a: &Field, b: &Field) -> Result<()> {
    if a.t != b.t {
        return Err(Error::FieldMismatch {
            left: a.t,
            right: b.t,
        });
    }
    Ok(())
}

/// A field element bundled with its field, for arithmetic with operators.
#[derive(Clone, Copy)]
pub struct FieldElement {
    field: &'static Field,
    value: u16,
}

impl FieldElement {
    pub fn value(self) -> u16 {
        self.value
    }

    pub fn field(self) -> &'static Field {
        self.field
    }

    pub fn inv(self) -> Option<FieldElement> {
        self.field.inv(self.value).map(|value| FieldElement {
            field: self.field,
            value,
        })
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.t == other.field.t && self.value == other.value
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈GF(2^{})", self.value, self.field.t)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.field.t, rhs.field.t, "field mismatch");
        FieldElement {
            field: self.field,
            value: self.field.add(self.value, rhs.value),
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.field.t, rhs.field.t, "field mismatch");
        FieldElement {
            field: self.field,
            value: self.field.sub(self.value, rhs.value),
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.field.t, rhs.field.t, "field mismatch");
        FieldElement {
            field: self.field,
            value: self.field.mul(self.value, rhs.value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_polynomial_is_primitive() {
        for t in 1..=MAX_DEGREE {
            let f = gf(t).unwrap();
            let mut seen = vec![false; f.order() as usize];
            for i in 0..(f.order() - 1) as usize {
                seen[f.alpha_pow(i) as usize] = true;
            }
            assert!(seen[1..].iter().all(|&s| s), "t = {t}");
        }
        assert!(gf(0).is_err());
        assert!(gf(17).is_err());
    }

    #[test]
    fn f4_omega_squared() {
        let f = f4();
        let omega = 2;
        assert_eq!(f.mul(omega, omega), 3);
        assert_eq!(f.add(3, 3), 0);
        assert_eq!(f.mul(3, 3), 2);
        assert_eq!(f.inv(2), Some(3));
    }

    #[test]
    fn f4_axioms_exhaustive() {
        let f = f4();
        for a in 0..4u16 {
            assert_eq!(f.add(a, a), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..4u16 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..4u16 {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        assert_eq!(f.inv(0), None);
        assert_eq!(f.div(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = gf(5).unwrap();
        for a in 0..32u16 {
            let mut acc = 1u16;
            for e in 0..40u64 {
                assert_eq!(f.pow(a, e), acc, "a={a} e={e}");
                acc = f.mul(acc, a);
            }
        }
    }

    #[test]
    fn element_operators() {
        let w = f4().element(2).unwrap();
        let one = f4().element(1).unwrap();
        assert_eq!((w * w).value(), 3);
        assert_eq!((w + one).value(), 3);
        assert_eq!((w - w).value(), 0);
        assert_eq!(w.inv().unwrap().value(), 3);
        assert!(f4().element(4).is_err());
    }
}
