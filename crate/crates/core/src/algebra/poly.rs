use std::fmt;

use super::field::{same_field, Field};
use crate::error::{Error, Result};

/// Polynomial over a binary extension field, coefficients in ascending degree.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: &'static Field,
    coeffs: Vec<u16>,
}

impl Polynomial {
    pub fn new(field: &'static Field, mut coeffs: Vec<u16>) -> Result<Polynomial> {
        if let Some(&bad) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvalidSymbol {
                symbol: bad,
                q: field.order().min(255) as u8,
            });
        }
        trim(&mut coeffs);
        Ok(Polynomial { field, coeffs })
    }

    fn raw(field: &'static Field, mut coeffs: Vec<u16>) -> Polynomial {
        trim(&mut coeffs);
        Polynomial { field, coeffs }
    }

    pub fn zero(field: &'static Field) -> Polynomial {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &'static Field) -> Polynomial {
        Polynomial {
            field,
            coeffs: vec![1],
        }
    }

    /// `c·x^k`.
    pub fn monomial(field: &'static Field, k: usize, c: u16) -> Polynomial {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Polynomial::raw(field, coeffs)
    }

    /// `x^n − 1`, which equals `x^n + 1` in characteristic 2.
    pub fn x_pow_minus_one(field: &'static Field, n: usize) -> Polynomial {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 1;
        coeffs[n] ^= 1;
        Polynomial::raw(field, coeffs)
    }

    /// Parses a comma separated coefficient list in ascending degree, e.g. `1,1,0,1`.
    pub fn parse(field: &'static Field, text: &str) -> Result<Polynomial> {
        let coeffs = text
            .split(',')
            .map(|t| {
                t.trim().parse::<u16>().map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("bad polynomial coefficient {:?}", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::new(field, coeffs)
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u16 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u16 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        same_field(self.field, other.field)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) ^ other.coeff(i)).collect();
        Ok(Polynomial::raw(self.field, coeffs))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(other)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        same_field(self.field, other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.field));
        }
        let f = self.field;
        let mut out = vec![0u16; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] ^= f.mul(a, b);
            }
        }
        Ok(Polynomial::raw(f, out))
    }

    pub fn scale(&self, c: u16) -> Polynomial {
        let f = self.field;
        Polynomial::raw(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder of `self / divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        same_field(self.field, divisor.field)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut quot = vec![0u16; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = rem[shift + dd];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[shift] = factor;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] ^= f.mul(factor, b);
            }
        }
        Ok((Polynomial::raw(f, quot), Polynomial::raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn eval(&self, x: u16) -> u16 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0u16, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficients padded with zeros to exactly `n` entries.
    pub fn to_vec(&self, n: usize) -> Vec<u16> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), 0);
        v
    }
}

fn trim(coeffs: &mut Vec<u16>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{f2, f4, gf};

    fn p2(c: &[u16]) -> Polynomial {
        Polynomial::new(f2(), c.to_vec()).unwrap()
    }

    #[test]
    fn one_plus_x_squared() {
        let a = p2(&[1, 1]);
        assert_eq!(a.mul(&a).unwrap(), p2(&[1, 0, 1]));
    }

    #[test]
    fn omega_times_omega() {
        let w = Polynomial::new(f4(), vec![2]).unwrap();
        assert_eq!(w.mul(&w).unwrap().coeffs(), &[3]);
    }

    #[test]
    fn divides_x3_minus_1() {
        let g = p2(&[1, 1, 1]);
        let x3 = Polynomial::x_pow_minus_one(f2(), 3);
        assert!(g.divides(&x3).unwrap());
        assert!(!p2(&[1, 0, 1, 1]).divides(&x3).unwrap());
        assert_eq!(
            g.div_rem(&Polynomial::zero(f2())).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = gf(4).unwrap();
        let a = Polynomial::new(f, vec![3, 7, 0, 12, 5, 9]).unwrap();
        let b = Polynomial::new(f, vec![2, 0, 11]).unwrap();
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Polynomial::one(f2());
        let b = Polynomial::one(f4());
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn parse_and_display() {
        let g = Polynomial::parse(f2(), "1,1,0,1").unwrap();
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g.to_string(), "1 + x + x^3");
        assert!(Polynomial::parse(f2(), "1,2").is_err());
        assert!(Polynomial::parse(f2(), "1,a").is_err());
    }

    #[test]
    fn eval_horner() {
        let g = p2(&[1, 1, 1]);
        assert_eq!(g.eval(1), 1);
        assert_eq!(g.eval(0), 1);
        let h = Polynomial::new(f4(), vec![1, 1, 1]).unwrap();
        assert_eq!(h.eval(2), 0);
    }
}
