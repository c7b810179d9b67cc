//! Information blocks that never contain an address as a substring.
//!
//! Four encoders are provided: concatenation of non-address WMU codewords
//! ([`scheme_a_encode`]), the same wrapped in a Reed–Solomon code
//! ([`SchemeB`]), a decoupled quaternary scheme built from two binary codes
//! ([`SchemeC`]), and a sequential syndrome-avoiding encoder
//! ([`scheme_d_encode`]).

mod schemes;

pub use schemes::{
    expurgate, scheme_a_decode, scheme_a_encode, scheme_d_decode, scheme_d_encode,
    scheme_d_info_count, SchemeB, SchemeC,
};

use std::fmt;

use crate::algebra::{gf, CyclicCode, Field, Matrix};
use crate::code::Code;
use crate::error::{invalid, Error, Result};
use crate::seq::{Alphabet, Seq};
use crate::verify::{Counterexample, PropertyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scheme::A => "a",
            Scheme::B => "b",
            Scheme::C => "c",
            Scheme::D => "d",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfoBlock {
    pub payload: Seq,
    pub scheme: Scheme,
    /// Length of the addresses the payload avoids.
    pub address_length: usize,
}

/// How membership in an address set is decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// Lookup in the member list.
    Explicit,
    /// `a ∈ A` iff `a·H = target`.
    Syndrome { parity_check: Matrix, target: Vec<u16> },
    /// `A = {psi(c, a·a) : a ∈ halves, c ∈ F_2^{2m}}` over F4.
    DoubledPsi { halves: Vec<Seq> },
}

/// A set of addresses of a common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddressBook {
    alphabet: Alphabet,
    length: usize,
    /// Sorted; empty for [`Membership::DoubledPsi`].
    members: Vec<Seq>,
    membership: Membership,
    kappa: Option<usize>,
}

impl AddressBook {
    /// Addresses given as an explicit code; κ is taken from its profile.
    pub fn explicit(code: &Code) -> AddressBook {
        AddressBook {
            alphabet: code.alphabet(),
            length: code.length(),
            members: code.members().to_vec(),
            membership: Membership::Explicit,
            kappa: code.profile().wmu(),
        }
    }

    /// Addresses `{a : a·H = target}`, where `H` is n×r over F2 or F4.
    ///
    /// When `members` is given it must be exactly that solution set.
    pub fn syndrome(parity_check: Matrix, target: Vec<u16>, members: Option<&Code>) -> Result<AddressBook> {
        let field = parity_check.field();
        let alphabet = alphabet_for(field)?;
        let n = parity_check.rows();
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        if target.len() != parity_check.cols() {
            return Err(Error::LengthMismatch {
                expected: parity_check.cols(),
                found: target.len(),
            });
        }
        if target.iter().any(|&t| !field.contains(t)) {
            return Err(invalid("target syndrome has symbols outside the field"));
        }
        let mut book = AddressBook {
            alphabet,
            length: n,
            members: Vec::new(),
            membership: Membership::Syndrome {
                parity_check,
                target,
            },
            kappa: None,
        };
        if let Some(code) = members {
            if code.alphabet() != alphabet || code.length() != n {
                return Err(invalid("explicit members do not match the parity-check shape"));
            }
            if let Some(bad) = code.members().iter().find(|m| !book.contains(m.symbols())) {
                return Err(invalid(format!("member {bad} does not have the target syndrome")));
            }
            let Membership::Syndrome { parity_check, .. } = &book.membership else {
                unreachable!()
            };
            let solutions = (alphabet.q() as u128)
                .checked_pow((n - parity_check.rank()) as u32)
                .unwrap_or(u128::MAX);
            if solutions != code.len() as u128 {
                return Err(invalid(format!(
                    "the syndrome coset has {solutions} words but {} members were given",
                    code.len()
                )));
            }
            book.members = code.members().to_vec();
            book.kappa = code.profile().wmu();
        }
        Ok(book)
    }

    /// The coset `{c + (1,0,…,0) : c ∈ base}` in syndrome mode, with its
    /// members listed.
    pub fn coset_of(base: &CyclicCode) -> Result<AddressBook> {
        let code = crate::constructions::cyclic_coset_wmu(base, crate::Budget::DEFAULT)?;
        let h = base.parity_check();
        let mut e1 = vec![0u16; base.n()];
        e1[0] = 1;
        let target = h.left_mul(&e1)?;
        AddressBook::syndrome(h, target, Some(&code))
    }

    pub(crate) fn doubled_psi(halves: Vec<Seq>, half_length: usize) -> AddressBook {
        AddressBook {
            alphabet: Alphabet::Quaternary,
            length: 2 * half_length,
            members: Vec::new(),
            membership: Membership::DoubledPsi { halves },
            kappa: None,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn membership(&self) -> &Membership {
        &self.membership
    }

    /// Listed members; empty when membership is only implicit.
    pub fn members(&self) -> &[Seq] {
        &self.members
    }

    pub fn kappa(&self) -> Option<usize> {
        self.kappa
    }

    /// Number of addresses.
    pub fn size(&self) -> u128 {
        match &self.membership {
            Membership::Explicit => self.members.len() as u128,
            Membership::Syndrome { parity_check, .. } => (self.alphabet.q() as u128)
                .checked_pow((self.length - parity_check.rank()) as u32)
                .unwrap_or(u128::MAX),
            Membership::DoubledPsi { halves } => (halves.len() as u128)
                .saturating_mul(1u128.checked_shl(self.length as u32).unwrap_or(u128::MAX)),
        }
    }

    /// Whether a word of the address length is an address.
    pub fn contains(&self, word: &[u8]) -> bool {
        if word.len() != self.length {
            return false;
        }
        match &self.membership {
            Membership::Explicit => self
                .members
                .binary_search_by(|m| m.symbols().cmp(word))
                .is_ok(),
            Membership::Syndrome {
                parity_check,
                target,
            } => {
                let w: Vec<u16> = word.iter().map(|&s| s as u16).collect();
                parity_check.left_mul(&w).is_ok_and(|s| &s == target)
            }
            Membership::DoubledPsi { halves } => {
                let m = self.length / 2;
                let b: Vec<u8> = word.iter().map(|&s| s >> 1).collect();
                b[..m] == b[m..]
                    && halves
                        .binary_search_by(|h| h.symbols().cmp(&b[..m]))
                        .is_ok()
            }
        }
    }

    /// The address occurring in `block` at 0-based `start`, if any.
    fn hit(&self, block: &[u8], start: usize) -> Option<Seq> {
        let w = &block[start..start + self.length];
        self.contains(w).then(|| Seq::from_raw(self.alphabet, w.to_vec()))
    }
}

pub(crate) fn alphabet_for(field: &Field) -> Result<Alphabet> {
    match field.t() {
        1 => Ok(Alphabet::Binary),
        2 => Ok(Alphabet::Quaternary),
        t => Err(invalid(format!("addresses over GF(2^{t}) are not supported"))),
    }
}

pub(crate) fn field_for(alphabet: Alphabet) -> &'static Field {
    gf(if alphabet == Alphabet::Binary { 1 } else { 2 }).expect("GF(2) and GF(4) exist")
}

/// True iff no length-n window of `block` is an address. The counterexample
/// gives the first hit, 1-based.
pub fn avoids_addresses(block: &Seq, book: &AddressBook) -> Result<PropertyReport> {
    if block.alphabet() != book.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: book.alphabet().q(),
            found: block.q(),
        });
    }
    let n = book.length();
    if block.len() < n {
        return Err(invalid(format!(
            "block length {} is shorter than the address length {n}",
            block.len()
        )));
    }
    let name = "avoids-addresses";
    for start in 0..=block.len() - n {
        if let Some(address) = book.hit(block.symbols(), start) {
            return Ok(PropertyReport::fail(
                name,
                Counterexample::AddressHit {
                    block: block.clone(),
                    address,
                    position: start + 1,
                },
            ));
        }
    }
    Ok(PropertyReport::pass(name))
}
