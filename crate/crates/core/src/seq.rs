//! Sequences over F2 and F4.
//!
//! Quaternary symbols are stored as the indices `0, 1, 2, 3` of the field
//! elements `0, 1, ω, ω+1`, which render as the nucleotides `A, C, T, G`.
//! With this order the low bit of a quaternary symbol marks the GC class and
//! the Watson-Crick complement flips the high bit.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Binary,
    Quaternary,
}

const LETTERS: [char; 4] = ['A', 'C', 'T', 'G'];

impl Alphabet {
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2 => Ok(Alphabet::Binary),
            4 => Ok(Alphabet::Quaternary),
            other => Err(Error::InvalidAlphabet(other)),
        }
    }

    pub fn q(self) -> u8 {
        match self {
            Alphabet::Binary => 2,
            Alphabet::Quaternary => 4,
        }
    }

    pub fn render(self, symbol: u8) -> char {
        match self {
            Alphabet::Binary => char::from(b'0' + symbol),
            Alphabet::Quaternary => LETTERS[symbol as usize],
        }
    }

    pub fn parse_symbol(self, c: char) -> Option<u8> {
        match (self, c) {
            (Alphabet::Binary, '0') => Some(0),
            (Alphabet::Binary, '1') => Some(1),
            (Alphabet::Quaternary, 'A') => Some(0),
            (Alphabet::Quaternary, 'C') => Some(1),
            (Alphabet::Quaternary, 'T') => Some(2),
            (Alphabet::Quaternary, 'G') => Some(3),
            _ => None,
        }
    }

    /// Complement of a single symbol: bit flip for F2, A↔T and C↔G for F4.
    #[inline]
    pub fn complement_symbol(self, symbol: u8) -> u8 {
        match self {
            Alphabet::Binary => symbol ^ 1,
            Alphabet::Quaternary => symbol ^ 2,
        }
    }

    /// 1 when the symbol counts toward the balance weight (a one in F2, G or C in F4).
    #[inline]
    pub fn weight_of(self, symbol: u8) -> usize {
        (symbol & 1) as usize
    }
}

/// An immutable, non-empty sequence of symbols over `F_q`.
///
/// Ordering is lexicographic in the canonical symbol order, so sorting a
/// member list gives the deterministic output order used everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl Seq {
    pub fn new(alphabet: Alphabet, symbols: Vec<u8>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptySequence);
        }
        let q = alphabet.q();
        if let Some(&bad) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::InvalidSymbol { symbol: bad as u16, q });
        }
        Ok(Seq { alphabet, symbols })
    }

    pub(crate) fn from_raw(alphabet: Alphabet, symbols: Vec<u8>) -> Self {
        debug_assert!(!symbols.is_empty());
        debug_assert!(symbols.iter().all(|&s| s < alphabet.q()));
        Seq { alphabet, symbols }
    }

    pub fn binary(bits: &[u8]) -> Result<Self> {
        Seq::new(Alphabet::Binary, bits.to_vec())
    }

    pub fn quaternary(symbols: &[u8]) -> Result<Self> {
        Seq::new(Alphabet::Quaternary, symbols.to_vec())
    }

    /// Parses a digit string (`[01]+`) or a nucleotide string (`[ACGT]+`).
    pub fn parse(text: &str) -> Result<Self> {
        let first = text.chars().next().ok_or(Error::EmptySequence)?;
        let alphabet = if first == '0' || first == '1' {
            Alphabet::Binary
        } else {
            Alphabet::Quaternary
        };
        Seq::parse_with(alphabet, text)
    }

    pub fn parse_with(alphabet: Alphabet, text: &str) -> Result<Self> {
        let symbols = text
            .chars()
            .enumerate()
            .map(|(i, c)| {
                alphabet.parse_symbol(c).ok_or_else(|| Error::Parse {
                    line: 0,
                    message: format!("invalid symbol {c:?} at column {} for q = {}", i + 1, alphabet.q()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Seq::new(alphabet, symbols)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> u8 {
        self.alphabet.q()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn complement(&self) -> Seq {
        let alphabet = self.alphabet;
        Seq::from_raw(
            alphabet,
            self.symbols.iter().map(|&s| alphabet.complement_symbol(s)).collect(),
        )
    }

    pub fn reverse(&self) -> Seq {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Seq::from_raw(self.alphabet, symbols)
    }

    /// The substring from position `i` to position `j`, both 1-based and
    /// inclusive. When `i > j` the slice is returned in reverse order.
    pub fn substring(&self, i: usize, j: usize) -> Result<Seq> {
        let n = self.len();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidParameter(format!(
                "substring bounds ({i}, {j}) outside 1..={n}"
            )));
        }
        let symbols = if i <= j {
            self.symbols[i - 1..j].to_vec()
        } else {
            self.symbols[j - 1..i].iter().rev().copied().collect()
        };
        Ok(Seq::from_raw(self.alphabet, symbols))
    }

    pub fn concat(&self, other: &Seq) -> Result<Seq> {
        self.ensure_same_alphabet(other)?;
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Seq::from_raw(self.alphabet, symbols))
    }

    pub fn hamming_distance(&self, other: &Seq) -> Result<usize> {
        self.ensure_same_alphabet(other)?;
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(hamming(&self.symbols, &other.symbols))
    }

    /// Number of ones (q = 2) or of G/C symbols (q = 4).
    pub fn balance_weight(&self) -> usize {
        self.symbols.iter().map(|&s| self.alphabet.weight_of(s)).sum()
    }

    pub fn is_balanced(&self) -> Result<bool> {
        if self.len() % 2 == 1 {
            return Err(Error::OddLength(self.len()));
        }
        Ok(self.balance_weight() * 2 == self.len())
    }

    pub fn max_zero_run(&self) -> usize {
        max_zero_run(&self.symbols)
    }

    /// Contiguous substring containment.
    pub fn contains_substring(&self, pattern: &Seq) -> bool {
        pattern.alphabet == self.alphabet && contains_window(&self.symbols, &pattern.symbols)
    }

    /// Prefix statistics of a binary word: the maximum of `#ones - #zeros`
    /// over non-empty prefixes, and whether the word is a Dyck word.
    pub fn prefix_height(&self) -> Result<PrefixHeight> {
        if self.alphabet != Alphabet::Binary {
            return Err(Error::AlphabetMismatch {
                expected: 2,
                found: self.q(),
            });
        }
        let mut level = 0i64;
        let mut max = i64::MIN;
        let mut never_negative = true;
        for &s in &self.symbols {
            level += if s == 1 { 1 } else { -1 };
            max = max.max(level);
            never_negative &= level >= 0;
        }
        Ok(PrefixHeight {
            max_disbalance: max,
            is_dyck: never_negative && level == 0,
        })
    }

    fn ensure_same_alphabet(&self, other: &Seq) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.q(),
                found: other.q(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixHeight {
    pub max_disbalance: i64,
    pub is_dyck: bool,
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", self.alphabet.render(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seq({self})")
    }
}

/// Positionwise pairing of two binary words into one DNA word:
/// (0,0)↦A, (0,1)↦T, (1,0)↦C, (1,1)↦G.
///
/// In symbol indices this is `a + 2b`, so `a` carries the GC class and `b`
/// the Watson-Crick class.
pub fn psi(a: &Seq, b: &Seq) -> Result<Seq> {
    for s in [a, b] {
        if s.alphabet != Alphabet::Binary {
            return Err(Error::AlphabetMismatch {
                expected: 2,
                found: s.q(),
            });
        }
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(Seq::from_raw(Alphabet::Quaternary, psi_symbols(&a.symbols, &b.symbols)))
}

pub fn psi_inverse(c: &Seq) -> Result<(Seq, Seq)> {
    if c.alphabet != Alphabet::Quaternary {
        return Err(Error::AlphabetMismatch {
            expected: 4,
            found: c.q(),
        });
    }
    let a = c.symbols.iter().map(|&s| s & 1).collect();
    let b = c.symbols.iter().map(|&s| s >> 1).collect();
    Ok((
        Seq::from_raw(Alphabet::Binary, a),
        Seq::from_raw(Alphabet::Binary, b),
    ))
}

pub(crate) fn psi_symbols(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(&x, &y)| x | (y << 1)).collect()
}

pub(crate) fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub(crate) fn max_zero_run(symbols: &[u8]) -> usize {
    let mut best = 0;
    let mut run = 0;
    for &s in symbols {
        if s == 0 {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

pub(crate) fn contains_window(haystack: &[u8], needle: &[u8]) -> bool {
    !needle.is_empty() && haystack.windows(needle.len()).any(|w| w == needle)
}
