//! Ground-truth property checkers.
//!
//! Every check scans the full member set and, on failure, returns the first
//! counterexample it meets. Counterexamples use 1-based positions and can be
//! replayed with [`Counterexample::replay`].

mod dyck;
mod oracle;

use std::collections::HashMap;
use std::fmt;

pub use dyck::{catalan, dyck_count_exact};
pub use oracle::{oracle_max_code_size, OracleConstraints, OracleResult};

use crate::code::Code;
use crate::error::{invalid, Error, Result};
use crate::profile::{Certifier, Property};
use crate::seq::{hamming, Seq};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// The length-`length` prefix of `prefix_of` equals the suffix of `suffix_of`.
    Overlap {
        prefix_of: Seq,
        suffix_of: Seq,
        length: usize,
    },
    Unbalanced { member: Seq, weight: usize },
    Distance { a: Seq, b: Seq, distance: usize, required: usize },
    /// The window of `complement(complement_of)` starting at `i` equals the
    /// window of `window_of` starting at `j`, read backwards when `reversed`.
    PrimerDimer {
        complement_of: Seq,
        window_of: Seq,
        i: usize,
        j: usize,
        f: usize,
        reversed: bool,
    },
    PrefixDisbalance {
        member: Seq,
        prefix: usize,
        disbalance: i64,
        bound: usize,
    },
    /// `address` occurs in the checked block starting at `position`.
    AddressHit { block: Seq, address: Seq, position: usize },
}

impl Counterexample {
    /// Re-checks that the evidence really violates the property.
    pub fn replay(&self) -> bool {
        match self {
            Counterexample::Overlap {
                prefix_of,
                suffix_of,
                length,
            } => {
                let (p, s) = (prefix_of.symbols(), suffix_of.symbols());
                *length >= 1
                    && *length < p.len()
                    && *length < s.len()
                    && p[..*length] == s[s.len() - length..]
            }
            Counterexample::Unbalanced { member, weight } => {
                member.balance_weight() == *weight && weight * 2 != member.len()
            }
            Counterexample::Distance {
                a,
                b,
                distance,
                required,
            } => a != b && a.hamming_distance(b).ok() == Some(*distance) && distance < required,
            Counterexample::PrimerDimer {
                complement_of,
                window_of,
                i,
                j,
                f,
                reversed,
            } => {
                let c = complement_of.complement();
                let (c, w) = (c.symbols(), window_of.symbols());
                if *i == 0 || *j == 0 || i + f - 1 > c.len() || j + f - 1 > w.len() {
                    return false;
                }
                let cw = &c[i - 1..i - 1 + f];
                let ww = &w[j - 1..j - 1 + f];
                if *reversed {
                    cw.iter().eq(ww.iter().rev())
                } else {
                    cw == ww
                }
            }
            Counterexample::PrefixDisbalance {
                member,
                prefix,
                disbalance,
                bound,
            } => {
                *prefix >= 1
                    && *prefix <= member.len()
                    && prefix_disbalance(&member.symbols()[..*prefix]) == *disbalance
                    && disbalance.unsigned_abs() as usize > *bound
            }
            Counterexample::AddressHit {
                block,
                address,
                position,
            } => {
                let (b, a) = (block.symbols(), address.symbols());
                *position >= 1
                    && position - 1 + a.len() <= b.len()
                    && &b[position - 1..position - 1 + a.len()] == a
            }
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Overlap {
                prefix_of,
                suffix_of,
                length,
            } => write!(
                f,
                "prefix of length {length} of {prefix_of} equals the suffix of {suffix_of} (positions 1..{length} vs {}..{})",
                suffix_of.len() - length + 1,
                suffix_of.len()
            ),
            Counterexample::Unbalanced { member, weight } => write!(
                f,
                "{member} has weight {weight}, expected {}",
                member.len() / 2
            ),
            Counterexample::Distance {
                a,
                b,
                distance,
                required,
            } => write!(f, "d({a}, {b}) = {distance} < {required}"),
            Counterexample::PrimerDimer {
                complement_of,
                window_of,
                i,
                j,
                f: len,
                reversed,
            } => write!(
                f,
                "complement of {complement_of} at positions {i}..{} equals {}{window_of} at positions {j}..{}",
                i + len - 1,
                if *reversed { "the reverse of " } else { "" },
                j + len - 1
            ),
            Counterexample::PrefixDisbalance {
                member,
                prefix,
                disbalance,
                bound,
            } => write!(
                f,
                "prefix 1..{prefix} of {member} has disbalance {disbalance}, bound {bound}"
            ),
            Counterexample::AddressHit {
                block,
                address,
                position,
            } => write!(f, "address {address} occurs in {block} at position {position}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl PropertyReport {
    pub(crate) fn pass(name: impl Into<String>) -> Self {
        PropertyReport {
            name: name.into(),
            passed: true,
            counterexample: None,
        }
    }

    pub(crate) fn fail(name: impl Into<String>, cx: Counterexample) -> Self {
        PropertyReport {
            name: name.into(),
            passed: false,
            counterexample: Some(cx),
        }
    }

    fn from_option(name: impl Into<String>, cx: Option<Counterexample>) -> Self {
        match cx {
            None => PropertyReport::pass(name),
            Some(cx) => PropertyReport::fail(name, cx),
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None if self.passed => write!(f, "PASS {}", self.name),
            None => write!(f, "FAIL {}", self.name),
            Some(cx) => write!(f, "FAIL {}: {cx}", self.name),
        }
    }
}

/// No proper prefix of `a` equals the suffix of the same length.
pub fn is_self_uncorrelated(a: &Seq) -> PropertyReport {
    let s = a.symbols();
    let n = s.len();
    let cx = (1..n).find(|&l| s[..l] == s[n - l..]).map(|l| Counterexample::Overlap {
        prefix_of: a.clone(),
        suffix_of: a.clone(),
        length: l,
    });
    PropertyReport::from_option("self-uncorrelated", cx)
}

pub fn is_mu_code<C: AsRef<[Seq]> + ?Sized>(code: &C) -> PropertyReport {
    let mut report = is_kappa_wmu(code, 1);
    report.name = "mu".into();
    report
}

/// No prefix of length `l ≥ κ` of any member equals the suffix of any
/// (not necessarily different) member, for proper lengths `l < n`.
pub fn is_kappa_wmu<C: AsRef<[Seq]> + ?Sized>(code: &C, kappa: usize) -> PropertyReport {
    let members = code.as_ref();
    let name = format!("wmu={kappa}");
    let n = members.iter().map(Seq::len).max().unwrap_or(0);
    for l in kappa.max(1)..n {
        let mut prefixes: HashMap<&[u8], usize> = HashMap::new();
        for (idx, m) in members.iter().enumerate() {
            if l < m.len() {
                prefixes.entry(&m.symbols()[..l]).or_insert(idx);
            }
        }
        for b in members {
            let s = b.symbols();
            if l >= s.len() {
                continue;
            }
            if let Some(&idx) = prefixes.get(&s[s.len() - l..]) {
                return PropertyReport::fail(
                    name,
                    Counterexample::Overlap {
                        prefix_of: members[idx].clone(),
                        suffix_of: b.clone(),
                        length: l,
                    },
                );
            }
        }
    }
    PropertyReport::pass(name)
}

/// Packs symbols into 64-bit words, two bits per symbol, so that the number
/// of differing positions is a popcount.
struct Packed(Vec<u64>);

const LOW_BITS: u64 = 0x5555_5555_5555_5555;

impl Packed {
    fn new(symbols: &[u8]) -> Packed {
        let mut words = vec![0u64; symbols.len().div_ceil(32)];
        for (i, &s) in symbols.iter().enumerate() {
            words[i / 32] |= (s as u64) << (2 * (i % 32));
        }
        Packed(words)
    }

    fn distance(&self, other: &Packed) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                let x = a ^ b;
                ((x | (x >> 1)) & LOW_BITS).count_ones() as usize
            })
            .sum()
    }
}

/// First pair (in member order) at distance below `required`, if any, plus
/// the exact minimum when `required` is `usize::MAX`.
fn distance_scan(members: &[Seq], required: usize) -> (usize, Option<(usize, usize)>) {
    let packed: Vec<Packed> = members.iter().map(|m| Packed::new(m.symbols())).collect();
    let mut best = usize::MAX;
    for i in 0..packed.len() {
        for j in i + 1..packed.len() {
            let d = packed[i].distance(&packed[j]);
            if d < best {
                best = d;
            }
            if d < required && required != usize::MAX {
                return (best, Some((i, j)));
            }
        }
    }
    (best, None)
}

/// Exact minimum pairwise Hamming distance.
pub fn min_hamming_distance<C: AsRef<[Seq]> + ?Sized>(code: &C) -> Result<usize> {
    let members = code.as_ref();
    if members.len() < 2 {
        return Err(Error::DistanceUndefined);
    }
    ensure_uniform(members)?;
    Ok(distance_scan(members, usize::MAX).0)
}

/// Every pair of distinct members is at distance at least `d`; vacuous for
/// fewer than two members.
pub fn has_min_distance<C: AsRef<[Seq]> + ?Sized>(code: &C, d: usize) -> Result<PropertyReport> {
    let members = code.as_ref();
    ensure_uniform(members)?;
    let name = format!("d={d}");
    let (_, bad) = distance_scan(members, d);
    Ok(PropertyReport::from_option(
        name,
        bad.map(|(i, j)| Counterexample::Distance {
            a: members[i].clone(),
            b: members[j].clone(),
            distance: hamming(members[i].symbols(), members[j].symbols()),
            required: d,
        }),
    ))
}

pub fn is_balanced_code<C: AsRef<[Seq]> + ?Sized>(code: &C) -> Result<PropertyReport> {
    let members = code.as_ref();
    let mut cx = None;
    for m in members {
        if !m.is_balanced()? && cx.is_none() {
            cx = Some(Counterexample::Unbalanced {
                member: m.clone(),
                weight: m.balance_weight(),
            });
        }
    }
    Ok(PropertyReport::from_option("bal", cx))
}

/// No length-`f` window of the complement of any member equals a length-`f`
/// window of any member, read forwards or backwards.
pub fn is_f_apd<C: AsRef<[Seq]> + ?Sized>(code: &C, f: usize) -> Result<PropertyReport> {
    let members = code.as_ref();
    let n = ensure_uniform(members)?;
    if f == 0 || f > n {
        return Err(invalid(format!("APD window f = {f} must be in 1..={n}")));
    }
    let name = format!("apd={f}");
    let mut windows: HashMap<&[u8], (usize, usize)> = HashMap::new();
    for (idx, m) in members.iter().enumerate() {
        for (j, w) in m.symbols().windows(f).enumerate() {
            windows.entry(w).or_insert((idx, j + 1));
        }
    }
    for a in members {
        let comp = a.complement();
        for (i, w) in comp.symbols().windows(f).enumerate() {
            if let Some(&(idx, j)) = windows.get(w) {
                return Ok(PropertyReport::fail(
                    name,
                    Counterexample::PrimerDimer {
                        complement_of: a.clone(),
                        window_of: members[idx].clone(),
                        i: i + 1,
                        j,
                        f,
                        reversed: false,
                    },
                ));
            }
            let rev: Vec<u8> = w.iter().rev().copied().collect();
            if let Some(&(idx, j)) = windows.get(rev.as_slice()) {
                return Ok(PropertyReport::fail(
                    name,
                    Counterexample::PrimerDimer {
                        complement_of: a.clone(),
                        window_of: members[idx].clone(),
                        i: i + 1,
                        j,
                        f,
                        reversed: true,
                    },
                ));
            }
        }
    }
    Ok(PropertyReport::pass(name))
}

// #ones − #zeros for F2, #GC − #AT for F4.
fn prefix_disbalance(symbols: &[u8]) -> i64 {
    symbols
        .iter()
        .map(|&s| if s & 1 == 1 { 1i64 } else { -1 })
        .sum()
}

/// Every prefix of every member has absolute disbalance at most `bound`.
pub fn is_prefix_balanced<C: AsRef<[Seq]> + ?Sized>(code: &C, bound: usize) -> PropertyReport {
    let name = format!("pbal={bound}");
    for m in code.as_ref() {
        let mut level = 0i64;
        for (i, &s) in m.symbols().iter().enumerate() {
            level += if s & 1 == 1 { 1 } else { -1 };
            if level.unsigned_abs() as usize > bound {
                return PropertyReport::fail(
                    name,
                    Counterexample::PrefixDisbalance {
                        member: m.clone(),
                        prefix: i + 1,
                        disbalance: level,
                        bound,
                    },
                );
            }
        }
    }
    PropertyReport::pass(name)
}

/// Runs the checker for one property.
pub fn check<C: AsRef<[Seq]> + ?Sized>(code: &C, property: Property) -> Result<PropertyReport> {
    match property {
        Property::Mu => Ok(is_mu_code(code)),
        Property::Wmu(k) => {
            if k == 0 {
                return Err(invalid("κ must be at least 1"));
            }
            Ok(is_kappa_wmu(code, k))
        }
        Property::Balanced => is_balanced_code(code),
        Property::MinDistance(d) => has_min_distance(code, d),
        Property::Apd(f) => is_f_apd(code, f),
        Property::PrefixBalanced(d) => Ok(is_prefix_balanced(code, d)),
    }
}

/// Checks `property` and, when it holds, records it in the code's profile
/// as verifier-certified.
pub fn certify(code: &mut Code, property: Property) -> Result<PropertyReport> {
    let report = check(code, property)?;
    if report.passed {
        code.certify(property, Certifier::Verifier);
    }
    Ok(report)
}

/// Re-checks every property recorded in the profile.
pub fn recheck_profile(code: &Code) -> Result<Vec<PropertyReport>> {
    code.profile()
        .properties()
        .map(|p| check(code, p))
        .collect()
}

fn ensure_uniform(members: &[Seq]) -> Result<usize> {
    let Some(first) = members.first() else {
        return Ok(0);
    };
    for m in members {
        if m.len() != first.len() {
            return Err(Error::LengthMismatch {
                expected: first.len(),
                found: m.len(),
            });
        }
        if m.alphabet() != first.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: first.q(),
                found: m.q(),
            });
        }
    }
    Ok(first.len())
}
