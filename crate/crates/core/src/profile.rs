//! Constraint certificates attached to codes.

use std::fmt;

use crate::error::{Error, Result};

/// A combinatorial property a code may be certified to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// Mutually uncorrelated.
    Mu,
    /// κ-weakly mutually uncorrelated.
    Wmu(usize),
    /// Every member balanced.
    Balanced,
    /// Minimum Hamming distance at least `d`.
    MinDistance(usize),
    /// f-APD: no primer dimer byproducts of effective length `f`.
    Apd(usize),
    /// Every prefix of every member has |GC - AT| (or |#1 - #0|) at most `D`.
    PrefixBalanced(usize),
}

impl Property {
    fn kind(self) -> u8 {
        match self {
            Property::Mu => 0,
            Property::Wmu(_) => 1,
            Property::Balanced => 2,
            Property::MinDistance(_) => 3,
            Property::Apd(_) => 4,
            Property::PrefixBalanced(_) => 5,
        }
    }

    pub fn token(self) -> String {
        match self {
            Property::Mu => "mu".into(),
            Property::Wmu(k) => format!("wmu={k}"),
            Property::Balanced => "bal".into(),
            Property::MinDistance(d) => format!("d={d}"),
            Property::Apd(f) => format!("apd={f}"),
            Property::PrefixBalanced(d) => format!("pbal={d}"),
        }
    }

    pub fn parse_token(token: &str) -> Result<Property> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("unknown profile token {token:?}"),
        };
        let num = |v: &str| v.parse::<usize>().map_err(|_| bad());
        match token.split_once('=') {
            None => match token {
                "mu" => Ok(Property::Mu),
                "bal" => Ok(Property::Balanced),
                _ => Err(bad()),
            },
            Some(("wmu", v)) => Ok(Property::Wmu(num(v)?)),
            Some(("d", v)) => Ok(Property::MinDistance(num(v)?)),
            Some(("apd", v)) => Ok(Property::Apd(num(v)?)),
            Some(("pbal", v)) => Ok(Property::PrefixBalanced(num(v)?)),
            Some(_) => Err(bad()),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Who set a flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certifier {
    /// A construction whose correctness argument guarantees the property.
    Construction(String),
    /// A verifier from [`crate::verify`] that checked every member.
    Verifier,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub property: Property,
    pub certifier: Certifier,
}

/// The set of properties established for a code.
///
/// Flags can only be added inside the crate, by constructions and by
/// [`crate::verify::certify`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintProfile {
    claims: Vec<Claim>,
}

impl ConstraintProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn properties(&self) -> impl Iterator<Item = Property> + '_ {
        self.claims.iter().map(|c| c.property)
    }

    pub fn is_empty(&self) -> bool {
        self.claims.is_empty()
    }

    pub(crate) fn certify(&mut self, property: Property, certifier: Certifier) {
        let kind = property.kind();
        if let Some(existing) = self.claims.iter_mut().find(|c| c.property.kind() == kind) {
            if is_stronger(property, existing.property) {
                *existing = Claim {
                    property,
                    certifier,
                };
            }
        } else {
            self.claims.push(Claim {
                property,
                certifier,
            });
            self.claims.sort_by_key(|c| c.property.kind());
        }
    }

    pub fn mu(&self) -> bool {
        self.claims.iter().any(|c| c.property == Property::Mu)
    }

    /// Smallest κ for which the code is certified κ-WMU; MU counts as κ = 1.
    pub fn wmu(&self) -> Option<usize> {
        if self.mu() {
            return Some(1);
        }
        self.claims.iter().find_map(|c| match c.property {
            Property::Wmu(k) => Some(k),
            _ => None,
        })
    }

    pub fn balanced(&self) -> bool {
        self.claims.iter().any(|c| c.property == Property::Balanced)
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.claims.iter().find_map(|c| match c.property {
            Property::MinDistance(d) => Some(d),
            _ => None,
        })
    }

    pub fn apd(&self) -> Option<usize> {
        self.claims.iter().find_map(|c| match c.property {
            Property::Apd(f) => Some(f),
            _ => None,
        })
    }

    pub fn prefix_balanced(&self) -> Option<usize> {
        self.claims.iter().find_map(|c| match c.property {
            Property::PrefixBalanced(d) => Some(d),
            _ => None,
        })
    }

    /// Space separated tokens, e.g. `mu bal d=3`.
    pub fn tokens(&self) -> String {
        self.claims
            .iter()
            .map(|c| c.property.token())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

// Smaller κ, larger d, smaller f and smaller D are all stronger statements.
fn is_stronger(new: Property, old: Property) -> bool {
    match (new, old) {
        (Property::Wmu(a), Property::Wmu(b)) => a < b,
        (Property::MinDistance(a), Property::MinDistance(b)) => a > b,
        (Property::Apd(a), Property::Apd(b)) => a < b,
        (Property::PrefixBalanced(a), Property::PrefixBalanced(b)) => a < b,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        for p in [
            Property::Mu,
            Property::Wmu(3),
            Property::Balanced,
            Property::MinDistance(4),
            Property::Apd(12),
            Property::PrefixBalanced(2),
        ] {
            assert_eq!(Property::parse_token(&p.token()).unwrap(), p);
        }
        assert!(Property::parse_token("wmu=x").is_err());
        assert!(Property::parse_token("odd").is_err());
    }

    #[test]
    fn certify_keeps_strongest() {
        let mut p = ConstraintProfile::new();
        p.certify(Property::Wmu(3), Certifier::Verifier);
        p.certify(Property::Wmu(5), Certifier::Verifier);
        assert_eq!(p.wmu(), Some(3));
        p.certify(Property::Wmu(2), Certifier::Verifier);
        assert_eq!(p.wmu(), Some(2));
        p.certify(Property::Mu, Certifier::Verifier);
        assert_eq!(p.wmu(), Some(1));
        p.certify(Property::Balanced, Certifier::Verifier);
        assert_eq!(p.tokens(), "mu wmu=2 bal");
    }
}
