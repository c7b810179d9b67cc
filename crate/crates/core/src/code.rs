use std::fmt;

use crate::error::{Error, Result};
use crate::profile::{Certifier, ConstraintProfile, Property};
use crate::seq::{Alphabet, Seq};

/// Upper limit on how many members a construction may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 20);

    pub fn check(self, required: u128) -> Result<()> {
        if required > self.0 as u128 {
            return Err(Error::BudgetExceeded {
                required: required.to_string(),
                budget: self.0,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Name and parameters of the procedure that produced a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub name: String,
    pub params: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(name: impl Into<String>) -> Self {
        Provenance {
            name: name.into(),
            params: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.params.is_empty() {
            let inner = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "({inner})")?;
        }
        Ok(())
    }
}

/// A finite set of equal-length sequences with its certificate.
///
/// Members are kept sorted lexicographically and are distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    alphabet: Alphabet,
    length: usize,
    members: Vec<Seq>,
    profile: ConstraintProfile,
    provenance: Provenance,
}

impl Code {
    pub fn new(alphabet: Alphabet, length: usize, members: Vec<Seq>) -> Result<Code> {
        Code::with_provenance(alphabet, length, members, Provenance::new("explicit"))
    }

    pub fn with_provenance(
        alphabet: Alphabet,
        length: usize,
        mut members: Vec<Seq>,
        provenance: Provenance,
    ) -> Result<Code> {
        if length == 0 {
            return Err(Error::EmptySequence);
        }
        for m in &members {
            if m.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet.q(),
                    found: m.q(),
                });
            }
            if m.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: m.len(),
                });
            }
        }
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "duplicate member {}",
                w[0]
            )));
        }
        Ok(Code {
            alphabet,
            length,
            members,
            profile: ConstraintProfile::new(),
            provenance,
        })
    }

    /// Builds a code from members that share the alphabet and length of the
    /// first one.
    pub fn from_members(members: Vec<Seq>) -> Result<Code> {
        let first = members.first().ok_or_else(|| {
            Error::InvalidParameter("cannot infer alphabet and length of an empty code".into())
        })?;
        let (alphabet, length) = (first.alphabet(), first.len());
        Code::new(alphabet, length, members)
    }

    /// Internal constructor for members that are already distinct, of the right
    /// shape, and sorted.
    pub(crate) fn from_sorted(
        alphabet: Alphabet,
        length: usize,
        members: Vec<Seq>,
        provenance: Provenance,
    ) -> Code {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m.len() == length && m.alphabet() == alphabet));
        Code {
            alphabet,
            length,
            members,
            profile: ConstraintProfile::new(),
            provenance,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> u8 {
        self.alphabet.q()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn members(&self) -> &[Seq] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Seq) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn profile(&self) -> &ConstraintProfile {
        &self.profile
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub(crate) fn certify(&mut self, property: Property, certifier: Certifier) {
        self.profile.certify(property, certifier);
    }

    pub(crate) fn certify_by(&mut self, property: Property, lemma: &str) {
        self.profile
            .certify(property, Certifier::Construction(lemma.to_string()));
    }

    pub(crate) fn set_provenance(&mut self, provenance: Provenance) {
        self.provenance = provenance;
    }
}

impl AsRef<[Seq]> for Code {
    fn as_ref(&self) -> &[Seq] {
        &self.members
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_rejects_bad_members() {
        let a = Seq::parse("011").unwrap();
        let b = Seq::parse("001").unwrap();
        let code = Code::new(Alphabet::Binary, 3, vec![a.clone(), b.clone()]).unwrap();
        assert_eq!(code.members(), &[b.clone(), a.clone()]);
        assert!(code.contains(&a));
        assert!(Code::new(Alphabet::Binary, 3, vec![a.clone(), a.clone()]).is_err());
        assert!(Code::new(Alphabet::Binary, 2, vec![a.clone()]).is_err());
        assert!(Code::new(Alphabet::Quaternary, 3, vec![a]).is_err());
    }

    #[test]
    fn budget_check() {
        assert!(Budget(10).check(10).is_ok());
        assert!(matches!(Budget(10).check(11), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn provenance_display() {
        let p = Provenance::new("dyck-mu").with("n", 8);
        assert_eq!(p.to_string(), "dyck-mu(n=8)");
    }
}
