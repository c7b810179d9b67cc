//! Code constructions, each returning a [`Code`] certified with the
//! properties its correctness argument guarantees.
//!
//! Every construction computes its output size before enumerating and
//! fails with [`Error::BudgetExceeded`] when the size is above the budget.
//! Members are emitted in lexicographic order.

mod concat;
mod decoupled;
mod ecc;
mod mu;

pub use concat::{auto_schedule, concat_seed};
pub use decoupled::{
    apd_bal_mu4, balanced_wmu4, default_wmu_component, prefix_balanced_wmu, psi_combine,
    v2_bal_ecc_wmu4,
};
pub use ecc::{cyclic_coset_wmu, interleaved_ecc_mu, parsing_ecc_mu, v1_bal_ecc_wmu4};
pub use mu::{apd_mu2, dyck_mu, levenshtein_mu, optimal_split, wmu_concat, OptimalSplit};

use crate::algebra::Field;
use crate::code::{Budget, Code, Provenance};
use crate::error::{invalid, Error, Result};
use crate::seq::{Alphabet, Seq};

/// Depth-first enumeration of words of length `len` in lexicographic order.
///
/// `extend(prefix, symbol)` decides whether `prefix·symbol` can still be
/// completed; `accept(word)` filters complete words.
pub(crate) fn enumerate(
    alphabet: Alphabet,
    len: usize,
    budget: Budget,
    extend: impl Fn(&[u8], u8) -> bool,
    accept: impl Fn(&[u8]) -> bool,
) -> Result<Vec<Vec<u8>>> {
    fn go(
        q: u8,
        len: usize,
        budget: Budget,
        word: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
        extend: &dyn Fn(&[u8], u8) -> bool,
        accept: &dyn Fn(&[u8]) -> bool,
    ) -> Result<()> {
        if word.len() == len {
            if accept(word) {
                if out.len() == budget.0 {
                    return Err(Error::BudgetExceeded {
                        required: format!("more than {}", budget.0),
                        budget: budget.0,
                    });
                }
                out.push(word.clone());
            }
            return Ok(());
        }
        for s in 0..q {
            if extend(word, s) {
                word.push(s);
                go(q, len, budget, word, out, extend, accept)?;
                word.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(len);
    go(alphabet.q(), len, budget, &mut word, &mut out, &extend, &accept)?;
    Ok(out)
}

/// All of `F_q^n`, in lexicographic order.
pub(crate) fn all_words(alphabet: Alphabet, n: usize, budget: Budget) -> Result<Vec<Vec<u8>>> {
    budget.check(pow(alphabet.q() as u128, n))?;
    enumerate(alphabet, n, budget, |_, _| true, |_| true)
}

/// Balanced binary words of even length `n`.
pub(crate) fn balanced_words(n: usize, budget: Budget) -> Result<Vec<Vec<u8>>> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    budget.check(binomial(n as u64, n as u64 / 2))?;
    let half = n / 2;
    enumerate(
        Alphabet::Binary,
        n,
        budget,
        |w, s| {
            let ones = w.iter().filter(|&&b| b == 1).count() + s as usize;
            let zeros = w.len() + 1 - ones;
            ones <= half && zeros <= half
        },
        |_| true,
    )
}

/// The code of all balanced binary words of length `n`.
pub fn balanced_binary_code(n: usize, budget: Budget) -> Result<Code> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let members = to_seqs(Alphabet::Binary, balanced_words(n, budget)?);
    let mut code = Code::from_sorted(
        Alphabet::Binary,
        n,
        members,
        Provenance::new("balanced").with("n", n),
    );
    code.certify_by(crate::Property::Balanced, "balanced");
    if n >= 2 {
        code.certify_by(crate::Property::MinDistance(2), "balanced");
    }
    Ok(code)
}

/// The code of all words of `F_q^n`.
pub fn full_space(alphabet: Alphabet, n: usize, budget: Budget) -> Result<Code> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let members = to_seqs(alphabet, all_words(alphabet, n, budget)?);
    Ok(Code::from_sorted(
        alphabet,
        n,
        members,
        Provenance::new("full-space").with("q", alphabet.q()).with("n", n),
    ))
}

pub(crate) fn to_seqs(alphabet: Alphabet, words: Vec<Vec<u8>>) -> Vec<Seq> {
    words.into_iter().map(|w| Seq::from_raw(alphabet, w)).collect()
}

pub(crate) fn alphabet_of_field(field: &Field) -> Result<Alphabet> {
    match field.t() {
        1 => Ok(Alphabet::Binary),
        2 => Ok(Alphabet::Quaternary),
        t => Err(invalid(format!(
            "codes over GF(2^{t}) have no sequence alphabet; use F2 or F4"
        ))),
    }
}

pub(crate) fn pow(base: u128, exp: usize) -> u128 {
    base.checked_pow(exp as u32).unwrap_or(u128::MAX)
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc
}

/// Product size of several component sizes, saturating.
pub(crate) fn product(sizes: &[usize]) -> u128 {
    sizes
        .iter()
        .fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
}

/// Concatenations `a_1 ⋯ a_m` with `a_i ∈ parts[i]`; lexicographic when
/// every part is sorted.
pub(crate) fn concat_product(parts: &[&[Seq]], alphabet: Alphabet) -> Vec<Seq> {
    let mut out: Vec<Vec<u8>> = vec![Vec::new()];
    for part in parts {
        let mut next = Vec::with_capacity(out.len() * part.len());
        for prefix in &out {
            for s in part.iter() {
                let mut w = prefix.clone();
                w.extend_from_slice(s.symbols());
                next.push(w);
            }
        }
        out = next;
    }
    to_seqs(alphabet, out)
}

pub(crate) fn require_binary(code: &Code, what: &str) -> Result<()> {
    if code.alphabet() != Alphabet::Binary {
        return Err(invalid(format!("{what} must be binary, found q = {}", code.q())));
    }
    Ok(())
}
