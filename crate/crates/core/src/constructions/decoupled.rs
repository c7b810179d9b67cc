use super::ecc::ceil_log2;
use super::mu::{dyck_block, levenshtein_mu, wmu_concat};
use super::{balanced_binary_code, balanced_words, binomial, full_space, product, require_binary, to_seqs};
use crate::code::{Budget, Code, Provenance};
use crate::error::{invalid, Error, Result};
use crate::profile::Property;
use crate::seq::{psi_symbols, Alphabet, Seq};
use crate::verify::dyck_count_exact;

/// `{psi(a, b) : a ∈ c1, b ∈ c2}`, the quaternary code whose GC content
/// follows `c1` and whose purine pattern follows `c2`.
///
/// Certificates are inherited: balance from `c1`, the weaker κ-WMU of the
/// two, `min(d1, d2)` distance, and f-APD from `c2`.
pub fn psi_combine(c1: &Code, c2: &Code, budget: Budget) -> Result<Code> {
    require_binary(c1, "c1")?;
    require_binary(c2, "c2")?;
    if c1.length() != c2.length() {
        return Err(Error::LengthMismatch {
            expected: c1.length(),
            found: c2.length(),
        });
    }
    let n = c1.length();
    budget.check(product(&[c1.len(), c2.len()]))?;
    let mut words: Vec<Vec<u8>> = Vec::with_capacity(c1.len() * c2.len());
    for a in c1.members() {
        for b in c2.members() {
            words.push(psi_symbols(a.symbols(), b.symbols()));
        }
    }
    words.sort();
    let mut code = Code::from_sorted(
        Alphabet::Quaternary,
        n,
        to_seqs(Alphabet::Quaternary, words),
        Provenance::new("psi-combine").with("n", n),
    );
    let (p1, p2) = (c1.profile(), c2.profile());
    let lemma = "psi-combine";
    if p1.balanced() {
        code.certify_by(Property::Balanced, lemma);
    }
    match [p1.wmu(), p2.wmu()].into_iter().flatten().min() {
        Some(1) => code.certify_by(Property::Mu, lemma),
        Some(k) => code.certify_by(Property::Wmu(k), lemma),
        None => {}
    }
    // a singleton has no pairs to separate
    let d1 = if c1.len() < 2 { Some(usize::MAX) } else { p1.min_distance() };
    let d2 = if c2.len() < 2 { Some(usize::MAX) } else { p2.min_distance() };
    if let (Some(a), Some(b)) = (d1, d2) {
        let d = a.min(b);
        if d != usize::MAX {
            code.certify_by(Property::MinDistance(d), lemma);
        }
    }
    if let Some(f) = p2.apd() {
        code.certify_by(Property::Apd(f), lemma);
    }
    Ok(code)
}

/// The default binary κ-WMU component of [`balanced_wmu4`]: an MU core of
/// length `m = n − κ + 1` with marker length `min(⌈log₂ 2m⌉, m − 1)`,
/// padded with an unconstrained tail.
pub fn default_wmu_component(n: usize, kappa: usize, budget: Budget) -> Result<Code> {
    if kappa == 0 || kappa > n {
        return Err(invalid(format!("κ = {kappa} must be in 1..={n}")));
    }
    let m = n - kappa + 1;
    let core = if m == 1 {
        let mut c = Code::from_sorted(
            Alphabet::Binary,
            1,
            vec![Seq::from_raw(Alphabet::Binary, vec![1])],
            Provenance::new("levenshtein-mu").with("n", 1),
        );
        c.certify_by(Property::Mu, "levenshtein-mu");
        c
    } else {
        let ell = ceil_log2(2 * m).min(m - 1);
        levenshtein_mu(Alphabet::Binary, m, ell, budget)?
    };
    wmu_concat(&core, kappa, None, budget)
}

/// Balanced κ-WMU quaternary code. `c1` defaults to all balanced words and
/// `c2` to [`default_wmu_component`].
pub fn balanced_wmu4(
    n: usize,
    kappa: usize,
    c1: Option<&Code>,
    c2: Option<&Code>,
    budget: Budget,
) -> Result<Code> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if kappa == 0 || kappa > n {
        return Err(invalid(format!("κ = {kappa} must be in 1..={n}")));
    }
    let default1;
    let c1 = match c1 {
        Some(c) => {
            if !c.profile().balanced() {
                return Err(Error::MissingCertificate("c1 is not certified balanced".into()));
            }
            c
        }
        None => {
            default1 = balanced_binary_code(n, budget)?;
            &default1
        }
    };
    let default2;
    let c2 = match c2 {
        Some(c) => {
            if c.profile().wmu().is_none_or(|k| k > kappa) {
                return Err(Error::MissingCertificate(format!(
                    "c2 is not certified {kappa}-WMU"
                )));
            }
            c
        }
        None => {
            default2 = default_wmu_component(n, kappa, budget)?;
            &default2
        }
    };
    let mut code = psi_combine(c1, c2, budget)?;
    code.set_provenance(Provenance::new("balanced-wmu4").with("n", n).with("kappa", kappa));
    Ok(code)
}

/// Balanced κ-WMU quaternary code whose GC disbalance over every prefix is
/// at most `max((κ−1)/2, D+1)`.
///
/// The GC component is a balanced head of length κ−1 followed by a Dyck
/// block `1·w·0` of length n−κ+1 with `w` of height at most `D`; the other
/// component is all of `F_2^n`.
pub fn prefix_balanced_wmu(n: usize, kappa: usize, max_height: usize, budget: Budget) -> Result<Code> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if kappa.is_multiple_of(2) {
        return Err(invalid(format!("κ = {kappa} must be odd")));
    }
    if kappa >= n {
        return Err(invalid(format!("κ = {kappa} must be below n = {n}")));
    }
    if max_height == 0 {
        return Err(invalid("height cap D must be at least 1"));
    }
    let m = n - kappa + 1;
    let half = (m - 2) / 2;
    if half > 32 {
        return Err(invalid(format!("Dyck block length {m} too large")));
    }
    let size = binomial(kappa as u64 - 1, (kappa as u64 - 1) / 2)
        .saturating_mul(dyck_count_exact(half, Some(max_height))?)
        .saturating_mul(super::pow(2, n));
    budget.check(size)?;
    let block = dyck_block(m, Some(max_height), budget)?;
    let members = if kappa == 1 {
        block.members().to_vec()
    } else {
        let heads = to_seqs(Alphabet::Binary, balanced_words(kappa - 1, budget)?);
        super::concat_product(&[&heads, block.members()], Alphabet::Binary)
    };
    let mut gc = Code::from_sorted(Alphabet::Binary, n, members, Provenance::new("prefix-head"));
    gc.certify_by(Property::Balanced, "prefix-balanced-wmu");
    // reversal maps a tail-padded MU code onto this head-padded one
    if kappa == 1 {
        gc.certify_by(Property::Mu, "prefix-balanced-wmu");
    } else {
        gc.certify_by(Property::Wmu(kappa), "prefix-balanced-wmu");
    }
    let rest = full_space(Alphabet::Binary, n, budget)?;
    let mut code = psi_combine(&gc, &rest, budget)?;
    code.set_provenance(
        Provenance::new("prefix-balanced-wmu")
            .with("n", n)
            .with("kappa", kappa)
            .with("D", max_height),
    );
    let bound = ((kappa - 1) / 2).max(max_height + 1);
    code.certify_by(Property::PrefixBalanced(bound), "prefix-balanced-wmu");
    Ok(code)
}

/// Balanced κ-WMU code with distance `min(d1, d2)` from a balanced code
/// `c1` and a WMU code `c2`, both with certified distance.
pub fn v2_bal_ecc_wmu4(c1: &Code, c2: &Code, budget: Budget) -> Result<Code> {
    let missing = |what: &str| Err(Error::MissingCertificate(what.into()));
    if !c1.profile().balanced() {
        return missing("c1 is not certified balanced");
    }
    if c1.len() > 1 && c1.profile().min_distance().is_none() {
        return missing("c1 has no certified minimum distance");
    }
    if c2.profile().wmu().is_none() {
        return missing("c2 is not certified WMU");
    }
    if c2.len() > 1 && c2.profile().min_distance().is_none() {
        return missing("c2 has no certified minimum distance");
    }
    let mut code = psi_combine(c1, c2, budget)?;
    code.set_provenance(Provenance::new("v2-bal-ecc-wmu4").with("n", c1.length()));
    Ok(code)
}

/// Balanced MU f-APD code from a balanced `c1` and an MU f-APD `c2`.
pub fn apd_bal_mu4(c1: &Code, c2: &Code, budget: Budget) -> Result<Code> {
    if !c1.profile().balanced() {
        return Err(Error::MissingCertificate("c1 is not certified balanced".into()));
    }
    if !c2.profile().mu() || c2.profile().apd().is_none() {
        return Err(Error::MissingCertificate("c2 is not certified MU and APD".into()));
    }
    let mut code = psi_combine(c1, c2, budget)?;
    code.set_provenance(
        Provenance::new("apd-bal-mu4")
            .with("n", c1.length())
            .with("f", c2.profile().apd().unwrap_or(0)),
    );
    Ok(code)
}
