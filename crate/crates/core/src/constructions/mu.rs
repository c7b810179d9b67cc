use super::{all_words, concat_product, enumerate, pow, product, to_seqs};
use crate::code::{Budget, Code, Provenance};
use crate::error::{invalid, Error, Result};
use crate::profile::Property;
use crate::seq::{contains_window, max_zero_run, Alphabet, Seq};
use crate::verify::dyck_count_exact;

/// `{1·w·0 : w a Dyck word of length n−2}`, optionally with height of `w`
/// at most `max_height`. Balanced and MU.
pub fn dyck_mu(n: usize, max_height: Option<usize>, budget: Budget) -> Result<Code> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n < 4 {
        return Err(invalid(format!("length n = {n} must be at least 4")));
    }
    dyck_block(n, max_height, budget)
}

/// Same as [`dyck_mu`] but also accepts `n = 2`, the single word `10`.
pub(crate) fn dyck_block(n: usize, max_height: Option<usize>, budget: Budget) -> Result<Code> {
    if n < 2 || n % 2 == 1 {
        return Err(invalid(format!("Dyck block length {n} must be even and positive")));
    }
    if max_height == Some(0) {
        return Err(invalid("height cap D must be at least 1"));
    }
    let half = (n - 2) / 2;
    if half > 32 {
        return Err(invalid(format!("length n = {n} too large for exact counting")));
    }
    budget.check(dyck_count_exact(half, max_height)?)?;
    let cap = max_height.unwrap_or(half) as i64;
    let inner = n - 2;
    let words = enumerate(
        Alphabet::Binary,
        inner,
        budget,
        |w, s| {
            let h: i64 = w.iter().map(|&b| if b == 1 { 1 } else { -1 }).sum::<i64>()
                + if s == 1 { 1 } else { -1 };
            let remaining = (inner - w.len() - 1) as i64;
            h >= 0 && h <= cap && h <= remaining
        },
        |_| true,
    )?;
    let members = words
        .into_iter()
        .map(|w| {
            let mut v = Vec::with_capacity(n);
            v.push(1);
            v.extend(w);
            v.push(0);
            Seq::from_raw(Alphabet::Binary, v)
        })
        .collect();
    let mut prov = Provenance::new("dyck-mu").with("n", n);
    if let Some(d) = max_height {
        prov = prov.with("D", d);
    }
    let mut code = Code::from_sorted(Alphabet::Binary, n, members, prov);
    code.certify_by(Property::Mu, "dyck-mu");
    code.certify_by(Property::Balanced, "dyck-mu");
    Ok(code)
}

/// Words starting with `0^ℓ`, then a nonzero symbol, ending with a nonzero
/// symbol, and with no `0^ℓ` strictly between. MU.
pub fn levenshtein_mu(alphabet: Alphabet, n: usize, ell: usize, budget: Budget) -> Result<Code> {
    if n < 2 {
        return Err(invalid(format!("length n = {n} must be at least 2")));
    }
    if ell == 0 || ell >= n {
        return Err(invalid(format!("marker length ℓ = {ell} must be in 1..={}", n - 1)));
    }
    let q = alphabet.q() as u128;
    let size = if n - ell == 1 {
        q - 1
    } else {
        (q - 1)
            .saturating_mul(q - 1)
            .saturating_mul(count_run_limited(q, n - ell - 2, ell))
    };
    budget.check(size)?;
    let words = enumerate(
        alphabet,
        n,
        budget,
        |w, s| {
            let pos = w.len();
            if pos < ell {
                return s == 0;
            }
            if pos == ell || pos == n - 1 {
                return s != 0;
            }
            s != 0 || trailing_zeros(w) + 1 < ell
        },
        |_| true,
    )?;
    let mut code = Code::from_sorted(
        alphabet,
        n,
        to_seqs(alphabet, words),
        Provenance::new("levenshtein-mu")
            .with("q", alphabet.q())
            .with("n", n)
            .with("l", ell),
    );
    code.certify_by(Property::Mu, "levenshtein-mu");
    Ok(code)
}

fn trailing_zeros(w: &[u8]) -> usize {
    w.iter().rev().take_while(|&&s| s == 0).count()
}

/// Number of `q`-ary strings of length `len` with no run of `limit` zeros.
pub(crate) fn count_run_limited(q: u128, len: usize, limit: usize) -> u128 {
    if limit == 0 {
        return 0;
    }
    // ways[r] = strings ending in exactly r zeros
    let mut ways = vec![0u128; limit];
    ways[0] = 1;
    for _ in 0..len {
        let total: u128 = ways.iter().fold(0u128, |a, &b| a.saturating_add(b));
        let mut next = vec![0u128; limit];
        next[0] = total.saturating_mul(q - 1);
        for r in 1..limit {
            next[r] = ways[r - 1];
        }
        ways = next;
    }
    ways.iter().fold(0u128, |a, &b| a.saturating_add(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimalSplit {
    pub ell: usize,
    pub t: usize,
    pub component_length: usize,
}

/// The split `n = (t+1)ℓ + 1` maximizing the component length `t(ℓ−1)`
/// of the parsing construction.
pub fn optimal_split(n: usize) -> Result<OptimalSplit> {
    let mut best: Option<OptimalSplit> = None;
    if n >= 2 {
        for ell in 2..n {
            if !(n - 1).is_multiple_of(ell) || (n - 1) / ell < 2 {
                continue;
            }
            let t = (n - 1) / ell - 1;
            let len = t * (ell - 1);
            if best.is_none_or(|b| len > b.component_length) {
                best = Some(OptimalSplit {
                    ell,
                    t,
                    component_length: len,
                });
            }
        }
    }
    best.ok_or_else(|| invalid(format!("no split (t+1)ℓ+1 = {n} with ℓ ≥ 2, t ≥ 1")))
}

/// `{a·b : a ∈ core, b ∈ tail}` for an MU core of length n−κ+1 and a tail
/// of length κ−1, which defaults to all of `F_q^{κ−1}`. κ-WMU.
pub fn wmu_concat(core: &Code, kappa: usize, tail: Option<&Code>, budget: Budget) -> Result<Code> {
    if kappa == 0 {
        return Err(invalid("κ must be at least 1"));
    }
    if !core.profile().mu() {
        return Err(Error::MissingCertificate("the core code is not certified MU".into()));
    }
    let alphabet = core.alphabet();
    let n = core.length() + kappa - 1;
    let prov = Provenance::new("wmu-concat").with("n", n).with("kappa", kappa);
    if kappa == 1 {
        if tail.is_some() {
            return Err(invalid("κ = 1 leaves no room for a tail"));
        }
        let mut code = Code::from_sorted(alphabet, n, core.members().to_vec(), prov);
        code.certify_by(Property::Mu, "wmu-concat");
        return Ok(code);
    }
    let default_tail;
    let tail = match tail {
        Some(t) => {
            if t.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch {
                    expected: alphabet.q(),
                    found: t.q(),
                });
            }
            if t.length() != kappa - 1 {
                return Err(Error::LengthMismatch {
                    expected: kappa - 1,
                    found: t.length(),
                });
            }
            t.members()
        }
        None => {
            budget.check(pow(alphabet.q() as u128, kappa - 1))?;
            default_tail = to_seqs(alphabet, all_words(alphabet, kappa - 1, budget)?);
            &default_tail[..]
        }
    };
    budget.check(product(&[core.len(), tail.len()]))?;
    let members = concat_product(&[core.members(), tail], alphabet);
    let mut code = Code::from_sorted(alphabet, n, members, prov);
    code.certify_by(Property::Wmu(kappa), "wmu-concat");
    Ok(code)
}

/// MU and f-APD binary code of length `p·f`: one block from `C1` followed
/// by `2p − 1` blocks from `C2`, all of length `f/2`.
pub fn apd_mu2(f: usize, p: usize, ell: usize, budget: Budget) -> Result<Code> {
    if f % 2 == 1 || f == 0 {
        return Err(invalid(format!("window f = {f} must be even and positive")));
    }
    if p == 0 || ell == 0 {
        return Err(invalid("p and ℓ must be positive"));
    }
    let h = f / 2;
    if ell + 3 > h {
        return Err(invalid(format!("need ℓ + 3 ≤ f/2, got ℓ = {ell}, f = {f}")));
    }
    let (c1, c2) = apd_components(h, ell, budget)?;
    let n = p * f;
    let blocks = 2 * p;
    let mut sizes = vec![c2.len(); blocks];
    sizes[0] = c1.len();
    budget.check(product(&sizes))?;
    let mut parts: Vec<&[Seq]> = vec![&c2; blocks];
    parts[0] = &c1;
    let members = concat_product(&parts, Alphabet::Binary);
    let mut code = Code::from_sorted(
        Alphabet::Binary,
        n,
        members,
        Provenance::new("apd-mu2")
            .with("f", f)
            .with("p", p)
            .with("l", ell),
    );
    code.certify_by(Property::Mu, "apd-mu2");
    code.certify_by(Property::Apd(f), "apd-mu2");
    Ok(code)
}

/// The two block codes of [`apd_mu2`], each of length `h = f/2`.
pub(crate) fn apd_components(h: usize, ell: usize, budget: Budget) -> Result<(Vec<Seq>, Vec<Seq>)> {
    let words = all_words(Alphabet::Binary, h, budget)?;
    let marker: Vec<u8> = std::iter::once(0)
        .chain(std::iter::repeat_n(1, ell))
        .chain(std::iter::once(0))
        .collect();
    let first = words
        .iter()
        .filter(|w| {
            w[..ell].iter().all(|&b| b == 0)
                && w[ell] == 1
                && w[h - 1] == 1
                && max_zero_run(&w[ell..]) < ell
        })
        .cloned()
        .collect();
    let rest = words
        .iter()
        .filter(|w| w[h - 1] == 1 && contains_window(w, &marker) && max_zero_run(w) < ell)
        .cloned()
        .collect();
    Ok((to_seqs(Alphabet::Binary, first), to_seqs(Alphabet::Binary, rest)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{catalan, is_balanced_code, is_f_apd, is_kappa_wmu, is_mu_code};

    fn strs(code: &Code) -> Vec<String> {
        code.members().iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn dyck_sizes_and_examples() {
        assert_eq!(strs(&dyck_mu(4, None, Budget::DEFAULT).unwrap()), vec!["1100"]);
        for n in [4usize, 6, 8, 10, 12] {
            let c = dyck_mu(n, None, Budget::DEFAULT).unwrap();
            assert_eq!(c.len() as u128, catalan((n - 2) / 2));
            assert!(is_mu_code(&c).passed);
            assert!(is_balanced_code(&c).unwrap().passed);
        }
        let c = dyck_mu(6, Some(1), Budget::DEFAULT).unwrap();
        assert_eq!(strs(&c), vec!["110100"]);
        assert!(dyck_mu(7, None, Budget::DEFAULT).is_err());
        assert!(dyck_mu(2, None, Budget::DEFAULT).is_err());
        assert!(dyck_mu(6, Some(0), Budget::DEFAULT).is_err());
    }

    #[test]
    fn levenshtein_examples() {
        let c = levenshtein_mu(Alphabet::Binary, 5, 2, Budget::DEFAULT).unwrap();
        assert_eq!(strs(&c), vec!["00101", "00111"]);
        let c = levenshtein_mu(Alphabet::Binary, 3, 1, Budget::DEFAULT).unwrap();
        assert_eq!(strs(&c), vec!["011"]);
        let c = levenshtein_mu(Alphabet::Quaternary, 3, 1, Budget::DEFAULT).unwrap();
        assert_eq!(c.len(), 9);
        assert!(levenshtein_mu(Alphabet::Binary, 4, 4, Budget::DEFAULT).is_err());
    }

    #[test]
    fn levenshtein_count_matches_enumeration() {
        for alphabet in [Alphabet::Binary, Alphabet::Quaternary] {
            for n in 2..=7 {
                for ell in 1..n {
                    let c = levenshtein_mu(alphabet, n, ell, Budget::DEFAULT).unwrap();
                    assert!(is_mu_code(&c).passed, "q={} n={n} l={ell}", alphabet.q());
                    // brute force over the whole space
                    let q = alphabet.q() as usize;
                    let brute = (0..q.pow(n as u32))
                        .filter(|&v| {
                            let mut w = vec![0u8; n];
                            let mut x = v;
                            for s in w.iter_mut().rev() {
                                *s = (x % q) as u8;
                                x /= q;
                            }
                            w[..ell].iter().all(|&s| s == 0)
                                && w[ell] != 0
                                && w[n - 1] != 0
                                && (n < ell + 3 || max_zero_run(&w[ell + 1..n - 1]) < ell)
                        })
                        .count();
                    assert_eq!(c.len(), brute);
                }
            }
        }
    }

    #[test]
    fn split_helper() {
        assert_eq!(
            optimal_split(10).unwrap(),
            OptimalSplit {
                ell: 3,
                t: 2,
                component_length: 4
            }
        );
        assert!(optimal_split(4).is_err());
    }

    #[test]
    fn wmu_concat_examples() {
        let core = levenshtein_mu(Alphabet::Binary, 5, 2, Budget::DEFAULT).unwrap();
        let one = wmu_concat(&core, 1, None, Budget::DEFAULT).unwrap();
        assert_eq!(one.members(), core.members());
        let c = wmu_concat(&core, 2, None, Budget::DEFAULT).unwrap();
        assert_eq!((c.len(), c.length()), (4, 6));
        assert!(is_kappa_wmu(&c, 2).passed);
        let q4 = levenshtein_mu(Alphabet::Quaternary, 3, 1, Budget::DEFAULT).unwrap();
        let c = wmu_concat(&q4, 3, None, Budget::DEFAULT).unwrap();
        assert_eq!(c.len(), 144);
        assert!(is_kappa_wmu(&c, 3).passed);
        assert!(wmu_concat(&core, 0, None, Budget::DEFAULT).is_err());
        let plain = Code::from_members(core.members().to_vec()).unwrap();
        assert!(matches!(
            wmu_concat(&plain, 2, None, Budget::DEFAULT),
            Err(Error::MissingCertificate(_))
        ));
    }

    #[test]
    fn apd_example() {
        let (c1, c2) = apd_components(6, 3, Budget::DEFAULT).unwrap();
        let s1: Vec<String> = c1.iter().map(|s| s.to_string()).collect();
        let s2: Vec<String> = c2.iter().map(|s| s.to_string()).collect();
        assert_eq!(s1, vec!["000101", "000111"]);
        assert_eq!(s2, vec!["011101"]);
        let c = apd_mu2(12, 1, 3, Budget::DEFAULT).unwrap();
        assert_eq!(strs(&c), vec!["000101011101", "000111011101"]);
        assert!(is_mu_code(&c).passed);
        assert!(is_f_apd(&c, 12).unwrap().passed);
        assert!(apd_mu2(16, 1, 6, Budget::DEFAULT).is_err());
    }

    #[test]
    fn run_limited_counts() {
        // strings of length 4 without 00
        assert_eq!(count_run_limited(2, 4, 2), 8);
        assert_eq!(count_run_limited(2, 18, 2), 6765);
        assert_eq!(count_run_limited(4, 0, 1), 1);
    }
}
