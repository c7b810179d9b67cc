use super::mu::count_run_limited;
use super::{alphabet_of_field, enumerate};
use crate::algebra::{CyclicCode, LinearCode};
use crate::code::{Budget, Code, Provenance};
use crate::error::{invalid, Error, Result};
use crate::profile::Property;
use crate::seq::{Alphabet, Seq};

fn sorted_code(alphabet: Alphabet, n: usize, mut words: Vec<Vec<u8>>, prov: Provenance) -> Code {
    words.sort();
    let members = words.into_iter().map(|w| Seq::from_raw(alphabet, w)).collect();
    Code::from_sorted(alphabet, n, members, prov)
}

fn require_f2(code: &LinearCode, what: &str) -> Result<()> {
    if code.field().t() != 1 {
        return Err(invalid(format!("{what} must be a binary code")));
    }
    Ok(())
}

// Distance of a code with at least one nonzero codeword; `None` when k = 0.
fn distance_of(code: &LinearCode) -> Result<Option<usize>> {
    match code.min_distance_exhaustive() {
        Ok(d) => Ok(Some(d)),
        Err(Error::DistanceUndefined) => Ok(None),
        Err(e) => Err(e),
    }
}

/// MU code from a binary linear code of length `t(ℓ−1)`: the marker `0^ℓ1`
/// followed by `t` blocks of `ℓ−1` code bits, each closed by a one.
/// Keeps the size and minimum distance of the component.
pub fn parsing_ecc_mu(component: &LinearCode, ell: usize, t: usize, budget: Budget) -> Result<Code> {
    require_f2(component, "the component")?;
    if ell < 2 || t < 1 {
        return Err(invalid(format!("need ℓ ≥ 2 and t ≥ 1, got ℓ = {ell}, t = {t}")));
    }
    if component.n() != t * (ell - 1) {
        return Err(Error::LengthMismatch {
            expected: t * (ell - 1),
            found: component.n(),
        });
    }
    let n = (t + 1) * ell + 1;
    let words: Vec<Vec<u8>> = component
        .codewords(budget)?
        .into_iter()
        .map(|b| {
            let mut w = vec![0u8; ell];
            w.push(1);
            for block in b.chunks(ell - 1) {
                w.extend(block.iter().map(|&x| x as u8));
                w.push(1);
            }
            w
        })
        .collect();
    let d = distance_of(component)?;
    let mut code = sorted_code(
        Alphabet::Binary,
        n,
        words,
        Provenance::new("parsing-ecc-mu").with("l", ell).with("t", t),
    );
    code.certify_by(Property::Mu, "parsing-ecc-mu");
    if let Some(d) = d {
        code.certify_by(Property::MinDistance(d), "parsing-ecc-mu");
    }
    Ok(code)
}

/// Coset `{c + (1,0,…,0) : c ∈ base}` of a cyclic `[n, k, d]` code over F2
/// or F4; a (k+1)-WMU code with distance `d`.
pub fn cyclic_coset_wmu(base: &CyclicCode, budget: Budget) -> Result<Code> {
    let alphabet = alphabet_of_field(base.field())?;
    if base.k() == 0 {
        return Err(invalid("the base code must have dimension at least 1"));
    }
    let words: Vec<Vec<u8>> = base
        .codewords(budget)?
        .into_iter()
        .map(|c| {
            let mut w: Vec<u8> = c.iter().map(|&x| x as u8).collect();
            w[0] ^= 1;
            w
        })
        .collect();
    let kappa = base.k() + 1;
    let d = distance_of(&LinearCode::from_cyclic(base))?;
    let mut code = sorted_code(
        alphabet,
        base.n(),
        words,
        Provenance::new("cyclic-coset-wmu")
            .with("n", base.n())
            .with("g", base.generator()),
    );
    code.certify_by(Property::Wmu(kappa), "cyclic-coset-wmu");
    if let Some(d) = d {
        code.certify_by(Property::MinDistance(d), "cyclic-coset-wmu");
    }
    Ok(code)
}

/// MU code carrying a systematic binary `[n′, κ]` code: `0^ℓ 1`, then the
/// message split into `n′ − κ` blocks each followed by one parity bit, then
/// a closing one. Messages have no run of `ℓ − 1` zeros. The default marker
/// length is `⌈log₂ 4n′⌉`.
pub fn interleaved_ecc_mu(encoder: &LinearCode, ell: Option<usize>, budget: Budget) -> Result<Code> {
    require_f2(encoder, "the encoder")?;
    if !encoder.is_systematic() {
        return Err(invalid("the encoder must be systematic"));
    }
    let (n_prime, kappa) = (encoder.n(), encoder.k());
    if kappa == 0 {
        return Err(invalid("the encoder must have dimension at least 1"));
    }
    let ell = ell.unwrap_or_else(|| ceil_log2(4 * n_prime));
    if ell < 2 {
        return Err(invalid(format!("marker length ℓ = {ell} must be at least 2")));
    }
    let r = n_prime - kappa;
    // block lengths of the message
    let blocks: Vec<usize> = if r == 0 {
        vec![kappa]
    } else {
        let p = kappa.div_ceil(r);
        if p <= ell {
            return Err(invalid(format!(
                "block length p = {p} must exceed ℓ = {ell}"
            )));
        }
        let used = (r - 1) * p;
        if used >= kappa || kappa - used < (ell - 1).max(1) {
            return Err(invalid(format!(
                "last block would have length {} < max(1, ℓ − 1)",
                kappa.saturating_sub(used)
            )));
        }
        let mut b = vec![p; r - 1];
        b.push(kappa - used);
        b
    };
    budget.check(count_run_limited(2, kappa, ell - 1))?;
    let messages = enumerate(
        Alphabet::Binary,
        kappa,
        budget,
        |w, s| s == 1 || w.iter().rev().take_while(|&&b| b == 0).count() + 2 < ell,
        |_| true,
    )?;
    let n = n_prime + ell + 2;
    let mut words = Vec::with_capacity(messages.len());
    for u in messages {
        let msg: Vec<u16> = u.iter().map(|&b| b as u16).collect();
        let parity = if r == 0 {
            Vec::new()
        } else {
            encoder.parity_of(&msg)?
        };
        let mut w = vec![0u8; ell];
        w.push(1);
        let mut start = 0;
        for (i, &len) in blocks.iter().enumerate() {
            w.extend_from_slice(&u[start..start + len]);
            start += len;
            if let Some(&bit) = parity.get(i) {
                w.push(bit as u8);
            }
        }
        w.push(1);
        debug_assert_eq!(w.len(), n);
        words.push(w);
    }
    let d = distance_of(encoder)?;
    let mut code = sorted_code(
        Alphabet::Binary,
        n,
        words,
        Provenance::new("interleaved-ecc-mu")
            .with("n'", n_prime)
            .with("k", kappa)
            .with("l", ell),
    );
    code.certify_by(Property::Mu, "interleaved-ecc-mu");
    if let Some(d) = d {
        code.certify_by(Property::MinDistance(d), "interleaved-ecc-mu");
    }
    Ok(code)
}

pub(crate) fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// Balanced quaternary code `{(c + e, c + 1 + e) : c ∈ base}` from an F4
/// cyclic code of length `n/2` that contains the all-ones word. Distance is
/// twice the base distance.
///
/// Only WMU with κ = n/2 + 1 (or n/2 + k + 1 for short halves) is
/// certified; two members `(x, x+1)` and `(x+1, x)` overlap in `n/2`
/// positions whenever both halves lie in the coset.
pub fn v1_bal_ecc_wmu4(base: &CyclicCode, budget: Budget) -> Result<Code> {
    if base.field().t() != 2 {
        return Err(invalid("the base code must be over F4"));
    }
    if !base.contains_all_ones() {
        return Err(invalid("the base code must contain the all-ones word"));
    }
    let h = base.n();
    let kappa = base.k() + 1;
    let words: Vec<Vec<u8>> = base
        .codewords(budget)?
        .into_iter()
        .map(|c| {
            let mut left: Vec<u8> = c.iter().map(|&x| x as u8).collect();
            left[0] ^= 1;
            let right: Vec<u8> = left.iter().map(|&x| x ^ 1).collect();
            left.extend(right);
            left
        })
        .collect();
    let d = distance_of(&LinearCode::from_cyclic(base))?;
    let mut code = sorted_code(
        Alphabet::Quaternary,
        2 * h,
        words,
        Provenance::new("v1-bal-ecc-wmu4")
            .with("n", 2 * h)
            .with("g", base.generator()),
    );
    code.certify_by(Property::Balanced, "v1-bal-ecc-wmu4");
    if let Some(d) = d {
        code.certify_by(Property::MinDistance(2 * d), "v1-bal-ecc-wmu4");
    }
    let wmu = if h + 1 >= 2 * kappa { h + 1 } else { h + kappa };
    code.certify_by(Property::Wmu(wmu), "v1-bal-ecc-wmu4");
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{f2, f4, Matrix, Polynomial};
    use crate::verify::{is_balanced_code, is_kappa_wmu, is_mu_code, min_hamming_distance, recheck_profile};

    fn strs(code: &Code) -> Vec<String> {
        code.members().iter().map(|m| m.to_string()).collect()
    }

    fn all_pass(code: &Code) {
        for r in recheck_profile(code).unwrap() {
            assert!(r.passed, "{} {r}", code.provenance());
        }
    }

    #[test]
    fn parsing_examples() {
        let rep = LinearCode::from_cyclic(&CyclicCode::repetition(3).unwrap());
        let c = parsing_ecc_mu(&rep, 2, 3, Budget::DEFAULT).unwrap();
        assert_eq!(strs(&c), vec!["001010101", "001111111"]);
        assert_eq!(c.profile().min_distance(), Some(3));
        all_pass(&c);
        let h = CyclicCode::hamming_7_4().systematic_form().unwrap();
        assert!(parsing_ecc_mu(&h, 3, 3, Budget::DEFAULT).is_err());
        let h = LinearCode::shortened_hamming(3, 1).unwrap();
        let c = parsing_ecc_mu(&h, 3, 2, Budget::DEFAULT).unwrap();
        assert_eq!((c.len(), c.length()), (2, 10));
        all_pass(&c);
    }

    #[test]
    fn coset_examples() {
        let c = cyclic_coset_wmu(&CyclicCode::repetition(3).unwrap(), Budget::DEFAULT).unwrap();
        assert_eq!(strs(&c), vec!["011", "100"]);
        assert_eq!(c.profile().wmu(), Some(2));
        assert_eq!(c.profile().min_distance(), Some(3));
        all_pass(&c);
        let c = cyclic_coset_wmu(&CyclicCode::f4_repetition_3(), Budget::DEFAULT).unwrap();
        assert_eq!(c.len(), 4);
        for m in c.members() {
            let s = m.symbols();
            assert_eq!((s[0] ^ 1, s[1]), (s[1], s[2]));
        }
        all_pass(&c);
        let full = CyclicCode::new(3, Polynomial::one(f2())).unwrap();
        let c = cyclic_coset_wmu(&full, Budget::DEFAULT).unwrap();
        assert_eq!(c.len(), 8);
        let h = CyclicCode::hamming_7_4();
        all_pass(&cyclic_coset_wmu(&h, Budget::DEFAULT).unwrap());
    }

    #[test]
    fn interleaved_identity_is_degenerate() {
        let id = LinearCode::systematic(Matrix::zeros(f2(), 6, 0)).unwrap();
        let c = interleaved_ecc_mu(&id, Some(2), Budget::DEFAULT).unwrap();
        assert_eq!(strs(&c), vec!["0011111111"]);
        let c = interleaved_ecc_mu(&id, Some(3), Budget::DEFAULT).unwrap();
        assert_eq!(c.length(), 11);
        // messages of length 6 without 00
        assert_eq!(c.len(), 21);
        assert!(is_mu_code(&c).passed);
    }

    #[test]
    fn interleaved_hamming() {
        let h = LinearCode::shortened_hamming(5, 18).unwrap();
        let c = interleaved_ecc_mu(&h, Some(3), Budget::DEFAULT).unwrap();
        assert_eq!((c.len(), c.length()), (6765, 28));
        assert_eq!(c.profile().min_distance(), Some(3));
        for m in c.members() {
            assert!(m.symbols()[4..].windows(3).all(|w| w != [0, 0, 0]));
        }
        all_pass(&c);
        // default ℓ = ⌈log₂ 92⌉ = 7 > p = 4
        assert!(interleaved_ecc_mu(&h, None, Budget::DEFAULT).is_err());
        let h74 = CyclicCode::hamming_7_4().systematic_form().unwrap();
        assert!(interleaved_ecc_mu(&h74, Some(2), Budget::DEFAULT).is_err());
    }

    #[test]
    fn log2_helper() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(ceil_log2(9), 4);
        assert_eq!(ceil_log2(92), 7);
    }

    #[test]
    fn v1_example() {
        let c = v1_bal_ecc_wmu4(&CyclicCode::f4_repetition_3(), Budget::DEFAULT).unwrap();
        assert_eq!(c.len(), 4);
        assert!(strs(&c).contains(&"CAAACC".to_string()));
        assert_eq!(min_hamming_distance(&c).unwrap(), 6);
        assert!(is_balanced_code(&c).unwrap().passed);
        all_pass(&c);
        assert_eq!(c.profile().wmu(), Some(4));
    }

    #[test]
    fn v1_is_not_kappa_wmu_at_base_kappa() {
        let c = v1_bal_ecc_wmu4(&CyclicCode::f4_repetition_3(), Budget::DEFAULT).unwrap();
        let r = is_kappa_wmu(&c, 2);
        assert!(!r.passed);
        let cx = r.counterexample.unwrap();
        assert!(cx.replay());
        // (1,0,0,0,1,1) and (0,1,1,1,0,0) share a length-3 overlap
        let a = Seq::parse_with(Alphabet::Quaternary, "CAAACC").unwrap();
        let b = Seq::parse_with(Alphabet::Quaternary, "ACCCAA").unwrap();
        assert!(is_kappa_wmu(&[a.clone(), b.clone()], 4).passed);
        assert!(!is_kappa_wmu(&[a, b], 3).passed);
    }

    #[test]
    fn v1_rejects_bad_base() {
        assert!(v1_bal_ecc_wmu4(&CyclicCode::repetition(3).unwrap(), Budget::DEFAULT).is_err());
        let no_ones = CyclicCode::new(3, Polynomial::new(f4(), vec![1, 1]).unwrap()).unwrap();
        assert!(v1_bal_ecc_wmu4(&no_ones, Budget::DEFAULT).is_err());
    }
}
