use super::{concat_product, product};
use crate::code::{Budget, Code, Provenance};
use crate::error::{invalid, Result};
use crate::profile::Property;
use crate::seq::Seq;

/// `{a_1 ⋯ a_m : a_i ∈ schedule[i]}` for subsets of a seed code `c0`.
///
/// The schedule must satisfy, for every `1 ≤ i ≤ m − 1`, that some
/// `1 ≤ j ≤ i` has `C_j ∩ C_{m−i+j} = ∅`, so no `i` leading blocks of one
/// word can equal `i` trailing blocks of another.
pub fn concat_seed(c0: &Code, schedule: &[Vec<Seq>], budget: Budget) -> Result<Code> {
    let m = schedule.len();
    if m < 2 {
        return Err(invalid(format!("schedule needs at least 2 subsets, got {m}")));
    }
    let mut parts: Vec<Vec<Seq>> = Vec::with_capacity(m);
    for (i, subset) in schedule.iter().enumerate() {
        if subset.is_empty() {
            return Err(invalid(format!("subset C_{} is empty", i + 1)));
        }
        if let Some(bad) = subset.iter().find(|s| !c0.contains(s)) {
            return Err(invalid(format!("subset C_{} contains {bad}, not in the seed", i + 1)));
        }
        let mut p = subset.clone();
        p.sort();
        p.dedup();
        parts.push(p);
    }
    let disjoint = |a: usize, b: usize| parts[a].iter().all(|s| parts[b].binary_search(s).is_err());
    for i in 1..m {
        if !(1..=i).any(|j| disjoint(j - 1, m - i + j - 1)) {
            let pairs: Vec<String> = (1..=i)
                .map(|j| format!("C_{j} ∩ C_{}", m - i + j))
                .collect();
            return Err(invalid(format!(
                "schedule overlap clause {i} fails: none of {} is empty",
                pairs.join(", ")
            )));
        }
    }
    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    budget.check(product(&sizes))?;
    let refs: Vec<&[Seq]> = parts.iter().map(|p| &p[..]).collect();
    let mut members = concat_product(&refs, c0.alphabet());
    members.sort();
    let s = c0.length();
    let n = s * m;
    let mut code = Code::from_sorted(
        c0.alphabet(),
        n,
        members,
        Provenance::new("concat-seed").with("s", s).with("m", m),
    );
    let lemma = "concat-seed";
    let p = c0.profile();
    if p.balanced() {
        code.certify_by(Property::Balanced, lemma);
    }
    if let Some(d) = p.min_distance() {
        code.certify_by(Property::MinDistance(d), lemma);
    }
    // an unaligned overlap of length ≥ κ covers a full block boundary only
    // when blocks are long enough
    if let Some(k) = p.wmu() {
        if s + 1 >= 2 * k {
            code.certify_by(if k == 1 { Property::Mu } else { Property::Wmu(k) }, lemma);
        }
    }
    if let Some(f) = p.apd() {
        if 2 * f == n {
            code.certify_by(Property::Apd(2 * f), lemma);
        }
    }
    Ok(code)
}

/// A valid schedule of `m` subsets: `C_1` is the first half of `c0`, the
/// rest are the second half.
pub fn auto_schedule(c0: &Code, m: usize) -> Result<Vec<Vec<Seq>>> {
    if m < 2 {
        return Err(invalid(format!("schedule needs at least 2 subsets, got {m}")));
    }
    if c0.len() < 2 {
        return Err(invalid("the seed needs at least two members"));
    }
    let (first, second) = c0.members().split_at(c0.len() / 2);
    let mut schedule = vec![first.to_vec()];
    schedule.extend(std::iter::repeat_n(second.to_vec(), m - 1));
    Ok(schedule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CyclicCode;
    use crate::constructions::{apd_mu2, balanced_binary_code, cyclic_coset_wmu, dyck_mu};
    use crate::verify::recheck_profile;

    fn all_pass(code: &Code) {
        for r in recheck_profile(code).unwrap() {
            assert!(r.passed, "{} {r}", code.provenance());
        }
    }

    #[test]
    fn two_block_example() {
        let c0 = cyclic_coset_wmu(&CyclicCode::repetition(3).unwrap(), Budget::DEFAULT).unwrap();
        let a = Seq::parse("100").unwrap();
        let b = Seq::parse("011").unwrap();
        let c = concat_seed(&c0, &[vec![a.clone()], vec![b.clone()]], Budget::DEFAULT).unwrap();
        assert_eq!(c.members().len(), 1);
        assert_eq!(c.members()[0].to_string(), "100011");
        assert_eq!(c.profile().min_distance(), Some(3));
        all_pass(&c);
        let err = concat_seed(&c0, &[vec![a.clone()], vec![a]], Budget::DEFAULT).unwrap_err();
        assert!(err.to_string().contains("clause 1"), "{err}");
    }

    #[test]
    fn schedule_validation() {
        let c0 = balanced_binary_code(4, Budget::DEFAULT).unwrap();
        let all = c0.members().to_vec();
        let x = vec![all[0].clone()];
        let y = vec![all[1].clone()];
        // C1∩C3 = ∅ but clause 2 needs C1∩C2 = ∅ or C2∩C3 = ∅
        let err = concat_seed(&c0, &[x.clone(), all.clone(), y.clone()], Budget::DEFAULT).unwrap_err();
        assert!(err.to_string().contains("clause 2"), "{err}");
        assert!(concat_seed(&c0, &[x.clone(), y.clone(), y], Budget::DEFAULT).is_ok());
        assert!(concat_seed(&c0, &[x], Budget::DEFAULT).is_err());
        assert!(concat_seed(&c0, &[vec![], all.clone()], Budget::DEFAULT).is_err());
        let stranger = vec![Seq::parse("0000").unwrap()];
        assert!(concat_seed(&c0, &[stranger, all], Budget::DEFAULT).is_err());
    }

    #[test]
    fn auto_schedule_is_valid() {
        let c0 = dyck_mu(8, None, Budget::DEFAULT).unwrap();
        for m in 2..=4 {
            let s = auto_schedule(&c0, m).unwrap();
            let c = concat_seed(&c0, &s, Budget::DEFAULT).unwrap();
            assert!(c.profile().mu());
            all_pass(&c);
        }
    }

    #[test]
    fn apd_doubles_on_two_blocks() {
        let c0 = apd_mu2(12, 1, 3, Budget::DEFAULT).unwrap();
        let s = auto_schedule(&c0, 2).unwrap();
        let c = concat_seed(&c0, &s, Budget::DEFAULT).unwrap();
        assert_eq!(c.profile().apd(), Some(24));
        all_pass(&c);
    }
}
