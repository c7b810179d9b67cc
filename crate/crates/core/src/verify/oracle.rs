//! Exact maximum code size by maximum-clique search.
//!
//! Vertices are the words of `F_q^n` that are compatible with themselves,
//! edges join pairs that are compatible in both directions. The search
//! branches on vertices in lexicographic order, includes before it
//! excludes, and replaces the incumbent only on strict improvement, so the
//! witness is the lexicographically least optimum.

use crate::code::{Code, Provenance};
use crate::error::{invalid, Error, Result};
use crate::seq::{hamming, Alphabet, Seq};

pub const ORACLE_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConstraints {
    /// Prefix lengths `≥ kappa` are forbidden to overlap; 1 means MU.
    pub kappa: usize,
    pub balanced: bool,
    pub min_distance: Option<usize>,
    pub apd: Option<usize>,
}

impl OracleConstraints {
    pub fn mu() -> Self {
        OracleConstraints::wmu(1)
    }

    pub fn wmu(kappa: usize) -> Self {
        OracleConstraints {
            kappa,
            balanced: false,
            min_distance: None,
            apd: None,
        }
    }

    pub fn balanced(mut self) -> Self {
        self.balanced = true;
        self
    }

    pub fn with_distance(mut self, d: usize) -> Self {
        self.min_distance = Some(d);
        self
    }

    pub fn with_apd(mut self, f: usize) -> Self {
        self.apd = Some(f);
        self
    }
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub size: usize,
    pub witness: Code,
    /// Number of self-compatible words.
    pub vertices: usize,
}

pub fn oracle_max_code_size(
    alphabet: Alphabet,
    n: usize,
    constraints: OracleConstraints,
) -> Result<OracleResult> {
    let q = alphabet.q() as usize;
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let total = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > ORACLE_LIMIT as u128 {
        return Err(Error::BudgetExceeded {
            required: format!("{total} words"),
            budget: ORACLE_LIMIT,
        });
    }
    if constraints.kappa == 0 {
        return Err(invalid("κ must be at least 1"));
    }
    if constraints.balanced && n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if let Some(f) = constraints.apd {
        if f == 0 || f > n {
            return Err(invalid(format!("APD window f = {f} must be in 1..={n}")));
        }
    }

    let words: Vec<Vec<u8>> = (0..total as usize)
        .map(|mut v| {
            let mut w = vec![0u8; n];
            for slot in w.iter_mut().rev() {
                *slot = (v % q) as u8;
                v /= q;
            }
            w
        })
        .filter(|w| !constraints.balanced || 2 * w.iter().filter(|&&s| s & 1 == 1).count() == n)
        .filter(|w| compatible(alphabet, w, w, &constraints))
        .collect();

    let size = words.len();
    let adjacency: Vec<Bitset> = (0..size)
        .map(|i| {
            let mut b = Bitset::new(size);
            for j in 0..size {
                if i != j
                    && compatible(alphabet, &words[i], &words[j], &constraints)
                    && compatible(alphabet, &words[j], &words[i], &constraints)
                    && constraints
                        .min_distance
                        .is_none_or(|d| hamming(&words[i], &words[j]) >= d)
                {
                    b.insert(j);
                }
            }
            b
        })
        .collect();

    let mut search = Search {
        adjacency: &adjacency,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.best = greedy(&adjacency, size);
    let mut all = Bitset::new(size);
    for v in 0..size {
        all.insert(v);
    }
    search.expand(all);

    let members: Vec<Seq> = search
        .best
        .iter()
        .map(|&v| Seq::from_raw(alphabet, words[v].clone()))
        .collect();
    let witness = Code::from_sorted(
        alphabet,
        n,
        members,
        Provenance::new("oracle")
            .with("q", q)
            .with("n", n)
            .with("kappa", constraints.kappa),
    );
    Ok(OracleResult {
        size: search.best.len(),
        witness,
        vertices: size,
    })
}

// One direction: prefixes of `a` against suffixes of `b`, complement windows
// of `a` against windows of `b`.
fn compatible(alphabet: Alphabet, a: &[u8], b: &[u8], c: &OracleConstraints) -> bool {
    let n = a.len();
    for l in c.kappa..n {
        if a[..l] == b[n - l..] {
            return false;
        }
    }
    if let Some(f) = c.apd {
        let comp: Vec<u8> = a.iter().map(|&s| alphabet.complement_symbol(s)).collect();
        for cw in comp.windows(f) {
            for bw in b.windows(f) {
                if cw == bw || cw.iter().eq(bw.iter().rev()) {
                    return false;
                }
            }
        }
    }
    true
}

fn greedy(adjacency: &[Bitset], size: usize) -> Vec<usize> {
    let mut clique: Vec<usize> = Vec::new();
    for v in 0..size {
        if clique.iter().all(|&u| adjacency[u].contains(v)) {
            clique.push(v);
        }
    }
    clique
}

struct Search<'a> {
    adjacency: &'a [Bitset],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: Bitset) {
        if candidates.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + self.color_bound(&candidates) <= self.best.len() {
            return;
        }
        while let Some(v) = candidates.first() {
            if self.current.len() + candidates.count() <= self.best.len() {
                return;
            }
            candidates.remove(v);
            let next = candidates.and(&self.adjacency[v]);
            self.current.push(v);
            self.expand(next);
            self.current.pop();
        }
    }

    /// Number of colors used by a greedy coloring, an upper bound on the
    /// largest clique inside `candidates`.
    fn color_bound(&self, candidates: &Bitset) -> usize {
        let mut uncolored = candidates.clone();
        let mut colors = 0;
        while !uncolored.is_empty() {
            colors += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.first() {
                class.remove(v);
                uncolored.remove(v);
                class.and_not_assign(&self.adjacency[v]);
            }
        }
        colors
    }
}

#[derive(Clone, Debug)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(size: usize) -> Bitset {
        Bitset(vec![0; size.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bitset) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_balanced_code, is_f_apd, is_kappa_wmu, min_hamming_distance};

    // Independent oracle: try every subset of the self-compatible words.
    fn brute_force(alphabet: Alphabet, n: usize, c: OracleConstraints) -> usize {
        let q = alphabet.q() as usize;
        let words: Vec<Seq> = (0..q.pow(n as u32))
            .map(|mut v| {
                let mut w = vec![0u8; n];
                for slot in w.iter_mut().rev() {
                    *slot = (v % q) as u8;
                    v /= q;
                }
                Seq::from_raw(alphabet, w)
            })
            .collect();
        let mut best = 0;
        for mask in 1u64..(1 << words.len()) {
            if mask.count_ones() as usize <= best {
                continue;
            }
            let subset: Vec<Seq> = (0..words.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| words[i].clone())
                .collect();
            let ok = is_kappa_wmu(&subset, c.kappa).passed
                && (!c.balanced || is_balanced_code(&subset).unwrap().passed)
                && c.apd.is_none_or(|f| is_f_apd(&subset, f).unwrap().passed)
                && c.min_distance.is_none_or(|d| {
                    subset.len() < 2 || min_hamming_distance(&subset).unwrap() >= d
                });
            if ok {
                best = mask.count_ones() as usize;
            }
        }
        best
    }

    #[test]
    fn matches_subset_enumeration() {
        for n in 2..=4 {
            for kappa in 1..=n {
                let c = OracleConstraints::wmu(kappa);
                let r = oracle_max_code_size(Alphabet::Binary, n, c).unwrap();
                assert_eq!(r.size, brute_force(Alphabet::Binary, n, c), "n={n} κ={kappa}");
                assert!(is_kappa_wmu(&r.witness, kappa).passed);
            }
        }
        let c = OracleConstraints::mu().with_distance(2);
        assert_eq!(
            oracle_max_code_size(Alphabet::Binary, 4, c).unwrap().size,
            brute_force(Alphabet::Binary, 4, c)
        );
        let c = OracleConstraints::wmu(2).balanced().with_apd(3);
        assert_eq!(
            oracle_max_code_size(Alphabet::Binary, 4, c).unwrap().size,
            brute_force(Alphabet::Binary, 4, c)
        );
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // no lexicographically smaller pair of 4-bit words is MU
        let r = oracle_max_code_size(Alphabet::Binary, 4, OracleConstraints::mu()).unwrap();
        let w = r.witness.members().to_vec();
        let all: Vec<Seq> = (0..16u8)
            .map(|v| Seq::from_raw(Alphabet::Binary, (0..4).rev().map(|i| v >> i & 1).collect()))
            .collect();
        for a in 0..16 {
            for b in a + 1..16 {
                let cand = vec![all[a].clone(), all[b].clone()];
                if cand < w && r.size == 2 {
                    assert!(!is_kappa_wmu(&cand, 1).passed, "{cand:?} beats {w:?}");
                }
            }
        }
    }

    #[test]
    fn vacuous_wmu_keeps_everything() {
        let r = oracle_max_code_size(Alphabet::Binary, 3, OracleConstraints::wmu(3)).unwrap();
        assert_eq!(r.size, 8);
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(
            oracle_max_code_size(Alphabet::Binary, 13, OracleConstraints::mu()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(oracle_max_code_size(Alphabet::Quaternary, 7, OracleConstraints::mu()).is_err());
    }
}
