use super::{avoids_addresses, field_for, AddressBook, InfoBlock, Membership, Scheme};
use crate::algebra::{gf, ReedSolomon};
use crate::code::{Code, Provenance};
use crate::error::{invalid, Error, Result};
use crate::seq::{psi_inverse, psi_symbols, Alphabet, Seq};

fn concat(alphabet: Alphabet, blocks: &[Seq]) -> Seq {
    Seq::from_raw(alphabet, blocks.iter().flat_map(|b| b.symbols().iter().copied()).collect())
}

fn split(payload: &Seq, n: usize) -> Result<Vec<Seq>> {
    if payload.is_empty() || !payload.len().is_multiple_of(n) {
        return Err(invalid(format!(
            "payload length {} is not a positive multiple of {n}",
            payload.len()
        )));
    }
    Ok(payload
        .symbols()
        .chunks(n)
        .map(|c| Seq::from_raw(payload.alphabet(), c.to_vec()))
        .collect())
}

fn verified(payload: Seq, book: &AddressBook, scheme: Scheme) -> Result<InfoBlock> {
    let report = avoids_addresses(&payload, book)?;
    if !report.passed {
        return Err(invalid(format!("encoder output contains an address: {report}")));
    }
    Ok(InfoBlock {
        payload,
        scheme,
        address_length: book.length(),
    })
}

// C must be κ-WMU with κ ≤ n/2 and contain every listed address.
fn check_wmu_source(code: &Code, book: &AddressBook) -> Result<()> {
    let n = code.length();
    let kappa = code
        .profile()
        .wmu()
        .ok_or_else(|| Error::MissingCertificate("the block code is not certified WMU".into()))?;
    if 2 * kappa > n {
        return Err(invalid(format!("need κ ≤ n/2, got κ = {kappa}, n = {n}")));
    }
    if book.length() != n || book.alphabet() != code.alphabet() {
        return Err(invalid("addresses and block code differ in length or alphabet"));
    }
    if !matches!(book.membership(), Membership::Explicit | Membership::Syndrome { .. }) {
        return Err(invalid("addresses must be a subset of the block code"));
    }
    if let Some(bad) = book.members().iter().find(|a| !code.contains(a)) {
        return Err(invalid(format!("address {bad} is not in the block code")));
    }
    Ok(())
}

/// Concatenation `b_1 ⋯ b_s` of codewords of a κ-WMU code `C` (κ ≤ n/2)
/// that are not addresses.
pub fn scheme_a_encode(code: &Code, book: &AddressBook, blocks: &[Seq]) -> Result<InfoBlock> {
    check_wmu_source(code, book)?;
    if blocks.is_empty() {
        return Err(invalid("at least one block is required"));
    }
    for b in blocks {
        if !code.contains(b) {
            return Err(invalid(format!("block {b} is not in the code")));
        }
        if book.contains(b.symbols()) {
            return Err(invalid(format!("block {b} is an address")));
        }
    }
    verified(concat(code.alphabet(), blocks), book, Scheme::A)
}

/// Splits a scheme A payload back into its blocks, checking membership.
pub fn scheme_a_decode(code: &Code, book: &AddressBook, payload: &Seq) -> Result<Vec<Seq>> {
    let blocks = split(payload, code.length())?;
    for b in &blocks {
        if !code.contains(b) || book.contains(b.symbols()) {
            return Err(Error::DecodingFailure(format!("{b} is not a non-address codeword")));
        }
    }
    Ok(blocks)
}

/// Removes the lexicographically largest non-address members of `code`
/// until the number of non-addresses is a power of two.
pub fn expurgate(code: &Code, book: &AddressBook) -> Result<Code> {
    let free = code.members().iter().filter(|m| !book.contains(m.symbols())).count();
    if free == 0 {
        return Err(invalid("every member is an address"));
    }
    let target = 1usize << (usize::BITS - 1 - free.leading_zeros());
    let mut keep_free = target;
    let members: Vec<Seq> = code
        .members()
        .iter()
        .filter(|m| {
            if book.contains(m.symbols()) {
                return true;
            }
            if keep_free > 0 {
                keep_free -= 1;
                true
            } else {
                false
            }
        })
        .cloned()
        .collect();
    let mut out = Code::from_sorted(
        code.alphabet(),
        code.length(),
        members,
        Provenance::new("expurgated").with("from", &code.provenance().name),
    );
    // subsets keep every certificate
    for claim in code.profile().claims() {
        out.certify(claim.property, claim.certifier.clone());
    }
    Ok(out)
}

/// Scheme A wrapped in a Reed–Solomon `[r, s]` code over GF(2^t), where
/// the `2^t` non-address codewords are the field symbols in lexicographic
/// order.
#[derive(Debug, Clone)]
pub struct SchemeB {
    code: Code,
    book: AddressBook,
    symbols: Vec<Seq>,
    rs: ReedSolomon,
}

impl SchemeB {
    pub fn new(code: &Code, book: &AddressBook, s: usize, r: usize) -> Result<SchemeB> {
        check_wmu_source(code, book)?;
        let symbols: Vec<Seq> = code
            .members()
            .iter()
            .filter(|m| !book.contains(m.symbols()))
            .cloned()
            .collect();
        let size = symbols.len();
        if size < 2 {
            return Err(invalid("need at least two non-address codewords"));
        }
        if !size.is_power_of_two() {
            let target = 1usize << (usize::BITS - 1 - size.leading_zeros());
            return Err(Error::ExpurgationRequired {
                size,
                remove: size - target,
                target,
            });
        }
        let t = size.trailing_zeros();
        let field = gf(t)?;
        let rs = ReedSolomon::new(field, r, s)?;
        Ok(SchemeB {
            code: code.clone(),
            book: book.clone(),
            symbols,
            rs,
        })
    }

    pub fn message_blocks(&self) -> usize {
        self.rs.dimension()
    }

    pub fn encoded_blocks(&self) -> usize {
        self.rs.length()
    }

    /// Block errors the decoder corrects.
    pub fn correctable(&self) -> usize {
        self.rs.correctable()
    }

    /// The non-address codewords, in field-symbol order.
    pub fn symbols(&self) -> &[Seq] {
        &self.symbols
    }

    fn index(&self, block: &Seq) -> Option<u16> {
        self.symbols.binary_search(block).ok().map(|i| i as u16)
    }

    pub fn encode(&self, message: &[Seq]) -> Result<InfoBlock> {
        if message.len() != self.rs.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.rs.dimension(),
                found: message.len(),
            });
        }
        let values = message
            .iter()
            .map(|b| {
                self.index(b)
                    .ok_or_else(|| invalid(format!("block {b} is not a non-address codeword")))
            })
            .collect::<Result<Vec<u16>>>()?;
        let word = self.rs.encode(&values)?;
        let blocks: Vec<Seq> = word.iter().map(|&v| self.symbols[v as usize].clone()).collect();
        verified(concat(self.code.alphabet(), &blocks), &self.book, Scheme::B)
    }

    /// Recovers the message when at most [`SchemeB::correctable`] blocks
    /// are corrupted. Blocks that are not symbols count as errors.
    pub fn decode(&self, payload: &Seq) -> Result<Vec<Seq>> {
        let blocks = split(payload, self.code.length())?;
        if blocks.len() != self.rs.length() {
            return Err(Error::LengthMismatch {
                expected: self.rs.length() * self.code.length(),
                found: payload.len(),
            });
        }
        let received: Vec<u16> = blocks.iter().map(|b| self.index(b).unwrap_or(0)).collect();
        let msg = self.rs.decode(&received)?;
        Ok(msg.iter().map(|&v| self.symbols[v as usize].clone()).collect())
    }
}

/// Decoupled quaternary scheme: addresses `psi(c, a·a)` for `a ∈ C1` and
/// information blocks `psi(f, g)` for `g ∈ C2`, requiring no cyclic shift
/// of a member of `C1` to lie in `C2`.
#[derive(Debug, Clone)]
pub struct SchemeC {
    book: AddressBook,
    c2: Vec<Seq>,
    n: usize,
}

impl SchemeC {
    pub fn build(c1: &Code, c2: &Code) -> Result<SchemeC> {
        for (c, what) in [(c1, "C1"), (c2, "C2")] {
            if c.alphabet() != Alphabet::Binary {
                return Err(invalid(format!("{what} must be binary")));
            }
        }
        if c1.length() != c2.length() {
            return Err(Error::LengthMismatch {
                expected: c1.length(),
                found: c2.length(),
            });
        }
        let n = c1.length();
        for a in c1.members() {
            let s = a.symbols();
            for i in 0..n {
                let shift: Vec<u8> = s[i..].iter().chain(&s[..i]).copied().collect();
                let shifted = Seq::from_raw(Alphabet::Binary, shift);
                if c2.contains(&shifted) {
                    return Err(invalid(format!(
                        "cyclic shift by {i} of {a} is {shifted}, a member of C2"
                    )));
                }
            }
        }
        Ok(SchemeC {
            book: AddressBook::doubled_psi(c1.members().to_vec(), n),
            c2: c2.members().to_vec(),
            n,
        })
    }

    pub fn book(&self) -> &AddressBook {
        &self.book
    }

    pub fn block_length(&self) -> usize {
        self.n
    }

    /// `psi(f_1, g_1) ⋯ psi(f_s, g_s)` for free binary `f_i` and `g_i ∈ C2`.
    /// At least two blocks are needed to hold an address.
    pub fn encode(&self, pairs: &[(Seq, Seq)]) -> Result<InfoBlock> {
        if pairs.len() < 2 {
            return Err(invalid("scheme C needs at least two blocks"));
        }
        let mut symbols = Vec::with_capacity(pairs.len() * self.n);
        for (f, g) in pairs {
            if f.alphabet() != Alphabet::Binary || f.len() != self.n {
                return Err(invalid(format!("free part {f} must be binary of length {}", self.n)));
            }
            if self.c2.binary_search(g).is_err() {
                return Err(invalid(format!("{g} is not in C2")));
            }
            symbols.extend(psi_symbols(f.symbols(), g.symbols()));
        }
        verified(Seq::from_raw(Alphabet::Quaternary, symbols), &self.book, Scheme::C)
    }

    pub fn decode(&self, payload: &Seq) -> Result<Vec<(Seq, Seq)>> {
        split(payload, self.n)?
            .iter()
            .map(|b| {
                let (f, g) = psi_inverse(b)?;
                if self.c2.binary_search(&g).is_err() {
                    return Err(Error::DecodingFailure(format!("block {b} does not carry a C2 word")));
                }
                Ok((f, g))
            })
            .collect()
    }
}

/// `q^{n−1} (q−1)^{N−n+1}`, the number of scheme D inputs.
pub fn scheme_d_info_count(q: u8, n: usize, total: usize) -> u128 {
    if total < n || n == 0 {
        return 0;
    }
    let head = (q as u128).checked_pow((n - 1) as u32).unwrap_or(u128::MAX);
    let tail = (q as u128 - 1).checked_pow((total - n + 1) as u32).unwrap_or(u128::MAX);
    head.saturating_mul(tail)
}

struct SyndromeWalk<'a> {
    book: &'a AddressBook,
    q: u8,
    n: usize,
}

impl<'a> SyndromeWalk<'a> {
    fn new(book: &'a AddressBook) -> Result<Self> {
        let Membership::Syndrome { parity_check, target } = book.membership() else {
            return Err(invalid("scheme D needs addresses given by a parity-check matrix"));
        };
        let n = book.length();
        let mut e = vec![0u16; n];
        e[n - 1] = 1;
        let syndrome = parity_check.left_mul(&e)?;
        if syndrome.iter().all(|&s| s == 0) {
            return Err(invalid("e = (0,…,0,1) has zero syndrome, so the next symbol is not unique"));
        }
        if &syndrome == target {
            return Err(invalid("e = (0,…,0,1) is an address"));
        }
        debug_assert!(std::ptr::eq(field_for(book.alphabet()), parity_check.field()));
        Ok(SyndromeWalk {
            book,
            q: book.alphabet().q(),
            n,
        })
    }

    /// Symbols `v` in increasing order for which `window·v` is not an address.
    fn allowed(&self, window: &[u8]) -> Vec<u8> {
        let mut w = window.to_vec();
        w.push(0);
        let allowed: Vec<u8> = (0..self.q)
            .filter(|&v| {
                w[self.n - 1] = v;
                !self.book.contains(&w)
            })
            .collect();
        assert!(allowed.len() + 1 >= self.q as usize, "more than one symbol excluded");
        allowed
    }
}

/// Sequential encoder: the first `n − 1` symbols are copied, and each later
/// symbol is the `info_i`-th smallest value that keeps the last window out
/// of the address set. `info` tail digits are in `0..=q−2`.
pub fn scheme_d_encode(book: &AddressBook, info: &[u8]) -> Result<InfoBlock> {
    let walk = SyndromeWalk::new(book)?;
    let (q, n) = (walk.q, walk.n);
    if info.len() < n {
        return Err(invalid(format!("info length {} is below n = {n}", info.len())));
    }
    let mut b: Vec<u8> = Vec::with_capacity(info.len());
    for (i, &x) in info.iter().enumerate() {
        if i < n - 1 {
            if x >= q {
                return Err(Error::InvalidSymbol { symbol: x as u16, q });
            }
            b.push(x);
            continue;
        }
        if x + 1 >= q {
            return Err(invalid(format!(
                "tail digit {x} at position {} must be below q − 1 = {}",
                i + 1,
                q - 1
            )));
        }
        let allowed = walk.allowed(&b[i + 1 - n..i]);
        b.push(allowed[x as usize]);
    }
    verified(Seq::from_raw(book.alphabet(), b), book, Scheme::D)
}

/// Inverse of [`scheme_d_encode`].
pub fn scheme_d_decode(book: &AddressBook, payload: &Seq) -> Result<Vec<u8>> {
    let walk = SyndromeWalk::new(book)?;
    let n = walk.n;
    if payload.alphabet() != book.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: book.alphabet().q(),
            found: payload.q(),
        });
    }
    let b = payload.symbols();
    if b.len() < n {
        return Err(invalid(format!("payload length {} is below n = {n}", b.len())));
    }
    let mut info = b[..n - 1].to_vec();
    for i in n - 1..b.len() {
        let allowed = walk.allowed(&b[i + 1 - n..i]);
        let rank = allowed.iter().position(|&v| v == b[i]).ok_or_else(|| {
            Error::DecodingFailure(format!("window ending at position {} is an address", i + 1))
        })?;
        info.push(rank as u8);
    }
    Ok(info)
}
