use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use mucodes::algebra::{f2, f4, CyclicCode, Polynomial};
use mucodes::blockcoding::{
    expurgate, scheme_a_decode, scheme_a_encode, scheme_d_decode, scheme_d_encode, AddressBook, InfoBlock, SchemeB, SchemeC,
};
use mucodes::io::parse_sequences;
use mucodes::{Code, Seq};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::files::{load_code, read_text, write_output};
use crate::{CliResult, Failure};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeName {
    A,
    B,
    C,
    D,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, value_enum)]
    scheme: SchemeName,
    /// Address file. For scheme c it lists the binary halves; for scheme d it
    /// is optional and checked against the coset of --base.
    #[arg(long)]
    addresses: Option<PathBuf>,
    /// Block code for schemes a and b; the second binary code for scheme c.
    #[arg(long)]
    code: Option<PathBuf>,
    /// Built-in cyclic code whose coset is the address set (scheme d).
    #[arg(long)]
    base: Option<String>,
    /// Generator polynomial of the address coset (scheme d); needs --n.
    #[arg(long)]
    poly: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Reed–Solomon dimension in blocks (scheme b).
    #[arg(long)]
    s: Option<usize>,
    /// Reed–Solomon length in blocks (scheme b).
    #[arg(long)]
    r: Option<usize>,
    /// Drop the lexicographically largest non-address blocks until a power
    /// of two remain (scheme b).
    #[arg(long)]
    expurgate: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EncodeArgs {
    #[command(flatten)]
    common: Common,
    /// Input: blocks (a, b), "f g" pairs (c) or a digit string (d).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Generate a random input of this many blocks (digits for scheme d) from --seed.
    #[arg(long, conflicts_with = "input")]
    random: Option<usize>,
}

#[derive(Args, Debug)]
pub struct DecodeArgs {
    #[command(flatten)]
    common: Common,
    /// Encoded block file.
    #[arg(long = "in")]
    input: PathBuf,
}

fn params(msg: impl Into<String>) -> Failure {
    Failure::Params(msg.into())
}

fn required<'a>(p: &'a Option<PathBuf>, flag: &str) -> CliResult<&'a Path> {
    p.as_deref().ok_or_else(|| params(format!("--{flag} is required for this scheme")))
}

fn syndrome_book(c: &Common) -> CliResult<AddressBook> {
    let base = match (&c.poly, &c.base) {
        (Some(p), _) => {
            let n = c.n.ok_or_else(|| params("--poly needs --n"))?;
            let field = if c.q == 4 { f4() } else { f2() };
            CyclicCode::new(n, Polynomial::parse(field, p)?)?
        }
        (None, Some(b)) => CyclicCode::builtin(b)?,
        (None, None) => return Err(params("scheme d needs --base or --poly")),
    };
    let book = AddressBook::coset_of(&base)?;
    if let Some(path) = &c.addresses {
        let listed = load_code(path)?;
        if listed.members() != book.members() {
            return Err(params(format!("{} is not the coset of the given cyclic code", path.display())));
        }
    }
    Ok(book)
}

fn block_file(block: &InfoBlock) -> String {
    format!(
        "# block scheme={} address-length={}\n{}\n",
        block.scheme, block.address_length, block.payload
    )
}

fn read_block(path: &Path) -> CliResult<Seq> {
    let file = parse_sequences(&read_text(path)?)?;
    match file.members.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(params(format!("{} must hold exactly one sequence", path.display()))),
    }
}

fn lines(seqs: &[Seq]) -> String {
    seqs.iter().map(|s| format!("{s}\n")).collect()
}

fn digits(text: &str) -> CliResult<Vec<u8>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as u8)
                .ok_or_else(|| params(format!("scheme d input must be digits, found {c:?}")))
        })
        .collect()
}

fn pairs(text: &str) -> CliResult<Vec<(Seq, Seq)>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            match (it.next(), it.next(), it.next()) {
                (Some(f), Some(g), None) => Ok((Seq::parse(f)?, Seq::parse(g)?)),
                _ => Err(params(format!("expected \"f g\" on each line, got {l:?}"))),
            }
        })
        .collect()
}

fn pick<'a>(rng: &mut ChaCha8Rng, from: &'a [Seq]) -> CliResult<&'a Seq> {
    if from.is_empty() {
        return Err(params("no block is available to draw from"));
    }
    Ok(&from[rng.gen_range(0..from.len())])
}

fn free_blocks(code: &Code, book: &AddressBook) -> Vec<Seq> {
    code.members().iter().filter(|m| !book.contains(m.symbols())).cloned().collect()
}

fn scheme_b(c: &Common, code: &Code, book: &AddressBook, s: usize) -> CliResult<SchemeB> {
    let r = c.r.ok_or_else(|| params("scheme b needs --r"))?;
    if c.expurgate {
        return Ok(SchemeB::new(&expurgate(code, book)?, book, s, r)?);
    }
    Ok(SchemeB::new(code, book, s, r)?)
}

fn scheme_c(c: &Common) -> CliResult<SchemeC> {
    let c1 = load_code(required(&c.addresses, "addresses")?)?;
    let c2 = load_code(required(&c.code, "code")?)?;
    Ok(SchemeC::build(&c1, &c2)?)
}

pub fn encode(a: &EncodeArgs, seed: u64) -> CliResult<()> {
    let c = &a.common;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let input = match (&a.input, a.random) {
        (Some(p), _) => Some(read_text(p)?),
        (None, Some(_)) => None,
        (None, None) => return Err(params("give --in or --random")),
    };
    let count = a.random.unwrap_or(0);
    let block = match c.scheme {
        SchemeName::A | SchemeName::B => {
            let code = load_code(required(&c.code, "code")?)?;
            let book = AddressBook::explicit(&load_code(required(&c.addresses, "addresses")?)?);
            let blocks = match &input {
                Some(text) => parse_sequences(text)?.members,
                None => {
                    let free = free_blocks(&code, &book);
                    (0..count).map(|_| pick(&mut rng, &free).cloned()).collect::<CliResult<_>>()?
                }
            };
            if c.scheme == SchemeName::A {
                scheme_a_encode(&code, &book, &blocks)?
            } else {
                let s = c.s.unwrap_or(blocks.len());
                scheme_b(c, &code, &book, s)?.encode(&blocks)?
            }
        }
        SchemeName::C => {
            let scheme = scheme_c(c)?;
            let ps = match &input {
                Some(text) => pairs(text)?,
                None => {
                    let c2 = load_code(required(&c.code, "code")?)?;
                    let n = scheme.block_length();
                    (0..count)
                        .map(|_| {
                            let f: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
                            Ok((Seq::binary(&f)?, pick(&mut rng, c2.members())?.clone()))
                        })
                        .collect::<CliResult<_>>()?
                }
            };
            scheme.encode(&ps)?
        }
        SchemeName::D => {
            let book = syndrome_book(c)?;
            let info = match &input {
                Some(text) => digits(text)?,
                None => {
                    let q = book.alphabet().q();
                    (0..count)
                        .map(|i| if i + 1 < book.length() { rng.gen_range(0..q) } else { rng.gen_range(0..q - 1) })
                        .collect()
                }
            };
            scheme_d_encode(&book, &info)?
        }
    };
    write_output(c.out.as_deref(), &block_file(&block))
}

pub fn decode(a: &DecodeArgs) -> CliResult<()> {
    let c = &a.common;
    let payload = read_block(&a.input)?;
    let text = match c.scheme {
        SchemeName::A | SchemeName::B => {
            let code = load_code(required(&c.code, "code")?)?;
            let book = AddressBook::explicit(&load_code(required(&c.addresses, "addresses")?)?);
            if c.scheme == SchemeName::A {
                lines(&scheme_a_decode(&code, &book, &payload)?)
            } else {
                let s = c.s.ok_or_else(|| params("scheme b decoding needs --s"))?;
                lines(&scheme_b(c, &code, &book, s)?.decode(&payload)?)
            }
        }
        SchemeName::C => scheme_c(c)?
            .decode(&payload)?
            .iter()
            .map(|(f, g)| format!("{f} {g}\n"))
            .collect(),
        SchemeName::D => {
            let info = scheme_d_decode(&syndrome_book(c)?, &payload)?;
            let mut s: String = info.iter().map(|d| char::from(b'0' + d)).collect();
            s.push('\n');
            s
        }
    };
    write_output(c.out.as_deref(), &text)
}
