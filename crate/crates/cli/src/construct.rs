use std::path::PathBuf;

use clap::Args;
use mucodes::algebra::{f2, f4, CyclicCode, LinearCode, Polynomial};
use mucodes::constructions as cons;
use mucodes::{Alphabet, Budget, Code};

use crate::files::{load_code, write_output};
use crate::{CliResult, Failure};

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// Construction name; see the list below.
    name: String,
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    kappa: Option<usize>,
    /// Marker run length.
    #[arg(long)]
    ell: Option<usize>,
    /// Maximum Dyck height or prefix skew.
    #[arg(long)]
    height: Option<usize>,
    /// Primer-dimer window length.
    #[arg(long)]
    f: Option<usize>,
    /// Number of f-blocks (apd-mu2).
    #[arg(long)]
    p: Option<usize>,
    /// Number of parsing blocks (parsing-ecc-mu).
    #[arg(long)]
    t: Option<usize>,
    /// Built-in cyclic code: hamming74, f4-313, repetitionN, parityN.
    #[arg(long)]
    base: Option<String>,
    /// Generator polynomial as ascending coefficients, e.g. 1,1,0,1; needs --n.
    #[arg(long)]
    poly: Option<String>,
    /// Shortened Hamming code as r,k.
    #[arg(long)]
    hamming: Option<String>,
    /// First binary component file.
    #[arg(long)]
    c1: Option<PathBuf>,
    /// Second binary component file.
    #[arg(long)]
    c2: Option<PathBuf>,
    /// Seed code file for concat-seed.
    #[arg(long)]
    from: Option<PathBuf>,
    /// Number of concatenated blocks (concat-seed).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn params(msg: impl Into<String>) -> Failure {
    Failure::Params(msg.into())
}

fn cyclic(a: &ConstructArgs, default: &str) -> CliResult<CyclicCode> {
    if let Some(p) = &a.poly {
        let n = a.n.ok_or_else(|| params("--poly needs --n"))?;
        let field = if a.q == 4 { f4() } else { f2() };
        return Ok(CyclicCode::new(n, Polynomial::parse(field, p)?)?);
    }
    Ok(CyclicCode::builtin(a.base.as_deref().unwrap_or(default))?)
}

fn linear(a: &ConstructArgs, default_hamming: Option<(usize, usize)>, default_base: &str) -> CliResult<LinearCode> {
    let hamming = match &a.hamming {
        Some(text) => {
            let (r, k) = text.split_once(',').ok_or_else(|| params("--hamming expects r,k"))?;
            let num = |s: &str| s.trim().parse::<usize>().map_err(|_| params("--hamming expects r,k"));
            Some((num(r)?, num(k)?))
        }
        None if a.base.is_none() && a.poly.is_none() => default_hamming,
        None => None,
    };
    match hamming {
        Some((r, k)) => Ok(LinearCode::shortened_hamming(r, k)?),
        None => Ok(cyclic(a, default_base)?.systematic_form()?),
    }
}

fn smallest_marker(q: u32, m: usize) -> usize {
    let mut ell = 1;
    while (q as usize).pow(ell as u32) < 2 * m {
        ell += 1;
    }
    ell.min(m.saturating_sub(1)).max(1)
}

pub fn build(a: &ConstructArgs, b: Budget) -> CliResult<Code> {
    let alphabet = Alphabet::new(a.q)?;
    let n = |default: usize| a.n.unwrap_or(default);
    let code = match a.name.as_str() {
        "dyck-mu" => cons::dyck_mu(n(8), a.height, b)?,
        "levenshtein-mu" => {
            let len = n(5);
            cons::levenshtein_mu(alphabet, len, a.ell.unwrap_or_else(|| smallest_marker(a.q, len)), b)?
        }
        "wmu" => {
            let (len, kappa) = (n(6), a.kappa.unwrap_or(2));
            if a.q == 2 && a.ell.is_none() {
                cons::default_wmu_component(len, kappa, b)?
            } else {
                if kappa == 0 || kappa > len {
                    return Err(params(format!("κ = {kappa} must be in 1..={len}")));
                }
                let m = len - kappa + 1;
                let core = cons::levenshtein_mu(alphabet, m, a.ell.unwrap_or_else(|| smallest_marker(a.q, m)), b)?;
                cons::wmu_concat(&core, kappa, None, b)?
            }
        }
        "cyclic-coset-wmu" => cons::cyclic_coset_wmu(&cyclic(a, "hamming74")?, b)?,
        "parsing-ecc-mu" => {
            let base = match (&a.hamming, &a.base, &a.poly) {
                (None, None, None) => LinearCode::from_cyclic(&CyclicCode::repetition(3)?),
                _ => linear(a, None, "repetition3")?,
            };
            cons::parsing_ecc_mu(&base, a.ell.unwrap_or(2), a.t.unwrap_or(3), b)?
        }
        "interleaved-ecc-mu" => {
            let enc = linear(a, Some((5, 18)), "hamming74")?;
            let ell = if a.hamming.is_none() && a.base.is_none() && a.poly.is_none() && a.ell.is_none() {
                Some(3)
            } else {
                a.ell
            };
            cons::interleaved_ecc_mu(&enc, ell, b)?
        }
        "balanced-wmu4" => {
            let c1 = a.c1.as_deref().map(load_code).transpose()?;
            let c2 = a.c2.as_deref().map(load_code).transpose()?;
            cons::balanced_wmu4(n(4), a.kappa.unwrap_or(2), c1.as_ref(), c2.as_ref(), b)?
        }
        "prefix-balanced-wmu" => cons::prefix_balanced_wmu(n(6), a.kappa.unwrap_or(3), a.height.unwrap_or(1), b)?,
        "v1-bal-ecc-wmu4" => {
            if a.poly.is_some() && a.q != 4 {
                return Err(params("v1-bal-ecc-wmu4 needs an F4 base; pass --q 4 with --poly"));
            }
            cons::v1_bal_ecc_wmu4(&cyclic(a, "f4-313")?, b)?
        }
        "v2-bal-ecc-wmu4" => {
            let len = n(6);
            let c1 = match &a.c1 {
                Some(p) => load_code(p)?,
                None => cons::balanced_binary_code(len, b)?,
            };
            let c2 = match &a.c2 {
                Some(p) => load_code(p)?,
                None if a.base.is_none() && a.poly.is_none() => {
                    cons::cyclic_coset_wmu(&CyclicCode::new(len, Polynomial::parse(f2(), "1,0,0,1")?)?, b)?
                }
                None => cons::cyclic_coset_wmu(&cyclic(a, "hamming74")?, b)?,
            };
            cons::v2_bal_ecc_wmu4(&c1, &c2, b)?
        }
        "apd-mu2" => cons::apd_mu2(a.f.unwrap_or(12), a.p.unwrap_or(1), a.ell.unwrap_or(3), b)?,
        "apd-bal-mu4" => {
            let c2 = match &a.c2 {
                Some(p) => load_code(p)?,
                None => cons::apd_mu2(a.f.unwrap_or(12), a.p.unwrap_or(1), a.ell.unwrap_or(3), b)?,
            };
            let c1 = match &a.c1 {
                Some(p) => load_code(p)?,
                None => cons::balanced_binary_code(c2.length(), b)?,
            };
            cons::apd_bal_mu4(&c1, &c2, b)?
        }
        "concat-seed" => {
            let seed = match &a.from {
                Some(p) => load_code(p)?,
                None => cons::cyclic_coset_wmu(&CyclicCode::repetition(3)?, b)?,
            };
            let schedule = cons::auto_schedule(&seed, a.m.unwrap_or(2))?;
            cons::concat_seed(&seed, &schedule, b)?
        }
        "balanced-binary" => cons::balanced_binary_code(n(4), b)?,
        "psi-combine" => {
            let (Some(p1), Some(p2)) = (&a.c1, &a.c2) else {
                return Err(params("psi-combine needs --c1 and --c2"));
            };
            cons::psi_combine(&load_code(p1)?, &load_code(p2)?, b)?
        }
        other => return Err(params(format!("unknown construction {other:?}; run `mucodes construct --help`"))),
    };
    Ok(code)
}

pub fn run(a: &ConstructArgs, b: Budget) -> CliResult<()> {
    let code = build(a, b)?;
    write_output(a.out.as_deref(), &mucodes::io::write_code(&code))
}
