mod blocks;
mod bounds_cmd;
mod construct;
mod files;
mod summary;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mucodes::verify::{self, OracleConstraints, PropertyReport};
use mucodes::{Alphabet, Budget, Property};

use files::{read_text, write_output};

/// Why a run stopped. Each kind has its own exit status.
#[derive(Debug)]
pub enum Failure {
    /// A checked property does not hold (exit 1).
    Property(String),
    /// Bad flags or parameters (exit 2).
    Params(String),
    /// Reading or writing a file failed (exit 3).
    Io(String),
}

impl Failure {
    fn status(&self) -> u8 {
        match self {
            Failure::Property(_) => 1,
            Failure::Params(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl From<mucodes::Error> for Failure {
    fn from(e: mucodes::Error) -> Self {
        match e {
            mucodes::Error::DecodingFailure(_) => Failure::Property(e.to_string()),
            other => Failure::Params(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

const MAPPING: &str = "\
Constructions (construct <name>):
  dyck-mu               binary balanced MU code from Dyck words
  levenshtein-mu        q-ary MU code with a 0^l 1 marker
  wmu                   q-ary k-WMU code: MU core followed by a free tail
  cyclic-coset-wmu      coset of a cyclic code, (k+1)-WMU with its distance
  parsing-ecc-mu        MU error-correcting code from a linear code and markers
  interleaved-ecc-mu    MU code that interleaves systematic parity bits
  balanced-wmu4         balanced quaternary k-WMU code via the psi map
  prefix-balanced-wmu   balanced quaternary k-WMU code with bounded prefix GC skew
  v1-bal-ecc-wmu4       balanced error-correcting WMU code from an F4 cyclic code
  v2-bal-ecc-wmu4       balanced error-correcting WMU code from two binary codes
  apd-mu2               binary MU code avoiding primer dimers
  apd-bal-mu4           balanced quaternary MU code avoiding primer dimers
  concat-seed           concatenation of a seed code along a schedule
  balanced-binary       all balanced binary words
  psi-combine           psi map applied to two binary code files

Run `mucodes summary` for the size formulas.";

#[derive(Parser, Debug)]
#[command(name = "mucodes", version, about = "Construct, verify and bound constrained DNA address codes", after_help = MAPPING)]
struct Cli {
    /// Largest number of words any enumeration may produce.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT.0, value_parser = positive)]
    budget: usize,
    /// Seed for randomized inputs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code and write it with its certificate line.
    #[command(after_help = MAPPING)]
    Construct(construct::ConstructArgs),
    /// Check properties of a sequence file; without --prop, re-check its claimed profile.
    Verify(VerifyArgs),
    /// Evaluate size bounds, optionally over a parameter sweep, as text or CSV.
    Bounds(bounds_cmd::BoundsArgs),
    /// Exact maximum code size by exhaustive search (q^n ≤ 4096).
    Oracle(OracleArgs),
    /// Encode an information block that avoids every address.
    Encode(blocks::EncodeArgs),
    /// Recover the information from an encoded block.
    Decode(blocks::DecodeArgs),
    /// Table of constructions with size formulas and features.
    Summary,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// mu | wmu:k | bal | dist:d | apd:f | pbal:D (repeatable).
    #[arg(long = "prop")]
    props: Vec<String>,
    file: PathBuf,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    kappa: usize,
    #[arg(long)]
    balanced: bool,
    /// Minimum Hamming distance.
    #[arg(long)]
    d: Option<usize>,
    /// Primer-dimer window length.
    #[arg(long)]
    apd: Option<usize>,
    /// Write the witness code here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn positive(text: &str) -> Result<usize, String> {
    match text.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

pub fn parse_property(text: &str) -> CliResult<Property> {
    let bad = || Failure::Params(format!("unknown property {text:?}; use mu, wmu:k, bal, dist:d, apd:f or pbal:D"));
    let num = |v: &str| v.parse::<usize>().map_err(|_| bad());
    match text.split_once(':') {
        None => match text {
            "mu" => Ok(Property::Mu),
            "bal" => Ok(Property::Balanced),
            _ => Err(bad()),
        },
        Some(("wmu", k)) => Ok(Property::Wmu(num(k)?)),
        Some(("dist", d)) => Ok(Property::MinDistance(num(d)?)),
        Some(("apd", f)) => Ok(Property::Apd(num(f)?)),
        Some(("pbal", d)) => Ok(Property::PrefixBalanced(num(d)?)),
        Some(_) => Err(bad()),
    }
}

fn run_verify(args: &VerifyArgs) -> CliResult<()> {
    let file = mucodes::io::parse_sequences(&read_text(&args.file)?)?;
    let claimed = file.claimed.clone();
    let code = file.into_code()?;
    let props = if args.props.is_empty() {
        if claimed.is_empty() {
            return Err(Failure::Params("no --prop given and the file claims no profile".into()));
        }
        claimed
    } else {
        args.props.iter().map(|p| parse_property(p)).collect::<CliResult<_>>()?
    };
    let mut failed: Vec<PropertyReport> = Vec::new();
    for p in props {
        let report = verify::check(&code, p)?;
        println!("{p}: {}", if report.passed { "pass" } else { "FAIL" });
        if !report.passed {
            failed.push(report);
        }
    }
    if failed.is_empty() {
        return Ok(());
    }
    for r in &failed {
        eprintln!("{r}");
    }
    Err(Failure::Property(format!("{} propert{} failed", failed.len(), if failed.len() == 1 { "y" } else { "ies" })))
}

fn run_oracle(args: &OracleArgs) -> CliResult<()> {
    let alphabet = Alphabet::new(args.q)?;
    let mut constraints = OracleConstraints::wmu(args.kappa);
    if args.balanced {
        constraints = constraints.balanced();
    }
    if let Some(d) = args.d {
        constraints = constraints.with_distance(d);
    }
    if let Some(f) = args.apd {
        constraints = constraints.with_apd(f);
    }
    let r = verify::oracle_max_code_size(alphabet, args.n, constraints)?;
    let text = format!(
        "# oracle size={} vertices={}\n{}",
        r.size,
        r.vertices,
        mucodes::io::write_code(&r.witness)
    );
    write_output(args.out.as_deref(), &text)
}

fn run(cli: Cli) -> CliResult<()> {
    let budget = Budget(cli.budget);
    match &cli.command {
        Command::Construct(a) => construct::run(a, budget),
        Command::Verify(a) => run_verify(a),
        Command::Bounds(a) => bounds_cmd::run(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Encode(a) => blocks::encode(a, cli.seed),
        Command::Decode(a) => blocks::decode(a),
        Command::Summary => {
            print!("{}", summary::table());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Property(m) => eprintln!("property failed: {m}"),
                Failure::Params(m) => eprintln!("error: {m}"),
                Failure::Io(m) => eprintln!("io error: {m}"),
            }
            ExitCode::from(f.status())
        }
    }
}
