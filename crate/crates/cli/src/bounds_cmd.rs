use std::path::PathBuf;

use clap::Args;
use mucodes::bounds::{self, BoundReport, BoundValue};
use num::BigInt;

use crate::{CliResult, Failure};

const RATE_TABLE: &str = "bch-wmu-rates";

#[derive(Args, Debug, Clone)]
pub struct BoundsArgs {
    /// mu | wmu | constrained-gv | balanced-wmu | bewmu | apd-mu | apd-bal-mu | gyorfi | avoid-string | bch
    #[arg(long)]
    which: String,
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    kappa: usize,
    #[arg(long)]
    d: Option<usize>,
    /// Constant weight (gyorfi).
    #[arg(long)]
    w: Option<usize>,
    /// BCH field degree; the code length is 2^m − 1.
    #[arg(long)]
    m: Option<u32>,
    /// Errors corrected (bch) or number of avoided strings (avoid-string).
    #[arg(long)]
    t: Option<usize>,
    /// Length of the avoided strings (avoid-string).
    #[arg(long)]
    ns: Option<usize>,
    /// Value for the unspecified APD constant.
    #[arg(long)]
    c3: Option<f64>,
    /// Size of the best binary code with distance d, when not 2^n or 2^(n−1).
    #[arg(long)]
    a_dist: Option<BigInt>,
    /// Inclusive integer range for one parameter, e.g. d=1..25.
    #[arg(long)]
    sweep: Option<String>,
    /// Write a CSV table here instead of printing reports.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn need<T: Copy>(v: Option<T>, name: &str) -> CliResult<T> {
    v.ok_or_else(|| Failure::Params(format!("--{name} is required")))
}

fn exact_report(name: &str, n: usize, params: Vec<(&str, String)>, lower: num::BigRational) -> BoundReport {
    BoundReport {
        name: name.into(),
        params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        n,
        lower: Some(BoundValue::Exact(lower)),
        upper: None,
        notes: Vec::new(),
    }
}

fn evaluate(a: &BoundsArgs) -> CliResult<BoundReport> {
    let report = match a.which.as_str() {
        "mu" => bounds::mu_bounds(a.q, need(a.n, "n")?)?,
        "wmu" => bounds::wmu_bounds(a.q, need(a.n, "n")?, a.kappa)?,
        "constrained-gv" => bounds::constrained_gv_wmu(a.q, need(a.n, "n")?, a.kappa, need(a.d, "d")?)?.report,
        "balanced-wmu" => bounds::balanced_wmu_bounds(a.q, need(a.n, "n")?, a.kappa)?,
        "bewmu" => bounds::bewmu_lower(need(a.n, "n")?, a.kappa, need(a.d, "d")?, a.a_dist.clone())?,
        "apd-mu" => bounds::apd_mu_bounds(need(a.n, "n")?, a.c3)?,
        "apd-bal-mu" => bounds::apd_bal_mu_bounds(need(a.n, "n")?, a.c3)?,
        "gyorfi" => {
            let (n, d, w) = (need(a.n, "n")?, need(a.d, "d")?, need(a.w, "w")?);
            let v = bounds::gyorfi_lb(n, d, w, a.a_dist.clone())?;
            exact_report("gyorfi", n, vec![("n", n.to_string()), ("d", d.to_string()), ("w", w.to_string())], v)
        }
        "avoid-string" => {
            let (n, ns, t) = (need(a.n, "n")?, need(a.ns, "ns")?, need(a.t, "t")?);
            let v = bounds::avoid_string_lb(a.q, n, ns, t)?;
            let params = vec![("q", a.q.to_string()), ("n", n.to_string()), ("ns", ns.to_string()), ("t", t.to_string())];
            exact_report("avoid-string", n, params, v)
        }
        "bch" => {
            let (m, t) = (need(a.m, "m")?, need(a.t, "t")?);
            let (rate, optimal) = bounds::bch_wmu_rates(m, t as u32)?;
            BoundReport {
                name: RATE_TABLE.into(),
                params: vec![("m".into(), m.to_string()), ("t".into(), t.to_string())],
                n: (1usize << m) - 1,
                lower: Some(BoundValue::Approx(rate)),
                upper: Some(BoundValue::Approx(optimal)),
                notes: vec!["lower is the construction rate, upper the order-optimal rate".into()],
            }
        }
        other => return Err(Failure::Params(format!("unknown bound {other:?}"))),
    };
    Ok(report)
}

fn parse_sweep(text: &str) -> CliResult<(String, Vec<usize>)> {
    let bad = || Failure::Params(format!("bad sweep {text:?}; expected name=a..b"));
    let (name, range) = text.split_once('=').ok_or_else(bad)?;
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((name.trim().to_string(), (lo..=hi).collect()))
}

fn with_param(a: &BoundsArgs, name: &str, v: usize) -> CliResult<BoundsArgs> {
    let mut a = a.clone();
    match name {
        "n" => a.n = Some(v),
        "kappa" => a.kappa = v,
        "d" => a.d = Some(v),
        "w" => a.w = Some(v),
        "t" => a.t = Some(v),
        "ns" => a.ns = Some(v),
        "m" => a.m = Some(v as u32),
        "q" => a.q = v as u32,
        other => return Err(Failure::Params(format!("cannot sweep {other:?}"))),
    }
    Ok(a)
}

/// 12 significant digits in scientific notation, so output is stable.
pub fn sig12(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else {
        x.to_string()
    }
}

fn cell(v: &Option<BoundValue>) -> String {
    match v {
        None => String::new(),
        Some(BoundValue::Symbolic(s)) => s.clone(),
        Some(v) => v.to_f64().map(sig12).unwrap_or_default(),
    }
}

fn rate_cell(r: &BoundReport, rate: Option<f64>) -> String {
    if r.name == RATE_TABLE {
        return String::new();
    }
    rate.map(sig12).unwrap_or_default()
}

fn write_csv(path: &std::path::Path, reports: &[BoundReport]) -> CliResult<()> {
    let io = |e: csv::Error| Failure::Io(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    let mut header: Vec<String> = reports[0].params.iter().map(|(k, _)| k.clone()).collect();
    header.extend(["lower", "upper", "log2_rate_lower", "log2_rate_upper"].map(String::from));
    w.write_record(&header).map_err(io)?;
    for r in reports {
        let mut row: Vec<String> = r.params.iter().map(|(_, v)| v.clone()).collect();
        row.push(cell(&r.lower));
        row.push(cell(&r.upper));
        row.push(rate_cell(r, r.log2_rate_lower()));
        row.push(rate_cell(r, r.log2_rate_upper()));
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

pub fn run(a: &BoundsArgs) -> CliResult<()> {
    let reports = match &a.sweep {
        None => vec![evaluate(a)?],
        Some(s) => {
            let (name, values) = parse_sweep(s)?;
            values
                .into_iter()
                .map(|v| evaluate(&with_param(a, &name, v)?))
                .collect::<CliResult<Vec<_>>>()?
        }
    };
    match &a.csv {
        Some(path) => write_csv(path, &reports),
        None => {
            for r in &reports {
                println!("{r}");
                if let Some(x) = r.log2_rate_lower().filter(|_| r.name != RATE_TABLE) {
                    println!("  log2 rate (lower): {}", sig12(x));
                }
            }
            Ok(())
        }
    }
}
