use std::fs;
use std::path::Path;

use mucodes::io::parse_sequences;
use mucodes::verify;
use mucodes::Code;

use crate::{CliResult, Failure};

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

pub fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Reads a sequence file and re-verifies every property its profile line
/// claims before trusting it.
pub fn load_code(path: &Path) -> CliResult<Code> {
    let file = parse_sequences(&read_text(path)?)?;
    let claimed = file.claimed.clone();
    let mut code = file.into_code()?;
    for p in claimed {
        let report = verify::certify(&mut code, p)?;
        if !report.passed {
            return Err(Failure::Property(format!("{}: claimed {p} does not hold: {report}", path.display())));
        }
    }
    Ok(code)
}
