//! Plain-text sequence files.
//!
//! One sequence per line, `[01]+` for binary and `[ACGT]+` for quaternary
//! files. Lines starting with `#` are comments; a comment of the form
//! `# profile: mu wmu=2 bal d=3 apd=12 provenance=...` carries the claimed
//! certificate of the code that follows.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::profile::Property;
use crate::seq::{Alphabet, Seq};

const PROFILE_PREFIX: &str = "# profile:";

#[derive(Debug, Clone, Default)]
pub struct SequenceFile {
    pub members: Vec<Seq>,
    pub claimed: Vec<Property>,
    pub provenance: Option<String>,
}

impl SequenceFile {
    pub fn alphabet(&self) -> Option<Alphabet> {
        self.members.first().map(Seq::alphabet)
    }

    pub fn into_code(self) -> Result<Code> {
        Code::from_members(self.members)
    }
}

pub fn parse_sequences(text: &str) -> Result<SequenceFile> {
    let mut file = SequenceFile::default();
    let mut alphabet: Option<Alphabet> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix(PROFILE_PREFIX) {
            parse_profile(rest, &mut file).map_err(|e| at_line(e, line_no))?;
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let seq = match alphabet {
            None => Seq::parse(line),
            Some(a) => Seq::parse_with(a, line),
        }
        .map_err(|e| match (&e, alphabet) {
            (Error::Parse { .. }, Some(a)) => Error::Parse {
                line: line_no,
                message: format!("expected a q = {} sequence (mixed alphabets are rejected)", a.q()),
            },
            _ => at_line(e, line_no),
        })?;
        alphabet.get_or_insert(seq.alphabet());
        file.members.push(seq);
    }
    Ok(file)
}

fn parse_profile(rest: &str, file: &mut SequenceFile) -> Result<()> {
    for token in rest.split_whitespace() {
        if let Some(p) = token.strip_prefix("provenance=") {
            file.provenance = Some(p.to_string());
        } else {
            file.claimed.push(Property::parse_token(token)?);
        }
    }
    Ok(())
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    }
}

/// The certificate comment line for a code, without a trailing newline.
pub fn certificate_line(code: &Code) -> String {
    let tokens = code.profile().tokens();
    let mut line = String::from(PROFILE_PREFIX);
    if !tokens.is_empty() {
        line.push(' ');
        line.push_str(&tokens);
    }
    line.push_str(" provenance=");
    line.push_str(&code.provenance().to_string().replace(' ', ""));
    line
}

pub fn write_code(code: &Code) -> String {
    let mut out = certificate_line(code);
    out.push('\n');
    for m in code.members() {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    out
}

pub fn write_sequences<'a>(seqs: impl IntoIterator<Item = &'a Seq>) -> String {
    let mut out = String::new();
    for s in seqs {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}
