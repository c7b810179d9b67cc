use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn mucodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mucodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, text).unwrap();
    p
}

fn sequences(p: &str) -> Vec<String> {
    fs::read_to_string(Path::new(p))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(String::from)
        .collect()
}

const CONSTRUCTIONS: &[&str] = &[
    "dyck-mu",
    "levenshtein-mu",
    "wmu",
    "cyclic-coset-wmu",
    "parsing-ecc-mu",
    "interleaved-ecc-mu",
    "balanced-wmu4",
    "prefix-balanced-wmu",
    "v1-bal-ecc-wmu4",
    "v2-bal-ecc-wmu4",
    "apd-mu2",
    "apd-bal-mu4",
    "concat-seed",
    "balanced-binary",
];

#[test]
fn every_default_construction_verifies() {
    let dir = TempDir::new().unwrap();
    for name in CONSTRUCTIONS {
        let file = path(&dir, &format!("{name}.txt"));
        let out = mucodes(&["construct", name, "--out", &file]);
        assert_eq!(status(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let text = fs::read_to_string(&file).unwrap();
        assert!(text.starts_with("# profile: "), "{name}: {text}");
        let out = mucodes(&["verify", &file]);
        assert_eq!(status(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn dyck_example_and_parameters() {
    let out = mucodes(&["construct", "dyck-mu", "--n", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# profile: mu bal"));
    assert_eq!(lines.count(), 5);
    assert_eq!(status(&mucodes(&["construct", "dyck-mu", "--n", "7"])), 2);
    assert_eq!(status(&mucodes(&["construct", "no-such-code"])), 2);
    assert_eq!(status(&mucodes(&["construct", "dyck-mu", "--bogus", "1"])), 2);
}

#[test]
fn psi_combine_from_files() {
    let dir = TempDir::new().unwrap();
    let c1 = path(&dir, "c1.txt");
    let c2 = path(&dir, "c2.txt");
    assert_eq!(status(&mucodes(&["construct", "balanced-binary", "--n", "4", "--out", &c1])), 0);
    assert_eq!(status(&mucodes(&["construct", "wmu", "--n", "4", "--kappa", "2", "--out", &c2])), 0);
    let c = path(&dir, "c.txt");
    assert_eq!(status(&mucodes(&["construct", "psi-combine", "--c1", &c1, "--c2", &c2, "--out", &c])), 0);
    assert_eq!(status(&mucodes(&["verify", "--prop", "bal", "--prop", "wmu:2", &c])), 0);
    // a file whose claim is false is refused as an input
    let liar = write(&dir, "liar.txt", "# profile: mu\n100\n011\n");
    assert_eq!(status(&mucodes(&["construct", "psi-combine", "--c1", &liar, "--c2", &liar])), 1);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "a.txt", "100\n011\n");
    assert_eq!(status(&mucodes(&["verify", "--prop", "wmu:2", &f])), 0);
    let out = mucodes(&["verify", "--prop", "mu", &f]);
    assert_eq!(status(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("prefix of length 1"));
    assert_eq!(status(&mucodes(&["verify", "--prop", "dist:3", &f])), 0);
    assert_eq!(status(&mucodes(&["verify", "--prop", "wat", &f])), 2);
    assert_eq!(status(&mucodes(&["verify", "--prop", "mu", &path(&dir, "missing.txt")])), 3);
    let mixed = write(&dir, "m.txt", "01\nAC\n");
    assert_eq!(status(&mucodes(&["verify", "--prop", "mu", &mixed])), 2);
}

#[test]
fn gv_sweep_csv_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str| {
        let csv = path(&dir, name);
        let args = [
            "bounds", "--which", "constrained-gv", "--q", "2", "--n", "50", "--kappa", "1", "--sweep", "d=1..25",
            "--csv", &csv,
        ];
        assert_eq!(status(&mucodes(&args)), 0);
        fs::read(&csv).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let mut rdr = csv::Reader::from_reader(a.as_slice());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        ["q", "n", "kappa", "d", "lower", "upper", "log2_rate_lower", "log2_rate_upper"]
    );
    let lower: Vec<f64> = rdr.records().map(|r| r.unwrap()[4].parse().unwrap()).collect();
    assert_eq!(lower.len(), 25);
    assert!(lower.windows(2).all(|w| w[1] <= w[0]));
    assert!(lower.iter().all(|&x| x > 0.0));
}

#[test]
fn bounds_text_and_errors() {
    let out = mucodes(&["bounds", "--which", "mu", "--q", "2", "--n", "4"]);
    assert_eq!(status(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("3/16"));
    let out = mucodes(&["bounds", "--which", "bch", "--m", "10", "--t", "1"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("0.990"));
    assert_eq!(status(&mucodes(&["bounds", "--which", "mu", "--q", "3", "--n", "4"])), 2);
    assert_eq!(status(&mucodes(&["bounds", "--which", "wmu", "--n", "9", "--sweep", "kappa=5..1"])), 2);
}

#[test]
fn oracle_witness_verifies() {
    let dir = TempDir::new().unwrap();
    let w = path(&dir, "w.txt");
    assert_eq!(status(&mucodes(&["oracle", "--n", "5", "--kappa", "2", "--out", &w])), 0);
    assert!(fs::read_to_string(&w).unwrap().starts_with("# oracle size=4"));
    assert_eq!(status(&mucodes(&["verify", "--prop", "wmu:2", &w])), 0);
    assert_eq!(status(&mucodes(&["oracle", "--q", "4", "--n", "7"])), 2);
}

#[test]
fn scheme_d_roundtrip() {
    let dir = TempDir::new().unwrap();
    let addr = path(&dir, "addr.txt");
    assert_eq!(status(&mucodes(&["construct", "cyclic-coset-wmu", "--base", "repetition3", "--out", &addr])), 0);
    let info = write(&dir, "info.txt", "10000\n");
    let blk = path(&dir, "blk.txt");
    let enc = ["encode", "--scheme", "d", "--base", "repetition3", "--addresses", &addr, "--in", &info, "--out", &blk];
    assert_eq!(status(&mucodes(&enc)), 0);
    assert_eq!(sequences(&blk), ["10101"]);
    let out = mucodes(&["decode", "--scheme", "d", "--base", "repetition3", "--in", &blk]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "10000");
    let bad = write(&dir, "bad.txt", "10010\n");
    assert_eq!(status(&mucodes(&["encode", "--scheme", "d", "--base", "repetition3", "--in", &bad])), 2);
    let hit = write(&dir, "hit.txt", "11001\n");
    assert_eq!(status(&mucodes(&["decode", "--scheme", "d", "--base", "repetition3", "--in", &hit])), 1);
    // random inputs are reproducible from the seed
    let r1 = mucodes(&["encode", "--scheme", "d", "--base", "f4-313", "--random", "12", "--seed", "7"]);
    let r2 = mucodes(&["encode", "--scheme", "d", "--base", "f4-313", "--random", "12", "--seed", "7"]);
    assert_eq!(status(&r1), 0);
    assert_eq!(r1.stdout, r2.stdout);
}

#[test]
fn schemes_a_and_b_roundtrip() {
    let dir = TempDir::new().unwrap();
    let code = path(&dir, "code.txt");
    let args = ["construct", "cyclic-coset-wmu", "--poly", "1,1,0,0,1,1", "--n", "8", "--out", &code];
    assert_eq!(status(&mucodes(&args)), 0);
    let members = sequences(&code);
    let addr = write(&dir, "addr.txt", &format!("{}\n", members[7]));
    let payload = write(&dir, "in.txt", &format!("{}\n{}\n", members[0], members[1]));
    let blk = path(&dir, "a.txt");
    let common = ["--code", code.as_str(), "--addresses", addr.as_str()];
    let mut enc = vec!["encode", "--scheme", "a", "--in", &payload, "--out", &blk];
    enc.extend(common);
    assert_eq!(status(&mucodes(&enc)), 0);
    let mut dec = vec!["decode", "--scheme", "a", "--in", &blk];
    dec.extend(common);
    let out = mucodes(&dec);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), format!("{}\n{}\n", members[0], members[1]));

    let mut enc_b = vec!["encode", "--scheme", "b", "--r", "3", "--s", "2", "--in", &payload, "--out", &blk];
    enc_b.extend(common);
    let out = mucodes(&enc_b);
    assert_eq!(status(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("expurgate 3"));
    enc_b.push("--expurgate");
    assert_eq!(status(&mucodes(&enc_b)), 0);
    assert_eq!(sequences(&blk)[0].len(), 24);
    let mut dec_b = vec!["decode", "--scheme", "b", "--r", "3", "--s", "2", "--expurgate", "--in", &blk];
    dec_b.extend(common);
    let out = mucodes(&dec_b);
    assert_eq!(status(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);
}

#[test]
fn scheme_c_roundtrip() {
    let dir = TempDir::new().unwrap();
    let c1 = write(&dir, "c1.txt", "1100\n");
    let c2 = write(&dir, "c2.txt", "1110\n0111\n1111\n");
    let input = write(&dir, "in.txt", "0000 1110\n1010 0111\n0110 1111\n");
    let blk = path(&dir, "blk.txt");
    let enc = ["encode", "--scheme", "c", "--addresses", &c1, "--code", &c2, "--in", &input, "--out", &blk];
    assert_eq!(status(&mucodes(&enc)), 0);
    assert_eq!(sequences(&blk)[0].len(), 12);
    let out = mucodes(&["decode", "--scheme", "c", "--addresses", &c1, "--code", &c2, "--in", &blk]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), fs::read_to_string(&input).unwrap());
    let shifted = write(&dir, "c2bad.txt", "0110\n");
    let out = mucodes(&["encode", "--scheme", "c", "--addresses", &c1, "--code", &shifted, "--in", &input]);
    assert_eq!(status(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cyclic shift"));
}

#[test]
fn summary_and_help() {
    let out = mucodes(&["summary"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dyck-mu") && text.contains("apd-bal-mu4"));
    let out = mucodes(&["--help"]);
    assert_eq!(status(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("prefix-balanced-wmu"));
    assert_eq!(status(&mucodes(&["--budget", "0", "summary"])), 2);
}
