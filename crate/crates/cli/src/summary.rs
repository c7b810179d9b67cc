const ROWS: &[(&str, &str, &str, &str)] = &[
    ("dyck-mu", "binom(n, n/2) / (2(n-1))", "binary, balanced, MU", ""),
    ("levenshtein-mu", "c_q q^n / n", "q-ary, MU", "q in {2,4}, c_2 = 0.04688, c_4 = 0.06152"),
    ("wmu", "c_q q^n / (n-k+1)", "q-ary, k-WMU", "q in {2,4}, c_2 = 0.04688, c_4 = 0.06152"),
    ("balanced-wmu4", "c_2 binom(n, n/2) 2^n / (n-k+1)", "4-ary, balanced, k-WMU", "c_2 = 0.04688"),
    ("apd-mu2", "c_3 2^n / n", "binary, f-APD, MU", "for some constant c_3 > 0"),
    ("apd-bal-mu4", "c_3 binom(n, n/2) 2^n / n", "4-ary, f-APD, balanced, MU", "for some constant c_3 > 0"),
];

pub fn table() -> String {
    let header = ("construction", "size", "features", "comment");
    let w0 = ROWS.iter().map(|r| r.0.len()).max().unwrap().max(header.0.len());
    let w1 = ROWS.iter().map(|r| r.1.len()).max().unwrap().max(header.1.len());
    let w2 = ROWS.iter().map(|r| r.2.len()).max().unwrap().max(header.2.len());
    let mut out = String::from("Summary of the optimal code constructions\n");
    for (a, b, c, d) in std::iter::once(&header).chain(ROWS) {
        out.push_str(format!("{a:<w0$}  {b:<w1$}  {c:<w2$}  {d}").trim_end());
        out.push('\n');
    }
    out
}
