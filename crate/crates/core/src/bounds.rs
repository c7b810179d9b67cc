//! Closed-form bounds on the sizes of MU, WMU, balanced, error-correcting
//! and APD codes.
//!
//! Rational formulas are evaluated exactly; anything involving logarithms,
//! entropy or trigonometry is an `f64`.

use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

/// A bound value: exact, approximate, or only known up to an unnamed constant.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Exact(BigRational),
    Approx(f64),
    /// A formula with a constant the literature leaves unspecified.
    Symbolic(String),
}

impl BoundValue {
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            BoundValue::Exact(r) => Some(ratio_to_f64(r)),
            BoundValue::Approx(x) => Some(*x),
            BoundValue::Symbolic(_) => None,
        }
    }

    /// `log₂` of the value; `−∞` for zero, `None` for symbolic or negative.
    pub fn log2(&self) -> Option<f64> {
        match self {
            BoundValue::Exact(r) => log2_ratio(r),
            BoundValue::Approx(x) if *x >= 0.0 => Some(x.log2()),
            _ => None,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            BoundValue::Exact(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(r) if r.is_integer() => write!(f, "{}", r.numer()),
            BoundValue::Exact(r) => write!(f, "{} (= {})", r, ratio_to_f64(r)),
            BoundValue::Approx(x) => write!(f, "{x}"),
            BoundValue::Symbolic(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    /// Code length used to normalize rates.
    pub n: usize,
    pub lower: Option<BoundValue>,
    pub upper: Option<BoundValue>,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(name: &str, n: usize) -> Self {
        BoundReport {
            name: name.into(),
            params: Vec::new(),
            n,
            lower: None,
            upper: None,
            notes: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    fn lower(mut self, v: BigRational) -> Self {
        self.lower = Some(BoundValue::Exact(v));
        self
    }

    fn upper(mut self, v: BigRational) -> Self {
        self.upper = Some(BoundValue::Exact(v));
        self
    }

    pub fn lower_f64(&self) -> Option<f64> {
        self.lower.as_ref().and_then(BoundValue::to_f64)
    }

    pub fn upper_f64(&self) -> Option<f64> {
        self.upper.as_ref().and_then(BoundValue::to_f64)
    }

    /// `log₂(lower) / n`.
    pub fn log2_rate_lower(&self) -> Option<f64> {
        self.lower.as_ref().and_then(BoundValue::log2).map(|x| x / self.n as f64)
    }

    pub fn log2_rate_upper(&self) -> Option<f64> {
        self.upper.as_ref().and_then(BoundValue::log2).map(|x| x / self.n as f64)
    }

    /// Lower ≤ upper whenever both are numeric.
    pub fn is_consistent(&self) -> bool {
        match (&self.lower, &self.upper) {
            (Some(BoundValue::Exact(a)), Some(BoundValue::Exact(b))) => a <= b,
            (Some(a), Some(b)) => match (a.to_f64(), b.to_f64()) {
                (Some(x), Some(y)) => x <= y * (1.0 + 1e-12),
                _ => true,
            },
            _ => true,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if let Some(l) = &self.lower {
            write!(f, "\n  lower: {l}")?;
        }
        if let Some(u) = &self.upper {
            write!(f, "\n  upper: {u}")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

fn pow_big(q: u64, e: usize) -> BigInt {
    num::pow(big(q), e)
}

pub fn binomial_big(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * big((n - i) as u64) / big(i as u64 + 1);
    }
    acc
}

fn log2_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(f64::INFINITY).log2() + shift as f64
}

fn log2_ratio(r: &BigRational) -> Option<f64> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    Some(log2_biguint(num) - log2_biguint(den))
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    match r.to_f64() {
        Some(x) if x.is_finite() && (x != 0.0 || r.is_zero()) => x,
        _ => {
            let sign = if r.is_negative() { -1.0 } else { 1.0 };
            sign * log2_ratio(&r.abs()).map_or(f64::NAN, f64::exp2)
        }
    }
}

fn check_q(q: u32) -> Result<()> {
    if q == 2 || q == 4 {
        Ok(())
    } else {
        Err(Error::InvalidAlphabet(q))
    }
}

/// `V_q(n, r) = Σ_{i ≤ r} binom(n, i)(q−1)^i`, with `V = 0` for `r < 0`
/// and `V = q^n` for `r ≥ n`.
pub fn sphere_volume(q: u32, n: usize, r: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    if r as u64 >= n as u64 {
        return pow_big(q as u64, n);
    }
    (0..=r as usize)
        .map(|i| binomial_big(n, i) * pow_big(q as u64 - 1, i))
        .sum()
}

/// `(q−1)²(2q−1)/(4q⁴)`.
pub fn c_q(q: u32) -> Result<BigRational> {
    check_q(q)?;
    let q = q as u64;
    Ok(BigRational::new(
        big((q - 1) * (q - 1) * (2 * q - 1)),
        big(4 * q * q * q * q),
    ))
}

/// `c_q q^n / n ≤ A_MU ≤ q^n / (2n)`.
pub fn mu_bounds(q: u32, n: usize) -> Result<BoundReport> {
    check_q(q)?;
    if n < 2 {
        return Err(invalid(format!("length n = {n} must be at least 2")));
    }
    let space = rat(pow_big(q as u64, n));
    let nn = rat(big(n as u64));
    Ok(BoundReport::new("mu", n)
        .param("q", q)
        .param("n", n)
        .lower(c_q(q)? * &space / &nn)
        .upper(space / (nn * rat(big(2)))))
}

/// `c_q q^n / (n−κ+1) ≤ A_κ-WMU ≤ q^n / (n−κ+1)`.
pub fn wmu_bounds(q: u32, n: usize, kappa: usize) -> Result<BoundReport> {
    check_q(q)?;
    if kappa == 0 || kappa >= n {
        return Err(invalid(format!("κ = {kappa} must satisfy 1 ≤ κ < n = {n}")));
    }
    let space = rat(pow_big(q as u64, n));
    let m = rat(big((n - kappa + 1) as u64));
    Ok(BoundReport::new("wmu", n)
        .param("q", q)
        .param("n", n)
        .param("kappa", kappa)
        .lower(c_q(q)? * &space / &m)
        .upper(space / m))
}

pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Asymptotic Gilbert–Varshamov rate `1 − h(d/n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GvRate {
    pub rate: f64,
    /// Always true: the `o(1)` term is dropped.
    pub asymptotic: bool,
}

pub fn gv_rate(n: usize, d: usize) -> Result<GvRate> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    if 2 * d > n {
        return Err(invalid(format!("distance d = {d} exceeds n/2 = {}", n as f64 / 2.0)));
    }
    Ok(GvRate {
        rate: 1.0 - binary_entropy(d as f64 / n as f64),
        asymptotic: true,
    })
}

/// Smallest `ℓ` with `q^ℓ ≥ x`.
pub(crate) fn ceil_log(q: u32, x: usize) -> usize {
    let mut ell = 0;
    let mut p: u128 = 1;
    while p < x as u128 {
        p *= q as u128;
        ell += 1;
    }
    ell
}

/// The terms of the constrained Gilbert–Varshamov bound for κ-WMU codes.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstrainedGv {
    pub ell: usize,
    pub l0: BigInt,
    pub l1: BigInt,
    pub l2: BigInt,
    /// `L₀ − L₁ − L₂`, a bound on the largest ball inside the WMU ground set.
    pub ball: BigInt,
    pub report: BoundReport,
}

/// `c_q q^n / ((n−κ+1)(L₀ − L₁ − L₂))` with `ℓ = ⌈log_q 2(n−κ+1)⌉`.
pub fn constrained_gv_wmu(q: u32, n: usize, kappa: usize, d: usize) -> Result<ConstrainedGv> {
    check_q(q)?;
    if kappa == 0 || kappa >= n {
        return Err(invalid(format!("κ = {kappa} must satisfy 1 ≤ κ < n = {n}")));
    }
    if d == 0 {
        return Err(invalid("distance d must be at least 1"));
    }
    let ell = ceil_log(q, 2 * (n - kappa + 1));
    if n < kappa + 1 + 2 * ell {
        return Err(invalid(format!(
            "precondition n − κ − 1 ≥ 2ℓ fails: n = {n}, κ = {kappa}, ℓ = {ell}"
        )));
    }
    let (ni, li, di) = (n as i64, ell as i64, d as i64);
    let v = |len: i64, r: i64| sphere_volume(q, len.max(0) as usize, r);
    let qm2 = q as u64 - 2;

    let l0 = v(ni - li - 1, di - 1) + big(qm2) * v(ni - li - 1, di - 2);

    let mut l1 = BigInt::zero();
    for i in (ell + 2)..=(n - kappa - ell + 1) {
        let top = i - ell - 2;
        for j in 0..=top {
            let r = di - li - j as i64 - 2;
            if r < 0 {
                break;
            }
            l1 += binomial_big(top, j) * pow_big(qm2, j) * v(ni - i as i64 - li + 1, r);
        }
    }
    l1 *= big(q as u64 - 1);

    let mut l2 = BigInt::zero();
    let top = n - kappa - ell;
    for i in 0..=top {
        let r = di - i as i64 - 2;
        if r < 0 {
            break;
        }
        l2 += binomial_big(top, i) * pow_big(qm2, i) * v(kappa as i64 - 1, r);
    }

    let ball = &l0 - &l1 - &l2;
    if !ball.is_positive() {
        return Err(invalid(format!(
            "denominator L0 − L1 − L2 = {ball} is not positive for d = {d}"
        )));
    }
    let value = c_q(q)? * rat(pow_big(q as u64, n))
        / (rat(big((n - kappa + 1) as u64)) * rat(ball.clone()));
    let report = BoundReport::new("constrained-gv-wmu", n)
        .param("q", q)
        .param("n", n)
        .param("kappa", kappa)
        .param("d", d)
        .lower(value);
    Ok(ConstrainedGv {
        ell,
        l0,
        l1,
        l2,
        ball,
        report,
    })
}

/// The constrained GV bound over a range of distances, stopping with an
/// error at the first distance where it is undefined.
pub fn constrained_gv_curve(
    q: u32,
    n: usize,
    kappa: usize,
    distances: impl IntoIterator<Item = usize>,
) -> Result<Vec<BoundReport>> {
    distances
        .into_iter()
        .map(|d| constrained_gv_wmu(q, n, kappa, d).map(|c| c.report))
        .collect()
}

/// Size of the largest binary code with distance `d` where it is known in
/// closed form: `2^n` for `d ≤ 1`, `2^{n−1}` for `d = 2`.
pub fn trivial_distance_code_size(n: usize, d: usize) -> Option<BigInt> {
    match d {
        0 | 1 => Some(pow_big(2, n)),
        2 if n >= 1 => Some(pow_big(2, n - 1)),
        _ => None,
    }
}

/// Constant-weight lower bound `binom(n, w) / 2^{n−1} · A(n, d)` for even
/// `d`; `a_dist` defaults to the closed form for `d = 2`.
pub fn gyorfi_lb(n: usize, d: usize, w: usize, a_dist: Option<BigInt>) -> Result<BigRational> {
    if d % 2 == 1 {
        return Err(invalid(format!("distance d = {d} must be even")));
    }
    if n == 0 || w > n || d > n {
        return Err(invalid(format!("need 0 ≤ w, d ≤ n = {n}")));
    }
    let a = match a_dist {
        Some(a) => a,
        None => trivial_distance_code_size(n, d).ok_or_else(|| {
            invalid(format!("A(n = {n}, d = {d}) is not known in closed form; supply it"))
        })?,
    };
    Ok(rat(binomial_big(n, w)) * rat(a) / rat(pow_big(2, n - 1)))
}

/// Bounds on balanced κ-WMU codes. For `q = 2` the lower bound is only
/// known for MU codes.
pub fn balanced_wmu_bounds(q: u32, n: usize, kappa: usize) -> Result<BoundReport> {
    check_q(q)?;
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n < 2 {
        return Err(invalid("length n must be at least 2"));
    }
    if kappa == 0 || kappa > n {
        return Err(invalid(format!("κ = {kappa} must be in 1..={n}")));
    }
    let balanced = rat(binomial_big(n, n / 2));
    let m = rat(big((n - kappa + 1) as u64));
    let report = BoundReport::new("balanced-wmu", n)
        .param("q", q)
        .param("n", n)
        .param("kappa", kappa);
    if q == 4 {
        let total = balanced * rat(pow_big(2, n));
        return Ok(report.lower(c_q(2)? * &total / &m).upper(total / m));
    }
    if kappa == 1 {
        let nn = big(n as u64);
        return Ok(report
            .lower(&balanced / rat(big(2) * (&nn - 1)))
            .upper(balanced / rat(nn)));
    }
    Ok(report.upper(balanced / m))
}

/// Bounds on binary MU f-APD codes of length `n`. The lower bound has an
/// unspecified existence constant `c₃`, optionally supplied by the caller.
pub fn apd_mu_bounds(n: usize, c3: Option<f64>) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let upper = rat(pow_big(2, n)) / rat(big(n as u64));
    let mut r = BoundReport::new("apd-mu", n).param("n", n).upper(upper.clone());
    r.lower = Some(match c3 {
        Some(c) => BoundValue::Approx(c * ratio_to_f64(&upper)),
        None => BoundValue::Symbolic(format!("c3 * 2^{n}/{n}")),
    });
    r.notes
        .push("c3 is an existence constant with no published value".into());
    Ok(r)
}

/// Bounds on balanced quaternary MU f-APD codes of length `n`.
pub fn apd_bal_mu_bounds(n: usize, c3: Option<f64>) -> Result<BoundReport> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let upper = rat(binomial_big(n, n / 2)) * rat(pow_big(2, n)) / rat(big(n as u64));
    let mut r = BoundReport::new("apd-bal-mu4", n).param("n", n).upper(upper.clone());
    r.lower = Some(match c3 {
        Some(c) => BoundValue::Approx(c * ratio_to_f64(&upper)),
        None => BoundValue::Symbolic(format!("c3 * binom({n},{})·2^{n}/{n}", n / 2)),
    });
    r.notes
        .push("c3 is an existence constant with no published value".into());
    Ok(r)
}

/// `(4^m/(D+1)) tan²(π/(D+1)) cos^{2m}(π/(D+1))`, the asymptotic number of
/// height-limited Dyck paths with `m` up steps.
pub fn dyck_asymptotic(m: usize, max_height: usize) -> f64 {
    let x = std::f64::consts::PI / (max_height as f64 + 1.0);
    let ln = m as f64 * 4f64.ln() - (max_height as f64 + 1.0).ln()
        + 2.0 * x.tan().abs().ln()
        + 2.0 * m as f64 * x.cos().abs().ln();
    ln.exp()
}

/// Words of length `n` avoiding `t` given strings of length `n_s`: at least
/// `q^n (1 − n t / q^{n_s})`, clipped at zero.
pub fn avoid_string_lb(q: u32, n: usize, n_s: usize, t: usize) -> Result<BigRational> {
    check_q(q)?;
    let space = rat(pow_big(q as u64, n));
    if n <= n_s {
        return Ok(space);
    }
    let frac = BigRational::new(big((n * t) as u64), pow_big(q as u64, n_s));
    let v = space * (BigRational::one() - frac);
    Ok(if v.is_negative() { BigRational::zero() } else { v })
}

/// Rate of the BCH-based WMU construction of length `2^m − 1` correcting
/// `t` errors, and the order-optimal rate it is compared against.
pub fn bch_wmu_rates(m: u32, t: u32) -> Result<(f64, f64)> {
    if !(2..=30).contains(&m) || t == 0 {
        return Err(invalid(format!("need 2 ≤ m ≤ 30 and t ≥ 1, got m = {m}, t = {t}")));
    }
    let n = ((1u64 << m) - 1) as f64;
    let mt = (m * t) as f64;
    Ok(((n - mt) / n, 1.0 - (5.0 + mt.log2()) / n))
}

/// Lower bound on balanced error-correcting κ-WMU quaternary codes:
/// `(3/32) binom(n, n/2) A(n, d) / ((n−κ+1)(L₀ − L₁ − L₂))`, the ball
/// terms taken over the binary WMU component.
pub fn bewmu_lower(n: usize, kappa: usize, d: usize, a_dist: Option<BigInt>) -> Result<BoundReport> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    let gv = constrained_gv_wmu(2, n, kappa, d)?;
    let a = match a_dist {
        Some(a) => a,
        None => trivial_distance_code_size(n, d).ok_or_else(|| {
            invalid(format!("A(n = {n}, d = {d}) is not known in closed form; supply it"))
        })?,
    };
    let value = BigRational::new(big(3), big(32)) * rat(binomial_big(n, n / 2)) * rat(a)
        / (rat(big((n - kappa + 1) as u64)) * rat(gv.ball));
    Ok(BoundReport::new("bewmu", n)
        .param("n", n)
        .param("kappa", kappa)
        .param("d", d)
        .lower(value))
}
