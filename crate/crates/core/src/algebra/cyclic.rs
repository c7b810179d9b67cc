use super::field::{f2, f4, Field};
use super::linear::{check_symbols, for_each_message, min_weight, LinearCode, Matrix};
use super::poly::Polynomial;
use crate::code::Budget;
use crate::error::{invalid, Error, Result};

/// Cyclic code of length `n` generated by `g(x)`, with `g | x^n − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    k: usize,
    generator: Polynomial,
    check: Polynomial,
}

impl CyclicCode {
    /// `g` is scaled to be monic.
    pub fn new(n: usize, generator: Polynomial) -> Result<CyclicCode> {
        let field = generator.field();
        let deg = generator
            .degree()
            .ok_or_else(|| invalid("generator polynomial is zero"))?;
        if n == 0 || deg > n {
            return Err(invalid(format!("deg g = {deg} exceeds length n = {n}")));
        }
        let generator = generator.scale(field.inv(generator.leading()).expect("nonzero"));
        let (check, rem) = Polynomial::x_pow_minus_one(field, n).div_rem(&generator)?;
        if !rem.is_zero() {
            return Err(invalid(format!("g(x) = {generator} does not divide x^{n} - 1")));
        }
        Ok(CyclicCode {
            n,
            k: n - deg,
            generator,
            check,
        })
    }

    /// Binary Hamming [7,4,3] with g = 1 + x + x³.
    pub fn hamming_7_4() -> CyclicCode {
        CyclicCode::new(7, Polynomial::new(f2(), vec![1, 1, 0, 1]).unwrap()).unwrap()
    }

    /// Binary repetition [n,1,n].
    pub fn repetition(n: usize) -> Result<CyclicCode> {
        if n == 0 {
            return Err(invalid("repetition length must be positive"));
        }
        CyclicCode::new(n, Polynomial::new(f2(), vec![1; n])?)
    }

    /// Binary even-weight [n,n−1,2] with g = 1 + x.
    pub fn parity(n: usize) -> Result<CyclicCode> {
        if n < 2 {
            return Err(invalid("parity code needs n >= 2"));
        }
        CyclicCode::new(n, Polynomial::new(f2(), vec![1, 1])?)
    }

    /// The F4 [3,1,3] code {(c,c,c)}, g = 1 + x + x².
    pub fn f4_repetition_3() -> CyclicCode {
        CyclicCode::new(3, Polynomial::new(f4(), vec![1, 1, 1]).unwrap()).unwrap()
    }

    /// The built-in small-code library, by name.
    pub fn builtin(name: &str) -> Result<CyclicCode> {
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "hamming74" | "hamming-7-4" => Ok(CyclicCode::hamming_7_4()),
            "f4-313" | "f4-repetition-3" => Ok(CyclicCode::f4_repetition_3()),
            _ => {
                if let Some(n) = lower.strip_prefix("repetition") {
                    return CyclicCode::repetition(parse_len(n)?);
                }
                if let Some(n) = lower.strip_prefix("parity") {
                    return CyclicCode::parity(parse_len(n)?);
                }
                Err(invalid(format!("unknown built-in cyclic code {name:?}")))
            }
        }
    }

    /// Every built-in code up to length 16, paired with its name.
    pub fn builtins() -> Vec<(String, CyclicCode)> {
        let mut out = vec![
            ("hamming74".to_string(), CyclicCode::hamming_7_4()),
            ("f4-313".to_string(), CyclicCode::f4_repetition_3()),
        ];
        for n in 1..=16 {
            out.push((format!("repetition{n}"), CyclicCode::repetition(n).unwrap()));
        }
        for n in 2..=16 {
            out.push((format!("parity{n}"), CyclicCode::parity(n).unwrap()));
        }
        out
    }

    pub fn field(&self) -> &'static Field {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    /// `h(x) = (x^n − 1)/g(x)`.
    pub fn check_polynomial(&self) -> &Polynomial {
        &self.check
    }

    /// `a(x)·g(x)` as a length-n coefficient vector.
    pub fn encode(&self, msg: &[u16]) -> Result<Vec<u16>> {
        if msg.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                found: msg.len(),
            });
        }
        let a = Polynomial::new(self.field(), msg.to_vec())?;
        Ok(a.mul(&self.generator)?.to_vec(self.n))
    }

    /// The n×(n−k) parity-check matrix whose column `j` holds the reversed
    /// check polynomial `h_k, …, h_0` starting at row `j`.
    pub fn parity_check(&self) -> Matrix {
        let r = self.n - self.k;
        let mut h = Matrix::zeros(self.field(), self.n, r);
        for j in 0..r {
            for i in 0..=self.k {
                h.set(j + i, j, self.check.coeff(self.k - i));
            }
        }
        h
    }

    pub fn syndrome(&self, word: &[u16]) -> Result<Vec<u16>> {
        check_symbols(self.field(), word)?;
        self.parity_check().left_mul(word)
    }

    pub fn is_codeword(&self, word: &[u16]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: word.len(),
            });
        }
        check_symbols(self.field(), word)?;
        let c = Polynomial::new(self.field(), word.to_vec())?;
        self.generator.divides(&c)
    }

    pub fn contains_all_ones(&self) -> bool {
        self.is_codeword(&vec![1; self.n]).unwrap_or(false)
    }

    /// All codewords, in lexicographic order of their messages.
    pub fn codewords(&self, budget: Budget) -> Result<Vec<Vec<u16>>> {
        let q = self.field().order() as u128;
        budget.check(q.checked_pow(self.k as u32).unwrap_or(u128::MAX))?;
        let mut out = Vec::new();
        for_each_message(self.field().order() as u16, self.k, |m| {
            out.push(self.encode(m).expect("message has length k"));
        });
        Ok(out)
    }

    pub fn min_distance_exhaustive(&self) -> Result<usize> {
        min_weight(self.field(), self.k, |m| self.encode(m).expect("message has length k"))
    }

    /// Systematic encoder for the same code with coordinates permuted so the
    /// message comes first: `(m, −(x^{n−k}m(x) mod g))`.
    pub fn systematic_form(&self) -> Result<LinearCode> {
        let r = self.n - self.k;
        let field = self.field();
        let rows: Vec<Vec<u16>> = (0..self.k)
            .map(|i| {
                let rem = Polynomial::monomial(field, r + i, 1)
                    .rem(&self.generator)
                    .expect("generator is nonzero");
                rem.to_vec(r)
            })
            .collect();
        LinearCode::systematic(Matrix::from_rows(field, r, &rows)?)
    }
}

fn parse_len(s: &str) -> Result<usize> {
    s.trim_start_matches('-')
        .parse()
        .map_err(|_| invalid(format!("bad code length {s:?}")))
}

/// Cyclic shift by one position to the right.
pub fn cyclic_shift(word: &[u16]) -> Vec<u16> {
    let mut v = word.to_vec();
    v.rotate_right(1);
    v
}
