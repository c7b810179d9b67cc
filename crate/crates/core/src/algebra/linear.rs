use std::fmt;

use super::cyclic::CyclicCode;
use super::field::{f2, same_field, Field};
use crate::code::Budget;
use crate::error::{invalid, Error, Result};

/// Dense matrix over a binary extension field, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: &'static Field,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Matrix {
    pub fn new(field: &'static Field, rows: usize, cols: usize, data: Vec<u16>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvalidSymbol {
                symbol: bad,
                q: field.order().min(255) as u8,
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &'static Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: &'static Field, cols: usize, rows: &[Vec<u16>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u16> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Row vector times matrix, `v·M`.
    pub fn left_mul(&self, v: &[u16]) -> Result<Vec<u16>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let f = self.field;
        let mut out = vec![0u16; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(r)) {
                *o ^= f.mul(a, m);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        same_field(self.field, other.field)?;
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            data.extend(other.left_mul(self.row(r))?);
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let (a, b) = (m.get(row, c), m.get(p, c));
                    m.set(row, c, b);
                    m.set(p, c, a);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = f.mul(m.get(row, c), inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let v = m.get(r, c) ^ f.mul(factor, m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M·xᵀ = 0}`, each vector of length `cols`.
    pub fn null_space(&self) -> Vec<Vec<u16>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![0u16; self.cols];
                x[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    // characteristic 2: −a = a
                    x[pc] = m.get(r, fc);
                }
                x
            })
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Linear block code described by both a generator matrix `G` (k×n) and a
/// parity-check matrix `H` (n×(n−k)), so that `c` is a codeword iff `c·H = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: &'static Field,
    n: usize,
    k: usize,
    generator: Matrix,
    parity_check: Matrix,
    systematic: bool,
}

impl LinearCode {
    pub fn from_generator(generator: Matrix) -> Result<LinearCode> {
        let field = generator.field;
        let n = generator.cols;
        let k = generator.rank();
        if k != generator.rows {
            return Err(invalid("generator matrix rows are linearly dependent"));
        }
        let h_cols = generator.null_space();
        let parity_check = columns_to_matrix(field, n, &h_cols);
        Ok(LinearCode {
            field,
            n,
            k,
            generator,
            parity_check,
            systematic: false,
        })
    }

    /// From an n×r parity-check matrix; `k = n − rank(H)`.
    pub fn from_parity_check(parity_check: Matrix) -> Result<LinearCode> {
        let field = parity_check.field;
        let n = parity_check.rows;
        let g_rows = parity_check.transpose().null_space();
        let k = g_rows.len();
        let generator = Matrix::from_rows(field, n, &g_rows)?;
        Ok(LinearCode {
            field,
            n,
            k,
            generator,
            parity_check,
            systematic: false,
        })
    }

    /// `G = [I | P]` and `H = [P ; I]` from the k×(n−k) matrix `P`.
    pub fn systematic(parity: Matrix) -> Result<LinearCode> {
        let field = parity.field;
        let (k, r) = (parity.rows, parity.cols);
        let n = k + r;
        let mut generator = Matrix::zeros(field, k, n);
        let mut parity_check = Matrix::zeros(field, n, r);
        for i in 0..k {
            generator.set(i, i, 1);
            for j in 0..r {
                generator.set(i, k + j, parity.get(i, j));
                parity_check.set(i, j, parity.get(i, j));
            }
        }
        for j in 0..r {
            parity_check.set(k + j, j, 1);
        }
        Ok(LinearCode {
            field,
            n,
            k,
            generator,
            parity_check,
            systematic: true,
        })
    }

    pub fn from_cyclic(code: &CyclicCode) -> LinearCode {
        let rows: Vec<Vec<u16>> = (0..code.k())
            .map(|i| {
                let mut msg = vec![0u16; code.k()];
                msg[i] = 1;
                code.encode(&msg).expect("message has length k")
            })
            .collect();
        LinearCode {
            field: code.field(),
            n: code.n(),
            k: code.k(),
            generator: Matrix::from_rows(code.field(), code.n(), &rows).expect("rows have length n"),
            parity_check: code.parity_check(),
            systematic: false,
        }
    }

    /// Binary shortened Hamming code `[k + r, k, 3]` in systematic form.
    ///
    /// The rows of `P` are the first `k` vectors of `F_2^r` with weight at
    /// least two, in increasing numeric order, so every row of `H` is
    /// distinct and nonzero.
    pub fn shortened_hamming(r: usize, k: usize) -> Result<LinearCode> {
        if !(2..=16).contains(&r) {
            return Err(invalid(format!("redundancy r = {r} outside 2..=16")));
        }
        let available = (1usize << r) - 1 - r;
        if k == 0 || k > available {
            return Err(invalid(format!(
                "dimension k = {k} must be in 1..={available} for r = {r}"
            )));
        }
        let rows: Vec<Vec<u16>> = (1u32..(1 << r))
            .filter(|v| v.count_ones() >= 2)
            .take(k)
            .map(|v| (0..r).map(|j| ((v >> (r - 1 - j)) & 1) as u16).collect())
            .collect();
        LinearCode::systematic(Matrix::from_rows(f2(), r, &rows)?)
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    /// Whether the message occupies the first `k` positions of every codeword.
    pub fn is_systematic(&self) -> bool {
        self.systematic
    }

    pub fn encode(&self, msg: &[u16]) -> Result<Vec<u16>> {
        check_symbols(self.field, msg)?;
        self.generator.left_mul(msg)
    }

    /// Parity part of a systematic codeword.
    pub fn parity_of(&self, msg: &[u16]) -> Result<Vec<u16>> {
        if !self.systematic {
            return Err(invalid("code is not in systematic form"));
        }
        Ok(self.encode(msg)?[self.k..].to_vec())
    }

    pub fn syndrome(&self, word: &[u16]) -> Result<Vec<u16>> {
        check_symbols(self.field, word)?;
        self.parity_check.left_mul(word)
    }

    pub fn is_codeword(&self, word: &[u16]) -> Result<bool> {
        Ok(self.syndrome(word)?.iter().all(|&s| s == 0))
    }

    /// All codewords, in lexicographic order of their messages.
    pub fn codewords(&self, budget: Budget) -> Result<Vec<Vec<u16>>> {
        let q = self.field.order() as u128;
        budget.check(q.pow(self.k as u32))?;
        let mut out = Vec::new();
        for_each_message(self.field.order() as u16, self.k, |m| {
            out.push(self.generator.left_mul(m).expect("message has length k"));
        });
        Ok(out)
    }

    /// Minimum nonzero codeword weight, by enumerating at most 2^24 codewords.
    pub fn min_distance_exhaustive(&self) -> Result<usize> {
        min_weight(self.field, self.k, |m| {
            self.generator.left_mul(m).expect("message has length k")
        })
    }
}

fn columns_to_matrix(field: &'static Field, n: usize, cols: &[Vec<u16>]) -> Matrix {
    let mut m = Matrix::zeros(field, n, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

pub(crate) fn check_symbols(field: &Field, word: &[u16]) -> Result<()> {
    match word.iter().find(|&&c| !field.contains(c)) {
        Some(&bad) => Err(Error::InvalidSymbol {
            symbol: bad,
            q: field.order().min(255) as u8,
        }),
        None => Ok(()),
    }
}

/// Calls `f` on every vector of `{0..q}^k` in lexicographic order.
pub(crate) fn for_each_message(q: u16, k: usize, mut f: impl FnMut(&[u16])) {
    let mut m = vec![0u16; k];
    loop {
        f(&m);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            m[i] += 1;
            if m[i] < q {
                break;
            }
            m[i] = 0;
        }
    }
}

pub(crate) const EXHAUSTIVE_LIMIT: u128 = 1 << 24;

pub(crate) fn min_weight(
    field: &Field,
    k: usize,
    encode: impl Fn(&[u16]) -> Vec<u16>,
) -> Result<usize> {
    let total = (field.order() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > EXHAUSTIVE_LIMIT {
        return Err(Error::BudgetExceeded {
            required: format!("{total} codewords (supply the distance instead)"),
            budget: EXHAUSTIVE_LIMIT as usize,
        });
    }
    if k == 0 {
        return Err(Error::DistanceUndefined);
    }
    let mut best = usize::MAX;
    for_each_message(field.order() as u16, k, |m| {
        if m.iter().all(|&x| x == 0) {
            return;
        }
        let w = encode(m).iter().filter(|&&x| x != 0).count();
        best = best.min(w);
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::f4;

    #[test]
    fn systematic_generator_annihilates_parity_check() {
        let code = LinearCode::shortened_hamming(5, 18).unwrap();
        assert_eq!((code.n(), code.k()), (23, 18));
        assert!(code.generator().mul(code.parity_check()).unwrap().is_zero());
        assert_eq!(code.min_distance_exhaustive().unwrap(), 3);
        let msg: Vec<u16> = (0..18).map(|i| (i % 3 == 0) as u16).collect();
        let c = code.encode(&msg).unwrap();
        assert_eq!(&c[..18], &msg[..]);
        assert!(code.is_codeword(&c).unwrap());
    }

    #[test]
    fn parity_check_round_trip() {
        let g = Matrix::from_rows(f4(), 3, &[vec![1, 1, 1]]).unwrap();
        let code = LinearCode::from_generator(g).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(code.parity_check().cols(), 2);
        let back = LinearCode::from_parity_check(code.parity_check().clone()).unwrap();
        assert_eq!(back.k(), 1);
        assert!(back.is_codeword(&[2, 2, 2]).unwrap());
        assert!(!back.is_codeword(&[2, 2, 3]).unwrap());
        assert_eq!(code.min_distance_exhaustive().unwrap(), 3);
    }

    #[test]
    fn dependent_generator_rejected() {
        let g = Matrix::from_rows(f2(), 3, &[vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        assert!(LinearCode::from_generator(g).is_err());
    }

    #[test]
    fn messages_enumerate_in_lex_order() {
        let mut seen = Vec::new();
        for_each_message(3, 2, |m| seen.push(m.to_vec()));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
        let mut count = 0;
        for_each_message(2, 0, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn shortened_hamming_parameter_checks() {
        assert!(LinearCode::shortened_hamming(3, 5).is_err());
        assert!(LinearCode::shortened_hamming(3, 4).is_ok());
        assert!(LinearCode::shortened_hamming(3, 0).is_err());
    }
}
