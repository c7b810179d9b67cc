//! Systematic Reed–Solomon (MDS) codec over GF(2^t).
//!
//! Codewords are evaluations of the polynomial of degree < s that
//! interpolates the message at the first `s` evaluation points α^0..α^{s−1};
//! the remaining `r − s` symbols are its values at α^s..α^{r−1}. Decoding is
//! Berlekamp–Welch, correcting up to ⌊(r−s)/2⌋ symbol errors.

use super::field::Field;
use super::linear::check_symbols;
use super::poly::Polynomial;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug)]
pub struct ReedSolomon {
    field: &'static Field,
    r: usize,
    s: usize,
    points: Vec<u16>,
}

impl ReedSolomon {
    pub fn new(field: &'static Field, r: usize, s: usize) -> Result<ReedSolomon> {
        let max = field.order() as usize - 1;
        if r == 0 || r > max {
            return Err(invalid(format!(
                "length r = {r} must be in 1..={max} over GF(2^{})",
                field.t()
            )));
        }
        if s == 0 || s > r {
            return Err(invalid(format!("dimension s = {s} must be in 1..={r}")));
        }
        let points = (0..r).map(|i| field.alpha_pow(i)).collect();
        Ok(ReedSolomon {
            field,
            r,
            s,
            points,
        })
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn length(&self) -> usize {
        self.r
    }

    pub fn dimension(&self) -> usize {
        self.s
    }

    pub fn correctable(&self) -> usize {
        (self.r - self.s) / 2
    }

    pub fn encode(&self, msg: &[u16]) -> Result<Vec<u16>> {
        if msg.len() != self.s {
            return Err(Error::LengthMismatch {
                expected: self.s,
                found: msg.len(),
            });
        }
        check_symbols(self.field, msg)?;
        let p = self.interpolate(&self.points[..self.s], msg);
        let mut out = msg.to_vec();
        out.extend(self.points[self.s..].iter().map(|&x| p.eval(x)));
        Ok(out)
    }

    /// Recovers the message when at most ⌊(r−s)/2⌋ symbols are wrong.
    pub fn decode(&self, received: &[u16]) -> Result<Vec<u16>> {
        if received.len() != self.r {
            return Err(Error::LengthMismatch {
                expected: self.r,
                found: received.len(),
            });
        }
        check_symbols(self.field, received)?;
        let e = self.correctable();
        let p = self.berlekamp_welch(received, e)?;
        let agree = self
            .points
            .iter()
            .zip(received)
            .filter(|(&x, &y)| p.eval(x) == y)
            .count();
        if agree < self.r - e {
            return Err(Error::DecodingFailure(format!(
                "more than {e} symbol errors"
            )));
        }
        Ok(self.points[..self.s].iter().map(|&x| p.eval(x)).collect())
    }

    fn interpolate(&self, xs: &[u16], ys: &[u16]) -> Polynomial {
        let f = self.field;
        let mut acc = Polynomial::zero(f);
        for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
            if yi == 0 {
                continue;
            }
            let mut basis = Polynomial::one(f);
            let mut denom = 1u16;
            for (j, &xj) in xs.iter().enumerate() {
                if j == i {
                    continue;
                }
                basis = basis
                    .mul(&Polynomial::new(f, vec![xj, 1]).expect("field elements"))
                    .expect("same field");
                denom = f.mul(denom, f.add(xi, xj));
            }
            let scale = f.mul(yi, f.inv(denom).expect("points are distinct"));
            acc = acc.add(&basis.scale(scale)).expect("same field");
        }
        acc
    }

    // Solve Q(x_i) = y_i·E(x_i) with deg Q < s + e and E monic of degree e,
    // then P = Q / E.
    fn berlekamp_welch(&self, y: &[u16], e: usize) -> Result<Polynomial> {
        let f = self.field;
        let nq = self.s + e;
        let cols = nq + e;
        let mut rows: Vec<Vec<u16>> = Vec::with_capacity(self.r);
        for (&x, &yi) in self.points.iter().zip(y) {
            let mut row = Vec::with_capacity(cols + 1);
            let mut xp = 1u16;
            for _ in 0..nq {
                row.push(xp);
                xp = f.mul(xp, x);
            }
            let mut xp = 1u16;
            for _ in 0..e {
                // −y·x^l, char 2
                row.push(f.mul(yi, xp));
                xp = f.mul(xp, x);
            }
            row.push(f.mul(yi, f.pow(x, e as u64)));
            rows.push(row);
        }
        let sol = solve(f, rows, cols)
            .ok_or_else(|| Error::DecodingFailure("inconsistent key equation".into()))?;
        let q = Polynomial::new(f, sol[..nq].to_vec())?;
        let mut ecoef = sol[nq..].to_vec();
        ecoef.push(1);
        let ep = Polynomial::new(f, ecoef)?;
        let (p, rem) = q.div_rem(&ep)?;
        if !rem.is_zero() || p.degree().is_some_and(|d| d >= self.s) {
            return Err(Error::DecodingFailure(format!(
                "more than {e} symbol errors"
            )));
        }
        Ok(p)
    }
}

/// Gaussian elimination on an augmented system; free variables are zero.
fn solve(f: &Field, mut rows: Vec<Vec<u16>>, cols: usize) -> Option<Vec<u16>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = f.mul(*v, inv);
        }
        for i in 0..rows.len() {
            let factor = rows[i][c];
            if i == r || factor == 0 {
                continue;
            }
            for j in 0..=cols {
                let t = f.mul(factor, rows[r][j]);
                rows[i][j] ^= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| row[cols] != 0) {
        return None;
    }
    let mut x = vec![0u16; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::gf;
    use crate::algebra::linear::for_each_message;

    #[test]
    fn rate_one_is_identity() {
        let rs = ReedSolomon::new(gf(3).unwrap(), 5, 5).unwrap();
        let m = [1, 0, 7, 3, 2];
        assert_eq!(rs.encode(&m).unwrap(), m.to_vec());
        assert_eq!(rs.decode(&m).unwrap(), m.to_vec());
    }

    #[test]
    fn exhaustive_round_trip_4_2() {
        let rs = ReedSolomon::new(gf(4).unwrap(), 4, 2).unwrap();
        let mut count = 0;
        for_each_message(16, 2, |m| {
            let c = rs.encode(m).unwrap();
            assert_eq!(&c[..2], m);
            assert_eq!(rs.decode(&c).unwrap(), m.to_vec());
            count += 1;
        });
        assert_eq!(count, 256);
    }

    #[test]
    fn single_error_corrected_every_position() {
        let rs = ReedSolomon::new(gf(4).unwrap(), 4, 2).unwrap();
        for_each_message(16, 2, |m| {
            let c = rs.encode(m).unwrap();
            for pos in 0..4 {
                for delta in 1..16u16 {
                    let mut bad = c.clone();
                    bad[pos] ^= delta;
                    assert_eq!(rs.decode(&bad).unwrap(), m.to_vec());
                }
            }
        });
    }

    #[test]
    fn minimum_distance_is_mds() {
        let rs = ReedSolomon::new(gf(3).unwrap(), 6, 3).unwrap();
        let mut best = usize::MAX;
        for_each_message(8, 3, |m| {
            if m.iter().any(|&x| x != 0) {
                best = best.min(rs.encode(m).unwrap().iter().filter(|&&x| x != 0).count());
            }
        });
        assert_eq!(best, 6 - 3 + 1);
    }

    #[test]
    fn parameter_errors() {
        let f = gf(2).unwrap();
        assert!(ReedSolomon::new(f, 4, 2).is_err());
        assert!(ReedSolomon::new(f, 3, 4).is_err());
        assert!(ReedSolomon::new(f, 3, 0).is_err());
    }

    #[test]
    fn too_many_errors_detected_or_miscorrected_never_panics() {
        let rs = ReedSolomon::new(gf(4).unwrap(), 7, 3).unwrap();
        let c = rs.encode(&[1, 2, 3]).unwrap();
        let mut bad = c.clone();
        for b in bad.iter_mut().take(3) {
            *b ^= 5;
        }
        let _ = rs.decode(&bad);
    }
}
