//! Dense exact-rational matrices and rank computation.
//!
//! Rank is computed by fraction-free (Bareiss) elimination: each row is
//! first scaled to integers by its denominator lcm (which cannot change the
//! rank), then eliminated over the integers with exact divisions only.
//! There are no pivot tolerances because nothing is approximate.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for t in 0..self.cols {
                    let a = self.get(r, t);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * other.get(t, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_exact(self)
    }

    /// Entries as `"p/q"` strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(format_rational).collect())
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(format_rational).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Exact rank by fraction-free Gaussian elimination.
pub fn rank_exact(m: &RationalMatrix) -> usize {
    // Scale each row to integers; row scaling preserves rank.
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| {
            let lcm = m
                .row(r)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            m.row(r)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Smallest nonzero pivot keeps the integers modest.
        let pivot = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].abs());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "inexact division in fraction-free elimination");
                a[r][c] = q;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Incrementally maintained column space with exact arithmetic. Feeding
/// vectors one at a time lets callers stop as soon as the rank they are
/// after is reached.
#[derive(Default)]
pub struct RankTracker {
    /// Reduced basis vectors, each with the position of its leading entry.
    basis: Vec<(usize, Vec<Rational>)>,
}

impl RankTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis; returns true when it added a new
    /// dimension.
    pub fn add(&mut self, mut v: Vec<Rational>) -> bool {
        for (lead, b) in &self.basis {
            if v[*lead].is_zero() {
                continue;
            }
            let coeff = v[*lead].clone();
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &coeff * y;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(lead) => {
                let inv = v[lead].clone();
                for x in v.iter_mut() {
                    *x /= &inv;
                }
                self.basis.push((lead, v));
                true
            }
        }
    }
}
