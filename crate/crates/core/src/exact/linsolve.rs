//! Exact linear systems over ℚ.
//!
//! Rows are first scaled to integers, then reduced to row echelon form with
//! Bareiss fraction-free elimination (every intermediate entry is a minor of
//! the original integer matrix, so the divisions are exact and no fractions
//! appear). Back substitution happens over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{denominator_lcm, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    cols: usize,
}

/// One exact solution plus the dimension of the solution space.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    /// Free variables are set to zero.
    pub values: Vec<Rational>,
    pub nullity: usize,
    pub pivot_columns: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome {
    Solved(Solution),
    NoSolution,
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            SolveOutcome::NoSolution => None,
        }
    }
}

impl LinearSystem {
    /// An empty system in `cols` unknowns.
    pub fn new(cols: usize) -> Self {
        LinearSystem { matrix: Vec::new(), rhs: Vec::new(), cols }
    }

    /// Builds a system from rows; panics if a row length differs from `cols`
    /// or `rhs` has a different length than `matrix`.
    pub fn from_rows(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>, cols: usize) -> Self {
        assert_eq!(matrix.len(), rhs.len(), "row count must equal rhs length");
        assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");
        LinearSystem { matrix, rhs, cols }
    }

    pub fn push_row(&mut self, row: Vec<Rational>, rhs: Rational) {
        assert_eq!(row.len(), self.cols, "ragged matrix");
        self.matrix.push(row);
        self.rhs.push(rhs);
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// `matrix * values - rhs`, row by row.
    pub fn residual(&self, values: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                row.iter()
                    .zip(values)
                    .fold(-b, |acc, (a, v)| acc + a * v)
            })
            .collect()
    }

    pub fn solve(&self) -> SolveOutcome {
        let cols = self.cols;
        // integer augmented matrix
        let mut m: Vec<Vec<BigInt>> = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let l = denominator_lcm(row.iter().chain(std::iter::once(b)));
                row.iter()
                    .chain(std::iter::once(b))
                    .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..m.len() {
                for j in c + 1..=cols {
                    let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    let (q, rem) = v.div_rem(&prev);
                    assert!(rem.is_zero(), "Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }

        if m[r..].iter().any(|row| !row[cols].is_zero()) {
            return SolveOutcome::NoSolution;
        }

        let mut values = vec![Rational::zero(); cols];
        for (i, &c) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::from_integer(m[i][cols].clone());
            for j in c + 1..cols {
                if !m[i][j].is_zero() {
                    acc -= Rational::from_integer(m[i][j].clone()) * &values[j];
                }
            }
            values[c] = acc / Rational::from_integer(m[i][c].clone());
        }
        SolveOutcome::Solved(Solution { values, nullity: cols - pivots.len(), pivot_columns: pivots })
    }
}
