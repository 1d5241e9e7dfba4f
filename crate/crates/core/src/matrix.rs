//! Corrected Ferrers diagrams, difference matrices and the antidiagonal
//! transpose.
//!
//! Matrix entries are addressed 0-based. Diagonal positions of the two
//! diagram types are stars: they hold the value 0 and only the printers
//! treat them differently.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::MalformedMatrix("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Transpose about the antidiagonal: entry `(i', j')` of the result is
    /// entry `(rows−1−j', cols−1−i')` of `self`.
    pub fn antitranspose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.cols {
            for j in 0..self.rows {
                out.set(i, j, self.get(self.rows - 1 - j, self.cols - 1 - i));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::MalformedMatrix(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::MalformedMatrix("shape mismatch".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn total(&self) -> i64 {
        self.data.iter().sum()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == -self.get(j, i)))
    }
}

/// `F(d)`: row `i` has ones in its first `d_i` off-diagonal columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FerrersMatrix(Matrix);

impl FerrersMatrix {
    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows
    }
}

/// `M(d) = F(d)ᵀ − F(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DifferenceMatrix(Matrix);

impl DifferenceMatrix {
    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows
    }

    /// Sums of the first `i` rows for `i = 0..=n`.
    pub fn prefix_row_sums(&self) -> Vec<i64> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.rows + 1);
        out.push(0);
        for s in self.0.row_sums() {
            acc += s;
            out.push(acc);
        }
        out
    }
}

pub fn ferrers(d: &DegreeSequence) -> Result<FerrersMatrix> {
    d.require_fits()?;
    let n = d.len();
    let mut f = Matrix::zeros(n, n);
    for (i, &deg) in d.terms().iter().enumerate() {
        for j in (0..n).filter(|&j| j != i).take(deg as usize) {
            f.set(i, j, 1);
        }
    }
    Ok(FerrersMatrix(f))
}

pub fn difference_matrix(d: &DegreeSequence) -> Result<DifferenceMatrix> {
    let f = ferrers(d)?.0;
    Ok(DifferenceMatrix(f.transpose().sub(&f)?))
}

pub fn antitranspose(m: &Matrix) -> Matrix {
    m.antitranspose()
}

/// `σ(d, i)`: the sum of the first `i` rows of `M(d)`.
pub fn sigma(d: &DegreeSequence, i: usize) -> Result<i64> {
    if i > d.len() {
        return Err(Error::IndexOutOfRange { index: i, max: d.len() });
    }
    Ok(difference_matrix(d)?.prefix_row_sums()[i])
}

/// `σ(d, 0), …, σ(d, n)`.
pub fn sigma_all(d: &DegreeSequence) -> Result<Vec<i64>> {
    Ok(difference_matrix(d)?.prefix_row_sums())
}

/// Checks the two structural facts about nonzero entries of a difference
/// matrix:
///
/// 1. two nonzero entries in one row or column are equal, and so is every
///    entry between them;
/// 2. there is no submatrix `[[a, b], [0, c]]` with `a` and `c` nonzero.
pub fn check_islands(m: &Matrix) -> bool {
    lines_are_runs(m) && !has_staircase_violation(m)
}

fn is_run(line: impl Iterator<Item = i64> + Clone) -> bool {
    let nonzero: Vec<(usize, i64)> = line.clone().enumerate().filter(|&(_, v)| v != 0).collect();
    let (Some(&(first, v)), Some(&(last, _))) = (nonzero.first(), nonzero.last()) else {
        return true;
    };
    line.skip(first).take(last - first + 1).all(|x| x == v)
}

fn lines_are_runs(m: &Matrix) -> bool {
    (0..m.rows).all(|i| is_run(m.row(i).iter().copied()))
        && (0..m.cols).all(|j| is_run((0..m.rows).map(|i| m.get(i, j))))
}

fn has_staircase_violation(m: &Matrix) -> bool {
    // seen[j]: some earlier row is nonzero in column j
    let mut seen = vec![false; m.cols];
    for i in 0..m.rows {
        let mut corner = false;
        for j in 0..m.cols {
            let v = m.get(i, j);
            if v != 0 && corner {
                return true;
            }
            if v == 0 && seen[j] {
                corner = true;
            }
        }
        for (j, s) in seen.iter_mut().enumerate() {
            *s |= m.get(i, j) != 0;
        }
    }
    false
}

/// True when the leading `m×m` and trailing `(n−m)×(n−m)` principal blocks vanish.
pub fn has_block_form(m: &DifferenceMatrix, lead: usize) -> bool {
    let a = &m.0;
    let n = a.rows;
    let zero_block = |range: std::ops::Range<usize>| {
        range.clone().all(|i| range.clone().all(|j| a.get(i, j) == 0))
    };
    lead <= n && zero_block(0..lead) && zero_block(lead..n)
}

fn write_starred(f: &mut fmt::Formatter<'_>, m: &Matrix) -> fmt::Result {
    let width = m.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1).max(1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            if j > 0 {
                write!(f, " ")?;
            }
            if i == j {
                write!(f, "{:>width$}", "*")?;
            } else {
                write!(f, "{:>width$}", m.get(i, j))?;
            }
        }
        writeln!(f)?;
    }
    Ok(())
}

impl fmt::Display for FerrersMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_starred(f, &self.0)
    }
}

impl fmt::Display for DifferenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_starred(f, &self.0)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
