//! Matroids realized by exact rational matrices.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{k_subsets, Matroid};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions("matrix must be non-empty".into()));
        }
        if entries.iter().any(|row| row.len() != cols) {
            return Err(Error::InvalidDimensions("ragged matrix rows".into()));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_integers(entries: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Parses entries written as integers or `p/q` fractions.
    pub fn parse(entries: &[Vec<String>]) -> Result<Self> {
        let mut out = Vec::with_capacity(entries.len());
        for row in entries {
            let mut parsed = Vec::with_capacity(row.len());
            for s in row {
                parsed.push(parse_rational(s)?);
            }
            out.push(parsed);
        }
        Self::new(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    /// Each row scaled by the lcm of its denominators. Scaling rows does not
    /// change which minors vanish.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|row| {
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    /// Rank, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::BadMatrixEntry(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

/// Bareiss elimination with row pivoting; returns the rank.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// The matroid of the column vectors of `a`: bases are the `r`-subsets of
/// columns with non-zero maximal minor.
pub fn from_rational_matrix(a: &RationalMatrix, r: usize) -> Result<Matroid> {
    if a.rows != r {
        return Err(Error::InvalidDimensions(format!(
            "matrix has {} rows, expected {r}",
            a.rows
        )));
    }
    let ints = a.integer_rows();
    let rank = bareiss_rank(ints.clone());
    if rank < r {
        return Err(Error::RankDeficient { rank, expected: r });
    }
    let n = a.cols;
    super::check_ground_set(n)?;
    let mut masks = Vec::new();
    for mask in k_subsets(n, r) {
        let cols: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        let minor: Vec<Vec<BigInt>> = ints
            .iter()
            .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
            .collect();
        if !bareiss_det(minor).is_zero() {
            masks.push(mask);
        }
    }
    Ok(Matroid::from_masks_unchecked(n, r, masks))
}
