//! Integer partitions inside an `rows x cols` rectangle.
//!
//! Partitions index the Schubert cycles of a Grassmannian. They are kept in
//! normal form: weakly decreasing, strictly positive parts, no trailing zeros.
//! Operations that need a fixed number of rows pad with zeros internally.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Panics if the parts are not weakly decreasing. Use [`Partition::try_new`]
    /// for untrusted input.
    pub fn new(parts: Vec<usize>) -> Self {
        match Self::try_new(parts) {
            Some(p) => p,
            None => panic!("partition parts must be weakly decreasing"),
        }
    }

    pub fn try_new(mut parts: Vec<usize>) -> Option<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return None;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// The parts zero-padded (or left as is) to exactly `rows` entries.
    ///
    /// Callers guarantee `self.len() <= rows`.
    pub fn padded(&self, rows: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(rows, 0);
        v
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of the box in row `i`, column `j` (0-based).
    fn hook_length(&self, conj: &Partition, i: usize, j: usize) -> usize {
        (self.parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = String;

    fn try_from(parts: Vec<usize>) -> std::result::Result<Self, String> {
        if parts.contains(&0) {
            return Err(format!("partition {parts:?} has a zero part"));
        }
        Partition::try_new(parts.clone())
            .ok_or_else(|| format!("partition {parts:?} is not weakly decreasing"))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// The `rows x cols` rectangle, `r x (n-r)` for the Grassmannian `G(r,n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Self {
        Rectangle { rows, cols }
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// The partition filling the whole rectangle (empty if degenerate).
    pub fn full(&self) -> Partition {
        if self.cols == 0 {
            Partition::empty()
        } else {
            Partition {
                parts: vec![self.cols; self.rows],
            }
        }
    }

    pub fn fits(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.rows && lambda.part(0) <= self.cols
    }

    pub fn check_fits(&self, lambda: &Partition) -> Result<()> {
        if self.fits(lambda) {
            Ok(())
        } else {
            Err(Error::DoesNotFit {
                partition: lambda.parts.clone(),
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// All partitions of `size` fitting in the rectangle, in increasing
    /// lexicographic order.
    pub fn partitions_of(&self, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.rows);
        fill_rows(self.rows, self.cols, size, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Every partition fitting in the rectangle.
    pub fn all_partitions(&self) -> Vec<Partition> {
        (0..=self.area())
            .flat_map(|s| self.partitions_of(s))
            .collect()
    }
}

fn fill_rows(
    rows_left: usize,
    max_part: usize,
    remaining: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if rows_left == 0 || remaining > rows_left * max_part {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        cur.push(p);
        fill_rows(rows_left - 1, p, remaining - p, cur, out);
        cur.pop();
    }
}

/// The complement of `lambda` in `rect`, rotated by 180 degrees.
pub fn complement_in_rectangle(lambda: &Partition, rect: Rectangle) -> Result<Partition> {
    rect.check_fits(lambda)?;
    let padded = lambda.padded(rect.rows);
    Ok(Partition::new(
        padded.iter().rev().map(|&p| rect.cols - p).collect(),
    ))
}

/// The hook `(n-r, 1, ..., 1)` with `r-1` ones.
pub fn hook(r: usize, n: usize) -> Result<Partition> {
    if r < 1 || r >= n {
        return Err(Error::InvalidDimensions(format!(
            "hook needs 1 <= r < n, got r={r}, n={n}"
        )));
    }
    let mut parts = vec![n - r];
    parts.extend(std::iter::repeat_n(1, r - 1));
    Ok(Partition { parts })
}

/// The complement of the hook in `r x (n-r)`: the `(r-1) x (n-r-1)` rectangle.
pub fn hook_complement(r: usize, n: usize) -> Result<Partition> {
    let h = hook(r, n)?;
    complement_in_rectangle(&h, Rectangle::new(r, n - r))
}

/// Jumping sequence `j_i = n - r + i - λ_i` (1-based `i`), with `n = rows + cols`.
pub fn jumping_sequence(lambda: &Partition, rect: Rectangle) -> Result<Vec<usize>> {
    rect.check_fits(lambda)?;
    let shift = rect.cols;
    Ok(lambda
        .padded(rect.rows)
        .iter()
        .enumerate()
        .map(|(i, &p)| shift + i + 1 - p)
        .collect())
}

fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of standard Young tableaux of shape `lambda`, by the hook length
/// formula.
pub fn syt_count(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            hooks *= lambda.hook_length(&conj, i, j);
        }
    }
    let (q, rem) = factorial(lambda.size()).div_rem(&hooks);
    assert!(rem.is_zero(), "hook length quotient is not integral");
    q
}

/// Principal specialization `s_λ(1^k)`: the number of semistandard tableaux of
/// shape `lambda` with entries in `1..=k`, by the hook-content formula.
pub fn schur_at_ones(lambda: &Partition, k: usize) -> BigUint {
    if lambda.len() > k {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row {
            // k + j - i >= 1 since i < len <= k
            num *= k + j - i;
            den *= lambda.hook_length(&conj, i, j);
        }
    }
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "hook-content quotient is not integral");
    q
}
