//! Lattice path matroids and the Schubert matroid families built from them.

use super::Matroid;
use crate::error::{Error, Result};

fn parse_steps(path: &str) -> Result<Vec<bool>> {
    path.chars()
        .map(|c| match c {
            'N' | 'n' => Ok(true),
            'E' | 'e' => Ok(false),
            other => Err(Error::BadStepString(format!(
                "{path:?}: unexpected step {other:?}"
            ))),
        })
        .collect()
}

/// Labels (1-indexed) of the north steps.
fn north_labels(steps: &[bool]) -> Vec<usize> {
    steps
        .iter()
        .enumerate()
        .filter(|(_, &north)| north)
        .map(|(i, _)| i + 1)
        .collect()
}

/// The lattice path matroid `M[P,Q]` for north-east paths `P` (upper) and `Q`
/// (lower) from `(0,0)` to `(n-r, r)`.
///
/// Bases are the sets `{b_1 < ... < b_r}` with `p_i <= b_i <= q_i`, where `p_i`
/// and `q_i` label the `i`-th north step of `P` and `Q`.
pub fn lattice_path_matroid(upper: &str, lower: &str) -> Result<Matroid> {
    let p = parse_steps(upper)?;
    let q = parse_steps(lower)?;
    if p.len() != q.len() || p.is_empty() {
        return Err(Error::BadStepString(format!(
            "paths {upper:?} and {lower:?} must be non-empty and of equal length"
        )));
    }
    let (mut hp, mut hq) = (0usize, 0usize);
    for (i, (&a, &b)) in p.iter().zip(&q).enumerate() {
        hp += a as usize;
        hq += b as usize;
        if hp < hq {
            return Err(Error::PathsCross(i + 1));
        }
    }
    if hp != hq {
        return Err(Error::BadStepString(format!(
            "paths {upper:?} and {lower:?} end at different heights"
        )));
    }
    let n = p.len();
    let lo = north_labels(&p);
    let hi = north_labels(&q);
    let mut masks = Vec::new();
    interval_bases(&lo, &hi, 0, 0, 0, &mut masks);
    Matroid::from_masks(n, lo.len(), masks)
}

fn interval_bases(
    lo: &[usize],
    hi: &[usize],
    i: usize,
    prev: usize,
    mask: u64,
    out: &mut Vec<u64>,
) {
    if i == lo.len() {
        out.push(mask);
        return;
    }
    for b in lo[i].max(prev + 1)..=hi[i] {
        interval_bases(lo, hi, i + 1, b, mask | 1 << (b - 1), out);
    }
}

/// The Schubert matroid `SM_I` on `[n]`: bases `{b_1 < ... < b_r}` with
/// `b_j <= I_j`.
pub fn schubert_matroid(n: usize, index_set: &[usize]) -> Result<Matroid> {
    let mut set = index_set.to_vec();
    set.sort_unstable();
    if set.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::BadStepString(format!(
            "index set {index_set:?} has repeated elements"
        )));
    }
    if let Some(&e) = set.iter().find(|&&e| e == 0 || e > n) {
        return Err(Error::ElementOutOfRange { element: e, n });
    }
    let r = set.len();
    let upper: String = (0..n).map(|i| if i < r { 'N' } else { 'E' }).collect();
    let lower: String = (1..=n)
        .map(|i| {
            if set.binary_search(&i).is_ok() {
                'N'
            } else {
                'E'
            }
        })
        .collect();
    lattice_path_matroid(&upper, &lower)
}

/// `U_{r,n} = SM_{ {n-r+1, ..., n} }`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n == 0 || r > n {
        return Err(Error::InvalidDimensions(format!(
            "U_(r,n) needs 0 <= r <= n and n >= 1, got r={r}, n={n}"
        )));
    }
    let set: Vec<usize> = (n - r + 1..=n).collect();
    schubert_matroid(n, &set)
}

/// The minimal matroid `T_{r,n} = SM_{ {2, ..., r, n} }`: `U_{r,r+1}` on
/// `{1, ..., r+1}` with `r+2, ..., n` added parallel to `r+1`.
pub fn minimal(r: usize, n: usize) -> Result<Matroid> {
    if r < 1 || r >= n {
        return Err(Error::InvalidDimensions(format!(
            "T_(r,n) needs 1 <= r < n, got r={r}, n={n}"
        )));
    }
    let mut set: Vec<usize> = (2..=r).collect();
    set.push(n);
    schubert_matroid(n, &set)
}

/// The panhandle matroid `Pan_{r,s,n} = SM_{ {s-r+2, ..., s, n} }`.
pub fn panhandle(r: usize, s: usize, n: usize) -> Result<Matroid> {
    if r < 1 || r > s || s >= n {
        return Err(Error::InvalidDimensions(format!(
            "Pan_(r,s,n) needs 1 <= r <= s < n, got r={r}, s={s}, n={n}"
        )));
    }
    let mut set: Vec<usize> = (s + 2 - r..=s).collect();
    set.push(n);
    schubert_matroid(n, &set)
}
