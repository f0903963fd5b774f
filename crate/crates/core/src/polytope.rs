//! Exact volume of matroid base polytopes through Ehrhart interpolation.
//!
//! This module is an oracle for the degree/volume identity and deliberately
//! shares nothing with the Chow ring code: it counts lattice points of the
//! dilates `tP(M)` using the rank inequalities directly, then reads the
//! normalized volume off the interpolated Ehrhart polynomial.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{classify, Matroid};

/// Default bound on the ground set size for lattice point enumeration.
pub const DEFAULT_DESK_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeReport {
    /// `n - κ(M)`.
    pub dim: usize,
    /// `|tP ∩ Z^n|` for `t = 0..=dim`.
    pub counts: Vec<BigUint>,
    /// Ehrhart polynomial coefficients, ascending degree.
    pub ehrhart: Vec<BigRational>,
    /// Leading coefficient times `dim!`.
    pub normalized_volume: BigUint,
}

#[derive(Serialize)]
struct VolumeReportRepr {
    dim: usize,
    counts: Vec<String>,
    ehrhart: Vec<String>,
    volume: String,
}

impl Serialize for VolumeReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VolumeReportRepr {
            dim: self.dim,
            counts: self.counts.iter().map(ToString::to_string).collect(),
            ehrhart: self.ehrhart.iter().map(ToString::to_string).collect(),
            volume: self.normalized_volume.to_string(),
        }
        .serialize(s)
    }
}

impl VolumeReport {
    /// Evaluates the Ehrhart polynomial at `t`.
    pub fn evaluate(&self, t: u64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.ehrhart
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }
}

fn check_limit(m: &Matroid, limit: usize) -> Result<()> {
    let n = m.ground_set_size();
    if n > limit {
        return Err(Error::DeskScaleExceeded { n, limit });
    }
    Ok(())
}

/// Indicator vectors of the bases.
pub fn polytope_vertices(m: &Matroid) -> Result<Vec<Vec<u8>>> {
    let n = m.ground_set_size();
    let vertices: Vec<Vec<u8>> = m
        .bases()
        .iter()
        .map(|b| {
            let mut v = vec![0u8; n];
            for &e in b {
                v[e - 1] = 1;
            }
            v
        })
        .collect();
    let dim = affine_dimension(&vertices);
    let expected = n - classify(m).kappa;
    if dim != expected {
        return Err(Error::InternalConsistency(format!(
            "base polytope has affine dimension {dim}, expected {expected}"
        )));
    }
    Ok(vertices)
}

/// Dimension of the affine hull of a set of 0/1 points.
pub fn affine_dimension(points: &[Vec<u8>]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let mut rows: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(first)
                .map(|(&a, &b)| BigRational::from_integer(BigInt::from(a as i32 - b as i32)))
                .collect()
        })
        .collect();
    let cols = first.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Number of integer points in `t · P(M)`: vectors `y` with `0 <= y_i <= t`,
/// `Σ y = t·r` and `Σ_{i∈A} y_i <= t·rank(A)` for every subset `A`.
pub fn lattice_points(m: &Matroid, t: u64, limit: usize) -> Result<BigUint> {
    check_limit(m, limit)?;
    Ok(BigUint::from(count_points(m, t)))
}

fn count_points(m: &Matroid, t: u64) -> u64 {
    let n = m.ground_set_size();
    let caps: Vec<u64> = m.rank_table().iter().map(|&rk| t * rk as u64).collect();
    // caps of the suffix sets {i, ..., n-1}
    let suffix_caps: Vec<u64> = (0..=n)
        .map(|i| caps[(((1u64 << n) - 1) & !((1u64 << i) - 1)) as usize])
        .collect();
    let mut sums = vec![0u64; 1 << n];
    let mut walk = PointWalk {
        n,
        t,
        caps: &caps,
        suffix_caps: &suffix_caps,
        sums: &mut sums,
        count: 0,
    };
    walk.assign(0, t * m.rank() as u64);
    walk.count
}

struct PointWalk<'a> {
    n: usize,
    t: u64,
    caps: &'a [u64],
    suffix_caps: &'a [u64],
    /// `sums[A]` for subsets `A` of the assigned prefix.
    sums: &'a mut Vec<u64>,
    count: u64,
}

impl PointWalk<'_> {
    fn assign(&mut self, i: usize, remaining: u64) {
        if i == self.n {
            if remaining == 0 {
                self.count += 1;
            }
            return;
        }
        if remaining > self.suffix_caps[i] {
            return;
        }
        let lo = if i + 1 == self.n { remaining } else { 0 };
        let hi = remaining.min(self.t);
        let bit = 1usize << i;
        'values: for y in lo..=hi {
            // every subset whose largest element is i
            for prefix in 0..bit {
                let s = self.sums[prefix] + y;
                if s > self.caps[prefix | bit] {
                    continue 'values;
                }
                self.sums[prefix | bit] = s;
            }
            self.assign(i + 1, remaining - y);
        }
    }
}

/// Interpolates the degree-`dim` polynomial through `values[t]`, `t = 0..=dim`,
/// returning ascending monomial coefficients.
fn interpolate(values: &[BigUint]) -> Vec<BigRational> {
    let d = values.len() - 1;
    // forward differences Δ^k f(0)
    let mut diffs: Vec<BigInt> = values.iter().map(|v| BigInt::from(v.clone())).collect();
    let mut newton = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // f(t) = Σ_k Δ^k f(0) · t(t-1)...(t-k+1) / k!
    let mut coeffs = vec![BigRational::zero(); d + 1];
    let mut falling = vec![BigInt::one()]; // coefficients of t(t-1)...(t-k+1)
    let mut k_fact = BigInt::one();
    for (k, dk) in newton.iter().enumerate() {
        if k > 0 {
            k_fact *= BigInt::from(k);
            let shift = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (j, c) in falling.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * &shift;
            }
            falling = next;
        }
        for (j, c) in falling.iter().enumerate() {
            coeffs[j] += BigRational::new(dk * c, k_fact.clone());
        }
    }
    coeffs
}

/// Lattice point counts, Ehrhart polynomial and normalized volume of `P(M)`.
pub fn volume_report(m: &Matroid, limit: usize) -> Result<VolumeReport> {
    check_limit(m, limit)?;
    let dim = m.ground_set_size() - classify(m).kappa;
    let counts: Vec<BigUint> = (0..=dim as u64)
        .map(|t| BigUint::from(count_points(m, t)))
        .collect();
    let ehrhart = interpolate(&counts);
    let check_t = dim as u64 + 1;
    let extra = BigRational::from_integer(BigInt::from(count_points(m, check_t)));
    let report_probe = VolumeReport {
        dim,
        counts: counts.clone(),
        ehrhart: ehrhart.clone(),
        normalized_volume: BigUint::zero(),
    };
    if report_probe.evaluate(check_t) != extra {
        return Err(Error::InternalConsistency(format!(
            "Ehrhart polynomial of degree {dim} mispredicts the count at t = {check_t}"
        )));
    }
    let leading = ehrhart[dim].clone() * BigRational::from_integer(factorial(dim));
    if !leading.is_integer() || !leading.is_positive() {
        return Err(Error::NonIntegralVolume(leading.to_string()));
    }
    let normalized_volume = leading.to_integer().to_biguint().expect("checked positive");
    Ok(VolumeReport {
        normalized_volume,
        ..report_probe
    })
}

fn factorial(d: usize) -> BigInt {
    (1..=d).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Normalized `(n - κ)`-dimensional volume of `P(M)`.
pub fn normalized_volume(m: &Matroid, limit: usize) -> Result<BigUint> {
    Ok(volume_report(m, limit)?.normalized_volume)
}
