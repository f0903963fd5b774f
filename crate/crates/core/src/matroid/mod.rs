//! Matroids given by an explicit list of bases.
//!
//! The ground set is `[n] = {1, ..., n}` in every public interface; internally
//! element `i` is bit `i - 1` of a `u64` mask. All queries are brute force over
//! bases or subsets, which is fine at the sizes this crate targets.

mod beta;
mod construct;
mod matrix;
mod structure;

pub use beta::beta;
pub use construct::{lattice_path_matroid, minimal, panhandle, schubert_matroid, uniform};
pub use matrix::{from_rational_matrix, RationalMatrix};
pub use structure::{circuits, classify, components, Classification};

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Largest supported ground set. Rank tables are `2^n` bytes.
pub const MAX_GROUND_SET: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    r: usize,
    /// Sorted, deduplicated basis masks.
    bases: Vec<u64>,
}

pub(crate) fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &e| m | (1u64 << (e - 1)))
}

pub(crate) fn elements_of(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Removes the bits in `removed` from `mask`, shifting higher bits down.
pub(crate) fn compress(mask: u64, removed: u64, n: usize) -> u64 {
    let mut out = 0u64;
    let mut j = 0;
    for i in 0..n {
        if removed >> i & 1 == 1 {
            continue;
        }
        if mask >> i & 1 == 1 {
            out |= 1 << j;
        }
        j += 1;
    }
    out
}

impl Matroid {
    /// Validates a basis family: sizes, range, non-emptiness and the exchange
    /// axiom (checked exhaustively). Bases are 1-indexed.
    pub fn from_bases<I, B>(n: usize, r: usize, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = B>,
        B: AsRef<[usize]>,
    {
        check_ground_set(n)?;
        let mut masks = Vec::new();
        for b in bases {
            let b = b.as_ref();
            if let Some(&e) = b.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            let mask = mask_of(b);
            if mask.count_ones() as usize != r || b.len() != r {
                return Err(Error::WrongBasisSize {
                    basis: b.to_vec(),
                    rank: r,
                });
            }
            masks.push(mask);
        }
        Self::from_masks(n, r, masks)
    }

    /// Validating constructor over 0-indexed masks.
    pub(crate) fn from_masks(n: usize, r: usize, mut masks: Vec<u64>) -> Result<Matroid> {
        check_ground_set(n)?;
        masks.sort_unstable();
        masks.dedup();
        if masks.is_empty() {
            return Err(Error::EmptyBases);
        }
        let m = Matroid { n, r, bases: masks };
        m.check_exchange()?;
        Ok(m)
    }

    /// For operations whose output is a matroid by construction.
    pub(crate) fn from_masks_unchecked(n: usize, r: usize, mut masks: Vec<u64>) -> Matroid {
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(!masks.is_empty());
        Matroid { n, r, bases: masks }
    }

    fn check_exchange(&self) -> Result<()> {
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let only1 = b1 & !b2;
                let only2 = b2 & !b1;
                for x in 0..self.n {
                    if only1 >> x & 1 == 0 {
                        continue;
                    }
                    let without = b1 & !(1 << x);
                    let ok = (0..self.n)
                        .filter(|y| only2 >> y & 1 == 1)
                        .any(|y| set.contains(&(without | 1 << y)));
                    if !ok {
                        return Err(Error::ExchangeAxiomViolated {
                            first: elements_of(b1),
                            second: elements_of(b2),
                            element: x + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ground_set_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    /// Bases as sorted 1-indexed sets, in lexicographic order.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.bases.iter().map(|&b| elements_of(b)).collect();
        v.sort();
        v
    }

    pub fn is_basis(&self, set: &[usize]) -> bool {
        self.bases.binary_search(&mask_of(set)).is_ok()
    }

    /// Independent iff contained in some basis.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let m = mask_of(set);
        self.bases.iter().any(|&b| m & b == m)
    }

    /// `rank(A) = max |A ∩ B|` over bases.
    pub fn rank_of(&self, set: &[usize]) -> usize {
        self.rank_of_mask(mask_of(set))
    }

    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        self.bases
            .iter()
            .map(|&b| (b & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Ranks of all `2^n` subsets, indexed by mask.
    pub(crate) fn rank_table(&self) -> Vec<u8> {
        let size = 1usize << self.n;
        let mut indep = vec![false; size];
        for &b in &self.bases {
            indep[b as usize] = true;
        }
        for mask in (0..size).rev() {
            if indep[mask] {
                let mut bits = mask;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    indep[mask ^ low] = true;
                    bits ^= low;
                }
            }
        }
        let mut rank = vec![0u8; size];
        for mask in 1..size {
            if indep[mask] {
                rank[mask] = mask.count_ones() as u8;
            } else {
                let mut best = 0;
                let mut bits = mask;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    best = best.max(rank[mask ^ low]);
                    bits ^= low;
                }
                rank[mask] = best;
            }
        }
        rank
    }

    /// Elements lying in no basis.
    pub(crate) fn loop_mask(&self) -> u64 {
        let union = self.bases.iter().fold(0u64, |acc, &b| acc | b);
        full_mask(self.n) & !union
    }

    /// Elements lying in every basis.
    pub(crate) fn coloop_mask(&self) -> u64 {
        self.bases.iter().fold(full_mask(self.n), |acc, &b| acc & b)
    }

    pub fn loops(&self) -> Vec<usize> {
        elements_of(self.loop_mask())
    }

    pub fn coloops(&self) -> Vec<usize> {
        elements_of(self.coloop_mask())
    }

    /// Bases of the dual are the complements of the bases.
    pub fn dual(&self) -> Matroid {
        let full = full_mask(self.n);
        Matroid::from_masks_unchecked(
            self.n,
            self.n - self.r,
            self.bases.iter().map(|&b| full & !b).collect(),
        )
    }

    /// `M / contract ∖ delete`, relabelled onto `[n - |delete| - |contract|]`
    /// preserving relative order.
    pub fn minor(&self, delete: &[usize], contract: &[usize]) -> Result<Matroid> {
        for &e in delete.iter().chain(contract) {
            if e == 0 || e > self.n {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    n: self.n,
                });
            }
        }
        self.minor_masks(mask_of(delete), mask_of(contract))
    }

    pub(crate) fn minor_masks(&self, delete: u64, contract: u64) -> Result<Matroid> {
        if delete & contract != 0 {
            return Err(Error::OverlappingSets);
        }
        let contracted: Vec<u64> = self
            .bases
            .iter()
            .filter(|&&b| b & contract == contract)
            .map(|&b| b & !contract)
            .collect();
        if contracted.is_empty() {
            return Err(Error::DependentContraction(elements_of(contract)));
        }
        let kept = contracted
            .iter()
            .map(|&b| (b & delete).count_ones())
            .min()
            .unwrap_or(0);
        let removed = delete | contract;
        let new_n = self.n - removed.count_ones() as usize;
        let new_r = self.r - contract.count_ones() as usize - kept as usize;
        let masks = contracted
            .iter()
            .filter(|&&b| (b & delete).count_ones() == kept)
            .map(|&b| compress(b & !delete, removed, self.n))
            .collect();
        if new_n == 0 {
            return Err(Error::InvalidDimensions(
                "minor would have an empty ground set".into(),
            ));
        }
        Ok(Matroid::from_masks_unchecked(new_n, new_r, masks))
    }

    pub fn delete(&self, element: usize) -> Result<Matroid> {
        self.minor(&[element], &[])
    }

    pub fn contract(&self, element: usize) -> Result<Matroid> {
        self.minor(&[], &[element])
    }

    /// Restriction `M|S` onto the 1-indexed subset `S`, relabelled in order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Matroid> {
        let keep = mask_of(subset);
        self.minor_masks(full_mask(self.n) & !keep, 0)
    }

    /// `M1 ⊕ M2` on `[n1 + n2]`, with `M2` shifted by `n1`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        check_ground_set(n)?;
        let mut masks = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                masks.push(b1 | b2 << self.n);
            }
        }
        Ok(Matroid::from_masks_unchecked(n, self.r + other.r, masks))
    }

    /// Relabels element `i` as `perm[i - 1]`; `perm` is a permutation of `[n]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::InvalidDimensions(format!(
                "permutation of length {} for a ground set of size {}",
                perm.len(),
                self.n
            )));
        }
        for &p in perm {
            if p == 0 || p > self.n || seen[p - 1] {
                return Err(Error::InvalidDimensions(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[p - 1] = true;
        }
        let masks = self
            .bases
            .iter()
            .map(|&b| {
                (0..self.n)
                    .filter(|i| b >> i & 1 == 1)
                    .fold(0u64, |m, i| m | 1 << (perm[i] - 1))
            })
            .collect();
        Ok(Matroid::from_masks_unchecked(self.n, self.r, masks))
    }
}

fn check_ground_set(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidDimensions(
            "ground set must be non-empty".into(),
        ));
    }
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

/// `C(n, k)` as `u64`.
pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// All `k`-subsets of `{0..n}` as masks, in increasing numeric order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack
    let mut m: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while m < limit {
        out.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}
