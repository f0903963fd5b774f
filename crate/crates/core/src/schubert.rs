//! The Chow ring of the Grassmannian `G(r,n)` as a free abelian group on
//! Schubert cycles `σ_λ`, `λ ⊆ r x (n-r)`.
//!
//! Products go through Littlewood-Richardson tableau enumeration; partitions
//! that leave the ambient rectangle are dropped, which is the quotient-ring
//! convention of the Chow ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};

/// The Grassmannian `G(r,n)` a class lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub r: usize,
    pub n: usize,
}

impl Ambient {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidDimensions(format!(
                "G(r,n) needs r <= n, got r={r}, n={n}"
            )));
        }
        Ok(Ambient { r, n })
    }

    pub fn rect(&self) -> Rectangle {
        Rectangle::new(self.r, self.n - self.r)
    }

    /// `dim G(r,n) = r(n-r)`.
    pub fn dim(&self) -> usize {
        self.rect().area()
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.r, self.n)
    }
}

/// An integer combination of Schubert cycles. Zero coefficients are never
/// stored, so equal classes have equal term maps.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass {
    ambient: Ambient,
    terms: BTreeMap<Partition, BigInt>,
}

impl ChowClass {
    pub fn zero(ambient: Ambient) -> Self {
        ChowClass {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    /// The single cycle `σ_λ`.
    pub fn schubert(ambient: Ambient, lambda: Partition) -> Result<Self> {
        Self::from_terms(ambient, [(lambda, BigInt::one())])
    }

    /// The unit class `σ_∅`.
    pub fn unit(ambient: Ambient) -> Self {
        let mut c = Self::zero(ambient);
        c.terms.insert(Partition::empty(), BigInt::one());
        c
    }

    pub fn from_terms<I>(ambient: Ambient, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let rect = ambient.rect();
        let mut c = Self::zero(ambient);
        for (lambda, coeff) in terms {
            rect.check_fits(&lambda)?;
            c.add_term(lambda, coeff);
        }
        Ok(c)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `σ_λ` (zero if absent).
    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Adds `coeff · σ_λ`; `lambda` must fit the ambient rectangle.
    fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Replaces the coefficient of `σ_λ`.
    pub fn set_coefficient(&mut self, lambda: Partition, coeff: BigInt) -> Result<()> {
        self.ambient.rect().check_fits(&lambda)?;
        self.terms.remove(&lambda);
        self.add_term(lambda, coeff);
        Ok(())
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        check_same_ambient(self, other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> ChowClass {
        let mut out = Self::zero(self.ambient);
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), c * k);
        }
        out
    }

    /// The distinct sizes `|λ|` among the terms.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Terms in the order used by every text and JSON rendering:
    /// decreasing lexicographic order of the partitions.
    pub fn ordered_terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ambient)
    }
}

/// `3 s[2] + 1 s[1,1]`; the zero class prints as `0`.
impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.ordered_terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} s{lambda}")?;
        }
        Ok(())
    }
}

fn check_same_ambient(a: &ChowClass, b: &ChowClass) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch(format!(
            "{} vs {}",
            a.ambient, b.ambient
        )));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ChowClassRepr {
    r: usize,
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for ChowClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChowClassRepr {
            r: self.ambient.r,
            n: self.ambient.n,
            terms: self
                .ordered_terms()
                .map(|(p, c)| TermRepr {
                    partition: p.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChowClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ChowClassRepr::deserialize(d)?;
        let ambient = Ambient::new(repr.r, repr.n).map_err(D::Error::custom)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((t.partition, coeff));
        }
        ChowClass::from_terms(ambient, terms).map_err(D::Error::custom)
    }
}

/// Every `μ ⊆ rect` obtained from `lambda` by adding `b` boxes, at most one per
/// column.
pub fn horizontal_strips(lambda: &Partition, b: usize, rect: Rectangle) -> Vec<Partition> {
    let rows = rect.rows;
    if lambda.len() > rows {
        return Vec::new();
    }
    let base = lambda.padded(rows);
    let mut out = Vec::new();
    let mut cur = base.clone();
    strip_rows(&base, rect.cols, 0, b, &mut cur, &mut out);
    out
}

fn strip_rows(
    base: &[usize],
    cols: usize,
    row: usize,
    left: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        out.push(Partition::new(cur.clone()));
        return;
    }
    if row == base.len() {
        return;
    }
    // row may grow up to the old length of the row above, and the rectangle width
    let cap = if row == 0 { cols } else { base[row - 1] };
    let max_add = cap.saturating_sub(base[row]).min(left);
    for add in 0..=max_add {
        cur[row] = base[row] + add;
        strip_rows(base, cols, row + 1, left - add, cur, out);
    }
    cur[row] = base[row];
}

/// Pieri's formula: `c · σ_(b)`.
pub fn pieri(c: &ChowClass, b: usize) -> ChowClass {
    let rect = c.ambient.rect();
    let mut out = ChowClass::zero(c.ambient);
    for (lambda, coeff) in &c.terms {
        for mu in horizontal_strips(lambda, b, rect) {
            out.add_term(mu, coeff.clone());
        }
    }
    out
}

/// Littlewood-Richardson coefficient `c^λ_{μν}`: the number of semistandard
/// skew tableaux of shape `λ/μ` and content `ν` whose reverse reading word is
/// a lattice word.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> BigUint {
    if !lambda.contains(mu) || mu.size() + nu.size() != lambda.size() {
        return BigUint::zero();
    }
    if nu.is_empty() {
        return BigUint::one();
    }
    let rows = lambda.len();
    let inner = mu.padded(rows);
    let outer = lambda.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&w| vec![usize::MAX; w]).collect();
    let mut counts = vec![0usize; nu.len()];
    let mut search = LrSearch {
        inner: &inner,
        outer: &outer,
        content: nu.parts(),
        grid: &mut grid,
        counts: &mut counts,
        found: 0,
    };
    search.fill(0, outer.first().copied().unwrap_or(0));
    BigUint::from(search.found)
}

struct LrSearch<'a> {
    inner: &'a [usize],
    outer: &'a [usize],
    content: &'a [usize],
    grid: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
    found: u64,
}

impl LrSearch<'_> {
    /// Fills the cell at (`row`, `col - 1`), walking each row right to left and
    /// rows top to bottom; `col` is one past the cell to fill.
    fn fill(&mut self, row: usize, col: usize) {
        if row == self.outer.len() {
            self.found += 1;
            return;
        }
        if col == self.inner[row] {
            let next_col = self.outer.get(row + 1).copied().unwrap_or(0);
            self.fill(row + 1, next_col);
            return;
        }
        let j = col - 1;
        // weakly increasing along the row: bounded by the cell to the right
        let upper = if col < self.outer[row] {
            self.grid[row][col]
        } else {
            self.content.len() - 1
        };
        // strictly increasing down columns
        let lower = if row > 0 && j >= self.inner[row - 1] {
            self.grid[row - 1][j] + 1
        } else {
            0
        };
        for v in lower..=upper.min(self.content.len() - 1) {
            if self.counts[v] == self.content[v] {
                continue;
            }
            if v > 0 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[row][j] = v;
            self.fill(row, j);
            self.counts[v] -= 1;
        }
        self.grid[row][j] = usize::MAX;
    }
}

/// Product in the Chow ring of `G(r,n)`.
pub fn product(a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
    check_same_ambient(a, b)?;
    let rect = a.ambient.rect();
    let mut out = ChowClass::zero(a.ambient);
    let mut by_size: HashMap<usize, Vec<Partition>> = HashMap::new();
    let mut lr_cache: HashMap<(Partition, Partition, Partition), BigUint> = HashMap::new();
    for (mu, cm) in &a.terms {
        for (nu, cn) in &b.terms {
            let size = mu.size() + nu.size();
            if size > rect.area() {
                continue;
            }
            let candidates = by_size
                .entry(size)
                .or_insert_with(|| rect.partitions_of(size));
            let weight = cm * cn;
            for lambda in candidates.iter() {
                if !lambda.contains(mu) || !lambda.contains(nu) {
                    continue;
                }
                let key = (mu.clone(), nu.clone(), lambda.clone());
                let lr = lr_cache
                    .entry(key)
                    .or_insert_with(|| lr_coefficient(mu, nu, lambda));
                if !lr.is_zero() {
                    out.add_term(lambda.clone(), &weight * BigInt::from(lr.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// `deg(c · σ_{λ^c})`, which by complementary dimensions is the coefficient of
/// `σ_λ` in `c`.
pub fn degree_pairing(c: &ChowClass, lambda: &Partition) -> Result<BigInt> {
    c.ambient.rect().check_fits(lambda)?;
    Ok(c.coefficient(lambda))
}

/// `deg(c · σ_(1)^s)`: multiply by `σ_(1)` `s` times and read off the
/// coefficient of the full rectangle.
pub fn sigma1_power_degree(c: &ChowClass, s: usize) -> BigInt {
    let mut cur = c.clone();
    for _ in 0..s {
        if cur.is_zero() {
            break;
        }
        cur = pieri(&cur, 1);
    }
    cur.coefficient(&c.ambient.rect().full())
}

/// Embeds `c ∈ A(G(r_i,n_i))` into `A(G(r,n))` for a direct sum: each `σ_μ`
/// becomes `σ_{□μ}` with `□μ = (shift + μ_1, ..., shift + μ_{r_i})`, where
/// `shift = (n - r) - (n_i - r_i)` is the width of the other summand's
/// rectangle.
pub fn box_shift(c: &ChowClass, target: Ambient, shift: usize) -> Result<ChowClass> {
    let src = c.ambient;
    let consistent = target.r >= src.r
        && target.n >= src.n
        && (target.n - target.r) >= (src.n - src.r)
        && shift == (target.n - target.r) - (src.n - src.r);
    if !consistent {
        return Err(Error::AmbientMismatch(format!(
            "cannot shift {src} into {target} by {shift}"
        )));
    }
    let rect = target.rect();
    let mut out = ChowClass::zero(target);
    for (mu, coeff) in &c.terms {
        let shifted = Partition::new(mu.padded(src.r).iter().map(|&p| p + shift).collect());
        rect.check_fits(&shifted)?;
        out.add_term(shifted, coeff.clone());
    }
    Ok(out)
}
