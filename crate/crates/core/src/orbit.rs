//! Schubert coefficients `d_λ(M)` of matroids: the expansion of the torus
//! orbit class `Sc(M) = Σ d_λ σ_λ` in the Chow ring of `G(r,n)`.
//!
//! Supported inputs are matroids whose connected components are each a point
//! (a loop or coloop), sparse paving (uniform included), or minimal. Any other
//! connected component is reported as [`Error::UnsupportedMatroid`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{beta, classify, Classification, Matroid};
use crate::partition::{complement_in_rectangle, hook_complement, schur_at_ones};
use crate::polytope::{volume_report, VolumeReport};
use crate::schubert::{box_shift, product, sigma1_power_degree, Ambient, ChowClass};

/// How the class of one connected component was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Alternating sum of Schur evaluations for `U_{r,n}`.
    Uniform,
    /// `Sc(T_{r,n}) = σ_{h^c}`.
    Minimal,
    /// Uniform class with the hook-complement coefficient lowered by the
    /// number of non-bases.
    SparsePaving,
    /// A single loop or coloop: the unit class of a point.
    Point,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Uniform => "uniform",
            Method::Minimal => "minimal",
            Method::SparsePaving => "sparse-paving",
            Method::Point => "point",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClass {
    /// Elements of the component (1-indexed, in `M`'s labels).
    pub elements: Vec<usize>,
    pub method: Method,
    /// Non-basis count when the sparse paving formula was used.
    pub k: Option<u64>,
    pub class: ChowClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScResult {
    pub summary: Classification,
    pub class: ChowClass,
    pub components: Vec<ComponentClass>,
    /// `k` for a connected sparse paving (or uniform) input.
    pub k_used: Option<u64>,
    pub beta: BigUint,
}

impl ScResult {
    /// Degree `r(n-r) - (n - κ(M))` shared by every term.
    pub fn degree(&self) -> usize {
        let s = &self.summary;
        s.r * (s.n - s.r) - (s.n - s.kappa)
    }
}

#[derive(Serialize)]
struct ScResultRepr<'a> {
    #[serde(flatten)]
    class: &'a ChowClass,
    method: Vec<Method>,
    components: &'a [Vec<usize>],
    kappa: usize,
    k: Option<u64>,
    beta: String,
}

impl Serialize for ScResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScResultRepr {
            class: &self.class,
            method: self.components.iter().map(|c| c.method).collect(),
            components: &self.summary.components,
            kappa: self.summary.kappa,
            k: self.k_used,
            beta: self.beta.to_string(),
        }
        .serialize(s)
    }
}

fn check_proper(r: usize, n: usize) -> Result<()> {
    if r < 1 || r >= n {
        return Err(Error::InvalidDimensions(format!(
            "needs 1 <= r < n, got r={r}, n={n}"
        )));
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `Sc(U_{r,n})` by Klyachko's formula
/// `d_λ = Σ_{i=0}^{r} (-1)^i C(n,i) s_{λ^c}(1^{r-i})` over `|λ| = (r-1)(n-r-1)`.
pub fn sc_uniform(r: usize, n: usize) -> Result<ChowClass> {
    check_proper(r, n)?;
    let ambient = Ambient::new(r, n)?;
    let rect = ambient.rect();
    let mut terms = Vec::new();
    for lambda in rect.partitions_of((r - 1) * (n - r - 1)) {
        let comp = complement_in_rectangle(&lambda, rect)?;
        let mut d = BigInt::zero();
        for i in 0..=r {
            let term = binomial(n, i) * BigInt::from(schur_at_ones(&comp, r - i));
            if i % 2 == 0 {
                d += term;
            } else {
                d -= term;
            }
        }
        if d.is_negative() {
            return Err(Error::InternalConsistency(format!(
                "negative coefficient {d} at {lambda} for U_({r},{n})"
            )));
        }
        terms.push((lambda, d));
    }
    ChowClass::from_terms(ambient, terms)
}

/// `Sc(T_{r,n}) = σ_{h^c}`.
pub fn sc_minimal(r: usize, n: usize) -> Result<ChowClass> {
    check_proper(r, n)?;
    ChowClass::schubert(Ambient::new(r, n)?, hook_complement(r, n)?)
}

/// `Sc(M)` for a connected sparse paving matroid: the uniform class with the
/// `h^c` coefficient replaced by `C(n-2, r-1) - k`, `k` the number of
/// non-bases. The replaced value is checked against `β(M)`.
pub fn sc_sparse_paving(m: &Matroid) -> Result<ChowClass> {
    let summary = classify(m);
    sparse_paving_class(m, &summary, &beta(m))
}

fn sparse_paving_class(m: &Matroid, summary: &Classification, beta: &BigUint) -> Result<ChowClass> {
    if summary.kappa != 1 {
        return Err(Error::NotConnected);
    }
    if !summary.is_sparse_paving {
        return Err(Error::NotSparsePaving);
    }
    let (r, n) = (m.rank(), m.ground_set_size());
    let mut class = sc_uniform(r, n)?;
    let hc = hook_complement(r, n)?;
    let value = binomial(n - 2, r - 1) - BigInt::from(summary.nonbasis_count);
    if value != BigInt::from(beta.clone()) {
        return Err(Error::InternalConsistency(format!(
            "hook-complement coefficient {value} differs from beta {beta}"
        )));
    }
    if value.is_negative() {
        return Err(Error::InternalConsistency(format!(
            "negative hook-complement coefficient {value}"
        )));
    }
    class.set_coefficient(hc, value)?;
    Ok(class)
}

/// `Sc(M_1 ⊕ ... ⊕ M_k)` from the component classes, folding left:
/// `Sc(A ⊕ B) = (□Sc(A))(□Sc(B))` in `G(r_A + r_B, n_A + n_B)`, where `□`
/// widens each class by the other summand's rectangle.
pub fn sc_direct_sum(parts: &[ChowClass]) -> Result<ChowClass> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| Error::InvalidDimensions("direct sum of no classes".into()))?;
    let mut acc = first.clone();
    for next in rest {
        let (a, b) = (acc.ambient(), next.ambient());
        let target = Ambient::new(a.r + b.r, a.n + b.n)?;
        let left = box_shift(&acc, target, b.n - b.r)?;
        let right = box_shift(next, target, a.n - a.r)?;
        acc = product(&left, &right)?;
    }
    Ok(acc)
}

fn component_class(sub: &Matroid, elements: Vec<usize>) -> Result<ComponentClass> {
    let (r, n) = (sub.rank(), sub.ground_set_size());
    if n == 1 {
        return Ok(ComponentClass {
            elements,
            method: Method::Point,
            k: None,
            class: ChowClass::unit(Ambient::new(r, n)?),
        });
    }
    let summary = classify(sub);
    if summary.is_uniform {
        return Ok(ComponentClass {
            elements,
            method: Method::Uniform,
            k: Some(0),
            class: sc_uniform(r, n)?,
        });
    }
    if summary.is_sparse_paving {
        return Ok(ComponentClass {
            elements,
            method: Method::SparsePaving,
            k: Some(summary.nonbasis_count),
            class: sparse_paving_class(sub, &summary, &beta(sub))?,
        });
    }
    if summary.is_minimal {
        return Ok(ComponentClass {
            elements,
            method: Method::Minimal,
            k: None,
            class: sc_minimal(r, n)?,
        });
    }
    Err(Error::UnsupportedMatroid {
        elements,
        rank: r,
        bases: sub.num_bases(),
    })
}

/// `Sc(M)`: classes of the connected components combined by direct sum in
/// ground-set order.
pub fn sc(m: &Matroid) -> Result<ScResult> {
    let summary = classify(m);
    let mut components = Vec::with_capacity(summary.kappa);
    for elements in &summary.components {
        let sub = m.restrict(elements)?;
        components.push(component_class(&sub, elements.clone())?);
    }
    let classes: Vec<ChowClass> = components.iter().map(|c| c.class.clone()).collect();
    let class = sc_direct_sum(&classes)?;
    let beta = beta(m);
    let k_used = match components.as_slice() {
        [only] if summary.kappa == 1 => only.k,
        _ => None,
    };
    let result = ScResult {
        summary,
        class,
        components,
        k_used,
        beta,
    };
    check_result(&result)?;
    Ok(result)
}

fn check_result(res: &ScResult) -> Result<()> {
    let degree = res.degree();
    if res.class.degrees().iter().any(|&d| d != degree) {
        return Err(Error::InternalConsistency(format!(
            "class {} is not homogeneous of degree {degree}",
            res.class
        )));
    }
    if res.class.terms().values().any(Signed::is_negative) {
        return Err(Error::InternalConsistency(format!(
            "negative coefficient in {}",
            res.class
        )));
    }
    if let Some(d) = hook_coefficient(&res.class) {
        if d != BigInt::from(res.beta.clone()) {
            return Err(Error::InternalConsistency(format!(
                "d at the hook complement is {d}, beta is {}",
                res.beta
            )));
        }
    }
    Ok(())
}

/// The coefficient `d_{h^c}`, when the ambient has a hook (`0 < r < n`).
pub fn hook_coefficient(class: &ChowClass) -> Option<BigInt> {
    let Ambient { r, n } = class.ambient();
    let hc = hook_complement(r, n).ok()?;
    Some(class.coefficient(&hc))
}

/// Outcome of comparing `deg(Sc(M) σ_(1)^s)` with the normalized volume of
/// `P(M)`, `s = n - κ(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeCheck {
    pub s: usize,
    pub lhs: BigInt,
    pub rhs: BigUint,
    pub report: VolumeReport,
}

impl VolumeCheck {
    pub fn holds(&self) -> bool {
        self.lhs == BigInt::from(self.rhs.clone())
    }
}

pub fn verify_volume_relation(m: &Matroid, limit: usize) -> Result<VolumeCheck> {
    let res = sc(m)?;
    let report = volume_report(m, limit)?;
    let s = m.ground_set_size() - res.summary.kappa;
    Ok(VolumeCheck {
        s,
        lhs: sigma1_power_degree(&res.class, s),
        rhs: report.normalized_volume.clone(),
        report,
    })
}
