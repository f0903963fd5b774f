//! Brute-force oracles and the named-matroid corpus shared by the
//! integration tests. Nothing here calls the library's own algorithms for the
//! quantity being checked.

#![allow(dead_code)]

use std::collections::BTreeMap;

use matroid_schubert::matroid::{minimal, panhandle, uniform};
use matroid_schubert::{Ambient, ChowClass, Matroid, Partition};
use num_bigint::BigInt;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

pub fn class(r: usize, n: usize, terms: &[(i64, &[usize])]) -> ChowClass {
    ChowClass::from_terms(
        Ambient::new(r, n).unwrap(),
        terms.iter().map(|(c, v)| (p(v), BigInt::from(*c))),
    )
    .unwrap()
}

pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

// ---------- subsets ----------

pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=n {
            cur.push(e);
            go(e + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(|k| subsets_of_size(n, k)).collect()
}

/// Matroid whose bases are all `r`-subsets except `nonbases`.
pub fn from_nonbases(n: usize, r: usize, nonbases: &[&[usize]]) -> Matroid {
    let bases: Vec<Vec<usize>> = subsets_of_size(n, r)
        .into_iter()
        .filter(|b| !nonbases.iter().any(|nb| nb == &b.as_slice()))
        .collect();
    Matroid::from_bases(n, r, bases).unwrap()
}

// ---------- matroid oracles ----------

/// Rank as the largest intersection with a basis.
pub fn brute_rank(m: &Matroid, set: &[usize]) -> usize {
    m.bases()
        .iter()
        .map(|b| b.iter().filter(|e| set.contains(e)).count())
        .max()
        .unwrap_or(0)
}

/// Coefficient of `x` in the Tutte polynomial, from the subset expansion
/// `T(x,y) = Σ_A (x-1)^{r-r(A)} (y-1)^{|A|-r(A)}`.
pub fn tutte_beta(m: &Matroid) -> BigInt {
    let r = m.rank() as i64;
    let mut total = BigInt::from(0);
    for a in all_subsets(m.ground_set_size()) {
        let ra = brute_rank(m, &a) as i64;
        let corank = r - ra;
        let nullity = a.len() as i64 - ra;
        if corank == 0 {
            continue;
        }
        // [x^1] (x-1)^c = c (-1)^(c-1); [y^0] (y-1)^k = (-1)^k
        let sign = if (corank - 1 + nullity) % 2 == 0 {
            1
        } else {
            -1
        };
        total += BigInt::from(sign * corank);
    }
    total
}

/// Number of components, counted as the minimal non-empty separators `S`
/// (`r(S) + r(E∖S) = r(E)`).
pub fn brute_kappa(m: &Matroid) -> usize {
    let n = m.ground_set_size();
    let r = m.rank();
    let seps: Vec<Vec<usize>> = all_subsets(n)
        .into_iter()
        .filter(|s| !s.is_empty())
        .filter(|s| {
            let rest: Vec<usize> = (1..=n).filter(|e| !s.contains(e)).collect();
            brute_rank(m, s) + brute_rank(m, &rest) == r
        })
        .collect();
    seps.iter()
        .filter(|s| {
            !seps
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|e| s.contains(e)))
        })
        .count()
}

// ---------- tableaux oracles ----------

pub fn brute_syt(shape: &[usize]) -> u64 {
    let total: usize = shape.iter().sum();
    if total == 0 {
        return 1;
    }
    // remove the largest entry from each outer corner
    let mut count = 0;
    for i in 0..shape.len() {
        let is_corner = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
        if is_corner {
            let mut s = shape.to_vec();
            s[i] -= 1;
            count += brute_syt(&s);
        }
    }
    count
}

/// Semistandard tableaux of `shape` with entries in `1..=k`, filled cell by
/// cell.
pub fn brute_ssyt(shape: &[usize], k: usize) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    fn go(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, k: usize) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=k {
            grid[i][j] = v;
            total += go(idx + 1, cells, grid, k);
        }
        grid[i][j] = 0;
        total
    }
    go(0, &cells, &mut grid, k)
}

// ---------- Chow ring oracle ----------

fn all_partitions_in(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == rows {
            out.push(cur.iter().copied().filter(|&x| x > 0).collect());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            go(rows, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

fn part(v: &[usize], i: usize) -> usize {
    v.get(i).copied().unwrap_or(0)
}

fn is_horizontal_strip(inner: &[usize], outer: &[usize]) -> bool {
    let rows = inner.len().max(outer.len());
    (0..rows).all(|i| part(inner, i) <= part(outer, i))
        && (0..rows).all(|i| part(outer, i + 1) <= part(inner, i))
}

type Poly = BTreeMap<Vec<usize>, BigInt>;

/// Multiply by the complete symmetric function `h_k`, truncated to the
/// rectangle.
fn times_h(f: &Poly, k: i64, rows: usize, cols: usize) -> Poly {
    let mut out = Poly::new();
    if k < 0 {
        return out;
    }
    let k = k as usize;
    let shapes = all_partitions_in(rows, cols);
    for (lambda, c) in f {
        let size: usize = lambda.iter().sum();
        for mu in &shapes {
            if mu.iter().sum::<usize>() == size + k && is_horizontal_strip(lambda, mu) {
                *out.entry(mu.clone()).or_default() += c;
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut q = perm.clone();
            q.insert(pos, n - 1);
            let s = if (perm.len() - pos) % 2 == 0 {
                sign
            } else {
                -sign
            };
            out.push((q, s));
        }
    }
    out
}

/// `σ_μ σ_ν` in `G(r,n)` via the Jacobi-Trudi expansion
/// `s_ν = det(h_{ν_i - i + j})` and brute-force horizontal strips.
pub fn oracle_product(r: usize, n: usize, mu: &[usize], nu: &[usize]) -> ChowClass {
    let cols = n - r;
    let len = nu.len();
    let mut total = Poly::new();
    for (perm, sign) in permutations(len) {
        let mut f = Poly::new();
        f.insert(mu.to_vec(), BigInt::from(sign));
        for i in 0..len {
            let k = nu[i] as i64 - i as i64 + perm[i] as i64;
            f = times_h(&f, k, r, cols);
        }
        for (lambda, c) in f {
            *total.entry(lambda).or_default() += c;
        }
    }
    ChowClass::from_terms(
        Ambient::new(r, n).unwrap(),
        total.into_iter().map(|(l, c)| (Partition::new(l), c)),
    )
    .unwrap()
}

// ---------- polytope oracle ----------

/// Lattice points of `t P(M)`: `x ∈ Z_{≥0}^n`, `Σx = tr`, `x(S) ≤ t r(S)`.
pub fn brute_lattice_points(m: &Matroid, t: usize) -> u64 {
    let n = m.ground_set_size();
    let r = m.rank();
    let subsets: Vec<(Vec<usize>, usize)> = all_subsets(n)
        .into_iter()
        .map(|s| {
            let rank = brute_rank(m, &s);
            (s, rank)
        })
        .collect();
    let mut x = vec![0usize; n];
    let mut count = 0;
    loop {
        if x.iter().sum::<usize>() == t * r
            && subsets
                .iter()
                .all(|(s, rk)| s.iter().map(|&e| x[e - 1]).sum::<usize>() <= t * rk)
        {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            if x[i] < t {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

// ---------- corpus ----------

pub fn fano() -> Matroid {
    from_nonbases(
        7,
        3,
        &[
            &[1, 2, 3],
            &[1, 4, 5],
            &[1, 6, 7],
            &[2, 4, 6],
            &[2, 5, 7],
            &[3, 4, 7],
            &[3, 5, 6],
        ],
    )
}

/// Pappus configuration with the line `{7,8,9}` removed.
pub fn non_pappus() -> Matroid {
    from_nonbases(
        9,
        3,
        &[
            &[1, 2, 3],
            &[4, 5, 6],
            &[1, 5, 7],
            &[2, 4, 7],
            &[1, 6, 8],
            &[3, 4, 8],
            &[2, 6, 9],
            &[3, 5, 9],
        ],
    )
}

/// Pairs `a={1,2}`, `b={3,4}`, `c={5,6}`, `d={7,8}`; every union of two pairs
/// except `c ∪ d` is a circuit-hyperplane.
pub fn vamos() -> Matroid {
    from_nonbases(
        8,
        4,
        &[
            &[1, 2, 3, 4],
            &[1, 2, 5, 6],
            &[1, 2, 7, 8],
            &[3, 4, 5, 6],
            &[3, 4, 7, 8],
        ],
    )
}

pub struct Named {
    pub name: String,
    pub m: Matroid,
}

fn named(name: impl Into<String>, m: Matroid) -> Named {
    Named {
        name: name.into(),
        m,
    }
}

/// Fano, non-Pappus, Vamos, `U_{2,4} ⊕ U_{2,5}`, and every `U_{r,n}`,
/// `T_{r,n}`, `Pan_{r,s,n}` with `n ≤ 8`, plus a few small direct sums.
pub fn corpus() -> Vec<Named> {
    let mut out = vec![
        named("Fano", fano()),
        named("non-Pappus", non_pappus()),
        named("Vamos", vamos()),
        named(
            "U24+U25",
            uniform(2, 4)
                .unwrap()
                .direct_sum(&uniform(2, 5).unwrap())
                .unwrap(),
        ),
        named(
            "U12+U12",
            uniform(1, 2)
                .unwrap()
                .direct_sum(&uniform(1, 2).unwrap())
                .unwrap(),
        ),
        named(
            "U23+T24",
            uniform(2, 3)
                .unwrap()
                .direct_sum(&minimal(2, 4).unwrap())
                .unwrap(),
        ),
        named(
            "U24+loop+coloop",
            uniform(2, 4)
                .unwrap()
                .direct_sum(&uniform(0, 1).unwrap())
                .unwrap()
                .direct_sum(&uniform(1, 1).unwrap())
                .unwrap(),
        ),
    ];
    for n in 2..=8 {
        for r in 1..n {
            out.push(named(format!("U({r},{n})"), uniform(r, n).unwrap()));
            out.push(named(format!("T({r},{n})"), minimal(r, n).unwrap()));
            for s in r..n {
                out.push(named(
                    format!("Pan({r},{s},{n})"),
                    panhandle(r, s, n).unwrap(),
                ));
            }
        }
    }
    out
}
