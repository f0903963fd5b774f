//! Circuits, connected components and the paving classification.

use serde::Serialize;

use super::{binomial, elements_of, Matroid};

/// Derived facts about a matroid. Element labels are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub r: usize,
    pub num_bases: usize,
    /// Connected components, each sorted, ordered by smallest element.
    pub components: Vec<Vec<usize>>,
    pub kappa: usize,
    pub loops: Vec<usize>,
    pub coloops: Vec<usize>,
    pub is_paving: bool,
    pub is_sparse_paving: bool,
    /// `C(n,r) - |bases|`.
    pub nonbasis_count: u64,
    pub is_minimal: bool,
    pub is_uniform: bool,
}

impl Classification {
    pub fn is_connected(&self) -> bool {
        self.kappa == 1
    }
}

fn circuit_masks(m: &Matroid) -> Vec<u64> {
    let rank = m.rank_table();
    let n = m.ground_set_size();
    let max_size = (m.rank() + 1) as u32;
    let mut out = Vec::new();
    for mask in 1..(1u64 << n) {
        let size = mask.count_ones();
        if size > max_size || rank[mask as usize] as u32 != size - 1 {
            continue;
        }
        let mut bits = mask;
        let mut minimal = true;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if rank[(mask ^ low) as usize] as u32 != size - 1 {
                minimal = false;
                break;
            }
            bits ^= low;
        }
        if minimal {
            out.push(mask);
        }
    }
    out
}

/// All circuits (minimal dependent sets), sorted by size then
/// lexicographically.
pub fn circuits(m: &Matroid) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = circuit_masks(m).into_iter().map(elements_of).collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

fn is_paving_given(circuits: &[u64], r: usize) -> bool {
    circuits.iter().all(|c| c.count_ones() as usize >= r)
}

/// Connected components: `i ~ j` when some circuit contains both.
pub fn components(m: &Matroid) -> Vec<Vec<usize>> {
    components_from(m.ground_set_size(), &circuit_masks(m))
}

fn components_from(n: usize, circuits: &[u64]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for &c in circuits {
        let first = c.trailing_zeros() as usize;
        for i in 0..n {
            if c >> i & 1 == 1 {
                let a = find(&mut parent, first);
                let b = find(&mut parent, i);
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index_of_root = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if index_of_root[root] == usize::MAX {
            index_of_root[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[index_of_root[root]].push(i + 1);
    }
    groups
}

pub fn classify(m: &Matroid) -> Classification {
    let n = m.ground_set_size();
    let r = m.rank();
    let circ = circuit_masks(m);
    let components = components_from(n, &circ);
    let kappa = components.len();
    let is_paving = is_paving_given(&circ, r);
    let is_sparse_paving = is_paving && {
        let dual = m.dual();
        is_paving_given(&circuit_masks(&dual), dual.rank())
    };
    let nonbasis_count = binomial(n, r) - m.num_bases() as u64;
    let is_minimal = kappa == 1 && m.num_bases() == r * (n - r) + 1;
    Classification {
        n,
        r,
        num_bases: m.num_bases(),
        components,
        kappa,
        loops: m.loops(),
        coloops: m.coloops(),
        is_paving,
        is_sparse_paving,
        nonbasis_count,
        is_minimal,
        is_uniform: nonbasis_count == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{minimal, panhandle, uniform};

    fn fano() -> Matroid {
        let lines = [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ];
        let bases: Vec<Vec<usize>> = super::super::k_subsets(7, 3)
            .into_iter()
            .map(elements_of)
            .filter(|b| !lines.iter().any(|l| l[..] == b[..]))
            .collect();
        Matroid::from_bases(7, 3, bases).unwrap()
    }

    #[test]
    fn circuits_examples() {
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(
            circuits(&u24),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
        // T_(2,4) with the bases of every pair except {3,4}
        let t = Matroid::from_bases(4, 2, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]).unwrap();
        assert_eq!(circuits(&t), vec![vec![3, 4], vec![1, 2, 3], vec![1, 2, 4]]);
        let free = uniform(3, 3).unwrap();
        assert!(circuits(&free).is_empty());
    }

    #[test]
    fn classify_fano() {
        let c = classify(&fano());
        assert!(c.is_sparse_paving && c.is_paving);
        assert_eq!(c.kappa, 1);
        assert_eq!(c.nonbasis_count, 7);
        assert!(!c.is_minimal && !c.is_uniform);
    }

    #[test]
    fn classify_minimal_2_5() {
        let c = classify(&minimal(2, 5).unwrap());
        assert!(c.is_paving);
        assert!(!c.is_sparse_paving);
        assert!(c.is_minimal);
    }

    #[test]
    fn classify_disconnected() {
        let u12 = uniform(1, 2).unwrap();
        let m = u12.direct_sum(&u12).unwrap();
        let c = classify(&m);
        assert_eq!(c.kappa, 2);
        assert_eq!(c.components, vec![vec![1, 2], vec![3, 4]]);
        assert!(!c.is_minimal);
    }

    #[test]
    fn loops_and_coloops_are_components() {
        let m = uniform(2, 4)
            .unwrap()
            .direct_sum(&uniform(0, 1).unwrap())
            .unwrap()
            .direct_sum(&uniform(1, 1).unwrap())
            .unwrap();
        let c = classify(&m);
        assert_eq!(c.components, vec![vec![1, 2, 3, 4], vec![5], vec![6]]);
        assert_eq!(c.loops, vec![5]);
        assert_eq!(c.coloops, vec![6]);
        assert!(!c.is_paving);
    }

    #[test]
    fn panhandle_2_3_6_is_neither() {
        let c = classify(&panhandle(2, 3, 6).unwrap());
        assert_eq!(c.kappa, 1);
        assert!(!c.is_sparse_paving);
        assert!(!c.is_minimal);
        assert_eq!(c.num_bases, 12);
    }

    #[test]
    fn uniform_is_uniform() {
        for n in 1..=8 {
            for r in 0..=n {
                let c = classify(&uniform(r, n).unwrap());
                assert!(c.is_uniform);
                if 0 < r && r < n {
                    assert!(c.is_sparse_paving);
                }
            }
        }
    }
}
