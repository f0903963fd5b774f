//! Crapo's beta invariant by deletion-contraction.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Matroid;

/// `β(M)`, from `β(M) = β(M/i) + β(M∖i)` for `i` neither a loop nor a coloop,
/// with `β(U_{1,1}) = 1`, `β(U_{0,1}) = 0` and `β = 0` in the presence of a loop
/// or coloop. The smallest eligible element is used at each step; the memo
/// table lives for one call.
pub fn beta(m: &Matroid) -> BigUint {
    let mut memo = HashMap::new();
    beta_memo(m, &mut memo)
}

fn beta_memo(m: &Matroid, memo: &mut HashMap<Matroid, BigUint>) -> BigUint {
    if m.ground_set_size() == 1 {
        return if m.rank() == 1 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if m.loop_mask() != 0 || m.coloop_mask() != 0 {
        return BigUint::zero();
    }
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    // no loops or coloops, so element 1 is eligible
    let e = 1u64;
    let contracted = m
        .minor_masks(0, e)
        .expect("contracting a non-loop is always valid");
    let deleted = m
        .minor_masks(e, 0)
        .expect("deleting a single element is always valid");
    let value = beta_memo(&contracted, memo) + beta_memo(&deleted, memo);
    memo.insert(m.clone(), value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{minimal, uniform};

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&uniform(2, 5).unwrap()), BigUint::from(3u32));
        assert_eq!(beta(&minimal(3, 7).unwrap()), BigUint::one());
        let u12 = uniform(1, 2).unwrap();
        assert!(beta(&u12.direct_sum(&u12).unwrap()).is_zero());
    }

    #[test]
    fn base_cases() {
        assert_eq!(beta(&uniform(1, 1).unwrap()), BigUint::one());
        assert!(beta(&uniform(0, 1).unwrap()).is_zero());
        assert_eq!(beta(&uniform(1, 2).unwrap()), BigUint::one());
    }
}
