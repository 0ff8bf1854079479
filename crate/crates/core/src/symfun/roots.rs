use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactalg::CycInt;
use crate::multipoly::MPoly;
use crate::partitions::{prev_permutation, Partition};

/// `m_lambda(w, w^2, ..., w^s)` with `w` a primitive `(s+1)`-th root of unity.
///
/// Walks the distinct rearrangements of `lambda` padded to `s` slots and
/// tallies `sum_j j * a_j mod (s+1)`; zero once `lambda` has more than `s`
/// parts. Panics for `s = 0`, where there are no nontrivial roots.
pub fn m_lambda_at_roots(lambda: &Partition, s: u32) -> CycInt {
    let order = s + 1;
    let mut counts = vec![BigInt::zero(); order as usize];
    if lambda.len() <= s as usize {
        let mut exps = lambda.parts().to_vec();
        exps.resize(s as usize, 0);
        loop {
            let r = exps
                .iter()
                .enumerate()
                .map(|(j, &a)| (j as u64 + 1) * a as u64 % order as u64)
                .sum::<u64>()
                % order as u64;
            counts[r as usize] += 1;
            if !prev_permutation(&mut exps) {
                break;
            }
        }
    }
    CycInt::from_power_counts(order, &counts).expect("order at least 2")
}

/// Evaluate an integer polynomial in `order - 1` variables at
/// `x_j = w^j` for a primitive `order`-th root of unity `w`.
pub fn eval_at_roots(p: &MPoly<BigInt>, order: u32) -> Result<CycInt> {
    let mut counts = vec![BigInt::zero(); order as usize];
    for (m, c) in p.terms() {
        let r = m
            .exps()
            .iter()
            .enumerate()
            .map(|(j, &a)| (j as u64 + 1) * a as u64 % order as u64)
            .sum::<u64>()
            % order as u64;
        counts[r as usize] += c;
    }
    CycInt::from_power_counts(order, &counts)
}

/// `1 + w^k + ... + w^(s k)` summed over every power, as a check value:
/// `s` when `(s+1) | k`, `-1` otherwise.
pub fn root_power_sum_closed(k: u64, s: u32) -> BigInt {
    if k.is_multiple_of(s as u64 + 1) {
        BigInt::from(s)
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::cyc_power_sum;
    use crate::partitions::enum_partitions;
    use crate::symfun::classical::m_lambda;

    #[test]
    fn matches_direct_evaluation() {
        for s in 1..=6u32 {
            for k in 0..=7 {
                for lambda in enum_partitions(k, &[]) {
                    let direct = eval_at_roots(&m_lambda(&lambda, s as usize), s + 1).unwrap();
                    assert_eq!(m_lambda_at_roots(&lambda, s), direct, "{lambda} s={s}");
                }
            }
        }
    }

    #[test]
    fn always_an_integer() {
        for s in 1..=8u32 {
            for k in 0..=8 {
                for lambda in enum_partitions(k, &[]) {
                    assert!(m_lambda_at_roots(&lambda, s).as_integer().is_some(), "{lambda} s={s}");
                }
            }
        }
    }

    #[test]
    fn single_part_is_power_sum() {
        for s in 1..=7u32 {
            for k in 1..=20u32 {
                let lambda = Partition::new(vec![k]).unwrap();
                let v = m_lambda_at_roots(&lambda, s);
                assert_eq!(v, cyc_power_sum(s, k as u64).unwrap());
                assert_eq!(v.as_integer().unwrap(), root_power_sum_closed(k as u64, s));
            }
        }
    }

    #[test]
    fn too_many_parts_vanish() {
        let lambda = Partition::new(vec![1, 1, 1]).unwrap();
        assert!(m_lambda_at_roots(&lambda, 2).is_zero());
        assert_eq!(m_lambda_at_roots(&Partition::empty(), 3).as_integer(), Some(BigInt::one()));
    }
}
