use num_bigint::BigInt;
use num_traits::One;

use crate::multipoly::{MPoly, Monomial};
use crate::partitions::{distinct_orbit, Partition};

/// Classical families built straight from their defining sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classical {
    Elementary,
    Complete,
    PowerSum,
}

/// Monomial symmetric function `m_lambda(x_1..x_n)`; zero when `lambda`
/// has more than `n` parts.
pub fn m_lambda(lambda: &Partition, n: usize) -> MPoly<BigInt> {
    MPoly::from_terms(n, distinct_orbit(lambda, n).into_iter().map(|m| (m, BigInt::one())))
        .expect("orbit monomials have n exponents")
}

/// `e_k`, `h_k` or `p_k` in `n` variables. `e_0 = h_0 = 1`, `p_0 = n`.
pub fn classical(kind: Classical, k: u32, n: usize) -> MPoly<BigInt> {
    match kind {
        Classical::Elementary => {
            if k as usize > n {
                MPoly::zero(n)
            } else {
                let ones = Partition::new(vec![1; k as usize]).expect("valid");
                m_lambda(&ones, n)
            }
        }
        Classical::Complete => complete_homogeneous(k, n),
        Classical::PowerSum => {
            if k == 0 {
                MPoly::constant(n, BigInt::from(n))
            } else {
                let terms = (0..n).map(|i| (Monomial::var_power(n, i, k), BigInt::one()));
                MPoly::from_terms(n, terms).expect("valid")
            }
        }
    }
}

/// `h_k` as the sum of `x_{i_1} ... x_{i_k}` over `1 <= i_1 <= ... <= i_k <= n`.
fn complete_homogeneous(k: u32, n: usize) -> MPoly<BigInt> {
    let mut out = MPoly::zero(n);
    if n == 0 {
        if k == 0 {
            out = MPoly::constant(0, BigInt::one());
        }
        return out;
    }
    let mut idx = vec![0usize; k as usize];
    loop {
        let mut exps = vec![0u32; n];
        for &i in &idx {
            exps[i] += 1;
        }
        out.add_term(Monomial::new(exps), BigInt::one());
        // next weakly increasing tuple
        let Some(pos) = idx.iter().rposition(|&i| i + 1 < n) else {
            break;
        };
        let next = idx[pos] + 1;
        for slot in &mut idx[pos..] {
            *slot = next;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn m_211_in_four_variables() {
        let m = m_lambda(&part(&[2, 1, 1]), 4);
        assert_eq!(m.len(), 12);
        let expected = [
            [2, 1, 1, 0], [1, 2, 1, 0], [1, 1, 2, 0], [2, 1, 0, 1],
            [1, 2, 0, 1], [1, 1, 0, 2], [2, 0, 1, 1], [1, 0, 2, 1],
            [1, 0, 1, 2], [0, 2, 1, 1], [0, 1, 2, 1], [0, 1, 1, 2],
        ];
        for e in expected {
            assert_eq!(m.coeff(&Monomial::new(e.to_vec())), Some(&BigInt::one()), "{e:?}");
        }
    }

    #[test]
    fn m_lambda_special_cases() {
        for n in 1..=4 {
            for k in 1..=5u32 {
                assert_eq!(m_lambda(&part(&[k]), n), classical(Classical::PowerSum, k, n));
                let ones = Partition::new(vec![1; k as usize]).unwrap();
                assert_eq!(m_lambda(&ones, n), classical(Classical::Elementary, k, n));
            }
        }
        assert!(m_lambda(&part(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn small_examples() {
        assert_eq!(classical(Classical::Elementary, 2, 3).to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert_eq!(classical(Classical::Complete, 2, 2).to_string(), "x1^2 + x2^2 + x1*x2");
        assert_eq!(classical(Classical::PowerSum, 0, 4).to_string(), "4");
        assert_eq!(classical(Classical::Elementary, 0, 3).to_string(), "1");
        assert_eq!(classical(Classical::Complete, 0, 3).to_string(), "1");
        assert!(classical(Classical::Elementary, 4, 3).is_zero());
    }

    #[test]
    fn complete_counts_multisets() {
        // C(n + k - 1, k) monomials, all with coefficient one
        for n in 1..=4usize {
            for k in 0..=6u32 {
                let h = classical(Classical::Complete, k, n);
                let expected = crate::partitions::binomial((n + k as usize - 1) as u64, k as u64);
                assert_eq!(BigInt::from(h.len()), expected);
                assert!(h.terms().all(|(_, c)| c.is_one()));
            }
        }
    }
}
