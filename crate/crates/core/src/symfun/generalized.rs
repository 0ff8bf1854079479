use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::multipoly::{MPoly, Monomial, TSeries};
use crate::partitions::Partition;
use crate::symfun::classical::{classical, Classical};

type Poly = MPoly<BigInt>;

/// `x_{i+1}^e * p`.
fn shift_var(p: &Poly, i: usize, e: u32) -> Poly {
    if e == 0 {
        return p.clone();
    }
    let n = p.nvars();
    MPoly::from_terms(
        n,
        p.terms().map(|(m, c)| (m.mul(&Monomial::var_power(n, i, e)), c.clone())),
    )
    .expect("same variable count")
}

/// The truncated factor `sum_{j=0..s} (sign * x_{i+1} t)^j`.
fn truncated_factor(n: usize, i: usize, s: u32, kmax: usize, sign: i64) -> TSeries<BigInt> {
    let coeffs = (0..=s)
        .map(|j| {
            let c = if sign < 0 && j % 2 == 1 { -1 } else { 1 };
            MPoly::monomial(Monomial::var_power(n, i, j), BigInt::from(c))
        })
        .collect();
    TSeries::from_coeffs(n, kmax, coeffs).expect("n variables")
}

/// `E_0..E_kmax` as coefficients of the product of truncated geometric factors.
pub fn elementary_by_series(n: usize, s: u32, kmax: usize) -> Vec<Poly> {
    let mut acc = TSeries::one(n, kmax);
    for i in 0..n {
        acc = acc.try_mul(&truncated_factor(n, i, s, kmax, 1)).expect("same shape");
    }
    acc.into_coeffs()
}

/// `H_0..H_kmax` by inverting the alternating product.
pub fn complete_by_series(n: usize, s: u32, kmax: usize) -> Vec<Poly> {
    let mut acc = TSeries::one(n, kmax);
    for i in 0..n {
        acc = acc.try_mul(&truncated_factor(n, i, s, kmax, -1)).expect("same shape");
    }
    acc.inverse().expect("constant term is one").into_coeffs()
}

/// Peels off the last variable one at a time:
/// `E_k(x_1..x_m) = sum_{j=0..s} x_m^j E_{k-j}(x_1..x_{m-1})`.
pub fn elementary_by_peeling(n: usize, s: u32, kmax: usize) -> Vec<Poly> {
    peel(n, kmax, |j| (j <= s as usize).then(BigInt::one))
}

/// `H_k(x_1..x_m) = sum_j a_j x_m^j H_{k-j}(x_1..x_{m-1})` where `a_j` is the
/// coefficient of `y^j` in `(1 + y) / (1 - (-y)^(s+1))`.
pub fn complete_by_peeling(n: usize, s: u32, kmax: usize) -> Vec<Poly> {
    let period = s as usize + 1;
    peel(n, kmax, |j| {
        (j % period <= 1).then(|| {
            let blocks = j / period;
            if (period * blocks) % 2 == 1 {
                -BigInt::one()
            } else {
                BigInt::one()
            }
        })
    })
}

fn peel(n: usize, kmax: usize, weight: impl Fn(usize) -> Option<BigInt>) -> Vec<Poly> {
    let mut prev: Vec<Poly> = (0..=kmax)
        .map(|k| if k == 0 { MPoly::one(n) } else { MPoly::zero(n) })
        .collect();
    for i in 0..n {
        let mut cur = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            let mut acc = MPoly::zero(n);
            for j in 0..=k {
                let Some(a) = weight(j) else { continue };
                if prev[k - j].is_zero() {
                    continue;
                }
                acc.add_assign_poly(&shift_var(&prev[k - j], i, j as u32).scale_int(&a));
            }
            cur.push(acc);
        }
        prev = cur;
    }
    prev
}

/// The scalar `c_k` with `P_k = c_k p_k`: `(-1)^k s` when `(s+1) | k`,
/// `(-1)^(k-1)` otherwise.
pub fn power_sum_scale(k: u32, s: u32) -> BigInt {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    if k.is_multiple_of(s + 1) {
        BigInt::from(sign * s as i64)
    } else {
        BigInt::from(-sign)
    }
}

/// Tables of `E_k`, `H_k` for `k <= kmax` in `n` variables at fixed `s`.
///
/// `E` is built by peeling variables and checked against the series
/// product. `H` is built by series inversion and checked against
/// `H_k(x_1..x_{n-1}) = sum_{j=0..s} (-1)^j x_n^j H_{k-j}(x_1..x_n)`.
/// Construction panics on any disagreement.
#[derive(Clone, Debug)]
pub struct GenTable {
    n: usize,
    s: u32,
    e: Vec<Poly>,
    h: Vec<Poly>,
}

impl GenTable {
    pub fn new(n: usize, s: u32, kmax: usize) -> Self {
        let e = elementary_by_peeling(n, s, kmax);
        assert_eq!(e, elementary_by_series(n, s, kmax), "E tables disagree (n={n}, s={s})");
        let h = complete_by_series(n, s, kmax);
        if n > 0 {
            let fewer = complete_by_series(n - 1, s, kmax);
            for (k, lhs) in fewer.iter().enumerate() {
                let mut rhs = MPoly::zero(n);
                for j in 0..=k.min(s as usize) {
                    let term = shift_var(&h[k - j], n - 1, j as u32);
                    rhs.add_assign_poly(&if j % 2 == 1 { -&term } else { term });
                }
                assert_eq!(lhs.embed(n), rhs, "H tables disagree (n={n}, s={s}, k={k})");
            }
        }
        GenTable { n, s, e, h }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn kmax(&self) -> usize {
        self.e.len() - 1
    }

    /// `E_k`, zero for negative `k`. Panics past `kmax`.
    pub fn e(&self, k: i64) -> Poly {
        self.lookup(&self.e, k)
    }

    /// `H_k`, zero for negative `k`. Panics past `kmax`.
    pub fn h(&self, k: i64) -> Poly {
        self.lookup(&self.h, k)
    }

    pub fn e_ref(&self, k: usize) -> &Poly {
        &self.e[k]
    }

    pub fn h_ref(&self, k: usize) -> &Poly {
        &self.h[k]
    }

    fn lookup(&self, table: &[Poly], k: i64) -> Poly {
        if k < 0 {
            return MPoly::zero(self.n);
        }
        assert!((k as usize) < table.len(), "index {k} past table bound {}", self.kmax());
        table[k as usize].clone()
    }

    /// `P_k = c_k p_k`.
    pub fn p(&self, k: u32) -> Result<Poly> {
        gen_power_sum(k, self.s, self.n)
    }

    pub fn e_product(&self, lambda: &Partition) -> Poly {
        product(self.n, lambda.parts().iter().map(|&p| self.e_ref(p as usize)))
    }

    pub fn h_product(&self, lambda: &Partition) -> Poly {
        product(self.n, lambda.parts().iter().map(|&p| self.h_ref(p as usize)))
    }

    pub fn p_product(&self, lambda: &Partition) -> Result<Poly> {
        let ps = lambda.parts().iter().map(|&p| self.p(p)).collect::<Result<Vec<_>>>()?;
        Ok(product(self.n, ps.iter()))
    }
}

/// Product of the given polynomials, `1` for an empty list.
pub fn product<'a>(n: usize, factors: impl Iterator<Item = &'a Poly>) -> Poly {
    let mut acc = MPoly::one(n);
    for f in factors {
        acc = &acc * f;
    }
    acc
}

pub fn gen_elementary(k: u32, s: u32, n: usize) -> Poly {
    elementary_by_peeling(n, s, k as usize).pop().expect("nonempty")
}

pub fn gen_complete(k: u32, s: u32, n: usize) -> Poly {
    complete_by_series(n, s, k as usize).pop().expect("nonempty")
}

/// `P_k(x_1..x_n)`; undefined at `k = 0`.
pub fn gen_power_sum(k: u32, s: u32, n: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::PowerSumIndexZero);
    }
    Ok(classical(Classical::PowerSum, k, n).scale_int(&power_sum_scale(k, s)))
}

/// Product of `E_{lambda_i}`, `H_{lambda_i}` or `P_{lambda_i}` over the parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenFamily {
    E,
    H,
    P,
}

pub fn product_over_partition(family: GenFamily, lambda: &Partition, s: u32, n: usize) -> Result<Poly> {
    let table = GenTable::new(n, s, lambda.largest() as usize);
    match family {
        GenFamily::E => Ok(table.e_product(lambda)),
        GenFamily::H => Ok(table.h_product(lambda)),
        GenFamily::P => table.p_product(lambda),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::symfun::classical::m_lambda;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn s_one_is_classical() {
        for n in 1..=4 {
            let t = GenTable::new(n, 1, 6);
            for k in 0..=6u32 {
                assert_eq!(t.e(k as i64), classical(Classical::Elementary, k, n), "e_{k}, n={n}");
                assert_eq!(t.h(k as i64), classical(Classical::Complete, k, n), "h_{k}, n={n}");
            }
        }
    }

    #[test]
    fn e3_s2_three_variables() {
        // E_3^(2) = m_21 + m_111, which includes x_2 x_3^2
        let e = gen_elementary(3, 2, 3);
        let expected = &m_lambda(&part(&[2, 1]), 3) + &m_lambda(&part(&[1, 1, 1]), 3);
        assert_eq!(e, expected);
        assert_eq!(e.coeff(&Monomial::new(vec![0, 1, 2])), Some(&BigInt::one()));
    }

    #[test]
    fn h3_s2_three_variables() {
        // only exponents that are 0 or 1 mod 3 survive, with sign (-1)^(k + sum(a_i mod 3))
        let h = gen_complete(3, 2, 3);
        let expected = &m_lambda(&part(&[3]), 3).scale_i64(-1) + &m_lambda(&part(&[1, 1, 1]), 3);
        assert_eq!(h, expected);
        assert_eq!(h.to_string(), "-x1^3 - x2^3 - x3^3 + x1*x2*x3");
    }

    #[test]
    fn degree_and_symmetry() {
        let t = GenTable::new(3, 3, 7);
        for k in 0..=7 {
            assert!(t.e(k).is_homogeneous_of(k as u32));
            assert!(t.h(k).is_homogeneous_of(k as u32));
            assert!(t.e(k).is_symmetric());
            assert!(t.h(k).is_symmetric());
            assert!(t.e(k).terms().all(|(m, c)| c.is_one() && m.exps().iter().all(|&a| a <= 3)));
        }
        assert!(t.e(-1).is_zero());
        // top degree of E is n*s
        assert!(!gen_elementary(9, 3, 3).is_zero());
        assert!(gen_elementary(10, 3, 3).is_zero());
    }

    #[test]
    fn peeling_h_agrees_with_series() {
        for n in 0..=3 {
            for s in 1..=4 {
                assert_eq!(complete_by_peeling(n, s, 8), complete_by_series(n, s, 8), "n={n} s={s}");
            }
        }
    }

    #[test]
    fn power_sum_scale_values() {
        assert_eq!(power_sum_scale(1, 2), BigInt::from(1));
        assert_eq!(power_sum_scale(2, 2), BigInt::from(-1));
        assert_eq!(power_sum_scale(3, 2), BigInt::from(-2));
        assert_eq!(power_sum_scale(6, 2), BigInt::from(2));
        assert_eq!(power_sum_scale(4, 1), BigInt::from(1));
        assert_eq!(gen_power_sum(0, 2, 3).unwrap_err(), Error::PowerSumIndexZero);
    }

    #[test]
    fn partition_products() {
        let lambda = part(&[2, 1]);
        let t = GenTable::new(2, 2, 2);
        assert_eq!(t.e_product(&lambda), &t.e(2) * &t.e(1));
        assert_eq!(product_over_partition(GenFamily::H, &lambda, 2, 2).unwrap(), &t.h(2) * &t.h(1));
        assert_eq!(t.e_product(&Partition::empty()), MPoly::one(2));
        assert_eq!(
            product_over_partition(GenFamily::P, &lambda, 2, 2).unwrap(),
            &t.p(2).unwrap() * &t.p(1).unwrap()
        );
    }
}
