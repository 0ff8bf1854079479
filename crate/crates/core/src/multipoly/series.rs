use super::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::exactalg::{Ring, UnitalRing};

/// Power series in an auxiliary variable `t`, truncated after `t^order`,
/// with polynomial coefficients in `x_1..x_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TSeries<R> {
    n: usize,
    coeffs: Vec<MPoly<R>>,
}

impl<R: Ring> TSeries<R> {
    pub fn zero(n: usize, order: usize) -> Self {
        TSeries { n, coeffs: vec![MPoly::zero(n); order + 1] }
    }

    /// Series with the given leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn from_coeffs(n: usize, order: usize, coeffs: Vec<MPoly<R>>) -> Result<Self> {
        let mut out = Self::zero(n, order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            if c.nvars() != n {
                return Err(Error::VariableMismatch { left: n, right: c.nvars() });
            }
            out.coeffs[k] = c;
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MPoly<R> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MPoly<R>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MPoly<R>> {
        self.coeffs
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::VariableMismatch { left: self.n, right: rhs.n });
        }
        if self.order() != rhs.order() {
            return Err(Error::TruncationMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(TSeries {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Cauchy product, truncated at the common order.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let order = self.order();
        let mut out = Self::zero(self.n, order);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_assign_poly(&(a * b));
                }
            }
        }
        Ok(out)
    }

    /// The series `v` with `self * v = 1` up to `t^order`.
    ///
    /// Requires the constant coefficient to be a unit constant; `v_0` is its
    /// inverse and `v_m = -v_0 * sum_{i=1..m} u_i v_{m-i}`.
    pub fn inverse(&self) -> Result<Self> {
        let u0 = self.coeffs[0].as_constant().ok_or(Error::NonUnitConstant)?;
        let inv0 = u0.unit_inverse().ok_or(Error::NonUnitConstant)?;
        let neg_inv0 = inv0.neg_ref();
        let mut v: Vec<MPoly<R>> = Vec::with_capacity(self.coeffs.len());
        v.push(MPoly::constant(self.n, inv0));
        for m in 1..self.coeffs.len() {
            let mut acc = MPoly::zero(self.n);
            for i in 1..=m {
                if !self.coeffs[i].is_zero() && !v[m - i].is_zero() {
                    acc.add_assign_poly(&(&self.coeffs[i] * &v[m - i]));
                }
            }
            v.push(acc.scale(&neg_inv0));
        }
        Ok(TSeries { n: self.n, coeffs: v })
    }
}

impl<R: Ring> std::fmt::Debug for TSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<R: UnitalRing> TSeries<R> {
    pub fn one(n: usize, order: usize) -> Self {
        let mut out = Self::zero(n, order);
        out.coeffs[0] = MPoly::one(n);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = TSeries<BigInt>;
    type P = MPoly<BigInt>;

    #[test]
    fn geometric_series() {
        let u = S::from_coeffs(1, 6, vec![P::one(1), P::constant(1, BigInt::from(-1))]).unwrap();
        let v = u.inverse().unwrap();
        for k in 0..=6 {
            assert_eq!(v.coeff(k), &P::one(1), "t^{k}");
        }
        assert_eq!(u.try_mul(&v).unwrap(), S::one(1, 6));
        assert_eq!(v.inverse().unwrap(), u);
    }

    #[test]
    fn non_unit_constant_rejected() {
        let u = S::from_coeffs(1, 3, vec![P::constant(1, BigInt::from(2))]).unwrap();
        assert_eq!(u.inverse().unwrap_err(), Error::NonUnitConstant);
        let u = S::from_coeffs(1, 3, vec![P::var(1, 0)]).unwrap();
        assert_eq!(u.inverse().unwrap_err(), Error::NonUnitConstant);
    }

    #[test]
    fn mismatched_orders_rejected() {
        assert_eq!(
            S::one(1, 2).try_mul(&S::one(1, 3)).unwrap_err(),
            Error::TruncationMismatch(2, 3)
        );
    }

    #[test]
    fn truncation_drops_high_terms() {
        let x = P::var(1, 0);
        let a = S::from_coeffs(1, 2, vec![P::one(1), x.clone(), x.clone(), x.clone()]).unwrap();
        assert_eq!(a.order(), 2);
        let sq = a.try_mul(&a).unwrap();
        assert_eq!(sq.coeff(2), &(&x.scale_i64(2) + &x.pow(2)));
    }
}
