//! Exact arithmetic with roots of unity.
//!
//! A [`CycInt`] of order `m` is an element of `Z[x] / Phi_m(x)`, where
//! `Phi_m` is the `m`-th cyclotomic polynomial. The class of `x` is a
//! primitive `m`-th root of unity `w`, so the powers `w^1, ..., w^(m-1)` are
//! exactly the nontrivial `m`-th roots of unity, primitive or not. The ring
//! is an integral domain with basis `1, x, ..., x^(phi(m)-1)`, which makes
//! the normal form unique and lets a symmetric expression in all nontrivial
//! roots collapse to an integer constant.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::ring::{int_from_json, CoeffText, Ring};
use crate::error::{Error, Result};

/// Coefficients (ascending, monic) of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1, "cyclotomic polynomial of order 0");
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (t, &d) in den.iter().enumerate() {
                rem[i + t] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Element of `Z[w]`, `w` a primitive root of unity of the stored order.
#[derive(Clone)]
pub struct CycInt {
    order: u32,
    coeffs: Vec<BigInt>,
    modulus: Arc<[i64]>,
}

impl CycInt {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn zero(order: u32) -> Result<Self> {
        if order < 2 {
            return Err(Error::CyclotomicOrder(order));
        }
        let modulus: Arc<[i64]> = cyclotomic_polynomial(order).into();
        let rank = modulus.len() - 1;
        Ok(CycInt { order, coeffs: vec![BigInt::zero(); rank], modulus })
    }

    pub fn constant(order: u32, c: BigInt) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = c;
        Ok(z)
    }

    /// `sum_r counts[r] * w^r`, exponents taken modulo the order.
    pub fn from_power_counts(order: u32, counts: &[BigInt]) -> Result<Self> {
        let mut z = Self::zero(order)?;
        let mut raw = vec![BigInt::zero(); order as usize];
        for (r, c) in counts.iter().enumerate() {
            raw[r % order as usize] += c;
        }
        z.coeffs = z.reduce(raw);
        Ok(z)
    }

    /// `w^e` in normal form.
    pub fn root_power(order: u32, e: u64) -> Result<Self> {
        let mut counts = vec![BigInt::zero(); order as usize];
        counts[(e % order as u64) as usize] = BigInt::one();
        Self::from_power_counts(order, &counts)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Basis coordinates in `1, w, ..., w^(rank-1)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// The integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn reduce(&self, mut raw: Vec<BigInt>) -> Vec<BigInt> {
        let rank = self.modulus.len() - 1;
        for i in (rank..raw.len()).rev() {
            if raw[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut raw[i]);
            for (t, &m) in self.modulus[..rank].iter().enumerate() {
                if m != 0 {
                    raw[i - rank + t] -= &c * m;
                }
            }
        }
        raw.truncate(rank);
        raw.resize(rank, BigInt::zero());
        raw
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order, rhs.order,
            "mixing cyclotomic orders {} and {}",
            self.order, rhs.order
        );
    }

    fn with_coeffs(&self, coeffs: Vec<BigInt>) -> Self {
        CycInt { order: self.order, coeffs, modulus: Arc::clone(&self.modulus) }
    }
}

/// `w_j^e` where `w_j = exp(2 pi i j / (s+1))`, `1 <= j <= s`.
pub fn cyc_root_power(s: u32, j: u32, e: u64) -> Result<CycInt> {
    if j == 0 || j > s {
        return Err(Error::RootIndex { j, s });
    }
    CycInt::root_power(s + 1, j as u64 * e)
}

/// Power sum `p_k` evaluated at the `s` nontrivial `(s+1)`-th roots of unity.
pub fn cyc_power_sum(s: u32, k: u64) -> Result<CycInt> {
    let order = s + 1;
    let mut counts = vec![BigInt::zero(); order as usize];
    for j in 1..=s as u64 {
        counts[((j * k) % order as u64) as usize] += 1;
    }
    CycInt::from_power_counts(order, &counts)
}

pub fn cyc_as_integer(v: &CycInt) -> Option<BigInt> {
    v.as_integer()
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[{}]({})", self.order, self)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write_power(f, i)?,
                (_, false) => {
                    write!(f, "{mag}*")?;
                    write_power(f, i)?
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, i: usize) -> fmt::Result {
    if i == 1 {
        write!(f, "w")
    } else {
        write!(f, "w^{i}")
    }
}

impl Ring for CycInt {
    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        self.with_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        self.with_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        let rank = self.rank();
        let mut raw = vec![BigInt::zero(); 2 * rank - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        self.with_coeffs(self.reduce(raw))
    }

    fn neg_ref(&self) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }

    fn mul_int(&self, n: &BigInt) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| a * n).collect())
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        self.assert_same_order(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        let c = self.as_integer()?;
        c.abs().is_one().then(|| self.clone())
    }

    fn coeff_text(&self) -> CoeffText {
        match self.as_integer() {
            Some(c) => c.coeff_text(),
            None => CoeffText { negative: false, magnitude: Some(format!("({self})")) },
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let order = value
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("CycInt without order".into()))?;
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("CycInt without coeffs".into()))?
            .iter()
            .map(int_from_json)
            .collect::<Result<Vec<_>>>()?;
        let z = CycInt::zero(order as u32)?;
        if coeffs.len() != z.rank() {
            return Err(Error::Json(format!(
                "order {order} needs {} coefficients, got {}",
                z.rank(),
                coeffs.len()
            )));
        }
        Ok(z.with_coeffs(coeffs))
    }
}
