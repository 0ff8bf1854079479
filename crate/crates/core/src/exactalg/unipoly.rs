use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::ring::{int_from_json, CoeffText, Ring, UnitalRing};
use crate::error::{Error, Result};

/// Dense integer polynomial in `q`, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^e`.
    pub fn monomial(e: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// `p(q^s)`.
    pub fn scale_exponents(&self, s: usize) -> Self {
        if self.coeffs.is_empty() || s == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * s + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[e * s] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `q^e * p(q)`.
    pub fn shift(&self, e: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let var = match e {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{e}"),
                };
                (var, c)
            })
            .collect();
        write_terms(f, terms)
    }
}

/// Shared `+`/`-` joined rendering for sparse integer polynomials.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: Vec<(String, &BigInt)>,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (var, c)) in terms.into_iter().enumerate() {
        let mag = c.abs();
        match (i, c.is_negative()) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        match (var.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{var}")?,
            (false, false) => write!(f, "{mag}*{var}")?,
        }
    }
    Ok(())
}

impl Ring for UniPoly {
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    fn neg_ref(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul_int(&self, n: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * n).collect())
    }

    fn unit_inverse(&self) -> Option<Self> {
        (self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()).then(|| self.clone())
    }

    fn coeff_text(&self) -> CoeffText {
        if self.coeffs.len() == 1 {
            return self.coeffs[0].coeff_text();
        }
        CoeffText { negative: false, magnitude: Some(format!("({self})")) }
    }

    /// Ascending coefficient list of decimal strings.
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| Value::String(c.to_string())).collect())
    }

    fn from_json(value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Json(format!("expected coefficient list, got {value}")))?;
        Ok(Self::new(items.iter().map(int_from_json).collect::<Result<_>>()?))
    }
}

impl UnitalRing for UniPoly {
    fn zero_elem() -> Self {
        UniPoly::default()
    }
    fn one_elem() -> Self {
        UniPoly { coeffs: vec![BigInt::one()] }
    }
    fn from_int(n: &BigInt) -> Self {
        Self::new(vec![n.clone()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_trims() {
        let p = UniPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(UniPoly::from_i64s(&[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = UniPoly::from_i64s(&[1, 1]);
        let b = UniPoly::from_i64s(&[1, -1]);
        assert_eq!(a.mul_ref(&b), UniPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(a.sub_ref(&a), UniPoly::zero());
        assert_eq!(a.scale_exponents(3), UniPoly::from_i64s(&[1, 0, 0, 1]));
        assert_eq!(a.shift(2), UniPoly::from_i64s(&[0, 0, 1, 1]));
        assert_eq!(a.eval(&BigInt::from(5)), BigInt::from(6));
    }

    #[test]
    fn display() {
        let p = UniPoly::from_i64s(&[0, 1, 2, 1, 2, 1]);
        assert_eq!(p.to_string(), "q + 2*q^2 + q^3 + 2*q^4 + q^5");
        assert_eq!(UniPoly::from_i64s(&[-3, 0, -1]).to_string(), "-3 - q^2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
