use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Sign and magnitude of a coefficient as it appears in front of a monomial.
///
/// `magnitude` is `None` when the coefficient is a unit (`1` or `-1`), in
/// which case only the sign is printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffText {
    pub negative: bool,
    pub magnitude: Option<String>,
}

/// An exact commutative ring.
///
/// Elements of some rings (the cyclotomic quotient) carry their own modulus,
/// so there is no context-free `zero()` here; see [`UnitalRing`] for rings
/// where constants can be built from nothing.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_int(&self, n: &BigInt) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    /// Multiplicative inverse when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn coeff_text(&self) -> CoeffText;

    fn to_json(&self) -> Value;

    fn from_json(value: &Value) -> Result<Self>;
}

/// A ring whose zero, one and integer constants need no context.
pub trait UnitalRing: Ring {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_int(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }
}

pub(crate) fn int_from_json(value: &Value) -> Result<BigInt> {
    match value {
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Json(format!("not a decimal integer: {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Json(format!("not an integer: {n}"))),
        other => Err(Error::Json(format!("expected integer, got {other}"))),
    }
}

impl Ring for BigInt {
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: &BigInt) -> Self {
        self * n
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn coeff_text(&self) -> CoeffText {
        let magnitude = self.abs();
        CoeffText {
            negative: self.is_negative(),
            magnitude: (!magnitude.is_one()).then(|| magnitude.to_string()),
        }
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(value: &Value) -> Result<Self> {
        int_from_json(value)
    }
}

impl UnitalRing for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Ring for BigRational {
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: &BigInt) -> Self {
        self * BigRational::from_integer(n.clone())
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn coeff_text(&self) -> CoeffText {
        let magnitude = self.abs();
        CoeffText {
            negative: self.is_negative(),
            magnitude: (!magnitude.is_one()).then(|| magnitude.to_string()),
        }
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(value: &Value) -> Result<Self> {
        let text = match value {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            other => return Err(Error::Json(format!("expected rational, got {other}"))),
        };
        match text.split_once('/') {
            Some((num, den)) => {
                let num = num.parse::<BigInt>().map_err(|_| Error::Json(text.clone()))?;
                let den = den.parse::<BigInt>().map_err(|_| Error::Json(text.clone()))?;
                if Zero::is_zero(&den) {
                    return Err(Error::Json(format!("zero denominator in {text}")));
                }
                Ok(BigRational::new(num, den))
            }
            None => Ok(BigRational::from_integer(
                text.parse::<BigInt>().map_err(|_| Error::Json(text.clone()))?,
            )),
        }
    }
}

impl UnitalRing for BigRational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_int(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_stays_reduced() {
        let a = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        let back = BigRational::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn integer_json_is_decimal_string() {
        let n: BigInt = "-123456789012345678901234567890".parse().unwrap();
        assert_eq!(n.to_json(), Value::String(n.to_string()));
        assert_eq!(BigInt::from_json(&n.to_json()).unwrap(), n);
    }

    #[test]
    fn coeff_text_hides_units() {
        assert_eq!(
            BigInt::from(-1).coeff_text(),
            CoeffText { negative: true, magnitude: None }
        );
        assert_eq!(
            BigInt::from(3).coeff_text(),
            CoeffText { negative: false, magnitude: Some("3".into()) }
        );
    }
}
