use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::ring::{int_from_json, CoeffText, Ring, UnitalRing};
use super::unipoly::{write_terms, UniPoly};
use crate::error::{Error, Result};

/// Sparse integer polynomial in `p` and `q`, keyed by `(deg_p, deg_q)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial(deg_p: u32, deg_q: u32, c: BigInt) -> Self {
        let mut out = BiPoly::default();
        out.add_term(deg_p, deg_q, c);
        out
    }

    pub fn p() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn q() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    pub fn add_term(&mut self, deg_p: u32, deg_q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((deg_p, deg_q)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(deg_p, deg_q));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_p: u32, deg_q: u32) -> BigInt {
        self.terms.get(&(deg_p, deg_q)).cloned().unwrap_or_default()
    }

    /// Substitute `p -> p^s`, `q -> q^s`.
    pub fn scale_exponents(&self, s: u32) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a * s, b * s), c.clone())).collect(),
        }
    }

    /// Multiply by `p^a q^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect(),
        }
    }

    /// Set `p = 1`.
    pub fn collapse_p(&self) -> UniPoly {
        let mut out = UniPoly::default();
        for (&(_, b), c) in &self.terms {
            out = out.add_ref(&UniPoly::monomial(b as usize, c.clone()));
        }
        out
    }

    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // descending p-degree reads like the usual (p,q)-analogue listings
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), c)| {
                let mut parts = Vec::new();
                match a {
                    0 => {}
                    1 => parts.push("p".to_string()),
                    _ => parts.push(format!("p^{a}")),
                }
                match b {
                    0 => {}
                    1 => parts.push("q".to_string()),
                    _ => parts.push(format!("q^{b}")),
                }
                (parts.join("*"), c)
            })
            .collect();
        write_terms(f, terms)
    }
}

impl Ring for BiPoly {
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = BiPoly::default();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }

    fn mul_int(&self, n: &BigInt) -> Self {
        if n.is_zero() {
            return BiPoly::default();
        }
        BiPoly { terms: self.terms.iter().map(|(&k, c)| (k, c * n)).collect() }
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((&(0, 0), c)) if self.terms.len() == 1 && c.abs().is_one() => Some(self.clone()),
            _ => None,
        }
    }

    fn coeff_text(&self) -> CoeffText {
        match self.terms.iter().next() {
            Some((&(0, 0), c)) if self.terms.len() == 1 => c.coeff_text(),
            _ => CoeffText { negative: false, magnitude: Some(format!("({self})")) },
        }
    }

    /// List of `[deg_p, deg_q, "coeff"]` triples in ascending degree order.
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(a, b), c)| json!([a, b, c.to_string()]))
                .collect(),
        )
    }

    fn from_json(value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Json(format!("expected term list, got {value}")))?;
        let mut out = BiPoly::default();
        for item in items {
            let triple = item
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Json(format!("expected [p, q, coeff], got {item}")))?;
            let deg = |v: &Value| {
                v.as_u64()
                    .map(|d| d as u32)
                    .ok_or_else(|| Error::Json(format!("bad degree {v}")))
            };
            out.add_term(deg(&triple[0])?, deg(&triple[1])?, int_from_json(&triple[2])?);
        }
        Ok(out)
    }
}

impl UnitalRing for BiPoly {
    fn zero_elem() -> Self {
        BiPoly::default()
    }
    fn one_elem() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }
    fn from_int(n: &BigInt) -> Self {
        Self::monomial(0, 0, n.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_plus_q_squared() {
        let s = BiPoly::p().add_ref(&BiPoly::q());
        let sq = s.mul_ref(&s);
        assert_eq!(sq.to_string(), "p^2 + 2*p*q + q^2");
        assert_eq!(sq.collapse_p(), UniPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(sq.eval_at_ones(), BigInt::from(4));
    }

    #[test]
    fn cancellation_removes_entries() {
        let a = BiPoly::p();
        assert!(a.sub_ref(&a).is_zero());
        assert_eq!(a.sub_ref(&a), BiPoly::zero());
    }

    #[test]
    fn json_roundtrip() {
        let a = BiPoly::p().mul_ref(&BiPoly::q()).add_ref(&BiPoly::from_i64(-3));
        assert_eq!(BiPoly::from_json(&a.to_json()).unwrap(), a);
    }
}
