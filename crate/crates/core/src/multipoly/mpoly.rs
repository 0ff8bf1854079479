use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::monomial::{canonical_cmp, Monomial};
use crate::error::{Error, Result};
use crate::exactalg::{Ring, UnitalRing};

/// Sparse polynomial in `x_1..x_n` with coefficients in `R`.
///
/// Zero coefficients are never stored, so derived equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<R> {
    n: usize,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(n: usize) -> Self {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: R) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn monomial(m: Monomial, c: R) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// Sum of the given terms; repeated monomials are combined.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, R)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.nvars() != n {
                return Err(Error::MonomialLength { expected: n, got: m.nvars() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: R) {
        debug_assert_eq!(m.nvars(), self.n);
        if c.is_zero_elem() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero_elem() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Number of nonzero terms; [`MPoly::is_zero`] is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&R> {
        self.terms.get(m)
    }

    /// Terms in storage order (lexicographic on exponent vectors).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    /// Terms in canonical listing order, the order used for text and JSON.
    pub fn canonical_terms(&self) -> Vec<(&Monomial, &R)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| canonical_cmp(a.0, b.0));
        terms
    }

    /// Constant term when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<R> {
        match self.terms.len() {
            0 => None,
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check_vars(&self, rhs: &Self) -> Result<()> {
        if self.n == rhs.n {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.n, right: rhs.n })
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        let mut acc: BTreeMap<Monomial, R> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                match acc.entry(ma.mul(mb)) {
                    Entry::Vacant(v) => {
                        v.insert(ca.mul_ref(cb));
                    }
                    Entry::Occupied(mut o) => o.get_mut().add_product(ca, cb),
                }
            }
        }
        acc.retain(|_, c| !c.is_zero_elem());
        Ok(MPoly { n: self.n, terms: acc })
    }

    /// In-place `self += rhs`.
    pub fn add_assign_poly(&mut self, rhs: &Self) {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|a| a.mul_ref(c))
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        self.map_coeffs(|a| a.mul_int(n))
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        self.scale_int(&BigInt::from(n))
    }

    /// Apply `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> MPoly<S> {
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero_elem())
                .collect(),
        }
    }

    /// Fallible coefficient map; the first failing coefficient is reported
    /// together with its monomial.
    pub fn try_map_coeffs<S: Ring, E>(
        &self,
        mut f: impl FnMut(&Monomial, &R) -> std::result::Result<S, E>,
    ) -> std::result::Result<MPoly<S>, E> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(m, c)?;
            if !v.is_zero_elem() {
                terms.insert(m.clone(), v);
            }
        }
        Ok(MPoly { n: self.n, terms })
    }

    /// `p(x_1^s, ..., x_n^s)`.
    pub fn substitute_power(&self, s: u32) -> Self {
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.scale(s), c.clone())).collect(),
        }
    }

    /// The same polynomial viewed in `n >= self.nvars()` variables.
    pub fn embed(&self, n: usize) -> Self {
        assert!(n >= self.n, "cannot embed {} variables into {n}", self.n);
        MPoly {
            n,
            terms: self.terms.iter().map(|(m, c)| (m.embed(n), c.clone())).collect(),
        }
    }

    /// Swap `x_{i+1}` and `x_{j+1}`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.swap(i, j), c.clone())).collect(),
        }
    }

    /// Invariance under every adjacent transposition, which generate the
    /// full symmetric group.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// Total degrees present, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .canonical_terms()
            .into_iter()
            .map(|(m, c)| json!({"exps": m.exps(), "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("polynomial without `n`".into()))? as usize;
        let items = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("polynomial without `terms`".into()))?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let exps = item
                .get("exps")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Json(format!("term without exps: {item}")))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .ok_or_else(|| Error::Json(format!("bad exponent {e}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            let coeff = R::from_json(
                item.get("coeff")
                    .ok_or_else(|| Error::Json(format!("term without coeff: {item}")))?,
            )?;
            terms.push((Monomial::new(exps), coeff));
        }
        Self::from_terms(n, terms)
    }
}

impl<R: UnitalRing> MPoly<R> {
    pub fn one(n: usize) -> Self {
        Self::constant(n, R::one_elem())
    }

    /// The variable `x_{i+1}`.
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var_power(n, i, 1), R::one_elem())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[n={}](", self.n)?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl<R: Ring> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.canonical_terms().into_iter().enumerate() {
            let text = c.coeff_text();
            match (i, text.negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (m.is_one(), text.magnitude) {
                (true, Some(mag)) => write!(f, "{mag}")?,
                (true, None) => write!(f, "1")?,
                (false, Some(mag)) => write!(f, "{mag}*{m}")?,
                (false, None) => write!(f, "{m}")?,
            }
        }
        Ok(())
    }
}

// Operator forms panic on a variable-count mismatch; the `try_*` methods report it.

impl<R: Ring> Add for &MPoly<R> {
    type Output = MPoly<R>;
    fn add(self, rhs: Self) -> MPoly<R> {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<R: Ring> Sub for &MPoly<R> {
    type Output = MPoly<R>;
    fn sub(self, rhs: Self) -> MPoly<R> {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<R: Ring> Mul for &MPoly<R> {
    type Output = MPoly<R>;
    fn mul(self, rhs: Self) -> MPoly<R> {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl<R: Ring> Neg for &MPoly<R> {
    type Output = MPoly<R>;
    fn neg(self) -> MPoly<R> {
        self.map_coeffs(Ring::neg_ref)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<BigInt>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let prod = &(&x1 + &x2) * &(&x1 - &x2);
        let expected = &x1.pow(2) - &x2.pow(2);
        assert_eq!(prod, expected);
        assert_eq!(prod.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn one_is_identity() {
        let p = &(&x(3, 0) * &x(3, 1)) + &P::constant(3, BigInt::from(-4));
        assert_eq!(&P::one(3) * &p, p);
    }

    #[test]
    fn monomial_product() {
        let a = &x(3, 0) * &x(3, 1);
        let b = &x(3, 0) * &x(3, 2);
        assert_eq!((&a * &b).to_string(), "x1^2*x2*x3");
    }

    #[test]
    fn mismatched_variable_counts() {
        let err = x(2, 0).try_mul(&x(3, 0)).unwrap_err();
        assert_eq!(err, Error::VariableMismatch { left: 2, right: 3 });
        assert!(x(2, 0).try_add(&x(3, 0)).is_err());
    }

    #[test]
    fn substitute_power_examples() {
        let p = &x(2, 0) + &x(2, 1);
        assert_eq!(p.substitute_power(3).to_string(), "x1^3 + x2^3");
        let c = P::constant(2, BigInt::from(5));
        assert_eq!(c.substitute_power(4), c);
        let e2 = &x(2, 0) * &x(2, 1);
        assert_eq!(e2.substitute_power(2), &x(2, 0).pow(2) * &x(2, 1).pow(2));
    }

    #[test]
    fn symmetry() {
        assert!((&x(2, 0) + &x(2, 1)).is_symmetric());
        assert!(!(&x(2, 0) - &x(2, 1)).is_symmetric());
        assert!(P::constant(0, BigInt::from(2)).is_symmetric());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &x(2, 0) - &x(2, 0);
        assert!(p.is_zero());
        assert_eq!(p, P::zero(2));
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn json_layout() {
        let p = &x(2, 0).pow(2).scale_i64(3) - &P::one(2);
        let v = p.to_json();
        assert_eq!(
            v,
            json!({"n": 2, "terms": [
                {"exps": [2, 0], "coeff": "3"},
                {"exps": [0, 0], "coeff": "-1"}
            ]})
        );
        assert_eq!(P::from_json(&v).unwrap(), p);
    }

    #[test]
    fn from_json_rejects_bad_lengths() {
        let v = json!({"n": 2, "terms": [{"exps": [1], "coeff": "1"}]});
        assert_eq!(
            P::from_json(&v).unwrap_err(),
            Error::MonomialLength { expected: 2, got: 1 }
        );
    }
}
