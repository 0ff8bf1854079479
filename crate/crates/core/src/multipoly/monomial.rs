use std::cmp::{Ordering, Reverse};
use std::fmt;

/// Exponent vector of `x_1^a_1 ... x_n^a_n`; position `i` holds the exponent of `x_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_{i+1}^e` in `n` variables.
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    /// Every exponent multiplied by `s`, i.e. the substitution `x_i -> x_i^s`.
    pub fn scale(&self, s: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * s).collect())
    }

    /// Nonzero exponents sorted in decreasing order.
    pub fn shape(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self.0.iter().copied().filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    pub fn swap(&self, i: usize, j: usize) -> Monomial {
        let mut exps = self.0.clone();
        exps.swap(i, j);
        Monomial(exps)
    }

    /// Pad with zero exponents up to `n` variables.
    pub fn embed(&self, n: usize) -> Monomial {
        let mut exps = self.0.clone();
        exps.resize(n, 0);
        Monomial(exps)
    }
}

/// Canonical listing order: higher degree first, then by exponent shape
/// (reverse lexicographic on the sorted exponents), then by the exponent
/// vector itself in decreasing lexicographic order.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let key = |m: &Monomial| (Reverse(m.degree()), Reverse(m.shape()));
    key(a).cmp(&key(b)).then_with(|| b.0.cmp(&a.0))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{e}", i + 1)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Monomial::new(vec![2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }

    #[test]
    fn canonical_order_groups_by_shape() {
        let mut ms = [Monomial::new(vec![1, 1, 1]),
            Monomial::new(vec![0, 0, 3]),
            Monomial::new(vec![3, 0, 0]),
            Monomial::new(vec![0, 3, 0])];
        ms.sort_by(canonical_cmp);
        let shown: Vec<String> = ms.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["x1^3", "x2^3", "x3^3", "x1*x2*x3"]);
    }
}
