use num_bigint::BigInt;
use num_traits::Zero;

use super::mpoly::MPoly;
use crate::exactalg::{BiPoly, Ring, UniPoly};

/// Evaluation points used to turn an integer polynomial into a number or a
/// `q` / `p,q` polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecializeKind {
    /// `x_i -> 1`
    AllOnes,
    /// `x_i -> q^(i-1)`
    GeometricQ,
    /// `x_i -> p^(n-i) q^(i-1)`
    PqGrid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialized {
    Integer(BigInt),
    Uni(UniPoly),
    Bi(BiPoly),
}

pub fn specialize(p: &MPoly<BigInt>, kind: SpecializeKind) -> Specialized {
    match kind {
        SpecializeKind::AllOnes => Specialized::Integer(all_ones(p)),
        SpecializeKind::GeometricQ => Specialized::Uni(geometric_q(p)),
        SpecializeKind::PqGrid => Specialized::Bi(pq_grid(p)),
    }
}

pub fn all_ones(p: &MPoly<BigInt>) -> BigInt {
    p.terms().fold(BigInt::zero(), |acc, (_, c)| acc + c)
}

pub fn geometric_q(p: &MPoly<BigInt>) -> UniPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (m, c) in p.terms() {
        let e: usize = m.exps().iter().enumerate().map(|(i, &a)| i * a as usize).sum();
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] += c;
    }
    UniPoly::new(coeffs)
}

pub fn pq_grid(p: &MPoly<BigInt>) -> BiPoly {
    let n = p.nvars() as u32;
    let mut out = BiPoly::default();
    for (m, c) in p.terms() {
        let (mut dp, mut dq) = (0u32, 0u32);
        for (i, &a) in m.exps().iter().enumerate() {
            dp += (n - 1 - i as u32) * a;
            dq += i as u32 * a;
        }
        out = out.add_ref(&BiPoly::monomial(dp, dq, c.clone()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::Monomial;

    #[test]
    fn product_of_all_variables() {
        let p = MPoly::monomial(Monomial::new(vec![1, 1, 1]), BigInt::from(1));
        assert_eq!(specialize(&p, SpecializeKind::AllOnes), Specialized::Integer(1.into()));
        assert_eq!(geometric_q(&p), UniPoly::from_i64s(&[0, 0, 0, 1]));
        assert_eq!(pq_grid(&p), BiPoly::monomial(3, 3, 1.into()));
    }
}
