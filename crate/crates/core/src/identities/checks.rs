use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::context::Tables;
use crate::bisnomial::{conversion_outcome, Conversion};
use crate::combinatorics::{weight_sum, Model, Object};
use super::{Outcome, Point};
use crate::exactalg::{CycInt, Ring};
use crate::multipoly::{MPoly, Monomial};
use crate::partitions::{enum_partitions, multinomial, Constraint, Partition};
use crate::symfun::{classical, m_lambda, m_lambda_at_roots, product, Classical, GenTable};

type Poly = MPoly<BigInt>;
type RatPoly = MPoly<BigRational>;

fn compare<T: PartialEq + Display>(lhs: T, rhs: T) -> Outcome {
    Outcome { holds: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string(), note: None }
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn to_rat(p: &Poly) -> RatPoly {
    p.map_coeffs(|c| BigRational::from_integer(c.clone()))
}

fn var_power(n: usize, i: usize, e: u32) -> Poly {
    MPoly::monomial(Monomial::var_power(n, i, e), BigInt::one())
}

/// A partition of `k` with its multiplicities `t_i`, length and
/// `multinomial(t_1, ..., t_k)`.
struct Term {
    lambda: Partition,
    t: Vec<u32>,
    len: i64,
    multinom: BigInt,
}

fn partition_terms(k: u32, constraints: &[Constraint]) -> Vec<Term> {
    enum_partitions(k, constraints)
        .into_iter()
        .map(|lambda| {
            let t = lambda.multiplicities();
            Term { len: lambda.len() as i64, multinom: multinomial(&t), t, lambda }
        })
        .collect()
}

/// `1^t_1 t_1! 2^t_2 t_2! ...`
fn z_lambda(t: &[u32]) -> BigInt {
    let mut z = BigInt::one();
    for (i, &ti) in t.iter().enumerate() {
        for j in 1..=ti {
            z *= BigInt::from(i + 1) * BigInt::from(j);
        }
    }
    z
}

pub(super) fn ortho(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let mut lhs = MPoly::zero(p.n);
    for j in 0..=p.k as i64 {
        lhs.add_assign_poly(&(&g.e(j) * &g.h(p.k as i64 - j)).scale_int(&sign(j)));
    }
    let delta = if p.k == 0 { BigInt::one() } else { BigInt::zero() };
    compare(lhs, MPoly::constant(p.n, delta))
}

fn inversion(g: &GenTable, k: u32, target_h: bool) -> Outcome {
    let mut rhs = MPoly::zero(g.nvars());
    for term in partition_terms(k, &[]) {
        let prod = if target_h { g.e_product(&term.lambda) } else { g.h_product(&term.lambda) };
        rhs.add_assign_poly(&prod.scale_int(&(sign(k as i64 + term.len) * &term.multinom)));
    }
    let lhs = if target_h { g.h(k as i64) } else { g.e(k as i64) };
    compare(lhs, rhs)
}

pub(super) fn inv_h(tables: &Tables, p: &Point) -> Outcome {
    inversion(&tables.generalized(p.n, p.s, p.k as usize), p.k, true)
}

pub(super) fn inv_e(tables: &Tables, p: &Point) -> Outcome {
    inversion(&tables.generalized(p.n, p.s, p.k as usize), p.k, false)
}

pub(super) fn newton_e(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let k = p.k as i64;
    let mut rhs = MPoly::zero(p.n);
    for j in 1..=k {
        let pj = g.p(j as u32).expect("j >= 1");
        rhs.add_assign_poly(&(&pj * &g.e(k - j)).scale_int(&sign(j - 1)));
    }
    compare(g.e(k).scale_i64(k), rhs)
}

pub(super) fn newton_h(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let k = p.k as i64;
    let mut rhs = MPoly::zero(p.n);
    for j in 1..=k {
        let pj = g.p(j as u32).expect("j >= 1");
        rhs.add_assign_poly(&(&pj * &g.h(k - j)));
    }
    compare(g.h(k).scale_i64(k), rhs)
}

pub(super) fn newton_p(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let k = p.k as i64;
    let mut rhs = MPoly::zero(p.n);
    for j in 1..=k {
        rhs.add_assign_poly(&(&g.e(j) * &g.h(k - j)).scale_int(&(sign(j - 1) * j)));
    }
    compare(g.p(p.k).expect("k >= 1"), rhs)
}

pub(super) fn cubic_e(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let k = p.k as i64;
    let mut rhs = MPoly::zero(p.n);
    for k1 in 0..=k {
        for k2 in 0..=k - k1 {
            let k3 = k - k1 - k2;
            let term = &(&g.e(k1) * &g.e(k2)) * &g.h(k3);
            rhs.add_assign_poly(&term.scale_int(&(sign(k3) * (k1 + k2))));
        }
    }
    compare(g.e(k).scale_i64(2 * k), rhs)
}

pub(super) fn cubic_h(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let k = p.k as i64;
    let mut rhs = MPoly::zero(p.n);
    for k1 in 0..=k {
        for k2 in 0..=k - k1 {
            let k3 = k - k1 - k2;
            if k3 == 0 {
                continue;
            }
            let term = &(&g.h(k1) * &g.h(k2)) * &g.e(k3);
            rhs.add_assign_poly(&term.scale_int(&(sign(k3 - 1) * k3)));
        }
    }
    compare(g.h(k).scale_i64(k), rhs)
}

/// Quotient formula for `p_k`. `e_side` picks the `E` version, whose
/// numerator sign is `(-1)^l` and denominator sign `(-1)^l`; the `H`
/// version uses `(-1)^(1+l)` and `(-1)^(k+l)`.
fn power_sum_quotient(g: &GenTable, k: u32, s: u32, e_side: bool) -> Outcome {
    let n = g.nvars();
    let mut numerator: RatPoly = MPoly::zero(n);
    for term in partition_terms(k, &[]) {
        let sgn = if e_side { sign(term.len) } else { sign(1 + term.len) };
        let c = BigRational::new(sgn * &term.multinom, BigInt::from(term.len));
        let prod = if e_side { g.e_product(&term.lambda) } else { g.h_product(&term.lambda) };
        numerator.add_assign_poly(&to_rat(&prod).scale(&c));
    }
    let mut denominator = rat(0);
    for term in partition_terms(k, &[Constraint::MaxPart(s)]) {
        let sgn = if e_side { sign(term.len) } else { sign(k as i64 + term.len) };
        denominator += BigRational::new(sgn * &term.multinom, BigInt::from(term.len));
    }
    let lhs = to_rat(&classical(Classical::PowerSum, k, n));
    if denominator.is_zero() {
        return Outcome {
            holds: false,
            lhs: lhs.to_string(),
            rhs: "undefined".into(),
            note: Some("denominator vanishes".into()),
        };
    }
    let mut out = compare(lhs, numerator.scale(&denominator.recip()));
    out.note = Some(format!("denominator {denominator}"));
    out
}

pub(super) fn pk_from_e(tables: &Tables, p: &Point) -> Outcome {
    power_sum_quotient(&tables.generalized(p.n, p.s, p.k as usize), p.k, p.s, true)
}

pub(super) fn pk_from_h(tables: &Tables, p: &Point) -> Outcome {
    power_sum_quotient(&tables.generalized(p.n, p.s, p.k as usize), p.k, p.s, false)
}

fn p_from(g: &GenTable, k: u32, from_h: bool) -> Outcome {
    let mut rhs: RatPoly = MPoly::zero(g.nvars());
    for term in partition_terms(k, &[]) {
        let (sgn, prod) = if from_h {
            (sign(1 + term.len), g.h_product(&term.lambda))
        } else {
            (sign(k as i64 + term.len), g.e_product(&term.lambda))
        };
        let c = BigRational::new(sgn * k * &term.multinom, BigInt::from(term.len));
        rhs.add_assign_poly(&to_rat(&prod).scale(&c));
    }
    compare(to_rat(&g.p(k).expect("k >= 1")), rhs)
}

pub(super) fn p_from_h(tables: &Tables, p: &Point) -> Outcome {
    p_from(&tables.generalized(p.n, p.s, p.k as usize), p.k, true)
}

pub(super) fn p_from_e(tables: &Tables, p: &Point) -> Outcome {
    p_from(&tables.generalized(p.n, p.s, p.k as usize), p.k, false)
}

pub(super) fn scalar_c(_: &Tables, p: &Point) -> Outcome {
    let mut lhs = rat(0);
    for term in partition_terms(p.k, &[Constraint::MaxPart(p.s)]) {
        lhs += BigRational::new(sign(term.len) * p.k * &term.multinom, BigInt::from(term.len));
    }
    let rhs = if p.k.is_multiple_of(p.s + 1) { rat(p.s) } else { rat(-1) };
    compare(lhs, rhs)
}

fn from_power_sums(g: &GenTable, k: u32, target_h: bool) -> Outcome {
    let mut rhs: RatPoly = MPoly::zero(g.nvars());
    for term in partition_terms(k, &[]) {
        let sgn = if target_h { BigInt::one() } else { sign(k as i64 + term.len) };
        let c = BigRational::new(sgn, z_lambda(&term.t));
        rhs.add_assign_poly(&to_rat(&g.p_product(&term.lambda).expect("parts >= 1")).scale(&c));
    }
    let lhs = if target_h { g.h(k as i64) } else { g.e(k as i64) };
    compare(to_rat(&lhs), rhs)
}

pub(super) fn h_from_p(tables: &Tables, p: &Point) -> Outcome {
    from_power_sums(&tables.generalized(p.n, p.s, p.k as usize), p.k, true)
}

pub(super) fn e_from_p(tables: &Tables, p: &Point) -> Outcome {
    from_power_sums(&tables.generalized(p.n, p.s, p.k as usize), p.k, false)
}

pub(super) fn rec_h(tables: &Tables, p: &Point) -> Outcome {
    let (n, k, s) = (p.n, p.k as i64, p.s);
    let full = tables.generalized(n, s, p.k as usize);
    let fewer = tables.generalized(n - 1, s, p.k as usize);
    let xn_top = var_power(n, n - 1, s + 1).scale_int(&sign(s as i64 + 1));
    let rhs = &(&(&xn_top * &full.h(k - s as i64 - 1)) + &fewer.h(k).embed(n))
        + &(&var_power(n, n - 1, 1) * &fewer.h(k - 1).embed(n));
    compare(full.h(k), rhs)
}

pub(super) fn rec_e(tables: &Tables, p: &Point) -> Outcome {
    let (n, k, s) = (p.n, p.k as i64, p.s);
    let full = tables.generalized(n, s, p.k as usize);
    let fewer = tables.generalized(n - 1, s, p.k as usize);
    let xn = var_power(n, n - 1, 1);
    let rhs = &(&(&xn * &full.e(k - 1)) + &fewer.e(k).embed(n))
        - &(&var_power(n, n - 1, s + 1) * &fewer.e(k - s as i64 - 1).embed(n));
    compare(full.e(k), rhs)
}

pub(super) fn peel_e(tables: &Tables, p: &Point) -> Outcome {
    let (n, k) = (p.n, p.k as i64);
    let full = tables.generalized(n, p.s, p.k as usize);
    let fewer = tables.generalized(n - 1, p.s, p.k as usize);
    let mut rhs = MPoly::zero(n);
    for j in 0..=p.s.min(p.k) {
        rhs.add_assign_poly(&(&var_power(n, n - 1, j) * &fewer.e(k - j as i64).embed(n)));
    }
    compare(full.e(k), rhs)
}

pub(super) fn peel_h(tables: &Tables, p: &Point) -> Outcome {
    let (n, k) = (p.n, p.k as i64);
    let full = tables.generalized(n, p.s, p.k as usize);
    let fewer = tables.generalized(n - 1, p.s, p.k as usize);
    let mut rhs = MPoly::zero(n);
    for j in 0..=p.s.min(p.k) {
        let term = &var_power(n, n - 1, j) * &full.h(k - j as i64);
        rhs.add_assign_poly(&term.scale_int(&sign(j as i64)));
    }
    compare(fewer.h(k).embed(n), rhs)
}

/// `(-1)^k sum_{lambda |- k, l(lambda) <= r} m_lambda(w_1..w_r) f_lambda` with
/// `w` a primitive `(r+1)`-th root, computed with cyclotomic coefficients and
/// then reduced to integers. `Err` carries the first coefficient that does
/// not reduce.
fn root_expansion(
    n: usize,
    k: u32,
    r: u32,
    factor: impl Fn(&Partition) -> Poly,
) -> Result<Poly, String> {
    let mut acc: MPoly<CycInt> = MPoly::zero(n);
    for lambda in enum_partitions(k, &[Constraint::MaxLength(r)]) {
        let w = m_lambda_at_roots(&lambda, r);
        if w.is_zero() {
            continue;
        }
        acc.add_assign_poly(&factor(&lambda).map_coeffs(|c| w.mul_int(c)));
    }
    let sgn = sign(k as i64);
    acc.try_map_coeffs(|m, c| {
        c.as_integer()
            .map(|v| v * &sgn)
            .ok_or_else(|| format!("coefficient of {m} is {c}, not an integer"))
    })
}

fn expansion_outcome(lhs: Poly, rhs: Result<Poly, String>) -> Outcome {
    match rhs {
        Ok(rhs) => compare(lhs, rhs),
        Err(reason) => Outcome {
            holds: false,
            lhs: lhs.to_string(),
            rhs: "non-integer".into(),
            note: Some(reason),
        },
    }
}

pub(super) fn roots_h(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let c = tables.classical(p.n, p.k as usize);
    let rhs = root_expansion(p.n, p.k, p.s, |l| product(p.n, l.parts().iter().map(|&i| c.h_ref(i as usize))));
    expansion_outcome(g.h(p.k as i64), rhs)
}

pub(super) fn roots_e(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let c = tables.classical(p.n, p.k as usize);
    let rhs = root_expansion(p.n, p.k, p.s, |l| product(p.n, l.parts().iter().map(|&i| c.e_ref(i as usize))));
    expansion_outcome(g.e(p.k as i64), rhs)
}

pub(super) fn conj_bridge(tables: &Tables, p: &Point) -> Outcome {
    let c = tables.classical(p.n, p.k as usize);
    let mut lhs = MPoly::zero(p.n);
    for lambda in enum_partitions(p.k, &[Constraint::MaxPart(p.s)]) {
        lhs.add_assign_poly(&m_lambda(&lambda, p.n));
    }
    let rhs = root_expansion(p.n, p.k, p.s, |l| product(p.n, l.parts().iter().map(|&i| c.e_ref(i as usize))));
    expansion_outcome(lhs, rhs)
}

/// `sum_j (-1)^(s j) h_j(x^s) e_{k-sj}` or `sum_j (-1)^j e_j(x^s) h_{k-sj}`.
fn power_convolution(tables: &Tables, n: usize, k: u32, s: u32, complete: bool) -> Poly {
    let c = tables.classical(n, k as usize);
    let mut acc = MPoly::zero(n);
    for j in 0..=k / s {
        let rest = (k - s * j) as i64;
        let term = if complete {
            (&c.h(j as i64).substitute_power(s) * &c.e(rest)).scale_int(&sign((s * j) as i64))
        } else {
            (&c.e(j as i64).substitute_power(s) * &c.h(rest)).scale_int(&sign(j as i64))
        };
        acc.add_assign_poly(&term);
    }
    acc
}

pub(super) fn conv_h(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s - 1, p.k as usize);
    compare(g.h(p.k as i64), power_convolution(tables, p.n, p.k, p.s, true))
}

pub(super) fn conv_e(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s - 1, p.k as usize);
    compare(g.e(p.k as i64), power_convolution(tables, p.n, p.k, p.s, false))
}

pub(super) fn conv_roots_h(tables: &Tables, p: &Point) -> Outcome {
    let lhs = power_convolution(tables, p.n, p.k, p.s, true);
    let c = tables.classical(p.n, p.k as usize);
    let rhs = root_expansion(p.n, p.k, p.s - 1, |l| product(p.n, l.parts().iter().map(|&i| c.h_ref(i as usize))));
    expansion_outcome(lhs, rhs)
}

pub(super) fn conv_roots_e(tables: &Tables, p: &Point) -> Outcome {
    let lhs = power_convolution(tables, p.n, p.k, p.s, false);
    let c = tables.classical(p.n, p.k as usize);
    let rhs = root_expansion(p.n, p.k, p.s - 1, |l| product(p.n, l.parts().iter().map(|&i| c.e_ref(i as usize))));
    expansion_outcome(lhs, rhs)
}

fn closed_form_outcome(value: CycInt, closed: BigRational) -> Outcome {
    match value.as_integer() {
        Some(v) => compare(BigRational::from_integer(v), closed),
        None => Outcome {
            holds: false,
            lhs: value.to_string(),
            rhs: closed.to_string(),
            note: Some("root evaluation is not an integer".into()),
        },
    }
}

fn lambda_data(p: &Point) -> (&Partition, Vec<u32>, i64, BigInt) {
    let lambda = p.lambda.as_ref().expect("validated");
    let t = lambda.multiplicities();
    let m = multinomial(&t);
    (lambda, t, lambda.len() as i64, m)
}

pub(super) fn mroots_closed_k1(_: &Tables, p: &Point) -> Outcome {
    let (lambda, _, len, m) = lambda_data(p);
    let value = m_lambda_at_roots(lambda, lambda.weight());
    closed_form_outcome(value, BigRational::from_integer(sign(len) * m))
}

pub(super) fn mroots_closed_k(_: &Tables, p: &Point) -> Outcome {
    let (lambda, _, len, m) = lambda_data(p);
    let k = lambda.weight() as i64;
    let value = m_lambda_at_roots(lambda, k as u32 - 1);
    let factor = rat(1) - BigRational::new(BigInt::from(k), BigInt::from(len));
    closed_form_outcome(value, factor * rat(sign(len) * m))
}

pub(super) fn mroots_closed_km1(_: &Tables, p: &Point) -> Outcome {
    let (lambda, t, len, m) = lambda_data(p);
    let k = lambda.weight() as i64;
    let value = m_lambda_at_roots(lambda, k as u32 - 2);
    let t1 = t.first().copied().unwrap_or(0) as i64;
    // t_1 = 0 kills the correction even where l^2 - l vanishes
    let correction = if t1 == 0 {
        rat(0)
    } else {
        BigRational::new(BigInt::from(t1 * (k - 1)), BigInt::from(len * len - len))
    };
    let mut out = closed_form_outcome(value, (rat(1) - correction) * rat(sign(len) * m));
    if t1 == 0 && len == 1 {
        out.note = Some("degenerate denominator, t_1 = 0".into());
    }
    out
}

fn power_substitution(tables: &Tables, p: &Point, complete: bool) -> Outcome {
    let (n, k, s) = (p.n, p.k, p.s);
    let top = (k * s) as usize;
    let g = tables.generalized(n, s - 1, top);
    let c = tables.classical(n, top);
    let mut rhs = MPoly::zero(n);
    for j in 0..=top {
        let term = if complete { c.h_ref(j) * g.h_ref(top - j) } else { c.e_ref(j) * g.e_ref(top - j) };
        rhs.add_assign_poly(&term.scale_int(&sign(j as i64)));
    }
    // expanding 1 / (1 - (-x t)^s) gives (-1)^(ks) for h, which differs
    // from (-1)^(k(s+1)) whenever k is odd
    let (lhs, outer) = if complete {
        (c.h(k as i64).substitute_power(s), sign((k * s) as i64))
    } else {
        (c.e(k as i64).substitute_power(s), sign(k as i64))
    };
    let mut out = compare(lhs, rhs.scale_int(&outer));
    if complete && k % 2 == 1 {
        out.note = Some("sign (-1)^(ks); the form (-1)^(k(s+1)) fails at odd k".into());
    }
    out
}

pub(super) fn powsub_h(tables: &Tables, p: &Point) -> Outcome {
    power_substitution(tables, p, true)
}

pub(super) fn powsub_e(tables: &Tables, p: &Point) -> Outcome {
    power_substitution(tables, p, false)
}

fn vanishing(tables: &Tables, p: &Point, complete: bool) -> Outcome {
    let (n, k) = (p.n, p.k as usize);
    let g = tables.generalized(n, p.s - 1, k);
    let c = tables.classical(n, k);
    let mut lhs = MPoly::zero(n);
    for j in 0..=k {
        let term = if complete { c.h_ref(j) * g.h_ref(k - j) } else { c.e_ref(j) * g.e_ref(k - j) };
        lhs.add_assign_poly(&term.scale_int(&sign(j as i64)));
    }
    compare(lhs, MPoly::zero(n))
}

pub(super) fn vanish_h(tables: &Tables, p: &Point) -> Outcome {
    vanishing(tables, p, true)
}

pub(super) fn vanish_e(tables: &Tables, p: &Point) -> Outcome {
    vanishing(tables, p, false)
}

/// `sum (-1)^(sum lambda_i mod (s+1)) m_lambda` over partitions of `k`
/// into parts congruent to 0 or 1 modulo `s+1`.
fn signed_monomial_sum(n: usize, k: u32, s: u32) -> Poly {
    let mut acc = MPoly::zero(n);
    for lambda in enum_partitions(k, &[Constraint::ZeroOrOneMod(s)]) {
        let residue: u32 = lambda.parts().iter().map(|&x| x % (s + 1)).sum();
        acc.add_assign_poly(&m_lambda(&lambda, n).scale_int(&sign(residue as i64)));
    }
    acc
}

pub(super) fn mono_h(tables: &Tables, p: &Point) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let rhs = signed_monomial_sum(p.n, p.k, p.s).scale_int(&sign(p.k as i64));
    let mut out = compare(g.h(p.k as i64), rhs);
    if p.s % 2 == 1 {
        // every admissible partition has sum of residues equal to k mod 2
        let positive = g.h(p.k as i64).terms().all(|(_, c)| c.is_positive());
        out.holds &= positive;
        out.note = Some(format!("odd s, all coefficients positive: {positive}"));
    }
    out
}

pub(super) fn mono_bridge(tables: &Tables, p: &Point) -> Outcome {
    let c = tables.classical(p.n, p.k as usize);
    let lhs = signed_monomial_sum(p.n, p.k, p.s);
    // the root expansion carries (-1)^k, which this side of the identity lacks
    let rhs = root_expansion(p.n, p.k, p.s, |l| product(p.n, l.parts().iter().map(|&i| c.h_ref(i as usize))))
        .map(|r| r.scale_int(&sign(p.k as i64)));
    expansion_outcome(lhs, rhs)
}

fn model_sum(tables: &Tables, p: &Point, model: Model, object: Object) -> Outcome {
    let g = tables.generalized(p.n, p.s, p.k as usize);
    let target = match model {
        Model::E => g.e(p.k as i64),
        Model::H => g.h(p.k as i64),
    };
    compare(weight_sum(p.n, p.k, p.s, model, object), target)
}

pub(super) fn paths_e(tables: &Tables, p: &Point) -> Outcome {
    model_sum(tables, p, Model::E, Object::Paths)
}

pub(super) fn paths_h(tables: &Tables, p: &Point) -> Outcome {
    model_sum(tables, p, Model::H, Object::Paths)
}

pub(super) fn tilings_e(tables: &Tables, p: &Point) -> Outcome {
    model_sum(tables, p, Model::E, Object::Tilings)
}

pub(super) fn tilings_h(tables: &Tables, p: &Point) -> Outcome {
    model_sum(tables, p, Model::H, Object::Tilings)
}

pub(super) fn bis_plain(_: &Tables, p: &Point) -> Outcome {
    conversion_outcome(Conversion::Plain, p.n as u32, p.k, p.s)
}

pub(super) fn bis_q(_: &Tables, p: &Point) -> Outcome {
    conversion_outcome(Conversion::Q, p.n as u32, p.k, p.s)
}

pub(super) fn bis_pq(_: &Tables, p: &Point) -> Outcome {
    conversion_outcome(Conversion::Pq, p.n as u32, p.k, p.s)
}

pub(super) fn binom_recovery(_: &Tables, p: &Point) -> Outcome {
    conversion_outcome(Conversion::BinomRecovery, p.n as u32, p.k, p.s)
}

pub(super) fn qs_recovery(_: &Tables, p: &Point) -> Outcome {
    conversion_outcome(Conversion::QsRecovery, p.n as u32, p.k, p.s)
}
