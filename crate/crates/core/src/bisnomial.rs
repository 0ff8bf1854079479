//! Bi^s-nomial coefficients `(n choose k)_s = E_k^(s)(1, ..., 1)` and their
//! specializations at `x_i = q^(i-1)` and `x_i = p^(n-i) q^(i-1)`.
//!
//! Rows are built by peeling one variable at a time, so row `n` of every
//! table comes from row `n - 1` in `s + 1` shifted additions.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, Ring, UniPoly, UnitalRing};
use crate::identities::{IdentityReport, Outcome, Params};
use crate::multipoly::Specialized;
use crate::partitions::binomial;

/// `(n choose k)_s` for `k = 0..=s n`: the coefficients of `(1 + t + ... + t^s)^n`.
pub fn bisnomial_row(n: u32, s: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + s as usize];
        for (k, c) in row.iter().enumerate() {
            for slot in &mut next[k..=k + s as usize] {
                *slot += c;
            }
        }
        row = next;
    }
    row
}

pub fn bisnomial(n: u32, k: u32, s: u32) -> BigInt {
    bisnomial_row(n, s).get(k as usize).cloned().unwrap_or_default()
}

/// Row of `[n, k]^(s)_q = E_k^(s)(1, q, ..., q^(n-1))`.
pub fn q_bisnomial_row(n: u32, s: u32) -> Vec<UniPoly> {
    let mut row = vec![UniPoly::one_elem()];
    for m in 0..n {
        // the new variable is q^m
        let mut next = vec![UniPoly::zero(); row.len() + s as usize];
        for (k, c) in row.iter().enumerate() {
            for j in 0..=s as usize {
                next[k + j].add_assign_ref(&c.shift(m as usize * j));
            }
        }
        row = next;
    }
    row
}

pub fn q_bisnomial(n: u32, k: u32, s: u32) -> UniPoly {
    q_bisnomial_row(n, s).into_iter().nth(k as usize).unwrap_or_default()
}

/// Row of `[n, k]^(s)_{p,q} = E_k^(s)(p^(n-1), p^(n-2) q, ..., q^(n-1))`.
pub fn pq_bisnomial_row(n: u32, s: u32) -> Vec<BiPoly> {
    // x_1 = p^(m-1) and the remaining m-1 points are q times the previous grid
    let mut row = vec![BiPoly::one_elem()];
    for m in 1..=n {
        let mut next = vec![BiPoly::zero(); row.len() + s as usize];
        for (prev_k, c) in row.iter().enumerate() {
            for j in 0..=s {
                next[prev_k + j as usize].add_assign_ref(&c.shift((m - 1) * j, prev_k as u32));
            }
        }
        row = next;
    }
    row
}

pub fn pq_bisnomial(n: u32, k: u32, s: u32) -> BiPoly {
    pq_bisnomial_row(n, s).into_iter().nth(k as usize).unwrap_or_default()
}

/// Gaussian binomial `[n, k]_q`; zero for `k > n`.
pub fn gaussian_binomial(n: u32, k: u32) -> UniPoly {
    if k > n {
        return UniPoly::zero();
    }
    let mut row = vec![UniPoly::one_elem()];
    for m in 1..=n as usize {
        // [m, j] = [m-1, j-1] + q^j [m-1, j]
        let mut next = vec![UniPoly::zero(); m + 1];
        for j in 0..=m {
            if j > 0 {
                next[j].add_assign_ref(&row[j - 1]);
            }
            if j < m {
                next[j].add_assign_ref(&row[j].shift(j));
            }
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// Symmetric `[n, k]_{p,q} = p^(k(n-k)) [n, k]_{q/p}`; zero for `k > n`.
pub fn pq_binomial(n: u32, k: u32) -> BiPoly {
    if k > n {
        return BiPoly::zero();
    }
    let mut out = BiPoly::zero();
    for (e, c) in gaussian_binomial(n, k).coeffs().iter().enumerate() {
        out.add_term(k * (n - k) - e as u32, e as u32, c.clone());
    }
    out
}

fn sign(e: u32) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn choose2(j: u32) -> u32 {
    j * j.saturating_sub(1) / 2
}

/// The conversions between bi^(s-1)-nomials and ordinary binomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conversion {
    /// `(n choose k)_{s-1} = sum_j (-1)^j C(n, j) C(n+k-sj-1, k-sj)`.
    Plain,
    /// The same with `q`-binomials and `q^(s C(j,2)) [n, j]_{q^s}`.
    Q,
    /// The same with `p,q`-binomials and `(pq)^(s C(j,2)) [n, j]_{p^s,q^s}`.
    Pq,
    /// `C(n, k) = sum_{j<=ks} (-1)^(k+j) C(n, j) (n choose ks-j)_{s-1}`.
    BinomRecovery,
    /// `q^(s C(k,2)) [n, k]_{q^s} = sum_j (-1)^(k+j) q^C(j,2) [n, j]_q [n, ks-j]^(s-1)_q`.
    QsRecovery,
}

impl Conversion {
    pub const ALL: [Conversion; 5] =
        [Conversion::Plain, Conversion::Q, Conversion::Pq, Conversion::BinomRecovery, Conversion::QsRecovery];

    pub fn name(self) -> &'static str {
        match self {
            Conversion::Plain => "plain",
            Conversion::Q => "q",
            Conversion::Pq => "pq",
            Conversion::BinomRecovery => "binom_recovery",
            Conversion::QsRecovery => "qs_recovery",
        }
    }

    /// Registry id of the matching identity.
    pub fn identity_id(self) -> &'static str {
        match self {
            Conversion::Plain => "bisnomial_plain",
            Conversion::Q => "bisnomial_q",
            Conversion::Pq => "bisnomial_pq",
            Conversion::BinomRecovery => "binom_recovery",
            Conversion::QsRecovery => "qs_recovery",
        }
    }
}

impl FromStr for Conversion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Conversion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParams { id: "conversion".into(), reason: format!("unknown kind `{s}`") })
    }
}

impl fmt::Display for Conversion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn outcome<T: PartialEq + fmt::Display>(lhs: T, rhs: T) -> Outcome {
    Outcome { holds: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string(), note: None }
}

/// Both sides of a conversion; callers ensure `n >= 1` and `s >= 2`.
pub(crate) fn conversion_outcome(kind: Conversion, n: u32, k: u32, s: u32) -> Outcome {
    let terms = k / s;
    match kind {
        Conversion::Plain => {
            let mut rhs = BigInt::zero();
            for j in 0..=terms {
                let m = k - s * j;
                rhs += sign(j) * binomial(n as u64, j as u64) * binomial((n + m - 1) as u64, m as u64);
            }
            outcome(bisnomial(n, k, s - 1), rhs)
        }
        Conversion::Q => {
            let mut rhs = UniPoly::zero();
            for j in 0..=terms {
                let m = k - s * j;
                let e_part = gaussian_binomial(n, j).scale_exponents(s as usize).shift((s * choose2(j)) as usize);
                let term = e_part.mul_ref(&gaussian_binomial(n + m - 1, m)).mul_int(&sign(j));
                rhs.add_assign_ref(&term);
            }
            outcome(q_bisnomial(n, k, s - 1), rhs)
        }
        Conversion::Pq => {
            let mut rhs = BiPoly::zero();
            for j in 0..=terms {
                let m = k - s * j;
                let f = s * choose2(j);
                let e_part = pq_binomial(n, j).scale_exponents(s).shift(f, f);
                let term = e_part.mul_ref(&pq_binomial(n + m - 1, m)).mul_int(&sign(j));
                rhs.add_assign_ref(&term);
            }
            outcome(pq_bisnomial(n, k, s - 1), rhs)
        }
        Conversion::BinomRecovery => {
            let row = bisnomial_row(n, s - 1);
            let mut rhs = BigInt::zero();
            for j in 0..=k * s {
                let other = row.get((k * s - j) as usize).cloned().unwrap_or_default();
                rhs += sign(k + j) * binomial(n as u64, j as u64) * other;
            }
            outcome(binomial(n as u64, k as u64), rhs)
        }
        Conversion::QsRecovery => {
            let row = q_bisnomial_row(n, s - 1);
            let mut rhs = UniPoly::zero();
            for j in 0..=(k * s).min(n) {
                let Some(other) = row.get((k * s - j) as usize) else { continue };
                let e_part = gaussian_binomial(n, j).shift(choose2(j) as usize);
                rhs.add_assign_ref(&e_part.mul_ref(other).mul_int(&sign(k + j)));
            }
            let lhs = gaussian_binomial(n, k).scale_exponents(s as usize).shift((s * choose2(k)) as usize);
            outcome(lhs, rhs)
        }
    }
}

/// Evaluate both sides of a conversion identity exactly.
pub fn check_conversion(kind: Conversion, n: u32, k: u32, s: u32) -> Result<IdentityReport> {
    let id = kind.identity_id();
    if n == 0 {
        return Err(Error::InvalidParams { id: id.into(), reason: "n must be positive".into() });
    }
    if s < 2 {
        return Err(Error::InvalidParams { id: id.into(), reason: "s must be at least 2".into() });
    }
    let start = Instant::now();
    let o = conversion_outcome(kind, n, k, s);
    Ok(IdentityReport {
        identity_id: id.into(),
        params: Params::nks(n as usize, k, s),
        holds: o.holds,
        lhs: o.lhs,
        rhs: o.rhs,
        note: o.note,
        elapsed: start.elapsed(),
    })
}

/// Which specialization a [`BisnomialTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Plain,
    Q,
    Pq,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Plain => "plain",
            TableKind::Q => "q",
            TableKind::Pq => "pq",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(TableKind::Plain),
            "q" => Ok(TableKind::Q),
            "pq" => Ok(TableKind::Pq),
            _ => Err(Error::InvalidParams { id: "bisnomial".into(), reason: format!("unknown table kind `{s}`") }),
        }
    }
}

/// Rows `n = 1..=nmax`, each with entries for `k = 0..=s n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BisnomialTable {
    pub s: u32,
    pub kind: TableKind,
    rows: Vec<Vec<Specialized>>,
}

impl BisnomialTable {
    pub fn new(nmax: u32, s: u32, kind: TableKind) -> Self {
        let rows = (1..=nmax)
            .map(|n| match kind {
                TableKind::Plain => bisnomial_row(n, s).into_iter().map(Specialized::Integer).collect(),
                TableKind::Q => q_bisnomial_row(n, s).into_iter().map(Specialized::Uni).collect(),
                TableKind::Pq => pq_bisnomial_row(n, s).into_iter().map(Specialized::Bi).collect(),
            })
            .collect();
        BisnomialTable { s, kind, rows }
    }

    pub fn nmax(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Entry `(n, k)`; `None` outside `1..=nmax` and `0..=s n`.
    pub fn value(&self, n: u32, k: u32) -> Option<&Specialized> {
        self.rows.get((n as usize).checked_sub(1)?)?.get(k as usize)
    }

    pub fn row(&self, n: u32) -> Option<&[Specialized]> {
        self.rows.get((n as usize).checked_sub(1)?).map(Vec::as_slice)
    }

    /// Rows as `(n, k, value)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Specialized)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(k, v)| (i as u32 + 1, k as u32, v)))
    }

    /// RFC 4180 CSV with header `n,k,value`, cells as in [`value_cell`].
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let map = |e: csv::Error| Error::Csv(e.to_string());
        w.write_record(["n", "k", "value"]).map_err(map)?;
        for (n, k, v) in self.entries() {
            w.write_record([n.to_string(), k.to_string(), value_cell(v)]).map_err(map)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| json!({ "n": i + 1, "values": row.iter().map(value_json).collect::<Vec<_>>() }))
            .collect();
        json!({ "s": self.s, "kind": self.kind.name(), "rows": rows })
    }
}

/// Integers in decimal; polynomials as space-separated coefficients in
/// ascending degree. `p,q` entries are homogeneous, so their list runs over
/// the `q`-degree.
pub fn value_cell(v: &Specialized) -> String {
    let join = |p: &UniPoly| p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    match v {
        Specialized::Integer(c) => c.to_string(),
        Specialized::Uni(p) => join(p),
        Specialized::Bi(p) => join(&p.collapse_p()),
    }
}

/// Integers as decimal strings; polynomials as ascending coefficient lists.
pub fn value_json(v: &Specialized) -> Value {
    match v {
        Specialized::Integer(c) => Value::String(c.to_string()),
        Specialized::Uni(p) => p.to_json(),
        Specialized::Bi(p) => p.collapse_p().to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{all_ones, geometric_q, pq_grid};
    use crate::symfun::gen_elementary;

    #[test]
    fn small_values() {
        assert_eq!(bisnomial(3, 3, 2), BigInt::from(7));
        assert_eq!(bisnomial(2, 2, 2), BigInt::from(3));
        assert_eq!(bisnomial(3, 7, 2), BigInt::zero());
        for n in 1..=6 {
            for k in 0..=7 {
                assert_eq!(bisnomial(n, k, 1), binomial(n as u64, k as u64));
            }
        }
    }

    #[test]
    fn matches_specialized_generators() {
        for n in 1..=4u32 {
            for s in 1..=3 {
                for k in 0..=6 {
                    let e = gen_elementary(k, s, n as usize);
                    assert_eq!(bisnomial(n, k, s), all_ones(&e));
                    assert_eq!(q_bisnomial(n, k, s), geometric_q(&e));
                    assert_eq!(pq_bisnomial(n, k, s), pq_grid(&e));
                }
            }
        }
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_bisnomial(3, 3, 2), UniPoly::from_i64s(&[0, 1, 2, 1, 2, 1]));
        assert_eq!(q_bisnomial(1, 2, 3), UniPoly::one_elem());
        assert_eq!(q_bisnomial(4, 2, 1), gaussian_binomial(4, 2).shift(1));
        assert_eq!(pq_bisnomial(2, 1, 1).to_string(), "p + q");
        assert_eq!(pq_bisnomial(3, 0, 2), BiPoly::one_elem());
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(4, 2), UniPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert!(gaussian_binomial(2, 3).is_zero());
        assert_eq!(pq_binomial(2, 1).to_string(), "p + q");
    }

    #[test]
    fn conversion_examples() {
        let r = check_conversion(Conversion::Plain, 3, 3, 3).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, "7");
        let r = check_conversion(Conversion::BinomRecovery, 3, 2, 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, "3");
        assert!(check_conversion(Conversion::Q, 3, 3, 1).is_err());
        assert!(check_conversion(Conversion::Q, 0, 3, 2).is_err());
    }

    #[test]
    fn conversions_hold() {
        for kind in Conversion::ALL {
            for n in 1..=4 {
                for k in 0..=6 {
                    for s in 2..=3 {
                        let r = check_conversion(kind, n, k, s).unwrap();
                        assert!(r.holds, "{kind} n={n} k={k} s={s}: {} vs {}", r.lhs, r.rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn table_shapes() {
        let t = BisnomialTable::new(3, 2, TableKind::Plain);
        assert_eq!(t.row(3).unwrap().len(), 7);
        assert_eq!(t.value(3, 3), Some(&Specialized::Integer(BigInt::from(7))));
        assert_eq!(t.value(0, 0), None);
        assert_eq!(t.value(2, 5), None);
        let csv = t.to_csv().unwrap();
        assert!(csv.starts_with("n,k,value\n1,0,1\n"));
        let q = BisnomialTable::new(2, 1, TableKind::Q);
        assert_eq!(q.to_json()["rows"][1]["values"][1], json!(["1", "1"]));
        let csv = q.to_csv().unwrap();
        assert!(csv.contains("\n2,1,1 1\n"), "{csv}");
    }
}
