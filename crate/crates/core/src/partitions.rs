//! Integer partitions and the constrained enumerators behind every sum over
//! `lambda |- k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::multipoly::Monomial;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `t_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// `[t_1, t_2, ..., t_k]` with `k` the weight; entry `i - 1` is `t_i`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut t = vec![0; self.weight() as usize];
        for &p in &self.parts {
            t[p as usize - 1] += 1;
        }
        t
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts part lists (`3,1,1`, `[3,1,1]`) and multiplicity notation
/// (`1^2 3^1`, `3 1^2`).
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || Error::InvalidPartition(format!("cannot parse {s:?}"));
        let mut parts = Vec::new();
        if body.contains('^') || !body.contains(',') {
            for token in body.split_whitespace() {
                let (part, mult) = match token.split_once('^') {
                    Some((p, m)) => (p, m.parse::<u32>().map_err(|_| bad())?),
                    None => (token, 1),
                };
                let part = part.parse::<u32>().map_err(|_| bad())?;
                if part == 0 {
                    return Err(bad());
                }
                parts.extend(std::iter::repeat_n(part, mult as usize));
            }
            return Ok(Partition::from_unsorted(parts));
        }
        for token in body.split(',') {
            parts.push(token.trim().parse::<u32>().map_err(|_| bad())?);
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Restriction on the partitions produced by [`enum_partitions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `lambda_1 <= s`
    MaxPart(u32),
    /// `l(lambda) <= s`
    MaxLength(u32),
    /// every part is congruent to 0 or 1 modulo `s + 1`
    ZeroOrOneMod(u32),
}

impl Constraint {
    pub fn admits(&self, lambda: &Partition) -> bool {
        match *self {
            Constraint::MaxPart(s) => lambda.largest() <= s,
            Constraint::MaxLength(s) => lambda.len() <= s as usize,
            Constraint::ZeroOrOneMod(s) => lambda.parts().iter().all(|&p| part_is_zero_or_one_mod(p, s)),
        }
    }
}

fn part_is_zero_or_one_mod(p: u32, s: u32) -> bool {
    p % (s + 1) <= 1
}

/// All partitions of `k` meeting every constraint, in reverse-lexicographic
/// order (`[k]` first). `k = 0` yields the empty partition.
pub fn enum_partitions(k: u32, constraints: &[Constraint]) -> Vec<Partition> {
    let mut max_part = k;
    let mut max_len = k as usize;
    let mut modulus = None;
    for c in constraints {
        match *c {
            Constraint::MaxPart(s) => max_part = max_part.min(s),
            Constraint::MaxLength(s) => max_len = max_len.min(s as usize),
            Constraint::ZeroOrOneMod(s) => modulus = Some(s),
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(k, max_part, max_len, modulus, &mut current, &mut out);
    out
}

fn fill(
    remaining: u32,
    max_part: u32,
    max_len: usize,
    modulus: Option<u32>,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        if modulus.is_some_and(|s| !part_is_zero_or_one_mod(p, s)) {
            continue;
        }
        current.push(p);
        fill(remaining - p, p, max_len, modulus, current, out);
        current.pop();
    }
}

/// `(t_1 + ... + t_k)! / (t_1! ... t_k!)`.
pub fn multinomial(t: &[u32]) -> BigInt {
    // product of binomials C(t_1 + .. + t_i, t_i) keeps intermediates integral
    let mut total = 0u32;
    let mut out = BigInt::one();
    for &ti in t {
        for j in 1..=ti {
            out = out * BigInt::from(total + j) / BigInt::from(j);
        }
        total += ti;
    }
    out
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for j in 1..=k {
        out = out * BigInt::from(n - k + j) / BigInt::from(j);
    }
    out
}

/// Distinct exponent vectors obtained by permuting the parts of `lambda`
/// padded with zeros to length `n`, in decreasing lexicographic order.
/// Empty when `lambda` has more than `n` parts.
pub fn distinct_orbit(lambda: &Partition, n: usize) -> Vec<Monomial> {
    if lambda.len() > n {
        return Vec::new();
    }
    let mut exps = lambda.parts.clone();
    exps.resize(n, 0);
    let mut out = vec![Monomial::new(exps.clone())];
    while prev_permutation(&mut exps) {
        out.push(Monomial::new(exps.clone()));
    }
    out
}

/// Step to the previous permutation in lexicographic order; false once the
/// sequence is ascending.
pub(crate) fn prev_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
