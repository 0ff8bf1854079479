//! Lattice paths and red/green tilings whose weights add up to `E_k^(s)`
//! and `H_k^(s)`.
//!
//! A path runs from `(0, 0)` to `(k, n - 1)` with unit East and North steps.
//! The East steps taken at height `i` form the run `r_{i+1}`, and each of
//! them carries the label `i + 1`, so the weight of a path is
//! `x_1^r_1 ... x_n^r_n`. A tiling is the same word read as squares: East
//! becomes a red square, North a green one.

mod render;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipoly::{MPoly, Monomial};
pub use render::{path_ascii, paths_svg, tilings_svg};

/// Which family a path or tiling set generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    /// Runs of length at most `s`; weights sum to `E_k^(s)`.
    E,
    /// Runs of length `0` or `1` mod `s + 1`; signed weights sum to `H_k^(s)`.
    H,
}

impl Model {
    /// Whether a maximal run of `len` East steps (red squares) is allowed.
    pub fn admits_run(self, len: u32, s: u32) -> bool {
        match self {
            Model::E => len <= s,
            // s = 0 keeps only empty runs, matching H^(0)_k = 0 for k > 0
            Model::H if s == 0 => len == 0,
            Model::H => len % (s + 1) <= 1,
        }
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(Model::E),
            "H" | "h" => Ok(Model::H),
            _ => Err(Error::InvalidParams { id: "model".into(), reason: format!("expected E or H, got `{s}`") }),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::E => "E",
            Model::H => "H",
        })
    }
}

/// Whether [`weight_sum`] runs over paths or over tilings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Object {
    Paths,
    Tilings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    North,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// The path with `runs[i]` East steps at height `i`, separated by single
    /// North steps. Panics on an empty slice; use `&[0]` for the empty path.
    pub fn from_runs(runs: &[u32]) -> Self {
        assert!(!runs.is_empty(), "a path visits at least one level");
        let mut steps = Vec::with_capacity(runs.iter().sum::<u32>() as usize + runs.len() - 1);
        for (i, &r) in runs.iter().enumerate() {
            if i > 0 {
                steps.push(Step::North);
            }
            steps.extend(std::iter::repeat_n(Step::East, r as usize));
        }
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of variables, one more than the number of North steps.
    pub fn n(&self) -> usize {
        self.steps.iter().filter(|&&st| st == Step::North).count() + 1
    }

    /// Number of East steps.
    pub fn k(&self) -> u32 {
        self.steps.iter().filter(|&&st| st == Step::East).count() as u32
    }

    /// East-run length at each height, `n` entries.
    pub fn runs(&self) -> Vec<u32> {
        let mut runs = vec![0u32];
        for st in &self.steps {
            match st {
                Step::East => *runs.last_mut().unwrap() += 1,
                Step::North => runs.push(0),
            }
        }
        runs
    }

    /// Label `L` of every East step: one plus the North steps before it.
    pub fn labels(&self) -> Vec<usize> {
        let mut level = 1;
        let mut out = Vec::with_capacity(self.k() as usize);
        for st in &self.steps {
            match st {
                Step::East => out.push(level),
                Step::North => level += 1,
            }
        }
        out
    }

    pub fn is_admissible(&self, model: Model, s: u32) -> bool {
        self.runs().into_iter().all(|r| model.admits_run(r, s))
    }

    pub fn weight(&self) -> Monomial {
        Monomial::new(self.runs())
    }

    /// `(-1)^(k + P')` with `P' = sum_i (r_i mod (s+1))`; always `+1` for odd `s`.
    pub fn sign(&self, s: u32) -> i32 {
        let runs = self.runs();
        let k: u32 = runs.iter().sum();
        let reduced: u32 = runs.iter().map(|r| r % (s + 1)).sum();
        if (k + reduced).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn to_tiling(&self) -> Tiling {
        Tiling::new(
            self.steps
                .iter()
                .map(|st| match st {
                    Step::East => Cell::Red,
                    Step::North => Cell::Green,
                })
                .collect(),
        )
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for st in &self.steps {
            f.write_str(match st {
                Step::East => "E",
                Step::North => "N",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    /// `E`/`N` letters, case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::East),
                'N' | 'n' => Ok(Step::North),
                _ => Err(Error::InvalidParams { id: "path".into(), reason: format!("unexpected step `{c}`") }),
            })
            .collect::<Result<_>>()
            .map(LatticePath::new)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Red,
    Green,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    cells: Vec<Cell>,
}

impl Tiling {
    pub fn new(cells: Vec<Cell>) -> Self {
        Tiling { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn n(&self) -> usize {
        self.cells.iter().filter(|&&c| c == Cell::Green).count() + 1
    }

    pub fn k(&self) -> u32 {
        self.cells.iter().filter(|&&c| c == Cell::Red).count() as u32
    }

    /// Red-run length after each green prefix; `n_m(T)` is this mod `s + 1`.
    pub fn runs(&self) -> Vec<u32> {
        self.to_path().runs()
    }

    pub fn is_admissible(&self, model: Model, s: u32) -> bool {
        self.to_path().is_admissible(model, s)
    }

    /// A red square with `m` green squares to its left weighs `x_{m+1}`.
    pub fn weight(&self) -> Monomial {
        let mut exps = vec![0u32; self.n()];
        let mut greens = 0;
        for c in &self.cells {
            match c {
                Cell::Red => exps[greens] += 1,
                Cell::Green => greens += 1,
            }
        }
        Monomial::new(exps)
    }

    /// `(-1)^(k + G)` with `G = sum_m n_m(T)` taken over this tiling.
    pub fn sign(&self, s: u32) -> i32 {
        self.to_path().sign(s)
    }

    pub fn to_path(&self) -> LatticePath {
        LatticePath::new(
            self.cells
                .iter()
                .map(|c| match c {
                    Cell::Red => Step::East,
                    Cell::Green => Step::North,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            f.write_str(match c {
                Cell::Red => "r",
                Cell::Green => "g",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tiling({self})")
    }
}

impl FromStr for Tiling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'r' | 'R' => Ok(Cell::Red),
                'g' | 'G' => Ok(Cell::Green),
                _ => Err(Error::InvalidParams { id: "tiling".into(), reason: format!("unexpected square `{c}`") }),
            })
            .collect::<Result<_>>()
            .map(Tiling::new)
    }
}

/// Every admissible path from `(0, 0)` to `(k, n - 1)`, lexicographic on
/// the step word with `E < N`. Empty for `n = 0`.
pub fn enum_paths(n: usize, k: u32, s: u32, model: Model) -> Vec<LatticePath> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut runs = Vec::with_capacity(n);
    // a longer first run wins the first E/N comparison, so runs go high to low
    fn fill(runs: &mut Vec<u32>, n: usize, left: u32, s: u32, model: Model, out: &mut Vec<LatticePath>) {
        if runs.len() + 1 == n {
            if model.admits_run(left, s) {
                runs.push(left);
                out.push(LatticePath::from_runs(runs));
                runs.pop();
            }
            return;
        }
        for r in (0..=left).rev().filter(|&r| model.admits_run(r, s)) {
            runs.push(r);
            fill(runs, n, left - r, s, model, out);
            runs.pop();
        }
    }
    fill(&mut runs, n, k, s, model, &mut out);
    out
}

pub fn enum_tilings(n: usize, k: u32, s: u32, model: Model) -> Vec<Tiling> {
    enum_paths(n, k, s, model).iter().map(LatticePath::to_tiling).collect()
}

pub fn path_weight(path: &LatticePath) -> Monomial {
    path.weight()
}

pub fn path_sign(path: &LatticePath, s: u32) -> i32 {
    path.sign(s)
}

pub fn tiling_weight(tiling: &Tiling) -> Monomial {
    tiling.weight()
}

/// Sum of weights over the model's paths or tilings, signed in the H model.
pub fn weight_sum(n: usize, k: u32, s: u32, model: Model, object: Object) -> MPoly<BigInt> {
    let paths = enum_paths(n, k, s, model);
    let signed = |weight: Monomial, sign: i32| match model {
        Model::E => (weight, BigInt::from(1)),
        Model::H => (weight, BigInt::from(sign)),
    };
    let terms: Vec<(Monomial, BigInt)> = match object {
        Object::Paths => paths.iter().map(|p| signed(p.weight(), p.sign(s))).collect(),
        Object::Tilings => paths
            .iter()
            .map(LatticePath::to_tiling)
            .map(|t| signed(t.weight(), t.sign(s)))
            .collect(),
    };
    MPoly::from_terms(n, terms).expect("weights have n exponents")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{classical, gen_complete, gen_elementary, Classical};

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn figure_counts() {
        assert_eq!(enum_paths(3, 3, 2, Model::E).len(), 7);
        let h = enum_paths(3, 3, 2, Model::H);
        let words: Vec<String> = h.iter().map(ToString::to_string).collect();
        assert_eq!(words, ["EEENN", "ENENE", "NEEEN", "NNEEE"]);
    }

    #[test]
    fn empty_path() {
        for model in [Model::E, Model::H] {
            let paths = enum_paths(1, 0, 3, model);
            assert_eq!(paths.len(), 1);
            assert!(paths[0].steps().is_empty());
            assert_eq!(paths[0].to_tiling().to_string(), "");
        }
        assert!(enum_paths(0, 0, 1, Model::E).is_empty());
    }

    #[test]
    fn order_is_lexicographic() {
        for model in [Model::E, Model::H] {
            let words: Vec<String> = enum_paths(4, 5, 3, model).iter().map(ToString::to_string).collect();
            let mut sorted = words.clone();
            sorted.sort();
            assert_eq!(words, sorted);
        }
    }

    #[test]
    fn labels_and_weights() {
        assert_eq!(path("NEEEN").weight().to_string(), "x2^3");
        assert_eq!(path("NEEEN").labels(), [2, 2, 2]);
        assert_eq!(path("EEE").weight().to_string(), "x1^3");
        assert_eq!(path("EENEN").weight().to_string(), "x1^2*x2");
    }

    #[test]
    fn signs() {
        assert_eq!(path("EEENN").sign(2), -1);
        assert_eq!(path("ENENE").sign(2), 1);
        for p in enum_paths(3, 5, 3, Model::H) {
            assert_eq!(p.sign(3), 1);
        }
    }

    #[test]
    fn tilings() {
        let t: Tiling = "rrgrg".parse().unwrap();
        assert_eq!(t.weight().to_string(), "x1^2*x2");
        assert_eq!(t.to_path().to_string(), "EENEN");
        assert!(Tiling::from_str("ggg").unwrap().weight().is_one());
        assert_eq!(Tiling::from_str("grrr").unwrap().weight().to_string(), "x2^3");
        assert!("rxg".parse::<Tiling>().is_err());
    }

    #[test]
    fn bijection_roundtrips() {
        for model in [Model::E, Model::H] {
            for p in enum_paths(3, 3, 2, model) {
                let t = p.to_tiling();
                assert_eq!(t.to_path(), p);
                assert_eq!(t.weight(), p.weight());
                assert_eq!(t.sign(2), p.sign(2));
                assert_eq!(t.is_admissible(model, 2), p.is_admissible(model, 2));
            }
        }
    }

    #[test]
    fn weight_sums_match_generators() {
        for n in 1..=3 {
            for s in 1..=3 {
                for k in 0..=5 {
                    for object in [Object::Paths, Object::Tilings] {
                        assert_eq!(weight_sum(n, k, s, Model::E, object), gen_elementary(k, s, n));
                        assert_eq!(weight_sum(n, k, s, Model::H, object), gen_complete(k, s, n));
                    }
                }
            }
        }
        assert_eq!(
            weight_sum(3, 3, 2, Model::H, Object::Tilings).to_string(),
            "-x1^3 - x2^3 - x3^3 + x1*x2*x3"
        );
    }

    #[test]
    fn s_equal_k_gives_elementary() {
        for n in 1..=4 {
            for k in 1..=5 {
                for p in enum_paths(n, k, k, Model::H) {
                    assert!(p.runs().iter().all(|&r| r <= 1));
                }
                assert_eq!(weight_sum(n, k, k, Model::H, Object::Paths), classical(Classical::Elementary, k, n));
            }
        }
    }
}
