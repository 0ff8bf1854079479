//! Registry of exact identity checks.
//!
//! Every entry evaluates both sides of one identity with exact arithmetic
//! and compares normal forms. Parameter points outside an entry's domain
//! are rejected by [`verify`] and skipped (and counted) by [`verify_grid`].

mod checks;
pub mod context;

use std::ops::RangeInclusive;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enum_partitions, Partition};
pub use context::Tables;

/// Parameters of one check. Unused fields stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Partition>,
}

impl Params {
    pub fn nks(n: usize, k: u32, s: u32) -> Self {
        Params { n: Some(n), k: Some(k), s: Some(s), lambda: None }
    }

    pub fn ks(k: u32, s: u32) -> Self {
        Params { k: Some(k), s: Some(s), ..Params::default() }
    }

    pub fn partition(lambda: Partition) -> Self {
        Params { k: Some(lambda.weight()), lambda: Some(lambda), ..Params::default() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: Params,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl IdentityReport {
    /// One JSON object on a single line, without timing.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Fully resolved parameters handed to a check.
#[derive(Debug, Clone)]
pub(crate) struct Point {
    pub n: usize,
    pub k: u32,
    pub s: u32,
    pub lambda: Option<Partition>,
}

pub(crate) struct Outcome {
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    pub note: Option<String>,
}

/// Which grid dimensions an identity reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `n`, `k`, `s`.
    Polynomial,
    /// `k`, `s` only.
    Scalar,
    /// A partition `lambda`, with `k = |lambda|`.
    Partition,
}

type Check = fn(&Tables, &Point) -> Outcome;
type Domain = fn(&Point) -> Option<String>;

pub struct Identity {
    pub id: &'static str,
    pub summary: &'static str,
    pub shape: Shape,
    /// Sums over all partitions of `k`; these grow fastest with `k`.
    pub partition_sum: bool,
    check: Check,
    domain: Domain,
}

impl Identity {
    /// Why `params` fall outside this identity's domain, if they do.
    fn reject(&self, p: &Point) -> Option<String> {
        if self.shape == Shape::Polynomial && p.n == 0 {
            return Some("n must be positive".into());
        }
        if self.shape != Shape::Partition && p.s == 0 {
            return Some("s must be positive".into());
        }
        (self.domain)(p)
    }
}

fn any(_: &Point) -> Option<String> {
    None
}

fn k_positive(p: &Point) -> Option<String> {
    (p.k == 0).then(|| "k must be positive".into())
}

fn s_at_least_two(p: &Point) -> Option<String> {
    k_positive(p).or_else(|| (p.s < 2).then(|| "s must be at least 2".into()))
}

fn s_not_dividing_k(p: &Point) -> Option<String> {
    s_at_least_two(p).or_else(|| p.k.is_multiple_of(p.s).then(|| format!("s = {} divides k = {}", p.s, p.k)))
}

fn s_at_least_two_any_k(p: &Point) -> Option<String> {
    (p.s < 2).then(|| "s must be at least 2".into())
}

fn lambda_nonempty(p: &Point) -> Option<String> {
    match &p.lambda {
        None => Some("a partition is required".into()),
        Some(l) if l.is_empty() => Some("partition must be nonempty".into()),
        Some(_) => None,
    }
}

fn lambda_shorter_than_k(p: &Point) -> Option<String> {
    lambda_nonempty(p).or_else(|| {
        let l = p.lambda.as_ref().unwrap();
        (l.weight() < 2 || l.len() >= l.weight() as usize)
            .then(|| "needs k > 1 and fewer than k parts".into())
    })
}

fn lambda_at_most_k_minus_two(p: &Point) -> Option<String> {
    lambda_nonempty(p).or_else(|| {
        let l = p.lambda.as_ref().unwrap();
        (l.weight() < 3 || l.len() + 2 > l.weight() as usize)
            .then(|| "needs k > 2 and at most k - 2 parts".into())
    })
}

/// All registered identities, in listing order.
pub fn registry() -> &'static [Identity] {
    static REGISTRY: OnceLock<Vec<Identity>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        use checks::*;
        use Shape::*;
        let entry = |id, summary, shape, partition_sum, check: Check, domain: Domain| Identity {
            id,
            summary,
            shape,
            partition_sum,
            check,
            domain,
        };
        vec![
            entry("ortho", "sum (-1)^j E_j H_{k-j} = [k = 0]", Polynomial, false, ortho, any),
            entry("inv_H", "H_k as a multinomial sum over products of E", Polynomial, true, inv_h, k_positive),
            entry("inv_E", "E_k as a multinomial sum over products of H", Polynomial, true, inv_e, k_positive),
            entry("newton_E", "k E_k = sum (-1)^(j-1) P_j E_{k-j}", Polynomial, false, newton_e, k_positive),
            entry("newton_H", "k H_k = sum P_j H_{k-j}", Polynomial, false, newton_h, k_positive),
            entry("newton_P", "P_k = sum (-1)^(j-1) j E_j H_{k-j}", Polynomial, false, newton_p, k_positive),
            entry("cubic_E", "2k E_k = sum (-1)^k3 (k1+k2) E_k1 E_k2 H_k3", Polynomial, false, cubic_e, k_positive),
            entry("cubic_H", "k H_k = sum (-1)^(k3-1) k3 H_k1 H_k2 E_k3", Polynomial, false, cubic_h, k_positive),
            entry("pk_from_E", "p_k as a quotient of sums over products of E", Polynomial, true, pk_from_e, k_positive),
            entry("pk_from_H", "p_k as a quotient of sums over products of H", Polynomial, true, pk_from_h, k_positive),
            entry("P_from_H", "P_k as a sum over products of H", Polynomial, true, p_from_h, k_positive),
            entry("P_from_E", "P_k as a sum over products of E", Polynomial, true, p_from_e, k_positive),
            entry("scalar_c", "sum over parts <= s of (-1)^l k/l multinomial = s or -1", Scalar, false, scalar_c, k_positive),
            entry("H_from_P", "H_k = sum P_lambda / z_lambda", Polynomial, true, h_from_p, k_positive),
            entry("E_from_P", "E_k = sum (-1)^(k+l) P_lambda / z_lambda", Polynomial, true, e_from_p, k_positive),
            entry("rec_H", "H_k(n) = (-x_n)^(s+1) H_{k-s-1}(n) + H_k(n-1) + x_n H_{k-1}(n-1)", Polynomial, false, rec_h, any),
            entry("rec_E", "E_k(n) = x_n E_{k-1}(n) + E_k(n-1) - x_n^(s+1) E_{k-s-1}(n-1)", Polynomial, false, rec_e, any),
            entry("peel_E", "E_k(n) = sum_{j<=s} x_n^j E_{k-j}(n-1)", Polynomial, false, peel_e, any),
            entry("peel_H", "H_k(n-1) = sum_{j<=s} (-1)^j x_n^j H_{k-j}(n)", Polynomial, false, peel_h, any),
            entry("roots_H", "H_k = (-1)^k sum m_lambda(roots) h_lambda", Polynomial, false, roots_h, k_positive),
            entry("roots_E", "E_k = (-1)^k sum m_lambda(roots) e_lambda", Polynomial, false, roots_e, k_positive),
            entry("conj_bridge", "sum_{lambda_1<=s} m_lambda = (-1)^k sum m_lambda(roots) e_lambda", Polynomial, false, conj_bridge, k_positive),
            entry("conv_H", "H^(s-1)_k = sum (-1)^(sj) h_j(x^s) e_{k-sj}", Polynomial, false, conv_h, s_at_least_two),
            entry("conv_E", "E^(s-1)_k = sum (-1)^j e_j(x^s) h_{k-sj}", Polynomial, false, conv_e, s_at_least_two),
            entry("conv_roots_h", "convolution for H^(s-1) equals the order-s root expansion in h", Polynomial, false, conv_roots_h, s_at_least_two),
            entry("conv_roots_e", "convolution for E^(s-1) equals the order-s root expansion in e", Polynomial, false, conv_roots_e, s_at_least_two),
            entry("mroots_closed_k1", "m_lambda at roots of order k+1 in closed form", Partition, false, mroots_closed_k1, lambda_nonempty),
            entry("mroots_closed_k", "m_lambda at roots of order k in closed form", Partition, false, mroots_closed_k, lambda_shorter_than_k),
            entry("mroots_closed_km1", "m_lambda at roots of order k-1 in closed form", Partition, false, mroots_closed_km1, lambda_at_most_k_minus_two),
            entry("powsub_h", "h_k(x^s) = (-1)^(ks) sum (-1)^j h_j H^(s-1)_{ks-j}", Polynomial, false, powsub_h, s_at_least_two),
            entry("powsub_e", "e_k(x^s) = (-1)^k sum (-1)^j e_j E^(s-1)_{ks-j}", Polynomial, false, powsub_e, s_at_least_two),
            entry("vanish_h", "sum (-1)^j h_j H^(s-1)_{k-j} = 0 when s does not divide k", Polynomial, false, vanish_h, s_not_dividing_k),
            entry("vanish_e", "sum (-1)^j e_j E^(s-1)_{k-j} = 0 when s does not divide k", Polynomial, false, vanish_e, s_not_dividing_k),
            entry("mono_H", "H_k over parts = 0, 1 mod s+1 with signs", Polynomial, false, mono_h, k_positive),
            entry("mono_bridge", "signed sum over parts = 0, 1 mod s+1 equals the root expansion in h", Polynomial, false, mono_bridge, k_positive),
            entry("paths_E", "E_k = sum of path weights, runs at most s", Polynomial, false, paths_e, any),
            entry("paths_H", "H_k = signed sum of path weights, runs 0 or 1 mod s+1", Polynomial, false, paths_h, any),
            entry("tilings_E", "E_k = sum of tiling weights, red runs at most s", Polynomial, false, tilings_e, any),
            entry("tilings_H", "H_k = signed sum of tiling weights, red runs 0 or 1 mod s+1", Polynomial, false, tilings_h, any),
            entry("bisnomial_plain", "(n choose k)_{s-1} = sum (-1)^j C(n,j) C(n+k-sj-1, k-sj)", Polynomial, false, bis_plain, s_at_least_two_any_k),
            entry("bisnomial_q", "q-analogue of the bi^(s-1)-nomial conversion", Polynomial, false, bis_q, s_at_least_two_any_k),
            entry("bisnomial_pq", "p,q-analogue of the bi^(s-1)-nomial conversion", Polynomial, false, bis_pq, s_at_least_two_any_k),
            entry("binom_recovery", "C(n,k) = sum (-1)^(k+j) C(n,j) (n choose ks-j)_{s-1}", Polynomial, false, binom_recovery, s_at_least_two_any_k),
            entry("qs_recovery", "q^(s C(k,2)) [n,k]_{q^s} from q-binomials and q-bi^(s-1)-nomials", Polynomial, false, qs_recovery, s_at_least_two_any_k),
        ]
    })
}

pub fn lookup(id: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn resolve(entry: &Identity, params: &Params) -> Result<Point> {
    let missing = |what: &str| Error::InvalidParams { id: entry.id.into(), reason: format!("missing {what}") };
    let point = match entry.shape {
        Shape::Polynomial => Point {
            n: params.n.ok_or_else(|| missing("n"))?,
            k: params.k.ok_or_else(|| missing("k"))?,
            s: params.s.ok_or_else(|| missing("s"))?,
            lambda: None,
        },
        Shape::Scalar => Point {
            n: 0,
            k: params.k.ok_or_else(|| missing("k"))?,
            s: params.s.ok_or_else(|| missing("s"))?,
            lambda: None,
        },
        Shape::Partition => {
            let lambda = params.lambda.clone().ok_or_else(|| missing("lambda"))?;
            if let Some(k) = params.k {
                if k != lambda.weight() {
                    return Err(Error::InvalidParams {
                        id: entry.id.into(),
                        reason: format!("k = {k} but lambda = {lambda} has weight {}", lambda.weight()),
                    });
                }
            }
            Point { n: 0, k: lambda.weight(), s: 0, lambda: Some(lambda) }
        }
    };
    Ok(point)
}

fn params_of(entry: &Identity, p: &Point) -> Params {
    match entry.shape {
        Shape::Polynomial => Params::nks(p.n, p.k, p.s),
        Shape::Scalar => Params::ks(p.k, p.s),
        Shape::Partition => Params::partition(p.lambda.clone().expect("partition point")),
    }
}

fn run(entry: &Identity, tables: &Tables, point: &Point) -> IdentityReport {
    let start = Instant::now();
    let out = (entry.check)(tables, point);
    IdentityReport {
        identity_id: entry.id.to_string(),
        params: params_of(entry, point),
        holds: out.holds,
        lhs: out.lhs,
        rhs: out.rhs,
        note: out.note,
        elapsed: start.elapsed(),
    }
}

/// Check one identity at one parameter point.
pub fn verify(identity_id: &str, params: &Params) -> Result<IdentityReport> {
    verify_with(&Tables::new(), identity_id, params)
}

/// [`verify`] reusing the tables of an earlier run.
pub fn verify_with(tables: &Tables, identity_id: &str, params: &Params) -> Result<IdentityReport> {
    let entry = lookup(identity_id)?;
    let point = resolve(entry, params)?;
    if let Some(reason) = entry.reject(&point) {
        return Err(Error::InvalidParams { id: entry.id.into(), reason });
    }
    Ok(run(entry, tables, &point))
}

/// Ranges to sweep. Identities ignore the dimensions they do not read;
/// partition identities sweep every partition of every `k` in range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub n: RangeInclusive<usize>,
    pub k: RangeInclusive<u32>,
    pub s: RangeInclusive<u32>,
}

impl Grid {
    pub fn new(n: RangeInclusive<usize>, k: RangeInclusive<u32>, s: RangeInclusive<u32>) -> Self {
        Grid { n, k, s }
    }

    /// Points in sweep order: `n` outermost, then `s`, then `k`, then `lambda`.
    fn points(&self, shape: Shape) -> Vec<Point> {
        let mut out = Vec::new();
        match shape {
            Shape::Polynomial => {
                for n in self.n.clone() {
                    for s in self.s.clone() {
                        for k in self.k.clone() {
                            out.push(Point { n, k, s, lambda: None });
                        }
                    }
                }
            }
            Shape::Scalar => {
                for s in self.s.clone() {
                    for k in self.k.clone() {
                        out.push(Point { n: 0, k, s, lambda: None });
                    }
                }
            }
            Shape::Partition => {
                for k in self.k.clone() {
                    for lambda in enum_partitions(k, &[]) {
                        out.push(Point { n: 0, k, s: 0, lambda: Some(lambda) });
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GridSummary {
    pub identity_id: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone)]
pub struct GridRun {
    pub reports: Vec<IdentityReport>,
    pub summary: GridSummary,
}

impl GridRun {
    pub fn all_hold(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Check one identity at every valid point of `grid`, in sweep order.
pub fn verify_grid(identity_id: &str, grid: &Grid) -> Result<GridRun> {
    verify_grid_with(&Tables::new(), identity_id, grid, false)
}

/// [`verify_grid`] with shared tables and optional parallel evaluation.
/// Reports come back in sweep order either way.
pub fn verify_grid_with(tables: &Tables, identity_id: &str, grid: &Grid, parallel: bool) -> Result<GridRun> {
    let entry = lookup(identity_id)?;
    let all = grid.points(entry.shape);
    let total = all.len();
    let valid: Vec<Point> = all.into_iter().filter(|p| entry.reject(p).is_none()).collect();
    let skipped = total - valid.len();
    let reports: Vec<IdentityReport> = if parallel {
        valid.par_iter().map(|p| run(entry, tables, p)).collect()
    } else {
        valid.iter().map(|p| run(entry, tables, p)).collect()
    };
    let passed = reports.iter().filter(|r| r.holds).count();
    let summary = GridSummary {
        identity_id: entry.id.into(),
        total,
        passed,
        failed: reports.len() - passed,
        skipped,
    };
    Ok(GridRun { reports, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|e| e.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), before);
    }

    #[test]
    fn ortho_examples() {
        let r = verify("ortho", &Params::nks(3, 4, 2)).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, "0");
        for n in 1..=3 {
            let r = verify("ortho", &Params::nks(n, 0, 2)).unwrap();
            assert!(r.holds);
            assert_eq!(r.rhs, "1");
        }
    }

    #[test]
    fn scalar_c_example() {
        let r = verify("scalar_c", &Params::ks(6, 2)).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, "2");
    }

    #[test]
    fn errors_are_reported() {
        assert_eq!(
            verify("nope", &Params::ks(1, 1)).unwrap_err(),
            Error::UnknownIdentity("nope".into())
        );
        assert!(matches!(
            verify("conv_H", &Params::nks(2, 3, 1)),
            Err(Error::InvalidParams { .. })
        ));
        assert!(matches!(verify("ortho", &Params::ks(2, 1)), Err(Error::InvalidParams { .. })));
        let lambda: Partition = "2,1".parse().unwrap();
        assert!(matches!(
            verify("mroots_closed_km1", &Params::partition(lambda)),
            Err(Error::InvalidParams { .. })
        ));
    }

    #[test]
    fn empty_grid_is_empty() {
        #[allow(clippy::reversed_empty_ranges)]
        let grid = Grid::new(1..=0, 1..=3, 1..=2);
        let run = verify_grid("ortho", &grid).unwrap();
        assert!(run.reports.is_empty());
        assert_eq!(run.summary.total, 0);
    }

    #[test]
    fn grid_skips_points_outside_domain() {
        let run = verify_grid("vanish_h", &Grid::new(1..=2, 1..=4, 1..=3)).unwrap();
        // s = 1 is out, and so are (s = 2, k = 2, 4) and (s = 3, k = 3)
        assert_eq!(run.summary.total, 24);
        assert_eq!(run.summary.skipped, 8 + 2 * 3);
        assert!(run.all_hold());
    }

    #[test]
    fn parallel_grid_keeps_order() {
        let grid = Grid::new(1..=3, 0..=5, 1..=3);
        let tables = Tables::new();
        let serial = verify_grid_with(&tables, "newton_P", &grid, false).unwrap();
        let parallel = verify_grid_with(&Tables::new(), "newton_P", &grid, true).unwrap();
        let key = |r: &IdentityReport| (r.params.clone(), r.lhs.clone());
        assert_eq!(
            serial.reports.iter().map(key).collect::<Vec<_>>(),
            parallel.reports.iter().map(key).collect::<Vec<_>>()
        );
        assert!(serial.all_hold());
    }

    #[test]
    fn json_line_has_no_timing() {
        let r = verify("newton_E", &Params::nks(2, 3, 2)).unwrap();
        let line = r.to_json_line();
        assert!(!line.contains('\n'));
        assert!(!line.contains("elapsed"));
        let back: IdentityReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back.params, r.params);
        assert!(back.holds);
    }
}
