use std::fmt;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use gsym_core::bisnomial::{bisnomial, pq_bisnomial, q_bisnomial, value_cell, value_json, BisnomialTable, TableKind};
use gsym_core::combinatorics::{enum_paths, path_ascii, paths_svg, tilings_svg, weight_sum, LatticePath, Model, Object};
use gsym_core::identities::{lookup, registry, verify_grid_with, verify_with, Grid, Params, Shape, Tables};
use gsym_core::multipoly::Specialized;
use gsym_core::symfun::{classical, m_lambda, product, product_over_partition, schur_pair, Classical, GenFamily, GenTable};
use gsym_core::{BigInteger, MPoly, Partition};
use serde_json::{json, Value};

use crate::{Cli, Command, Format, Kind, ModelArgs, Output, Span, TableArg};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(gsym_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<gsym_core::Error> for CliError {
    fn from(e: gsym_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

fn require_format(out: &Output, allowed: &[Format], command: &str) -> Result<()> {
    if allowed.contains(&out.format) {
        Ok(())
    } else {
        usage(format!("{command} does not support --format {:?}", out.format).to_lowercase())
    }
}

/// Write the payload to `--out` or standard output.
fn emit(out: &Output, payload: &str) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, payload)?,
        None => std::io::stdout().lock().write_all(payload.as_bytes())?,
    }
    Ok(())
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let start = Instant::now();
    let code = match &cli.command {
        Command::Expand { kind, k, s, n, lambda } => expand(&cli.output, *kind, *k, *s, *n, lambda.as_ref())?,
        Command::Verify { id, n, k, s, lambda, serial } => verify(&cli.output, id, *n, *k, *s, lambda.as_ref(), !serial)?,
        Command::Paths { args, art } => paths(&cli.output, args, *art)?,
        Command::Tilings { args } => tilings(&cli.output, args)?,
        Command::Bisnomial { n, k, s, table } => bisnomial_cmd(&cli.output, *n, *k, *s, *table)?,
        Command::Schur { lambda, s, n } => schur(&cli.output, lambda, *s, *n)?,
        Command::List => list(&cli.output)?,
    };
    if !cli.output.deterministic {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    Ok(code)
}

fn expand(out: &Output, kind: Kind, k: Option<u32>, s: Option<u32>, n: usize, lambda: Option<&Partition>) -> Result<ExitCode> {
    require_format(out, &[Format::Text, Format::Json], "expand")?;
    if n == 0 {
        return usage("--n must be positive");
    }
    let need_s = || s.ok_or_else(|| CliError::Usage("--s is required for E, H and P".into()));
    let poly: MPoly<BigInteger> = match (kind, lambda, k) {
        (Kind::M, Some(l), _) => m_lambda(l, n),
        (Kind::M, None, _) => return usage("--kind m needs --lambda"),
        (_, Some(_), Some(_)) => return usage("give either --k or --lambda, not both"),
        (_, None, None) => return usage("--k or --lambda is required"),
        (Kind::LowerE | Kind::LowerH | Kind::LowerP, _, _) => {
            let family = match kind {
                Kind::LowerE => Classical::Elementary,
                Kind::LowerH => Classical::Complete,
                _ => Classical::PowerSum,
            };
            match (lambda, k) {
                (Some(l), _) => {
                    let factors: Vec<_> = l.parts().iter().map(|&i| classical(family, i, n)).collect();
                    product(n, factors.iter())
                }
                (None, Some(k)) => classical(family, k, n),
                _ => unreachable!(),
            }
        }
        (_, _, _) => {
            let s = need_s()?;
            if s == 0 {
                return usage("--s must be positive");
            }
            let family = match kind {
                Kind::UpperE => GenFamily::E,
                Kind::UpperH => GenFamily::H,
                _ => GenFamily::P,
            };
            match (lambda, k) {
                (Some(l), _) => product_over_partition(family, l, s, n)?,
                (None, Some(k)) => {
                    let table = GenTable::new(n, s, k as usize);
                    match family {
                        GenFamily::E => table.e(k as i64),
                        GenFamily::H => table.h(k as i64),
                        GenFamily::P => table.p(k)?,
                    }
                }
                _ => unreachable!(),
            }
        }
    };
    let payload = match out.format {
        Format::Json => json_text(&poly.to_json()),
        _ => format!("{poly}\n"),
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(
    out: &Output,
    id: &str,
    n: Span,
    k: Span,
    s: Span,
    lambda: Option<&Partition>,
    parallel: bool,
) -> Result<ExitCode> {
    require_format(out, &[Format::Text, Format::Json], "verify")?;
    let entries: Vec<_> = if id == "all" { registry().iter().collect() } else { vec![lookup(id)?] };
    let tables = Tables::new();
    let grid = Grid::new(n.lo as usize..=n.hi as usize, k.lo..=k.hi, s.lo..=s.hi);
    let mut lines = String::new();
    let mut failed = 0;
    for entry in entries {
        let start = Instant::now();
        let (reports, summary) = match (entry.shape, lambda) {
            (Shape::Partition, Some(l)) => {
                let r = verify_with(&tables, entry.id, &Params::partition(l.clone()))?;
                let summary = format!("{}: 1 checked, {} failed", entry.id, usize::from(!r.holds));
                (vec![r], summary)
            }
            _ => {
                let run = verify_grid_with(&tables, entry.id, &grid, parallel)?;
                let sm = &run.summary;
                let summary = format!(
                    "{}: {} points, {} passed, {} failed, {} skipped",
                    sm.identity_id, sm.total, sm.passed, sm.failed, sm.skipped
                );
                (run.reports, summary)
            }
        };
        for r in &reports {
            lines.push_str(&r.to_json_line());
            lines.push('\n');
        }
        failed += reports.iter().filter(|r| !r.holds).count();
        eprintln!("{summary}");
        if !out.deterministic {
            eprintln!("  {} took {:.3?}", entry.id, start.elapsed());
        }
    }
    emit(out, &lines)?;
    if failed == 0 {
        eprintln!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{failed} checks failed");
        Ok(ExitCode::from(1))
    }
}

fn model_paths(args: &ModelArgs) -> Result<Vec<LatticePath>> {
    if args.n == 0 {
        return usage("--n must be positive");
    }
    Ok(enum_paths(args.n, args.k, args.s, args.model))
}

fn signed(model: Model, sign: i32) -> &'static str {
    match (model, sign) {
        (Model::H, s) if s < 0 => "-",
        _ => "+",
    }
}

fn paths(out: &Output, args: &ModelArgs, art: bool) -> Result<ExitCode> {
    require_format(out, &[Format::Text, Format::Json, Format::Svg], "paths")?;
    let list = model_paths(args)?;
    let sum = weight_sum(args.n, args.k, args.s, args.model, Object::Paths);
    let payload = match out.format {
        Format::Svg => paths_svg(&list, args.s, args.model),
        Format::Json => {
            let items: Vec<Value> = list
                .iter()
                .map(|p| {
                    json!({
                        "steps": p.to_string(),
                        "runs": p.runs(),
                        "weight": p.weight().to_string(),
                        "sign": if args.model == Model::H { p.sign(args.s) } else { 1 },
                    })
                })
                .collect();
            json_text(&json!({
                "n": args.n, "k": args.k, "s": args.s, "model": args.model.to_string(),
                "count": list.len(), "paths": items, "weight_sum": sum.to_string(),
            }))
        }
        _ => {
            let mut text = String::new();
            for p in &list {
                let word = if p.steps().is_empty() { "-".to_string() } else { p.to_string() };
                text.push_str(&format!("{word}  {} {}\n", signed(args.model, p.sign(args.s)), p.weight()));
                if art {
                    text.push_str(&path_ascii(p));
                    text.push('\n');
                }
            }
            text.push_str(&format!("count: {}\nsum: {sum}\n", list.len()));
            text
        }
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn tilings(out: &Output, args: &ModelArgs) -> Result<ExitCode> {
    require_format(out, &[Format::Text, Format::Json, Format::Svg], "tilings")?;
    let list: Vec<_> = model_paths(args)?.iter().map(LatticePath::to_tiling).collect();
    let sum = weight_sum(args.n, args.k, args.s, args.model, Object::Tilings);
    let payload = match out.format {
        Format::Svg => tilings_svg(&list, args.s, args.model),
        Format::Json => {
            let items: Vec<Value> = list
                .iter()
                .map(|t| {
                    json!({
                        "cells": t.to_string(),
                        "weight": t.weight().to_string(),
                        "sign": if args.model == Model::H { t.sign(args.s) } else { 1 },
                    })
                })
                .collect();
            json_text(&json!({
                "n": args.n, "k": args.k, "s": args.s, "model": args.model.to_string(),
                "count": list.len(), "tilings": items, "weight_sum": sum.to_string(),
            }))
        }
        _ => {
            let mut text = String::new();
            for t in &list {
                let word = if t.cells().is_empty() { "-".to_string() } else { t.to_string() };
                text.push_str(&format!("{word}  {} {}\n", signed(args.model, t.sign(args.s)), t.weight()));
            }
            text.push_str(&format!("count: {}\nsum: {sum}\n", list.len()));
            text
        }
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn bisnomial_cmd(out: &Output, n: Span, k: Option<u32>, s: u32, table: TableArg) -> Result<ExitCode> {
    require_format(out, &[Format::Text, Format::Json, Format::Csv], "bisnomial")?;
    if n.lo == 0 {
        return usage("--n must be positive");
    }
    let kind = match table {
        TableArg::Plain => TableKind::Plain,
        TableArg::Q => TableKind::Q,
        TableArg::Pq => TableKind::Pq,
    };
    let value = |n: u32, k: u32| match kind {
        TableKind::Plain => Specialized::Integer(bisnomial(n, k, s)),
        TableKind::Q => Specialized::Uni(q_bisnomial(n, k, s)),
        TableKind::Pq => Specialized::Bi(pq_bisnomial(n, k, s)),
    };
    let text = |v: &Specialized| match v {
        Specialized::Integer(c) => c.to_string(),
        Specialized::Uni(p) => p.to_string(),
        Specialized::Bi(p) => p.to_string(),
    };
    let entries: Vec<(u32, u32, Specialized)> = match k {
        Some(k) => (n.lo..=n.hi).map(|n| (n, k, value(n, k))).collect(),
        None => {
            let t = BisnomialTable::new(n.hi, s, kind);
            t.entries().filter(|(m, _, _)| *m >= n.lo).map(|(m, k, v)| (m, k, v.clone())).collect()
        }
    };
    let payload = match out.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| CliError::Usage(e.to_string());
            w.write_record(["n", "k", "value"]).map_err(csv_err)?;
            for (n, k, v) in &entries {
                w.write_record([n.to_string(), k.to_string(), value_cell(v)]).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
        Format::Json => {
            let items: Vec<Value> =
                entries.iter().map(|(n, k, v)| json!({"n": n, "k": k, "value": value_json(v)})).collect();
            json_text(&json!({"s": s, "kind": kind.name(), "entries": items}))
        }
        _ => {
            if k.is_some() && n.lo == n.hi {
                format!("{}\n", text(&entries[0].2))
            } else {
                entries.iter().map(|(n, k, v)| format!("n={n} k={k}: {}\n", text(v))).collect()
            }
        }
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn schur(out: &Output, lambda: &Partition, s: u32, n: usize) -> Result<ExitCode> {
    require_format(out, &[Format::Text, Format::Json], "schur")?;
    if s == 0 || n == 0 {
        return usage("--s and --n must be positive");
    }
    let pair = schur_pair(lambda, s, n)?;
    let payload = match out.format {
        Format::Json => json_text(&json!({
            "lambda": lambda, "s": s, "n": n,
            "via_h": pair.via_h.to_json(), "via_e": pair.via_e.to_json(), "equal": pair.equal,
        })),
        _ => format!("via_h: {}\nvia_e: {}\nequal: {}\n", pair.via_h, pair.via_e, pair.equal),
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn list(out: &Output) -> Result<ExitCode> {
    require_format(out, &[Format::Text, Format::Json], "list")?;
    let payload = match out.format {
        Format::Json => {
            let items: Vec<Value> = registry()
                .iter()
                .map(|e| json!({"id": e.id, "summary": e.summary, "shape": format!("{:?}", e.shape).to_lowercase()}))
                .collect();
            json_text(&Value::Array(items))
        }
        _ => registry().iter().map(|e| format!("{:<18} {}\n", e.id, e.summary)).collect(),
    };
    emit(out, &payload)?;
    Ok(ExitCode::SUCCESS)
}
