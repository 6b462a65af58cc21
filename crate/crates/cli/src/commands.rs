use std::path::Path;

use quipu_core::charpoly::charpoly_tree;
use quipu_core::graph::parse_edge_list;
use quipu_core::scalar::{to_decimal, to_decimal_full};
use quipu_core::search::{brute_min as search_brute, family_min as search_family, predicted_min, reports_to_csv};
use quipu_core::search::{MinimizerReport, Scope, SearchOptions, GRAPH_CAP};
use quipu_core::spectral::{rho_tree, solve_limit_equation, LimitKind, SpectralResult, TIE_TOL};
use quipu_core::verify::{certify_minimizer, limit_convergence, CertificateReport, ConvergenceKind};
use quipu_core::{FamilyId, KVector, Scalar, Tree};
use serde_json::json;

use crate::error::CliError;
use crate::{Config, Format, Outcome};

/// A tree read from an edge-list file or built from a k-vector.
fn load_tree(input: &str) -> Result<Tree, CliError> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{input}: {e}")))?;
        let graph = parse_edge_list(&text)?;
        return Ok(graph.into_tree()?);
    }
    let kv: KVector = input
        .parse()
        .map_err(|e| CliError::Parse(format!("`{input}` is neither a readable file nor a k-vector ({e})")))?;
    Ok(kv.to_tree())
}

fn parse_kvector(text: &str) -> Result<KVector, CliError> {
    Ok(text.parse::<KVector>()?)
}

fn dec(cfg: &Config, x: &Scalar) -> String {
    match cfg.digits {
        Some(d) => to_decimal(x, d),
        None => to_decimal_full(x),
    }
}

fn search_options(cfg: &Config) -> SearchOptions {
    SearchOptions {
        solve: cfg.solve,
        tie: TIE_TOL.max(cfg.solve.tol * 100.0),
        ..SearchOptions::default()
    }
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn ok(text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { text, ok: true })
}

pub fn charpoly(cfg: &Config, input: &str) -> Result<Outcome, CliError> {
    let tree = load_tree(input)?;
    let poly = charpoly_tree(&tree);
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    let text = match cfg.format {
        Format::Plain => poly.to_string(),
        Format::Json => pretty(&json!({
            "n": tree.n(),
            "degree": poly.degree(),
            "coefficients": coeffs,
            "polynomial": poly.to_string(),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = coeffs.iter().enumerate().map(|(j, c)| vec![j.to_string(), c.clone()]).collect();
            csv_text(&["power", "coefficient"], &rows)
        }
    };
    ok(text)
}

fn spectral_text(cfg: &Config, label: &str, r: &SpectralResult, extra: serde_json::Value) -> String {
    match cfg.format {
        Format::Plain => format!(
            "{label} {}\nlo {}\nhi {}\nresidual {}\n",
            dec(cfg, &r.value),
            dec(cfg, &r.lo),
            dec(cfg, &r.hi),
            to_decimal(&r.residual, 6)
        ),
        Format::Json => {
            let mut v = extra;
            v[label] = r.to_json(cfg.digits);
            pretty(&v)
        }
        Format::Csv => csv_text(
            &["value", "lo", "hi", "residual"],
            &[vec![dec(cfg, &r.value), dec(cfg, &r.lo), dec(cfg, &r.hi), to_decimal(&r.residual, 6)]],
        ),
    }
}

pub fn rho(cfg: &Config, input: &str) -> Result<Outcome, CliError> {
    let tree = load_tree(input)?;
    let r = rho_tree(&tree, &cfg.solve)?;
    ok(spectral_text(cfg, "rho", &r, json!({ "n": tree.n(), "diameter": tree.diameter() })))
}

fn report_text(cfg: &Config, report: &MinimizerReport) -> String {
    match cfg.format {
        Format::Plain => {
            let mut s = match report.e {
                Some(e) => format!("n={} e={} D={} scope={}\n", report.n, e, report.d, report.scope),
                None => format!("n={} D={} scope={}\n", report.n, report.d, report.scope),
            };
            for label in report.argmin_labels() {
                s.push_str(&format!("argmin {label}\n"));
            }
            s.push_str(&format!("rho {}\n", dec(cfg, &report.rho.value)));
            if let Some(g) = &report.runner_up_gap {
                let bound = if report.gap_is_lower_bound { " (lower bound)" } else { "" };
                s.push_str(&format!("gap {}{bound}\n", to_decimal(g, 12)));
            }
            s.push_str(&format!("solved {} of {} candidates\n", report.solved, report.candidates));
            s
        }
        Format::Json => pretty(&report.to_json(cfg.digits)),
        Format::Csv => reports_to_csv(std::slice::from_ref(report), cfg.digits),
    }
}

pub fn family_min(cfg: &Config, n: usize, e: usize, family: FamilyId, all_ties: bool) -> Result<Outcome, CliError> {
    let mut report = search_family(n, e, family, &search_options(cfg))?;
    if !all_ties {
        report.argmin.truncate(1);
    }
    ok(report_text(cfg, &report))
}

pub fn brute_min(cfg: &Config, n: usize, d: usize, scope: Scope) -> Result<Outcome, CliError> {
    let cap = match scope {
        Scope::AllGraphsSmall => {
            let cap = cfg.cap.unwrap_or(GRAPH_CAP).min(GRAPH_CAP);
            if n > cap {
                return Err(CliError::Parse(format!("order {n} exceeds the graph cap of {cap}")));
            }
            cap
        }
        _ => cfg.tree_cap(),
    };
    let report = search_brute(n, d, scope, cap, &search_options(cfg))?;
    ok(report_text(cfg, &report))
}

pub fn verify(cfg: &Config, n: usize, e: usize, member: Option<&str>) -> Result<Outcome, CliError> {
    let members = match member {
        Some(text) => vec![parse_kvector(text)?],
        None => search_family(n, e, FamilyId::FamP, &search_options(cfg))?.argmin_kvectors(),
    };
    let reports = members
        .iter()
        .map(|kv| certify_minimizer(n, e, kv, &cfg.solve))
        .collect::<Result<Vec<CertificateReport>, _>>()?;
    let passed = reports.iter().all(CertificateReport::passed);
    let text = match cfg.format {
        Format::Plain => {
            let mut s = String::new();
            for r in &reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                s.push_str(&format!("{} rho {} {verdict}\n", r.kv, dec(cfg, &r.rho.value)));
                for c in &r.checks {
                    let mark = if c.satisfied { "ok" } else { "FAIL" };
                    s.push_str(&format!("  {:<11} {:>2} slack {:>20} {mark}\n", c.id.name(), c.index, to_decimal(&c.slack, 12)));
                }
            }
            s
        }
        Format::Json => pretty(&json!({
            "passed": passed,
            "reports": reports.iter().map(|r| r.to_json(cfg.digits)).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |c| {
                        vec![r.kv.to_string(), c.id.name().to_string(), c.index.to_string(), c.satisfied.to_string(), to_decimal(&c.slack, 12)]
                    })
                })
                .collect();
            csv_text(&["kv", "check", "index", "satisfied", "slack"], &rows)
        }
    };
    Ok(Outcome { text, ok: passed })
}

pub fn limits(cfg: &Config, kind: &str, k: i64, sizes: &[usize]) -> Result<Outcome, CliError> {
    if let Ok(limit) = kind.parse::<LimitKind>() {
        let r = solve_limit_equation(limit, k, &cfg.solve)?;
        return ok(spectral_text(cfg, limit.name(), &r, json!({ "kind": limit.name(), "k": k })));
    }
    let conv: ConvergenceKind = kind
        .parse()
        .map_err(|_| CliError::Parse(format!("unknown kind `{kind}` (expected rho, rho1, rho2, ikj, kj, ki)")))?;
    let k = usize::try_from(k).map_err(|_| CliError::Parse(format!("k must be nonnegative, got {k}")))?;
    let table = limit_convergence(conv, k, sizes, &cfg.solve)?;
    let partner_ok = table.max_partner_gap().is_none_or(|g| g < TIE_TOL);
    let passed = table.all_positive() && table.strictly_decreasing() && partner_ok;
    let digits = cfg.digits.unwrap_or(cfg.solve.precision.decimal_digits() as usize);
    let text = match cfg.format {
        Format::Plain => {
            let mut s = format!("{} k={} limit {}\n", conv.name(), k, dec(cfg, &table.limit));
            for row in &table.rows {
                s.push_str(&format!("{:>6} {} diff {}\n", row.size, row.kv, to_decimal(&row.diff, 12)));
            }
            if let Some(g) = table.max_partner_gap() {
                s.push_str(&format!("max partner gap {}\n", to_decimal(&g, 6)));
            }
            s
        }
        Format::Json => pretty(&table.to_json(digits)),
        Format::Csv => table.to_csv(digits),
    };
    Ok(Outcome { text, ok: passed })
}

/// Inclusive order range: `29..44`, `29..=44` or a single order.
fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Parse(format!("bad order range `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(text)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn ks_list(kvs: &[KVector]) -> String {
    kvs.iter().map(KVector::ks_string).collect::<Vec<_>>().join(";")
}

pub fn table(cfg: &Config, e: usize, range: &str) -> Result<Outcome, CliError> {
    let (lo, hi) = parse_range(range)?;
    let opts = search_options(cfg);
    let mut rows = Vec::new();
    let mut all_match = true;
    for n in lo..=hi {
        let predicted = predicted_min(n, e)?;
        let report = search_family(n, e, FamilyId::FamP, &opts)?;
        let mut found: Vec<KVector> = report.argmin_kvectors().iter().map(KVector::mirror_canonical).collect();
        found.sort();
        let matched = found == predicted;
        all_match &= matched;
        let gap = match &report.runner_up_gap {
            Some(g) if report.gap_is_lower_bound => format!(">{}", to_decimal(g, 6)),
            Some(g) => to_decimal(g, 6),
            None => String::new(),
        };
        rows.push(vec![
            n.to_string(),
            ks_list(&predicted),
            ks_list(&found),
            if matched { "yes" } else { "no" }.to_string(),
            dec(cfg, &report.rho.value),
            gap,
        ]);
    }
    let header = ["n", "predicted", "found", "match", "rho", "gap"];
    let text = match cfg.format {
        Format::Plain => {
            let mut s = String::new();
            for r in &rows {
                s.push_str(&format!("{:>4}  {:<32} {:<32} {:<3}  {}\n", r[0], r[1], r[2], r[3], r[4]));
            }
            s
        }
        Format::Json => {
            let objs: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut o = serde_json::Map::new();
                    for (h, v) in header.iter().zip(r) {
                        o.insert(h.to_string(), json!(v));
                    }
                    serde_json::Value::Object(o)
                })
                .collect();
            pretty(&json!({ "e": e, "all_match": all_match, "rows": objs }))
        }
        Format::Csv => csv_text(&header, &rows),
    };
    Ok(Outcome { text, ok: all_match })
}
