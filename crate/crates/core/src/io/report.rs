use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::generate::{generate, Generator};
use crate::bounds::{wei_bound, wei_independence_bound, Weight};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{clique_number_exact, phi_exact, OracleLimits};
use crate::sequences::{certify_alpha_bound, certify_beta_bound, Justification, TieBreak};

pub const CSV_HEADER: [&str; 14] = [
    "name",
    "n",
    "m",
    "wei_num",
    "wei_den",
    "indep_num",
    "indep_den",
    "r_alpha",
    "alpha_just",
    "r_beta",
    "beta_just",
    "phi",
    "omega",
    "improved",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    JsonLines,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" | "jsonl" => Ok(OutputFormat::JsonLines),
            other => Err(Error::Usage(format!("unknown output format '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    /// Also run the exact `φ` and `ω` oracles.
    pub exact: bool,
    pub limits: OracleLimits,
    pub tie_break: TieBreak,
}

/// Everything computed for one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundRecord {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub wei: Option<Weight>,
    pub indep: Option<Weight>,
    pub r_alpha: Option<usize>,
    pub alpha_just: Option<Justification>,
    pub r_beta: Option<usize>,
    pub beta_just: Option<Justification>,
    pub phi: Option<usize>,
    pub omega: Option<usize>,
    /// `r_alpha > ⌈W⌉` or `r_beta > ⌈W⌉`.
    pub improved: bool,
    /// Quantities that could not be computed (e.g. oracle cap exceeded).
    pub errors: Vec<String>,
    /// Inequalities that failed; any entry indicates a bug.
    pub violations: Vec<String>,
}

impl BoundRecord {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self) {
        let mut bad = Vec::new();
        let le_w = |w: &Weight, k: usize| w.le_int(k);
        if let (Some(w), Some(r), Some(j)) = (&self.wei, self.r_alpha, self.alpha_just) {
            if j != Justification::CliqueOnly && !le_w(w, r) {
                bad.push(format!("r_alpha = {r} < W = {w}"));
            }
        }
        if let (Some(w), Some(r), Some(j)) = (&self.wei, self.r_beta, self.beta_just) {
            if j != Justification::CliqueOnly && !le_w(w, r) {
                bad.push(format!("r_beta = {r} < W = {w}"));
            }
        }
        if let Some(omega) = self.omega {
            for (what, r) in [
                ("r_alpha", self.r_alpha),
                ("r_beta", self.r_beta),
                ("phi", self.phi),
            ] {
                if let Some(r) = r {
                    if r > omega {
                        bad.push(format!("omega = {omega} < {what} = {r}"));
                    }
                }
            }
        }
        if let (Some(phi), Some(w)) = (self.phi, &self.wei) {
            if !le_w(w, phi) {
                bad.push(format!("phi = {phi} < W = {w}"));
            }
        }
        if let (Some(phi), Some(r), Some(Justification::Theorem1)) =
            (self.phi, self.r_alpha, self.alpha_just)
        {
            if phi > r {
                bad.push(format!("phi = {phi} > r_alpha = {r}"));
            }
        }
        self.violations = bad;
    }
}

fn compute_record(name: &str, g: &Graph, opts: &ReportOptions) -> BoundRecord {
    let mut rec = BoundRecord {
        name: name.to_string(),
        n: g.n(),
        m: g.edge_count(),
        wei: None,
        indep: None,
        r_alpha: None,
        alpha_just: None,
        r_beta: None,
        beta_just: None,
        phi: None,
        omega: None,
        improved: false,
        errors: Vec::new(),
        violations: Vec::new(),
    };
    let bounds = (|| -> Result<()> {
        rec.wei = Some(wei_bound(g)?);
        rec.indep = Some(wei_independence_bound(g)?);
        let a = certify_alpha_bound(g, opts.tie_break)?;
        rec.r_alpha = Some(a.r());
        rec.alpha_just = Some(a.justification());
        let b = certify_beta_bound(g, opts.tie_break)?;
        rec.r_beta = Some(b.r());
        rec.beta_just = Some(b.justification());
        Ok(())
    })();
    match bounds {
        Err(Error::InvariantViolation(msg)) => rec.violations.push(msg),
        Err(e) => rec.errors.push(e.to_string()),
        Ok(()) => {}
    }
    if opts.exact && g.n() > 0 {
        match clique_number_exact(g, &opts.limits) {
            Ok(w) => rec.omega = Some(w),
            Err(e) => rec.errors.push(format!("omega: {e}")),
        }
        match phi_exact(g, &opts.limits) {
            Ok((phi, _)) => rec.phi = Some(phi),
            Err(e) => rec.errors.push(format!("phi: {e}")),
        }
    }
    if let Some(w) = &rec.wei {
        let ceil = w.ceil_usize();
        rec.improved =
            rec.r_alpha.is_some_and(|r| r > ceil) || rec.r_beta.is_some_and(|r| r > ceil);
    }
    let pending = std::mem::take(&mut rec.violations);
    rec.check();
    rec.violations.splice(0..0, pending);
    rec
}

/// Computes one record per graph. Graphs are processed in parallel; the
/// output order always matches the input order.
pub fn run_report(sources: &[(String, Graph)], opts: &ReportOptions) -> Vec<BoundRecord> {
    sources
        .par_iter()
        .map(|(name, g)| compute_record(name, g, opts))
        .collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

pub fn render_csv(records: &[BoundRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record([
            r.name.clone(),
            r.n.to_string(),
            r.m.to_string(),
            opt(&r.wei.as_ref().map(|w| w.numer().clone())),
            opt(&r.wei.as_ref().map(|w| w.denom().clone())),
            opt(&r.indep.as_ref().map(|w| w.numer().clone())),
            opt(&r.indep.as_ref().map(|w| w.denom().clone())),
            opt(&r.r_alpha),
            opt(&r.alpha_just),
            opt(&r.r_beta),
            opt(&r.beta_just),
            opt(&r.phi),
            opt(&r.omega),
            r.improved.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn big(v: &BigInt) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn record_json(r: &BoundRecord) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(r.name));
    m.insert("n".into(), json!(r.n));
    m.insert("m".into(), json!(r.m));
    let frac = |m: &mut Map<String, Value>, key: &str, w: &Option<Weight>| {
        m.insert(
            format!("{key}_num"),
            w.as_ref().map_or(Value::Null, |w| big(w.numer())),
        );
        m.insert(
            format!("{key}_den"),
            w.as_ref().map_or(Value::Null, |w| big(w.denom())),
        );
    };
    frac(&mut m, "wei", &r.wei);
    frac(&mut m, "indep", &r.indep);
    m.insert("r_alpha".into(), json!(r.r_alpha));
    m.insert("alpha_just".into(), json!(r.alpha_just));
    m.insert("r_beta".into(), json!(r.r_beta));
    m.insert("beta_just".into(), json!(r.beta_just));
    m.insert("phi".into(), json!(r.phi));
    m.insert("omega".into(), json!(r.omega));
    m.insert("improved".into(), json!(r.improved));
    if !r.errors.is_empty() {
        m.insert("errors".into(), json!(r.errors));
    }
    if !r.violations.is_empty() {
        m.insert("violations".into(), json!(r.violations));
    }
    Value::Object(m)
}

pub fn render_json_lines(records: &[BoundRecord]) -> String {
    records
        .iter()
        .map(|r| record_json(r).to_string() + "\n")
        .collect()
}

fn exact_and_decimal(w: &Option<Weight>) -> String {
    match w {
        Some(w) => format!("{w} (≈ {:.3})", w.to_f64()),
        None => "-".into(),
    }
}

fn with_just(r: Option<usize>, j: Option<Justification>) -> String {
    match (r, j) {
        (Some(r), Some(j)) => format!("{r} {j}"),
        _ => "-".into(),
    }
}

pub fn render_table(records: &[BoundRecord]) -> String {
    let header = [
        "name",
        "n",
        "m",
        "W(G)",
        "indep bound",
        "r_alpha",
        "r_beta",
        "phi",
        "omega",
        "improved",
    ];
    let rows: Vec<[String; 10]> = records
        .iter()
        .map(|r| {
            [
                r.name.clone(),
                r.n.to_string(),
                r.m.to_string(),
                exact_and_decimal(&r.wei),
                exact_and_decimal(&r.indep),
                with_just(r.r_alpha, r.alpha_just),
                with_just(r.r_beta, r.beta_just),
                r.phi.map_or("-".into(), |v| v.to_string()),
                r.omega.map_or("-".into(), |v| v.to_string()),
                if r.improved {
                    "yes".into()
                } else {
                    "no".into()
                },
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    };
    line(&mut out, &header.map(String::from));
    for row in &rows {
        line(&mut out, row);
    }
    for r in records {
        for e in &r.errors {
            writeln!(out, "{}: error: {e}", r.name).unwrap();
        }
        for v in &r.violations {
            writeln!(out, "{}: VIOLATION: {v}", r.name).unwrap();
        }
    }
    out
}

/// Statistics over a seeded `G(n, p)` ensemble.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepStats {
    pub n: usize,
    pub p: f64,
    pub count: usize,
    pub seed: u64,
    pub improved: usize,
    pub improved_alpha: usize,
    pub improved_beta: usize,
    pub fraction: f64,
    pub violations: usize,
}

impl SweepStats {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

/// Runs bounds on `count` graphs `gnp n p (seed + i)` and counts how often a
/// greedy sequence beats `⌈W(G)⌉`.
pub fn sweep(n: usize, p: f64, count: usize, seed: u64, tie_break: TieBreak) -> Result<SweepStats> {
    let specs: Vec<Generator> = (0..count as u64)
        .map(|i| Generator::Gnp {
            n,
            p,
            seed: seed.wrapping_add(i),
        })
        .collect();
    let graphs = specs
        .iter()
        .map(|s| Ok((s.to_string(), generate(s)?)))
        .collect::<Result<Vec<_>>>()?;
    let opts = ReportOptions {
        tie_break,
        ..ReportOptions::default()
    };
    let records = run_report(&graphs, &opts);
    let beats = |r: &BoundRecord, k: Option<usize>| matches!((k, &r.wei), (Some(k), Some(w)) if k > w.ceil_usize());
    let improved = records.iter().filter(|r| r.improved).count();
    Ok(SweepStats {
        n,
        p,
        count,
        seed,
        improved,
        improved_alpha: records.iter().filter(|r| beats(r, r.r_alpha)).count(),
        improved_beta: records.iter().filter(|r| beats(r, r.r_beta)).count(),
        fraction: if count == 0 {
            0.0
        } else {
            improved as f64 / count as f64
        },
        violations: records.iter().filter(|r| !r.is_consistent()).count(),
    })
}
