//! Verification suites over the catalog, with deterministic reports.

use crate::bounds::{factorial_ratio_sweep, stirling_sandwich_check, verify_stima_chain};
use crate::catalog::catalog;
use crate::config::Budgets;
use crate::count::{
    alpha_factorization_check, gaschutz_independence_check, minimal_abelian_normal,
    nonabelian_factor_check, phi_enumerate, phi_mobius, verify_coro, verify_main_theorem,
    verify_minab,
};
use crate::error::{Error, Result};
use crate::expr::group_from_expr;
use crate::graph::{build_gamma, gamma_counts};
use crate::group::{min_gen_size, FiniteGroup, TieBreak};
use crate::planarity::{
    is_planar, kuratowski_oracle, kuratowski_witness, lr_is_planar, validate_witness, verify_pla,
    SimpleGraph, PLANARITY_SCHEMA,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use std::path::PathBuf;

pub const SUITE_SCHEMA_PREFIX: &str = "gengraph/verify";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Precondition(format!("unknown format '{s}' (text, json, csv)"))),
        }
    }
}

/// Everything a suite run depends on.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub budgets: Budgets,
    /// Worker threads; 0 lets the pool decide. Reports do not depend on it.
    pub workers: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    /// Overrides each suite's own group-order cap.
    pub order_cap: Option<usize>,
    /// Largest `a + b` for graph suites.
    pub ab_cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budgets: Budgets::default().with_vertex_cap(20_000),
            workers: 0,
            format: OutputFormat::Text,
            out: None,
            order_cap: None,
            ab_cap: 6,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.budgets.all_positive() || self.ab_cap == 0 || self.order_cap == Some(0) {
            return Err(Error::Precondition("budgets and caps must be positive".into()));
        }
        Ok(())
    }

    fn cap(&self, default: usize) -> usize {
        self.order_cap.unwrap_or(default)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    MainTheorem,
    Corollary,
    Minab,
    AlphaFactorization,
    StimaChain,
    PlanarityClassification,
    Stirling,
    DualOracle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::DualOracle,
        Suite::MainTheorem,
        Suite::Corollary,
        Suite::Minab,
        Suite::AlphaFactorization,
        Suite::StimaChain,
        Suite::PlanarityClassification,
        Suite::Stirling,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::Corollary => "corollary",
            Suite::Minab => "minab",
            Suite::AlphaFactorization => "alpha-factorization",
            Suite::StimaChain => "stima-chain",
            Suite::PlanarityClassification => "planarity-classification",
            Suite::Stirling => "stirling",
            Suite::DualOracle => "dual-oracle",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::EACH
            .iter()
            .chain(&[Suite::All])
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

/// A named list of homogeneous rows.
#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    pub schema: String,
    pub rows: Vec<Value>,
}

impl Table {
    pub fn new<T: Serialize>(name: &str, rows: &[T]) -> Self {
        Table {
            name: name.to_string(),
            schema: format!("{SUITE_SCHEMA_PREFIX}/{name}/v1"),
            rows: rows.iter().map(|r| serde_json::to_value(r).expect("rows serialize")).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    pub passed: bool,
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
    pub notes: Vec<String>,
    pub tables: Vec<Table>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: String,
    pub budgets: Budgets,
    pub ab_cap: usize,
    pub order_cap: Option<usize>,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

fn report(suite: Suite, tables: Vec<Table>, pass_of: impl Fn(&Value) -> Option<bool>, notes: Vec<String>) -> SuiteReport {
    let mut checked = 0;
    let mut failed = 0;
    let mut skipped = 0;
    for t in &tables {
        for r in &t.rows {
            match pass_of(r) {
                Some(true) => checked += 1,
                Some(false) => {
                    checked += 1;
                    failed += 1
                }
                None => skipped += 1,
            }
        }
    }
    SuiteReport {
        schema: format!("{SUITE_SCHEMA_PREFIX}/{}/v1", suite.name()),
        suite: suite.name().to_string(),
        passed: failed == 0 && checked > 0,
        checked,
        failed,
        skipped,
        notes,
        tables,
    }
}

/// Reads the verdict of a row from the first boolean field among
/// `passed`, `holds`, `agree`.
fn row_verdict(r: &Value) -> Option<bool> {
    if r.get("skipped").and_then(Value::as_bool) == Some(true) || r.get("verdict").and_then(Value::as_str) == Some("skipped") {
        return None;
    }
    ["passed", "holds", "agree"]
        .iter()
        .find_map(|k| r.get(*k).and_then(Value::as_bool))
}

fn groups_up_to(cap: usize) -> Result<Vec<FiniteGroup>> {
    Ok(catalog()?.into_iter().filter(|g| g.order() <= cap).collect())
}

#[derive(Serialize)]
struct DualRow {
    group: String,
    d: usize,
    enumerate: String,
    mobius: String,
    agree: bool,
}

fn dual_oracle(cfg: &RunConfig) -> Result<SuiteReport> {
    let groups = groups_up_to(cfg.cap(24))?;
    let jobs: Vec<(usize, usize)> = (0..groups.len()).flat_map(|i| (1..=4).map(move |d| (i, d))).collect();
    let rows: Vec<Result<DualRow>> = jobs
        .par_iter()
        .map(|&(i, d)| {
            let g = &groups[i];
            let e = phi_enumerate(g, d, cfg.budgets.steps)?;
            let m = phi_mobius(g, d, cfg.budgets.subgroup_order_cap)?;
            Ok(DualRow {
                group: g.name().into(),
                d,
                enumerate: e.to_string(),
                mobius: m.to_string(),
                agree: e == m,
            })
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(report(Suite::DualOracle, vec![Table::new("dual-oracle", &rows)], row_verdict, vec![]))
}

fn main_theorem(cfg: &RunConfig) -> Result<SuiteReport> {
    let rows = verify_main_theorem(&groups_up_to(cfg.cap(24))?, &cfg.budgets)?;
    Ok(report(Suite::MainTheorem, vec![Table::new("main-theorem", &rows)], row_verdict, vec![]))
}

fn corollary(cfg: &RunConfig) -> Result<SuiteReport> {
    let rows = verify_coro(&groups_up_to(cfg.cap(24))?, &cfg.budgets)?;
    Ok(report(Suite::Corollary, vec![Table::new("corollary", &rows)], row_verdict, vec![]))
}

fn minab(cfg: &RunConfig) -> Result<SuiteReport> {
    let groups = groups_up_to(cfg.cap(16))?;
    let mut pairs = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        for n in minimal_abelian_normal(g, &cfg.budgets)? {
            pairs.push((i, n));
        }
    }
    let minab_rows: Vec<_> = pairs
        .par_iter()
        .map(|(i, n)| {
            let g = &groups[*i];
            verify_minab(g, n, min_gen_size(g, cfg.budgets.steps)?, &cfg.budgets)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, usize)> = (0..pairs.len()).flat_map(|p| [0, 1].map(|e| (p, e))).collect();
    let gas_rows: Vec<_> = jobs
        .par_iter()
        .map(|&(p, extra)| {
            let (i, n) = &pairs[p];
            let g = &groups[*i];
            let k = min_gen_size(g, cfg.budgets.steps)? + extra;
            gaschutz_independence_check(g, n, k, &cfg.budgets)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<_>>()?;
    Ok(report(
        Suite::Minab,
        vec![Table::new("minab", &minab_rows), Table::new("gaschutz", &gas_rows)],
        row_verdict,
        vec![],
    ))
}

/// Groups whose chief-series factorization is checked.
pub const FACTORIZATION_GROUPS: [&str; 9] = ["C6", "C2xC2", "S3", "D4", "Q8", "C4xC2", "D6", "A4", "S4"];

#[derive(Serialize)]
struct TieRow {
    group: String,
    tie_break: &'static str,
    alpha: String,
    product: String,
    factors: usize,
    passed: bool,
}

fn alpha_factorization(cfg: &RunConfig) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for name in FACTORIZATION_GROUPS {
        let g = group_from_expr(name)?;
        let d = min_gen_size(&g, cfg.budgets.steps)?;
        for (tie, label) in [(TieBreak::Smallest, "smallest"), (TieBreak::Largest, "largest")] {
            let r = alpha_factorization_check(&g, d, tie, &cfg.budgets)?;
            rows.push(TieRow {
                group: r.group.clone(),
                tie_break: label,
                alpha: r.alpha.exact.clone(),
                product: r.product.exact.clone(),
                factors: r.factors.len(),
                passed: r.passed,
            });
        }
    }
    let a5 = group_from_expr("A5")?;
    let budgets = cfg.budgets.clone().with_subgroup_cap(cfg.budgets.subgroup_order_cap.max(60));
    let nonabelian = nonabelian_factor_check(&a5, 2, &budgets)?;
    Ok(report(
        Suite::AlphaFactorization,
        vec![Table::new("alpha-factorization", &rows), Table::new("nonabelian-factor", &nonabelian)],
        row_verdict,
        vec![],
    ))
}

#[derive(Serialize)]
struct AccountingRow {
    group: String,
    a: usize,
    b: usize,
    nu: String,
    eta: String,
    l: String,
    skipped: bool,
    passed: bool,
}

#[derive(Serialize)]
struct ChainRow {
    group: String,
    a: usize,
    b: usize,
    nu: String,
    eta: String,
    phi: String,
    components: Option<usize>,
    failed_links: Vec<String>,
    passed: bool,
}

/// `(group index, a, b)` with `1 <= a <= b`, `d(G) <= a + b <= ab_cap`.
fn cells(groups: &[FiniteGroup], ab_cap: usize, budgets: &Budgets) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        let d = min_gen_size(g, budgets.steps)?;
        for s in d.max(2)..=ab_cap {
            for a in 1..=s / 2 {
                out.push((i, a, s - a));
            }
        }
    }
    Ok(out)
}

/// Counts from a materialized graph against the closed forms.
fn accounting(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<AccountingRow> {
    let c = gamma_counts(g, a, b, budgets)?;
    let mut row = AccountingRow {
        group: g.name().into(),
        a,
        b,
        nu: c.nu.to_string(),
        eta: c.eta.to_string(),
        l: c.loops.to_string(),
        skipped: true,
        passed: true,
    };
    let graph = match build_gamma(g, a, b, budgets) {
        Ok(gr) => gr,
        Err(e) if e.is_budget() => return Ok(row),
        Err(e) => return Err(e),
    };
    row.skipped = false;
    let n = g.order() as u128;
    let s = budgets.steps;
    let phi_d = phi_enumerate(g, a + b, s)?;
    let (nu, eta, l) = (graph.nu as u128, graph.eta() as u128, graph.loop_count() as u128);
    let closed = if a != b {
        nu == n.pow(a as u32) + n.pow(b as u32) && eta == phi_d && l == 0
    } else {
        nu == n.pow(a as u32) && 2 * eta + l == phi_d && l == phi_enumerate(g, a, s)?
    };
    row.passed = closed && 4 * eta >= phi_d && graph.counts() == c;
    Ok(row)
}

fn stima_chain(cfg: &RunConfig) -> Result<SuiteReport> {
    let groups = groups_up_to(cfg.cap(24))?;
    let jobs = cells(&groups, cfg.ab_cap, &cfg.budgets)?;
    let chain: Vec<ChainRow> = jobs
        .par_iter()
        .map(|&(i, a, b)| {
            let r = verify_stima_chain(&groups[i], a, b, &cfg.budgets)?;
            Ok(ChainRow {
                group: r.group,
                a,
                b,
                nu: r.nu,
                eta: r.eta,
                phi: r.phi,
                components: r.components,
                failed_links: r.links.iter().filter(|l| !l.holds).map(|l| format!("{}: {}", l.chain, l.step)).collect(),
                passed: r.passed,
            })
        })
        .collect::<Vec<Result<_>>>()
        .into_iter()
        .collect::<Result<_>>()?;
    let acc: Vec<AccountingRow> = jobs
        .par_iter()
        .map(|&(i, a, b)| accounting(&groups[i], a, b, &cfg.budgets))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<_>>()?;
    Ok(report(
        Suite::StimaChain,
        vec![Table::new("stima-chain", &chain), Table::new("accounting", &acc)],
        row_verdict,
        vec![],
    ))
}

#[derive(Serialize)]
struct OracleRow {
    group: String,
    a: usize,
    b: usize,
    nu: usize,
    planar: bool,
    method: &'static str,
    oracle_planar: bool,
    /// left-right test without the edge-count shortcuts
    lr_planar: bool,
    /// Kuratowski subdivision extracted from the full test, re-validated
    witness_valid: Option<bool>,
    agree: bool,
}

/// Catalog generating graphs small enough for the exhaustive oracle.
fn oracle_rows(groups: &[FiniteGroup], ab_cap: usize, budgets: &Budgets) -> Result<Vec<OracleRow>> {
    let mut rows = Vec::new();
    for (i, a, b) in cells(groups, ab_cap, budgets)? {
        let g = &groups[i];
        if gamma_counts(g, a, b, budgets)?.nu > 12 {
            continue;
        }
        let simple = SimpleGraph::from_gamma(&build_gamma(g, a, b, budgets)?);
        let v = is_planar(&simple);
        let oracle = !kuratowski_oracle(&simple)?;
        let lr = lr_is_planar(&simple);
        let witness_valid = (!lr).then(|| kuratowski_witness(&simple).is_some_and(|w| validate_witness(&simple, &w).is_ok()));
        rows.push(OracleRow {
            group: g.name().into(),
            a,
            b,
            nu: simple.n,
            planar: v.planar,
            method: v.method.as_str(),
            oracle_planar: oracle,
            lr_planar: lr,
            witness_valid,
            agree: v.planar == oracle && lr == oracle && witness_valid != Some(false),
        });
    }
    Ok(rows)
}

fn planarity(cfg: &RunConfig) -> Result<SuiteReport> {
    let cap = cfg.cap(16);
    let groups = groups_up_to(cap)?;
    let pla = verify_pla(&groups, cap, cfg.ab_cap, 10, &cfg.budgets)?;
    let mut matrix = Table::new("planarity-matrix", &pla.cells);
    matrix.schema = PLANARITY_SCHEMA.to_string();
    let oracle = oracle_rows(&groups, cfg.ab_cap, &cfg.budgets)?;
    let notes = vec![format!(
        "{} cells, {} mismatches, {} skipped over the vertex cap",
        pla.cells.len(),
        pla.mismatches,
        pla.skipped
    )];
    Ok(report(
        Suite::PlanarityClassification,
        vec![matrix, Table::new("oracle", &oracle)],
        row_verdict,
        notes,
    ))
}

#[derive(Serialize)]
struct RatioRow {
    max_n: u64,
    pairs: u64,
    failures: Vec<(u64, u64)>,
    passed: bool,
}

fn stirling(_cfg: &RunConfig) -> Result<SuiteReport> {
    let sandwich: Vec<_> = (1..=170).map(stirling_sandwich_check).collect();
    let failures = factorial_ratio_sweep(170);
    let ratio = RatioRow {
        max_n: 170,
        pairs: 170 * 169 / 2,
        passed: failures.is_empty(),
        failures,
    };
    Ok(report(
        Suite::Stirling,
        vec![Table::new("stirling", &sandwich), Table::new("factorial-ratio", &[ratio])],
        row_verdict,
        vec![],
    ))
}

fn run_one(suite: Suite, cfg: &RunConfig) -> Result<SuiteReport> {
    match suite {
        Suite::DualOracle => dual_oracle(cfg),
        Suite::MainTheorem => main_theorem(cfg),
        Suite::Corollary => corollary(cfg),
        Suite::Minab => minab(cfg),
        Suite::AlphaFactorization => alpha_factorization(cfg),
        Suite::StimaChain => stima_chain(cfg),
        Suite::PlanarityClassification => planarity(cfg),
        Suite::Stirling => stirling(cfg),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// Runs a suite (or all of them) on a pool of `cfg.workers` threads.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let list: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let suites = pool.install(|| list.iter().map(|&s| run_one(s, cfg)).collect::<Result<Vec<_>>>())?;
    Ok(VerifyReport {
        schema: format!("{SUITE_SCHEMA_PREFIX}/v1"),
        budgets: cfg.budgets.clone(),
        ab_cap: cfg.ab_cap,
        order_cap: cfg.order_cap,
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Object(m) if m.contains_key("exact") => m["exact"].as_str().unwrap_or_default().to_string(),
        other => other.to_string(),
    }
}

/// Renders a report; output depends only on the report contents.
pub fn render(r: &VerifyReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for suite in &r.suites {
                s.push_str(&format!(
                    "{}: {} ({} checked, {} failed, {} skipped)\n",
                    suite.suite,
                    if suite.passed { "PASS" } else { "FAIL" },
                    suite.checked,
                    suite.failed,
                    suite.skipped
                ));
                for n in &suite.notes {
                    s.push_str(&format!("  note: {n}\n"));
                }
                for t in &suite.tables {
                    for row in t.rows.iter().filter(|x| row_verdict(x) == Some(false)) {
                        s.push_str(&format!("  failed [{}] {}\n", t.name, row));
                    }
                }
            }
            s.push_str(if r.passed { "overall: PASS\n" } else { "overall: FAIL\n" });
            s
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            for suite in &r.suites {
                for t in &suite.tables {
                    out.push_str(&format!("# {} {}\n", t.schema, t.name));
                    out.push_str(&table_csv(t));
                }
            }
            out
        }
    }
}

/// One CSV block for a table; columns follow the first row.
pub fn table_csv(t: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let Some(Value::Object(first)) = t.rows.first() else {
        return String::new();
    };
    let cols: Vec<&String> = first.keys().collect();
    w.write_record(cols.iter().map(|c| c.as_str())).expect("in-memory write");
    for r in &t.rows {
        w.write_record(cols.iter().map(|c| cell_text(r.get(c.as_str()).unwrap_or(&Value::Null))))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain(&[Suite::All]) {
            assert_eq!(Suite::parse(s.name()).unwrap(), *s);
        }
        assert!(Suite::parse("nope").is_err());
    }

    #[test]
    fn small_runs_are_worker_independent() {
        let mut cfg = RunConfig {
            order_cap: Some(8),
            ab_cap: 3,
            ..RunConfig::default()
        };
        cfg.workers = 1;
        let one = run_suite(Suite::DualOracle, &cfg).unwrap();
        cfg.workers = 4;
        let four = run_suite(Suite::DualOracle, &cfg).unwrap();
        for f in [OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv] {
            assert_eq!(render(&one, f), render(&four, f));
        }
        assert!(one.passed);
    }
}
