use clap::{Args, Parser, Subcommand};
use gengraph::bounds::bounds_for;
use gengraph::catalog::catalog;
use gengraph::count::{gen_stats, phi_enumerate_parallel, phi_mobius};
use gengraph::expr::group_from_expr;
use gengraph::graph::{adjacency_json_string, build_gamma, edge_list_string};
use gengraph::group::{min_gen_size, FiniteGroup};
use gengraph::planarity::{expected_planarity, is_planar, SimpleGraph};
use gengraph::rational::{rat_f64, rat_string};
use gengraph::suites::{render, run_suite, table_csv, OutputFormat, RunConfig, Suite, Table};
use gengraph::{Budgets, Error};
use serde::Serialize;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

/// Generating graphs of finite groups: counts, bounds, planarity.
#[derive(Parser)]
#[command(name = "gengraph", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Closure steps allowed per counting call.
    #[arg(long, global = true)]
    budget_steps: Option<u64>,
    /// Largest vertex count of a materialized graph.
    #[arg(long, global = true)]
    vertex_cap: Option<usize>,
    /// Largest group order a suite visits.
    #[arg(long, global = true)]
    order_cap: Option<usize>,
    /// Largest a + b a suite visits.
    #[arg(long, global = true)]
    ab_cap: Option<usize>,
    /// Worker threads (default: $GENGRAPH_WORKERS, else all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number of generating d-tuples.
    Phi {
        group: String,
        d: usize,
        /// Also compute it by Möbius inversion and compare.
        #[arg(long)]
        mobius: bool,
    },
    /// φ, P_G(d) and α(G,d).
    Stats { group: String, d: usize },
    /// Materialize Γ_{a,b}(G): edge list (text) or adjacency JSON.
    Graph { group: String, a: usize, b: usize },
    /// Genus, thickness and crossing-number lower bounds of Γ_{a,b}(G).
    Bounds { group: String, a: usize, b: usize },
    /// Decide planarity of Γ_{a,b}(G).
    Planarity { group: String, a: usize, b: usize },
    /// Run a verification suite.
    Verify { suite: String },
    /// List the bundled catalog.
    Catalog,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn config(o: &Opts) -> Result<RunConfig, Failure> {
    let mut cfg = RunConfig::default();
    if let Some(s) = o.budget_steps {
        cfg.budgets.steps = s;
    }
    if let Some(v) = o.vertex_cap {
        cfg.budgets.vertex_cap = v;
    }
    cfg.order_cap = o.order_cap;
    if let Some(c) = o.ab_cap {
        cfg.ab_cap = c;
    }
    cfg.workers = match o.workers {
        Some(w) => w,
        None => match std::env::var("GENGRAPH_WORKERS") {
            Ok(s) => s
                .parse()
                .map_err(|_| Failure::Usage(format!("GENGRAPH_WORKERS='{s}' is not a number")))?,
            Err(_) => 0,
        },
    };
    cfg.format = o.format.parse()?;
    cfg.out = o.out.clone();
    cfg.validate()?;
    Ok(cfg)
}

/// One-row report in the requested format.
fn single<T: Serialize>(name: &str, row: &T, text: String, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => text,
        OutputFormat::Json => {
            let mut v = serde_json::to_value(row).expect("serializable");
            v.as_object_mut()
                .expect("object rows")
                .insert("schema".into(), json!(format!("gengraph/{name}/v1")));
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        OutputFormat::Csv => table_csv(&Table::new(name, std::slice::from_ref(row))),
    }
}

fn rat(q: &num_rational::BigRational) -> serde_json::Value {
    json!({ "exact": rat_string(q), "approx": rat_f64(q) })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = config(&cli.opts)?;
    let b: &Budgets = &cfg.budgets;
    let group = |s: &str| -> Result<FiniteGroup, Failure> { Ok(group_from_expr(s)?) };
    let out = match &cli.cmd {
        Cmd::Phi { group: e, d, mobius } => {
            let g = group(e)?;
            let phi = phi_enumerate_parallel(&g, *d, b.steps)?;
            let m = if *mobius { Some(phi_mobius(&g, *d, b.subgroup_order_cap)?) } else { None };
            if m.is_some_and(|m| m != phi) {
                return Err(Failure::Verification(format!("enumeration {phi} != Möbius {}", m.unwrap())));
            }
            let row = json!({ "group": g.name(), "d": d, "phi": phi.to_string() });
            single("phi", &row, format!("{phi}\n"), cfg.format)
        }
        Cmd::Stats { group: e, d } => {
            let g = group(e)?;
            let s = gen_stats(&g, *d, b)?;
            let row = json!({
                "group": s.group, "order": s.order, "d": s.d, "phi": s.phi.to_string(),
                "prob": rat(&s.prob), "alpha": rat(&s.alpha),
            });
            let text = format!(
                "group {} order {} d {}\nphi {}\nP {} (~{:.6})\nalpha {} (~{:.6})\n",
                s.group,
                s.order,
                s.d,
                s.phi,
                rat_string(&s.prob),
                rat_f64(&s.prob),
                rat_string(&s.alpha),
                rat_f64(&s.alpha)
            );
            single("stats", &row, text, cfg.format)
        }
        Cmd::Graph { group: e, a, b: bb } => {
            let g = group(e)?;
            let graph = build_gamma(&g, *a, *bb, b)?;
            match cfg.format {
                OutputFormat::Text => edge_list_string(&graph),
                OutputFormat::Json => adjacency_json_string(&graph),
                OutputFormat::Csv => return Err(Failure::Usage("graph supports --format text or json".into())),
            }
        }
        Cmd::Bounds { group: e, a, b: bb } => {
            let g = group(e)?;
            let r = bounds_for(&g, *a, *bb, b)?;
            let text = format!(
                "nu {} eta {} loops {}\ngenus >= {} (ceil {})\nthickness >= {}\ncrossing >= {}{}\n",
                r.nu,
                r.eta,
                r.loop_count,
                r.genus_lb.exact,
                r.genus_ceiling,
                r.thickness_lb.as_ref().map_or("n/a".to_string(), |t| t.exact.clone()),
                r.crossing_lb.exact,
                if r.crossing_negative { " (negative; clamped to 0)" } else { "" }
            );
            single("bounds", &r, text, cfg.format)
        }
        Cmd::Planarity { group: e, a, b: bb } => {
            let g = group(e)?;
            let graph = build_gamma(&g, *a, *bb, b)?;
            let v = is_planar(&SimpleGraph::from_gamma(&graph));
            let expected = if !g.is_trivial() && *a >= 1 && a <= bb && a + bb >= min_gen_size(&g, b.steps)? {
                Some(expected_planarity(&g, *a, *bb, b)?)
            } else {
                None
            };
            let word = if v.planar { "planar" } else { "non-planar" };
            let mut text = format!("{word}, method={}\n", v.method.as_str());
            if let Some(w) = &v.witness {
                text.push_str(&format!("witness {:?} on branch vertices {:?}\n", w.kind, w.branch));
            }
            let row = json!({
                "group": g.name(), "a": a, "b": bb, "nu": graph.nu, "eta": graph.eta(),
                "l": graph.loop_count(), "verdict": word, "method": v.method.as_str(),
                "expected": expected.map(|p| if p { "planar" } else { "non-planar" }),
                "witness": v.witness,
            });
            single("planarity", &row, text, cfg.format)
        }
        Cmd::Verify { suite } => {
            let s = Suite::parse(suite)?;
            let r = run_suite(s, &cfg)?;
            let text = render(&r, cfg.format);
            emit(&cfg, &text)?;
            if !r.passed {
                return Err(Failure::Verification(format!("suite {suite} failed")));
            }
            return Ok(());
        }
        Cmd::Catalog => {
            let cat = catalog()?;
            let rows: Vec<_> = cat
                .iter()
                .map(|g| {
                    let d = min_gen_size(g, b.steps).unwrap_or(0);
                    json!({ "name": g.name(), "order": g.order(), "abelian": g.is_abelian(), "d": d })
                })
                .collect();
            match cfg.format {
                OutputFormat::Text => rows
                    .iter()
                    .map(|r| format!("{} {} d={}\n", r["name"].as_str().unwrap(), r["order"], r["d"]))
                    .collect(),
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&json!({ "schema": "gengraph/catalog/v1", "groups": rows })).unwrap() + "\n"
                }
                OutputFormat::Csv => table_csv(&Table::new("catalog", &rows)),
            }
        }
    };
    emit(&cfg, &out)
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), Failure> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
