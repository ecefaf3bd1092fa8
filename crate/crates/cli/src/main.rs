//! `gtmod`: build Gelfand-Tsetlin modules, run verification suites and
//! analyze submodule structure, with JSON reports.

mod input;
mod verify;

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;
use serde_json::{json, Value};

use gtmod::action::{Family, GenLabel, GtModule, ModVec};
use gtmod::structure::{
    basis_i_window, basis_ik_window, basis_n_window, irreducibility_verdict, omega_k_plus,
    omega_plus, ReachGraph, Window,
};
use gtmod::tableau::{classify, Kind, Shift, TabKey};

#[derive(Debug)]
pub struct CliError {
    kind: &'static str,
    message: String,
    code: u8,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError {
            kind: "InvalidInput",
            message: message.into(),
            code: 2,
        }
    }
}

impl From<gtmod::Error> for CliError {
    fn from(e: gtmod::Error) -> CliError {
        let kind = match &e {
            gtmod::Error::DivisionByZero => "DivisionByZero",
            gtmod::Error::DivisionByZeroFunction => "DivisionByZeroFunction",
            gtmod::Error::DegenerateFactor => "DegenerateFactor",
            gtmod::Error::PoleAtZero => "PoleAtZero",
            gtmod::Error::NotStandard(_) => "NotStandard",
            gtmod::Error::FamilyMismatch { .. } => "FamilyMismatch",
            gtmod::Error::HypothesisViolated(_) => "HypothesisViolated",
            gtmod::Error::InvalidBaseVector(_) => "InvalidBaseVector",
            gtmod::Error::InvalidShift(_) => "InvalidShift",
            gtmod::Error::InvalidGenerator(_) => "InvalidGenerator",
            gtmod::Error::InvalidWindow(_) => "InvalidWindow",
            gtmod::Error::NotSeparable(_) => "NotSeparable",
            gtmod::Error::Parse(_) => "Parse",
        };
        CliError {
            kind,
            message: e.to_string(),
            code: 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "gtmod", version, about = "Exact Gelfand-Tsetlin modules of gl(n)")]
struct Cli {
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Standard tableaux of a finite-dimensional module.
    Finite(FiniteArgs),
    /// Apply generators to tableaux of a generic module.
    Generic(ActArgs),
    /// Apply generators to tableaux of a 1-singular module.
    Singular(ActArgs),
    /// Run the invariant suites on a window.
    Verify(VerifyArgs),
    /// Omega sets, window bases and reachability components.
    Structure(StructureArgs),
    /// Irreducibility verdict with an audited witness.
    Verdict(WindowedArgs),
}

#[derive(Args)]
struct FiniteArgs {
    /// Tableau top row, e.g. `2,0,-2`.
    #[arg(long, allow_hyphen_values = true)]
    top_row: Option<String>,
    /// Highest weight, e.g. `2,1,0`.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Include the action of every E_rs with |r-s| <= 1 on the basis.
    #[arg(long)]
    actions: bool,
}

#[derive(Args)]
struct BaseArgs {
    /// Rows top-first, e.g. `1/2,1/3,1/5|1/7,1/7|3/11`.
    #[arg(long, allow_hyphen_values = true)]
    rows: Option<String>,
    /// Anchors, used with --pattern, e.g. `1/2,1/3,1/5,1/7`.
    #[arg(long, allow_hyphen_values = true)]
    anchors: Option<String>,
    /// Anchor indices with optional offsets, e.g. `0,1,2|3,3|3+1`.
    #[arg(long)]
    pattern: Option<String>,
    /// Base vector JSON, inline or a file path.
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    n: Option<usize>,
}

impl BaseArgs {
    fn module(&self) -> Result<GtModule, CliError> {
        let v = match (&self.rows, &self.anchors, &self.pattern, &self.base) {
            (Some(rows), None, None, None) => input::parse_rows(rows)?,
            (None, Some(a), Some(p), None) => input::parse_pattern(a, p)?,
            (None, None, None, Some(b)) => input::parse_base_json(b)?,
            _ => {
                return Err(CliError::input(
                    "give exactly one of --rows, --anchors with --pattern, or --base",
                ))
            }
        };
        if let Some(n) = self.n {
            if n != v.n() {
                return Err(CliError::input(format!("--n {n} but the base vector has n = {}", v.n())));
            }
        }
        Ok(GtModule::new(v)?)
    }
}

#[derive(Args)]
struct WindowArgs {
    #[arg(long, default_value_t = 2)]
    radius: i64,
    /// Window center shift, e.g. `0,0|0`; defaults to zero.
    #[arg(long, allow_hyphen_values = true)]
    center: Option<String>,
}

impl WindowArgs {
    fn window(&self, n: usize) -> Result<Window, CliError> {
        let center = match &self.center {
            Some(c) => input::parse_shift(c)?,
            None => Shift::zero(n),
        };
        if center.n() != n {
            return Err(CliError::input("window center has the wrong size"));
        }
        Ok(Window::new(center, self.radius)?)
    }
}

#[derive(Args)]
struct ActArgs {
    #[command(flatten)]
    base: BaseArgs,
    /// Generator such as `E12`, `E13`, `c32` or `C22@1,0|0`; repeatable.
    /// Defaults to every E_rs with |r-s| <= 1.
    #[arg(long = "gen")]
    gens: Vec<String>,
    /// Tableau such as `T:0,0|0` or `DT:1,0|0`; repeatable. Defaults to Tab(0).
    #[arg(long = "key", allow_hyphen_values = true)]
    keys: Vec<String>,
}

#[derive(Args)]
struct WindowedArgs {
    #[command(flatten)]
    base: BaseArgs,
    #[command(flatten)]
    window: WindowArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    base: BaseArgs,
    #[command(flatten)]
    window: WindowArgs,
    /// Finite module from a top row instead of a base vector.
    #[arg(long, allow_hyphen_values = true)]
    top_row: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random vectors for the sampled properties.
    #[arg(long, default_value_t = 20)]
    samples: usize,
}

#[derive(Args)]
struct StructureArgs {
    #[command(flatten)]
    base: BaseArgs,
    #[command(flatten)]
    window: WindowArgs,
    /// Tableau whose bases are reported; defaults to Tab(center).
    #[arg(long, allow_hyphen_values = true)]
    key: Option<String>,
}

fn low_generators(n: usize) -> Vec<GenLabel> {
    let mut out = Vec::new();
    for r in 1..=n {
        for s in 1..=n {
            if r.abs_diff(s) <= 1 {
                out.push(GenLabel::e(r, s));
            }
        }
    }
    out
}

/// Parses and canonicalizes a tableau label against the module.
fn parse_key(m: &GtModule, s: &str) -> Result<TabKey, CliError> {
    let raw: TabKey = s.parse()?;
    if raw.shift.n() != m.n() {
        return Err(CliError::input(format!("tableau `{s}` has the wrong size")));
    }
    let kind = if raw.is_derivative() { Kind::Derivative } else { Kind::Regular };
    if kind == Kind::Derivative && m.pair().is_none() {
        return Err(CliError::input("derivative tableaux need a 1-singular module"));
    }
    let c = m.canonical(kind, &raw.shift);
    if c.sign == 0 {
        return Err(CliError::input(format!("`{s}` is the zero vector")));
    }
    Ok(c.key)
}

fn module_info(m: &GtModule) -> Value {
    json!({
        "n": m.n(),
        "family": m.family().name(),
        "classification": classify(m.base()),
        "base": m.base(),
    })
}

fn cmd_finite(args: &FiniteArgs) -> Result<(Value, bool), CliError> {
    let v = input::finite_base(args.top_row.as_deref(), args.weight.as_deref())?;
    if let Some(n) = args.n {
        if n != v.n() {
            return Err(CliError::input(format!("--n {n} but the top row has {} entries", v.n())));
        }
    }
    let m = GtModule::new(v)?;
    let basis = m.finite_basis()?;
    let top: Vec<String> = (1..=m.n()).map(|s| m.base().entry(m.n(), s).to_string()).collect();
    let mut report = json!({
        "command": "finite",
        "n": m.n(),
        "top_row": top,
        "dimension": basis.len(),
        "basis": basis,
    });
    if args.actions {
        let mut table = Vec::new();
        for key in &basis {
            for g in low_generators(m.n()) {
                table.push(json!({"gen": g.to_string(), "key": key, "result": m.act(&g, key)?}));
            }
        }
        report["actions"] = Value::Array(table);
    }
    Ok((report, true))
}

fn cmd_act(args: &ActArgs, family: &str) -> Result<(Value, bool), CliError> {
    let m = args.base.module()?;
    if m.family().name() != family {
        return Err(gtmod::Error::FamilyMismatch {
            expected: family.into(),
            found: m.family().name().into(),
        }
        .into());
    }
    let gens: Vec<GenLabel> = if args.gens.is_empty() {
        low_generators(m.n())
    } else {
        args.gens
            .iter()
            .map(|g| {
                let g: GenLabel = g.parse()?;
                g.validate(m.n())?;
                Ok(g)
            })
            .collect::<Result<_, CliError>>()?
    };
    let keys: Vec<TabKey> = if args.keys.is_empty() {
        vec![m.tab(&Shift::zero(m.n()))]
    } else {
        args.keys.iter().map(|k| parse_key(&m, k)).collect::<Result<_, _>>()?
    };
    let mut results = Vec::new();
    for key in &keys {
        for g in &gens {
            let out = m.apply(g, &ModVec::basis(key.clone()))?;
            results.push(json!({"gen": g.to_string(), "key": key, "result": out}));
        }
    }
    Ok((json!({"command": family, "module": module_info(&m), "applications": results}), true))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(Value, bool), CliError> {
    let m = if args.top_row.is_some() || args.weight.is_some() {
        GtModule::new(input::finite_base(args.top_row.as_deref(), args.weight.as_deref())?)?
    } else {
        args.base.module()?
    };
    let win = args.window.window(m.n())?;
    let report = verify::run(&m, &win, args.seed, args.samples)?;
    let passed = report.passed;
    Ok((
        json!({
            "command": "verify",
            "module": module_info(&m),
            "window": win,
            "seed": args.seed,
            "report": report,
        }),
        passed,
    ))
}

#[derive(Serialize)]
struct Component {
    size: usize,
    interior: usize,
    keys: Vec<TabKey>,
}

fn cmd_structure(args: &StructureArgs) -> Result<(Value, bool), CliError> {
    let m = args.base.module()?;
    let win = args.window.window(m.n())?;
    let key = match &args.key {
        Some(k) => parse_key(&m, k)?,
        None => m.tab(&win.center),
    };
    if !win.contains(&key) {
        return Err(CliError::input(format!("{key} is outside the window")));
    }
    let v = m.base();
    let mut report = json!({
        "command": "structure",
        "module": module_info(&m),
        "window": win,
        "key": key,
        "omega_plus": omega_plus(&key, v),
    });
    match m.family() {
        Family::Generic => {
            report["basis_n"] = json!(basis_n_window(&key.shift, &m, &win)?);
            report["basis_i"] = json!(basis_i_window(&key.shift, &m, &win)?);
        }
        Family::Singular(p) => {
            report["omega_k_plus"] = json!(omega_k_plus(&key, v, p.k));
            report["basis_ik"] = match basis_ik_window(&key, &m, &win) {
                Ok(b) => json!(b),
                Err(e) => {
                    let message = e.to_string();
                    json!({"error": CliError::from(e).kind, "message": message})
                }
            };
        }
        Family::Finite => {
            return Err(gtmod::Error::FamilyMismatch {
                expected: "generic or singular".into(),
                found: "finite".into(),
            }
            .into())
        }
    }
    let keys = win.keys(&m);
    let index: BTreeMap<&TabKey, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut graph = DiGraph::<usize, ()>::new();
    let nodes: Vec<_> = (0..keys.len()).map(|i| graph.add_node(i)).collect();
    let mut reach = ReachGraph::new(&m, &win);
    for (i, k) in keys.iter().enumerate() {
        for t in reach.successors(k)? {
            graph.add_edge(nodes[i], nodes[index[t]], ());
        }
    }
    let mut comps: Vec<Component> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut ks: Vec<TabKey> = c.iter().map(|n| keys[graph[*n]].clone()).collect();
            ks.sort();
            Component {
                size: ks.len(),
                interior: ks.iter().filter(|k| win.in_interior(k)).count(),
                keys: ks,
            }
        })
        .collect();
    comps.sort_by(|a, b| a.keys.cmp(&b.keys));
    report["closure_size"] = json!(reach.closure(&key)?.len());
    report["window_keys"] = json!(keys.len());
    report["components"] = json!(comps);
    Ok((report, true))
}

fn cmd_verdict(args: &WindowedArgs) -> Result<(Value, bool), CliError> {
    let m = args.base.module()?;
    let win = args.window.window(m.n())?;
    let verdict = irreducibility_verdict(&m, &win)?;
    Ok((
        json!({"command": "verdict", "module": module_info(&m), "window": win, "verdict": verdict}),
        true,
    ))
}

fn emit(value: &Value, path: Option<&str>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    match path {
        Some(p) => fs::write(p, text + "\n")
            .map_err(|e| CliError::input(format!("cannot write `{p}`: {e}"))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn error_json(e: &CliError) -> Value {
    json!({"error": {"kind": e.kind, "message": e.message}})
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let err = CliError {
                kind: "Usage",
                message: e.to_string().trim().to_string(),
                code: 2,
            };
            println!("{}", serde_json::to_string_pretty(&error_json(&err)).unwrap());
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Finite(a) => cmd_finite(a),
        Command::Generic(a) => cmd_act(a, "generic"),
        Command::Singular(a) => cmd_act(a, "singular"),
        Command::Verify(a) => cmd_verify(a),
        Command::Structure(a) => cmd_structure(a),
        Command::Verdict(a) => cmd_verdict(a),
    };
    let (value, code) = match result {
        Ok((value, true)) => (value, 0),
        Ok((value, false)) => (value, 1),
        Err(e) => {
            let code = e.code;
            (error_json(&e), code)
        }
    };
    if let Err(e) = emit(&value, cli.json_out.as_deref()) {
        println!("{}", serde_json::to_string_pretty(&error_json(&e)).unwrap());
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
