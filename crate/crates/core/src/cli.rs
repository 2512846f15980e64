//! Command-line front end.
//!
//! Settings resolve as flags, then a `key=value` config file, then the
//! `HYPTREE_BUDGET` environment variable (budget only), then defaults.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{self, canonical_system, CanonicalKind, Caps};
use crate::error::{Error, Result};
use crate::solver::{min_depth_with, shannon_profile, SolverOptions};
use crate::strategies::{self, ReducednessKind};
use crate::table::{solution_set, InformationSystem, Problem};
use crate::trees::{verify_solves, DecisionTree, QueryModel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

pub const DEFAULT_BUDGET: usize = 100_000;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Structure(_) => EXIT_USAGE,
        Error::Parse { .. } | Error::Io(_) => EXIT_PARSE,
        Error::Budget(_) | Error::Cap(_) => EXIT_BUDGET,
        Error::Unsolvable(_) | Error::CertificateViolation(_) | Error::Verification(_) => EXIT_INTERNAL,
    }
}

#[derive(Parser, Debug)]
#[command(name = "hyptree", version, about = "Minimum-depth decision trees with attribute and hypothesis queries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimum depth of a problem under each requested model (CSV).
    Solve(CommonArgs),
    /// Shannon-function estimates over all problems up to a dimension (CSV).
    Shannon(ShannonArgs),
    /// Build a tree with one of the constructive strategies.
    Strategy(StrategyArgs),
    /// Classification report for a system (JSON or text).
    Classify(ClassifyArgs),
    /// Write the system as CSV, or with --dot the optimal tree as DOT.
    Export(CommonArgs),
    /// Generate a seeded corpus of random tables.
    Gen(GenArgs),
}

#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// Canonical system u1..u7.
    #[arg(long)]
    pub system: Option<String>,
    /// Size parameter of the canonical system.
    #[arg(long)]
    pub n: Option<usize>,
    /// CSV table instead of a canonical system.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Comma-separated attribute names forming the problem (default: all).
    #[arg(long)]
    pub attrs: Option<String>,
    /// m1..m5 or `all`.
    #[arg(long)]
    pub model: Option<String>,
    /// Enumeration budget (problems for shannon, search nodes elsewhere).
    #[arg(long)]
    pub budget: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Emit the optimal tree as DOT.
    #[arg(long)]
    pub dot: bool,
    /// Worker threads for shannon (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Maximum memo entries kept by the solver.
    #[arg(long)]
    pub memo_limit: Option<usize>,
    /// Largest subsystem size explored by reducedness surveys.
    #[arg(long)]
    pub subsystem_cap: Option<usize>,
    /// Largest k-level computed before reporting it as exceeded.
    #[arg(long)]
    pub k_cap: Option<usize>,
    /// Flat key=value file with defaults for any of the above.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ShannonArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Largest problem dimension (default: number of attributes).
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyKind {
    Sequential,
    Halving,
    Ksystem,
    ProperOnly,
}

#[derive(Args, Debug, Clone)]
pub struct StrategyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum)]
    pub kind: StrategyKind,
    /// Reducedness parameter for the certificate.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long, default_value_t = 6)]
    pub universe: usize,
    #[arg(long, default_value_t = 3)]
    pub attributes: usize,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Canonical { kind: CanonicalKind, n: usize },
    Table(PathBuf),
}

/// Fully resolved settings for one command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: Source,
    pub attrs: Option<Vec<String>>,
    pub models: Vec<QueryModel>,
    pub budget: usize,
    pub threads: Option<usize>,
    pub caps: Caps,
    pub memo_limit: usize,
    pub out: Option<PathBuf>,
    pub dot: bool,
}

fn parse_config(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = fs::read_to_string(path)?;
    let mut map = BTreeMap::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: k + 1,
            message: format!("expected key=value, got '{line}'"),
        })?;
        map.insert(key.trim().replace('-', "_"), value.trim().to_string());
    }
    Ok(map)
}

struct Layered {
    file: BTreeMap<String, String>,
}

impl Layered {
    fn string(&self, flag: &Option<String>, key: &str) -> Option<String> {
        flag.clone().or_else(|| self.file.get(key).cloned())
    }

    fn number(&self, flag: Option<usize>, key: &str) -> Result<Option<usize>> {
        if flag.is_some() {
            return Ok(flag);
        }
        self.file
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::structure(format!("config key {key}: '{v}' is not a number")))
            })
            .transpose()
    }
}

fn parse_models(s: &str) -> Result<Vec<QueryModel>> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(QueryModel::ALL.to_vec());
    }
    s.split(',').map(|m| m.trim().parse()).collect()
}

fn positive(v: usize, what: &str) -> Result<usize> {
    if v == 0 {
        return Err(Error::structure(format!("{what} must be positive")));
    }
    Ok(v)
}

impl RunConfig {
    pub fn resolve(args: &CommonArgs) -> Result<Self> {
        let layer = Layered {
            file: match &args.config {
                Some(p) => parse_config(p)?,
                None => BTreeMap::new(),
            },
        };
        let system = layer.string(&args.system, "system");
        let table = args.table.clone().or_else(|| layer.file.get("table").map(PathBuf::from));
        let source = match (system, table) {
            (Some(_), Some(_)) => return Err(Error::structure("--system and --table are mutually exclusive")),
            (None, None) => return Err(Error::structure("one of --system or --table is required")),
            (Some(s), None) => {
                let kind = s.parse()?;
                let n = layer
                    .number(args.n, "n")?
                    .ok_or_else(|| Error::structure("--n is required with --system"))?;
                Source::Canonical { kind, n }
            }
            (None, Some(p)) => Source::Table(p),
        };
        let env_budget = std::env::var("HYPTREE_BUDGET")
            .ok()
            .map(|v| {
                v.parse::<usize>()
                    .map_err(|_| Error::structure(format!("HYPTREE_BUDGET='{v}' is not a number")))
            })
            .transpose()?;
        let budget = layer.number(args.budget, "budget")?.or(env_budget).unwrap_or(DEFAULT_BUDGET);
        let defaults = Caps::default();
        let caps = Caps {
            subsystem_cap: positive(
                layer.number(args.subsystem_cap, "subsystem_cap")?.unwrap_or(defaults.subsystem_cap),
                "subsystem cap",
            )?,
            k_level_cap: positive(layer.number(args.k_cap, "k_cap")?.unwrap_or(defaults.k_level_cap), "k-level cap")?,
            node_budget: defaults.node_budget.max(budget),
        };
        Ok(RunConfig {
            source,
            attrs: layer
                .string(&args.attrs, "attrs")
                .map(|a| a.split(',').map(|s| s.trim().to_string()).collect()),
            models: parse_models(&layer.string(&args.model, "model").unwrap_or_else(|| "all".into()))?,
            budget: positive(budget, "budget")?,
            threads: layer.number(args.threads, "threads")?,
            caps,
            memo_limit: positive(
                layer
                    .number(args.memo_limit, "memo_limit")?
                    .unwrap_or(SolverOptions::default().memo_limit),
                "memo limit",
            )?,
            out: args.out.clone().or_else(|| layer.file.get("out").map(PathBuf::from)),
            dot: args.dot || layer.file.get("dot").is_some_and(|v| v == "true"),
        })
    }

    pub fn system(&self) -> Result<InformationSystem> {
        match &self.source {
            Source::Canonical { kind, n } => canonical_system(*kind, *n),
            Source::Table(p) => InformationSystem::from_csv_path(p),
        }
    }

    /// `u7` for canonical systems, the file stem for tables.
    pub fn system_label(&self) -> String {
        match &self.source {
            Source::Canonical { kind, .. } => kind.to_string(),
            Source::Table(p) => p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "table".into()),
        }
    }

    pub fn problem(&self, sys: &InformationSystem) -> Result<Problem> {
        match &self.attrs {
            None => Problem::all(sys),
            Some(names) => {
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                Problem::by_names(sys, &refs)
            }
        }
    }

    fn single_model(&self) -> Result<QueryModel> {
        match self.models.as_slice() {
            [m] => Ok(*m),
            _ => Err(Error::structure("this command needs exactly one --model")),
        }
    }

    fn solver_options(&self) -> SolverOptions {
        SolverOptions {
            memo_limit: self.memo_limit,
            ..SolverOptions::default()
        }
    }
}

fn write_artifact(path: &Option<PathBuf>, text: &str, w: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => w.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// One CSV row `system,n,model,depth,nodes,memo_hits,time_ms` per model.
pub fn cmd_solve(cfg: &RunConfig, w: &mut dyn Write) -> Result<()> {
    let sys = cfg.system()?;
    let z = cfg.problem(&sys)?;
    if cfg.dot {
        cfg.single_model()?;
    }
    let options = cfg.solver_options();
    writeln!(w, "system,n,model,depth,nodes,memo_hits,time_ms")?;
    let mut dot = None;
    for &model in &cfg.models {
        let started = Instant::now();
        let res = min_depth_with(&sys, &z, model, cfg.dot, &options)?;
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            cfg.system_label(),
            z.dim(),
            model,
            res.depth,
            res.stats.nodes_expanded,
            res.stats.memo_hits,
            started.elapsed().as_millis()
        )?;
        dot = res.optimal_tree.map(|t| t.to_dot());
    }
    if let Some(d) = dot {
        write_artifact(&cfg.out, &d, w)?;
    }
    Ok(())
}

/// Rows `system,n,model,value,argmax,status`; a budget failure marks every
/// row of that model instead of aborting.
pub fn cmd_shannon(cfg: &RunConfig, max_n: Option<usize>, w: &mut dyn Write) -> Result<()> {
    let sys = cfg.system()?;
    let max_n = max_n.unwrap_or(sys.attribute_count());
    positive(max_n, "--max-n")?;
    let mut text = String::from("system,n,model,value,argmax,status\n");
    for &model in &cfg.models {
        match shannon_profile(&sys, model, max_n, cfg.budget, cfg.threads) {
            Ok(rows) => {
                for row in rows {
                    let names: Vec<&str> = row.argmax.iter().map(|&f| sys.attribute_name(f)).collect();
                    text.push_str(&format!(
                        "{},{},{},{},{},ok\n",
                        cfg.system_label(),
                        row.n,
                        model,
                        row.value,
                        names.join(";")
                    ));
                }
            }
            Err(e @ Error::Budget(_)) => {
                for n in 1..=max_n {
                    text.push_str(&format!("{},{n},{model},,,{}\n", cfg.system_label(), csv_safe(&e.to_string())));
                }
            }
            Err(e) => return Err(e),
        }
    }
    write_artifact(&cfg.out, &text, w)
}

fn csv_safe(s: &str) -> String {
    s.replace(',', ";")
}

pub struct StrategyOutcome {
    pub tree: DecisionTree,
    pub model: QueryModel,
    pub r: Option<usize>,
    /// Proven depth bound, as a real number for the halving bound.
    pub bound: f64,
}

pub fn run_strategy(cfg: &RunConfig, kind: StrategyKind, r: Option<usize>) -> Result<StrategyOutcome> {
    let sys = cfg.system()?;
    let z = cfg.problem(&sys)?;
    let pool: Vec<usize> = (0..sys.attribute_count()).collect();
    Ok(match kind {
        StrategyKind::Sequential => StrategyOutcome {
            tree: strategies::sequential_proper(&sys, &z)?,
            model: QueryModel::M4,
            r: None,
            bound: z.dim() as f64,
        },
        StrategyKind::Halving => {
            let r = r.unwrap_or(2);
            let cert = classify::certify(&sys, ReducednessKind::IReduced, r, &cfg.caps)?;
            let (dim, _) = classify::independence_dimension(&sys, &pool, cfg.caps.node_budget)?;
            StrategyOutcome {
                tree: strategies::halving_proper(&sys, &z, &cert)?,
                model: QueryModel::M4,
                r: Some(r),
                bound: strategies::halving_bound(r, dim, z.dim()),
            }
        }
        StrategyKind::Ksystem => {
            let r = r.unwrap_or(2);
            let cert = classify::certify(&sys, ReducednessKind::IReduced, r, &cfg.caps)?;
            let k = classify::k_level(&sys, cfg.caps.k_level_cap)
                .level()
                .ok_or_else(|| Error::Cap(format!("k-level exceeds cap {}", cfg.caps.k_level_cap)))?;
            StrategyOutcome {
                tree: strategies::k_system_tree(&sys, &z, &cert, cfg.caps.k_level_cap)?,
                model: QueryModel::M5,
                r: Some(r),
                bound: (r * k) as f64,
            }
        }
        StrategyKind::ProperOnly => {
            let source = min_depth_with(&sys, &z, QueryModel::M5, true, &cfg.solver_options())?
                .optimal_tree
                .expect("extracted");
            let h = source.depth();
            StrategyOutcome {
                tree: strategies::to_proper_only(&sys, &z, &source)?,
                model: QueryModel::M4,
                r: None,
                bound: ((1u128 << h.min(100)) - 1) as f64,
            }
        }
    })
}

/// One CSV row `system,n,kind,model,r,depth,bound,verified`; the DOT tree goes
/// to `--out` (or follows the row with `--dot`).
pub fn cmd_strategy(cfg: &RunConfig, kind: StrategyKind, r: Option<usize>, w: &mut dyn Write) -> Result<()> {
    let outcome = run_strategy(cfg, kind, r)?;
    let sys = cfg.system()?;
    let z = cfg.problem(&sys)?;
    let verified = verify_solves(&sys, &z, &outcome.tree, outcome.model)?;
    let kind_name = kind.to_possible_value().expect("named").get_name().to_string();
    writeln!(w, "system,n,kind,model,r,depth,bound,verified")?;
    writeln!(
        w,
        "{},{},{},{},{},{},{},{}",
        cfg.system_label(),
        z.dim(),
        kind_name,
        outcome.model,
        outcome.r.map(|r| r.to_string()).unwrap_or_default(),
        outcome.tree.depth(),
        outcome.bound.floor() as u64,
        verified
    )?;
    if cfg.out.is_some() || cfg.dot {
        write_artifact(&cfg.out, &outcome.tree.to_dot(), w)?;
    }
    Ok(())
}

pub fn cmd_classify(cfg: &RunConfig, format: ReportFormat, w: &mut dyn Write) -> Result<()> {
    let report = match &cfg.source {
        Source::Canonical { kind, n } => classify::classify_canonical(*kind, *n, &cfg.caps)?,
        Source::Table(_) => classify::classify(&cfg.system_label(), &cfg.system()?, &cfg.caps)?,
    };
    let text = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Text => report.summary(),
    };
    write_artifact(&cfg.out, &text, w)
}

pub fn cmd_export(cfg: &RunConfig, w: &mut dyn Write) -> Result<()> {
    let sys = cfg.system()?;
    let text = if cfg.dot {
        let z = cfg.problem(&sys)?;
        let model = cfg.single_model()?;
        min_depth_with(&sys, &z, model, true, &cfg.solver_options())?
            .optimal_tree
            .expect("extracted")
            .to_dot()
    } else {
        sys.to_csv_string()
    };
    write_artifact(&cfg.out, &text, w)
}

/// Writes `table_000.csv`, ... with uniformly random values and lists them.
pub fn cmd_gen(args: &GenArgs, w: &mut dyn Write) -> Result<()> {
    positive(args.universe, "--universe")?;
    positive(args.attributes, "--attributes")?;
    fs::create_dir_all(&args.out)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for k in 0..args.count {
        let sys = random_table(&mut rng, args.universe, args.attributes)?;
        let path = args.out.join(format!("table_{k:03}.csv"));
        fs::write(&path, sys.to_csv_string())?;
        let z = Problem::all(&sys)?;
        writeln!(w, "{},{}", path.display(), solution_set(&sys, &z)?.len())?;
    }
    Ok(())
}

/// Random table with elements `e1..` and attributes `f1..`.
pub fn random_table(rng: &mut impl Rng, universe: usize, attributes: usize) -> Result<InformationSystem> {
    let rows: Vec<Vec<bool>> = (0..universe)
        .map(|_| (0..attributes).map(|_| rng.gen()).collect())
        .collect();
    InformationSystem::from_rows(
        (1..=universe).map(|i| format!("e{i}")).collect(),
        (1..=attributes).map(|i| format!("f{i}")).collect(),
        &rows,
    )
}

pub fn execute(command: &Command, w: &mut dyn Write) -> Result<()> {
    match command {
        Command::Solve(a) => cmd_solve(&RunConfig::resolve(a)?, w),
        Command::Shannon(a) => cmd_shannon(&RunConfig::resolve(&a.common)?, a.max_n, w),
        Command::Strategy(a) => cmd_strategy(&RunConfig::resolve(&a.common)?, a.kind, a.r, w),
        Command::Classify(a) => cmd_classify(&RunConfig::resolve(&a.common)?, a.format, w),
        Command::Export(a) => cmd_export(&RunConfig::resolve(a)?, w),
        Command::Gen(a) => cmd_gen(a, w),
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. Errors are reported on `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["hyptree"];
        full.extend_from_slice(args);
        let code = run_with(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn depth_column(csv: &str) -> Vec<String> {
        csv.lines().skip(1).map(|l| l.split(',').nth(3).unwrap().to_string()).collect()
    }

    #[test]
    fn solve_examples() {
        let (code, out, _) = run_args(&["solve", "--system", "u7", "--n", "7", "--model", "m1"]);
        assert_eq!(code, 0);
        assert_eq!(depth_column(&out), vec!["3"]);
        let (_, out, _) = run_args(&["solve", "--system", "u6", "--n", "3", "--model", "m4"]);
        assert_eq!(depth_column(&out), vec!["1"]);
        let (_, out, _) = run_args(&["solve", "--system", "u2", "--n", "2", "--model", "all"]);
        assert_eq!(depth_column(&out), vec!["2"; 5]);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["solve", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["solve", "--system", "u9", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["solve", "--system", "u7", "--n", "3", "--table", "x.csv"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn budget_errors_exit_four() {
        let (code, _, err) = run_args(&["solve", "--system", "u2", "--n", "8", "--model", "m1"]);
        assert_eq!(code, EXIT_BUDGET, "{err}");
    }

    #[test]
    fn shannon_chain_profile() {
        let (code, out, _) = run_args(&["shannon", "--system", "u7", "--n", "7", "--model", "m1"]);
        assert_eq!(code, 0);
        let values: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(3).unwrap()).collect();
        assert_eq!(values, vec!["1", "2", "2", "3", "3", "3", "3"]);
    }

    #[test]
    fn shannon_budget_is_reported_per_row() {
        let (code, out, _) = run_args(&["shannon", "--system", "u7", "--n", "7", "--model", "m1", "--budget", "10"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 8);
        assert!(out.lines().skip(1).all(|l| l.contains("budget exceeded")));
    }

    #[test]
    fn strategy_reports_bound() {
        let (code, out, err) = run_args(&["strategy", "--kind", "halving", "--system", "u7", "--n", "7", "--r", "2"]);
        assert_eq!(code, 0, "{err}");
        let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(row[6], "6");
        assert_eq!(row[7], "true");
    }

    #[test]
    fn classify_u3_report() {
        let (code, out, _) = run_args(&["classify", "--system", "u3", "--n", "3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["independence_dimension"], 1);
        assert_eq!(
            v["r_i_reduced"]["witness"],
            serde_json::json!(["p1=0", "p2=0", "p3=0", "l3=0"])
        );
    }

    #[test]
    fn certificate_violation_exits_five() {
        let (code, _, err) = run_args(&["strategy", "--kind", "halving", "--system", "u3", "--n", "3", "--r", "2"]);
        assert_eq!(code, EXIT_INTERNAL, "{err}");
    }

    #[test]
    fn config_file_precedence() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        fs::write(&path, "# defaults\nsystem = u7\nn = 3\nmodel = m2\n").unwrap();
        let p = path.to_str().unwrap();
        let (_, out, _) = run_args(&["solve", "--config", p]);
        assert!(out.lines().nth(1).unwrap().starts_with("u7,3,m2,"));
        let (_, out, _) = run_args(&["solve", "--config", p, "--model", "m1", "--n", "7"]);
        assert!(out.lines().nth(1).unwrap().starts_with("u7,7,m1,3,"));
        fs::write(&path, "garbage\n").unwrap();
        assert_eq!(run_args(&["solve", "--config", p]).0, EXIT_PARSE);
    }
}
