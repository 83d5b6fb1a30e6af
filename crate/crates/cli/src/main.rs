mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use treecount_core::deletion::{count_by_deletion, DeletionConfig, PivotStrategy};
use treecount_core::families::{FamilyKind, FamilySpec};
use treecount_core::io::{parse_edge_list, write_dot, write_edge_list, write_json};
use treecount_core::oracles::{
    brute_force_count, matrix_tree_count, BruteForceConfig, DEFAULT_BRUTE_FORCE_BUDGET,
};
use treecount_core::verify::{grid, verify_grid, GridBounds, VerifyOptions};
use treecount_core::{BigCount, Error, Method, MultiGraph};

use report::CountReport;

const BUDGET_VAR: &str = "TREECOUNT_BRUTE_BUDGET";

#[derive(Parser)]
#[command(name = "treecount", version, about = "Exact spanning tree counts for multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the spanning trees of a parametrized family member.
    Family(FamilyArgs),
    /// Count the spanning trees of a graph read from an edge-list file.
    Count(CountArgs),
    /// Cross-check every method over a grid of family parameters.
    Verify(VerifyArgs),
    /// Write a family member or an edge-list file as DOT, edge list or JSON.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Cone,
    ModifiedBipartite,
    GeneralizedBipartite,
    HalfCone,
    Multipartite,
    /// `K_{m,n}`, the generalized bipartite graph with every `k_i = 1`.
    Bipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Deletion,
    MatrixTree,
    BruteForce,
    Recurrence,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Formula => Method::Formula,
            MethodArg::Deletion => Method::Deletion,
            MethodArg::MatrixTree => Method::MatrixTree,
            MethodArg::BruteForce => Method::BruteForce,
            MethodArg::Recurrence => Method::Recurrence,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    MinDegree,
    MaxDegree,
    FirstNonCut,
}

impl From<StrategyArg> for PivotStrategy {
    fn from(s: StrategyArg) -> PivotStrategy {
        match s {
            StrategyArg::MinDegree => PivotStrategy::MinDegree,
            StrategyArg::MaxDegree => PivotStrategy::MaxDegree,
            StrategyArg::FirstNonCut => PivotStrategy::FirstNonCut,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    EdgeList,
    Json,
}

#[derive(Args)]
struct MethodArgs {
    #[arg(long, value_enum, default_value = "deletion")]
    method: MethodArg,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Recurse all the way down instead of handing small graphs to the determinant.
    #[arg(long)]
    pure_deletion: bool,
    #[arg(long, value_enum, default_value = "min-degree")]
    strategy: StrategyArg,
    /// Do not cache isomorphic subproblems.
    #[arg(long)]
    no_memo: bool,
    /// Run on the current thread only.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct FamilyParams {
    #[arg(short, long)]
    m: Option<u32>,
    #[arg(short, long)]
    n: Option<u32>,
    #[arg(short, long)]
    k: Option<u32>,
    /// Per-vertex multiplicities k_1,..,k_m.
    #[arg(long, value_delimiter = ',')]
    ks: Vec<u32>,
    /// Part sizes of a multipartite graph.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<u32>,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: FamilyName,
    #[command(flatten)]
    params: FamilyParams,
    #[command(flatten)]
    method: MethodArgs,
}

#[derive(Args)]
struct CountArgs {
    file: PathBuf,
    #[command(flatten)]
    method: MethodArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated families to check (default: all).
    #[arg(long, value_delimiter = ',')]
    families: Vec<String>,
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long)]
    max_m: Option<u32>,
    #[arg(long)]
    max_k: Option<u32>,
    /// Run on the current thread only.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// An edge-list file, or a family spec such as `cone:m=3:n=3`.
    source: String,
    #[arg(long, value_enum)]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_budget() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Family(args) => cmd_family(args),
        Command::Count(args) => cmd_count(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Export(args) => cmd_export(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn brute_force_config(parallel: bool) -> CliResult<BruteForceConfig> {
    let budget = match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{BUDGET_VAR} must be a non-negative integer, got `{v}`")))?,
        Err(_) => DEFAULT_BRUTE_FORCE_BUDGET,
    };
    Ok(BruteForceConfig { budget, parallel })
}

fn deletion_config(args: &MethodArgs) -> DeletionConfig {
    let base = if args.pure_deletion {
        DeletionConfig::pure()
    } else {
        DeletionConfig::default()
    };
    DeletionConfig {
        strategy: args.strategy.into(),
        memo: !args.no_memo,
        parallel: !args.sequential,
        ..base
    }
}

/// Counts `g` by one of the graph-based methods.
fn count_graph(g: &MultiGraph, method: Method, args: &MethodArgs) -> CliResult<BigCount> {
    Ok(match method {
        Method::MatrixTree => matrix_tree_count(g),
        Method::Deletion => count_by_deletion(g, &deletion_config(args))?,
        Method::BruteForce => brute_force_count(g, &brute_force_config(!args.sequential)?)?,
        other => return Err(Failure::usage(format!("method {other} needs a family, not a graph"))),
    })
}

fn print_report(report: &CountReport, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
}

fn family_spec(family: FamilyName, p: &FamilyParams) -> CliResult<FamilySpec> {
    let need = |v: Option<u32>, flag: &str| {
        v.ok_or_else(|| Failure::usage(format!("{} needs -{flag}", family_label(family))))
    };
    let ks = |p: &FamilyParams| -> CliResult<Vec<u32>> {
        if p.ks.is_empty() {
            return Err(Failure::usage(format!("{} needs --ks", family_label(family))));
        }
        if let Some(m) = p.m {
            if m as usize != p.ks.len() {
                return Err(Failure::usage(format!("-m {m} does not match {} values in --ks", p.ks.len())));
            }
        }
        Ok(p.ks.clone())
    };
    let spec = match family {
        FamilyName::Cone => FamilySpec::Cone {
            m: need(p.m, "m")?,
            n: need(p.n, "n")?,
        },
        FamilyName::ModifiedBipartite => FamilySpec::ModifiedBipartite {
            k: need(p.k, "k")?,
            m: need(p.m, "m")?,
            n: need(p.n, "n")?,
        },
        FamilyName::GeneralizedBipartite => FamilySpec::GeneralizedBipartite {
            ks: ks(p)?,
            n: need(p.n, "n")?,
        },
        FamilyName::HalfCone => FamilySpec::HalfCone {
            k: need(p.k, "k")?,
            ks: ks(p)?,
            n: need(p.n, "n")?,
        },
        FamilyName::Multipartite => {
            if p.parts.is_empty() {
                return Err(Failure::usage("multipartite needs --parts"));
            }
            FamilySpec::Multipartite { parts: p.parts.clone() }
        }
        FamilyName::Bipartite => FamilySpec::GeneralizedBipartite {
            ks: vec![1; need(p.m, "m")? as usize],
            n: need(p.n, "n")?,
        },
    };
    spec.validate()?;
    Ok(spec)
}

fn family_label(family: FamilyName) -> &'static str {
    match family {
        FamilyName::Bipartite => "bipartite",
        FamilyName::Cone => FamilyKind::Cone.name(),
        FamilyName::ModifiedBipartite => FamilyKind::ModifiedBipartite.name(),
        FamilyName::GeneralizedBipartite => FamilyKind::GeneralizedBipartite.name(),
        FamilyName::HalfCone => FamilyKind::HalfCone.name(),
        FamilyName::Multipartite => FamilyKind::Multipartite.name(),
    }
}

fn cmd_family(args: FamilyArgs) -> CliResult<u8> {
    let spec = family_spec(args.family, &args.params)?;
    let method = Method::from(args.method.method);
    let start = Instant::now();
    let (summary, count) = match method {
        Method::Formula => (spec.summary()?, spec.formula()?),
        Method::Recurrence => {
            let count = spec.recurrence()?.ok_or_else(|| {
                Failure::usage(format!("no recurrence for {} graphs", spec.kind()))
            })?;
            (spec.summary()?, count)
        }
        _ => {
            let g = spec.build()?;
            let count = count_graph(&g, method, &args.method)?;
            (g.summary(), count)
        }
    };
    let report = CountReport::new(&summary, method, &count, start.elapsed());
    print_report(&report, args.method.json);
    Ok(0)
}

fn read_graph(path: &Path) -> CliResult<MultiGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let parsed = parse_edge_list(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.graph)
}

fn cmd_count(args: CountArgs) -> CliResult<u8> {
    let method = Method::from(args.method.method);
    if matches!(method, Method::Formula | Method::Recurrence) {
        return Err(Failure::usage(format!("method {method} is only available for `family`")));
    }
    let g = read_graph(&args.file)?;
    let start = Instant::now();
    let count = count_graph(&g, method, &args.method)?;
    let report = CountReport::new(&g.summary(), method, &count, start.elapsed());
    print_report(&report, args.method.json);
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<u8> {
    let families = if args.families.is_empty() {
        FamilyKind::ALL.to_vec()
    } else {
        args.families
            .iter()
            .map(|f| f.parse::<FamilyKind>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let bounds = GridBounds {
        max_n: args.max_n,
        max_m: args.max_m,
        max_k: args.max_k,
    };
    let specs = grid(&families, &bounds);
    let options = VerifyOptions {
        brute_force: brute_force_config(!args.sequential)?,
        parallel: !args.sequential,
        deletion: DeletionConfig {
            parallel: !args.sequential,
            ..DeletionConfig::pure()
        },
    };
    let report = verify_grid(&specs, &options);
    print!("{}", report.render_table());
    let skipped = report.outcomes.iter().filter(|o| o.brute_force_skipped()).count();
    if skipped > 0 {
        eprintln!(
            "warning: brute force skipped at {skipped} grid point(s) over the budget of {}",
            options.brute_force.budget
        );
    }
    let bad: Vec<_> = report.discrepancies().collect();
    if !bad.is_empty() {
        println!("\n{} discrepancies:", bad.len());
        for outcome in bad {
            println!("  {}", outcome.describe());
        }
    }
    Ok(report.exit_code() as u8)
}

fn cmd_export(args: ExportArgs) -> CliResult<u8> {
    let path = Path::new(&args.source);
    let g = if path.exists() {
        read_graph(path)?
    } else {
        args.source.parse::<FamilySpec>()?.build()?
    };
    let text = match args.format {
        Format::Dot => write_dot(&g)?,
        Format::EdgeList => write_edge_list(&g),
        Format::Json => write_json(&g),
    };
    match args.output {
        Some(out) => std::fs::write(&out, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", out.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}
