//! Command-line front end: verification suites, partition statistics,
//! single evaluations, cache management.
//!
//! Exit codes: `0` all checks passed, `1` at least one mismatch, `2` usage
//! or precondition error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::koornwinder::KoornCache;
use crate::partitions::{ParityClass, Partition, TwoCoreMethod};
use crate::pfaffian::{closed_form_int1, closed_form_int2, pf_formula_p1, pf_formula_p2};
use crate::torus::{integral_i, DensitySpec, Family};
use crate::verify::{
    default_suite, instance_params, run_suite_with_budgets, Budgets, IdentityId, Instance,
    InstanceParams,
};

const CACHE_DIR_ENV: &str = "LITTLEWOOD_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "littlewood",
    about = "Exact q-series verification of Littlewood-type Schur identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity verification suites and write a report.
    Verify(VerifyArgs),
    /// Print the statistics of a single partition.
    Partition(PartitionArgs),
    /// Evaluate a single Pfaffian formula, closed form, or torus integral.
    Eval(EvalArgs),
    /// Inspect or clear the Koornwinder polynomial cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Markdown,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id to verify (repeatable); see --list for the catalogue.
    #[arg(long = "identity", value_name = "ID")]
    identities: Vec<String>,

    /// Verify every identity.
    #[arg(long, conflicts_with = "identities")]
    all: bool,

    /// List the known identity ids and exit.
    #[arg(long)]
    list: bool,

    /// Number of variables n.
    #[arg(long, default_value_t = 4)]
    vars: usize,

    /// Bound m for the bounded identities and conjugation sweeps.
    #[arg(long, default_value_t = 2)]
    m: u32,

    /// Total x-degree truncation d.
    #[arg(long = "x-degree", default_value_t = 12)]
    x_degree: i64,

    /// q-order truncation D.
    #[arg(long = "q-order", default_value_t = 20)]
    q_order: u32,

    /// Sweep cap on |λ|.
    #[arg(long = "max-size", default_value_t = 12)]
    max_size: u32,

    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,

    /// Directory for the Koornwinder disk cache.
    #[arg(long = "cache-dir")]
    cache_dir: Option<PathBuf>,

    /// Report format.
    #[arg(long, value_enum, default_value = "markdown")]
    format: ReportFormat,

    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Include wall-clock timings in the report (breaks byte-for-byte
    /// reproducibility of reports, hence off by default).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Args)]
struct PartitionArgs {
    /// Comma-separated parts, e.g. "6,4,3,1"; empty string for the empty
    /// partition.
    parts: String,

    #[arg(long, value_enum, default_value = "text")]
    format: TextFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalKind {
    /// Pfaffian formula for the (q,q) family.
    Pf1,
    /// Pfaffian formula for the (1,q^2) family.
    Pf2,
    /// Closed form of the (q,q) integral.
    Int1,
    /// Closed form of the (1,q^2) integral.
    Int2,
    /// Direct constant-term integral.
    Integral,
}

#[derive(Args)]
struct EvalArgs {
    kind: EvalKind,

    /// Partition, comma-separated.
    #[arg(long)]
    lambda: String,

    /// Torus rank n.
    #[arg(long, default_value_t = 1)]
    n: usize,

    /// Density family for `integral`.
    #[arg(long, default_value = "I_qq")]
    family: String,

    /// q-order for `integral`.
    #[arg(long = "q-order", default_value_t = 12)]
    q_order: u32,
}

#[derive(Args)]
struct CacheArgs {
    #[command(subcommand)]
    action: CacheAction,

    #[arg(long = "cache-dir", global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cache directory and the number of stored records.
    Info,
    /// Delete all cached Koornwinder records.
    Clear,
}

fn resolve_cache_dir(flag: Option<PathBuf>) -> PathBuf {
    if let Some(dir) = flag {
        return dir;
    }
    if let Ok(dir) = std::env::var(CACHE_DIR_ENV) {
        return PathBuf::from(dir);
    }
    if let Ok(home) = std::env::var("HOME") {
        return PathBuf::from(home).join(".cache").join("littlewood");
    }
    PathBuf::from(".littlewood-cache")
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

/// Entry point for the `littlewood` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Partition(args) => cmd_partition(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Cache(args) => cmd_cache(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    if args.list {
        for id in IdentityId::ALL {
            println!("{id}");
        }
        return 0;
    }
    if let Some(jobs) = args.jobs {
        // ignore failure: the global pool may already exist
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let budgets = Budgets {
        vars: args.vars,
        m: args.m,
        x_degree: args.x_degree,
        q_order: args.q_order,
        max_size: args.max_size,
    };
    let instances: Vec<Instance> = if args.all || args.identities.is_empty() {
        default_suite(&budgets)
    } else {
        let base = InstanceParams {
            n: budgets.vars,
            m: budgets.m,
            x_degree: budgets.x_degree,
            q_order: budgets.q_order,
            max_size: budgets.max_size,
        };
        let mut list = Vec::new();
        for name in &args.identities {
            match IdentityId::parse(name) {
                Ok(id) => list.push(Instance { id, params: instance_params(id, base) }),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        list
    };

    let cache = KoornCache::with_dir(resolve_cache_dir(args.cache_dir));
    let report = run_suite_with_budgets(&instances, &budgets, &cache, args.timings);
    let rendered = match args.format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Markdown => report.to_markdown(),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
            eprintln!("report written to {}", path.display());
        }
        None => println!("{rendered}"),
    }
    eprintln!(
        "{} of {} instances passed",
        report.summary.passed, report.summary.total
    );
    if report.all_passed() {
        0
    } else {
        1
    }
}

fn cmd_partition(args: PartitionArgs) -> i32 {
    let p = match Partition::parse(&args.parts) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    let conj = p.conjugate();
    let hooks = p.hook_multisets();
    let core = p.two_core();
    let contents: Vec<i64> = p.cells().map(|s| s.col as i64 - s.row as i64).collect();
    let z = 2 * p.length() as i64;
    match args.format {
        TextFormat::Text => {
            println!("partition      {p}");
            println!("size           {}", p.size());
            println!("length         {}", p.length());
            println!("conjugate      {conj}");
            println!("2-core         {core} (empty: {})", core.is_empty());
            println!("b(λ)           {}", p.b_statistic());
            println!("b(λ')          {}", conj.b_statistic());
            println!("hooks          {:?}", hooks.all);
            println!("  odd          {:?}", hooks.odd);
            println!("  even         {:?}", hooks.even);
            println!("contents       {contents:?}");
            println!("H(q)           {}", p.hook_poly(ParityClass::All));
            println!("H^e(q)         {}", p.hook_poly(ParityClass::Even));
            println!("H^o(q)         {}", p.hook_poly(ParityClass::Odd));
            println!("C(q^{z};q)     {}", p.content_poly(z, ParityClass::All));
            println!("C^e(q^{z};q)   {}", p.content_poly(z, ParityClass::Even));
            println!("C^o(q^{z};q)   {}", p.content_poly(z, ParityClass::Odd));
        }
        TextFormat::Json => {
            let doc = json!({
                "partition": p.parts(),
                "size": p.size(),
                "length": p.length(),
                "conjugate": conj.parts(),
                "two_core": core.parts(),
                "empty_two_core": p.has_empty_two_core(TwoCoreMethod::Abacus),
                "b": p.b_statistic(),
                "b_conjugate": conj.b_statistic(),
                "hooks": {
                    "all": hooks.all,
                    "odd": hooks.odd,
                    "even": hooks.even,
                },
                "contents": contents,
                "hook_poly": p.hook_poly(ParityClass::All).to_string(),
                "hook_poly_even": p.hook_poly(ParityClass::Even).to_string(),
                "hook_poly_odd": p.hook_poly(ParityClass::Odd).to_string(),
                "content_z_exp": z,
                "content_poly": p.content_poly(z, ParityClass::All).to_string(),
                "content_poly_even": p.content_poly(z, ParityClass::Even).to_string(),
                "content_poly_odd": p.content_poly(z, ParityClass::Odd).to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializes"));
        }
    }
    0
}

fn cmd_eval(args: EvalArgs) -> i32 {
    let lam = match Partition::parse(&args.lambda) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    let n = args.n;
    match args.kind {
        EvalKind::Pf1 => match pf_formula_p1(&lam, n) {
            Ok(v) => println!("{v}"),
            Err(e) => return usage_error(&e.to_string()),
        },
        EvalKind::Pf2 => match pf_formula_p2(&lam, n) {
            Ok(v) => println!("{v}"),
            Err(e) => return usage_error(&e.to_string()),
        },
        EvalKind::Int1 => match closed_form_int1(&lam, n) {
            Ok(v) => println!("{v}"),
            Err(e) => return usage_error(&e.to_string()),
        },
        EvalKind::Int2 => match closed_form_int2(&lam, n) {
            Ok(v) => println!("{v}"),
            Err(e) => return usage_error(&e.to_string()),
        },
        EvalKind::Integral => {
            let family = match Family::parse(&args.family) {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            let spec = DensitySpec::new(family, n, args.q_order);
            match integral_i(&lam, spec) {
                Ok(r) => println!("{}", r.value),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    }
    0
}

fn cmd_cache(args: CacheArgs) -> i32 {
    let dir = resolve_cache_dir(args.cache_dir);
    match args.action {
        CacheAction::Info => {
            let count = std::fs::read_dir(&dir)
                .map(|rd| {
                    rd.filter_map(|e| e.ok())
                        .filter(|e| e.file_name().to_string_lossy().starts_with("koornwinder-"))
                        .count()
                })
                .unwrap_or(0);
            println!("cache directory: {}", dir.display());
            println!("records: {count}");
            0
        }
        CacheAction::Clear => {
            let mut removed = 0usize;
            if let Ok(rd) = std::fs::read_dir(&dir) {
                for entry in rd.filter_map(|e| e.ok()) {
                    let name = entry.file_name();
                    let name = name.to_string_lossy();
                    if name.starts_with("koornwinder-") && name.ends_with(".json") {
                        if std::fs::remove_file(entry.path()).is_ok() {
                            removed += 1;
                        }
                    }
                }
            }
            println!("removed {removed} cached records from {}", dir.display());
            0
        }
    }
}
