//! `cdeg`: canonical-ideal invariants of numerical semigroup rings from the
//! command line.
//!
//! Exit codes: 0 on success, 1 when a property fails or a family row does
//! not match its claim, 2 on invalid input, 3 on I/O errors.

mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use cdeg::corpus::{self, cache_load, cache_store, CacheError, CorpusCache, SuiteConfig};
use cdeg::families::{self, Family};
use cdeg::idealization::{
    check_idealization_formulas, idealization_ag_transfer, idealization_components,
    idealization_index_experiment,
};
use cdeg::invariants::report;
use cdeg::roots::{rootset, DEFAULT_SEARCH_CAP};
use cdeg::semigroup::DEFAULT_GENUS_CAP;
use cdeg::NumericalSemigroup;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use config::{FileConfig, Settings, UsageError};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "cdeg",
    version,
    about = "Canonical degree, canonical index and roots of numerical semigroup rings"
)]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    /// TOML file with `genus_cap`, `workers` and `cache_path`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Print the JSON envelope.
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Print aligned tables (the default).
    #[arg(long, global = true)]
    table: bool,
    /// Fill the `timing` field of the envelope.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// All invariants of one ring.
    Invariants {
        #[arg(required = true)]
        gens: Vec<u64>,
    },
    /// Monomial rootset of the canonical ideal, with witnesses.
    Roots {
        #[arg(required = true)]
        gens: Vec<u64>,
        /// Bound on the search space (the canonical degree), overriding the
        /// configured cap.
        #[arg(long)]
        max_genus_override: Option<usize>,
    },
    /// Compare a family's invariants with their closed forms.
    Family {
        name: Family,
        #[arg(long)]
        from: Option<i64>,
        #[arg(long)]
        to: Option<i64>,
        /// `a` for type3-rootless.
        #[arg(long)]
        a: Option<i64>,
        /// `b` for type3-rootless.
        #[arg(long)]
        b: Option<i64>,
    },
    /// Run the theorem suite over every semigroup up to a genus.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_genus: usize,
        /// Comma-separated property ids; all by default.
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
        #[arg(long)]
        workers: Option<usize>,
        /// JSON-lines cache to read and update.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Include every result and the experiment table.
        #[arg(long)]
        full: bool,
    },
    /// Invariants of the idealization by the maximal ideal.
    Idealize {
        #[arg(required = true)]
        gens: Vec<u64>,
    },
}

/// What a command produced: the JSON result, its table rendering, and
/// whether it counts as a failure.
struct Outcome {
    input: Value,
    result: Value,
    table: String,
    failed: bool,
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn semigroup(gens: &[u64]) -> Result<NumericalSemigroup> {
    Ok(NumericalSemigroup::new(gens)?)
}

fn run(command: &Command, settings: &Settings) -> Result<Outcome> {
    match command {
        Command::Invariants { gens } => {
            let s = semigroup(gens)?;
            let rep = report(&s)?;
            Ok(Outcome {
                input: json!({ "generators": gens }),
                table: render::invariants(&rep),
                result: to_value(&rep),
                failed: false,
            })
        }
        Command::Roots {
            gens,
            max_genus_override,
        } => {
            let s = semigroup(gens)?;
            let cap = max_genus_override
                .or(settings.genus_cap)
                .unwrap_or(DEFAULT_SEARCH_CAP);
            let roots = rootset(&s, cap)?;
            Ok(Outcome {
                input: json!({ "generators": gens, "search_cap": cap }),
                table: render::roots(s.generators(), &roots),
                result: to_value(&roots),
                failed: false,
            })
        }
        Command::Family {
            name,
            from,
            to,
            a,
            b,
        } => family(*name, *from, *to, *a, *b, settings),
        Command::Verify {
            max_genus,
            properties,
            workers,
            cache,
            full,
        } => {
            let workers = workers
                .or(settings.workers)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let config = SuiteConfig {
                max_genus: *max_genus,
                properties: properties.clone(),
                workers,
                genus_cap: settings.genus_cap.unwrap_or(DEFAULT_GENUS_CAP),
            };
            let cache_path = cache.clone().or_else(|| settings.cache_path.clone());
            let mut rep = match &cache_path {
                Some(path) => {
                    let mut store = if path.exists() {
                        cache_load(path)?
                    } else {
                        CorpusCache::new()
                    };
                    let rep = corpus::run_suite_cached(&config, &mut store)?;
                    cache_store(path, &store)?;
                    rep
                }
                None => corpus::run_suite(&config)?,
            };
            let table = render::verify(&rep, *full);
            if !full {
                rep.results.clear();
                rep.experiment.clear();
            }
            Ok(Outcome {
                input: json!({
                    "max_genus": max_genus,
                    "properties": rep.properties,
                    "workers": workers,
                }),
                failed: !rep.is_clean(),
                result: to_value(&rep),
                table,
            })
        }
        Command::Idealize { gens } => {
            let s = semigroup(gens)?;
            let comp = idealization_components(&s)?;
            let checks = vec![
                check_idealization_formulas(&s)?,
                idealization_ag_transfer(&s)?,
            ];
            let row = idealization_index_experiment(&s)?;
            Ok(Outcome {
                input: json!({ "generators": gens }),
                table: render::idealize(s.generators(), &comp, &checks, &row),
                failed: checks.iter().any(|c| c.is_fail()),
                result: json!({
                    "components": comp,
                    "checks": checks,
                    "index": row,
                }),
            })
        }
    }
}

fn family(
    name: Family,
    from: Option<i64>,
    to: Option<i64>,
    a: Option<i64>,
    b: Option<i64>,
    settings: &Settings,
) -> Result<Outcome> {
    let rows = if name == Family::Type3Rootless {
        let (Some(a), Some(b)) = (a, b) else {
            return Err(UsageError("type3-rootless needs --a and --b".into()).into());
        };
        let from = from.unwrap_or(a + b + 2);
        let to = to.unwrap_or(from);
        let cap = settings.genus_cap.unwrap_or(DEFAULT_GENUS_CAP);
        (from..=to)
            .map(|e| families::type3_row(a, b, e, cap))
            .collect::<cdeg::Result<Vec<_>>>()?
    } else {
        if a.is_some() || b.is_some() {
            return Err(UsageError(format!("{name} takes only --from and --to")).into());
        }
        let from = from.unwrap_or(name.lower_bound());
        let to = to.unwrap_or(from);
        families::family_table(name, from, to)?
    };
    Ok(Outcome {
        input: json!({ "family": name, "from": from, "to": to, "a": a, "b": b }),
        table: render::family(&rows),
        failed: rows.iter().any(|r| !r.matches),
        result: to_value(&rows),
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Invariants { .. } => "invariants",
        Command::Roots { .. } => "roots",
        Command::Family { .. } => "family",
        Command::Verify { .. } => "verify",
        Command::Idealize { .. } => "idealize",
    }
}

/// Maps an error to the documented exit code.
fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<cdeg::Error>() {
        return match e {
            cdeg::Error::InternalInconsistency(_) | cdeg::Error::IterationCapExceeded { .. } => 1,
            _ => 2,
        };
    }
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    if err.downcast_ref::<CacheError>().is_some() || err.downcast_ref::<std::io::Error>().is_some()
    {
        return 3;
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn execute(cli: &Cli) -> Result<ExitCode> {
    let file = cli.config.as_deref().map(FileConfig::load).transpose()?;
    let settings = Settings::resolve(file)?;
    let started = Instant::now();
    let outcome = run(&cli.command, &settings)?;
    let elapsed = started.elapsed();

    if cli.output.json {
        let timing = cli
            .output
            .timing
            .then(|| json!({ "wall_ms": elapsed.as_millis() as u64 }));
        let envelope = json!({
            "schema_version": SCHEMA_VERSION,
            "command": command_name(&cli.command),
            "input": outcome.input,
            "result": outcome.result,
            "timing": timing,
        });
        let text = serde_json::to_string_pretty(&envelope).context("serializing output")?;
        println!("{text}");
    } else {
        print!("{}", outcome.table);
        if cli.output.timing {
            println!("wall time: {} ms", elapsed.as_millis());
        }
    }
    Ok(if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
