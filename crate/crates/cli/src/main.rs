use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use primspace::format;
use primspace::modact::DEFAULT_BUDGET;
use primspace::Bounds;
use primspace_cli::check::render_check_text;
use primspace_cli::{
    cmd_analyze, cmd_check, cmd_dot, cmd_gen, cmd_pullback, render_analysis_text, render_pullback_text, CheckOptions,
    DotKind, Input, BUDGET_ENV,
};

#[derive(Parser)]
#[command(name = "primspace", version, about = "Primitive ideals and structure spaces of finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate semigroups of one order as text tables.
    Gen {
        #[arg(long)]
        order: usize,
        /// Keep one table per isomorphism/anti-isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ideals, primes, primitive ideals and the structure space of one table.
    Analyze {
        /// Table file or `@NAME`.
        table: String,
        #[command(flatten)]
        bounds: BoundsArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Include per-stage timings.
        #[arg(long)]
        timings: bool,
    },
    /// Pull primitive points back along a homomorphism and check continuity.
    Pullback {
        hom: PathBuf,
        #[command(flatten)]
        bounds: BoundsArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every suite over the corpus of semigroups up to an order.
    Check {
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long)]
        dedup: bool,
        /// Skip the named examples.
        #[arg(long)]
        no_named: bool,
        #[command(flatten)]
        bounds: BoundsArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graphviz output for the structure space.
    Dot {
        table: String,
        #[arg(long, value_enum, default_value_t = DotWhat::Specialization)]
        what: DotWhat,
        #[command(flatten)]
        bounds: BoundsArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Field sizes of the module catalog.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    primes: Vec<u32>,
    /// Largest module dimension.
    #[arg(long, default_value_t = 2)]
    maxdim: usize,
    /// Node budget for the action search.
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl BoundsArgs {
    fn bounds(&self) -> Bounds {
        Bounds::new(self.primes.clone(), self.maxdim).with_budget(self.budget)
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotWhat {
    Specialization,
    ClosedLattice,
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn render<T: Serialize>(output: &OutputArgs, report: &T, text: impl FnOnce() -> String) -> Result<()> {
    let body = match output.format {
        OutputFormat::Json => serde_json::to_string_pretty(report)? + "\n",
        OutputFormat::Text => text(),
    };
    emit(output.out.as_ref(), &body)
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { order, dedup, out } => {
            let tables = cmd_gen(order, dedup)?;
            emit(out.as_ref(), &format::write_table_stream(&tables))?;
            eprintln!("{} tables", tables.len());
            Ok(true)
        }
        Command::Analyze { table, bounds, output, timings } => {
            let input = Input::load(&table)?;
            let report = cmd_analyze(&input, &bounds.bounds(), timings)?;
            render(&output, &report, || render_analysis_text(&input, &report))?;
            Ok(report.all_passed)
        }
        Command::Pullback { hom, bounds, output } => {
            let report = cmd_pullback(&hom, &bounds.bounds())?;
            render(&output, &report, || render_pullback_text(&report))?;
            Ok(report.passed)
        }
        Command::Check { order, dedup, no_named, bounds, output } => {
            let opts = CheckOptions { max_order: order, dedup, bounds: bounds.bounds(), named: !no_named };
            let report = cmd_check(&opts)?;
            render(&output, &report, || render_check_text(&report))?;
            Ok(report.all_passed)
        }
        Command::Dot { table, what, bounds, out } => {
            let input = Input::load(&table)?;
            let kind = match what {
                DotWhat::Specialization => DotKind::Specialization,
                DotWhat::ClosedLattice => DotKind::ClosedLattice,
            };
            emit(out.as_ref(), &cmd_dot(&input, kind, &bounds.bounds())?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
