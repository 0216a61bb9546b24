//! Command-line driver: argument parsing, subcommand dispatch, and the
//! artifact writers in [`output`].

pub mod output;

use std::fs;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use incomplete_core::{
    builtin_solid, burnside_orbit_count, close_group, load_solid, sweep_with, FilterConfig,
    Platonic, Solid, SweepOptions,
};

#[derive(Debug, Parser)]
#[command(
    name = "incomplete",
    version,
    about = "Enumerate incomplete open polyhedra up to rotation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep all edge subsets and report the orbit representatives that pass the filters.
    Enumerate(EnumerateArgs),
    /// Print the number of orbits on all edge subsets, by Burnside's lemma.
    Burnside(SolidArgs),
    /// Check that the unfiltered sweep agrees with the Burnside count.
    Verify(VerifyArgs),
    /// Print every group element as an edge permutation in cycle notation.
    DumpGroup(SolidArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SolidArgs {
    /// Built-in solid name or path to a JSON solid spec.
    #[arg(long)]
    pub solid: String,
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub solid: SolidArgs,
    /// Comma-separated subset of connected,nonplanar,proper,nonempty.
    #[arg(long, conflicts_with = "no_filter")]
    pub filters: Option<FilterConfig>,
    /// Disable every filter (count all orbits).
    #[arg(long)]
    pub no_filter: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<NonZeroUsize>,
    /// Write an `edges,count` CSV here.
    #[arg(long)]
    pub histogram: Option<PathBuf>,
    /// Write representatives here, one hex mask per line.
    #[arg(long, conflicts_with = "no_reps")]
    pub reps: Option<PathBuf>,
    /// Count only; do not keep representatives.
    #[arg(long, conflicts_with = "obj")]
    pub no_reps: bool,
    /// Write one OBJ wireframe per representative into this directory.
    #[arg(long)]
    pub obj: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub solid: SolidArgs,
    #[arg(long)]
    pub workers: Option<NonZeroUsize>,
}

/// How a completed run should exit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    ValidationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::ValidationFailed => 1,
        }
    }
}

/// Exit code for usage and input errors.
pub const USAGE_ERROR: u8 = 2;

impl EnumerateArgs {
    pub fn filter_config(&self) -> FilterConfig {
        if self.no_filter {
            FilterConfig::NONE
        } else {
            self.filters.unwrap_or(FilterConfig::ALL)
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// Resolves a built-in name, or failing that reads a spec file.
pub fn resolve_solid(selector: &str) -> anyhow::Result<Solid> {
    if selector.parse::<Platonic>().is_ok() {
        return Ok(builtin_solid(selector)?);
    }
    let path = Path::new(selector);
    if !path.exists() {
        bail!(
            "unknown solid {selector:?}: not a built-in ({}) and no such file",
            Platonic::ALL.map(Platonic::name).join(", ")
        );
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    load_solid(&text).with_context(|| format!("loading {}", path.display()))
}

/// Runs one subcommand, writing its report to `out`.
pub fn run(command: &Command, out: &mut impl Write) -> anyhow::Result<Outcome> {
    match command {
        Command::Enumerate(args) => enumerate(args, out),
        Command::Burnside(args) => {
            let solid = resolve_solid(&args.solid)?;
            let group = close_group(&solid)?;
            let count = burnside_orbit_count(&group, solid.edge_count())?;
            writeln!(out, "{}, {}", solid.name(), count)?;
            Ok(Outcome::Success)
        }
        Command::Verify(args) => verify(args, out),
        Command::DumpGroup(args) => {
            let solid = resolve_solid(&args.solid)?;
            let group = close_group(&solid)?;
            writeln!(
                out,
                "# {}: {} rotations acting on {} edges",
                solid.name(),
                group.order(),
                solid.edge_count()
            )?;
            for (i, g) in group.elements().iter().enumerate() {
                writeln!(out, "{i}: {g}")?;
            }
            Ok(Outcome::Success)
        }
    }
}

fn enumerate(args: &EnumerateArgs, out: &mut impl Write) -> anyhow::Result<Outcome> {
    let solid = resolve_solid(&args.solid.solid)?;
    let config = args.filter_config();
    let options = SweepOptions {
        workers: args.workers.map_or_else(default_workers, NonZeroUsize::get),
        collect: !args.no_reps,
    };
    if let Some(dir) = &args.obj {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }

    let started = Instant::now();
    let group = close_group(&solid)?;
    let result = sweep_with(&solid, &group, config, options)?;
    let seconds = started.elapsed().as_secs_f64();

    if let Some(path) = &args.reps {
        output::write_representatives(&result, path)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.histogram {
        output::write_histogram(&result.histogram, path)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(dir) = &args.obj {
        for &mask in &result.representatives {
            let path = dir.join(output::wireframe_name(&solid, mask));
            output::write_wireframe(&solid, mask, &path)
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    writeln!(
        out,
        "{}, {}, {}, {:.3}",
        solid.name(),
        config,
        result.total,
        seconds
    )?;
    Ok(Outcome::Success)
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> anyhow::Result<Outcome> {
    let solid = resolve_solid(&args.solid.solid)?;
    let group = close_group(&solid)?;
    let expected = burnside_orbit_count(&group, solid.edge_count())?;
    let options = SweepOptions {
        workers: args.workers.map_or_else(default_workers, NonZeroUsize::get),
        collect: false,
    };
    let swept = sweep_with(&solid, &group, FilterConfig::NONE, options)?.total;
    let ok = swept == expected;
    writeln!(
        out,
        "{}: sweep {}, burnside {}, {}",
        solid.name(),
        swept,
        expected,
        if ok { "ok" } else { "MISMATCH" }
    )?;
    Ok(if ok {
        Outcome::Success
    } else {
        Outcome::ValidationFailed
    })
}
