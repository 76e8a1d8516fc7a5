//! Command-line front end for `lsseq-core`.
//!
//! Subcommands: `points`, `partition`, `counts`, `points2d`, `scatter`,
//! `discrepancy`, `integrate` and `table31`. CSV output is UTF-8 with a header
//! row and LF line endings; numbers carry 17 significant digits. Exit codes:
//! 0 on success, 1 for usage errors, 2 for validation or acceptance failures.

pub mod config;
pub mod input;
pub mod output;
pub mod svg;

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lsseq_core::qmc::Generator2D;
use lsseq_core::{solve_beta, LSParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lsseq", version, about = "LS-sequences, low-discrepancy point sets, discrepancy and QMC reports")]
#[command(args_override_self = true)]
pub struct Cli {
    /// File of key=value lines applied on top of the command-line flags.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First N points of a one-dimensional sequence, as `index,x` CSV.
    Points(PointsArgs),
    /// Left endpoints of an LS or Kakutani partition, as CSV.
    Partition(PartitionArgs),
    /// Interval counts t, l, s of the LS-partitions up to a depth.
    Counts(CountsArgs),
    /// A planar point set, as `index,x,y` CSV.
    Points2d(Points2dArgs),
    /// SVG scatter plot of a planar point set.
    Scatter(Points2dArgs),
    /// Exact star (and, in 1D, extreme) discrepancy of a point set.
    Discrepancy(DiscrepancyArgs),
    /// QMC estimate of an integral over the unit square, or a convergence
    /// study with --Ns.
    Integrate(IntegrateArgs),
    /// Reproduce the reference integration table for f(x,y) = 2x + 3y².
    Table31(Table31Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Method {
    /// Digit filtering up to 1000 points, direct enumeration above.
    #[default]
    Auto,
    Fast,
    Direct,
    Block,
}

#[derive(Debug, Clone, Args, Default)]
pub struct Source1D {
    /// LS sequence with parameters L,S.
    #[arg(long, value_name = "L,S", value_parser = parse_ls)]
    pub ls: Option<LSParams>,
    /// van der Corput sequence φ₂(1), φ₂(2), ….
    #[arg(long)]
    pub vdc: bool,
    /// Kronecker sequence {nθ}.
    #[arg(long, value_name = "THETA", allow_hyphen_values = true)]
    pub kronecker: Option<f64>,
    /// How LS points are produced.
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bases(pub [u32; 2]);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LsPair(pub LSParams, pub LSParams);

#[derive(Debug, Clone, Args, Default)]
pub struct Source2D {
    /// van der Corput set (n/N, φ₂(n)).
    #[arg(long)]
    pub vdc2d: bool,
    /// Halton sequence with bases B1,B2.
    #[arg(long, value_name = "B1,B2", value_parser = parse_bases)]
    pub halton: Option<Bases>,
    /// LS set (n/N, ξ_{L,S}).
    #[arg(long, value_name = "L,S", value_parser = parse_ls)]
    pub ls_vdc: Option<LSParams>,
    /// Pairs (ξ_{L1,S1}, ξ_{L2,S2}).
    #[arg(long, value_name = "L1,S1xL2,S2", value_parser = parse_ls_pair)]
    pub ls_halton: Option<LsPair>,
    /// Seeded pseudo-random points.
    #[arg(long, value_name = "SEED")]
    pub random: Option<u64>,
    /// Accept Halton bases sharing a factor.
    #[arg(long)]
    pub allow_shared_factors: bool,
    /// Index points from 0: x = (n−1)/N and radical inverses of n−1.
    #[arg(long)]
    pub open_right: bool,
}

#[derive(Debug, Args)]
pub struct PointsArgs {
    #[command(flatten)]
    pub source: Source1D,
    /// Number of points.
    #[arg(short = 'n', long = "count")]
    pub n: usize,
    /// Output file (stdout if omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    /// LS-partition with parameters L,S.
    #[arg(long, value_name = "L,S", value_parser = parse_ls)]
    pub ls: Option<LSParams>,
    /// Kakutani α-refinement.
    #[arg(long, value_name = "ALPHA")]
    pub kakutani: Option<f64>,
    /// Number of refinement steps.
    #[arg(long)]
    pub depth: u32,
    /// Largest interval count allowed.
    #[arg(long, default_value_t = lsseq_core::partition::DEFAULT_CAP)]
    pub cap: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    #[arg(long, value_name = "L,S", value_parser = parse_ls)]
    pub ls: LSParams,
    #[arg(long)]
    pub depth: u32,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Points2dArgs {
    #[command(flatten)]
    pub source: Source2D,
    #[arg(short = 'n', long = "count")]
    pub n: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct DiscrepancyArgs {
    /// CSV point file (`index,x` or `index,x,y`).
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub source1: Source1D,
    #[command(flatten)]
    pub source2: Source2D,
    /// Number of generated points (ignored with --input).
    #[arg(short = 'n', long = "count")]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Use the brute-force counting oracle instead of the fast sweep.
    #[arg(long)]
    pub oracle: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    #[command(flatten)]
    pub source: Source2D,
    /// Integrand name (poly23, const1, box_quarter, cos_product).
    #[arg(long, default_value = "poly23")]
    pub integrand: String,
    #[arg(short = 'n', long = "count", conflicts_with = "ns")]
    pub n: Option<usize>,
    /// Sample sizes of a convergence study, comma separated.
    #[arg(long = "Ns", value_delimiter = ',')]
    pub ns: Vec<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Table31Args {
    /// Sample sizes, comma separated.
    #[arg(long = "Ns", value_delimiter = ',', default_values_t = lsseq_core::qmc::TABLE_NS)]
    pub ns: Vec<usize>,
    /// Index points from 0: x = (n−1)/N and radical inverses of n−1.
    #[arg(long)]
    pub open_right: bool,
    /// Compare the two LS generators with each other's printed column.
    #[arg(long)]
    pub swap_ls_columns: bool,
    /// Seed of the pseudo-random baseline.
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// CSV destination; the summary then goes to stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

pub fn parse_ls(s: &str) -> Result<LSParams, String> {
    let (l, r) = s.split_once(',').ok_or_else(|| format!("expected L,S, got {s:?}"))?;
    let l: i64 = l.trim().parse().map_err(|_| format!("bad L in {s:?}"))?;
    let r: i64 = r.trim().parse().map_err(|_| format!("bad S in {s:?}"))?;
    solve_beta(l, r).map_err(|e| e.to_string())
}

fn parse_ls_pair(s: &str) -> Result<LsPair, String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected L1,S1xL2,S2, got {s:?}"))?;
    Ok(LsPair(parse_ls(a)?, parse_ls(b)?))
}

fn parse_bases(s: &str) -> Result<Bases, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("expected two bases B1,B2, got {s:?}"));
    };
    let parse = |v: &str| v.trim().parse::<u32>().map_err(|_| format!("bad base {v:?}"));
    Ok(Bases([parse(a)?, parse(b)?]))
}

impl Source2D {
    pub fn generator(&self) -> anyhow::Result<Option<Generator2D>> {
        let mut found = Vec::new();
        if self.vdc2d {
            found.push(Generator2D::VanDerCorput);
        }
        if let Some(Bases(bases)) = self.halton {
            found.push(Generator2D::Halton { bases, allow_shared_factors: self.allow_shared_factors });
        }
        if let Some(p) = self.ls_vdc {
            found.push(Generator2D::LsVdc(p));
        }
        if let Some(LsPair(a, b)) = self.ls_halton {
            found.push(Generator2D::LsHalton(a, b));
        }
        if let Some(seed) = self.random {
            found.push(Generator2D::Random { seed });
        }
        match found.len() {
            0 => Ok(None),
            1 => Ok(found.pop()),
            _ => Err(anyhow!("choose exactly one planar generator")),
        }
    }

    pub fn convention(&self) -> lsseq_core::classic::IndexConvention {
        if self.open_right {
            lsseq_core::classic::IndexConvention::ZeroBased
        } else {
            lsseq_core::classic::IndexConvention::OneBased
        }
    }
}

/// Failure of a subcommand after argument parsing.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Self { code: EXIT_FAILURE, error: e.into() }
    }
}

/// Splices the entries of `--config FILE` into the argument list.
fn expand_config(args: Vec<OsString>) -> anyhow::Result<Vec<OsString>> {
    let mut path = None;
    let mut iter = args.iter();
    while let Some(a) = iter.next() {
        let a = a.to_string_lossy();
        if a == "--config" {
            path = iter.next().map(PathBuf::from);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(PathBuf::from(p));
        }
    }
    let Some(path) = path else { return Ok(args) };
    let text = std::fs::read_to_string(&path).with_context(|| format!("cannot read config {}", path.display()))?;
    let mut out = args;
    out.extend(config::config_args(&text)?.into_iter().map(OsString::from));
    Ok(out)
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run(args: Vec<OsString>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match commands::dispatch(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(Failure { code, error }) => {
            let _ = writeln!(stderr, "error: {error:#}");
            code
        }
    }
}
