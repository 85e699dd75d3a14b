//! The `invgame` command line.
//!
//! Game and sequence arguments are catalog keys or paths to JSON documents
//! (see [`format`]). Exit status is 0 on success, 2 when a check returns a
//! negative verdict and 1 on an operational error. Errors are printed as
//! `invgame: error[<code>]: <message>`.

pub mod format;
pub mod render;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::board::{GameSpec, Position};
use crate::catalog;
use crate::error::{Error, Result};
use crate::feasibility::{certify_infeasible, claimed_from_pair, FeasibilityVerdict};
use crate::sequences::{check_sac, SequencePair, TParam};
use crate::solver::solve_with;
use crate::star::{iterate_star, sequence_game, verify_duality};
use format::Document;

#[derive(Debug, Parser)]
#[command(name = "invgame", version, about = "Solve and dualise two-pile invariant subtraction games")]
pub struct Cli {
    /// Worker threads (default: all cores); never changes output.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Pbm,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TArg(pub TParam);

impl FromStr for TArg {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "auto" {
            return Ok(TArg(TParam::Auto));
        }
        s.parse::<u64>()
            .ok()
            .filter(|&t| t >= 1)
            .map(|t| TArg(TParam::Fixed(t)))
            .ok_or_else(|| format!("expected `auto` or a positive integer, got `{s}`"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// P-positions in [0, X]² as CSV.
    Solve {
        game: String,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The dual game, as a JSON spec with an explicit move list.
    Star {
        game: String,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        times: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check both duality equations for a sequence pair on [0, X]².
    DualCheck {
        source: String,
        #[arg(long)]
        bound: u64,
    },
    /// Check the t-SAC conditions on a sequence prefix.
    SacCheck {
        source: String,
        #[arg(long, default_value = "auto")]
        t: TArg,
        #[arg(long, default_value_t = 1000)]
        horizon: usize,
    },
    /// Look for a certificate that no invariant game has the claimed P-set.
    Feasible {
        source: String,
        #[arg(long)]
        bound: u64,
    },
    /// Bitmap of the P-set.
    Plot {
        game: String,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = PlotFormat::Pbm)]
        format: PlotFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Negative,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Negative => 2,
        }
    }

    fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Success
        } else {
            Outcome::Negative
        }
    }
}

enum Input {
    Catalog(catalog::CatalogEntry),
    File(Document),
}

fn resolve(arg: &str) -> Result<Input> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return Ok(Input::File(format::parse_document(&text)?));
    }
    Ok(Input::Catalog(catalog::get(arg)?))
}

fn game_for(arg: &str, bound: u64) -> Result<GameSpec> {
    match resolve(arg)? {
        Input::Catalog(e) => e.spec(bound),
        Input::File(Document::Game(g)) => Ok(g),
        Input::File(Document::Sequence(p)) => Ok(sequence_game(&p.covering(bound)?, arg)),
        Input::File(Document::Claimed(_)) => Err(Error::domain(format!("`{arg}` is a claimed set, not a game"))),
    }
}

fn sequence_for(arg: &str, cover: Option<u64>, horizon: usize) -> Result<SequencePair> {
    match resolve(arg)? {
        Input::Catalog(e) => match cover {
            Some(x) => e.pair_covering(x),
            None => e.pair(horizon),
        },
        Input::File(Document::Sequence(p)) => match cover {
            Some(x) => p.covering(x),
            None => Ok(p.truncate(horizon)),
        },
        Input::File(_) => Err(Error::domain(format!("`{arg}` is not a sequence pair"))),
    }
}

fn claimed_for(arg: &str, bound: u64, jobs: usize) -> Result<BTreeSet<Position>> {
    match resolve(arg)? {
        Input::Catalog(e) => e.claimed_set(bound),
        Input::File(Document::Claimed(c)) => Ok(c),
        Input::File(Document::Sequence(p)) => Ok(claimed_from_pair(&p)),
        Input::File(Document::Game(g)) => Ok(solve_with(&g, bound, jobs)?.p_positions().into_iter().collect()),
    }
}

fn emit(text: &str, out_path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match out_path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Runs a parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let jobs = cli.jobs.unwrap_or_else(default_jobs).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::domain(format!("cannot start {jobs} workers: {e}")))?;
    let mut buf = Vec::new();
    let outcome = pool.install(|| dispatch(&cli.command, jobs, &mut buf));
    out.write_all(&buf)?;
    outcome
}

fn dispatch(cmd: &Command, jobs: usize, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Solve { game, bound, out: path } => {
            let table = solve_with(&game_for(game, *bound)?, *bound, jobs)?;
            emit(&render::csv(&table), path.as_deref(), out)?;
            Ok(Outcome::Success)
        }
        Command::Star { game, bound, times, out: path } => {
            let dual = iterate_star(&game_for(game, *bound)?, *times, *bound)?;
            emit(&format::spec_to_string(&dual), path.as_deref(), out)?;
            Ok(Outcome::Success)
        }
        Command::DualCheck { source, bound } => {
            let report = verify_duality(&sequence_for(source, Some(*bound), 0)?, *bound)?;
            writeln!(out, "{report}")?;
            Ok(Outcome::from_pass(report.passed()))
        }
        Command::SacCheck { source, t, horizon } => {
            let report = check_sac(&sequence_for(source, None, *horizon)?, t.0);
            writeln!(out, "{report}")?;
            Ok(Outcome::from_pass(report.overall))
        }
        Command::Feasible { source, bound } => {
            let report = certify_infeasible(&claimed_for(source, *bound, jobs)?, *bound)?;
            writeln!(out, "{report}")?;
            Ok(Outcome::from_pass(report.verdict == FeasibilityVerdict::NoObstructionFound))
        }
        Command::Plot { game, bound, format, out: path } => {
            if *bound == 0 {
                return Err(Error::domain("plot needs --bound >= 1"));
            }
            let table = solve_with(&game_for(game, *bound)?, *bound, jobs)?;
            let text = match format {
                PlotFormat::Pbm => render::pbm(&table),
                PlotFormat::Matrix => render::matrix(&table),
            };
            emit(&text, path.as_deref(), out)?;
            Ok(Outcome::Success)
        }
    }
}

/// Parses `args`, runs, reports errors on `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            if e.use_stderr() {
                let first = e.to_string();
                let line = first.lines().next().unwrap_or("").trim_start_matches("error: ");
                let _ = writeln!(err, "invgame: error[usage]: {line}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(o) => o.exit_code(),
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "invgame: error[{}]: {msg}", e.code());
            1
        }
    }
}
