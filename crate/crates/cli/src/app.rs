//! Command-line front end.

use crate::checks::{run, RunOptions};
use crate::load::{load, parse_scene, InputError, Loaded};
use crate::render::{render_svg, text_dump};
use crate::report::Report;
use crate::scene::Group;
use clap::{Args, Parser, Subcommand};
use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use strongnear::Adjacency;

#[derive(Debug, Parser)]
#[command(
    name = "strongnear",
    version,
    about = "Strong proximity checks on finite spaces and pixel grids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every check of a scene.
    Run(Common),
    /// Run the checks and draw the scene (grid scenes only).
    Render(Common),
    /// Axiom and compatibility checks.
    Axioms(Common),
    /// Nearness and intersection checks.
    Near(Common),
    /// Connectedness and decomposition checks.
    Connect(Common),
    /// Strong chain checks.
    Chain(Common),
    /// Strong proximal continuity and open-map checks.
    Spc(Common),
    /// Hyperspace checks.
    Hyper(Common),
    /// Descriptive nearness checks.
    Descriptive(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Scene file (JSON, schema version 1).
    pub scene: PathBuf,
    /// Output directory for the report and drawing.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Bound on the number of pieces in decomposition searches.
    #[arg(long)]
    pub max_pieces: Option<usize>,
    /// Pixel adjacency for grid connectivity.
    #[arg(long, value_parser = parse_adjacency)]
    pub adjacency: Option<Adjacency>,
    /// Evaluate checks in parallel.
    #[arg(long)]
    pub parallel: bool,
    /// Record per-check wall time in the report.
    #[arg(long)]
    pub timing: bool,
}

fn parse_adjacency(s: &str) -> Result<Adjacency, String> {
    let n: u8 = s.parse().map_err(|_| format!("expected 4 or 8, got {s:?}"))?;
    Adjacency::try_from(n)
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Run(c)
            | Command::Render(c)
            | Command::Axioms(c)
            | Command::Near(c)
            | Command::Connect(c)
            | Command::Chain(c)
            | Command::Spc(c)
            | Command::Hyper(c)
            | Command::Descriptive(c) => c,
        }
    }

    fn groups(&self) -> Option<Vec<Group>> {
        let g = match self {
            Command::Run(_) | Command::Render(_) => return None,
            Command::Axioms(_) => Group::Axioms,
            Command::Near(_) => Group::Near,
            Command::Connect(_) => Group::Connect,
            Command::Chain(_) => Group::Chain,
            Command::Spc(_) => Group::Spc,
            Command::Hyper(_) => Group::Hyper,
            Command::Descriptive(_) => Group::Descriptive,
        };
        Some(vec![g])
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Read and load a scene file; errors name the file.
pub fn load_file(path: &Path, adjacency: Option<Adjacency>) -> Result<Loaded, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let scene = parse_scene(&text).map_err(|e| InputError(format!("{}: {}", path.display(), e.0)))?;
    load(scene, adjacency).map_err(|e| InputError(format!("{}: {}", path.display(), e.0)))
}

/// Files written by one invocation.
#[derive(Debug, Default)]
pub struct Outputs {
    pub report: Option<PathBuf>,
    pub drawing: Option<PathBuf>,
}

fn write(path: PathBuf, text: &str) -> Result<PathBuf, InputError> {
    std::fs::write(&path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Execute a parsed command line; returns the report and the process exit
/// code.
pub fn execute(cmd: &Command) -> Result<(Report, Outputs, i32), InputError> {
    let c = cmd.common();
    let loaded = load_file(&c.scene, c.adjacency)?;
    let opts = RunOptions {
        seed: c.seed,
        max_pieces: c.max_pieces,
        timing: c.timing,
        parallel: c.parallel,
        groups: cmd.groups(),
    };
    let report = run(&loaded, &opts);
    std::fs::create_dir_all(&c.out).map_err(|e| InputError(format!("{}: {e}", c.out.display())))?;
    let name = &loaded.scene.name;
    let mut outputs = Outputs {
        report: Some(write(c.out.join(format!("{name}.report.json")), &report.to_json())?),
        drawing: None,
    };
    match render_svg(&loaded, &report) {
        Ok(svg) => outputs.drawing = Some(write(c.out.join(format!("{name}.svg")), &svg)?),
        Err(msg) => {
            outputs.drawing = Some(write(c.out.join(format!("{name}.txt")), &text_dump(&loaded))?);
            if matches!(cmd, Command::Render(_)) {
                return Err(InputError(format!("{msg}; wrote a text dump instead")));
            }
        }
    }
    let code = if report.all_ok() { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok((report, outputs, code))
}

fn print_summary(report: &Report) {
    let color = std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
    for r in &report.records {
        let tag = if r.ok { "ok  " } else { "FAIL" };
        let tag = match (color, r.ok) {
            (false, _) => tag.to_string(),
            (true, true) => format!("\x1b[32m{tag}\x1b[0m"),
            (true, false) => format!("\x1b[31m{tag}\x1b[0m"),
        };
        println!("{tag} {:<24} {}", r.verdict.as_str(), r.label);
    }
    println!(
        "{}: {} checks, {} ok, {} failed",
        report.scene, report.summary.records, report.summary.ok, report.summary.failed
    );
}

pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli.command) {
        Ok((report, _, code)) => {
            print_summary(&report);
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}
