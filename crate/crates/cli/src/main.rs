use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use nervekit::driver::{run_and_write, Invocation, Space, Verb};
use nervekit::verify::Coefficients;

/// Exact computations with nerves of simplicial categories.
///
/// Commands: validate, nerve, binerve, hcnerve, bspace, diag, compare, cls,
/// theta, homology, pi0, horncheck, uniq-check, example.
#[derive(Parser, Debug)]
#[command(name = "nervekit", version)]
struct Cli {
    /// The command to run.
    #[arg(value_parser = parse_verb)]
    command: Verb,

    /// Example name for `example` (same as --example).
    name: Option<String>,

    /// Build the input from the example library, e.g. bg:z2 or discrete:poset01.
    #[arg(long)]
    example: Option<String>,

    /// Read the input from a JSON file.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,

    /// Write the report here instead of stdout.
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,

    /// Write the constructed object here, in the file format.
    #[arg(long, value_name = "FILE")]
    save: Option<PathBuf>,

    /// Truncation level.
    #[arg(short = 'd', long)]
    max_dim: Option<usize>,

    /// Rows of a bisimplicial construction.
    #[arg(long)]
    rows: Option<usize>,

    /// Columns of a bisimplicial construction.
    #[arg(long)]
    cols: Option<usize>,

    /// Homology coefficients: z or f2.
    #[arg(long, default_value = "f2", value_parser = parse_coeff)]
    coeff: Coefficients,

    /// Space for homology, pi0 and horncheck on a category: bspace, hcnerve, nerve or homs.
    #[arg(long, value_parser = parse_space)]
    space: Option<Space>,

    /// A single horn for horncheck, as n,k.
    #[arg(long, value_parser = parse_horn)]
    horn: Option<(usize, usize)>,

    /// Inner horns only.
    #[arg(long)]
    inner: bool,

    /// Highest cosimplicial degree for uniq-check.
    #[arg(long, default_value_t = 2)]
    max_cosimplicial: usize,

    /// Also build the classification diagram and check theta as a map into it.
    #[arg(long)]
    into_cls: bool,

    /// Include cell tables in the report.
    #[arg(long)]
    emit_cells: bool,

    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Plain-text rendering instead of JSON.
    #[arg(long)]
    text: bool,

    /// Include stage timings (outside the digest).
    #[arg(long)]
    timings: bool,
}

fn parse_verb(s: &str) -> Result<Verb, String> {
    s.parse().map_err(|e: nervekit::Error| e.to_string())
}

fn parse_coeff(s: &str) -> Result<Coefficients, String> {
    s.parse().map_err(|e: nervekit::Error| e.to_string())
}

fn parse_space(s: &str) -> Result<Space, String> {
    s.parse().map_err(|e: nervekit::Error| e.to_string())
}

fn parse_horn(s: &str) -> Result<(usize, usize), String> {
    let (n, k) = s.split_once(',').ok_or("expected n,k")?;
    Ok((n.trim().parse().map_err(|_| "bad n")?, k.trim().parse().map_err(|_| "bad k")?))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.name.is_some() && cli.example.is_some() {
        eprintln!("error: give the example name once");
        return ExitCode::from(2);
    }
    let mut inv = Invocation::new(cli.command);
    inv.example = cli.name.or(cli.example);
    inv.input = cli.input;
    inv.output = cli.output;
    inv.save = cli.save;
    inv.max_dim = cli.max_dim;
    inv.rows = cli.rows;
    inv.cols = cli.cols;
    inv.coeff = cli.coeff;
    inv.space = cli.space;
    inv.horn = cli.horn;
    inv.inner = cli.inner;
    inv.max_cosimplicial = cli.max_cosimplicial;
    inv.into_cls = cli.into_cls;
    inv.emit_cells = cli.emit_cells;
    inv.jobs = cli.jobs;
    inv.text = cli.text;
    inv.timings = cli.timings;
    ExitCode::from(run_and_write(&inv) as u8)
}
