//! Command-line front end. Results go to stdout, diagnostics to stderr.
//!
//! Exit codes: `0` success, `1` domain error (bad input file, failed
//! cross-check), `2` usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::classify::{classify, classify_geometric, classify_with, ClassifyOptions};
use crate::enumerate::{
    build_table_resumable, emit_posets, enumerate_posets, quotient_by_duality, TableRow,
};
use crate::error::{Error, Result};
use crate::format::{read_poset, to_text};
use crate::geometry::Hull;
use crate::polytope::PolytopeVertexSet;

#[derive(Debug, Parser)]
#[command(
    name = "poset-fano",
    version,
    about = "Fano polytopes of finite posets"
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide Q-factorial / smooth from the poset and print a JSON report.
    Classify {
        file: PathBuf,
        /// Recompute Fano, terminal and Gorenstein geometrically.
        #[arg(long)]
        verify: bool,
        /// List every passing walk.
        #[arg(long)]
        all_witnesses: bool,
        /// Use facet enumeration instead of the poset criterion.
        #[arg(long)]
        geometric: bool,
        /// Always run the full walk search, even for pure posets.
        #[arg(long)]
        no_shortcut: bool,
    },
    /// Print the vertices of Q_P, one per line.
    Vertices { file: PathBuf },
    /// Enumerate facets exactly and print them with the geometric flags as JSON.
    Oracle { file: PathBuf },
    /// Compare the classifier with the oracle on every poset with N elements.
    CrossCheck {
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Count posets up to isomorphism and duality, and the smooth ones.
    Table {
        #[arg(long)]
        max_d: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// CSV results file; existing rows are reused.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one file per isomorphism class, named by canonical key.
    Enumerate {
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Keep one representative per pair of dual posets.
        #[arg(long)]
        up_to_duality: bool,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let commands: Vec<String> = Cli::command()
                .get_subcommands()
                .map(|c| c.get_name().to_string())
                .collect();
            let _ = write!(err, "{}", e.render());
            let _ = writeln!(err, "\nValid commands: {}", commands.join(", "));
            return 2;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Error::BrokenPipe) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Classify {
            file,
            verify,
            all_witnesses,
            geometric,
            no_shortcut,
        } => {
            let p = read_poset(file)?;
            let report = if *geometric {
                classify_geometric(&p)?
            } else {
                let options = ClassifyOptions {
                    verify: *verify,
                    all_witnesses: *all_witnesses,
                    pure_shortcut: !*no_shortcut,
                };
                classify_with(&p, &options)?
            };
            write_json(out, &report)?;
            Ok(0)
        }
        Command::Vertices { file } => {
            let p = read_poset(file)?;
            let set = PolytopeVertexSet::build(&p.hat());
            if cli.json {
                let list: Vec<_> = set
                    .vertices()
                    .iter()
                    .enumerate()
                    .map(|(k, v)| json!({ "vertex": v, "edge": set.edge_of_vertex(k) }))
                    .collect();
                write_json(out, &list)?;
            } else {
                for v in set.vertices() {
                    writeln!(out, "{v}")?;
                }
            }
            Ok(0)
        }
        Command::Oracle { file } => {
            let p = read_poset(file)?;
            let hull = Hull::new(PolytopeVertexSet::build(&p.hat()).vertices().to_vec())?;
            let report = json!({
                "d": p.d(),
                "facets": hull.facets(),
                "fano": hull.is_fano()?,
                "terminal": hull.is_terminal()?,
                "gorenstein": hull.is_gorenstein(),
                "simplicial": hull.is_simplicial(),
                "smooth": hull.is_smooth()?,
            });
            write_json(out, &report)?;
            Ok(0)
        }
        Command::CrossCheck { d, jobs } => cross_check(*d, *jobs, cli.json, out, err),
        Command::Table {
            max_d,
            jobs,
            out: path,
        } => {
            let rows = build_table_resumable(*max_d, *jobs, path.as_deref())?;
            if cli.json {
                write_json(out, &rows)?;
            } else {
                write_table(out, &rows)?;
            }
            Ok(0)
        }
        Command::Enumerate {
            d,
            emit,
            up_to_duality,
        } => {
            let mut posets = enumerate_posets(*d)?;
            if *up_to_duality {
                posets = quotient_by_duality(&posets).representatives;
            }
            if let Some(dir) = emit {
                emit_posets(&posets, dir)?;
            }
            if cli.json {
                write_json(out, &json!({ "d": d, "count": posets.len() }))?;
            } else {
                writeln!(out, "{} posets with {d} elements", posets.len())?;
            }
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct Disagreement {
    poset: String,
    combinatorial: [bool; 2],
    geometric: [bool; 2],
}

fn cross_check(
    d: usize,
    jobs: Option<usize>,
    json_output: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let posets = enumerate_posets(d)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let outcomes: Vec<Result<Option<Disagreement>>> = pool.install(|| {
        posets
            .par_iter()
            .map(|p| {
                let fast = classify(p);
                let slow = classify_geometric(p)?;
                let fast_flags = [fast.q_factorial, fast.smooth];
                let slow_flags = [slow.q_factorial, slow.smooth];
                Ok((fast_flags != slow_flags).then(|| Disagreement {
                    poset: to_text(p),
                    combinatorial: fast_flags,
                    geometric: slow_flags,
                }))
            })
            .collect()
    });
    let mut disagreements = Vec::new();
    for outcome in outcomes {
        if let Some(bad) = outcome? {
            disagreements.push(bad);
        }
    }
    if json_output {
        write_json(
            out,
            &json!({ "d": d, "checked": posets.len(), "disagreements": disagreements }),
        )?;
    } else {
        writeln!(
            out,
            "d = {d}: checked {} posets, {} disagreements",
            posets.len(),
            disagreements.len()
        )?;
        for bad in &disagreements {
            writeln!(
                err,
                "disagreement (q-factorial, smooth): classifier {:?}, oracle {:?}\n{}",
                bad.combinatorial, bad.geometric, bad.poset
            )?;
        }
    }
    Ok(if disagreements.is_empty() { 0 } else { 1 })
}

fn write_table(out: &mut dyn Write, rows: &[TableRow]) -> Result<()> {
    writeln!(out, "{:>3} {:>8} {:>8}", "d", "posets", "smooth")?;
    for row in rows {
        writeln!(
            out,
            "{:>3} {:>8} {:>8}",
            row.d, row.poset_count, row.smooth_count
        )?;
    }
    Ok(())
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| match e.io_error_kind() {
        Some(std::io::ErrorKind::BrokenPipe) => Error::BrokenPipe,
        _ => Error::Io(e.to_string()),
    })?;
    writeln!(out)?;
    Ok(())
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
