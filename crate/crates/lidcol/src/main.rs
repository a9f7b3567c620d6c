//! Command-line front end: graph generation, colouring, verification,
//! exact solving and a bound-vs-actual benchmark table.
//!
//! Exit codes: 0 success / valid, 1 invalid colouring or bench errors,
//! 2 input or parse errors, 3 inconclusive search.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use lidcol::colouring::{verify, Mode};
use lidcol::construct::{applied_bound, lid_colour, slid_colour, slid_colour_chordal, BoundRule};
use lidcol::exact::{min_number, ExactStatus, SearchBudget, MAX_SOLVER_PALETTE};
use lidcol::formats::{parse_colouring, parse_graph, serialize_colouring, serialize_graph};
use lidcol::special::{
    gen_complete, gen_cycle, gen_ktree, gen_path, gen_projective_incidence, gen_random_connected,
};
use lidcol::Error;

#[derive(Parser)]
#[command(name = "lidcol", version, about = "Locally identifying graph colourings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliMode {
    Lid,
    Slid,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Lid => Mode::Lid,
            CliMode::Slid => Mode::Slid,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file on standard output
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Construct a lid/slid colouring and print it as a colouring file
    Color {
        #[arg(long, value_enum)]
        mode: CliMode,
        /// Use the chordal construction (input must be chordal)
        #[arg(long)]
        chordal: bool,
        graph: PathBuf,
    },
    /// Check a colouring file against a graph file
    Verify {
        #[arg(long, value_enum)]
        mode: CliMode,
        graph: PathBuf,
        colouring: PathBuf,
    },
    /// Exact lid/slid chromatic number by exhaustive search
    Exact {
        #[arg(long, value_enum)]
        mode: CliMode,
        graph: PathBuf,
        /// Largest palette size to try (default: min(n, 63))
        #[arg(long)]
        max_k: Option<u32>,
        /// Wall-clock limit in seconds
        #[arg(long)]
        time_limit: Option<f64>,
        /// Search-node limit
        #[arg(long)]
        node_limit: Option<u64>,
        /// Write the optimal colouring here instead of standard output
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Colour every graph file in a directory and print a TSV table
    Bench {
        #[arg(long, value_enum)]
        mode: CliMode,
        corpus: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Cycle { n: usize },
    Path { n: usize },
    Complete { k: usize },
    Random {
        n: usize,
        delta: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Ktree {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Projective { q: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::Cycle { n } => gen_cycle(n)?,
                GenKind::Path { n } => gen_path(n)?,
                GenKind::Complete { k } => gen_complete(k)?,
                GenKind::Random { n, delta, seed } => gen_random_connected(n, delta, seed)?,
                GenKind::Ktree { n, k, seed } => gen_ktree(n, k, seed)?,
                GenKind::Projective { q } => gen_projective_incidence(q)?,
            };
            print!("{}", serialize_graph(&g));
            Ok(0)
        }
        Command::Color {
            mode,
            chordal,
            graph,
        } => cmd_color(mode.into(), chordal, &graph),
        Command::Verify {
            mode,
            graph,
            colouring,
        } => cmd_verify(mode.into(), &graph, &colouring),
        Command::Exact {
            mode,
            graph,
            max_k,
            time_limit,
            node_limit,
            witness_out,
        } => cmd_exact(mode.into(), &graph, max_k, time_limit, node_limit, witness_out),
        Command::Bench { mode, corpus } => cmd_bench(mode.into(), &corpus),
    }
}

fn cmd_color(mode: Mode, chordal: bool, graph_path: &Path) -> Result<u8, Error> {
    let g = parse_graph(&read_file(graph_path)?)?;
    let (colouring, rule, bound) = if chordal {
        let c = slid_colour_chordal(&g)?;
        let peo = g.chordal_peo().expect("chordal construction succeeded");
        let omega = g.clique_number_chordal(&peo).expect("PEO is valid");
        let bound = c.palette_size();
        (
            c,
            BoundRule::Chordal {
                omega,
                delta: g.max_degree(),
            },
            bound,
        )
    } else {
        let c = match mode {
            Mode::Lid => lid_colour(&g),
            Mode::Slid => slid_colour(&g),
        };
        let (rule, bound) = applied_bound(&g, mode);
        (c, rule, bound)
    };
    let report = verify(&g, &colouring, mode);
    let verdict = match mode {
        Mode::Lid => report.is_lid,
        Mode::Slid => report.is_slid,
    };
    assert!(verdict, "constructed colouring failed verification");
    let d = g.degeneracy_ordering().width;
    eprintln!(
        "graph: n={} m={} max_degree={} degeneracy={}",
        g.n(),
        g.m(),
        g.max_degree(),
        d
    );
    eprintln!("bound rule: {rule}");
    eprintln!(
        "colours used: {} (palette {}, bound {bound})",
        colouring.colours_used(),
        colouring.palette_size()
    );
    print!("{}", serialize_colouring(&colouring));
    Ok(0)
}

fn cmd_verify(mode: Mode, graph_path: &Path, colouring_path: &Path) -> Result<u8, Error> {
    let g = parse_graph(&read_file(graph_path)?)?;
    let c = parse_colouring(&read_file(colouring_path)?)?;
    if c.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "graph has {} vertices but colouring has {}",
            g.n(),
            c.len()
        )));
    }
    let report = verify(&g, &c, mode);
    let (verdict, label) = match mode {
        Mode::Lid => (report.is_lid, "lid"),
        Mode::Slid => (report.is_slid, "slid"),
    };
    if verdict {
        println!("OK: colouring is {label}");
        return Ok(0);
    }
    println!("FAIL: colouring is not {label}");
    if !report.improper_edges.is_empty() {
        println!("improper edges: {:?}", report.improper_edges);
    }
    if !report.bad_edges.is_empty() {
        println!("bad edges: {:?}", report.bad_edges);
    }
    if mode == Mode::Slid {
        if !report.injectivity_violations.is_empty() {
            println!(
                "local injectivity violations: {:?}",
                report.injectivity_violations
            );
        }
        if !report.distance2_violations.is_empty() {
            println!("distance-2 violations: {:?}", report.distance2_violations);
        }
    }
    Ok(1)
}

fn cmd_exact(
    mode: Mode,
    graph_path: &Path,
    max_k: Option<u32>,
    time_limit: Option<f64>,
    node_limit: Option<u64>,
    witness_out: Option<PathBuf>,
) -> Result<u8, Error> {
    let g = parse_graph(&read_file(graph_path)?)?;
    if let Some(k) = max_k {
        if k > MAX_SOLVER_PALETTE {
            return Err(Error::InvalidInput(format!(
                "--max-k is capped at {MAX_SOLVER_PALETTE}"
            )));
        }
    }
    let budget = SearchBudget {
        max_palette: max_k.unwrap_or((g.n() as u32).min(MAX_SOLVER_PALETTE)),
        node_limit,
        time_limit: time_limit.map(Duration::from_secs_f64),
    };
    let result = min_number(&g, mode, &budget);
    match result.status {
        ExactStatus::Exact => {
            let value = result.value.expect("exact result carries a value");
            let witness = result.witness.expect("exact result carries a witness");
            println!("{value}");
            match witness_out {
                Some(path) => fs::write(&path, serialize_colouring(&witness)).map_err(|e| {
                    Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{}", serialize_colouring(&witness)),
            }
            Ok(0)
        }
        ExactStatus::LowerBoundOnly => {
            println!("inconclusive");
            if let Some(lb) = result.value {
                eprintln!("proved only a lower bound: chromatic number >= {lb}");
            }
            Ok(3)
        }
        ExactStatus::Inconclusive => {
            println!("inconclusive");
            Ok(3)
        }
    }
}

fn cmd_bench(mode: Mode, corpus: &Path) -> Result<u8, Error> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", corpus.display())))?
        .filter_map(|entry| entry.ok())
        .map(|entry| entry.path())
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    println!("name\tn\tm\tdelta\td\tcolours\tbound\texact\tms");
    let mut failures = 0;
    for path in files {
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let row = bench_row(mode, &path);
        match row {
            Ok(row) => println!("{name}\t{row}"),
            Err(err) => {
                println!("{name}\tERROR\t{err}");
                failures += 1;
            }
        }
    }
    Ok(if failures > 0 { 1 } else { 0 })
}

fn bench_row(mode: Mode, path: &Path) -> Result<String, Error> {
    let g = parse_graph(&read_file(path)?)?;
    let started = Instant::now();
    let colouring = match mode {
        Mode::Lid => lid_colour(&g),
        Mode::Slid => slid_colour(&g),
    };
    let elapsed = started.elapsed().as_millis();
    let (_, bound) = applied_bound(&g, mode);
    assert!(colouring.colours_used() as u32 <= bound);
    // node-limited only, so the column is deterministic
    let exact = if g.n() <= 12 {
        let budget = SearchBudget {
            max_palette: (g.n() as u32).min(MAX_SOLVER_PALETTE),
            node_limit: Some(2_000_000),
            time_limit: None,
        };
        match min_number(&g, mode, &budget) {
            r if r.status == ExactStatus::Exact => r.value.unwrap().to_string(),
            _ => "-".to_string(),
        }
    } else {
        "-".to_string()
    };
    Ok(format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        g.n(),
        g.m(),
        g.max_degree(),
        g.degeneracy_ordering().width,
        colouring.colours_used(),
        bound,
        exact,
        elapsed
    ))
}
