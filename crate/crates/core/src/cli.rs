//! Command-line front end. `-` in place of a file name reads standard
//! input. Exit status: 0 on success, 1 for bad input or a failed
//! precondition, 2 for an internal-consistency failure.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Coloring, ListAssignment};
use crate::corpus::{self, CorpusConfig};
use crate::error::Error;
use crate::generators::{generate, GeneratorKind, GeneratorSpec};
use crate::graph::Graph;
use crate::{greedy, solver, symmetry};

#[derive(Debug, Parser)]
#[command(
    name = "distinguish",
    version,
    about = "Proper distinguishing colorings of graphs with girth at least 5"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color with at most max degree + 1 colors and certify the result.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color with at most max degree + 2 colors from a root (1-indexed).
    Color2 {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Color from lists of at least max degree + 2 colors; random lists
    /// drawn from 1..=3(max degree + 2) when no file is given.
    Listcolor {
        graph: PathBuf,
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that a coloring is proper and distinguishing.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Exact distinguishing chromatic number (at most 10 vertices).
    Exact { graph: PathBuf },
    /// Print a generated graph.
    Gen {
        kind: GeneratorKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the acceptance suite.
    Corpus {
        #[arg(long, default_value_t = corpus::DEFAULT_SEED)]
        seed: u64,
        /// Random runs for the greedy-bound and propagation checks.
        #[arg(long, default_value_t = corpus::DEFAULT_COUNT)]
        count: usize,
    },
}

enum Failure {
    Input(String),
    Lib(Error),
    Suite,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<crate::error::ParseError> for Failure {
    fn from(e: crate::error::ParseError) -> Self {
        Failure::Lib(e.into())
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            if std::mem::replace(&mut self.stdin_used, true) {
                return Err(Failure::Input("standard input can be read only once".into()));
            }
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
    }

    fn graph(&mut self, path: &PathBuf) -> Result<Graph, Failure> {
        Ok(Graph::parse_dimacs(&self.read(path)?)?)
    }

    fn print(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("writing output: {e}")))
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.stderr, "{text}");
    }
}

/// Runs one command line (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
        stdin_used: false,
    };
    match execute(cli.command, &mut io) {
        Ok(()) => 0,
        Err(Failure::Input(msg)) => {
            io.note(&format!("error: {msg}"));
            1
        }
        Err(Failure::Lib(e)) => {
            io.note(&format!("error: {e}"));
            if e.is_internal() {
                2
            } else {
                1
            }
        }
        Err(Failure::Suite) => 2,
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<(), Failure> {
    match command {
        Command::Solve { graph, out } => {
            let g = io.graph(&graph)?;
            let result = match solver::solve(&g) {
                Err(Error::IsSixCycle) => {
                    io.note("c input is the 6-cycle, which needs 4 colors; using its dedicated construction");
                    solver::solve_c6_extension(&g)?
                }
                other => other?,
            };
            let text = result.to_text();
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
                None => io.print(&text),
            }
        }
        Command::Color2 { graph, root } => {
            let g = io.graph(&graph)?;
            if root == 0 || root > g.n() {
                return Err(Error::InvalidVertex { vertex: root, n: g.n() }.into());
            }
            let coloring = greedy::color_delta_plus_2(&g, root - 1)?;
            io.print(&format!(
                "c colors={}\n{}",
                coloring.distinct_colors(),
                coloring.to_text()
            ))
        }
        Command::Listcolor { graph, lists, seed } => {
            let g = io.graph(&graph)?;
            let lists = match lists {
                Some(path) => ListAssignment::parse(&io.read(&path)?, g.n())?,
                None => corpus::random_lists(&g, &mut ChaCha8Rng::seed_from_u64(seed)),
            };
            let coloring = greedy::list_color_delta_plus_2(&g, &lists)?;
            let mut text = String::new();
            for line in lists.to_text().lines() {
                text.push_str(&format!("c {line}\n"));
            }
            text.push_str(&coloring.to_text());
            io.print(&text)
        }
        Command::Verify { graph, coloring } => {
            let g = io.graph(&graph)?;
            let c = Coloring::parse(&io.read(&coloring)?, g.n())?;
            let verdict = symmetry::is_distinguishing(&g, &c)?;
            match verdict.witness {
                None => io.print("distinguishing\n"),
                Some(w) => io.print(&format!("not distinguishing\n{}", w.to_text())),
            }
        }
        Command::Exact { graph } => {
            let g = io.graph(&graph)?;
            let chi = symmetry::exact_chi_d(&g)?;
            io.print(&format!("{chi}\n"))
        }
        Command::Gen { kind, n, d, seed } => {
            let g = generate(&GeneratorSpec { kind, n, d, seed })?;
            io.print(&g.to_dimacs())
        }
        Command::Corpus { seed, count } => {
            let reports = corpus::run_all(&CorpusConfig { seed, count });
            io.print(&corpus::render_table(&reports))?;
            if reports.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::Suite)
            }
        }
    }
}
