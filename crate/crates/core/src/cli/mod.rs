//! Command-line front end.
//!
//! ```text
//! qtoric <subcommand> [fixtures:<name> | --input FILE] [--bound B]
//!        [--goal unimodular|all-positive] [--base-vertex LIST] [--jobs N]
//!        [--node-budget N] [--output FILE]
//! ```
//!
//! Exit codes: 0 when a check passes or output was produced, 1 when a check
//! fails, 2 on input errors.

pub mod commands;
pub mod document;
pub mod fixtures;
pub mod inputs;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::charsearch::Goal;
use crate::error::{Error, Result};

pub use commands::Options;
pub use document::{parse_bundle, parse_document, to_canonical_string, Document};
pub use inputs::Inputs;
pub use report::{Report, Verdict};

#[derive(Parser, Debug)]
#[command(name = "qtoric", version, about = "Exact checks for quasitoric and torus manifold data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug, Default)]
struct Flags {
    /// Entry bound B for search.
    #[arg(long, global = true)]
    bound: Option<i64>,
    #[arg(long, global = true, value_enum)]
    goal: Option<GoalArg>,
    /// Base vertex as 1-based facet labels, e.g. 2,1,3,7.
    #[arg(long, global = true, value_delimiter = ',')]
    base_vertex: Option<Vec<usize>>,
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    #[arg(long, global = true)]
    solution_cap: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GoalArg {
    Unimodular,
    AllPositive,
}

#[derive(Args, Debug)]
struct Source {
    /// `fixtures:<name>` or a path.
    source: Option<String>,
    #[arg(long)]
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    Fvector(Source),
    Hvector(Source),
    /// Pseudomanifold test and coherent orientation.
    Orient(Source),
    Dualize(Source),
    #[command(subcommand)]
    Cyclic(CyclicCommand),
    /// Facets of the cyclic polytope by Gale's evenness condition.
    Gale {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        dim: Option<usize>,
    },
    Polar(Source),
    OrientTuples(Source),
    CheckUnimodular(Source),
    Signs(Source),
    AlmostComplex(Source),
    FlipSolve(Source),
    FanCheck(Source),
    Search(Source),
    /// Print a built-in bundle, or list them.
    Fixtures {
        name: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CyclicCommand {
    /// Exact vertices and boundary complex of the cyclic polytope.
    Gen(Source),
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &Error) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn load(source: &Source) -> Result<Inputs> {
    match (&source.source, &source.input) {
        (Some(_), Some(_)) => Err(Error::Schema("give either a source or --input, not both".into())),
        (Some(s), None) | (None, Some(s)) => Inputs::load(s),
        (None, None) => Err(Error::Schema("no input: pass fixtures:<name> or --input FILE".into())),
    }
}

type Handler = fn(&Inputs, &Options) -> Result<Report>;

fn dispatch(command: &Command, opts: &Options) -> Result<Report> {
    use commands as c;
    let (source, run): (&Source, Handler) = match command {
        Command::Fvector(s) => (s, c::fvector),
        Command::Hvector(s) => (s, c::hvector),
        Command::Orient(s) => (s, c::orient),
        Command::Dualize(s) => (s, c::dualize_cmd),
        Command::Cyclic(CyclicCommand::Gen(s)) => (s, c::cyclic_gen),
        Command::Gale { source, .. } => {
            if source.source.is_none() && source.input.is_none() {
                let inputs = Inputs { provenance: "flags".into(), ..Inputs::default() };
                return c::gale(&inputs, opts);
            }
            (source, c::gale)
        }
        Command::Polar(s) => (s, c::polar),
        Command::OrientTuples(s) => (s, c::orient_tuples),
        Command::CheckUnimodular(s) => (s, c::check_unimodular),
        Command::Signs(s) => (s, c::signs),
        Command::AlmostComplex(s) => (s, c::almost_complex),
        Command::FlipSolve(s) => (s, c::flip_solve),
        Command::FanCheck(s) => (s, c::fan_check),
        Command::Search(s) => (s, c::search_cmd),
        Command::Fixtures { .. } => unreachable!("handled before dispatch"),
    };
    run(&load(source)?, opts)
}

fn fixtures_listing(name: Option<&str>) -> Outcome {
    match name {
        None => Outcome {
            code: 0,
            stdout: fixtures::NAMES.iter().map(|n| format!("{n}\n")).collect(),
            stderr: String::new(),
        },
        Some(n) => match fixtures::fixture(n).map(parse_bundle) {
            Some(Ok(docs)) => Outcome { code: 0, stdout: to_canonical_string(&docs), stderr: String::new() },
            Some(Err(e)) => Outcome::error(&e),
            None => Outcome::error(&Error::Io { path: format!("fixtures:{n}"), message: "no such fixture".into() }),
        },
    }
}

/// Runs the tool on `args` (including the program name) without touching
/// the process's streams; `--output` is honoured.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (n, dim) = match &cli.command {
        Command::Gale { n, dim, .. } => (*n, *dim),
        _ => (None, None),
    };
    let f = &cli.flags;
    let opts = Options {
        bound: f.bound,
        goal: f.goal.map(|g| match g {
            GoalArg::Unimodular => Goal::Unimodular,
            GoalArg::AllPositive => Goal::AllPositive,
        }),
        base_vertex: match &f.base_vertex {
            Some(b) if b.contains(&0) => {
                return Outcome::error(&Error::Schema("--base-vertex labels are 1-based".into()))
            }
            Some(b) => Some(b.iter().map(|x| x - 1).collect()),
            None => None,
        },
        jobs: f.jobs,
        node_budget: f.node_budget,
        solution_cap: f.solution_cap,
        n,
        dim,
    };

    let outcome = match &cli.command {
        Command::Fixtures { name } => fixtures_listing(name.as_deref()),
        command => match dispatch(command, &opts) {
            Ok(report) => Outcome { code: report.verdict.exit_code(), stdout: report.render(), stderr: String::new() },
            Err(e) => Outcome::error(&e),
        },
    };
    match (&f.output, outcome.code) {
        (Some(path), 0 | 1) => match std::fs::write(path, &outcome.stdout) {
            Ok(()) => Outcome { stdout: String::new(), ..outcome },
            Err(e) => Outcome::error(&Error::Io { path: path.clone(), message: e.to_string() }),
        },
        _ => outcome,
    }
}
