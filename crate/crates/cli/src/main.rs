mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use raag_core::{limits, Property, RaagError, Route};

use report::Report;

#[derive(Parser)]
#[command(
    name = "raag",
    version,
    about = "Certificates for right-angled Artin groups over small graphs"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Length budget for bounded witness searches in pearl checks.
    #[arg(long, global = true, default_value_t = raag_core::pearls::DEFAULT_BUDGET)]
    budget: usize,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Summary of a graph, or an isomorphism test against another.
    Graph {
        graph: String,
        #[arg(long)]
        iso: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Summary)]
        format: GraphFormat,
    },
    /// Word problem and related computations in A(graph).
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
    /// Classify an element of an ear RAAG as an inner, end or non-pearl.
    Pearl {
        word: String,
        #[arg(long)]
        graph: String,
        /// End point of a cycle ear.
        #[arg(long)]
        marked: Option<usize>,
    },
    /// Verify a decorated ear (JSON) as a pearl chain.
    Chain { file: String },
    /// Find an ear decomposition, or verify a given one with `--verify`.
    Decompose {
        graph: String,
        #[arg(long, value_enum)]
        kind: DecompositionKind,
        #[arg(long)]
        verify: Option<String>,
    },
    /// Glue an assembly plan (JSON), or derive a plan from a graph with `--from`.
    Assemble {
        plan: Option<String>,
        #[arg(long, conflicts_with = "plan")]
        from: Option<String>,
    },
    /// Search for a minor, or verify a branch-set witness with `--verify`.
    Minor {
        host: String,
        pattern: String,
        #[arg(long)]
        verify: Option<String>,
        /// Also list the deletion, identification and abelianising steps.
        #[arg(long)]
        sequences: bool,
    },
    /// Is `big` a subdivision of `small`? Without `small`, fully smooth `big`.
    /// With `--contains`, look for a subdivision of `small` inside `big`.
    Subdivision {
        big: String,
        small: Option<String>,
        #[arg(long, requires = "small")]
        contains: bool,
        #[arg(long, requires = "contains")]
        verify: Option<String>,
    },
    /// Decide a graph property by the group-theoretic route, a direct oracle, or both.
    Classify {
        graph: String,
        #[arg(long, value_parser = parse_property)]
        property: Property,
        #[arg(long, value_parser = parse_route, default_value = "both")]
        route: Route,
    },
    /// List graphs on `n` labeled vertices.
    Enumerate {
        n: usize,
        #[arg(long)]
        connected: bool,
        /// One representative per isomorphism class.
        #[arg(long)]
        classes: bool,
    },
}

#[derive(Subcommand)]
enum WordOp {
    /// Exit 0 iff the two words are equal in the group.
    Eq {
        a: String,
        b: String,
        #[arg(long)]
        graph: String,
    },
    Normalize {
        word: String,
        #[arg(long)]
        graph: String,
    },
    /// Cyclic reduction `w = g·core·g⁻¹`.
    Reduce {
        word: String,
        #[arg(long)]
        graph: String,
    },
    Abelianize {
        word: String,
        #[arg(long)]
        graph: String,
    },
    /// Centralizer description; the graph must be a path or a cycle.
    Centralizer {
        word: String,
        #[arg(long)]
        graph: String,
    },
    /// Exit 0 iff the word is primitive in the free group on two non-adjacent vertices.
    Primitive {
        word: String,
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_pair)]
        pair: (usize, usize),
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Summary,
    EdgeList,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecompositionKind {
    Loose,
    Standard,
    Proper,
    Nested,
    Odd,
    #[value(name = "3conn")]
    ThreeConn,
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: RaagError| e.to_string())
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: RaagError| e.to_string())
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two vertex ids as a,b")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(RaagError),
}

impl From<RaagError> for CliError {
    fn from(e: RaagError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_capacity() => 3,
            CliError::Core(RaagError::RouteDisagreement { .. }) => 4,
            _ => 2,
        }
    }

    fn class(&self) -> &'static str {
        match self.exit_code() {
            3 => "capacity",
            4 => "route-disagreement",
            _ => "input",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Ok(v) = std::env::var("RAAG_MAX_VERTICES") {
        let n = v.parse::<usize>().map_err(|_| {
            CliError::Input(format!("RAAG_MAX_VERTICES={v:?} is not a vertex count"))
        })?;
        limits::set_override(Some(n));
    }
    commands::dispatch(&cli.verb, cli.budget)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({ "error": e.class(), "message": e.message() });
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            } else {
                eprintln!("error: {}", e.message());
            }
            ExitCode::from(e.exit_code())
        }
    }
}
