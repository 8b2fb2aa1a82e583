use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use signull::classify::{bound, classify};
use signull::generators::FamilySpec;
use signull::linalg::{graph_rank, multiplicity, nullity, Rational};
use signull::structure::summarize;
use signull::transforms::reduce;
use signull::verify::{verify, Selection, SignMode, Universe};
use signull::{format, Error, SignedGraph};

/// Exact nullity and extremal-structure tools for signed graphs.
///
/// Graph files start with `n <order>` followed by one `e <u> <v> <+|->` line
/// per edge; `#` starts a comment. `-` reads standard input.
#[derive(Parser)]
#[command(name = "signull", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, rank and nullity.
    Nullity { input: PathBuf },
    /// Multiplicity of an eigenvalue given as an integer or `p/q`.
    Multiplicity {
        input: PathBuf,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Components, cyclomatic number, leaves, degrees and block structure.
    Invariants { input: PathBuf },
    /// Compare nullity with the cyclomatic/pendant upper bound.
    Bound { input: PathBuf },
    /// Bound verdict, extremal form and witness.
    Classify { input: PathBuf },
    /// Apply nullity-preserving reductions; print the trace.
    Reduce {
        input: PathBuf,
        /// Write the reduced graph here instead of after the trace.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a graph from a family spec such as `theta p=4 q=4 l=4 signs=++`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the registered properties on a universe of small graphs.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        /// Draw this many random graphs per order instead of enumerating.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Every signing rather than one per switching class.
        #[arg(long, conflicts_with = "samples")]
        all_signings: bool,
        /// Include disconnected graphs.
        #[arg(long)]
        disconnected: bool,
        /// Keep one underlying graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Comma-separated property names; default is all.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        #[arg(long, default_value_t = 10)]
        max_counterexamples: usize,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Print `key=value` lines instead of the table.
        #[arg(long)]
        key_value: bool,
        /// List property names and exit.
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    Input(String),
    Violations,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    format::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_graph(path: &Path, g: &SignedGraph) -> Result<(), Failure> {
    fs::write(path, format::serialize(g)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Nullity { input } => {
            let g = read_graph(&input)?;
            println!("n {}\nrank {}\neta {}", g.order(), graph_rank(&g), nullity(&g));
        }
        Command::Multiplicity { input, lambda } => {
            let g = read_graph(&input)?;
            let lambda: Rational = lambda.parse()?;
            println!("lambda {lambda}\nmultiplicity {}", multiplicity(&g, &lambda));
        }
        Command::Invariants { input } => {
            let g = read_graph(&input)?;
            let s = summarize(&g);
            let (bridges, cycles, complex) = s.block_counts();
            let degrees: Vec<String> = s.degrees.iter().map(usize::to_string).collect();
            println!("n {}\nm {}", g.order(), g.size());
            println!(
                "components {}\ncyclomatic {}\npendants {}",
                s.components, s.cyclomatic, s.pendants
            );
            println!("degrees {}", degrees.join(" "));
            println!("cycle_disjoint {}", s.cycle_disjoint);
            println!("blocks bridges={bridges} cycles={cycles} complex={complex}");
        }
        Command::Bound { input } => print!("{}", bound(&read_graph(&input)?)?),
        Command::Classify { input } => print!("{}", classify(&read_graph(&input)?)?),
        Command::Reduce { input, output } => {
            let trace = reduce(&read_graph(&input)?);
            print!("{trace}");
            match output {
                Some(path) => write_graph(&path, &trace.final_graph)?,
                None => print!("{}", format::serialize(&trace.final_graph)),
            }
        }
        Command::Gen { spec, output } => {
            let g = spec.join(" ").parse::<FamilySpec>()?.build()?;
            match output {
                Some(path) => write_graph(&path, &g)?,
                None => print!("{}", format::serialize(&g)),
            }
        }
        Command::Verify {
            max_n,
            min_n,
            samples,
            seed,
            all_signings,
            disconnected,
            dedup,
            props,
            max_counterexamples,
            jobs,
            key_value,
            list,
        } => {
            if list {
                for p in signull::verify::PROPERTIES {
                    println!("{} [{}] {}", p.name, p.kind, p.about);
                }
                return Ok(());
            }
            let mode = match (samples, all_signings) {
                (Some(k), _) => SignMode::Random { samples: k },
                (None, true) => SignMode::AllSignings,
                (None, false) => SignMode::SwitchingClasses,
            };
            let universe = Universe::new(max_n)?
                .with_min_n(min_n)
                .with_sign_mode(mode)
                .with_seed(seed)
                .with_dedup(dedup)
                .with_connected_only(!disconnected);
            let selection = if props.is_empty() {
                Selection::all()
            } else {
                Selection::named(&props)?
            }
            .with_counterexample_cap(max_counterexamples);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Failure::Input(e.to_string()))?;
            let report = pool.install(|| verify(&universe, &selection));
            if key_value {
                print!("{}", report.to_key_values());
            } else {
                print!("{report}");
            }
            if report.total_violations() > 0 {
                return Err(Failure::Violations);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            eprintln!("signull: {}", first.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(message)) => {
            eprintln!("signull: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Violations) => {
            eprintln!("signull: property violations found");
            ExitCode::from(3)
        }
    }
}
