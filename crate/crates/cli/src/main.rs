mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use unigraph::oracle::with_jobs;
use unigraph::{
    classify, enumerate_realizations, find_witness, verify_theorem, ChordDiagram, DegreeSequence, FamilySpec,
    FamilyTag, PolytopeGraph,
};

use render::{ClassifyReport, CheckReport, ConstructReport};

#[derive(Parser, Debug)]
#[command(name = "unigraph", version, about = "Unigraphic degree sequences of radius-one 3-polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for the oracle.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    jobs: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Match a sequence against the unigraphic families.
    Classify { sequence: String },
    /// Build the canonical realisation of a family row.
    Construct {
        #[arg(long)]
        family: FamilyTag,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
    },
    /// Count realisations up to isomorphism by exhaustive search.
    Enumerate {
        sequence: String,
        /// Stop after this many classes.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Find two non-isomorphic realisations.
    Witness {
        sequence: String,
        /// Longest rule chain to try.
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Report structural properties of a graph given in graph6.
    Check { graph6: String },
    /// Cross-check the classification against the oracle over a range of p.
    Verify {
        #[arg(long)]
        p_min: usize,
        #[arg(long)]
        p_max: usize,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Graph6,
    Dot,
    Text,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn parse_sequence(text: &str) -> Result<DegreeSequence, Failure> {
    text.parse().map_err(usage)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn unsupported(format: Format, command: &str) -> Failure {
    usage(format!("--format {format:?} is not available for {command}").to_lowercase())
}

/// Graph6 lines for a list of diagrams, one polytope per line.
fn graph6_lines(diagrams: &[&ChordDiagram]) -> String {
    diagrams.iter().map(|cd| cd.to_polytope().to_graph6() + "\n").collect()
}

fn dot_all(diagrams: &[&ChordDiagram]) -> String {
    diagrams
        .iter()
        .enumerate()
        .map(|(i, cd)| render::dot(cd, &format!("R{i}")))
        .collect()
}

/// Render a command's report. Exit code 1 is reserved for disagreements.
fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Classify { sequence } => {
            let s = parse_sequence(sequence)?;
            let report = ClassifyReport::new(&s, classify(&s));
            let out = match format {
                Format::Json => json(&report),
                Format::Text => report.text(),
                Format::Graph6 | Format::Dot => return Err(unsupported(format, "classify")),
            };
            Ok((out, 0))
        }
        Command::Construct { family, p, x, a } => {
            let spec = FamilySpec::new(*family, *p, *x, *a).map_err(usage)?;
            let cd = spec.construct();
            let out = match format {
                Format::Json => json(&ConstructReport::new(&spec, &cd)),
                Format::Text => format!("{spec}\nsequence: {}\ndiagram: {cd}\n", spec.sequence()),
                Format::Graph6 => graph6_lines(&[&cd]),
                Format::Dot => render::dot(&cd, "F"),
            };
            Ok((out, 0))
        }
        Command::Enumerate { sequence, limit } => {
            let s = parse_sequence(sequence)?;
            let report = with_jobs(cli.jobs as usize, || enumerate_realizations(&s, *limit));
            let reps: Vec<&ChordDiagram> = report.representatives.iter().collect();
            let out = match format {
                Format::Json => json(&report),
                Format::Text => render::enumerate_text(&report),
                Format::Graph6 => graph6_lines(&reps),
                Format::Dot => dot_all(&reps),
            };
            Ok((out, 0))
        }
        Command::Witness { sequence, depth } => {
            let s = parse_sequence(sequence)?;
            let witness = with_jobs(cli.jobs as usize, || find_witness(&s, *depth));
            let pair: Vec<&ChordDiagram> = witness.iter().flat_map(|w| [&w.before, &w.after]).collect();
            let out = match format {
                Format::Json => json(&witness),
                Format::Text => match &witness {
                    Some(w) => format!("sequence: {}\nrule: {}\nbefore: {}\nafter: {}\n", w.sequence, w.rule, w.before, w.after),
                    None => format!("sequence: {s}\nno witness\n"),
                },
                Format::Graph6 => graph6_lines(&pair),
                Format::Dot => dot_all(&pair),
            };
            Ok((out, 0))
        }
        Command::Check { graph6 } => {
            let g = PolytopeGraph::from_graph6(graph6.trim()).map_err(usage)?;
            let report = CheckReport::new(&g);
            let out = match format {
                Format::Json => json(&report),
                Format::Text => report.text(),
                Format::Graph6 => g.to_graph6() + "\n",
                Format::Dot => match &report.diagram {
                    Some(cd) => render::dot(cd, "G"),
                    None => return Err(usage("dot output needs a radius-one polytope")),
                },
            };
            Ok((out, 0))
        }
        Command::Verify { p_min, p_max } => {
            if p_min > p_max {
                return Err(usage("--p-min exceeds --p-max"));
            }
            let report = with_jobs(cli.jobs as usize, || verify_theorem(*p_min, *p_max));
            let out = match format {
                Format::Json => json(&report),
                Format::Text => render::verify_text(&report),
                Format::Graph6 | Format::Dot => return Err(unsupported(format, "verify")),
            };
            Ok((out, if report.passed() { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(&cli) {
        Ok(done) => done,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            return ExitCode::from(failure.code);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &out),
        None => std::io::stdout().write_all(out.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
