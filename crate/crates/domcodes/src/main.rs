//! Command-line front end. All the logic lives in the library; this file
//! parses arguments, moves bytes, and maps outcomes to exit codes:
//! 0 success, 1 failure (invalid input, no code exists, a bound check
//! failed), 2 usage error.

use clap::{Parser, Subcommand};
use domcodes::codes::CodeKind;
use domcodes::families::{FamilyKind, FamilySpec};
use domcodes::harness::{self, CheckStatus, VerifyOptions, CHECK_NAMES};
use domcodes::io::Format;
use domcodes::{construct, enumerate, solver};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "domcodes",
    about = "Minimum identifying, locating-dominating and open locating-dominating codes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a minimum code for a graph read from a file or stdin.
    Solve {
        /// Input encoding: graph6 or edgelist.
        #[arg(long, default_value_t = Format::Graph6, value_parser = parse_format)]
        format: Format,
        /// Code kind: id, ld or old.
        #[arg(long, default_value_t = CodeKind::Id, value_parser = CodeKind::from_str)]
        code: CodeKind,
        /// Input file; stdin when omitted.
        input: Option<PathBuf>,
    },
    /// Generate a parameterized family instance and print it.
    Gen {
        /// star, path, clique, spider, path-power, extremal-id,
        /// extremal-old, extremal-ld, split-hypercube or random-block.
        #[arg(long, value_parser = FamilyKind::from_str)]
        family: FamilyKind,
        /// Main size parameter.
        #[arg(long)]
        k: usize,
        /// Secondary parameter (path-power order, random-block size cap).
        #[arg(long)]
        p: Option<usize>,
        /// Seed for the random family.
        #[arg(long)]
        seed: Option<u64>,
        /// Output encoding: graph6 or edgelist.
        #[arg(long, default_value_t = Format::Graph6, value_parser = parse_format)]
        format: Format,
    },
    /// List all connected block graphs on n vertices, one graph6 line per
    /// isomorphism class.
    Enumerate {
        #[arg(long, value_parser = parse_enumerable_n)]
        n: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an identifying code no larger than the maximal-clique count
    /// on a connected identifiable block graph, with a step trace.
    Construct {
        /// Input encoding: graph6 or edgelist.
        #[arg(long, default_value_t = Format::Graph6, value_parser = parse_format)]
        format: Format,
        /// Input file; stdin when omitted.
        input: Option<PathBuf>,
    },
    /// Sweep the bound checks over every connected block graph up to a
    /// size, plus the named families on request.
    Verify {
        /// Largest vertex count to enumerate (2..=9).
        #[arg(long, default_value_t = 8, value_parser = parse_enumerable_n)]
        max_n: usize,
        /// Also check the parameterized family roster.
        #[arg(long)]
        families: bool,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the CSV report here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Corrupt one bound to prove the failure path works.
        #[arg(long)]
        inject_failure: bool,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "graph6" => Ok(Format::Graph6),
        "edgelist" => Ok(Format::EdgeList),
        other => Err(format!("unknown format {:?} (expected graph6 or edgelist)", other)),
    }
}

fn parse_enumerable_n(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("{:?} is not a number", s))?;
    if (2..=enumerate::ENUMERATE_LIMIT).contains(&n) {
        Ok(n)
    } else {
        Err(format!("exhaustive listing covers 2..={} vertices", enumerate::ENUMERATE_LIMIT))
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<String, String> {
    match input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e)),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {}", e))?;
            Ok(buf)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Solve { format, code, input } => {
            let text = read_input(&input)?;
            let g = domcodes::io::parse_graph(&text, format).map_err(|e| e.to_string())?;
            let result = solver::gamma(&g, code).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&result).expect("results serialize"));
            Ok(0)
        }
        Command::Gen { family, k, p, seed, format } => {
            let spec = FamilySpec { kind: family, k, p, seed };
            let g = spec.build().map_err(|e| e.to_string())?;
            print!("{}", domcodes::io::emit_graph(&g, format));
            Ok(0)
        }
        Command::Enumerate { n, out } => {
            let mut lines = String::new();
            for class in enumerate::enumerate_connected_block_graphs(n) {
                lines.push_str(&domcodes::io::emit_graph6(&class));
                lines.push('\n');
            }
            match out {
                Some(path) => std::fs::write(&path, lines).map_err(|e| format!("{}: {}", path.display(), e))?,
                None => print!("{}", lines),
            }
            Ok(0)
        }
        Command::Construct { format, input } => {
            let text = read_input(&input)?;
            let g = domcodes::io::parse_graph(&text, format).map_err(|e| e.to_string())?;
            let built = construct::id_code_at_most_nq(&g).map_err(|e| e.to_string())?;
            println!(
                "code {:?} ({} members, {} maximal cliques)",
                built.code.members.to_vec(),
                built.code.len(),
                g.count_maximal_cliques()
            );
            for (i, step) in built.steps.iter().enumerate() {
                println!("  step {}: {}", i + 1, step);
            }
            Ok(0)
        }
        Command::Verify { max_n, families, out, csv, inject_failure } => {
            let opts = VerifyOptions { max_n, include_families: families, inject_failure };
            let reports = harness::verify(&opts);
            for report in &reports {
                for (name, status) in CHECK_NAMES.iter().zip(report.checks.statuses()) {
                    if let CheckStatus::Fail { detail, .. } = status {
                        println!("FAIL {} on {} (n={}): {}", name, report.canon, report.n, detail);
                    }
                }
            }
            let summary = harness::summarize(&reports);
            println!(
                "checked {} graphs: {} passes, {} failures, {} skips",
                summary.graphs, summary.passes, summary.failures, summary.skips
            );
            if let Some(path) = out {
                std::fs::write(&path, harness::render_json(&reports))
                    .map_err(|e| format!("{}: {}", path.display(), e))?;
            }
            if let Some(path) = csv {
                std::fs::write(&path, harness::render_csv(&reports))
                    .map_err(|e| format!("{}: {}", path.display(), e))?;
            }
            Ok(if summary.failures == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests print to stdout and exit cleanly;
            // everything else is a usage error.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(1)
        }
    }
}
