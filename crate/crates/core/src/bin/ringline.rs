use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ringline::catalog::{self, OrderRange};
use ringline::report::{self, Format, GraphFormat, GraphKind, Record};
use ringline::{all_ideals, analyse, parse, Error, FiniteRing, ProjectiveLine};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "ringline",
    version,
    about = "Projective lines over small finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Output format: json, csv, text or markdown
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a ring expression and print its canonical form
    Parse {
        /// Ring expression, e.g. "Z4 x Z4" or "GF(2)[x]/(x^3)"
        expr: String,
        #[command(flatten)]
        out: Output,
    },
    /// Build a ring and print its units, zero-divisors and tables
    Ring {
        /// Ring expression, e.g. "Z4 x Z4" or "GF(2)[x]/(x^3)"
        expr: String,
        #[command(flatten)]
        out: Output,
    },
    /// Ideal lattice summary: maximal ideals, Jacobson radical, locality
    Ideals {
        /// Ring expression, e.g. "Z4 x Z4" or "GF(2)[x]/(x^3)"
        expr: String,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate the projective line, or export its neighbour/distant graph
    Line {
        /// Ring expression, e.g. "Z4 x Z4" or "GF(2)[x]/(x^3)"
        expr: String,
        #[command(flatten)]
        out: Output,
        /// Export the graph instead of listing points: dot or csv
        #[arg(long)]
        export_graph: Option<GraphFormat>,
        /// Which relation to export: neighbour or distant
        #[arg(long, default_value = "neighbour")]
        graph: GraphKind,
    },
    /// Classification profile of the line over a ring
    Profile {
        /// Ring expression, e.g. "Z4 x Z4" or "GF(2)[x]/(x^3)"
        expr: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run the built-in catalog
    Table {
        #[command(flatten)]
        out: Output,
        /// Restrict to ring orders A..B (inclusive)
        #[arg(long)]
        orders: Option<OrderRange>,
        /// Compare against expected profiles; exit 1 on any mismatch
        #[arg(long)]
        check: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(if err.is_input_error() {
        EXIT_USAGE
    } else {
        EXIT_MISMATCH
    })
}

fn emit(text: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
    {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Parse { expr, out } => {
            let expr = parse(&expr)?;
            let text = match out.format {
                Format::Json => {
                    let value = serde_json::json!({ "canonical": expr.render(), "ast": expr });
                    serde_json::to_string_pretty(&value).expect("serialisable") + "\n"
                }
                _ => format!("{}\n", expr.render()),
            };
            Ok(emit(&text))
        }
        Command::Ring { expr, out } => {
            let ring = FiniteRing::build(&parse(&expr)?)?;
            Ok(emit(&match out.format {
                Format::Json => report::ring_json(&ring),
                _ => report::ring_text(&ring),
            }))
        }
        Command::Ideals { expr, out } => {
            let ring = FiniteRing::build(&parse(&expr)?)?;
            let lattice = all_ideals(&ring)?;
            Ok(emit(&match out.format {
                Format::Json => report::ideals_json(&ring, &lattice),
                _ => report::ideals_text(&ring, &lattice),
            }))
        }
        Command::Line {
            expr,
            out,
            export_graph,
            graph,
        } => {
            let line = ProjectiveLine::enumerate(FiniteRing::build(&parse(&expr)?)?)?;
            Ok(emit(&match (export_graph, out.format) {
                (Some(GraphFormat::Dot), _) => report::graph_dot(&line, graph),
                (Some(GraphFormat::Csv), _) => report::graph_csv(&line, graph),
                (None, Format::Json) => report::line_json(&line),
                (None, _) => report::line_text(&line),
            }))
        }
        Command::Profile { expr, out } => {
            let analysis = analyse(&expr)?;
            let record = Record::from_profile(&analysis.profile, &analysis.expr.render());
            Ok(emit(&report::render_records(&[record], out.format)))
        }
        Command::Table {
            out,
            orders,
            check,
            jobs,
        } => {
            let report = match catalog::run_table(&catalog::builtin(), orders, jobs) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(EXIT_MISMATCH));
                }
            };
            let records = report::table_records(&report, check);
            let summary = report::table_summary(&report, check);
            let mut text = report::render_records(&records, out.format);
            match out.format {
                Format::Text | Format::Markdown => {
                    text.push('\n');
                    text.push_str(&summary);
                    text.push('\n');
                }
                Format::Json | Format::Csv => eprintln!("{summary}"),
            }
            let code = emit(&text);
            let bad = if check {
                report.failures()
            } else {
                report.errors()
            };
            Ok(if bad > 0 {
                ExitCode::from(EXIT_MISMATCH)
            } else {
                code
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    run(cli).unwrap_or_else(|e| fail(&e))
}
