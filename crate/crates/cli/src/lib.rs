//! Command-line front end. Every subcommand writes JSON lines, CSV or graph6
//! to standard output (or `--output`), and the exit status encodes the
//! outcome:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | a verifier failed on a graph satisfying its hypothesis |
//! | 2 | usage, parse or domain error |
//! | 3 | a capability limit was exceeded |

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliquemin::bounds::{asymptotic_ratio_report, ratio_csv, BoundReport};
use cliquemin::census::{census, CensusRecord};
use cliquemin::constructions::{c5_blowup, BlowupSpec, ConstructionReport};
use cliquemin::graph6::{parse_lines, to_graph6};
use cliquemin::identities::{verify_all, GraphSums, IdentityCertificate, IdentityId};
use cliquemin::search::{blowup_optimum, f_exact, local_search_min_t4, SearchResult};
use cliquemin::{Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cliquemin", version, about = "Exact 4-clique workbench for graphs with independence number 2")]
pub struct Cli {
    /// Worker threads (0 = one per core). Never changes output.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    G6,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Subgraph census of every graph6 line in INPUT ("-" for stdin).
    Census { input: String },
    /// Identity certificates for every graph6 line in INPUT.
    Verify {
        /// `all` or one of le00, le0, eq1, eq2, le3, le4, le5, eq3, final_exact, edge_nonedge
        #[arg(long, default_value = "all")]
        identity: String,
        input: String,
    },
    /// Build a 5-cycle blow-up from five part sizes.
    Construct {
        /// Comma-separated part sizes, e.g. 2,2,2,2,2
        #[arg(long)]
        parts: String,
    },
    /// Best blow-up part sizes for order N.
    BlowupOpt {
        #[arg(long)]
        n: u64,
    },
    /// Exhaustive minimum 4-clique count (N <= 11).
    SearchExact {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        extra: SearchOutput,
    },
    /// Seeded local search for a small 4-clique count.
    SearchLocal {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        steps: u64,
        #[arg(long, default_value_t = 4)]
        restarts: u64,
        #[command(flatten)]
        extra: SearchOutput,
    },
    /// Bound report for order N, optionally with per-graph data from a graph6 file.
    Bound {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        g6: Option<String>,
    },
    /// Ratio table 200·t4/n⁴ for balanced blow-ups, p = 1..=PMAX.
    Ratio {
        #[arg(long)]
        pmax: u64,
    },
}

#[derive(Args, Debug)]
struct SearchOutput {
    /// Also write the witnesses, one graph6 per line, to this file.
    #[arg(long)]
    g6_out: Option<PathBuf>,
    /// Include elapsed_ms in the JSON (makes output run-dependent).
    #[arg(long)]
    timing: bool,
}

enum Failure {
    Usage(String),
    Capability(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capability(_) | Error::Overflow(_) => Failure::Capability(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Outcome {
    text: String,
    falsified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, falsified: false }
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn read_input(path: &str, stdin: &str) -> Result<Vec<Graph>, Failure> {
    let text = if path == "-" {
        stdin.to_string()
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
    };
    Ok(parse_lines(&text)?)
}

fn pick_format(requested: Option<Format>, default: Format, allowed: &[Format], cmd: &str) -> Result<Format, Failure> {
    let f = requested.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage(format!("format {f:?} is not supported by {cmd}")))
    }
}

fn census_csv(records: &[CensusRecord]) -> String {
    let mut s = String::from("n,m,t3,t3p,t3pp,i3,t4,t4p\n");
    for r in records {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.n, r.m, r.t3, r.t3p, r.t3pp, r.i3, r.t4, r.t4p
        ));
    }
    s
}

fn search_output(result: SearchResult, extra: &SearchOutput, format: Format) -> Result<Outcome, Failure> {
    let result = if extra.timing { result } else { result.without_timing() };
    let g6_lines: String = result.witnesses.iter().map(|w| format!("{w}\n")).collect();
    if let Some(path) = &extra.g6_out {
        fs::write(path, &g6_lines)?;
    }
    Ok(Outcome::ok(match format {
        Format::G6 => g6_lines,
        _ => json_line(&result),
    }))
}

fn dispatch(cli: &Cli, stdin: &str) -> Result<Outcome, Failure> {
    use Format::*;
    match &cli.command {
        Command::Census { input } => {
            let format = pick_format(cli.format, Json, &[Json, Csv], "census")?;
            let graphs = read_input(input, stdin)?;
            let records: Vec<CensusRecord> = graphs.iter().map(census).collect::<Result<_, _>>()?;
            Ok(Outcome::ok(match format {
                Csv => census_csv(&records),
                _ => records.iter().map(json_line).collect(),
            }))
        }
        Command::Verify { identity, input } => {
            pick_format(cli.format, Json, &[Json], "verify")?;
            let selected: Option<IdentityId> = if identity.eq_ignore_ascii_case("all") {
                None
            } else {
                Some(identity.parse()?)
            };
            let graphs = read_input(input, stdin)?;
            let mut text = String::new();
            let mut falsified = false;
            for g in &graphs {
                let certs: Vec<IdentityCertificate> = match selected {
                    None => verify_all(g)?,
                    Some(id) => vec![GraphSums::new(g)?.certificate(id)?],
                };
                for c in certs {
                    falsified |= c.is_falsification();
                    text.push_str(&json_line(&c));
                }
            }
            Ok(Outcome { text, falsified })
        }
        Command::Construct { parts } => {
            let format = pick_format(cli.format, Json, &[Json, G6], "construct")?;
            let spec = BlowupSpec::parse(parts)?;
            let g6 = to_graph6(&c5_blowup(&spec));
            Ok(Outcome::ok(match format {
                G6 => format!("{g6}\n"),
                _ => format!("{g6}\n{}", json_line(&ConstructionReport::new(&spec))),
            }))
        }
        Command::BlowupOpt { n } => {
            pick_format(cli.format, Json, &[Json], "blowup-opt")?;
            Ok(Outcome::ok(json_line(&blowup_optimum(*n))))
        }
        Command::SearchExact { n, extra } => {
            let format = pick_format(cli.format, Json, &[Json, G6], "search-exact")?;
            search_output(f_exact(*n)?, extra, format)
        }
        Command::SearchLocal {
            n,
            seed,
            steps,
            restarts,
            extra,
        } => {
            let format = pick_format(cli.format, Json, &[Json, G6], "search-local")?;
            search_output(local_search_min_t4(*n, *seed, *steps, *restarts)?, extra, format)
        }
        Command::Bound { n, g6 } => {
            let format = pick_format(cli.format, Json, &[Json, Csv], "bound")?;
            let reports: Vec<BoundReport> = match (g6, n) {
                (None, None) => return Err(Failure::Usage("bound needs --n or --g6".into())),
                (None, Some(n)) => vec![BoundReport::new(*n, None)?],
                (Some(path), n) => {
                    let graphs = read_input(path, stdin)?;
                    graphs
                        .iter()
                        .map(|g| BoundReport::new(n.unwrap_or(g.n() as u64), Some(g)))
                        .collect::<Result<_, _>>()?
                }
            };
            Ok(Outcome::ok(match format {
                Csv => {
                    let mut s = BoundReport::csv_header().to_string();
                    reports.iter().for_each(|r| s.push_str(&r.csv_row()));
                    s
                }
                _ => reports.iter().map(json_line).collect(),
            }))
        }
        Command::Ratio { pmax } => {
            let format = pick_format(cli.format, Csv, &[Csv, Json], "ratio")?;
            let rows = asymptotic_ratio_report(*pmax)?;
            Ok(Outcome::ok(match format {
                Json => rows.iter().map(json_line).collect(),
                _ => ratio_csv(&rows),
            }))
        }
    }
}

/// Run the CLI on `argv` (including the program name) and return the exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let reads_stdin = match &cli.command {
        Command::Census { input } | Command::Verify { input, .. } => input == "-",
        Command::Bound { g6: Some(path), .. } => path == "-",
        _ => false,
    };
    let mut input = String::new();
    if reads_stdin {
        if let Err(e) = stdin.read_to_string(&mut input) {
            let _ = writeln!(stderr, "error: cannot read standard input: {e}");
            return EXIT_USAGE;
        }
    }
    let result = pool.install(|| dispatch(&cli, &input));

    let outcome = match result {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Capability(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_CAPABILITY;
        }
    };

    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.text),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    if outcome.falsified {
        let _ = writeln!(stderr, "falsification: a certificate failed on a graph satisfying its hypothesis");
        return EXIT_FALSIFIED;
    }
    EXIT_OK
}
