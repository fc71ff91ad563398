//! Command-line front end: pattern detection, class membership, perfect
//! divisions, certified coloring, verification campaigns, and enumeration.
//! Graphs travel as graph6, one per line, from files or standard input.
//! Exit codes: 0 success/PASS, 1 counterexample or violation found,
//! 2 usage or format error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use forkdiv::campaign::{run_campaign, CampaignId, ClassFilter, Source};
use forkdiv::coloring::{color_fork_butterfly, color_fork_gem, divide_and_color};
use forkdiv::divisibility::find_perfect_division;
use forkdiv::enumerate::{enumerate_graphs, extend_with_vertex};
use forkdiv::graph::Graph;
use forkdiv::graph6::{parse_graph6, to_graph6, HEADER};
use forkdiv::patterns::{find_pattern, PatternId};
use forkdiv::Error;

#[derive(Parser)]
#[command(
    name = "forkdiv",
    about = "Detectors, perfect divisions and certified colorings for fork-free graph classes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect an induced pattern in each input graph.
    Detect {
        /// Pattern name: fork, gem, ..., or hole:K / antihole:K / balloon:K.
        #[arg(long)]
        pattern: String,
        /// graph6 files; standard input when empty.
        files: Vec<PathBuf>,
    },
    /// Test membership in a forbidden-subgraph class.
    Free {
        /// Class: fork, fork-gem, fork-butterfly, fork-odd-balloon, ...
        #[arg(long)]
        class: String,
        files: Vec<PathBuf>,
    },
    /// Find a perfect division (A perfect, omega(B) < omega) per graph.
    Divide { files: Vec<PathBuf> },
    /// Color within C(omega+1, 2) with a replayable certificate.
    Color {
        /// Algorithm class: fork-gem, fork-butterfly, or pd.
        #[arg(long)]
        class: String,
        /// Directory for certificate files; omitted certificates are not
        /// written.
        #[arg(long)]
        cert_dir: Option<PathBuf>,
        files: Vec<PathBuf>,
    },
    /// Run a verification campaign and print its report.
    Verify {
        /// theorem-1, theorem-2, theorem-3, lemma-2-4, lemma-3-1, lemma-4-1,
        /// rb93-small-omega.
        #[arg(long)]
        campaign: String,
        #[arg(long)]
        max_n: usize,
        /// graph6 file to ingest; internal enumeration when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Override the campaign's class filter (e.g. the theorem-1
        /// corollary classes fork-p6, fork-bull, fork-co-dart, fork-odd-hole).
        #[arg(long)]
        filter: Option<String>,
        /// Stop after the first size level with failures.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Emit one graph6 line per isomorphism class of n-vertex graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Restrict to a class (hereditary pruning).
        #[arg(long)]
        filter: Option<String>,
    },
    /// Read n-vertex graphs and emit the (n+1)-vertex class representatives
    /// obtained by attaching one vertex in all ways; used to build graph6
    /// streams beyond the internal enumeration cap.
    Extend {
        #[arg(long)]
        filter: Option<String>,
        files: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Detect { pattern, files } => {
            let id = PatternId::parse(&pattern)
                .ok_or_else(|| usage(format!("unknown pattern {pattern:?}")))?;
            for_each_graph(&files, |g6, g| {
                match find_pattern(g, id) {
                    Some(occ) => println!("{g6} CONTAINS {}", join(&occ.map)),
                    None => println!("{g6} FREE -"),
                }
                Ok(true)
            })
        }
        Command::Free { class, files } => {
            let filter = ClassFilter::parse(&class)
                .ok_or_else(|| usage(format!("unknown class {class:?}")))?;
            for_each_graph(&files, |g6, g| {
                if filter.matches(g) {
                    println!("{g6} FREE");
                } else {
                    println!("{g6} NOT-FREE");
                }
                Ok(true)
            })
        }
        Command::Divide { files } => for_each_graph(&files, |g6, g| {
            match find_perfect_division(g)? {
                Some(div) => {
                    println!(
                        "{g6} A={} B={}",
                        set_field(div.a),
                        set_field(div.b)
                    );
                    Ok(true)
                }
                None => {
                    println!("{g6} NONE");
                    Ok(false)
                }
            }
        }),
        Command::Color {
            class,
            cert_dir,
            files,
        } => {
            if let Some(dir) = &cert_dir {
                std::fs::create_dir_all(dir)?;
            }
            let mut index = 0usize;
            for_each_graph(&files, |g6, g| {
                let (coloring, cert) = match class.as_str() {
                    "fork-gem" => color_fork_gem(g)?,
                    "fork-butterfly" => color_fork_butterfly(g)?,
                    "pd" => divide_and_color(g)?,
                    other => return Err(usage(format!("unknown coloring class {other:?}"))),
                };
                let mut line = format!(
                    "{g6} colors={} bound={}",
                    coloring.colors_used(),
                    cert.bound
                );
                if let Some(dir) = &cert_dir {
                    index += 1;
                    let path = dir.join(format!("cert-{index:06}.txt"));
                    std::fs::write(&path, cert.to_text(g))?;
                    line.push_str(&format!(" cert={}", path.display()));
                }
                println!("{line}");
                Ok(true)
            })
        }
        Command::Verify {
            campaign,
            max_n,
            input,
            filter,
            fail_fast,
        } => {
            let id = CampaignId::parse(&campaign)
                .ok_or_else(|| usage(format!("unknown campaign {campaign:?}")))?;
            let filter = filter
                .map(|f| {
                    ClassFilter::parse(&f).ok_or_else(|| usage(format!("unknown class {f:?}")))
                })
                .transpose()?;
            let source = match input {
                Some(path) => Source::File(path),
                None => Source::Internal,
            };
            let report = run_campaign(id, max_n, &source, filter, fail_fast)?;
            print!("{}", report.render());
            eprintln!("# wall-ms {}", report.wall.as_millis());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Enumerate { n, filter } => {
            let filter = parse_optional_filter(filter)?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for g in enumerate_graphs(n, |g| filter.matches(g))? {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extend { filter, files } => {
            let filter = parse_optional_filter(filter)?;
            let mut graphs = Vec::new();
            for_each_graph(&files, |_, g| {
                graphs.push(g.clone());
                Ok(true)
            })?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for g in extend_with_vertex(&graphs, |g| filter.matches(g))? {
                writeln!(out, "{}", to_graph6(&g))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn usage(msg: String) -> Error {
    Error::Usage(msg)
}

fn parse_optional_filter(filter: Option<String>) -> Result<ClassFilter, Error> {
    match filter {
        None => Ok(ClassFilter::All),
        Some(f) => {
            ClassFilter::parse(&f).ok_or_else(|| usage(format!("unknown class {f:?}")))
        }
    }
}

fn join(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn set_field(s: forkdiv::VertexSet) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Feeds every graph6 line from the files (or standard input) to the
/// callback; the callback reports per-graph success, and the overall exit
/// code is 1 when any graph failed.
fn for_each_graph<F>(files: &[PathBuf], mut f: F) -> Result<ExitCode, Error>
where
    F: FnMut(&str, &Graph) -> Result<bool, Error>,
{
    let mut all_ok = true;
    let mut handle_line = |line: &str, f: &mut F| -> Result<(), Error> {
        let line = line.trim();
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            return Ok(());
        }
        let g = parse_graph6(line)?;
        if !f(line, &g)? {
            all_ok = false;
        }
        Ok(())
    };
    if files.is_empty() {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        for line in text.lines() {
            handle_line(line, &mut f)?;
        }
    } else {
        for path in files {
            let reader = BufReader::new(File::open(path)?);
            for line in reader.lines() {
                handle_line(&line?, &mut f)?;
            }
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
