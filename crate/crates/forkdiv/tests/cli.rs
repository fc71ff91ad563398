//! End-to-end tests of the command-line interface and its exit-code
//! contract: 0 success/PASS, 1 counterexample or violation, 2 usage/format
//! error.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn forkdiv(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_forkdiv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn forkdiv");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait for forkdiv")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn detect_fork_on_itself() {
    // fork: leaves 0,1 on center 2, path 2-3-4
    let fork_g6 = {
        let g = forkdiv::patterns::PatternId::Fork.graph();
        forkdiv::graph6::to_graph6(&g)
    };
    let out = forkdiv(&["detect", "--pattern", "fork"], &format!("{fork_g6}\n"));
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    assert!(line.contains("CONTAINS"), "{line}");
    // the witness covers all five vertices
    let witness = line.trim().rsplit(' ').next().unwrap();
    assert_eq!(witness.split(',').count(), 5);
}

#[test]
fn detect_parameterized_patterns() {
    let c7 = forkdiv::graph6::to_graph6(&forkdiv::Graph::cycle(7).unwrap());
    let out = forkdiv(&["detect", "--pattern", "hole:7"], &format!("{c7}\n"));
    assert!(stdout(&out).contains("CONTAINS"));
    let out = forkdiv(&["detect", "--pattern", "balloon:5"], &format!("{c7}\n"));
    assert!(stdout(&out).contains("FREE"));
}

#[test]
fn free_class_verdicts() {
    let fork_g6 = forkdiv::graph6::to_graph6(&forkdiv::patterns::PatternId::Fork.graph());
    let c5 = forkdiv::graph6::to_graph6(&forkdiv::Graph::cycle(5).unwrap());
    let out = forkdiv(
        &["free", "--class", "fork"],
        &format!("{fork_g6}\n{c5}\n"),
    );
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().ends_with("NOT-FREE"));
    assert!(text.lines().nth(1).unwrap().ends_with("FREE"));

    // B5 is fork-free but is itself an odd balloon
    let b5 = forkdiv::graph6::to_graph6(&forkdiv::patterns::PatternId::Balloon(5).graph());
    let out = forkdiv(&["free", "--class", "fork-odd-balloon"], &format!("{b5}\n"));
    assert!(stdout(&out).trim().ends_with("NOT-FREE"));
}

#[test]
fn detect_reads_from_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{}", forkdiv::graph6::to_graph6(&forkdiv::Graph::cycle(5).unwrap())).unwrap();
    writeln!(file, "{}", forkdiv::graph6::to_graph6(&forkdiv::Graph::complete(4).unwrap())).unwrap();
    file.flush().unwrap();
    let out = forkdiv(
        &["detect", "--pattern", "P4", file.path().to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().contains("CONTAINS"));
    assert!(text.lines().nth(1).unwrap().contains("FREE"));
}

#[test]
fn divide_prints_partition() {
    let c5 = forkdiv::graph6::to_graph6(&forkdiv::Graph::cycle(5).unwrap());
    let out = forkdiv(&["divide"], &format!("{c5}\n"));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("A=0,2,3 B=1,4"), "{text}");
}

#[test]
fn color_k4_matches_contract() {
    let out = forkdiv(&["color", "--class", "fork-gem"], "C~\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("colors=4 bound=10"));
}

#[test]
fn color_writes_replayable_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let b5 = forkdiv::graph6::to_graph6(&forkdiv::patterns::PatternId::Balloon(5).graph());
    let out = forkdiv(
        &[
            "color",
            "--class",
            "fork-gem",
            "--cert-dir",
            dir.path().to_str().unwrap(),
        ],
        &format!("{b5}\n"),
    );
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let path = line.trim().rsplit("cert=").next().unwrap();
    let text = std::fs::read_to_string(path).unwrap();
    forkdiv::replay::validate_certificate(&text).unwrap();
}

#[test]
fn color_rejects_out_of_class_input() {
    let gem = forkdiv::graph6::to_graph6(&forkdiv::patterns::PatternId::Gem.graph());
    let out = forkdiv(&["color", "--class", "fork-gem"], &format!("{gem}\n"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn color_pd_class_on_a_cycle() {
    let c5 = forkdiv::graph6::to_graph6(&forkdiv::Graph::cycle(5).unwrap());
    let out = forkdiv(&["color", "--class", "pd"], &format!("{c5}\n"));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("colors=3 bound=3"));
}

#[test]
fn verify_campaign_pass_and_exit_codes() {
    let out = forkdiv(&["verify", "--campaign", "theorem-1", "--max-n", "6"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict PASS"));
    assert!(text.contains("campaign theorem-1"));

    // unknown campaign is a usage error
    let out = forkdiv(&["verify", "--campaign", "nope", "--max-n", "3"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_failures_with_exit_one() {
    // the hole-neighborhood audit over `all` fails on a crafted non-fork-free
    // graph; the report and exit code must say so
    let g = forkdiv::Graph::from_edges(
        7,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (6, 5)],
    )
    .unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{}", forkdiv::graph6::to_graph6(&g)).unwrap();
    file.flush().unwrap();
    let out = forkdiv(
        &[
            "verify",
            "--campaign",
            "lemma-2-4",
            "--max-n",
            "7",
            "--input",
            file.path().to_str().unwrap(),
            "--filter",
            "all",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("verdict FAIL"));
    assert!(text.contains("failure "));
}

#[test]
fn enumerate_counts_and_filter() {
    let out = forkdiv(&["enumerate", "--n", "4"], "");
    assert_eq!(stdout(&out).lines().count(), 11);
    let out = forkdiv(&["enumerate", "--n", "5", "--filter", "fork"], "");
    assert_eq!(stdout(&out).lines().count(), 33);
    // above the internal cap
    let out = forkdiv(&["enumerate", "--n", "9"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extend_grows_stream_by_one_vertex() {
    let fives = forkdiv(&["enumerate", "--n", "5"], "");
    let out = forkdiv(&["extend"], &stdout(&fives));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 156);
}

#[test]
fn malformed_graph6_is_a_format_error() {
    let out = forkdiv(&["detect", "--pattern", "fork"], "A\x07\n");
    assert_eq!(out.status.code(), Some(2));
}
