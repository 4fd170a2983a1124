//! End-to-end tests of the binary: subcommand behavior, exit codes, and
//! byte stability of machine output.

use std::io::Write;
use std::process::{Command, Output};

fn kegraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kegraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn analyze_k1_reports_the_basics() {
    let out = kegraph(&["analyze", "--g6", "@", "--no-timing"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("alpha   = 1"));
    assert!(text.contains("mu      = 0"));
    assert!(text.contains("is_ke   = true"));
}

#[test]
fn analyze_fixture_matches_known_values() {
    let out = kegraph(&["analyze", "--fixture", "g1-fig2222", "--no-timing"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("ker     = {a,b,c}"));
    assert!(text.contains("core    = {a,b,c,d}"));
    assert!(text.contains("nucleus = {a,b,c,d,g}"));

    let out = kegraph(&["analyze", "--fixture", "h-fig51", "--no-timing"]);
    let text = stdout(&out);
    assert!(text.contains("corona  = {a,c,d,e,f}"));
    assert!(text.contains("diadem  = {a,e}"));
}

#[test]
fn analyze_machine_output_is_byte_stable() {
    let run = || {
        let out = kegraph(&[
            "analyze",
            "--fixture",
            "g1-fig233",
            "--format",
            "machine",
            "--no-timing",
        ]);
        assert_exit(&out, 0);
        stdout(&out)
    };
    let a = run();
    assert_eq!(a, run());
    assert!(a.starts_with("{\"graph6\":"));
    assert!(a.contains("\"alpha\":3"));
    assert!(a.contains("\"core\":[3]"));
    assert!(a.contains("\"is_ke\":false"));
    // every registered theorem id appears in the document
    assert!(a.contains("\"theorem:char-pairs\""));
    assert!(a.contains("\"theorem:simplicial\""));
    // timing keys are excluded
    assert!(!a.contains("timing-ms"));
}

#[test]
fn analyze_with_timing_adds_only_timing_keys() {
    let out = kegraph(&["analyze", "--g6", "Ch", "--format", "machine"]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("timing-ms:invariants"));
}

#[test]
fn parse_failures_exit_2() {
    let out = kegraph(&["analyze", "--g6", "!!bogus"]);
    assert_exit(&out, 2);
    let out = kegraph(&["analyze", "--fixture", "missing-fixture"]);
    assert_exit(&out, 2);
    let out = kegraph(&["analyze"]);
    assert_exit(&out, 2);
    let out = kegraph(&["verify", "--g6", "@", "--theorem", "no-such-check"]);
    assert_exit(&out, 2);
}

#[test]
fn size_guard_exits_3() {
    // 24 isolated vertices exceed the critical-profile guard
    let g6_24: String = {
        let g = kegraph_core::graph::Graph::edgeless(24).unwrap();
        kegraph_core::format::encode_graph6(&g)
    };
    let out = kegraph(&["analyze", "--g6", &g6_24]);
    assert_exit(&out, 3);
}

#[test]
fn embed_precondition_exits_4_and_quotes_the_hypothesis() {
    let out = kegraph(&["embed", "--g6", "A_"]);
    assert_exit(&out, 4);
    assert!(stderr(&out).contains("other than K1 and K2"));

    let out = kegraph(&["embed", "--g6", "Dhc"]); // C5 is not KE
    assert_exit(&out, 4);
    assert!(stderr(&out).contains("not a König-Egerváry graph"));
}

#[test]
fn embed_p3_gives_a_seven_vertex_non_ke_graph() {
    let out = kegraph(&["embed", "--g6", "Bg"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("n=7"));
    assert!(text.contains("is_ke=false"));

    let out = kegraph(&["embed", "--g6", "Cr"]); // C4
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("n=9"));
}

#[test]
fn verify_c5_all_theorems_exit_0() {
    let out = kegraph(&["verify", "--g6", "Dhc"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(!text.contains(" fails"));
    assert!(text.contains("unicyclic-sandwich"));
}

#[test]
fn verify_k1_all_theorems_exit_0() {
    let out = kegraph(&["verify", "--g6", "@"]);
    assert_exit(&out, 0);
}

#[test]
fn verify_fig51111_char_pairs_demonstrates_triples() {
    let out = kegraph(&["verify", "--fixture", "g-fig51111", "--theorem", "char-pairs"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("admitting-pairs=0/15"));
    assert!(text.contains("admitting-triples=4/10"));
}

#[test]
fn fixtures_all_pass() {
    let out = kegraph(&["fixtures"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("0 failed"));
    assert!(text.contains("g1-fig2222.core"));
    assert!(text.contains("g2-fig2222.core-critical"));
}

#[test]
fn search_problem2_over_4_to_6_includes_k4_and_k6() {
    let out = kegraph(&["search", "--mode", "problem2", "--n", "4..6", "--no-timing"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("C~ ")), "K4 missing");
    assert!(text.lines().any(|l| l.starts_with("E~~w ")), "K6 missing");
}

#[test]
fn search_conjecture_over_stream_file_reports_zero_hits() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    for g in kegraph_core::catalog::catalog_range(1, 5).unwrap() {
        writeln!(file, "{}", kegraph_core::format::encode_graph6(&g)).unwrap();
    }
    let path = file.path().to_str().unwrap().to_string();
    let out = kegraph(&[
        "search",
        "--mode",
        "conjecture",
        "--exhaustive",
        &path,
        "--no-timing",
    ]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("examined=52 skipped=0 hits=0"));
}

#[test]
fn search_er_output_is_deterministic() {
    let args = [
        "search",
        "--mode",
        "conjecture",
        "--er",
        "10",
        "0.4",
        "--seed",
        "7",
        "--budget",
        "2000",
        "--no-timing",
    ];
    let a = stdout(&kegraph(&args));
    let b = stdout(&kegraph(&args));
    assert_eq!(a, b);
    assert!(a.contains("examined=2000"));
    assert!(a.contains("seed=7"));
    assert!(a.contains("# prng=chacha8"));
}

#[test]
fn search_rejects_bad_specs() {
    let out = kegraph(&["search", "--mode", "bogus", "--n", "4..5"]);
    assert_exit(&out, 2);
    let out = kegraph(&["search", "--mode", "conjecture"]);
    assert_exit(&out, 2);
    let out = kegraph(&["search", "--mode", "conjecture", "--n", "6..4"]);
    assert_exit(&out, 2);
    let out = kegraph(&["search", "--mode", "theorem:nope", "--n", "2..3"]);
    assert_exit(&out, 2);
}

#[test]
fn search_theorem_mode_sweeps_cleanly() {
    let out = kegraph(&[
        "search",
        "--mode",
        "theorem:corona-core-sandwich",
        "--n",
        "1..5",
        "--no-timing",
    ]);
    assert_exit(&out, 0);
    assert!(stdout(&out).contains("examined=52 skipped=0 hits=0"));
}

#[test]
fn edge_list_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.edges");
    std::fs::write(
        &path,
        "6 6\n0 1\n1 2\n2 3\n1 4\n2 5\n5 3\nlabel 0 a\nlabel 1 b\nlabel 2 c\nlabel 3 d\nlabel 4 e\nlabel 5 f\n",
    )
    .unwrap();
    let out = kegraph(&["analyze", "--edges", path.to_str().unwrap(), "--no-timing"]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("core    = {a,e}"));
    assert!(text.contains("corona  = {a,c,d,e,f}"));
}

#[test]
fn multi_graph_input_emits_one_document_per_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    std::fs::write(&path, "@\nA_\nDhc\n").unwrap();
    let out = kegraph(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "machine",
        "--no-timing",
    ]);
    assert_exit(&out, 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    for line in text.lines() {
        assert!(line.starts_with('{') && line.ends_with('}'));
    }
}
