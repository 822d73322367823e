//! End-to-end runs of the `hamnum` binary and of `cli::run`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hamnum::cli;
use tempfile::TempDir;

fn hamnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamnum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

/// Graph and witness-walk files of a corpus fixture.
fn corpus_files(dir: &Path, name: &str) -> (String, String) {
    let graph = hamnum(&["corpus", name]);
    assert_eq!(graph.status.code(), Some(0));
    let walks = hamnum(&["corpus", name, "--walks"]);
    let first = stdout(&walks)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .take(1)
        .collect::<String>();
    let g = write(dir, &format!("{name}.pg"), &stdout(&graph));
    let w = write(dir, &format!("{name}.walk"), &format!("{first}\n"));
    (g.display().to_string(), w.display().to_string())
}

#[test]
fn grinberg_literal_golden() {
    let out = hamnum(&["grinberg", "--face-lengths", "6,6,6,6,6,18", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim_end(),
        r#"{"set":[4,12,20,28],"g":4,"repeat_lower_bound":2}"#
    );
}

#[test]
fn theorem_check_on_fig5() {
    let dir = TempDir::new().unwrap();
    let (g, w) = corpus_files(dir.path(), "fig5");
    let out = hamnum(&["theorem-check", &g, "--walk", &w]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(
        stdout(&out).contains("PASS: ρ=6 ≥ g/2=6 (tight); f=12"),
        "{}",
        stdout(&out)
    );

    let json = hamnum(&["--json", "theorem-check", &g, "--walk", &w]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["verdict"], "ρ=6 ≥ g/2=6 (tight); f=12");
    assert_eq!(value["f"], 12);
    assert_eq!(value["sum_m"], 6);
    for key in ["phi", "n_plus", "n_minus", "delta_abs", "nu", "pi", "epsilon", "checks"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn k5_is_rejected() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("p planar 5 10\n");
    let mut id = 0;
    for u in 1..=5 {
        for v in u + 1..=5 {
            id += 1;
            text.push_str(&format!("e {id} {u} {v}\n"));
        }
    }
    // Any rotation system fails Euler's formula; take ascending edge ids.
    for (v, ring) in ["1 2 3 4", "1 5 6 7", "2 5 8 9", "3 6 8 10", "4 7 9 10"]
        .iter()
        .enumerate()
    {
        text.push_str(&format!("r {} 4 {ring}\n", v + 1));
    }
    let path = write(dir.path(), "k5.pg", &text);
    let out = hamnum(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NonPlanarEmbedding"), "{}", stderr(&out));
}

#[test]
fn exit_codes() {
    assert_eq!(hamnum(&["bogus"]).status.code(), Some(2));
    assert_eq!(hamnum(&["grinberg"]).status.code(), Some(2));
    let missing = hamnum(&["faces", "/definitely/not/here.pg"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr(&missing).contains("error: Io"));
    let odd = hamnum(&["grinberg", "--face-lengths", "1,4"]);
    assert_eq!(odd.status.code(), Some(1));
    assert!(stderr(&odd).contains("InvalidFaceLength"));
    let unknown = hamnum(&["corpus", "petersen"]);
    assert_eq!(unknown.status.code(), Some(1));
    assert!(stderr(&unknown).contains("UnknownFixture"));
}

#[test]
fn verify_rejects_non_spanning_walks() {
    let dir = TempDir::new().unwrap();
    let (g, _) = corpus_files(dir.path(), "grid");
    let short = write(dir.path(), "short.walk", "w 4 1 2 5 4\n");
    let out = hamnum(&["verify", &g, "--walk", short.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NotSpanning"), "{}", stderr(&out));
    let jump = write(dir.path(), "jump.walk", "w 2 1 9\n");
    let out = hamnum(&["verify", &g, "--walk", jump.to_str().unwrap()]);
    assert!(stderr(&out).contains("NonAdjacentStep"), "{}", stderr(&out));
}

#[test]
fn solve_and_bounds_on_the_grid() {
    let dir = TempDir::new().unwrap();
    let (g, _) = corpus_files(dir.path(), "grid");
    let out = hamnum(&["--json", "solve", &g]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["h"], 10);
    let out = hamnum(&["--json", "bounds", &g, "--solve"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["exact"], 10);
    assert_eq!(value["lower_grinberg"], 10);
}

#[test]
fn json_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let (g, w) = corpus_files(dir.path(), "hexcluster5");
    for args in [
        vec!["--json", "faces", g.as_str()],
        vec!["--json", "grinberg", g.as_str()],
        vec!["--json", "reduce", g.as_str(), "--walk", w.as_str()],
        vec!["--json", "solve", g.as_str(), "--limit", "20"],
    ] {
        let first = hamnum(&args);
        assert_eq!(first.status.code(), Some(0), "{args:?}: {}", stderr(&first));
        assert_eq!(first.stdout, hamnum(&args).stdout, "{args:?}");
    }
}

#[test]
fn solver_guard_needs_an_explicit_limit() {
    let dir = TempDir::new().unwrap();
    let (g, _) = corpus_files(dir.path(), "fig5");
    let out = hamnum(&["solve", &g]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("TooLarge"), "{}", stderr(&out));
}

#[test]
fn corpus_round_trips_through_faces() {
    let dir = TempDir::new().unwrap();
    let (g, _) = corpus_files(dir.path(), "hexcluster5");
    let out = hamnum(&["--json", "faces", &g]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut lengths: Vec<u64> = value["faces"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["length"].as_u64().unwrap())
        .collect();
    lengths.sort_unstable();
    assert_eq!(lengths, vec![6, 6, 6, 6, 6, 18]);
}

#[test]
fn run_reports_usage_errors_without_panicking() {
    let result = cli::run(["hamnum", "solve"]);
    assert_eq!(result.code, cli::EXIT_USAGE);
    let result = cli::run(["hamnum", "--quiet", "grinberg", "--face-lengths", "4,4,4,4,8"]);
    assert_eq!(result.code, cli::EXIT_OK);
    assert!(result.stdout().is_empty());
    let result = cli::run(["hamnum", "--json", "grinberg", "--face-lengths", "8,8,8,8,8,8,8,8,20"]);
    assert_eq!(
        result.json.as_deref(),
        Some(r#"{"set":[6,18,30,42,54],"g":6,"repeat_lower_bound":3}"#)
    );
}
