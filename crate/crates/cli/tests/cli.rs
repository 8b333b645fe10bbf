use std::path::Path;
use std::process::{Command, Output};

use dk_cli::report::{HomologyRow, Report};
use dk_cli::{Envelope, InputDoc};
use proptest::prelude::*;

const S1: &str = r#"{"version":"dk/1","algebra":{"symmetric_on":{"kind":"sphere","n":1}}}"#;
const D1: &str = r#"{"version":"dk/1","algebra":{"symmetric_on":{"kind":"disk","n":1}}}"#;
const FAT: &str = r#"{"version":"dk/1",
  "algebra":{"generators":[{"name":"x","degree":0},{"name":"xi","degree":1,"weight":2}],
             "differential":{"xi":"x^2"}},
  "point":{"x":0}}"#;
const COLLAPSE: &str = r#"{"version":"dk/1",
  "algebra":{"generators":[{"name":"x","degree":0},{"name":"xi","degree":1}],"differential":{"xi":"x"}},
  "target":{"generators":[]},
  "map":{"images":{"x":"0","xi":"0"}}}"#;
const FAT_TO_POINT: &str = r#"{"version":"dk/1",
  "algebra":{"generators":[{"name":"x","degree":0},{"name":"xi","degree":1,"weight":2}],
             "differential":{"xi":"x^2"}},
  "target":{"generators":[]},
  "map":{"images":{"x":"0","xi":"0"}}}"#;
const SPHERE2: &str = r#"{"version":"dk/1","simplicial":{"kind":"sphere","n":2}}"#;
const SUM: &str = r#"{"version":"dk/1","complex":{"kind":"sum","parts":[{"kind":"sphere","n":1},{"kind":"disk","n":2}]}}"#;

fn dk(dir: &Path, input: Option<&str>, args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dk"));
    cmd.args(args);
    if let Some(text) = input {
        let path = dir.join("in.json");
        std::fs::write(&path, text).unwrap();
        cmd.arg("--in").arg(&path);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> Envelope {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

#[test]
fn homology_of_symmetric_circle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dk(dir.path(), Some(S1), &["homology", "--degree", "1", "-W", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let Report::Homology(rows) = json(&out).report else { panic!("wrong report") };
    let nonzero: Vec<&HomologyRow> = rows.iter().filter(|r| r.dimension > 0).collect();
    let got: Vec<(usize, Option<u32>, usize)> = nonzero.iter().map(|r| (r.degree, r.weight, r.dimension)).collect();
    assert_eq!(got, vec![(0, Some(0), 1), (1, Some(1), 1)]);
    assert_eq!(rows.len(), 4);

    let table = dk(dir.path(), Some(S1), &["homology", "--degree", "1", "-W", "1", "--format", "table"]);
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(text.starts_with("degree  weight  dim"), "{text}");
}

#[test]
fn beta_check_on_disk_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dk(dir.path(), Some(D1), &["beta-check", "-T", "3", "-W", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let Report::BetaCheck(r) = json(&out).report else { panic!("wrong report") };
    assert!(r.verdict);
    assert_eq!(r.certificate.checked_through, 2);
}

#[test]
fn tangent_of_fat_point() {
    let dir = tempfile::tempdir().unwrap();
    let out = dk(dir.path(), Some(FAT), &["tangent"]);
    assert_eq!(out.status.code(), Some(0));
    let Report::Tangent(t) = json(&out).report else { panic!("wrong report") };
    assert_eq!(t.cohomology, vec![1, 1]);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(dk(p, Some(COLLAPSE), &["weq-check"]).status.code(), Some(0));
    assert_eq!(dk(p, Some(FAT_TO_POINT), &["weq-check", "-W", "3"]).status.code(), Some(1));
    assert_eq!(dk(p, Some(r#"{"version":"dk/1""#), &["homology"]).status.code(), Some(2));
    assert_eq!(dk(p, Some(r#"{"version":"dk/7"}"#), &["homology"]).status.code(), Some(2));
    assert_eq!(dk(p, Some(r#"{"version":"dk/1","algebra":{"generators":[{"name":"x","degree":0}]},"point":{"x":"1/0"}}"#), &["tangent"]).status.code(), Some(2));
    // point off the classical locus
    let off = FAT.replace(r#""x":0"#, r#""x":1"#);
    assert_eq!(dk(p, Some(&off), &["tangent"]).status.code(), Some(3));
    // unreduced simplicial algebra
    let unreduced = r#"{"version":"dk/1","simplicial":{"kind":"gamma","of":{"kind":"sphere","n":0}}}"#;
    assert_eq!(dk(p, Some(unreduced), &["connectivity"]).status.code(), Some(3));
    assert_eq!(dk(p, None, &["tor", "-m", "3"]).status.code(), Some(0));
    assert_eq!(dk(p, None, &["ez-table", "-T", "0"]).status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.json");
    let a = dk(dir.path(), Some(SPHERE2), &["homotopy", "--out", target.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert!(a.stdout.is_empty());
    let b = dk(dir.path(), Some(SPHERE2), &["homotopy"]);
    assert_eq!(std::fs::read(&target).unwrap(), b.stdout);
}

fn every_command(dir: &Path) -> Vec<Output> {
    vec![
        dk(dir, Some(S1), &["homology"]),
        dk(dir, Some(SUM), &["homology"]),
        dk(dir, Some(SPHERE2), &["homotopy"]),
        dk(dir, Some(FAT), &["homotopy", "-T", "3", "-W", "2"]),
        dk(dir, Some(SPHERE2), &["normalize"]),
        dk(dir, Some(SUM), &["gamma", "-T", "3"]),
        dk(dir, None, &["ez-table", "-T", "3"]),
        dk(
            dir,
            Some(r#"{"version":"dk/1","algebra":{"generators":[{"name":"x","degree":1}]},
                     "cells":[{"generator":{"name":"y","degree":2},"cycle":"x"}]}"#),
            &["attach"],
        ),
        dk(dir, None, &["koszul", "-m", "2"]),
        dk(dir, None, &["tor", "-m", "2"]),
        dk(dir, Some(FAT), &["q-functor", "-T", "3", "-W", "2"]),
        dk(dir, Some(D1), &["beta-check", "-T", "3", "-W", "2"]),
        dk(dir, Some(FAT), &["theta", "-T", "2", "-W", "2"]),
        dk(dir, Some(SPHERE2), &["connectivity", "-p", "3", "-W", "2"]),
        dk(dir, None, &["kernel-ideal-check", "--sphere", "1", "--level", "2", "--face", "1", "-W", "2"]),
        dk(dir, Some(FAT), &["classical-point"]),
        dk(dir, Some(FAT), &["tangent"]),
        dk(dir, Some(COLLAPSE), &["weq-check"]),
        dk(dir, Some(&COLLAPSE.replace("\"map\"", "\"point\":{},\"map\"")), &["fibration-check"]),
        dk(dir, Some(FAT), &["forms", "-T", "2", "-W", "2"]),
    ]
}

#[test]
fn emitted_documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for out in every_command(dir.path()) {
        assert!(matches!(out.status.code(), Some(0 | 1)), "{}", String::from_utf8_lossy(&out.stderr));
        let env = json(&out);
        let again = serde_json::to_string_pretty(&env).unwrap() + "\n";
        assert_eq!(again.as_bytes(), out.stdout.as_slice());
        let reparsed: Envelope = serde_json::from_str(&again).unwrap();
        assert_eq!(reparsed, env);
    }
}

#[test]
fn runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a: Vec<Vec<u8>> = every_command(dir.path()).into_iter().map(|o| o.stdout).collect();
    let b: Vec<Vec<u8>> = every_command(dir.path()).into_iter().map(|o| o.stdout).collect();
    assert_eq!(a, b);
}

#[test]
fn thread_cap_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str| {
        let path = dir.path().join("fat.json");
        std::fs::write(&path, FAT).unwrap();
        Command::new(env!("CARGO_BIN_EXE_dk"))
            .args(["beta-check", "-T", "3", "-W", "3", "--in"])
            .arg(&path)
            .env("DK_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

fn named_complex() -> impl Strategy<Value = serde_json::Value> {
    let leaf = prop_oneof![
        (0usize..4).prop_map(|n| serde_json::json!({"kind": "sphere", "n": n})),
        (0usize..4).prop_map(|n| serde_json::json!({"kind": "disk", "n": n})),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| {
        prop::collection::vec(inner, 0..3).prop_map(|parts| serde_json::json!({"kind": "sum", "parts": parts}))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn input_documents_round_trip(c in named_complex(), num in -20i64..20, den in 1i64..9) {
        let text = serde_json::json!({
            "version": "dk/1",
            "complex": c,
            "algebra": {"symmetric_on": c},
            "point": {"x": format!("{num}/{den}")},
        })
        .to_string();
        let doc = InputDoc::parse(&text).unwrap();
        let again = InputDoc::parse(&serde_json::to_string(&doc).unwrap()).unwrap();
        prop_assert_eq!(&doc, &again);
        prop_assert!(doc.complex(3).is_ok());
        prop_assert!(doc.algebra().is_ok());
    }
}
