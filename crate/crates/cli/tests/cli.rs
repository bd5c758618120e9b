use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;
use tempfile::TempDir;

fn mubcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mubcoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn entries(file: &Path) -> Vec<Vec<(f64, f64)>> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|z| (z[0].as_f64().unwrap(), z[1].as_f64().unwrap()))
                .collect()
        })
        .collect()
}

#[test]
fn verify_qubit_passes() {
    let out = mubcoh(&["verify", "qubit", "--samples", "10000", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["claim_id"], "qubit");
    assert_eq!(report["passed"], true);
    assert_eq!(report["seed"], 42);
}

#[test]
fn verify_is_deterministic() {
    let a = mubcoh(&["verify", "xstate", "--samples", "500", "--seed", "9"]);
    let b = mubcoh(&["verify", "xstate", "--samples", "500", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_all_is_fast_and_passes() {
    let start = Instant::now();
    let out = mubcoh(&["verify", "all"]);
    assert!(start.elapsed() < Duration::from_secs(10));
    assert_eq!(out.status.code(), Some(0));
    let reports = stdout_json(&out);
    let ids: Vec<_> = reports
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["claim_id"].clone())
        .collect();
    assert_eq!(ids, ["qubit", "xstate", "bell", "werner-iso"]);
}

#[test]
fn self_test_detects_perturbations() {
    let out = mubcoh(&["verify", "all", "--self-test", "--samples", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    for outcome in stdout_json(&out).as_array().unwrap() {
        assert_eq!(outcome["detected"], true);
        assert_eq!(outcome["report"]["passed"], false);
    }
}

#[test]
fn failed_verification_exits_one() {
    // A negative tolerance is rejected, but zero is allowed and strict.
    let out = mubcoh(&["verify", "bell", "--samples", "2000", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["passed"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mubcoh(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(mubcoh(&["state", "werner"]).status.code(), Some(2));
    assert_eq!(mubcoh(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        mubcoh(&["state", "werner", "--p", "1.5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        mubcoh(&["state", "bloch", "--x", "1", "--y", "1", "--z", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn werner_three_quarters_is_maximally_mixed() {
    let dir = TempDir::new().unwrap();
    let w = dir.path().join("w.json");
    let out = mubcoh(&["state", "werner", "--p", "0.75", "--out", path_str(&w)]);
    assert_eq!(out.status.code(), Some(0));
    let m = entries(&w);
    assert_eq!(m.len(), 4);
    for (i, row) in m.iter().enumerate() {
        for (j, &z) in row.iter().enumerate() {
            let want = if i == j { 0.25 } else { 0.0 };
            assert!(
                (z.0 - want).abs() <= 1e-15 && z.1.abs() <= 1e-15,
                "({i},{j}) = {z:?}"
            );
        }
    }
}

#[test]
fn missing_basis_file_exits_two() {
    let dir = TempDir::new().unwrap();
    let s = dir.path().join("s.json");
    mubcoh(&["state", "iso", "--f", "1", "--out", path_str(&s)]);
    let out = mubcoh(&[
        "coherence",
        "--state",
        path_str(&s),
        "--basis",
        path_str(&dir.path().join("missing.json")),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
}

#[test]
fn malformed_basis_names_the_problem() {
    let dir = TempDir::new().unwrap();
    let s = dir.path().join("s.json");
    let b = dir.path().join("b.json");
    mubcoh(&[
        "state",
        "bloch",
        "--x",
        "0",
        "--y",
        "0",
        "--z",
        "1",
        "--out",
        path_str(&s),
    ]);
    std::fs::write(
        &b,
        r#"{"dim": 2, "label": "bad", "kets": [[[1,0],[0,0]],[[1,0],[0,0]]]}"#,
    )
    .unwrap();
    let out = mubcoh(&[
        "coherence",
        "--state",
        path_str(&s),
        "--basis",
        path_str(&b),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn states_round_trip_through_coherence() {
    let dir = TempDir::new().unwrap();
    let cases: &[(&[&str], &str, f64)] = &[
        (
            &["bloch", "--x", "0.6", "--y", "0", "--z", "0.8"],
            "pauli",
            0.6,
        ),
        (
            &[
                "x3",
                "--variant",
                "nabla",
                "--x",
                "0.2",
                "--y",
                "0.3",
                "--z",
                "0.1",
            ],
            "dim3",
            f64::NAN,
        ),
        (
            &["bell", "--c1", "-0.2", "--c2", "0.4", "--c3", "0.1"],
            "amub",
            f64::NAN,
        ),
        (&["werner", "--p", "1"], "amub", 1.0 / 3.0),
        (&["iso", "--f", "0.25"], "amub", 0.0),
    ];
    for (k, (args, set, first_l1)) in cases.iter().enumerate() {
        let file = dir.path().join(format!("s{k}.json"));
        let mut full = vec!["state"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", path_str(&file)]);
        assert_eq!(mubcoh(&full).status.code(), Some(0), "{args:?}");
        let written = std::fs::read_to_string(&file).unwrap();

        let out = mubcoh(&["coherence", "--state", path_str(&file), "--set", set]);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let reports = stdout_json(&out);
        let reports = reports.as_array().unwrap();
        assert_eq!(reports.len(), if *set == "dim3" { 4 } else { 3 });
        assert!(reports.iter().all(|r| r["relative_entropy"].is_f64()));
        if !first_l1.is_nan() {
            let l1 = reports[0]["l1"].as_f64().unwrap();
            assert!((l1 - first_l1).abs() <= 1e-12, "{args:?}: {l1}");
        }
        // Reading the file does not alter it.
        assert_eq!(std::fs::read_to_string(&file).unwrap(), written);
    }
}

#[test]
fn unphysical_state_reports_l1_only() {
    let dir = TempDir::new().unwrap();
    let s = dir.path().join("s.json");
    let out = mubcoh(&[
        "state",
        "bell",
        "--c1",
        "1",
        "--c2",
        "1",
        "--c3",
        "1",
        "--out",
        path_str(&s),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = mubcoh(&["coherence", "--state", path_str(&s), "--set", "amub"]);
    assert_eq!(out.status.code(), Some(0));
    for r in stdout_json(&out).as_array().unwrap() {
        assert!(r["relative_entropy"].is_null());
        assert!((r["l1"].as_f64().unwrap() - 1.0).abs() <= 1e-12);
    }
    let strict = mubcoh(&[
        "state",
        "bell",
        "--c1",
        "1",
        "--c2",
        "1",
        "--c3",
        "1",
        "--require-physical",
    ]);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn dimension_mismatch_exits_two() {
    let dir = TempDir::new().unwrap();
    let s = dir.path().join("s.json");
    mubcoh(&["state", "werner", "--p", "0.5", "--out", path_str(&s)]);
    let out = mubcoh(&["coherence", "--state", path_str(&s), "--set", "pauli"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn basis_gen_and_check() {
    let dir = TempDir::new().unwrap();
    let files: Vec<_> = (1..=3)
        .map(|k| dir.path().join(format!("a{k}.json")))
        .collect();
    for (k, f) in files.iter().enumerate() {
        let idx = (k + 1).to_string();
        assert_eq!(
            mubcoh(&[
                "basis",
                "gen",
                "pauli",
                "--index",
                &idx,
                "--out",
                path_str(f)
            ])
            .status
            .code(),
            Some(0)
        );
    }
    let ok = mubcoh(&["basis", "check", path_str(&files[0]), path_str(&files[2])]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_json(&ok)["report"]["passed"], true);
    let same = mubcoh(&["basis", "check", path_str(&files[1]), path_str(&files[1])]);
    assert_eq!(same.status.code(), Some(1));

    let set = mubcoh(&["basis", "gen", "dim3"]);
    let bases = stdout_json(&set);
    let labels: Vec<_> = bases
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["label"].clone())
        .collect();
    assert_eq!(labels, ["beta1", "beta2", "beta3", "beta4"]);
    assert_eq!(
        mubcoh(&["basis", "gen", "pauli", "--index", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(mubcoh(&["basis", "gen", "dim5"]).status.code(), Some(2));
}

#[test]
fn amub_check_uses_unsquared_overlap() {
    let dir = TempDir::new().unwrap();
    let g1 = dir.path().join("g1.json");
    let g3 = dir.path().join("g3.json");
    mubcoh(&[
        "basis",
        "gen",
        "amub",
        "--index",
        "1",
        "--out",
        path_str(&g1),
    ]);
    mubcoh(&[
        "basis",
        "gen",
        "amub",
        "--index",
        "3",
        "--out",
        path_str(&g3),
    ]);
    let out = mubcoh(&[
        "basis",
        "check",
        path_str(&g1),
        path_str(&g3),
        "--amub",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["report"]["convention"], "unsquared");
    assert_eq!(report["report"]["target"], 0.5);
}

#[test]
fn surface_outputs() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("fig1.csv");
    assert_eq!(
        mubcoh(&["surface", "fig1", "--grid", "11", "--out", path_str(&csv)])
            .status
            .code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("c1,c2,value\n"));
    assert_eq!(text.lines().count(), 1 + 11 * 11);

    let meshes = dir.path().join("fig2");
    let out = mubcoh(&[
        "surface",
        "fig2",
        "--grid",
        "21",
        "--levels",
        "0.5,2",
        "--out",
        path_str(&meshes),
    ]);
    assert_eq!(out.status.code(), Some(0));
    for name in ["level_0.5.obj", "level_2.obj"] {
        let obj = std::fs::read_to_string(meshes.join(name)).unwrap();
        assert!(obj.lines().any(|l| l.starts_with("v ")));
        assert!(obj.lines().any(|l| l.starts_with("f ")));
    }
    // Meshes need an output directory.
    assert_eq!(
        mubcoh(&["surface", "fig2", "--grid", "11"]).status.code(),
        Some(2)
    );
    let bad_level = mubcoh(&[
        "surface",
        "fig2",
        "--grid",
        "11",
        "--levels",
        "3.5",
        "--out",
        path_str(&meshes),
    ]);
    assert_eq!(bad_level.status.code(), Some(2));
}
