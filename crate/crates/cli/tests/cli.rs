//! End-to-end tests of the `srg` binary: exit-code discipline, output
//! determinism across runs and thread counts, and JSON schema round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

use srg_cli::report::{validate, ReportKind};

fn srg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn tmp_fixture(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("srg-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{name}.g6"));
    let out = srg(&["fixture", name, "-o", path.to_str().unwrap()]);
    assert!(out.status.success(), "fixture {name} failed");
    path
}

#[test]
fn params_exit_codes() {
    let ok = srg(&["params", "10", "3", "0", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.contains("theta = 1"), "{text}");
    assert!(text.contains("tau = -2"), "{text}");
    assert!(text.contains("m_theta = 5"), "{text}");
    assert!(text.contains("5/2"), "{text}");

    let infeasible = srg(&["params", "10", "3", "1", "1"]);
    assert_eq!(infeasible.status.code(), Some(1));

    let usage = srg(&["params", "10", "3"]);
    assert_eq!(usage.status.code(), Some(2));

    let unknown = srg(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn verify_distinguishes_srgs() {
    let pet = tmp_fixture("petersen");
    let ok = srg(&["verify", pet.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));

    // A path graph is not strongly regular: check failure, exit 1.
    let dir = std::env::temp_dir().join("srg-cli-tests");
    let bad = dir.join("path.g6");
    std::fs::write(&bad, "DQc\n").unwrap();
    let fail = srg(&["verify", bad.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(1));

    let missing = srg(&["verify", "/nonexistent/file.g6"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn hom_first_prints_a_coloring() {
    let shr = tmp_fixture("shrikhande");
    let rook = tmp_fixture("rook4");
    let out = srg(&[
        "hom",
        "--first",
        shr.to_str().unwrap(),
        rook.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("coloring"), "{}", stdout(&out));

    // No homomorphism the other way; still exit 0 with count 0.
    let none = srg(&[
        "hom",
        "--count",
        rook.to_str().unwrap(),
        shr.to_str().unwrap(),
    ]);
    assert_eq!(none.status.code(), Some(0));
    assert!(stdout(&none).contains("found: 0"), "{}", stdout(&none));
}

#[test]
fn outputs_are_deterministic_across_runs_and_threads() {
    let shr = tmp_fixture("shrikhande");
    let rook = tmp_fixture("rook4");
    let runs: Vec<String> = (0..2)
        .map(|_| {
            stdout(&srg(&[
                "hom",
                "--enumerate",
                shr.to_str().unwrap(),
                rook.to_str().unwrap(),
            ]))
        })
        .collect();
    assert_eq!(runs[0], runs[1]);

    for subcmd in [vec!["solve", "--clique"], vec!["solve", "--chromatic"]] {
        let mut args1: Vec<&str> = subcmd.clone();
        args1.push(shr.to_str().unwrap());
        let single = stdout(&srg(&args1));
        let mut args4: Vec<&str> = vec!["--threads", "4"];
        args4.extend(subcmd.iter());
        args4.push(shr.to_str().unwrap());
        let multi = stdout(&srg(&args4));
        assert_eq!(single, multi, "thread count changed output for {subcmd:?}");
    }
}

#[test]
fn json_outputs_validate_against_the_schemas() {
    let pet = tmp_fixture("petersen");
    let rook = tmp_fixture("rook4");
    let shr = tmp_fixture("shrikhande");
    let dir = std::env::temp_dir().join("srg-cli-tests");
    let catalog = dir.join("catalog.g6");
    let rook_line = std::fs::read_to_string(&rook).unwrap();
    let shr_line = std::fs::read_to_string(&shr).unwrap();
    std::fs::write(&catalog, format!("{rook_line}{shr_line}")).unwrap();

    let cases: Vec<(ReportKind, Vec<&str>)> = vec![
        (ReportKind::Params, vec!["params", "10", "3", "0", "1"]),
        (ReportKind::Verify, vec!["verify", pet.to_str().unwrap()]),
        (ReportKind::Cert, vec!["cert", pet.to_str().unwrap()]),
        (ReportKind::Theta, vec!["theta", pet.to_str().unwrap()]),
        (ReportKind::Solve, vec!["solve", pet.to_str().unwrap()]),
        (
            ReportKind::Hom,
            vec![
                "hom",
                "--first",
                shr.to_str().unwrap(),
                rook.to_str().unwrap(),
            ],
        ),
        (ReportKind::Core, vec!["core", pet.to_str().unwrap()]),
        (ReportKind::Hull, vec!["hull", rook.to_str().unwrap()]),
        (
            ReportKind::Theorem,
            vec!["theorem", shr.to_str().unwrap(), rook.to_str().unwrap()],
        ),
        (
            ReportKind::Classify,
            vec!["classify", catalog.to_str().unwrap()],
        ),
        (ReportKind::Fixture, vec!["fixture", "petersen"]),
    ];
    for (kind, args) in cases {
        let mut full = vec!["--json"];
        full.extend(args.iter());
        let out = srg(&full);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = stdout(&out);
        validate(kind, &text).unwrap_or_else(|e| panic!("{kind:?} schema: {e}\n{text}"));
        // Exact values are strings, never floats.
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_no_floats(&value, &format!("{kind:?}"));
    }
}

fn assert_no_floats(value: &serde_json::Value, context: &str) {
    match value {
        serde_json::Value::Number(n) => {
            assert!(n.is_u64() || n.is_i64(), "float {n} leaked into {context}");
        }
        serde_json::Value::Array(items) => {
            for item in items {
                assert_no_floats(item, context);
            }
        }
        serde_json::Value::Object(map) => {
            for item in map.values() {
                assert_no_floats(item, context);
            }
        }
        _ => {}
    }
}

#[test]
fn theta_reports_exact_value() {
    let pet = tmp_fixture("petersen");
    let out = srg(&["theta", pet.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("5/2"), "{}", stdout(&out));

    let c5 = tmp_fixture("c5");
    let out = srg(&["theta", c5.to_str().unwrap()]);
    assert!(stdout(&out).contains("\u{221a}5"), "{}", stdout(&out));
}

#[test]
fn core_and_hull_subcommands() {
    let pet = tmp_fixture("petersen");
    let rook = tmp_fixture("rook4");
    let out = srg(&["core", pet.to_str().unwrap(), "--both"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("core: true"));

    let out = srg(&["core", rook.to_str().unwrap()]);
    assert!(stdout(&out).contains("core: false"));
    assert!(stdout(&out).contains("coloring"));

    let out = srg(&["hull", pet.to_str().unwrap()]);
    assert!(stdout(&out).contains("complete: true"), "{}", stdout(&out));
    let out = srg(&["hull", rook.to_str().unwrap(), "--bruteforce"]);
    assert!(stdout(&out).contains("unchanged: true"), "{}", stdout(&out));
}

#[test]
fn classify_emits_dot_and_json_files() {
    let rook = tmp_fixture("rook4");
    let shr = tmp_fixture("shrikhande");
    let dir = std::env::temp_dir().join("srg-cli-tests");
    let catalog = dir.join("catalog2.g6");
    std::fs::write(
        &catalog,
        format!(
            "{}{}",
            std::fs::read_to_string(&rook).unwrap(),
            std::fs::read_to_string(&shr).unwrap()
        ),
    )
    .unwrap();
    let dot_path = dir.join("hasse.dot");
    let json_path = dir.join("catalog.json");
    let out = srg(&[
        "classify",
        catalog.to_str().unwrap(),
        "--dot",
        dot_path.to_str().unwrap(),
        "--json-out",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("types: A=1 B=1"), "{}", stdout(&out));
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.contains("-> \"B\""));
    let json = std::fs::read_to_string(&json_path).unwrap();
    validate(ReportKind::Classify, &json).unwrap();

    let hasse = srg(&["hasse", catalog.to_str().unwrap()]);
    assert_eq!(hasse.status.code(), Some(0));
    assert!(stdout(&hasse).contains("digraph"));
}

#[test]
fn classify_verify_pseudocore_flag() {
    let pet = tmp_fixture("petersen");
    let dir = std::env::temp_dir().join("srg-cli-tests");
    let catalog = dir.join("pet-catalog.g6");
    std::fs::write(&catalog, std::fs::read_to_string(&pet).unwrap()).unwrap();
    let out = srg(&["classify", catalog.to_str().unwrap(), "--verify-pseudocore"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("type X"), "{}", stdout(&out));
}

#[test]
fn global_flags_work_after_the_subcommand() {
    let rook = tmp_fixture("rook4");
    let out = srg(&[
        "solve",
        rook.to_str().unwrap(),
        "--clique",
        "--chromatic",
        "--budget",
        "100000000",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("clique number    4 (Delsarte)"), "{text}");
    assert!(
        text.contains("chromatic number 4 (Hoffman coloring)"),
        "{text}"
    );
}

#[test]
fn fixture_rejects_unknown_names() {
    let out = srg(&["fixture", "dodecahedron"]);
    assert_eq!(out.status.code(), Some(2));
    let out = srg(&["fixture", "paley(13)"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn theorem_subcommand_summarizes_kinds() {
    let shr = tmp_fixture("shrikhande");
    let rook = tmp_fixture("rook4");
    let out = srg(&["theorem", shr.to_str().unwrap(), rook.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("0 other"), "{text}");

    // Mismatched cosines are rejected as a check failure.
    let pet = tmp_fixture("petersen");
    let out = srg(&["theorem", pet.to_str().unwrap(), rook.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}
