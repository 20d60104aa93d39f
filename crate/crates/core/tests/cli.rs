use std::path::{Path, PathBuf};
use std::process::Command;

use lsha::cli::{run_from_args, EXIT_INPUT_ERROR, EXIT_RESOURCE_LIMIT, EXIT_SATURATED, EXIT_UNSAT};
use lsha::engine::{MergeMode, ProofTree};
use lsha::frontend::parse_problem;

fn example() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("problems/five_clauses.lsha")
}

/// Writes `text` to a file unique to this test process.
fn problem_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lsha-cli-{}-{name}.lsha", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("lsha-prove").chain(args.iter().copied());
    let code = run_from_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn example_is_refuted_at_ptrue() {
    let path = example();
    let (code, out, err) = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_UNSAT, "{err}");
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("UNSAT reliability=PTrue"));
    let tree = lines.collect::<Vec<_>>().join("\n");
    assert!(tree.contains("A^MFalse | B^False @ VTrue"), "{tree}");
    assert!(tree.contains("A^MFalse @ True"), "{tree}");
    assert!(tree.contains("□ @ PTrue"), "{tree}");
}

#[test]
fn naive_strategy_from_the_command_line() {
    let path = example();
    let (code, out, _) = run(&["-i", path.to_str().unwrap(), "--strategy", "naive"]);
    assert_eq!(code, EXIT_UNSAT);
    assert!(out.starts_with("UNSAT reliability=PTrue\n"));
}

#[test]
fn satisfiable_input_saturates() {
    let path = problem_file("sat", "clause: A^True.\n");
    let (code, out, _) = run(&["-i", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_SATURATED);
    assert_eq!(out, "SATURATED (no refutation)\n");
}

#[test]
fn malformed_input_reports_the_line() {
    let path = problem_file("bad-hedges", "% comment\nhedges: H+ = V < ; H- = P\nclause: A^True.\n");
    let (code, out, err) = run(&["-i", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT_ERROR);
    assert!(out.is_empty());
    assert!(err.contains("line 2"), "{err}");

    let path = problem_file("bad-hedge-name", "clause: A^QTrue.\n");
    let (code, _, err) = run(&["-i", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT_ERROR);
    assert!(err.contains("line 1"), "{err}");

    let (code, _, err) = run(&["-i", "/nonexistent/problem.lsha"]);
    assert_eq!(code, EXIT_INPUT_ERROR);
    assert!(err.contains("cannot read"), "{err}");

    let (code, _, _) = run(&["-i", example().to_str().unwrap(), "--strategy", "fastest"]);
    assert_eq!(code, EXIT_INPUT_ERROR);
}

#[test]
fn step_cap_is_a_resource_limit() {
    let path = example();
    let (code, out, err) = run(&["-i", path.to_str().unwrap(), "--max-steps", "2"]);
    assert_eq!(code, EXIT_RESOURCE_LIMIT);
    assert!(out.is_empty());
    assert!(err.contains("resource limit"), "{err}");

    // the file option applies when the flag is absent
    let text = std::fs::read_to_string(example()).unwrap() + "option: max_steps = 1\n";
    let path = problem_file("capped", &text);
    let (code, _, _) = run(&["-i", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_RESOURCE_LIMIT);
    let (code, _, _) = run(&["-i", path.to_str().unwrap(), "--max-steps", "1000"]);
    assert_eq!(code, EXIT_UNSAT);
}

#[test]
fn json_output_round_trips() {
    let path = example();
    let (code, out, _) = run(&["-i", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, EXIT_UNSAT);
    let json = out.split_once('\n').unwrap().1;
    let sig = parse_problem(&std::fs::read_to_string(example()).unwrap())
        .unwrap()
        .signature;
    let tree = ProofTree::from_json(&sig, json).unwrap();
    assert_eq!(tree.verify(MergeMode::Off), Ok(()));
    assert_eq!(sig.show(tree.reliability()).to_string(), "PTrue");
    assert_eq!(tree.inferences().count(), 3);
}

#[test]
fn dot_output() {
    let path = example();
    let (code, out, _) = run(&["-i", path.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(code, EXIT_UNSAT);
    let dot = out.split_once('\n').unwrap().1;
    assert!(dot.starts_with("digraph proof {"));
    assert_eq!(dot.matches(" -> ").count(), 6);
}

#[test]
fn oracle_agrees_on_the_example() {
    let path = example();
    let (code, out, err) = run(&["-i", path.to_str().unwrap(), "--check-oracle"]);
    assert_eq!(code, EXIT_UNSAT, "{err}");
    assert!(out.contains("\nORACLE agree\n"), "{out}");
    let json = out.split_once("ORACLE agree\n").unwrap().1;
    let value: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(value["agrees"], true);
    assert_eq!(value["oracle"]["verdict"], "unsat");

    let (code, _, err) = run(&[
        "-i",
        path.to_str().unwrap(),
        "--check-oracle",
        "--max-interpretations",
        "10",
    ]);
    assert_eq!(code, EXIT_RESOURCE_LIMIT);
    assert!(err.contains("oracle"), "{err}");
}

#[test]
fn merge_flag_without_value_means_max_label() {
    let path = problem_file(
        "merge",
        "clause: A^True | B^VTrue.\nclause: A^True | B^False.\nclause: A^False.\n",
    );
    let (bare, _, _) = run(&["-i", path.to_str().unwrap(), "--merge-duplicates"]);
    let (explicit, _, _) = run(&["-i", path.to_str().unwrap(), "--merge-duplicates", "max_label"]);
    assert_eq!(bare, explicit);
    let (code, _, _) = run(&["-i", path.to_str().unwrap(), "--merge-duplicates", "sometimes"]);
    assert_eq!(code, EXIT_INPUT_ERROR);
}

#[test]
fn binary_is_deterministic() {
    let path = example();
    let output = || {
        Command::new(env!("CARGO_BIN_EXE_lsha-prove"))
            .args(["--input", path.to_str().unwrap(), "--format", "json"])
            .output()
            .unwrap()
    };
    let (a, b) = (output(), output());
    assert_eq!(a.status.code(), Some(EXIT_UNSAT));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("UNSAT reliability=PTrue\n"));

    let help = Command::new(env!("CARGO_BIN_EXE_lsha-prove"))
        .arg("--help")
        .output()
        .unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("--check-oracle"));
}
