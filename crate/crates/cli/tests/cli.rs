use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_indrep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const EXAMPLE: &str = r#"{"group":{"family":"Sp","p":2,"q":2},"kappa":[1],"factors":[{"k":1,"ell":1,"t_im":"0"}],"tail":"trivial"}"#;

#[test]
fn decompose_example_has_two_constituents() {
    let o = run(&["decompose"], EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "decompose");
    assert_eq!(v["constituent_count"], 2);
    assert_eq!(v["input"]["kappa"], json!([1]));
    for c in v["constituents"].as_array().unwrap() {
        assert_eq!(c["param"]["factors"], json!([]));
        assert_eq!(
            c["infinitesimal_character"],
            json!(["2/1", "1/1", "1/1", "1/1"])
        );
        assert_ne!(c["tail_range"], "out_of_range");
    }
}

#[test]
fn empty_kappa_echoes_the_tail() {
    let req =
        r#"{"group":{"family":"Sp","p":3,"q":2},"factors":[],"tail":{"pp":[[1],[1]],"ells":[0]}}"#;
    let v = json_of(&run(&["decompose"], req));
    assert_eq!(v["constituent_count"], 1);
    assert_eq!(
        v["constituents"][0]["param"]["tail"],
        json!({"pp": [[1], [1]], "ells": [0]})
    );
}

#[test]
fn degenerate_principal_series() {
    let v = json_of(&run(
        &["decompose"],
        r#"{"degenerate_ps":{"k":3,"ell":1,"t_im":"0"}}"#,
    ));
    assert_eq!(v["constituents"].as_array().unwrap().len(), 4);
    let v = json_of(&run(
        &["decompose"],
        r#"{"degenerate_ps":{"k":3,"ell":0,"t_im":"0"}}"#,
    ));
    assert_eq!(v["irreducible"], true);
}

#[test]
fn malformed_json_reports_position() {
    let o = run(&["decompose"], "{\"group\": ");
    assert_eq!(o.status.code(), Some(1));
    let v = json_of(&o);
    assert_eq!(v["error"]["kind"], "invalid_input");
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("line 1 column"));
    assert!(!o.stderr.is_empty());
}

#[test]
fn verdicts() {
    let one_dim = r#"{"group":{"family":"SOstar","n":6},"factors":[{"k":1,"ell":"-inf","t_im":"1/2"},{"k":1,"ell":"-inf"}],"tail":"trivial"}"#;
    let v = json_of(&run(&["verdict"], one_dim));
    assert_eq!(v["verdict"], "Irreducible");
    assert_eq!(v["reason"], "one-dimensional-inducing-data");

    let o = run(&["verdict"], EXAMPLE);
    assert_eq!(
        o.status.code(),
        Some(1),
        "odd ell with t = 0 must be reduced first"
    );

    let reduced = r#"{"group":{"family":"SOstar","n":8},"factors":[{"k":2,"ell":0},{"k":2,"ell":0}],"tail":"trivial"}"#;
    let v = json_of(&run(&["verdict"], reduced));
    assert_eq!(v["verdict"], "ReducedTo");
    assert_eq!(
        v["reduced_problem"]["group"],
        json!({"family": "SOstar", "n": 8})
    );
}

#[test]
fn check_lemmas() {
    let o = run(&["check-lemmas", "--max-rank", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 5);

    let v = json_of(&run(&["check-lemmas", "--max-rank", "0"], ""));
    assert_eq!(v["passed"], true);
    assert!(v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["cases"] == 0));

    let v = json_of(&run(&["check-lemmas", "--lemma", "dim-identity"], ""));
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    assert_eq!(suites[0]["suite"], "dim-identity");

    assert_eq!(
        run(&["check-lemmas", "--max-rank", "9"], "").status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["check-lemmas", "--lemma", "nope"], "").status.code(),
        Some(1)
    );
}

#[test]
fn cartans_and_ccdim() {
    let v = json_of(&run(
        &["cartans"],
        r#"{"group":{"family":"SOstar","n":4},"kappa":[]}"#,
    ));
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["is_path"], true);
    assert_eq!(v["cayley_edges"].as_array().unwrap().len(), 2);

    let v = json_of(&run(&["ccdim", "--m", "3"], ""));
    assert_eq!(v["block"]["block_dimension"], "60");
    assert_eq!(v["sum_macdonald"], "60");
    assert_eq!(v["passed"], true);
    assert_eq!(run(&["ccdim", "--m", "0"], "").status.code(), Some(1));
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["decompose"], EXAMPLE).stdout;
    let b = run(&["decompose"], EXAMPLE).stdout;
    assert_eq!(a, b);
}

#[test]
fn files_text_format_and_batches() {
    let dir = std::env::temp_dir().join(format!("indrep-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.json");
    let output = dir.join("out.txt");
    std::fs::write(&input, EXAMPLE).unwrap();
    let o = run(
        &[
            "decompose",
            "--input",
            input.to_str().unwrap(),
            "--output",
            output.to_str().unwrap(),
            "--format",
            "text",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&output).unwrap();
    assert!(text.contains("constituent_count: 2"), "{text}");

    let batch = format!("{EXAMPLE}\nnot json\n{EXAMPLE}\n");
    let o = run(&["decompose", "--jobs", "2"], &batch);
    assert_eq!(o.status.code(), Some(1));
    let lines: Vec<Value> = String::from_utf8(o.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["constituent_count"], 2);
    assert_eq!(lines[1]["error"]["exit_code"], 1);
    assert_eq!(lines[0], lines[2]);
    std::fs::remove_dir_all(&dir).unwrap();
}
