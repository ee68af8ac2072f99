use std::process::{Command, Output};

const WORKED_EXAMPLE: &str = "1 2 1 3 2 4 3 5 6 4 5 7 6 7";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeknot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)))
}

#[test]
fn invariant_exit_codes() {
    let o = run(&["invariant", "--format", "json", WORKED_EXAMPLE]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), r#"{"support":[4]}"#));
    let o = run(&["invariant", "--n", "3", "--format", "json", "1 2 1 2"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), r#"{"support":[]}"#));
    let o = run(&["invariant", "--n", "1", "--format", "json", "-"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), r#"{"support":[]}"#));
    assert_eq!(run(&["invariant", "1 2 1"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "1 | 1"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "--n", "0", "1 1"]).status.code(), Some(2));
}

#[test]
fn invariant_text() {
    assert_eq!(stdout(&run(&["invariant", WORKED_EXAMPLE])).trim(), "a4");
    assert_eq!(stdout(&run(&["invariant", "1 1"])).trim(), "0");
}

#[test]
fn delta_lists() {
    assert_eq!(
        json(&["delta", "--n", "1", "--format", "json", "1 1"]),
        serde_json::json!(["- | -"])
    );
    assert_eq!(
        json(&["delta", "--n", "1", "--format", "json", "1 2 3 1 2 3"]),
        serde_json::json!(["2 3 | 2 3"])
    );
    assert_eq!(
        json(&["delta", "--n", "1", "--format", "json", WORKED_EXAMPLE])
            .as_array()
            .unwrap()
            .len(),
        3
    );
    assert_eq!(
        json(&["delta", "--format", "json", WORKED_EXAMPLE])
            .as_array()
            .unwrap()
            .len(),
        2
    );
    assert_eq!(stdout(&run(&["delta", "--n", "2", "1 1"])).trim(), "0");
}

#[test]
fn delta_dot() {
    let out = stdout(&run(&["delta", "--n", "1", "--format", "dot", "1 2 1 3 2 3"]));
    assert!(out.starts_with("graph gamma0 {"), "{out}");
    assert!(!run(&["random", "--format", "dot"]).status.success());
}

#[test]
fn moves_list_and_apply() {
    let list = json(&["moves", "list", "--format", "json", "1 1"]);
    assert_eq!(list["r1"].as_array().unwrap().len(), 1);
    assert_eq!(list["configurations"].as_array().unwrap().len(), 1);
    let segment = r#"{"segments":[{"start":0,"end":0,"len":4}]}"#;
    assert_eq!(
        stdout(&run(&["moves", "apply", "--site", segment, "1 2 1 2"])).trim(),
        "-"
    );
    assert_eq!(
        stdout(&run(&["moves", "apply", "--kind", "r3", "1 2 1 3 2 3"])).trim(),
        "2 1 3 1 3 2"
    );
    assert_eq!(
        stdout(&run(&[
            "moves",
            "apply",
            "--kind",
            "cobordism",
            "--index",
            "1",
            "3 1 2 1 2 3"
        ]))
        .trim(),
        "3 3"
    );
    let skewed = r#"{"segments":[{"start":0,"end":3,"len":4}]}"#;
    assert_eq!(
        run(&["moves", "apply", "--site", skewed, "1 2 1 2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["moves", "apply", "--kind", "r1", "1 2 1 2"]).status.code(),
        Some(2)
    );
}

#[test]
fn listed_sites_apply() {
    let word = "1 2 1 3 2 3";
    let list = json(&["moves", "list", "--format", "json", word]);
    for site in list["r3"].as_array().unwrap() {
        let o = run(&["moves", "apply", "--site", &site.to_string(), word]);
        assert!(o.status.success(), "{site}");
    }
    for config in list["configurations"].as_array().unwrap() {
        let o = run(&["moves", "apply", "--site", &config.to_string(), word]);
        assert!(o.status.success(), "{config}");
    }
}

#[test]
fn shrink() {
    assert_eq!(
        stdout(&run(&["moves", "shrink", "--budget", "50", "1 2 3 3 2 1"])).trim(),
        "-"
    );
}

#[test]
fn random_is_deterministic() {
    let a = run(&["random", "--chords", "6", "--seed", "11", "--count", "3"]);
    let b = run(&["random", "--chords", "6", "--seed", "11", "--count", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).lines().count(), 3);
    assert_eq!(stdout(&run(&["random", "--chords", "0"])).trim(), "-");
    assert_eq!(stdout(&run(&["random", "--chords", "1", "--seed", "5"])).trim(), "1 1");
    let multi = json(&["random", "--chords", "3", "--circles", "3", "--format", "json"]);
    assert_eq!(multi[0].as_str().unwrap().matches('|').count(), 2);
}

#[test]
fn survey_tables() {
    assert_eq!(
        json(&["survey", "--chords", "2", "--format", "json"]),
        serde_json::json!([])
    );
    assert_eq!(
        json(&["survey", "--chords", "0", "--format", "json"]),
        serde_json::json!([])
    );
}

#[test]
fn oracle_counts() {
    assert_eq!(stdout(&run(&["oracle", "1 2 3 1 2 3"])), "trace 2\nnullity 2\n");
    let v = json(&["oracle", "--subset", "1 2", "--format", "json", "1 2 1 2"]);
    assert_eq!((v["trace"].as_u64(), v["nullity"].as_u64()), (Some(1), Some(1)));
    assert_eq!(run(&["oracle", "--subset", "9", "1 1"]).status.code(), Some(2));
}

#[test]
fn file_input() {
    let path = std::env::temp_dir().join(format!("freeknot-cli-{}.txt", std::process::id()));
    std::fs::write(&path, format!("# worked example\n{WORKED_EXAMPLE}\n")).unwrap();
    let o = run(&["invariant", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "a4"));
}
