use std::process::Command;

use clans::cli::{run, EXIT_FALSE, EXIT_INPUT, EXIT_OK};

fn clans(args: &[&str]) -> clans::cli::Outcome {
    run(std::iter::once("clans").chain(args.iter().copied()))
}

#[test]
fn enumerate_lists_six() {
    let out = clans(&["enumerate", "2", "1"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 6);
}

#[test]
fn compare_verdicts() {
    let out = clans(&["compare", "++-", "1+1", "-s", "2,1"]);
    assert_eq!((out.code, out.stdout.trim()), (EXIT_OK, "++- < 1+1"));
    let out = clans(&["compare", "1+1", "++-"]);
    assert_eq!((out.code, out.stdout.trim()), (EXIT_FALSE, "++- < 1+1"));
    let out = clans(&["compare", "11+", "+11"]);
    assert_eq!(out.code, EXIT_FALSE);
    assert!(out.stdout.contains("incomparable"));
    let out = clans(&["compare", "1122", "1122", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["relation"], "equal");
}

#[test]
fn interval_report() {
    let out = clans(&["interval", "2", "2", "1122", "1221"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out
        .stdout
        .starts_with("interval [1122, 1221]: 5 elements, length 2"));
    let out = clans(&["interval", "2", "2", "1122", "1221", "-f", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(
        (v["size"].as_u64(), v["length"].as_u64()),
        (Some(5), Some(2))
    );
    let out = clans(&["interval", "2", "1", "11+", "+11"]);
    assert_eq!(out.code, EXIT_INPUT);
}

#[test]
fn input_errors() {
    for args in [
        vec!["rank", "1+x"],
        vec!["rank", "1+1-", "-s", "3,1"],
        vec!["compare", "+-", "++"],
        vec!["enumerate", "5", "5"],
        vec!["rank", "1+1-", "-f", "dot"],
        vec!["frobnicate"],
        vec!["curves", "--samples", "1,0"],
        vec!["orbit", "/nonexistent/flag.json", "1", "1"],
    ] {
        let out = clans(&args);
        assert_eq!(out.code, EXIT_INPUT, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(
        clans(&["enumerate", "5", "5", "--max-size", "10"]).code,
        EXIT_OK
    );
}

#[test]
fn flag_commands_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flag.json");
    let path_str = path.to_str().unwrap();
    let out = clans(&["rep", "1-+1", "-f", "json", "-o", path_str]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.is_empty());
    let out = clans(&["orbit", path_str, "2", "2"]);
    assert_eq!((out.code, out.stdout.trim()), (EXIT_OK, "1-+1"));
    assert_eq!(
        clans(&["closure", path_str, "1221", "2", "2"]).code,
        EXIT_OK
    );
    assert_eq!(
        clans(&["closure", path_str, "1122", "2", "2"]).code,
        EXIT_FALSE
    );
    assert_eq!(clans(&["orbit", path_str, "3", "2"]).code, EXIT_INPUT);

    std::fs::write(&path, r#"{"n":4,"columns":[["1","0","0","1"],["0","0","1","0"],["0","1","0","0"],["1","0","0","-1"]]}"#).unwrap();
    assert_eq!(clans(&["orbit", path_str, "2", "2"]).stdout.trim(), "1-+1");
}

#[test]
fn poset_formats() {
    let dot = clans(&["poset", "1", "1", "--format", "dot"]).stdout;
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 2);
    let v: serde_json::Value =
        serde_json::from_str(&clans(&["poset", "2", "1", "-f", "json"]).stdout).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    assert!(clans(&["properties", "2", "2"])
        .stdout
        .contains("thin with adjoined bottom: no"));
}

#[test]
fn curves_and_verify() {
    let out = clans(&["curves"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.matches("PASS").count(), 20);
    let out = clans(&["verify", "2", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert_eq!(
        out.stdout.matches("PASS").count(),
        clans::verify::SUITES.len()
    );
}

#[test]
fn output_is_deterministic() {
    let a = clans(&["poset", "2", "2", "-f", "json"]).stdout;
    let b = clans(&["poset", "2", "2", "-f", "json"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_clans");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let out = status(&["compare", "++-", "1+1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "++- < 1+1");
    assert_eq!(status(&["compare", "11+", "+11"]).status.code(), Some(1));
    assert_eq!(status(&["rank", "??"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
