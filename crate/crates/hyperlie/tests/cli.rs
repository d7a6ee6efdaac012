use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn hyperlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlie")).args(args).env_remove("HYPERLIE_MAX_CARRIER").output().unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = hyperlie(args);
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = run(&a);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    (code, v)
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn check_exit_codes() {
    assert_eq!(run(&["check", &path("ex1.json")]).0, 0);
    let (code, out, _) = run(&["check", &path("broken_jacobi.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("jacobi"));
    let (code, _, err) = run(&["check", &path("corrupted.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("row `a`"), "{err}");
    assert_eq!(run(&["check", "/nonexistent/file.json"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let truncated = dir.path().join("t.json");
    let text = std::fs::read_to_string(fixture("ab1.json")).unwrap();
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(run(&["check", truncated.to_str().unwrap()]).0, 2);
    let dup = dir.path().join("d.json");
    std::fs::write(&dup, text.replacen("\"2a\"]", "\"a\"]", 1)).unwrap();
    let (code, _, err) = run(&["check", dup.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("duplicate identifier `a`"), "{err}");
}

#[test]
fn broken_structures_are_rejected_before_computation() {
    let (code, _, err) = run(&["relation", &path("broken_jacobi.json"), "--rel", "L"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a Lie hyperalgebra"));
}

#[test]
fn relation_examples() {
    let (code, v) = json(&["relation", &path("ex1.json"), "--rel", "Sn", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["classes"].as_array().unwrap().len(), 27);
    assert_eq!(v["mode"], "exact-oracle-match");
    assert_eq!(v["bounds"], serde_json::json!([2, 2, 1, 1]));
    let (_, v) = json(&["relation", &path("ex1.json"), "--rel", "L"]);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 81);
    assert!(classes.iter().all(|c| c.as_array().unwrap().len() == 1));
    let (_, v) = json(&["relation", &path("ex2.json"), "--rel", "A"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 1);
    // the inline spelling is the same selector
    assert_eq!(json(&["relation", &path("ex1.json"), "--rel", "Sn:2"]).1, json(&["relation", &path("ex1.json"), "--rel", "Sn", "--n", "2"]).1);
}

#[test]
fn text_uses_class_notation() {
    let (_, out, _) = run(&["relation", &path("ex1.json"), "--rel", "A"]);
    assert!(out.contains("0\u{0303} = {0, a, 2a, b,"), "{out}");
    let (_, out, _) = run(&["relation", &path("ex1.json"), "--rel", "Sn", "--n", "2"]);
    assert!(out.contains("b\u{0302} = {a+b, 2a+b, b}") || out.contains("b\u{0302} = {b, a+b, 2a+b}"), "{out}");
    let (_, out, _) = run(&["relation", &path("ex1.json"), "--rel", "L"]);
    assert!(out.contains("d\u{0304} = {d}"));
}

#[test]
fn non_exact_results_are_labeled() {
    let (_, out, _) = run(&["relation", &path("ex1.json"), "--rel", "A", "--bounds", "1,1,1,1", "--oracle", "off"]);
    assert!(out.contains("relative to computed relation at bounds 1,1,1,1"), "{out}");
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("coset.json");
    let o = hyperlie(&["gen", "coset-lie", "--q", "3", "--preset", "abelian", "--dim", "1", "--subgroup", "1,2", "-o", f.to_str().unwrap()]);
    assert!(o.status.success());
    let (code, out, _) = run(&["relation", f.to_str().unwrap(), "--rel", "A"]);
    assert_eq!(code, 0);
    assert!(out.contains("stabilized-heuristic") && out.contains("relative to computed relation at bounds 2,2,1,1"), "{out}");
    let (_, out, _) = run(&["quotient", f.to_str().unwrap(), "--rel", "A"]);
    assert!(out.contains("relative to computed relation"), "{out}");
    let (_, out, _) = run(&["relation", &path("ex1.json"), "--rel", "A"]);
    assert!(!out.contains("relative to"));
}

#[test]
fn quotient_examples() {
    for (rel, dim, len) in [("Sn:2", 3, 2), ("A", 1, 1), ("L", 4, 3)] {
        let (code, v) = json(&["quotient", &path("ex1.json"), "--rel", rel]);
        assert_eq!(code, 0);
        assert_eq!(v["dim"], dim, "{rel}");
        assert_eq!(v["solvable_length"], len, "{rel}");
        assert_eq!(v["field_order"], 3);
    }
    let (_, v) = json(&["quotient", &path("ex2.json"), "--rel", "L"]);
    assert_eq!(v["solvable_length"], serde_json::Value::Null);
    assert_eq!(v["derived_dims"], serde_json::json!([3, 3]));
    let (_, out, _) = run(&["quotient", &path("ex1.json"), "--rel", "Sn:2"]);
    assert!(out.contains("dimension 3, solvable of length 2"));
}

#[test]
fn analyze_examples() {
    let (code, v) = json(&["analyze", "snpart", &path("ex1.json"), "--n", "2", "--set", "a"]);
    assert_eq!(code, 1);
    assert_eq!(v["is_part"], false);
    assert_eq!(v["witness"]["left_expr"], "[b,c]");
    assert_eq!(v["witness"]["right_expr"], "[c,b]");
    let (code, v) = json(&["analyze", "snpart", &path("ex1.json"), "--n", "3", "--set", "a"]);
    assert_eq!((code, &v["is_part"]), (0, &serde_json::Value::Bool(true)));
    assert_eq!(run(&["analyze", "snpart", &path("ex1.json"), "--n", "2", "--set", "q"]).0, 2);

    let (code, v) = json(&["analyze", "s-stabilize", &path("ex1.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["m"], 3);
    assert_eq!(v["chain"], serde_json::json!([3, 27, 81, 81]));

    let (code, v) = json(&["analyze", "smallest", &path("ab1.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["minimal_classes"], serde_json::json!([["0"], ["a"], ["2a"]]));
    assert_eq!(v["checked_partitions"], 5);
    assert_eq!(v["agrees_with_engine"], true);
    assert_eq!(run(&["analyze", "smallest", &path("ex2.json")]).0, 3);

    let (code, v) = json(&["analyze", "transitivity", &path("ex1.json"), "--n", "3"]);
    assert_eq!((code, &v["transitive"]), (0, &serde_json::Value::Bool(true)));
}

#[test]
fn search_finds_the_scrambled_sl2() {
    let (code, v) = json(&["analyze", "search", "--seed", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["hit"]["name"], "perfect F5 seed 0");
    assert_eq!(v["hit"]["bounds"], serde_json::json!([1, 3, 1, 1]));
    // every orbit structure was checked first and found transitive
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().filter(|e| e["name"].as_str().unwrap().contains('/')).all(|e| e["transitive"] == true));
}

#[test]
fn gen_examples() {
    let (code, out, _) = run(&["gen", "trivial", "--q", "3", "--dim", "3", "--bracket", "a,b=c", "--bracket", "b,c=a", "--bracket", "c,a=b"]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(fixture("ex2.json")).unwrap());
    let (_, out, _) = run(&["gen", "trivial", "--q", "3", "--preset", "ex1"]);
    assert_eq!(out, std::fs::read_to_string(fixture("ex1.json")).unwrap());

    let (code, out, _) = run(&["gen", "coset", "--group", "Z4", "--subgroup", "0,2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "hypergroup");
    assert_eq!(v["elements"].as_array().unwrap().len(), 2);

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("qh.json");
    assert!(hyperlie(&["gen", "qhyperfield", "--q", "7", "--subgroup", "1,2,4", "-o", f.to_str().unwrap()]).status.success());
    assert_eq!(run(&["check", f.to_str().unwrap()]).0, 0);

    assert_eq!(run(&["gen", "trivial", "--q", "3", "--dim", "3", "--bracket", "a,b=a", "--bracket", "a,c=b"]).0, 2);
    assert_eq!(run(&["gen", "coset", "--group", "Z4", "--subgroup", "0,1"]).0, 2);
    assert_eq!(run(&["gen", "qhyperfield", "--q", "6", "--subgroup", "1"]).0, 2);
}

#[test]
fn exit_codes_for_bounds_and_resources() {
    assert_eq!(run(&["relation", &path("ex1.json"), "--rel", "L", "--bounds", "5,1,1,1"]).0, 3);
    assert_eq!(run(&["relation", &path("ex1.json"), "--rel", "L", "--bounds", "0,1,1,1"]).0, 2);
    assert_eq!(run(&["relation", &path("ex1.json"), "--rel", "L", "--bounds", "1,1"]).0, 2);
    assert_eq!(run(&["relation", &path("ex1.json"), "--rel", "Sn"]).0, 2);
    assert_eq!(run(&["relation", &path("ex1.json"), "--rel", "X"]).0, 2);
    let o = Command::new(env!("CARGO_BIN_EXE_hyperlie"))
        .args(["relation", &path("ex1.json"), "--rel", "L"])
        .env("HYPERLIE_MAX_CARRIER", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_hyperlie"))
        .args(["check", &path("ab1.json")])
        .env("HYPERLIE_MAX_CARRIER", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn characteristic_two_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f2.json");
    assert!(hyperlie(&["gen", "trivial", "--q", "2", "--dim", "2", "--bracket", "a,b=a", "-o", f.to_str().unwrap()]).status.success());
    assert_eq!(run(&["check", f.to_str().unwrap()]).0, 0);
    let (code, _, err) = run(&["quotient", f.to_str().unwrap(), "--rel", "Sn:1"]);
    assert_eq!(code, 2);
    assert!(err.contains("characteristic 2"));
    assert_eq!(run(&["analyze", "smallest", f.to_str().unwrap()]).0, 2);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["relation", &path("ex1.json"), "--rel", "Sn", "--n", "2", "--json"];
    let one = hyperlie(&[&args[..], &["--threads", "1"]].concat()).stdout;
    let four = hyperlie(&[&args[..], &["--threads", "4"]].concat()).stdout;
    assert_eq!(one, four);
    assert_eq!(one, hyperlie(&args).stdout);
    let a = hyperlie(&["analyze", "smallest", &path("ab1.json"), "--json", "--threads", "3"]).stdout;
    assert_eq!(a, hyperlie(&["analyze", "smallest", &path("ab1.json"), "--json"]).stdout);
}
