use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brace-forge"))
        .args(args)
        .current_dir(dir)
        .env_remove("BRACE_FORGE_CATALOG")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn rb_enumerate_s3() {
    let d = tempfile::tempdir().unwrap();
    let o = run(d.path(), &["rb", "enumerate", "--group", "S3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["passed"], true);
    let count = v["report"]["data"]["count"].as_u64().unwrap();
    assert_eq!(v["result"].as_array().unwrap().len() as u64, count);
}

#[test]
fn repro_s3_b1_passes() {
    let d = tempfile::tempdir().unwrap();
    let o = run(d.path(), &["paper", "repro", "--example", "s3-b1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn criterion_alias_selects_target() {
    let d = tempfile::tempdir().unwrap();
    let a = run(d.path(), &["paper", "repro", "--example", "criterion-14", "--format", "json"]);
    let b = run(d.path(), &["paper", "repro", "--example", "colazzo", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_solution_exits_one_with_witness() {
    let d = tempfile::tempdir().unwrap();
    std::fs::write(d.path().join("bad.json"), r#"{"order":2,"pairs":[[[0,0],[1,1]],[[1,0],[0,1]]]}"#)
        .unwrap();
    let o = run(d.path(), &["ybe", "verify", "--in", "bad.json", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    let braid = v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "braid_relation")
        .unwrap()
        .clone();
    assert_eq!(braid["passed"], false);
    assert_eq!(braid["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn user_errors_exit_two() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(d.path(), &["rb", "enumerate", "--group", "Nope"])), 2);
    assert_eq!(code(&run(d.path(), &["ybe", "verify", "--in", "missing.json"])), 2);
    std::fs::write(d.path().join("junk.json"), "{not json").unwrap();
    assert_eq!(code(&run(d.path(), &["brace", "invariants", "--in", "junk.json"])), 2);
    std::fs::write(d.path().join("op.json"), r#"{"group":"C3","weight":1,"images":[0,1,7]}"#).unwrap();
    assert_eq!(code(&run(d.path(), &["rb", "verify", "--in", "op.json"])), 2);
    assert_eq!(code(&run(d.path(), &["rb", "enumerate", "--group", "S4", "--max-order", "6"])), 2);
    assert_eq!(code(&run(d.path(), &["frobnicate"])), 2);
}

#[test]
fn brace_file_violating_the_axiom_is_rejected_with_triple() {
    let d = tempfile::tempdir().unwrap();
    let s3 = run(d.path(), &["group", "build", "-g", "S3", "--format", "json"]);
    let c6 = run(d.path(), &["group", "build", "-g", "C6", "--format", "json"]);
    let brace = serde_json::json!({
        "name": "bad",
        "order": 6,
        "add": json(&c6)["table"],
        "circ": json(&s3)["table"],
    });
    std::fs::write(d.path().join("b.json"), brace.to_string()).unwrap();
    let o = run(d.path(), &["brace", "invariants", "--in", "b.json"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("(a, b, c)"));
    let v = run(d.path(), &["brace", "verify", "--in", "b.json"]);
    assert_eq!(code(&v), 1);
}

#[test]
fn pipeline_from_operator_to_solution() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    let steps: [&[&str]; 5] = [
        &[
            "rb",
            "construct",
            "-g",
            "S3",
            "--kind",
            "splitting",
            "--h",
            "(1 2)",
            "--l",
            "(1 2 3)",
            "--out",
            "op.json",
        ],
        &["brace", "from-rb", "--in", "op.json", "--out", "b.json"],
        &["ybe", "from-brace", "--in", "b.json", "--out", "s.json"],
        &["embed", "recover", "--in", "b.json", "--out", "r.json"],
        &["brace", "from-rb", "--in", "r.json", "--out", "b2.json"],
    ];
    for s in steps {
        assert_eq!(code(&run(p, s)), 0, "{s:?}");
    }
    assert_eq!(code(&run(p, &["ybe", "verify", "--in", "s.json"])), 0);
    assert_eq!(code(&run(p, &["ybe", "rack-form", "--in", "s.json"])), 0);
    assert_eq!(code(&run(p, &["embed", "verify", "--in", "b.json"])), 0);
    assert_eq!(code(&run(p, &["multibrace", "build", "--in", "op.json", "--k", "2", "--out", "m.json"])), 0);
    assert_eq!(code(&run(p, &["multibrace", "verify", "--in", "m.json"])), 0);
    let iso = run(p, &["brace", "isomorphic", "--in", "b.json", "--other", "b2.json", "--format", "json"]);
    assert_eq!(json(&iso)["report"]["data"]["isomorphic"], true);
}

#[test]
fn group_json_round_trips() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    assert_eq!(code(&run(p, &["group", "build", "-g", "C2xS3", "--out", "g.json"])), 0);
    let again = run(p, &["group", "build", "--in", "g.json", "--format", "json"]);
    assert_eq!(std::fs::read(p.join("g.json")).unwrap(), again.stdout);
}

#[test]
fn reports_are_deterministic() {
    let d = tempfile::tempdir().unwrap();
    let args = ["ybe", "rack-sweep", "--exhaustive", "2", "--samples", "300", "--format", "json"];
    let a = run(d.path(), &args);
    let mut more = args.to_vec();
    more.extend(["--jobs", "1"]);
    let b = run(d.path(), &more);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = run(d.path(), &["brace", "enumerate", "-g", "D4"]);
    let e = run(d.path(), &["brace", "enumerate", "-g", "D4", "--jobs", "2"]);
    assert_eq!(c.stdout, e.stdout);
}

#[test]
fn catalog_override_from_env() {
    let d = tempfile::tempdir().unwrap();
    let cat = r#"{"groups":[{"name":"Klein","descriptor":"C2xC2"}]}"#;
    std::fs::write(d.path().join("cat.json"), cat).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_brace-forge"))
        .args(["rb", "enumerate", "-g", "Klein"])
        .current_dir(d.path())
        .env("BRACE_FORGE_CATALOG", d.path().join("cat.json"))
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn text_tables_are_aligned() {
    let d = tempfile::tempdir().unwrap();
    let o = run(d.path(), &["paper", "list"]);
    let text = stdout(&o);
    let col = |l: &str| {
        let i = l.find("  ")?;
        Some(i + l[i..].find(|c| c != ' ')?)
    };
    let first = col(text.lines().next().unwrap());
    assert!(first.is_some());
    assert!(text.lines().all(|l| col(l) == first), "{text}");
}
