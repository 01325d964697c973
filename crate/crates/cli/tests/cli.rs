use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alliance"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str], stdin: &str) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full, stdin);
    let v: Value = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&o.stderr)));
    validate(&v);
    (o.status.code().unwrap(), v)
}

fn validate(v: &Value) {
    let schema: Value = serde_json::from_str(include_str!("../schema/envelope.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    if let Err(errors) = compiled.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:#?}");
    };
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = run(&full, "");
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn analyze_k33() {
    let (code, v) = json(&["analyze", "--all"], &gen(&["bipartite", "3", "3"]));
    assert_eq!(code, 0);
    let e = &v["payload"]["graphs"][0]["analysis"]["entries"];
    for (id, want) in [("gamma_o", 3), ("gamma_so", 3), ("gamma_i", 3), ("alpha", 3), ("a_i", 2)] {
        assert_eq!(e[id]["value"], want, "{id}");
    }
}

#[test]
fn analyze_prism_gamma_o_only() {
    let (_, v) = json(&["analyze", "--gamma-o"], &gen(&["prism", "4"]));
    let e = v["payload"]["graphs"][0]["analysis"]["entries"].as_object().unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e["gamma_o"]["value"], 4);
}

#[test]
fn analyze_gamma_k_and_multiple_graphs() {
    let input = format!("{}{}", gen(&["petersen"]), gen(&["complete", "4"]));
    let (_, v) = json(&["analyze", "--gamma-k", "2", "--alpha"], &input);
    let graphs = v["payload"]["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 2);
    assert_eq!(graphs[0]["analysis"]["entries"]["gamma_k(2)"]["value"], 4);
    assert_eq!(graphs[1]["analysis"]["entries"]["alpha"]["value"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze"], "0 1\n2 3\n").status.code(), Some(4));
    assert_eq!(run(&["analyze"], "D?\n").status.code(), Some(2));
    assert_eq!(run(&["analyze"], "0 0\n").status.code(), Some(2));
    assert_eq!(run(&["analyze", "--gamma-o"], &gen(&["cycle", "17"])).status.code(), Some(3));
    assert_eq!(run(&["analyze", "--gamma-o", "--cap", "20"], &gen(&["cycle", "17"])).status.code(), Some(0));
    assert_eq!(run(&["gen", "prism", "2"], "").status.code(), Some(2));
    assert_eq!(run(&["gen", "hypercube", "3"], "").status.code(), Some(2));
    assert_eq!(run(&["gen", "cubic", "10"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "--families", "nonsense"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "--random", "80", "--count", "1"], "").status.code(), Some(3));
    assert_eq!(run(&["bounds", "--claim", "th9"], "").status.code(), Some(2));
}

fn bound<'a>(v: &'a Value, id: &str) -> &'a Value {
    v["payload"]["graphs"][0]["bounds"].as_array().unwrap().iter().find(|b| b["claim_id"] == id).unwrap()
}

#[test]
fn bounds_examples() {
    let (_, v) = json(&["bounds", "--claim", "eq5"], &gen(&["bipartite", "3", "3"]));
    let b = bound(&v, "eq5");
    assert_eq!(b["lower"]["exact"], "9/2");
    assert_eq!(b["upper"]["exact"], "6");
    assert_eq!(b["exact"], 5);

    let (_, v) = json(&["bounds", "--claim", "th1"], &gen(&["complete", "4"]));
    let b = bound(&v, "th1");
    assert_eq!((b["lower"]["exact"].as_str(), b["upper"]["exact"].as_str()), (Some("2"), Some("3")));
    assert_eq!(b["exact"], 3);
    let human = stdout(&run(&["bounds", "--claim", "th1"], &gen(&["complete", "4"])));
    assert!(human.contains("upper tight"), "{human}");

    let (_, v) = json(&["bounds", "--claim", "cotasup"], &gen(&["cycle", "6"]));
    assert_eq!(bound(&v, "cotasup")["status"], "skipped");

    let (_, v) = json(&["bounds"], &gen(&["petersen"]));
    assert_eq!(v["payload"]["graphs"][0]["bounds"].as_array().unwrap().len(), 8);
}

#[test]
fn gen_and_convert() {
    let p5 = gen(&["prism", "5"]);
    assert_eq!(p5.lines().count(), 1);
    assert!(p5.starts_with('I'), "10 vertices encode as 'I': {p5}");
    assert_eq!(gen(&["random-cubic", "12", "--seed", "7"]), gen(&["random-cubic", "12", "--seed", "7"]));
    assert_ne!(gen(&["random-cubic", "12", "--seed", "7"]), gen(&["random-cubic", "12", "--seed", "8"]));
    assert_eq!(gen(&["cubic", "6"]).lines().count(), 70);

    let o = run(&["convert", "--from", "edgelist", "--to", "graph6"], "0 1\n1 2\n2 0\n");
    assert_eq!(stdout(&o).trim(), "Bw");
    let pet = gen(&["petersen"]);
    let edges = stdout(&run(&["convert", "--to", "edgelist"], &pet));
    let back = stdout(&run(&["convert", "--from", "edgelist", "--to", "graph6"], &edges));
    assert_eq!(back, pet);
    let (_, v) = json(&["convert", "--to", "edgelist"], &pet);
    assert_eq!(v["payload"]["format"], "edgelist");
    let (_, v) = json(&["gen", "truncated"], "");
    assert_eq!(v["payload"]["graphs"][0]["n"], 12);
}

#[test]
fn input_from_file() {
    let dir = std::env::temp_dir().join(format!("alliance-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.g6");
    std::fs::write(&path, "C~\n").unwrap();
    let (code, v) = json(&["analyze", "--gamma-so", path.to_str().unwrap()], "");
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["graphs"][0]["analysis"]["entries"]["gamma_so"]["value"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_single_claim() {
    let (code, v) = json(&["verify", "--claim", "prop-2n5", "--families", "petersen", "--verdicts", "all"], "");
    assert_eq!(code, 0);
    let r = &v["payload"]["report"];
    assert_eq!(r["claims"][0]["status"], "holds");
    assert_eq!(r["verdicts"][0]["status"], "holds");
}

#[test]
fn verify_fault_injection_exits_5_with_counterexample() {
    let (code, v) = json(&["verify", "--families", "petersen,bipartite:3x3", "--inject-fault", "flip-bipartite"], "");
    assert_eq!(code, 5);
    let r = &v["payload"]["report"];
    assert!(r["violations"].as_u64().unwrap() > 0);
    let bad: Vec<&Value> = r["verdicts"].as_array().unwrap().iter().filter(|x| x["status"] == "violated").collect();
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|x| x["graph6"].is_string()));
    assert!(bad.iter().any(|x| !x["evidence"].as_array().unwrap().is_empty()));
}

#[test]
fn verify_csv_output() {
    let dir = std::env::temp_dir().join(format!("alliance-csv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("v.csv");
    let o = run(
        &["verify", "--families", "prism:3", "--verdicts", "checked", "--csv", path.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("claim_id,graph,graph6,n,status"));
    assert!(text.lines().count() > 5);
    std::fs::remove_dir_all(dir).unwrap();
}
