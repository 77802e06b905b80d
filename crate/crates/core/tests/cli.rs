use surd_equiv::cli::{run_with, OutputRecord, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("surd-equiv").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> OutputRecord {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, err) = run(&full);
    assert_eq!(code, EXIT_OK, "stderr: {err}");
    let record: OutputRecord = serde_json::from_str(out.trim()).unwrap();
    let again = serde_json::to_string(&record).unwrap();
    assert_eq!(serde_json::from_str::<OutputRecord>(&again).unwrap(), record);
    record
}

#[test]
fn expand_text() {
    let (code, out, _) = run(&["expand", "--v", "7", "--q", "12", "--m", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("pre-period: [2]"));
    assert!(out.contains("period: [1, 2, 1, 2, 4, 5, 16, 47, 1, 1, 3, 1, 1, 4]"));
}

#[test]
fn expand_json() {
    let r = json(&["expand", "--v", "7", "--q", "12", "--m", "1"]);
    assert_eq!(r.command, "expand");
    assert_eq!(r.inputs["v"], "7");
    assert_eq!(r.result["preperiod"], serde_json::json!(["2"]));
    assert_eq!(r.result["period_length"], "14");
}

#[test]
fn classes_report() {
    let (code, out, _) = run(&["classes", "--v", "979", "--q", "12"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("q0 = 12"));
    assert!(out.contains("4 classes"));
    let r = json(&["classes", "--v", "979", "--q", "12"]);
    assert_eq!(r.result["num_classes"], "4");
    assert_eq!(r.result["classes"][0]["members"], serde_json::json!(["1"]));
    assert_eq!(r.result["classes"][0]["period_lengths"], serde_json::json!(["10"]));
    assert_eq!(r.result["classes"][1]["period_lengths"], serde_json::json!(["12"]));
}

#[test]
fn decisions() {
    let r = json(&["equiv", "--v", "7", "--q", "12", "--m", "1", "--n", "5"]);
    assert_eq!(r.result["answer"], true);
    let r = json(&["equiv", "--v", "979", "--q", "12", "--m", "1", "--n", "5"]);
    assert_eq!(r.result["answer"], false);
    let r = json(&["inverse", "--v", "979", "--q", "12", "--m", "7", "--n", "5"]);
    assert_eq!(r.result["answer"], true);
    let r = json(&["selfinv", "--v", "979", "--q", "9", "--m", "1"]);
    assert_eq!(r.result["answer"], true);
    let r = json(&["equiv", "--v", "7", "--q", "12", "--m", "-11", "--n", "17"]);
    assert_eq!((r.inputs["m_reduced"].as_str(), r.inputs["n_reduced"].as_str()), ("1", "5"));
}

#[test]
fn matrix_is_verified() {
    let r = json(&["matrix", "--v", "7", "--q", "12", "--m", "1", "--n", "5"]);
    assert_eq!(r.result["verified"], true);
    let det = r.result["det"].as_str().unwrap();
    assert!(det == "1" || det == "-1");
    let (code, out, _) = run(&["matrix", "--v", "7", "--q", "12", "--m", "1", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verified: true"));
}

#[test]
fn unitdata() {
    let r = json(&["unitdata", "--v", "979", "--q", "12"]);
    assert_eq!(r.result["s"], "360449");
    assert_eq!(r.result["t"], "11520");
    assert_eq!(r.result["q0"], "12");
    let r = json(&["unitdata", "--v", "7", "--q", "12"]);
    assert_eq!((r.result["k0"].as_str(), r.result["c0_mod_q2"].as_str()), (Some("2"), Some("48")));
}

#[test]
fn oracle_check_over_grid() {
    let (code, out, _) = run(&["oracle-check", "--v-max", "20", "--q-max", "8"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("all checks agree"));
    let r = json(&["oracle-check", "--v", "979", "--q", "12"]);
    assert_eq!(r.result["agree"], true);
}

#[test]
fn domain_errors_exit_one() {
    let (code, _, err) = run(&["equiv", "--v", "9", "--q", "12", "--m", "1", "--n", "5"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("perfect square"));
    let (code, _, err) = run(&["equiv", "--v", "7", "--q", "12", "--m", "2", "--n", "5"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("gcd(2, 12)"));
    let (code, _, _) = run(&["matrix", "--v", "979", "--q", "12", "--m", "1", "--n", "5"]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, err) = run(&["unitdata", "--v", "7", "--q", "12", "--max-power", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("k <= 1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, EXIT_USAGE);
    assert_eq!(run(&["expand", "--v", "7"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["expand", "--v", "x", "--q", "1", "--m", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}
