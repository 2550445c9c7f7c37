use std::process::{Command, Output};

use pfrees::certificate::CertificateJson;
use pfrees::formats::{betti_from_json, ideal_from_json, BettiJson, IdealJson};
use pfrees::report::ClaimReport;
use serde_json::Value;

fn pfrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfrees")).args(args).env_remove("PFREES_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pf_generic_three() {
    let o = pfrees(&["pf", "--generic", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x2_3\nx1_3\nx1_2\n");
}

#[test]
fn pf_closed_form() {
    let o = pfrees(&["pf", "--tridiagonal", "5", "--closed-form"]);
    assert_eq!(stdout(&o), "x2_3*x4_5\nx1_2*x4_5\nx1_2*x3_4\n");
}

#[test]
fn pf_json_round_trips() {
    let o = pfrees(&["--format", "json", "pf", "--generic", "5"]);
    let text = stdout(&o);
    let j: IdealJson = serde_json::from_str(&text).unwrap();
    let (ring, gens) = ideal_from_json(&j).unwrap();
    assert_eq!(gens.len(), 5);
    assert_eq!(ring.nvars(), 10);
    let again = serde_json::to_value(pfrees::formats::ideal_to_json(&ring, &gens)).unwrap();
    assert_eq!(again.to_string() + "\n", text);
}

#[test]
fn pf_empty_custom_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.mat");
    std::fs::write(&path, "").unwrap();
    let o = pfrees(&["pf", "--custom", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");
}

#[test]
fn pf_custom_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.mat");
    std::fs::write(&path, "0 a b; -a 0 c; -b -c 0\n").unwrap();
    let o = pfrees(&["pf", "--custom", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "c\nb\na\n");
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.mat");
    std::fs::write(&path, "0 a; a 0\n").unwrap();
    assert_eq!(pfrees(&["pf", "--custom", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(pfrees(&["pf"]).status.code(), Some(2));
    assert_eq!(pfrees(&["verify", "no-such-claim"]).status.code(), Some(2));
}

#[test]
fn betti_generic_five() {
    let o = pfrees(&["--format", "json", "betti", "--generic", "5"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["linear_resolution"], Value::Bool(false));
    let b: BettiJson = serde_json::from_value(v).unwrap();
    let t = betti_from_json(&b);
    let got: Vec<_> = t.entries.iter().map(|(&(i, j), &r)| (i, j, r)).collect();
    assert_eq!(got, [(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)]);
}

#[test]
fn rees_tridiagonal_verdict() {
    let o = pfrees(&["--format", "json", "rees", "--tridiagonal", "7", "--verdict"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "GROEBNER_LINEAR_TYPE");
}

#[test]
fn diag_generic_three() {
    let o = pfrees(&["--format", "json", "diag", "--generic", "3", "--reduce", "--dimension"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["relations"].as_array().unwrap().len(), 3);
    assert_eq!(v["reduced"].as_array().unwrap().len(), 6);
    assert_eq!(v["dimension"], 3);
}

#[test]
fn graph_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "n = 5\n(1 2) -- (2 3)\n(1 2) -- (4 5)\n(3 4) -- (4 5)\n").unwrap();
    let o = pfrees(&["--format", "json", "graph", "--edges", path.to_str().unwrap(), "--ideal-check"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["unmixed"], true);
    assert_eq!(v["equals_pfaffian_ideal"], true);
    assert_eq!(v["covers"].as_array().unwrap().len(), 3);
}

#[test]
fn koszul_certificate_replays() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let c = cert.to_str().unwrap();
    let o = pfrees(&["koszul", "--blockx4", "2", "--certificate-out", c]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("CI_OF_QUADRICS"));
    let j: CertificateJson = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(j.kind, "CI_OF_QUADRICS");
    let o = pfrees(&["--format", "json", "verify", "--replay", c]);
    assert_eq!(o.status.code(), Some(0));
    let r: ClaimReport = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r.status.name(), "PASS");

    let mut j: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    j["leading"][0][0] = Value::from(7);
    std::fs::write(&cert, j.to_string()).unwrap();
    assert_eq!(pfrees(&["verify", "--replay", c]).status.code(), Some(1));
}

#[test]
fn koszul_refutation_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("n.json");
    let c = cert.to_str().unwrap();
    let o = pfrees(&["koszul", "--generic", "5", "--method", "explicit", "--order", "lex", "--powers", "1", "--certificate-out", c]);
    assert!(stdout(&o).contains("CERTIFIED_NOT_KOSZUL"), "{}", stdout(&o));
    assert_eq!(pfrees(&["verify", "--replay", c]).status.code(), Some(0));
}

#[test]
fn verify_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let o = pfrees(&[
        "--format",
        "json",
        "--jobs",
        "2",
        "verify",
        "tridiagonal-det",
        "cover-census",
        "--certificate-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<ClaimReport> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].id, "tridiagonal-det");
    assert!(lines.iter().all(|r| r.schema == 1 && r.status.name() == "PASS"));
    assert!(std::path::Path::new(lines[1].certificate_path.as_ref().unwrap()).exists());
}

#[test]
fn verify_records_the_convention() {
    let o = pfrees(&["--format", "json", "verify", "complex-generic-5"]);
    let r: ClaimReport = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r.witness["verifying"], serde_json::json!(["REVERSED/UNSIGNED"]));
}

#[test]
fn budget_exhaustion_exits_three() {
    let o = pfrees(&["--format", "json", "--budget-seconds", "0.000001", "rees", "--generic", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "BUDGET_EXCEEDED");
    assert_eq!(v["schema"], 1);
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_pfrees"))
        .args(["verify", "pf-squared-det", "complex-generic-7"])
        .env("PFREES_BUDGET", "0.000001")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}

#[test]
fn config_file_is_read() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("pfrees.toml");
    std::fs::write(&cfg, "budget_seconds = 0.000001\n").unwrap();
    let o = pfrees(&["--config", cfg.to_str().unwrap(), "rees", "--generic", "5"]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::write(&cfg, "nonsense = 1\n").unwrap();
    assert_eq!(pfrees(&["--config", cfg.to_str().unwrap(), "pf", "--generic", "3"]).status.code(), Some(2));
}

#[test]
fn out_file_and_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("list.txt");
    let o = pfrees(&["--out", out.to_str().unwrap(), "verify", "--list"]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("census-sparse7") && text.contains("heavy"));
}
