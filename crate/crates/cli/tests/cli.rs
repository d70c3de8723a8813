use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_chern-seifert"));
    cmd.env_remove("CHERN_SEIFERT_PRECISION");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

fn write(dir: &TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn lens_space_magnitude() {
    let doc = json(&[
        "compute",
        "--seifert",
        "[0,4;]",
        "--rank",
        "1",
        "--level",
        "5",
        "--phases",
        "trivial",
    ]);
    assert_eq!(doc["magnitude"], "2/5");
    assert_eq!(doc["magnitude_decimal"], format!("0.4{}", "0".repeat(49)));
    assert_eq!(doc["torsion"]["order"], "4");
    assert_eq!(doc["torsion"]["group"], "Z/4");
    assert_eq!(doc["K_X"], "1/2");
    assert_eq!(doc["per_class"].as_array().unwrap().len(), 4);
}

#[test]
fn poincare_sphere_report() {
    let doc = json(&[
        "compute",
        "--seifert",
        "[0,-1;(2,1),(3,1),(5,1)]",
        "--rank",
        "1",
        "--level",
        "1",
    ]);
    assert_eq!(doc["c1"], "1/30");
    assert_eq!(doc["eta0"], "-91/180");
    assert_eq!(doc["m_X"], "-1");
    assert_eq!(doc["torsion"]["order"], "1");
    assert_eq!(doc["torsion"]["group"], "0");
    assert_eq!(doc["common_phase"], "91/360*pi");
    assert_eq!(doc["magnitude"], "1");
}

#[test]
fn rationals_are_strings() {
    let doc = json(&[
        "compute",
        "--seifert",
        "[1,2;(3,1)]",
        "--rank",
        "2",
        "--level",
        "3",
    ]);
    for key in ["c1", "eta0", "m_X", "k_power", "K_X", "moduli_volume"] {
        assert!(doc[key].is_string(), "{key} = {}", doc[key]);
    }
    assert!(doc["framing_phase"].as_str().unwrap().ends_with("*pi"));
    assert_eq!(doc["torsion"]["betti"], 2);
}

#[test]
fn precision_from_environment() {
    let o = bin()
        .args(["compute", "--seifert", "[0,3;]", "--level", "2"])
        .env("CHERN_SEIFERT_PRECISION", "25")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["precision"], 25);
    let digits = doc["magnitude_decimal"]
        .as_str()
        .unwrap()
        .chars()
        .filter(char::is_ascii_digit)
        .count();
    assert!(digits >= 25, "{}", doc["magnitude_decimal"]);
}

#[test]
fn csv_report() {
    let o = run(&[
        "compute",
        "--seifert",
        "[0,4;]",
        "--level",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("field,value"));
    assert!(text.contains("\nmagnitude,2/5\n"));
    assert!(text.contains("\ntors_order,4\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("class:")).count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["compute", "--seifert", "[0,1;(2,4)]"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--seifert", "[0,1;(2,1)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--seifert", "[3,0;]"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["compute", "--seifert", "[0,1;]", "--precision", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--seifert", "[0,1;]", "--level", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn phase_files() {
    let dir = TempDir::new().unwrap();
    let good = write(
        &dir,
        "good.json",
        r#"[{"class":[0],"q":"0"},{"class":[1],"q":"1/4"},{"class":[2],"q":"1/2"},{"class":[3],"q":"3/4"}]"#,
    );
    let doc = json(&[
        "compute",
        "--seifert",
        "[0,4;]",
        "--level",
        "1",
        "--phases",
        &format!("file:{good}"),
    ]);
    assert_eq!(doc["magnitude"], "0");
    assert_eq!(doc["per_class"][1]["q"], "1/4");

    let short = write(&dir, "short.json", r#"[{"class":[0],"q":"0"}]"#);
    let o = run(&[
        "compute",
        "--seifert",
        "[0,4;]",
        "--phases",
        &format!("file:{short}"),
    ]);
    assert_eq!(o.status.code(), Some(4));

    let broken = write(&dir, "broken.json", r#"[{"class":[0],"q":"zero"}]"#);
    let o = run(&[
        "compute",
        "--seifert",
        "[0,4;]",
        "--phases",
        &format!("file:{broken}"),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    let o = run(&[
        "compute",
        "--seifert",
        "[0,4;]",
        "--phases",
        &format!("file:{}", missing.display()),
    ]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn catalog_rows_follow_file_order() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "three.txt",
        "[0,3;]\n# comment\n\n[0,-1;(2,1),(3,1),(5,1)]\n[1,1;]\n",
    );
    let o = run(&["catalog", &path]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "seifert,c1,eta0,m_X,tors_order,K_X,magnitude_trivial,error"
    );
    assert!(lines[1].starts_with("\"[0, 3;]\","));
    assert!(lines[2].starts_with("\"[0, -1; (2,1), (3,1), (5,1)]\",1/30,-91/180,"));
    assert!(lines[3].starts_with("\"[1, 1;]\""));
}

#[test]
fn catalog_error_rows() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.txt", "[0,2;]\n[2,-1;(2,1),(2,1)]\n");
    let o = run(&["catalog", &path]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].ends_with(','));
    assert!(rows[2].contains("orbifold Chern number is zero"));
}

#[test]
fn empty_catalog() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "empty.txt", "");
    let o = run(&["catalog", &path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "seifert,c1,eta0,m_X,tors_order,K_X,magnitude_trivial,error\n"
    );
}

#[test]
fn bundled_catalog() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalog.txt");
    let o = run(&[
        "catalog",
        path.to_str().unwrap(),
        "--rank",
        "2",
        "--level",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 17);
}

#[test]
fn check_suites() {
    let o = run(&["check", "dedekind"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .contains("PASS dedekind: fast = direct, all coprime pairs alpha <= 200 (12232 cases"));

    let dir = TempDir::new().unwrap();
    let path = write(&dir, "extra.txt", "[0,6;(5,2)]\n");
    let o = run(&["check", "torsion", "--catalog", &path]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("  ok   [0, 6; (5,2)]"));
    assert!(text.lines().last().unwrap().ends_with("checks passed"));

    let o = run(&["check", "regularization"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "framing"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "compute",
        "--seifert",
        "[1,-2;(3,1),(4,1)]",
        "--rank",
        "2",
        "--level",
        "7",
        "--framing",
        "-5",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalog.txt");
    let catalog = ["catalog", path.to_str().unwrap()];
    assert_eq!(run(&catalog).stdout, run(&catalog).stdout);
}
