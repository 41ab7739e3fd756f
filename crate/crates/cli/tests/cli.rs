use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn reflquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reflquot")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn roots_of_a2() {
    let o = reflquot(&["roots", "--type", "A2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("|W| = 6"), "{out}");
    assert!(out.contains("roots (6):"));
    assert!(out.contains("fundamental weights (2):"));
}

#[test]
fn roots_of_a1_on_the_plane() {
    let o = reflquot(&["roots", "--type", "A1", "--lattice", "Z2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("fundamental weights (1): (-1/2,1/2)"));
}

#[test]
fn rank_zero_is_a_usage_error() {
    let o = reflquot(&["roots", "--type", "A", "--rank", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = reflquot(&["roots", "--type", "A0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid Cartan type"));
}

#[test]
fn roots_json_is_explicit() {
    let o = reflquot(&["roots", "--type", "B2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["datum"]["simple_roots"][1], serde_json::json!(["0", "1"]));
}

#[test]
fn explicit_simple_roots_file() {
    let dir = tempfile::tempdir().unwrap();
    let roots = write(dir.path(), "roots.json", r#"[["-2", "2"]]"#);
    let o = reflquot(&["roots", "--simple-roots", &roots, "--lattice", "Z2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("simple roots: (-1,1)"), "{out}");
    assert!(out.contains("|W| = 2"));
}

#[test]
fn psi_of_the_plane_example() {
    let o = reflquot(&["psi", "--type", "A1", "--point", "1,3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}"), "{out}");
    assert!(out.contains("O^{(1,3)} + 2O^{(2,2)}"), "{out}");
}

#[test]
fn psi_rejects_non_dominant_points() {
    let o = reflquot(&["psi", "--type", "A1", "--point", "3,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("<v, alpha_1> = -2 < 0"), "{}", stderr(&o));
}

#[test]
fn psi_of_the_origin() {
    let o = reflquot(&["psi", "--type", "A1", "--point", "0"]);
    assert!(stdout(&o).contains("Ψ(χ^0) = χ^0"));
}

#[test]
fn psi_json_round_trips_through_invpsi() {
    let dir = tempfile::tempdir().unwrap();
    let o = reflquot(&["psi", "--type", "A2", "--point", "-1,0,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let orbit = write(dir.path(), "orbit.json", &v["orbit"].to_string());
    let o = reflquot(&["invpsi", "--type", "A2", &orbit]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "χ^{(-1,0,1)}");
}

#[test]
fn invpsi_of_twice_the_weight() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.json", r#"{"terms": [{"point": ["-1", "1"], "coeff": 1}]}"#);
    let o = reflquot(&["invpsi", "--type", "A1", &f]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "χ^{(-1,1)} - 2χ^0");
    let t = write(dir.path(), "g.toml", "[[terms]]\npoint = [\"0\", \"0\"]\ncoeff = 1\n");
    let o = reflquot(&["invpsi", "--type", "A1", &t]);
    assert_eq!(stdout(&o).trim(), "χ^0");
}

#[test]
fn invpsi_reports_parse_errors_with_lines() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", "{\"terms\": [\n  {\"point\": [\"1\",}\n]}");
    let o = reflquot(&["invpsi", "--type", "A1", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn invpsi_rejects_non_invariant_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m.json", r#"{"basis": "monomial", "terms": [{"point": ["1", "0"], "coeff": 1}]}"#);
    let o = reflquot(&["invpsi", "--type", "A1", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not W-invariant"));
}

#[test]
fn check_figure1_passes() {
    let o = reflquot(&["check", "--fixture", "figure1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("figure1/expansion"));
    assert!(!out.contains(" fail "));
}

#[test]
fn check_simplex_emits_graded_counts() {
    let o = reflquot(&["check", "--type", "A2", "--polytope", "simplex3", "--tmax", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let slices: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(slices, ["1", "1", "2", "3", "4", "5", "7"]);
}

#[test]
fn check_numerical_semigroup_is_not_saturated() {
    let o = reflquot(&["check", "--semigroup", "gens:2,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not saturated"), "{}", stderr(&o));
}

#[test]
fn check_writes_reports_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = reflquot(&[
            "check", "--type", "A2", "--semigroup", "orthant", "--height-bound", "3", "--samples", "20", "--seed", "7",
            "--format", "json", "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with("PASS custom"));
        let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = run("a.json");
    assert_eq!(a, run("b.json"));
    assert_eq!(a["seed"], 7);
    assert!(a["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "pass"));
}

#[test]
fn check_rejects_unstable_semigroups() {
    let o = reflquot(&["check", "--type", "B2", "--semigroup", "orthant"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not preserve the semigroup"), "{}", stderr(&o));
}

#[test]
fn hilbert_tables() {
    let o = reflquot(&["hilbert", "--type", "A1", "--polytope", "square", "--tmax", "3"]);
    assert_eq!(stdout(&o), "t,total_points,orbit_count,domain_slice_count\n0,1,1,1\n1,4,3,3\n2,9,6,6\n3,16,10,10\n");
    let o = reflquot(&["hilbert", "--type", "A2", "--polytope", "simplex3", "--tmax", "3"]);
    let slices: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.rsplit(',').next().unwrap().to_string()).collect();
    assert_eq!(slices, ["1", "1", "2", "3"]);
    let o = reflquot(&["hilbert", "--fixture", "square", "--tmax", "0"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("0,1,1,1"));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn hilbert_needs_a_polytope() {
    let o = reflquot(&["hilbert", "--type", "A2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_round_trip_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    for fixture in ["figure1", "b2-diamond", "permutohedron-a3"] {
        let o = reflquot(&["config", "--fixture", fixture, "--seed", "3", "--format", "json"]);
        assert!(o.status.success(), "{}", stderr(&o));
        let text = stdout(&o);
        let first = write(dir.path(), &format!("{fixture}.toml"), &text);
        let o = reflquot(&["config", "--config", &first]);
        assert_eq!(stdout(&o), text);
        assert!(text.contains("format = \"json\""));
        let o = reflquot(&["check", "--config", &first, "--tmax", "2", "--height-bound", "3", "--samples", "10"]);
        assert!(o.status.success(), "{fixture}: {}", stderr(&o));
        assert!(stdout(&o).trim_start().starts_with('{'));
    }
}

#[test]
fn out_flag_writes_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.csv");
    let o = reflquot(&["hilbert", "--fixture", "square", "--tmax", "1", "--out", out.to_str().unwrap()]);
    assert!(stdout(&o).contains("written to"));
    assert_eq!(fs::read_to_string(out).unwrap().lines().count(), 3);
}

#[test]
fn config_files_drive_checks() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "s.toml",
        r#"
name = "skew-square"

[group]
simple_roots = [["-1", "1"]]

[object]
kind = "polytope"
vertices = [[0, 0], [2, 0], [0, 2], [2, 2]]

[bounds]
t_max = 2
"#,
    );
    let o = reflquot(&["check", "--config", &cfg, "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().nth(2), Some("1,9,6,6"));
}
