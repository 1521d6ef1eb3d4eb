use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffordspec"))
        .args(args)
        .env_remove("CLIFFORDSPEC_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_examples_names_the_gallery() {
    let o = run(&["list-examples"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["pauli", "lemniscate", "torus_quadruple", "self_dual_path", "even_odd"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
}

#[test]
fn charpoly_of_pauli_is_canonical() {
    let o = run(&["charpoly", "--example", "pauli"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("-3 0 0 0 0"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn charpoly_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let o = run(&["charpoly", "--example", "lemniscate", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let direct = stdout(&run(&["charpoly", "--example", "lemniscate"]));
    assert_eq!(fs::read_to_string(path).unwrap(), direct);
}

#[test]
fn reduced_needs_four_matrices() {
    assert_eq!(run(&["charpoly", "--example", "pauli", "--reduced"]).status.code(), Some(2));
    let o = run(&["charpoly", "--example", "gamma4", "--reduced"]);
    assert!(o.status.success());
}

#[test]
fn index_values_and_on_spectrum_exit() {
    let o = run(&["index", "--example", "pauli", "--at", "0", "0", "0", "-3", "0", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().ends_with("index=1"));
    assert!(text.lines().nth(1).unwrap().ends_with("index=0"));
    let o = run(&["index", "--example", "pauli", "--at", "1", "0", "0"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("on-spectrum"));
}

#[test]
fn archetypal_and_graded_kinds() {
    let o = run(&["index", "--example", "self_dual_path", "--param", "s=0", "--kind", "arch", "--at", "0", "0", "0", "0", "0", "10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().ends_with("index=-1"));
    assert!(text.lines().nth(1).unwrap().ends_with("index=1"));

    let o = run(&["index", "--example", "even_odd", "--kind", "graded", "--at", "0", "0", "0", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("index=-1"));
}

#[test]
fn symmetry_failure_exit() {
    let o = run(&["index", "--example", "pauli", "--kind", "arch", "--at", "0", "0", "0"]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["index", "--example", "nope", "--at", "0"]).status.code(), Some(2));
    assert_eq!(run(&["index", "--example", "pauli", "--at", "0", "0"]).status.code(), Some(2));
    assert_eq!(run(&["index", "--example", "pauli", "--param", "x=1", "--at", "0", "0", "0"]).status.code(), Some(2));
    assert_eq!(run(&["index", "--at", "0"]).status.code(), Some(2));
    assert_eq!(run(&["mesh", "--example", "gamma4", "--res", "5"]).status.code(), Some(2));
}

#[test]
fn config_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    fs::write(&path, r#"{"example": "scaled_pauli", "params": {"a": 2, "b": 1, "c": 1}}"#).unwrap();
    let o = run(&["index", "--config", path.to_str().unwrap(), "--at", "1.5", "0", "0", "2.5", "0", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().ends_with("index=1"));
    assert!(text.lines().nth(1).unwrap().ends_with("index=0"));
}

#[test]
fn grid_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let o = run(&["grid", "--example", "pauli", "--res", "11", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let csv = fs::read_to_string(path).unwrap();
    assert_eq!(csv.lines().next(), Some("l1,l2,l3,value"));
    assert_eq!(csv.lines().count(), 1 + 11 * 11 * 11);
}

#[test]
fn mesh_writes_closed_sphere() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.obj");
    let o = run(&[
        "--threads", "1", "mesh", "--example", "pauli", "--indicator", "det", "--res", "21", "--out", path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("boundary_edges=0"), "{text}");
    assert!(text.contains("euler=2"), "{text}");
    let obj = fs::read_to_string(path).unwrap();
    assert!(obj.lines().any(|l| l.starts_with("v ")));
    assert!(obj.lines().any(|l| l.starts_with("f ")));
}

#[test]
fn slice_requires_one_fixed_axis() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.obj");
    let out = path.to_str().unwrap();
    assert_eq!(run(&["slice", "--example", "rescaled_gamma", "--res", "5", "--out", out]).status.code(), Some(2));
    let o = run(&["slice", "--example", "rescaled_gamma", "--fix", "4=0", "--res", "11", "--out", out]);
    assert!(o.status.success());
    let obj = fs::read_to_string(path).unwrap();
    let v = obj.lines().find(|l| l.starts_with("v ")).unwrap();
    assert_eq!(v.split_whitespace().count(), 5, "slice vertices carry the fixed value");
}

#[test]
fn variance_certificate_holds() {
    let o = run(&["variance", "--example", "sykora_two_torus", "--at", "1", "0", "0", "0", "0", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.matches("HOLDS").count(), 2);
    assert!(text.contains("epsilon="));
}
