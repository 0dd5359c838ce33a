use std::process::{Command, Output};

fn silt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_silt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn count_prints_finite() {
    let o = silt(&["count", "A4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Finite(132)");
}

#[test]
fn budget_exhaustion() {
    let o = silt(&["count", "ladder-5", "--limit", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "AtLeast(40)");
    assert_eq!(silt(&["hasse", "ladder-5", "--limit", "40"]).status.code(), Some(1));
    assert_eq!(silt(&["strata", "ladder-5", "--limit", "40"]).status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(silt(&["count", "no-such-algebra"]).status.code(), Some(2));
    assert_eq!(silt(&["count", "A1", "--field", "gf(4)"]).status.code(), Some(2));
    let dir = std::env::temp_dir().join(format!("silt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "vertices = [1]\narrows:\n  a: 1 -> 2\n").unwrap();
    let o = silt(&["count", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:"));
}

#[test]
fn file_input_and_field_override() {
    let dir = std::env::temp_dir().join(format!("silt-cli-f-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("a2.alg");
    std::fs::write(&f, "vertices = [1, 2]\narrows:\n  a: 1 -> 2\n").unwrap();
    assert_eq!(stdout(&silt(&["count", f.to_str().unwrap()])).trim(), "Finite(5)");
    assert_eq!(stdout(&silt(&["count", f.to_str().unwrap(), "--field", "gf(3)"])).trim(), "Finite(5)");
}

#[test]
fn strata_table_ends_with_total() {
    let o = silt(&["strata", "A10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("total") && last.ends_with("116"), "{last}");
}

#[test]
fn json_and_out_file() {
    let dir = std::env::temp_dir().join(format!("silt-cli-j-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a12.json");
    let o = silt(&["hasse", "A12", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"count\": 32"));
}

#[test]
fn reduce_and_check() {
    let o = silt(&["reduce", "A12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("# count: Finite(32)") && out.contains("# reduced count: Finite(32)"));
    assert_eq!(stdout(&silt(&["check", "A5", "--property", "symmetric"])).trim(), "true");
    assert_eq!(silt(&["check", "ladder-5", "--property", "tau-finite", "--limit", "30"]).status.code(), Some(1));
}

#[test]
fn catalog_lists_entries() {
    let out = stdout(&silt(&["catalog"]));
    assert!(out.lines().any(|l| l == "L10"));
}
