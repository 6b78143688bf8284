use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn isozono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isozono"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = isozono(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn linf3_fvector() {
    assert_eq!(stdout(&["zonotope", "--graph", "linf:3", "--fvector"]), "96 144 50\n");
}

#[test]
fn grid_boundary_table() {
    let dir = tempfile::tempdir().unwrap();
    let set = dir.path().join("points.txt");
    let grid: String = (0..3).flat_map(|x| (0..3).map(move |y| format!("{x} {y}\n"))).collect();
    fs::write(&set, grid).unwrap();
    let out = stdout(&["boundary", "--graph", "l1:2", "--set", path(&set)]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "direct\t12");
    assert_eq!(lines[1], "generator\tprojection\tgaps");
    assert_eq!(lines[2], "0 1\t3\t0");
    assert_eq!(lines[3], "1 0\t3\t0");
    assert_eq!(lines[4], "formula\t12");
    assert_eq!(lines[5], "identity\tholds");
}

#[test]
fn off_center_section_is_not_an_octagon() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("out.svg");
    let out = stdout(&["section", "--graph", "linf:3", "--axis", "1", "--level", "3", "--render", path(&svg)]);
    assert!(out.starts_with("vertices 16\n"), "{out}");
    assert!(out.ends_with("homothetic to Z_2: no\n"));
    let figure = fs::read_to_string(&svg).unwrap();
    assert!(figure.starts_with("<svg"));
    assert_eq!(figure.matches("<polygon").count(), 1);
}

#[test]
fn central_section_is_homothetic() {
    let out = stdout(&["section", "--graph", "linf:3", "--axis", "1", "--level", "0"]);
    assert!(out.starts_with("vertices 8\n"), "{out}");
    assert!(out.ends_with("homothetic to Z_2: yes\n"));
}

#[test]
fn section_axis_is_one_based() {
    let out = isozono(&["section", "--graph", "linf:3", "--axis", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = isozono(&["section", "--graph", "linf:3", "--axis", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn figures() {
    let dir = tempfile::tempdir().unwrap();
    let off = dir.path().join("z3.off");
    stdout(&["render", "--graph", "linf:3", "--out", path(&off)]);
    let text = fs::read_to_string(&off).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("OFF"));
    assert_eq!(lines.next(), Some("96 50 0"));

    let svg = dir.path().join("z2.svg");
    stdout(&["render", "--graph", "linf:2", "--scale", "1/2", "--out", path(&svg)]);
    let text = fs::read_to_string(&svg).unwrap();
    let points = text.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
    assert_eq!(points.split(' ').count(), 8);

    let square = dir.path().join("square.txt");
    fs::write(&square, "dim 2\nV\n-1 -1\n1 -1\n1 1\n-1 1\n").unwrap();
    let svg = dir.path().join("square.svg");
    stdout(&["render", "--polytope", path(&square), "--out", path(&svg)]);
    assert!(fs::read_to_string(&svg).unwrap().contains("points=\"-1,1 1,1 1,-1 -1,-1\""));
}

#[test]
fn render_rejects_other_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let out = isozono(&["render", "--graph", "linf:4", "--out", path(&dir.path().join("x"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot render"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn d4cross_original_coordinates() {
    let out = stdout(&["zonotope", "--graph", "d4cross", "--original", "--vertices"]);
    assert_eq!(out.lines().count(), 192);
    assert!(out.lines().any(|l| l == "0 2 4 6"));
    let chart = stdout(&["zonotope", "--graph", "d4cross", "--fvector"]);
    let original = stdout(&["zonotope", "--graph", "d4cross", "--original", "--fvector"]);
    assert_eq!(chart, "192 384 240 48\n");
    assert_eq!(chart, original);
}

#[test]
fn spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("hex.txt");
    fs::write(&good, "name hex\ndim 2\ngen 1 0\ngen 0 1\ngen 1 1\nsym -2 -1\n").unwrap();
    let out = stdout(&["validate", "--graph", path(&good)]);
    assert!(out.starts_with("valid: hex (n = 2, k = 3, degree 6)"), "{out}");

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "name bad\ndim 2\ngen 1 0\ngen 2 2\n").unwrap();
    let out = isozono(&["validate", "--graph", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));

    let malformed = dir.path().join("malformed.txt");
    fs::write(&malformed, "name m\ndim 2\ngen 1 x\n").unwrap();
    let out = isozono(&["validate", "--graph", path(&malformed)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&out.stderr));

    let out = isozono(&["validate", "--graph", "linf:9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_report_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let report = stdout(&["search", "--graph", "l1:2", "--m", "4", "--radius", "2", "--witness-dir", path(&a)]);
    let again = stdout(&["search", "--graph", "l1:2", "--m", "4", "--radius", "2", "--witness-dir", path(&b)]);
    assert_eq!(report, again);
    let row: Vec<&str> = report.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[..3], ["4", "8", "true"]);
    let witness = a.join("witness_0.txt");
    assert_eq!(fs::read(&witness).unwrap(), fs::read(b.join("witness_0.txt")).unwrap());
    let recount = stdout(&["boundary", "--graph", "l1:2", "--set", path(&witness)]);
    assert!(recount.starts_with("direct\t8\n"));

    let heuristic = stdout(&["search", "--graph", "tri", "--m", "7", "--heuristic", "--iterations", "20000", "--seed", "3"]);
    let row: Vec<&str> = heuristic.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[1], "18");
    assert_eq!(row[2], "false");
}

#[test]
fn convergence_table() {
    let out = stdout(&["converge", "--graph", "l1:2", "--alphas", "10,50"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], "10\t441\t400\t84\t80\t400/441\t20/21");
    let out = isozono(&["converge", "--graph", "l1:2", "--alphas", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_single_criterion() {
    let out = stdout(&["reproduce", "--criterion", "4"]);
    assert!(out.starts_with("PASS  4 "), "{out}");
    let out = isozono(&["reproduce", "--criterion", "12"]);
    assert_eq!(out.status.code(), Some(2));
}
