use std::fs;
use std::process::Command;

fn hyptree(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyptree"))
        .args(args)
        .env_remove("HYPTREE_BUDGET")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn export_of_depth_zero_tree_is_single_node() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("constant.csv");
    fs::write(&table, "element,f1,f2\na,1,0\nb,1,0\n").unwrap();
    let (code, out, _) = hyptree(&["export", "--table", table.to_str().unwrap(), "--dot", "--model", "m1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "digraph tree {\n  n0 [label=\"10\", shape=box];\n}\n");
}

#[test]
fn cube_table_solves_to_two_under_m5() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("cube2.csv");
    fs::write(&table, "element,f1,f2\n00,0,0\n01,0,1\n10,1,0\n11,1,1\n").unwrap();
    let (code, out, _) = hyptree(&["solve", "--table", table.to_str().unwrap(), "--model", "m5"]);
    assert_eq!(code, 0);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..4], &["cube2", "2", "m5", "2"]);
}

#[test]
fn export_round_trips_the_table() {
    let (code, csv, _) = hyptree(&["export", "--system", "u6", "--n", "3"]);
    assert_eq!(code, 0);
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("u6.csv");
    fs::write(&table, &csv).unwrap();
    let (_, again, _) = hyptree(&["export", "--table", table.to_str().unwrap()]);
    assert_eq!(csv, again);
}

#[test]
fn strategy_writes_tree_file() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("halving.dot");
    let (code, out, err) = hyptree(&[
        "strategy", "--kind", "halving", "--system", "u7", "--n", "7", "--r", "2", "--out",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("system,n,kind,model,r,depth,bound,verified\nu7,7,halving,m4,2,"));
    assert!(out.trim_end().ends_with(",6,true"));
    assert!(fs::read_to_string(dot).unwrap().starts_with("digraph tree {"));
}

#[test]
fn every_strategy_verifies() {
    for kind in ["sequential", "halving", "ksystem", "proper-only"] {
        let (code, out, err) = hyptree(&["strategy", "--kind", kind, "--system", "u6", "--n", "4"]);
        assert_eq!(code, 0, "{kind}: {err}");
        assert!(out.trim_end().ends_with(",true"), "{kind}: {out}");
    }
}

#[test]
fn gen_is_seeded() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let (code, _, _) = hyptree(&["gen", "--seed", "7", "--count", "5", "--out", d.path().to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    for k in 0..5 {
        let name = format!("table_{k:03}.csv");
        assert_eq!(
            fs::read_to_string(a.path().join(&name)).unwrap(),
            fs::read_to_string(b.path().join(&name)).unwrap()
        );
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "element,f1\na,2\n").unwrap();
    assert_eq!(hyptree(&["solve", "--table", bad.to_str().unwrap()]).0, 3);
    assert_eq!(hyptree(&["solve", "--system", "u7"]).0, 2);
    assert_eq!(hyptree(&["shannon", "--system", "u2", "--n", "3", "--budget", "0"]).0, 2);
    assert_eq!(hyptree(&["solve", "--system", "u2", "--n", "8"]).0, 4);
    assert_eq!(hyptree(&["strategy", "--kind", "halving", "--system", "u3", "--n", "3"]).0, 5);
}

#[test]
fn budget_env_var_is_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_hyptree"))
        .args(["shannon", "--system", "u7", "--n", "5", "--model", "m1"])
        .env("HYPTREE_BUDGET", "3")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(1).all(|l| l.ends_with("exceed budget 3")), "{text}");
    let (_, text, _) = hyptree(&["shannon", "--system", "u7", "--n", "5", "--model", "m1", "--budget", "1000"]);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",ok")));
}

#[test]
fn shannon_point_system_and_cube() {
    let (_, out, _) = hyptree(&["shannon", "--system", "u6", "--n", "6", "--model", "m4"]);
    assert!(out.lines().skip(1).all(|l| l.split(',').nth(3) == Some("1")));
    let (_, out, _) = hyptree(&["shannon", "--system", "u2", "--n", "4", "--model", "all"]);
    for line in out.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[1], f[3], "{line}");
    }
}
