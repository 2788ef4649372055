use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn reachtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reachtop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(path: &Path, text: &str) -> String {
    fs::write(path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn happel_transitive_triangle_is_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir.path().join("t.csv"), "source,target,weight\n0,1,1\n1,2,1\n0,2,1\n");
    let v = stdout_json(&reachtop(&["happel", &f]));
    assert_eq!(v["betti1"], 2);
    assert_eq!(v["betti0"], 1);
}

#[test]
fn happel_on_cycle_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir.path().join("c.csv"), "source,target,weight\n0,1,1\n1,0,1\n");
    assert_eq!(reachtop(&["happel", &f]).status.code(), Some(2));
}

#[test]
fn betti_reach_on_strongly_connected_graph() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        &dir.path().join("sc.csv"),
        "NaN,1,NaN,NaN\nNaN,NaN,1,1\n1,NaN,NaN,1\nNaN,1,NaN,NaN\n",
    );
    let reach = stdout_json(&reachtop(&["betti", &f, "--theory", "reach", "--degrees", "0,1,2"]));
    assert_eq!(reach["betti"], serde_json::json!({"0": 1, "1": 0, "2": 0}));
    let dflag = stdout_json(&reachtop(&["betti", &f, "--theory", "dflag", "--degrees", "1"]));
    assert_ne!(dflag["betti"]["1"], 0);
}

#[test]
fn reach_and_complex_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir.path().join("g.csv"), "NaN,0.1,NaN\n0.2,NaN,0.3\nNaN,NaN,NaN\n");
    let r = stdout_json(&reachtop(&["reach", &f]));
    assert_eq!(r["components"], 2);
    assert_eq!(r["poset_relations"], 1);
    let below = stdout_json(&reachtop(&["reach", &f, "--at", "-1"]));
    assert_eq!(below["components"], 3);
    let c = stdout_json(&reachtop(&["complex", &f, "--max-dim", "2"]));
    assert_eq!(c["counts"], serde_json::json!([3, 3, 0]));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(reachtop(&["nonsense"]).status.code(), Some(1));
    assert_eq!(reachtop(&["features", "--out", "x"]).status.code(), Some(1));
    assert_eq!(reachtop(&["--help"]).status.code(), Some(0));
}

#[test]
fn empty_manifest_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(&dir.path().join("m.json"), r#"{"subjects": []}"#);
    let out = reachtop(&["features", "--manifest", &m, "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_matrix_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        &dir.path().join("m.json"),
        r#"{"subjects": [{"id": 1, "matrix": "nope.csv", "label": 0}]}"#,
    );
    let out = reachtop(&["features", "--manifest", &m, "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_subject_gives_one_row_csvs() {
    let dir = tempfile::tempdir().unwrap();
    write(&dir.path().join("a.csv"), "NaN,-0.3,NaN\nNaN,NaN,-0.2\n-0.1,NaN,NaN\n");
    let m = write(
        &dir.path().join("m.json"),
        r#"{"subjects": [{"id": "s1", "matrix": "a.csv", "label": 1}]}"#,
    );
    let out_dir = dir.path().join("out");
    let out = reachtop(&[
        "features", "--manifest", &m, "--out", out_dir.to_str().unwrap(), "--theta1", "-0.4",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut csvs: Vec<_> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "csv"))
        .collect();
    csvs.sort();
    assert_eq!(csvs.len(), 4);
    for p in &csvs {
        let text = fs::read_to_string(p).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2, "{}", p.display());
        assert!(lines[1].starts_with("s1,1,"));
    }
    let meta: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(out_dir.join("features_dflag_betti_theta1_-0.4.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(meta["degrees_used"], serde_json::json!([0, 1]));
    assert_eq!(meta["dropped_degrees"], serde_json::json!([2]));
    assert_eq!(meta["n"], 10);
}

#[test]
fn config_file_merges_with_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let synth = reachtop(&["synth", "--out", dir.path().to_str().unwrap(), "--subjects", "4"]);
    assert!(synth.status.success());
    let out_dir = dir.path().join("f");
    let cfg = write(
        &dir.path().join("cfg.json"),
        &format!(
            r#"{{"manifest": "{}", "out": "{}", "theta1": -0.3, "theory": "reach", "kind": "betti", "n": 4}}"#,
            dir.path().join("manifest.json").display(),
            out_dir.display()
        ),
    );
    let out = reachtop(&["features", "--config", &cfg, "--n", "5"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(out_dir.join("features_reach_betti_theta1_-0.3.csv")).unwrap();
    assert!(text.lines().next().unwrap().contains("b0_s5"));
    assert_eq!(fs::read_dir(&out_dir).unwrap().count(), 2);
}

#[test]
fn synth_is_deterministic_and_round_trips() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let out = reachtop(&["synth", "--out", d.path().to_str().unwrap(), "--seed", "11"]);
        assert!(out.status.success());
    }
    let manifest = fs::read_to_string(a.path().join("manifest.json")).unwrap();
    assert_eq!(manifest, fs::read_to_string(b.path().join("manifest.json")).unwrap());
    let m: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    let subjects = m["subjects"].as_array().unwrap();
    assert_eq!(subjects.len(), 28);
    assert_eq!(subjects.iter().filter(|s| s["label"] == 0).count(), 14);
    for s in subjects {
        let rel = s["matrix"].as_str().unwrap();
        let text = fs::read_to_string(a.path().join(rel)).unwrap();
        assert_eq!(text, fs::read_to_string(b.path().join(rel)).unwrap());
        let g = reachtop::formats::parse_dense(&text).unwrap();
        assert_eq!(reachtop::formats::dense_csv(&g), text);
    }
}

#[test]
fn synth_rejects_degenerate_requests() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path().to_str().unwrap();
    assert_eq!(reachtop(&["synth", "--out", p, "--subjects", "0"]).status.code(), Some(1));
    assert_eq!(
        reachtop(&["synth", "--out", p, "--p-a", "0.1", "--p-b", "0.1"]).status.code(),
        Some(1)
    );
}

#[test]
fn random_experiment_shape() {
    let out = reachtop(&[
        "random-experiment", "--n", "8", "--r", "3", "--steps", "4", "--degrees", "0,1",
        "--theory", "reach",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "p,degree,mean,std,r,n,theory");
    assert_eq!(lines.len(), 1 + 5 * 2);
    assert_eq!(lines[1], "0,0,8,0,3,8,reach");
    assert!(lines.iter().skip(1).all(|l| l.ends_with(",3,8,reach")));
}
