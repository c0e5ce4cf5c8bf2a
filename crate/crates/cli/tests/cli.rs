// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn renorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_renorm")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn rows(csv_text: &[u8]) -> Vec<(f64, f64)> {
    let mut r = csv::Reader::from_reader(csv_text);
    assert_eq!(r.headers().unwrap(), vec!["angle", "radius"]);
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            (rec[0].parse().unwrap(), rec[1].parse().unwrap())
        })
        .collect()
}

#[test]
fn eval_examples() {
    let dir = TempDir::new().unwrap();
    let one = write(&dir, "a.json", r#"{"prefix":[1.0],"tail_period":[0.0]}"#);
    let out = renorm(&["eval", "--norm", "linf-analytic", s(&one)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["value"].as_f64().unwrap() - 1.1).abs() <= 1e-9);
    let b = v["bracket"].as_array().unwrap();
    assert!(b[0].as_f64().unwrap() <= 1.1 && 1.1 <= b[1].as_f64().unwrap());
    assert!(v["iterations"].as_u64().is_some() && v["certified_error"].as_f64().is_some());

    let two = write(&dir, "b.json", r#"{"entries":[[3,1.0],[8,1.0]]}"#);
    let v = json(&renorm(&["eval", "--norm", "lp-f", "--p", "1", s(&two)]));
    assert!((v["value"].as_f64().unwrap() - 8.0 / 3.0).abs() <= 1e-14);

    let empty = write(&dir, "c.json", r#"{"entries":[]}"#);
    for norm in ["linf-analytic", "lp-smooth", "lp-f", "base"] {
        let out = renorm(&["eval", "--norm", norm, s(&empty)]);
        assert_eq!(out.status.code(), Some(0), "{norm}");
        assert_eq!(json(&out)["value"].as_f64(), Some(0.0));
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let dup = write(&dir, "dup.json", r#"{"entries":[[1,1.0],[1,2.0]]}"#);
    assert_eq!(renorm(&["eval", s(&dup)]).status.code(), Some(2));
    let garbage = write(&dir, "bad.json", r#"{"entries":[[1,"x"]]}"#);
    assert_eq!(renorm(&["eval", s(&garbage)]).status.code(), Some(2));
    let unknown = write(&dir, "unk.json", r#"{"values":[1]}"#);
    assert_eq!(renorm(&["eval", s(&unknown)]).status.code(), Some(2));
    assert_eq!(renorm(&["eval", "/nonexistent/vector.json"]).status.code(), Some(2));
    let zero_label = write(&dir, "z.json", r#"{"entries":[[0,1.0]]}"#);
    assert_eq!(renorm(&["eval", "--norm", "linf-analytic", s(&zero_label)]).status.code(), Some(2));
    let ok = write(&dir, "ok.json", r#"{"entries":[[1,1.0],[2,1.0],[3,1.0]]}"#);
    assert_eq!(renorm(&["eval", "--tol", "0", s(&ok)]).status.code(), Some(2));
    assert_eq!(renorm(&["eval", "--norm", "base", "--p", "3", s(&ok)]).status.code(), Some(2));
    let out = renorm(&["eval", "--norm", "lp-smooth", "--max-support", "2", s(&ok)]);
    assert_eq!(out.status.code(), Some(3));
    let divergent = write(&dir, "tail.json", r#"{"prefix":[],"tail_period":[1.0]}"#);
    assert_eq!(renorm(&["eval", "--norm", "linf-analytic", s(&divergent)]).status.code(), Some(0));
    let periodic = write(&dir, "p.json", r#"{"prefix":[0.5],"tail_period":[0.25]}"#);
    assert_eq!(renorm(&["eval", "--norm", "lp-f", s(&periodic)]).status.code(), Some(2));
    assert_eq!(renorm(&["sphere", "--plane", "1,1"]).status.code(), Some(2));
    assert_eq!(renorm(&["sphere", "--resolution", "4"]).status.code(), Some(2));
    assert_eq!(renorm(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(renorm(&["verify", "--suite", "schedule", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(renorm(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let out = renorm(&["verify", "--suite", "schedule", "--k", "10000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"][0]["suite"], "schedule");

    let out = renorm(&["verify", "--suite", "embedding", "--m", "10", "--samples", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let iso = json(&out)["suites"][0]["checks"][0].clone();
    assert_eq!(iso["name"], "isometry");
    assert!(iso["worst"].as_f64().unwrap() <= 1e-12);

    let out = renorm(&["verify", "--suite", "sandwich", "--norm", "linf-analytic", "--p", "2", "--eps1", "0.1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "axioms", "--norm", "lp-smooth", "--samples", "200", "--seed", "17"];
    let a = renorm(&args);
    let b = renorm(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = renorm(&["verify", "--suite", "axioms", "--norm", "lp-smooth", "--samples", "200", "--seed", "18"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sphere_sections() {
    let base = renorm(&["sphere", "--norm", "base", "--p", "2", "--plane", "1,2", "--resolution", "16"]);
    assert_eq!(base.status.code(), Some(0));
    assert!(!base.stdout.contains(&b'\r'));
    let r = rows(&base.stdout);
    assert_eq!(r.len(), 16);
    assert!(r.iter().all(|&(_, rad)| (rad - 1.0).abs() < 1e-12));

    let f = rows(&renorm(&["sphere", "--norm", "lp-f", "--plane", "2,5", "--resolution", "24"]).stdout);
    let smooth = rows(&renorm(&["sphere", "--norm", "lp-smooth", "--plane", "2,5", "--resolution", "24"]).stdout);
    for (&(angle, rf), &(a2, rs)) in f.iter().zip(&smooth) {
        assert_eq!(angle, a2);
        let (c, s) = (angle.cos().abs(), angle.sin().abs());
        let expect = 1.0 / (1.5 * c.max(s)).max(4.0 / 3.0 * (c + s));
        assert!((rf - expect).abs() <= 1e-12 * expect, "angle {angle}");
        let ratio = rf / rs;
        assert!((1.0 - 1e-9..=17.0 / 15.0 + 1e-9).contains(&ratio), "angle {angle}: {ratio}");
    }

    let again = renorm(&["sphere", "--norm", "lp-smooth", "--plane", "2,5", "--resolution", "24"]);
    assert_eq!(rows(&again.stdout), smooth);
}

#[test]
fn schedule_table() {
    let v = json(&renorm(&["schedule", "--k", "3"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!((rows[0]["eps"].as_f64(), rows[0]["theta"].as_f64()), (Some(1.0), Some(0.25)));
    assert_eq!((rows[1]["eps"].as_f64(), rows[1]["theta"].as_f64()), (Some(0.5), Some(1.0 / 16.0)));
    assert!(rows[1]["ratio"].as_f64().unwrap() < rows[1]["gap_bound"].as_f64().unwrap());
    assert_eq!(rows[2]["q"].as_u64(), Some(52));
    assert_eq!(v["validation"]["first_violation"], Value::Null);
}

#[test]
fn embed_demo() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", r#"{"entries":[[1,1.0]]}"#);
    let out = renorm(&["embed-l1", "--m", "2", s(&d)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["isometry_error"].as_f64(), Some(0.0));
    let prefix: Vec<f64> = v["embedded"]["prefix"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(prefix, vec![1.0, 1.0, -1.0, -1.0]);
    let out_of_range = write(&dir, "e.json", r#"{"entries":[[3,1.0]]}"#);
    assert_eq!(renorm(&["embed-l1", "--m", "2", s(&out_of_range)]).status.code(), Some(2));
}

#[test]
fn config_file_and_out_flag() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"{"entries":[[3,1.0],[8,1.0]]}"#);
    let cfg = write(&dir, "cfg.json", r#"{"norm":"lp-f","tol":1e-9}"#);
    let v = json(&renorm(&["--config", s(&cfg), "eval", s(&x)]));
    assert!((v["value"].as_f64().unwrap() - 8.0 / 3.0).abs() < 1e-14);
    let v = json(&renorm(&["--config", s(&cfg), "eval", "--norm", "base", s(&x)]));
    assert_eq!(v["value"].as_f64(), Some(2.0));
    let bad = write(&dir, "bad.json", r#"{"nrom":"lp-f"}"#);
    assert_eq!(renorm(&["--config", s(&bad), "eval", s(&x)]).status.code(), Some(2));

    let target = dir.path().join("out.csv");
    let out = renorm(&["sphere", "--resolution", "8", "--out", s(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(rows(&std::fs::read(&target).unwrap()).len(), 8);
}
