use std::process::Command;

use qtenum::enumerators::{qt_brute, EnumKey, Family};
use serde_json::Value;

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qtenum"));
    for (k, _) in std::env::vars() {
        if k.starts_with("QTENUM_") {
            cmd.env_remove(k);
        }
    }
    cmd.args(args).envs(env.iter().copied());
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

const POLY_12X7: &str = r#"{"red":[1,1,1,0,0,0,1,0,0,1,0,0,0,1,1,0,0,0,0],"green":[0,0,0,1,0,0,0,0,1,1,1,0,0,0,1,0,0,1,1]}"#;
const PDP_SAMPLE: &str = r#"{"path":[1,1,1,0,1,0,1,0,0,1,1,1,0,0,1,1,0,1,0,1,0,0,0,0],"labels":[1,2,5,0,0,0,4,6,0,3,0,0]}"#;

fn lines(s: &str) -> Vec<Value> {
    s.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn enumerate_small_families() {
    let (code, out, _) = run(&["enumerate", "--family", "pp-star", "--m", "1", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out).len(), 1);

    let (code, out, _) = run(&["enumerate", "--family", "rp-star", "--m", "0", "--n", "0"]);
    assert_eq!(code, 0);
    let objs = lines(&out);
    assert_eq!(objs.len(), 1);
    assert_eq!(objs[0]["object"]["red"], serde_json::json!([]));
}

#[test]
fn enumerate_count_matches_enumerator_at_one() {
    let (code, out, _) = run(&[
        "enumerate",
        "--family",
        "pp-star",
        "--m",
        "3",
        "--n",
        "2",
        "--k",
        "1",
    ]);
    assert_eq!(code, 0);
    let mut total = 0usize;
    for r in 1..=3 {
        let p = qt_brute(&EnumKey::new(Family::PpStar, 3, 2, r, 1).unwrap(), 12).unwrap();
        total += p
            .terms()
            .map(|(_, c)| usize::try_from(c.clone()).unwrap())
            .sum::<usize>();
    }
    assert_eq!(lines(&out).len(), total);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["no-such-command"]).0, 1);
    assert_eq!(
        run(&["qtpoly", "--family", "pp-star", "--m", "0", "--n", "1"]).0,
        1
    );
    assert_eq!(
        run(&["qtpoly", "--family", "rp-star", "--m", "2", "--n", "1", "--class", "9"]).0,
        1
    );
    assert_eq!(
        run(&["enumerate", "--family", "pp-star", "--m", "9", "--n", "9"]).0,
        3
    );
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn env_overrides_cap() {
    let args = [
        "qtpoly", "--family", "rp-star", "--m", "2", "--n", "2", "--method", "brute",
    ];
    assert_eq!(run(&args).0, 0);
    assert_eq!(run_env(&args, &[("QTENUM_CAP", "3")]).0, 3);
}

#[test]
fn qtpoly_methods_agree() {
    let base = [
        "qtpoly", "--family", "pf2-star", "--m", "2", "--n", "2", "--k", "1",
    ];
    let (c1, brute, _) = run(&[&base[..], &["--method", "brute"]].concat());
    let (c2, rec, _) = run(&[&base[..], &["--method", "recursion"]].concat());
    let (c3, both, _) = run(&[&base[..], &["--method", "both"]].concat());
    assert_eq!((c1, c2, c3), (0, 0, 0));
    assert_eq!(brute, rec);
    assert_eq!(brute, both);
}

#[test]
fn corrupted_cache_is_detected() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "--cache-dir",
        d,
        "qtpoly",
        "--family",
        "rp-star",
        "--m",
        "2",
        "--n",
        "1",
        "--class",
        "1",
    ];
    assert_eq!(run(&args).0, 0);
    assert_eq!(run(&["--cache-dir", d, "cache", "verify"]).0, 0);

    let file = std::fs::read_dir(dir.path())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    let mut entry: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    entry["poly"] = serde_json::json!([[0, 0, "5"]]);
    std::fs::write(&file, entry.to_string()).unwrap();

    let (code, out, _) = run(&[&args[..], &["--method", "both"]].concat());
    assert_eq!(code, 2, "{out}");
    assert_eq!(run(&["--cache-dir", d, "cache", "verify"]).0, 2);
    let (code, out, _) = run(&["--cache-dir", d, "cache", "gc"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"removed\":true"));
    assert!(!file.exists());
    assert_eq!(run(&["--cache-dir", d, "cache", "verify"]).0, 0);
}

#[test]
fn stats_of_sample_polyomino() {
    let (code, out, _) = run(&["stats", "--type", "polyomino", "--object", POLY_12X7]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["area"], 34);
    assert_eq!(v["dinv"], 32);
    assert_eq!(v["m"], 12);
    assert_eq!(v["n"], 7);
}

#[test]
fn psi_round_trip_through_cli() {
    let (_, out, _) = run(&[
        "enumerate",
        "--family",
        "rp-star",
        "--m",
        "2",
        "--n",
        "2",
        "--k",
        "1",
    ]);
    for line in lines(&out) {
        let mut obj = line["object"].clone();
        obj.as_object_mut().unwrap().remove("kind");
        let (c, img, _) = run(&["map", "--map", "psi", "--object", &obj.to_string()]);
        assert_eq!(c, 0);
        let (c, back, _) = run(&["map", "--map", "psi-inv", "--object", img.trim()]);
        assert_eq!(c, 0);
        assert_eq!(serde_json::from_str::<Value>(&back).unwrap(), obj);
    }
}

#[test]
fn bad_object_is_a_usage_error() {
    let (code, _, err) = run(&[
        "stats",
        "--type",
        "polyomino",
        "--object",
        r#"{"red":[1],"green":[1,0]}"#,
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("error"));
}

#[test]
fn render_sample_polyomino() {
    let (code, svg, _) = run(&["render", "--type", "polyomino", "--object", POLY_12X7]);
    assert_eq!(code, 0);
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("class=\"red-n\"").count(), 7);
    assert_eq!(svg.matches("class=\"green-e\"").count(), 12);
}

#[test]
fn render_empty_reduced() {
    let (code, svg, _) = run(&[
        "render",
        "--type",
        "reduced",
        "--object",
        r#"{"red":[],"green":[]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("grid-line\"").count(), 0);
    assert!(svg.contains("<g class=\"grid\">"));
}

#[test]
fn render_diagonal_bounce() {
    let (code, svg, _) = run(&["render", "--type", "pdp", "--object", PDP_SAMPLE]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("class=\"bounce-d\"").count(), 6);
    assert_eq!(svg.matches("class=\"bounce-n\"").count(), 6);
}

#[test]
fn verify_suites_pass() {
    for suite in ["main-identity", "psi", "zeta"] {
        let (code, out, _) = run(&["verify", "--suite", suite, "--size", "4"]);
        assert_eq!(code, 0, "{suite}: {out}");
        let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
        assert_eq!(last["failed"], 0);
    }
}

#[test]
fn verify_is_deterministic_for_a_seed() {
    let a = run(&[
        "--seed",
        "7",
        "verify",
        "--suite",
        "recursions",
        "--size",
        "4",
    ]);
    let b = run(&[
        "--seed",
        "7",
        "verify",
        "--suite",
        "recursions",
        "--size",
        "4",
    ]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn verify_respects_cap() {
    assert_eq!(run(&["--cap", "3", "verify", "--suite", "zeta"]).0, 3);
}

#[test]
fn conjecture_reports_per_monomial() {
    let (code, out, _) = run(&["conjecture", "--kind", "pdp-pmaj", "--size", "2"]);
    assert_eq!(code, 0);
    assert!(lines(&out).iter().all(|v| v["pass"] == true));
    let (code, out, _) = run(&["conjecture", "--kind", "lp-pmaj", "--size", "2"]);
    assert_eq!(code, 2);
    assert!(lines(&out).iter().any(|v| v["pass"] == false));
}
