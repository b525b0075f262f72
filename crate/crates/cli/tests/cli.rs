use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn relfrob(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relfrob"))
        .args(args)
        .arg("--cache-dir")
        .arg(cache)
        .env_remove("RELFROB_WORK_BOUND")
        .output()
        .expect("spawn relfrob")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

struct Files {
    dir: tempfile::TempDir,
}

impl Files {
    fn new() -> Self {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("s3.grp"), "# S_3\ndegree: 3\ngen: (1 2)\ngen: (1 2 3)\n").unwrap();
        fs::write(dir.path().join("bad.grp"), "degree: 3\ngen: (1 2\n").unwrap();
        fs::write(dir.path().join("gl23.grp"), "builtin: GL n=2 q=3\n").unwrap();
        fs::write(dir.path().join("c3.json"), r#"{"table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}"#).unwrap();
        fs::write(dir.path().join("c3.grp"), "cayley: c3.json\n").unwrap();
        Files { dir }
    }

    fn path(&self, name: &str) -> String {
        self.dir.path().join(name).to_string_lossy().into_owned()
    }

    fn cache(&self) -> std::path::PathBuf {
        self.dir.path().join("cache")
    }
}

#[test]
fn verify_main_on_s3() {
    let f = Files::new();
    let g = f.path("s3.grp");
    let out = relfrob(&["verify-main", "--group", &g, "--gset", "natural", "--k", "1", "--m", "1", "--g", "e"], &f.cache());
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["lhs"], json!(54));
    assert_eq!(r["results"]["rhs"], json!(54));
    assert_eq!(r["results"]["equal"], json!(true));
    assert_eq!(r["versions"], json!({"schema": 1}));
    assert_eq!(r["timings_ms"], json!({}));
}

#[test]
fn gelfand_with_subgroup_generators() {
    let f = Files::new();
    let g = f.path("s3.grp");
    let out = relfrob(&["gelfand", "--group", &g, "--subgroup", "(1 2)"], &f.cache());
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["gelfand"], json!(true));
    assert_eq!(r["results"]["commutator_criterion"], json!({"holds": true, "lhs": 54, "rhs": 54}));

    let out = relfrob(&["gelfand", "--group", &g, "--gset", "regular"], &f.cache());
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["gelfand"], json!(false));
    assert_eq!(r["results"]["commutator_criterion"], json!({"holds": false, "lhs": 108, "rhs": 216}));
}

#[test]
fn epoly_of_the_punctured_torus() {
    let f = Files::new();
    let out = relfrob(&["gln", "epoly", "--n", "2", "--genus", "1", "--punctures", "1", "--convention", "corrected"], &f.cache());
    assert_eq!(out.status.code(), Some(0));
    let p = &report(&out)["results"]["polynomial"];
    // (t² − 1)³ (t² − t)
    assert_eq!(p["min_exponent"], json!(1));
    assert_eq!(p["coefficients"], json!(["1", "-1", "-3", "3", "3", "-3", "-1", "1"]));
}

#[test]
fn parse_errors_exit_with_two_and_name_the_line() {
    let f = Files::new();
    let bad = f.path("bad.grp");
    let out = relfrob(&["chartable", "--group", &bad], &f.cache());
    assert_eq!(out.status.code(), Some(2));
    let r = report(&out);
    assert_eq!(r["error"]["kind"], json!("ParseError"));
    assert!(r["error"]["message"].as_str().unwrap().starts_with("line 2"));

    let out = relfrob(&["chartable", "--group", &f.path("missing.grp")], &f.cache());
    assert_eq!(out.status.code(), Some(2));
    let out = relfrob(&["verify-main", "--group", &f.path("s3.grp"), "--k", "1"], &f.cache());
    assert_eq!(out.status.code(), Some(2));
    let out = relfrob(&["no-such-command"], &f.cache());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn work_bound_exits_with_three() {
    let f = Files::new();
    let g = f.path("s3.grp");
    let out = relfrob(&["verify-classic", "--group", &g, "--k", "2", "--work-bound", "10"], &f.cache());
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report(&out)["error"]["kind"], json!("WorkBoundExceeded"));

    let out = Command::new(env!("CARGO_BIN_EXE_relfrob"))
        .args(["verify-classic", "--group", &g, "--k", "2", "--no-cache"])
        .env("RELFROB_WORK_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn builtin_and_cayley_group_files() {
    let f = Files::new();
    let out = relfrob(&["chartable", "--group", &f.path("gl23.grp")], &f.cache());
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["order"], json!(48));
    assert_eq!(r["results"]["dims"].as_array().unwrap().len(), 8);

    let out = relfrob(&["verify-classic", "--group", &f.path("c3.grp"), "--k", "1"], &f.cache());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["lhs"], json!(9));
}

#[test]
fn cached_tables_give_identical_output() {
    let f = Files::new();
    let g = f.path("s3.grp");
    let args = ["chartable", "--group", g.as_str(), "--gset", "natural"];
    let cold = relfrob(&args, &f.cache());
    assert!(fs::read_dir(f.cache()).unwrap().count() > 0);
    let warm = relfrob(&args, &f.cache());
    let uncached = Command::new(env!("CARGO_BIN_EXE_relfrob")).args(args).arg("--no-cache").output().unwrap();
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);

    // a corrupted cache entry is recomputed, not trusted
    for entry in fs::read_dir(f.cache()).unwrap() {
        fs::write(entry.unwrap().path(), "{\"version\": 1, \"garbage\": true}").unwrap();
    }
    let repaired = relfrob(&args, &f.cache());
    assert_eq!(cold.stdout, repaired.stdout);
}

#[test]
fn tsv_output() {
    let f = Files::new();
    let out = relfrob(&["fgcount", "--group", "builtin:S3", "--k", "1", "--m", "1", "--format", "tsv"], &f.cache());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "command\tfgcount"));
    assert!(text.lines().any(|l| l == "ok\ttrue"));
}

#[test]
fn topology_invariance_through_fgvol() {
    let f = Files::new();
    let natural = relfrob(&["fgvol", "--group", "builtin:S3", "--chi", "-2"], &f.cache());
    assert_eq!(natural.status.code(), Some(0));
    let r = report(&natural);
    assert_eq!(r["results"]["all_equal"], json!(true));
    let regular = relfrob(&["fgvol", "--group", "builtin:S3", "--gset", "regular", "--chi", "-2"], &f.cache());
    assert_eq!(regular.status.code(), Some(0));
    assert_eq!(report(&regular)["results"]["all_equal"], json!(false));
}
