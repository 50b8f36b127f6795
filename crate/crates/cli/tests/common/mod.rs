#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub fn bhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhopf")).args(args).output().expect("binary runs")
}

/// A config with passing, skipped and failing checks.
pub const MIXED: &str = r#"
jobs = 2

[[scenario]]
name = "pass"
family = "B"
alpha = 2
beta = 1
dim = 16
suites = ["relations"]

[[scenario]]
name = "skip-r"
family = "Bq"
alpha = 2
beta = 3
q = 1.3
dim = 6
suites = ["rmatrix"]

[[scenario]]
name = "skip-hopf"
family = "B"
alpha = 0
beta = 1
dim = 6
suites = ["hopf"]

[[scenario]]
name = "skip-delta"
family = "H"
delta = [0, 1]
nu = 2
dim = 6
suites = ["relations"]

[[scenario]]
name = "fail"
family = "Bq"
alpha = 2
beta = 1
q = 1.3
dim = 12
suites = ["hopf"]
tolerance = { hopf = 1e-300 }
"#;

/// Runs `config` and returns (exit code, report JSON with wall times removed).
pub fn run_config(dir: &Path, name: &str, config: &str) -> (i32, serde_json::Value, String) {
    let cfg = dir.join(format!("{name}.toml"));
    let out = dir.join(format!("{name}.json"));
    std::fs::write(&cfg, config).unwrap();
    let o = bhopf(&["run", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    let text = std::fs::read_to_string(&out).unwrap_or_default();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap_or(serde_json::Value::Null);
    if let Some(reports) = v.get_mut("reports").and_then(|r| r.as_array_mut()) {
        for r in reports {
            r.as_object_mut().unwrap().remove("wall_time_ms");
        }
    }
    (o.status.code().unwrap_or(-1), v, String::from_utf8_lossy(&o.stderr).into_owned())
}
