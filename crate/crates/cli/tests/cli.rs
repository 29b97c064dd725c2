use std::fs;
use std::process::{Command, Output};

use casimir_cli::{CacheKey, CacheStore};
use serde_json::{json, Value};

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .env_remove("CASIMIR_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Reads a UEA element JSON back into (coeff, monomial) pairs.
fn terms(v: &Value) -> Vec<(String, Vec<[u64; 3]>)> {
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let mono = t["monomial"].as_array().unwrap().iter().map(|g| {
                let g = g.as_array().unwrap();
                [g[0].as_u64().unwrap(), g[1].as_u64().unwrap(), g[2].as_u64().unwrap()]
            });
            (t["coeff"].as_str().unwrap().to_string(), mono.collect())
        })
        .collect()
}

#[test]
fn omega_of_the_vector_representation() {
    let out = casimir(&["omega", "--n", "2", "--lambda", "1,0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    // [[E11, E21], [E12, E22]], each a constant in u
    let expect = [[(1, 1), (2, 1)], [(1, 2), (2, 2)]];
    for (r, row) in expect.iter().enumerate() {
        for (c, &(i, j)) in row.iter().enumerate() {
            let entry = &v["entries"][r][c]["0"];
            assert_eq!(terms(entry), vec![("1".to_string(), vec![[i, j, 1]])], "entry ({r},{c})");
        }
    }
}

#[test]
fn sdet_reports_centrality_and_matches_closed_form() {
    let out = casimir(&["sdet", "--n", "2", "--lambda", "3,1", "--hc", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let report = v["result"]["centrality_report"].as_object().unwrap();
    assert_eq!(report.len(), 4);
    assert!(report.values().all(|c| c == &json!(true)));
    assert_eq!(v["matches_gl2_product_form"], json!(true));
    // top coefficient of χ(D) is 1, the u² coefficient is 6μ₁ + 6μ₂ − 3
    let u2 = v["hc"]["udeg"]["2"].as_object().unwrap();
    assert_eq!(u2.get("[1,0]"), Some(&json!("6")));
    assert_eq!(u2.get("[0,0]"), Some(&json!("-3")));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(casimir(&["verify", "--suite", "vector", "--n", "3"]).status.code(), Some(0));
    assert_eq!(casimir(&["verify", "--suite", "rtt", "--n", "2"]).status.code(), Some(0));
    // the plethysm identity fails for (1,1) and (2,0)
    let out = casimir(&["verify", "--suite", "plethysm", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], json!(false));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| r["check"] == "plethysm" && r["params"]["n"] == 2));
}

#[test]
fn usage_and_bound_errors() {
    assert_eq!(casimir(&["sdet", "--n", "2", "--lambda", "0,1"]).status.code(), Some(2));
    assert_eq!(casimir(&["sdet", "--n", "2", "--lambda", "1,0,0"]).status.code(), Some(2));
    assert_eq!(casimir(&["verify", "--suite", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(casimir(&["verify", "--suite", "gl2", "--n", "3"]).status.code(), Some(2));
    assert_eq!(casimir(&["omega", "--n", "2", "--lambda", "1,0", "--parallelism", "0"]).status.code(), Some(2));
    let out = casimir(&["sdet", "--n", "3", "--lambda", "2,1,0", "--term-bound", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}

#[test]
fn json_is_independent_of_parallelism() {
    let a = casimir(&["verify", "--suite", "fusion", "--n", "3", "--format", "json", "--parallelism", "1"]);
    let b = casimir(&["verify", "--suite", "fusion", "--n", "3", "--format", "json", "--parallelism", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = casimir(&["sdet", "--n", "3", "--lambda", "1,1,0", "--hc", "--format", "json", "--parallelism", "3"]);
    let d = casimir(&["sdet", "--n", "3", "--lambda", "1,1,0", "--hc", "--format", "json"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn hc_of_an_element_and_closed_forms() {
    let out = casimir(&["hc", "--n", "2", "--element", "E[1,1]E[2,2] - E[2,2] - E[1,2]E[2,1]", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["central"], json!(true));
    // E12E21 = E21E12 + E11 − E22, so χ = μ₁μ₂ − μ₂ − (μ₁ − μ₂) = μ₁μ₂ − μ₁
    let hc = v["hc"].as_object().unwrap();
    assert_eq!(hc.get("[1,1]"), Some(&json!("1")));
    assert_eq!(hc.get("[1,0]"), Some(&json!("-1")));
    assert_eq!(hc.get("[0,1]"), None);
    assert_eq!(casimir(&["hc", "--n", "2", "--lambda", "2,0"]).status.code(), Some(0));
    assert_eq!(casimir(&["hc", "--n", "3", "--lambda", "2,0,0"]).status.code(), Some(2));
}

#[test]
fn conjecture_scan_is_experimental() {
    let out = casimir(&["conjecture-scan", "--n", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["experimental"], json!(true));
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert!(results.iter().all(|r| !r["default_basis"].as_object().unwrap().is_empty()));
}

#[test]
fn cache_roundtrip_and_misses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let store = CacheStore::new(&path);
    let key = CacheKey::new("sdet", 2, &[2, 0], "");
    assert_eq!(store.get(&key).unwrap(), None);
    let value = json!({"poly": {"1": "3/2"}, "list": [1, 2, 3]});
    store.put(&key, &value).unwrap();
    assert_eq!(store.get(&key).unwrap(), Some(value.clone()));
    assert_eq!(store.get(&CacheKey::new("sdet", 2, &[2, 0], "hc")).unwrap(), None);
    let bumped = CacheStore::with_version(&path, "999.0.0");
    assert_eq!(bumped.get(&key).unwrap(), None);
    // no temporary files are left behind
    let names: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 1);
}

#[test]
fn corrupt_cache_is_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let store = CacheStore::new(&path);
    let good = CacheKey::new("omega", 2, &[1, 0], "");
    store.put(&good, &json!(1)).unwrap();
    // a malformed entry next to a good one
    let mut raw: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    raw["capelli|n=2|lambda=1,0|"] = json!("garbage");
    fs::write(&path, raw.to_string()).unwrap();
    assert_eq!(store.get(&CacheKey::new("capelli", 2, &[1, 0], "")).unwrap(), None);
    assert_eq!(store.get(&good).unwrap(), Some(json!(1)));
    // an unreadable file is a miss, and the next write replaces it
    fs::write(&path, "{not json").unwrap();
    assert_eq!(store.get(&good).unwrap(), None);
    store.put(&good, &json!(2)).unwrap();
    assert_eq!(store.get(&good).unwrap(), Some(json!(2)));
}

#[test]
fn cli_cache_hit_reproduces_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let p = path.to_str().unwrap();
    let args = ["sdet", "--n", "2", "--lambda", "2,0", "--hc", "--format", "json", "--cache", p];
    let first = casimir(&args);
    assert!(path.exists());
    let second = casimir(&args);
    assert_eq!(first.stdout, second.stdout);
    let via_env = Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(&args[..8])
        .env("CASIMIR_CACHE", p)
        .output()
        .unwrap();
    assert_eq!(first.stdout, via_env.stdout);
}
