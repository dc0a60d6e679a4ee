use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

/// Runs `tmat --json args..`, returning the exit code and parsed stdout.
fn tmat(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_tmat"))
        .arg("--json")
        .args(args)
        .output()
        .expect("spawn tmat");
    let code = out.status.code().expect("exit code");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let v = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (code, v)
}

fn scratch(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("tmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn has_witness(report: &Value, i: &[u64], j: &[u64]) -> bool {
    report["failures"].as_array().unwrap().iter().any(|f| {
        let to_vec = |v: &Value| {
            v.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect::<Vec<_>>()
        };
        to_vec(&f["I"]) == i && to_vec(&f["J"]) == j
    })
}

#[test]
fn triangle_gp_check() {
    let (code, r) = tmat(&[
        "gp",
        "check",
        "--mode",
        "weak",
        "--input",
        &data("triangle_u36.json"),
    ]);
    assert_eq!(code, 0, "{r}");
    let (code, r) = tmat(&[
        "gp",
        "check",
        "--mode",
        "strong",
        "--input",
        &data("triangle_u36.json"),
    ]);
    assert_eq!(code, 1);
    assert!(has_witness(&r, &[1, 2, 3, 4], &[5, 6]), "{r}");
}

#[test]
fn phase_gp_check() {
    let f = data("weissauer_phase.json");
    assert_eq!(tmat(&["gp", "check", "--mode", "weak", "--input", &f]).0, 0);
    let (code, r) = tmat(&["gp", "check", "--mode", "strong", "--input", &f]);
    assert_eq!(code, 1);
    assert!(has_witness(&r, &[1, 2, 3, 4], &[5, 6]));
}

#[test]
fn ddcheck_exit_codes() {
    let (code, r) = tmat(&["tract", "ddcheck", "--tract", "sign"]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "pass");
    let (code, r) = tmat(&["tract", "ddcheck", "--tract", "triangle"]);
    assert_eq!(code, 1);
    assert_eq!(r["witness"]["x"], "2");
    assert_eq!(tmat(&["tract", "verify", "--tract", "krasner"]).0, 0);
}

#[test]
fn enumerate_sign_rank_one() {
    let (code, r) = tmat(&[
        "enumerate",
        "--tract",
        "sign",
        "--rank",
        "1",
        "--elements",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["classes"], 4);
    let (code, _) = tmat(&[
        "enumerate",
        "--tract",
        "field:q",
        "--rank",
        "1",
        "--elements",
        "2",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn examples() {
    let (code, r) = tmat(&["examples", "list"]);
    assert_eq!(code, 0);
    assert_eq!(r.as_array().unwrap().len(), 5);
    for name in ["triangle-u36", "oriented-u24", "initial-k4"] {
        let (code, r) = tmat(&["examples", "run", name]);
        assert_eq!(code, 0, "{name}: {r}");
    }
    assert_eq!(tmat(&["examples", "run", "missing"]).0, 2);
}

#[test]
fn circuits_cocircuits_dual_pair() {
    let c = data("oriented_u24_circuits.json");
    let (code, r) = tmat(&[
        "matroid",
        "check-circuits",
        "--mode",
        "strong",
        "--input",
        &c,
    ]);
    assert_eq!(code, 0, "{r}");
    let (code, d) = tmat(&["matroid", "cocircuits", "--input", &c]);
    assert_eq!(code, 0);
    assert_eq!(d["circuits"].as_array().unwrap().len(), 4);
    let dfile = scratch("co.json", &d.to_string());
    assert_eq!(
        tmat(&[
            "matroid",
            "dual-pair",
            "--input",
            &c,
            "--cocircuits",
            &dfile
        ])
        .0,
        0
    );

    // one flipped cocircuit entry breaks orthogonality
    let mut bad = d.clone();
    let entry = &mut bad["circuits"][0][1];
    *entry = Value::String(if entry == "1" {
        "-1".into()
    } else {
        "1".into()
    });
    let bfile = scratch("bad.json", &bad.to_string());
    let (code, r) = tmat(&[
        "matroid",
        "dual-pair",
        "--input",
        &c,
        "--cocircuits",
        &bfile,
    ]);
    assert_eq!(code, 1);
    assert_eq!(r["failures"][0]["axiom"], "DP3");
}

#[test]
fn gp_round_trip_through_files() {
    let (code, c) = tmat(&["gp", "circuits", "--input", &data("oriented_u24.json")]);
    assert_eq!(code, 0);
    let cfile = scratch("circ.json", &c.to_string());
    let (code, phi) = tmat(&["gp", "reconstruct", "--input", &cfile]);
    assert_eq!(code, 0);
    let vals = phi["values"].as_object().unwrap();
    assert_eq!(vals.len(), 6);
    assert!(vals.values().all(|v| v == "1"), "{phi}");
    let (_, dual) = tmat(&["gp", "dual", "--input", &data("oriented_u24.json")]);
    assert_eq!(dual["rank"], 2);
}

#[test]
fn minors_and_pushforward() {
    let c = data("oriented_u24_circuits.json");
    let (code, r) = tmat(&[
        "matroid", "minor", "--input", &c, "--set", "4", "--op", "contract",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["ground_set"], 3);
    assert_eq!(r["circuits"].as_array().unwrap().len(), 3);
    let (code, r) = tmat(&[
        "gp",
        "minor",
        "--input",
        &data("oriented_u24.json"),
        "--set",
        "4",
        "--op",
        "delete",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["values"].as_object().unwrap().len(), 3);
    let (code, r) = tmat(&["matroid", "pushforward", "--input", &c, "--hom", "psi"]);
    assert_eq!(code, 0);
    assert_eq!(r["tract"], "krasner");
    assert_eq!(
        tmat(&["matroid", "pushforward", "--input", &c, "--hom", "sigma"]).0,
        2
    );
}

#[test]
fn invalid_input_exits_two() {
    let bad = scratch("bad_json.json", "{ not json");
    assert_eq!(tmat(&["gp", "check", "--input", &bad]).0, 2);
    let unknown = scratch(
        "unknown.json",
        r#"{"tract":"octonions","rank":1,"ground_set":2,"values":{}}"#,
    );
    assert_eq!(tmat(&["gp", "check", "--input", &unknown]).0, 2);
    let arity = scratch(
        "arity.json",
        r#"{"tract":"sign","rank":2,"ground_set":3,"values":{"1,2,3":"1"}}"#,
    );
    assert_eq!(tmat(&["gp", "check", "--input", &arity]).0, 2);
    assert_eq!(
        tmat(&["gp", "check", "--input", "/nonexistent/file.json"]).0,
        2
    );
    assert_eq!(
        tmat(&["--seed", "xyz", "tract", "verify", "--tract", "sign"]).0,
        2
    );
}
