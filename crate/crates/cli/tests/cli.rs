use std::process::Command;

use qtwist_cli::{run, Outcome, EXIT_PASS, EXIT_RESOURCE, EXIT_USAGE, SCHEMA};
use serde_json::Value;

fn qt(args: &str) -> Outcome {
    run(std::iter::once("qtwist").chain(args.split_whitespace()))
}

fn validate(doc: &str) {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let v: Value = serde_json::from_str(doc).unwrap();
    let msgs: Vec<String> = match compiled.validate(&v) {
        Ok(()) => Vec::new(),
        Err(errs) => errs.map(|e| e.to_string()).collect(),
    };
    assert!(msgs.is_empty(), "schema violations: {msgs:?}\n{doc}");
}

#[test]
fn tensor_suite_exits_zero() {
    let o = qt("verify --suite tensor --N 2");
    assert_eq!(o.code, EXIT_PASS, "{}", o.stdout);
    assert!(o.stdout.starts_with("suite tensor [N=2]\n"));
    assert!(o.stdout.contains("overall PASS"));
}

#[test]
fn pi_map_prints_image() {
    let o = qt("pi-map --n 3 --perm 321");
    assert_eq!((o.code, o.stdout.as_str()), (0, "123\n"));
    assert_eq!(qt("pi-map --n 3 --perm 3,1,2").stdout, "213\n");
}

#[test]
fn evalhom_json_report() {
    let o = qt("verify --suite evalhom --case sympl --N 2 --format json");
    assert_eq!(o.code, EXIT_PASS);
    validate(&o.stdout);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["suite"], "eval-hom");
    assert_eq!(v["overall"], "PASS");
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e.get("elapsed_ms").is_none()));
}

#[test]
fn print_goldens() {
    for (id, want) in [
        ("gamma:orth:2", "u^-1 - q^-2*u"),
        ("qdet:1", "t[1,1] - tb[1,1]*u^-1"),
        ("qdet:1:tbar", "-t[1,1]*u + tb[1,1]"),
        ("casimir:1", "u + q^-1"),
        ("pi:21", "12"),
        ("minor:2:1:2", "-tb[1,2]*u^-1"),
    ] {
        let o = qt(&format!("print {id}"));
        assert_eq!(o.code, 0, "{id}: {}", o.stderr);
        assert_eq!(o.stdout, format!("{want}\n"), "{id}");
    }
}

#[test]
fn closed_casimir_matches_computed() {
    let closed = qt("print casimir:3:closed").stdout;
    assert_eq!(closed, qt("casimir --N 3").stdout);
    assert!(closed.starts_with("(q^5 + 2*q^4*u"));
}

#[test]
fn casimir_coefficient_ids() {
    assert_eq!(qt("print casimir:3:coeff:3").stdout, "1\n");
    assert_eq!(qt("print casimir:3:coeff:1").stdout, qt("casimir --N 3 --coeff 1").stdout);
    assert_eq!(qt("print casimir:2:coeff:9").stdout, "0\n");
}

#[test]
fn sdet_short_json_lists_terms() {
    let o = qt("sdet --case orth --N 2 --method short --format json");
    assert_eq!(o.code, 0);
    validate(&o.stdout);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["kind"], "element");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn sdet_fusion_and_qdet_elements_validate() {
    for args in ["sdet --case orth --N 1 --method fusion --format json", "qdet --N 2 --tbar --format json", "print pi:4321 --format json"] {
        let o = qt(args);
        assert_eq!(o.code, 0, "{args}: {}", o.stderr);
        validate(&o.stdout);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "",
        "frobnicate",
        "verify",
        "verify --suite nope",
        "verify --suite coideal --case sympl --N 3",
        "verify --suite coideal --case unitary",
        "verify --suite affine --order 1",
        "pi-map --n 3 --perm 12",
        "pi-map --n 3 --perm 1x2",
        "pi-map --n 3 --perm 112",
        "print bogus",
        "print gamma:orth:x",
        "sdet --case sympl --N 2 --method short",
        "verify --suite tensor --format yaml",
    ] {
        let o = qt(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}: {}{}", o.stdout, o.stderr);
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let o = qt("--help");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("verify"));
}

#[test]
fn timings_are_opt_in() {
    let plain = qt("verify --suite pi --N 4 --format json");
    let timed = qt("verify --suite pi --N 4 --format json --timings");
    validate(&timed.stdout);
    assert!(!plain.stdout.contains("elapsed_ms"));
    assert!(timed.stdout.contains("elapsed_ms"));
}

#[test]
fn output_is_reproducible() {
    for args in ["verify --suite presentations --trials 50 --format json", "verify --suite minors --N 2", "print sdet:short:3"] {
        assert_eq!(qt(args).stdout, qt(args).stdout, "{args}");
    }
}

#[test]
fn seed_changes_probe_params() {
    let a = qt("verify --suite pbw --trials 20 --seed 1 --format json").stdout;
    let b = qt("verify --suite pbw --trials 20 --seed 2 --format json").stdout;
    assert!(a.contains("\"seed\": \"1\"") && b.contains("\"seed\": \"2\""));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = qt(&format!("verify --suite qdet --N 2 --format json --out {}", path.display()));
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let doc = std::fs::read_to_string(&path).unwrap();
    validate(&doc);
    assert_eq!(doc, qt("verify --suite qdet --N 2 --format json").stdout);
}

#[test]
fn binary_resource_cap_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_qtwist"))
        .args(["verify", "--suite", "coideal", "--N", "2"])
        .env("QTWIST_MAX_TERMS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(EXIT_RESOURCE));
    assert!(String::from_utf8_lossy(&o.stdout).contains("resource limit exceeded"));
}

#[test]
fn binary_matches_library() {
    let o = Command::new(env!("CARGO_BIN_EXE_qtwist")).args(["pi-map", "--n", "3", "--perm", "231"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "123\n");
}

#[test]
fn separate_processes_agree_byte_for_byte() {
    for args in [&["verify", "--suite", "presentations", "--format", "json"][..], &["verify", "--suite", "determinants", "--N", "3"], &["print", "casimir:3"]] {
        let once = || Command::new(env!("CARGO_BIN_EXE_qtwist")).args(args).output().unwrap().stdout;
        let first = once();
        assert!(!first.is_empty());
        assert_eq!(first, once(), "{args:?}");
    }
}
