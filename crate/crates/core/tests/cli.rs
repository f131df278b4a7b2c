use std::path::Path;
use std::process::Command;

use desargues::construct::ConstructionTrace;
use desargues::report::Report;
use desargues::FieldSpec;
use serde_json::Value;

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/fig4.json");

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_desargues"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn field(s: &str) -> FieldSpec {
    s.parse().unwrap()
}

#[test]
fn constructions_print_replayable_traces() {
    let (code, out, _) = run(&["add", "2", "3"]);
    assert_eq!(code, 0);
    let t = ConstructionTrace::from_json(&out).unwrap();
    t.replay().unwrap();
    assert_eq!(t.result.value().to_string(), "5");

    let (code, out, _) = run(&["--field", "HQ", "--aux", "1,-2", "mul", "i", "j"]);
    assert_eq!(code, 0);
    let t = ConstructionTrace::from_json(&out).unwrap();
    t.replay().unwrap();
    assert_eq!(t.result.value().to_string(), "k");

    assert_eq!(run(&["--trace", "none", "--field", "HQ", "mul", "j", "i"]).1, "-k\n");
    assert_eq!(run(&["--trace", "none", "--field", "HQ", "ldiv", "j", "i"]).1, "-k\n");
    assert_eq!(run(&["--trace", "none", "--field", "F:5", "sub", "1", "3"]).1, "3\n");
}

#[test]
fn numeric_outputs_are_literals() {
    let cases: [(&str, &[&str]); 6] = [
        ("Q", &["ratio2", "7", "3"]),
        ("Q", &["ratio3", "1/2", "-3", "4"]),
        ("HQ", &["ratio2", "i+j", "k"]),
        ("F:3^2", &["ratio3", "[1,2]", "[0,1]", "1"]),
        ("F:7", &["midpoint", "2", "5"]),
        ("Q", &["--trace", "none", "ldiv", "3", "-4/5"]),
    ];
    for (f, args) in cases {
        let mut all = vec!["--field", f];
        all.extend_from_slice(args);
        let (code, out, err) = run(&all);
        assert_eq!(code, 0, "{args:?}: {err}");
        let text = out.trim();
        let parsed = field(f).parse_scalar(text).unwrap();
        assert_eq!(parsed.to_string(), text);
    }
    let (_, out, _) = run(&["lineq", "3", "1"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["M"], "1/2");
    assert_eq!(v["N"], "-1/2");
    for key in ["M", "N"] {
        let text = v[key].as_str().unwrap();
        assert_eq!(field("Q").parse_scalar(text).unwrap().to_string(), text);
    }
}

#[test]
fn degenerate_values() {
    assert_eq!(run(&["ratio2", "1", "0"]).1, "inf\n");
    let (code, _, err) = run(&["ratio2", "0", "0"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"], "UndefinedRatio");
    assert_eq!(run(&["--field", "F:2", "midpoint", "0", "1"]).1, "none\n");
    assert_eq!(run(&["--field", "F:2^2", "midpoint", "[0,1]", "[0,1]"]).1, "all\n");
    assert_eq!(run(&["ldiv", "1", "0"]).0, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["--field", "F:6", "add", "1", "1"]).0, 2);
    assert_eq!(run(&["--field", "F:5", "add", "1/2", "1"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--samples", "0", "check", "axioms"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn check_exit_status_follows_the_report() {
    for (f, suite) in [("Q", "ratio3"), ("HQ", "substructure"), ("F:2^2", "desargues"), ("F:5", "preservation")] {
        let (code, out, err) = run(&["--field", f, "--samples", "10", "check", suite]);
        let rep: Report = serde_json::from_str(&out).unwrap();
        assert!(!rep.entries.is_empty());
        assert_eq!(code, i32::from(rep.has_failures()), "{f} {suite}");
        assert!(err.starts_with(&format!("{suite} over {f}:")), "{err}");
    }
}

#[test]
fn out_flag_writes_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["--out", p, "mul", "3", "2"]);
    assert_eq!((code, out.as_str()), (0, "6\n"));
    let t = ConstructionTrace::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    t.replay().unwrap();

    let svg = dir.path().join("trace.svg");
    let s = svg.to_str().unwrap();
    assert_eq!(run(&["--trace", "svg", "--out", s, "add", "1", "2"]).0, 0);
    assert!(std::fs::read_to_string(Path::new(s)).unwrap().starts_with("<svg"));

    let (code, out, err) = run(&["--field", "F:5", "--trace", "svg", "add", "1", "2"]);
    assert_eq!(code, 0);
    assert!(ConstructionTrace::from_json(&out).is_ok());
    assert!(!err.is_empty());
}

#[test]
fn dyck_commands() {
    let (code, out, _) = run(&["dyck", "validate", FIXTURE]);
    assert_eq!(code, 0);
    let rep: Report = serde_json::from_str(&out).unwrap();
    assert!(!rep.has_failures());

    let v: Value = serde_json::from_str(&run(&["dyck", "present", FIXTURE, "B4"]).1).unwrap();
    assert_eq!(v["word"], serde_json::json!({"A": 1, "B": 1}));
    assert_eq!(v["measure"], 2);

    let v: Value = serde_json::from_str(&run(&["dyck", "reach", FIXTURE, "A", "B1"]).1).unwrap();
    assert_eq!(v["path"], serde_json::json!(["A", "B", "C", "B1"]));
    assert_eq!(v["length"], 3);

    assert_eq!(run(&["dyck", "reach", FIXTURE, "B4", "A"]).0, 1);
    assert_eq!(run(&["dyck", "validate", "/nonexistent.json"]).0, 2);
}
