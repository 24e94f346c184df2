use std::io::Write;

use thetadim_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

const FIELDS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/fields.net");

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("thetadim").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn dim_prints_value_then_case() {
    let (code, out, _) = call(&["dim", "3", "7", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "3\ncase: T4-P1\n");
    let (code, out, _) = call(&["dim", "3", "7", "3", "--oracle"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("oracle: 3 witness 1,2,6\n"), "{out}");
}

#[test]
fn swapped_case_is_labelled() {
    let (_, out, _) = call(&["dim", "2", "5", "3"]);
    assert_eq!(out, "2\ncase: T1-P2 (swapped)\n");
}

#[test]
fn basis_output() {
    let (code, out, _) = call(&["basis", "3", "7", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "basis: 1,2,6\ncase: T4-P1\ndimension: 3\n");
}

#[test]
fn check_reports_pair() {
    let (code, out, _) = call(&["check", "3", "7", "3", "--set", "2,6"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert_eq!(out, "resolving: no\nunresolved: 9 11\nshared code: 3,3\n");
    let (code, out, _) = call(&["check", "3", "7", "3", "--set", "1,2,6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "resolving: yes\nminimal: yes\n");
    let (code, out, _) = call(&["check", "3", "7", "3", "--set", "1,2,6,7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "resolving: yes\nminimal: no\n");
}

#[test]
fn domain_and_usage_errors() {
    let (code, _, err) = call(&["dim", "0", "2", "0"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.starts_with("error: invalid C(0,2,0)"), "{err}");
    assert_eq!(
        call(&["check", "3", "7", "3", "--set", "1,99"]).0,
        EXIT_DOMAIN
    );
    assert_eq!(
        call(&["check", "3", "7", "3", "--set", "1,x"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["dim", "3", "7"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["sweep", "--max-n", "30"]).0, EXIT_DOMAIN);
    assert_eq!(
        call(&["sweep", "--max-n", "5", "--case", "T9-P9"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn build_edge_list_and_network() {
    let (code, out, _) = call(&["build", "1", "3", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 2\n1 4\n2 3\n2 5\n3 4\n4 5\n");
    let (_, net, _) = call(&["build", "1", "3", "1", "--network"]);
    let spec = thetadim::parse_network(&net).unwrap();
    assert_eq!(spec.nodes.len(), 5);
    assert_eq!(spec.links.len(), 6);
}

#[test]
fn empty_sweep() {
    let (code, out, _) = call(&["sweep", "--max-n", "3"]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["records"], serde_json::json!([]));
    let (_, csv, _) = call(&["sweep", "--max-n", "3", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 1);
}

#[test]
fn sweep_is_byte_stable_and_strict_passes() {
    let a = call(&["sweep", "--max-n", "10", "--strict"]);
    let b = call(&["sweep", "--max-n", "10", "--strict"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a, b);
}

#[test]
fn landmarks_on_fixture() {
    let (code, out, _) = call(&["landmarks", FIELDS]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("method\tclosed-form T3-P1 on C(5,3,4)"));
    assert_eq!(lines.next(), Some("landmarks\tField 1\tField 4"));
    assert_eq!(lines.next(), Some("code\tField 1\t0,3"));
    assert_eq!(out.lines().count(), 14);

    let (_, json, _) = call(&["landmarks", FIELDS, "--json"]);
    let table: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        table["landmarks"],
        serde_json::json!(["Field 1", "Field 4"])
    );
}

#[test]
fn landmarks_file_errors() {
    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "node a\nnode b\nlnik a b").unwrap();
    let (code, _, err) = call(&["landmarks", bad.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 3"), "{err}");

    let mut split = tempfile::NamedTempFile::new().unwrap();
    writeln!(split, "node a\nnode b").unwrap();
    assert_eq!(
        call(&["landmarks", split.path().to_str().unwrap()]).0,
        EXIT_DOMAIN
    );

    assert_eq!(call(&["landmarks", "/nonexistent/file.net"]).0, EXIT_USAGE);
}

#[test]
fn landmarks_on_non_theta_network_uses_oracle() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        "node a\nnode b\nnode c\nnode d\nlink a b\nlink b c\nlink c d\nlink d a\nlink a c\nlink b d"
    )
    .unwrap();
    let (code, out, _) = call(&["landmarks", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.starts_with("method\toracle\nlandmarks\ta\tb\tc\n"),
        "{out}"
    );
}
