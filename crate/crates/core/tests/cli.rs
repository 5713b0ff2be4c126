use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bdc(args: &[&str], stdin: &str, cache: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bdc"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("BDC_CACHE");
    if let Some(path) = cache {
        cmd.env("BDC_CACHE", path);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const FIG2: &str = r#"{"caterpillar":{"m":[2,1],"lambda":[2,1]}}"#;

#[test]
fn generate_then_compute() {
    let gen = bdc(
        &["generate", "caterpillar", "--m", "2,1", "--lambda", "2,1"],
        "",
        None,
    );
    assert!(gen.status.success());
    assert_eq!(stdout(&gen).trim(), FIG2);

    let out = bdc(&["compute"], &stdout(&gen), None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"instance":{"caterpillar":{"m":[2,1],"lambda":[2,1]}},"method":"closed-form","contractible":false,"spheres":{"1":1}}"#
    );

    let p4 = bdc(
        &["generate", "path", "--n", "4", "--lambda", "1,1,1,1"],
        "",
        None,
    );
    assert_eq!(
        stdout(&p4).trim(),
        r#"{"n":4,"edges":[[0,1],[1,2],[2,3]],"lambda":[1,1,1,1]}"#
    );
    let c3 = bdc(
        &["generate", "cycle", "--n", "3", "--lambda", "1,1,2"],
        "",
        None,
    );
    assert_eq!(stdout(&c3).trim(), r#"{"cycle":{"n":3,"lambda":[1,1,2]}}"#);
}

#[test]
fn compute_methods_and_exit_codes() {
    let kozlov = bdc(
        &["compute"],
        r#"{"cycle":{"n":5,"lambda":[1,1,1,1,1]}}"#,
        None,
    );
    assert!(kozlov.status.success());
    assert!(stdout(&kozlov).contains(r#""method":"homology""#));
    assert!(stdout(&kozlov).contains(r#""spheres":{"1":1}"#));

    let mismatch = bdc(
        &["compute", "--method", "closed-form"],
        r#"{"n":2,"edges":[[0,1]],"lambda":[1,1]}"#,
        None,
    );
    assert_eq!(mismatch.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&mismatch.stderr).contains("method mismatch"));

    let malformed = bdc(&["compute"], "{", None);
    assert_eq!(malformed.status.code(), Some(1));

    let usage = bdc(&["compute", "--method", "fastest"], FIG2, None);
    assert_eq!(usage.status.code(), Some(2));

    let capped = bdc(
        &["compute", "--method", "homology", "--face-cap", "3"],
        r#"{"cycle":{"n":6,"lambda":[2,2,2,2,2,2]}}"#,
        None,
    );
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("face cap"));
}

#[test]
fn torsion_is_reported_without_spheres() {
    let k7: Vec<String> = (0..7)
        .flat_map(|u| (u + 1..7).map(move |v| format!("[{u},{v}]")))
        .collect();
    let json = format!(
        r#"{{"n":7,"edges":[{}],"lambda":[1,1,1,1,1,1,1]}}"#,
        k7.join(",")
    );
    let out = bdc(&["compute"], &json, None);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("\"spheres\""));
    assert!(text.contains(r#""contractible":false"#));
    assert!(text.contains(r#""torsion":{"1":["3"]}"#));
}

#[test]
fn check_and_table_output() {
    let out = bdc(&["compute", "--check", "--output", "table"], FIG2, None);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("instance"));
    assert!(text.contains("closed-form"));
    assert!(text.contains("agree"));

    let json = bdc(&["compute", "--check"], FIG2, None);
    assert!(stdout(&json).contains(
        r#""agreement":{"methods":["closed-form","recursion","homology"],"agree":true}"#
    ));

    let timed = bdc(&["compute", "--timings"], FIG2, None);
    assert!(stdout(&timed).contains("\"timing_ms\":{"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let input = r#"{"n":9,"edges":[[0,1],[1,2],[2,3],[3,4],[2,5],[5,6],[6,7],[1,8]],"lambda":[1,2,3,2,1,2,2,1,1]}"#;
    let a = bdc(&["compute", "--check"], input, None);
    let b = bdc(&["compute", "--check"], input, None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn batch_keeps_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("in.jsonl");
    let mut lines = vec![
        FIG2.to_string(),
        "{not json".to_string(),
        r#"{"cycle":{"n":3,"lambda":[1,1,2]}}"#.to_string(),
    ];
    for n in 2..40 {
        lines.push(format!(
            r#"{{"cycle":{{"n":{},"lambda":[{}]}}}}"#,
            n % 6 + 3,
            vec!["1"; n % 6 + 3].join(",")
        ));
    }
    std::fs::write(&file, lines.join("\n") + "\n").unwrap();
    let path = file.to_str().unwrap();

    let one = bdc(&["batch", path, "--jobs", "1"], "", None);
    let many = bdc(&["batch", path, "--jobs", "8"], "", None);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.status.code(), Some(1));
    let out = stdout(&one);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), lines.len());
    assert!(rows[0].contains(r#""spheres":{"1":1}"#));
    assert!(rows[1].starts_with(r#"{"line":2,"error":"#));
    assert!(rows[2].contains(r#""spheres":{"0":1}"#));

    let empty = dir.path().join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let out = bdc(&["batch", empty.to_str().unwrap()], "", None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let stdin = bdc(&["batch", "-"], &format!("{FIG2}\n"), None);
    assert!(stdin.status.success());
    assert_eq!(stdout(&stdin).lines().count(), 1);
}

#[test]
fn verify_sweeps() {
    let out = bdc(
        &[
            "verify",
            "forests",
            "--max-edges",
            "5",
            "--max-bound",
            "2",
            "--jobs",
            "4",
        ],
        "",
        None,
    );
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["mismatches"], 0);
    assert_eq!(report["torsion"], 0);
    assert_eq!(report["agreements"], report["instances"]);

    let a = bdc(
        &[
            "verify",
            "random",
            "--seed",
            "42",
            "--count",
            "200",
            "--max-edges",
            "9",
        ],
        "",
        None,
    );
    let b = bdc(
        &[
            "verify",
            "--jobs",
            "3",
            "random",
            "--seed",
            "42",
            "--count",
            "200",
            "--max-edges",
            "9",
        ],
        "",
        None,
    );
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let table = bdc(&["verify", "caterpillars", "--output", "table"], "", None);
    assert!(table.status.success());
    assert!(stdout(&table).contains("mismatches   0"));

    let bad = bdc(&["verify", "cycles", "--min-n", "2"], "", None);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn cache_file_via_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("spheres.cache");
    let input =
        r#"{"n":8,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,7]],"lambda":[1,2,2,2,2,2,2,1]}"#;
    let first = bdc(&["compute"], input, Some(&cache));
    assert!(first.status.success());
    let text = std::fs::read_to_string(&cache).unwrap();
    assert!(text.starts_with("bdcomplex-sphere-cache v1\n"));
    let second = bdc(&["compute"], input, Some(&cache));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), text);

    std::fs::write(&cache, "garbage\n").unwrap();
    let third = bdc(&["compute"], input, Some(&cache));
    assert!(third.status.success());
    assert_eq!(first.stdout, third.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("warning"));
    assert_eq!(std::fs::read_to_string(&cache).unwrap(), "garbage\n");
}
