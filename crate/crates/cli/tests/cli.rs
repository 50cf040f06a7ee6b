use std::process::Command;

fn bsuq2(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bsuq2")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn coassoc_at_size_zero_is_one_passing_record() {
    let (code, out, _) = bsuq2(&["verify", "coassoc", "--max-size", "0"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        ["[pass] coassoc/a[0,0,0] (coproduct/coassociativity)", "summary: 1 passed, 0 failed, 0 skipped"]
    );
}

#[test]
fn json_output_is_reproducible() {
    let args = ["verify", "appendix-b", "--format", "json"];
    let (code, first, err) = bsuq2(&args);
    assert_eq!(code, 0);
    assert!(err.contains("9 passed"));
    let (_, second, _) = bsuq2(&args);
    assert_eq!(first, second);
    let rec: serde_json::Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    for key in ["check-id", "location", "status", "witness", "wall-time-ms"] {
        assert!(rec.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn failing_checks_exit_with_one() {
    let (code, out, _) = bsuq2(&["verify", "quotient"]);
    assert_eq!(code, 1);
    assert!(out.contains("[fail] quotient/relation/B*B=A^2-A^4"));
    assert!(out.contains("[pass] quotient/relation-corrected/B*B=A-A^2"));
}

#[test]
fn check_rank_reports_nine() {
    let (code, out, _) = bsuq2(&["check-rank", "--q", "0.3+0.4i", "--levels", "10", "--window", "8"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("[pass] rank/nine-range/q=0.3+0.4i"));
    assert!(out.contains("rank = 9"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(bsuq2(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(bsuq2(&["check-rank", "--q", "1.5"]).0, 2);
    assert_eq!(bsuq2(&["check-rank", "--levels", "0"]).0, 2);
    assert_eq!(bsuq2(&["verify", "appendix-a", "--oracle-dir", "/nonexistent"]).0, 2);
}

#[test]
fn report_summarizes_a_json_file() {
    let (_, json, _) = bsuq2(&["verify", "quotient", "--format", "json"]);
    let path = std::env::temp_dir().join(format!("bsuq2-report-{}.jsonl", std::process::id()));
    std::fs::write(&path, json).unwrap();
    let (code, out, _) = bsuq2(&["report", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 1);
    assert!(out.lines().last().unwrap().starts_with("summary: 31 passed, 2 failed"));
}
