use excessive_index::cli::{run, EXIT_BUDGET, EXIT_NOT_COVERABLE, EXIT_OK, EXIT_USAGE};
use excessive_index::lab::read_jsonl;
use serde_json::Value;

fn excessive(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("excessive").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn index_prints_value_and_cover() {
    let (code, out, _) = excessive(&["index", "--cat", "0,1,1,1,0", "--m", "4", "--witness"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "4");
    assert_eq!(
        lines.iter().filter(|l| l.starts_with("matching ")).count(),
        4
    );
}

#[test]
fn index_json_carries_a_checkable_witness() {
    let (code, out, _) = excessive(&[
        "index",
        "--construct",
        "petersen",
        "--m",
        "5",
        "--format",
        "json",
        "--witness",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 5);
    assert_eq!(v["lower_bounds"]["chromatic"], 4);
    let cover = v["witness"].as_array().unwrap();
    assert_eq!(cover.len(), 5);
    let mut seen = std::collections::BTreeSet::new();
    for m in cover {
        let m = m.as_array().unwrap();
        assert_eq!(m.len(), 5);
        seen.extend(m.iter().map(|e| e.to_string()));
    }
    assert_eq!(seen.len(), 15);
}

#[test]
fn auto_method_and_csv() {
    let (code, out, _) = excessive(&[
        "index",
        "--cat",
        "1,1,1,1,1",
        "--m",
        "4",
        "--method",
        "auto",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("m,value,method"));
    assert!(lines.next().unwrap().starts_with("4,4,formula-tree-m4,"));
}

#[test]
fn uncoverable_graph_reports_infinite() {
    let (code, out, err) = excessive(&["index", "--graph6", "Bw", "--m", "2"]);
    assert_eq!(code, EXIT_NOT_COVERABLE);
    assert_eq!(out.trim(), "INFINITE");
    assert!(err.contains("lies in no 2-matching"));
}

#[test]
fn budget_exhaustion_has_its_own_code() {
    let (code, _, err) = excessive(&[
        "index",
        "--construct",
        "petersen",
        "--m",
        "5",
        "--node-limit",
        "1",
    ]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(err.contains("budget"));
}

#[test]
fn usage_errors() {
    assert_eq!(excessive(&["index", "--m", "4"]).0, EXIT_USAGE);
    assert_eq!(
        excessive(&["index", "--path", "3", "--star", "3", "--m", "2"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        excessive(&["splitting", "--path", "8", "--m", "4", "--t", "4"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        excessive(&["index", "--graph6", "!!", "--m", "2"]).0,
        EXIT_USAGE
    );
    assert_eq!(excessive(&["verify"]).0, EXIT_USAGE);
    let (code, out, _) = excessive(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("splitting"));
}

#[test]
fn edge_list_input() {
    let dir = std::env::temp_dir().join(format!("excessive-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("c5.txt");
    std::fs::write(&file, "# five-cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let (code, out, _) = excessive(&["index", "--edge-list", file.to_str().unwrap(), "--m", "2"]);
    assert_eq!((code, out.lines().next()), (EXIT_OK, Some("3")));
    std::fs::remove_dir_all(dir).unwrap();
}

fn splitting_value(args: &[&str]) -> u64 {
    let mut full = vec!["splitting", "--format", "json"];
    full.extend_from_slice(args);
    let (code, out, _) = excessive(&full);
    assert_eq!(code, EXIT_OK, "{args:?}");
    let v: Value = serde_json::from_str(&out).unwrap();
    v[0]["value"].as_u64().unwrap()
}

#[test]
fn splitting_numbers() {
    assert_eq!(
        splitting_value(&["--cat", "0,1,1,1,0", "--m", "4", "--t", "1"]),
        4
    );
    assert_eq!(
        splitting_value(&["--construct", "k6-pendants", "--m", "4", "--t", "2"]),
        15
    );
    assert_eq!(splitting_value(&["--path", "8", "--m", "4", "--t", "1"]), 2);
    let (_, out, _) = excessive(&["splitting", "--path", "8", "--m", "4"]);
    assert_eq!(out.lines().count(), 3);
    assert!(out
        .lines()
        .next()
        .unwrap()
        .starts_with("s^1 = 2 (bound 2) witness: "));
}

#[test]
fn verify_json_is_byte_stable_and_parses() {
    let args = [
        "verify",
        "--trees",
        "10",
        "--m",
        "4",
        "--format",
        "json",
        "--deterministic",
    ];
    let (code, a, _) = excessive(&args);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = excessive(&[&args[..], &["--workers", "1"]].concat());
    assert_eq!(a, b);
    let reports = read_jsonl(a.as_bytes()).unwrap();
    assert!(!reports.is_empty());
    assert!(reports
        .iter()
        .all(|r| r.claim == "conjecture-trees-m4" && r.millis == 0));
}

#[test]
fn verify_writes_report_file() {
    let dir = std::env::temp_dir().join(format!("excessive-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("report.jsonl");
    let (code, out, _) = excessive(&[
        "verify",
        "--graphs",
        "5",
        "--m",
        "3",
        "--output",
        file.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let written = read_jsonl(std::io::BufReader::new(std::fs::File::open(&file).unwrap())).unwrap();
    assert_eq!(written.len(), out.lines().count());
    std::fs::remove_dir_all(dir).unwrap();
}
