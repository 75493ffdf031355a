use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypasym"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("missing {key} in\n{text}"))
}

const HEADER: &str =
    "k,x,t,M,variant,oracle,approx,rel_error,abs_error,paper_value,match_ratio,status";

#[test]
fn table1_csv_is_deterministic() {
    let a = run(&["table", "--preset", "table1"]);
    let b = run(&["table", "--preset", "table1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 25);
    assert_eq!(lines[0], HEADER);
    let row = lines
        .iter()
        .find(|l| l.starts_with("200,0.75,0.5,0,"))
        .expect("cell (200, 0.75, 0.5, 0)");
    let cols: Vec<&str> = row.split(',').collect();
    assert_eq!(cols.len(), 12);
    let abs: f64 = cols[8].parse().unwrap();
    assert!((abs / 1.357e-1 - 1.0).abs() < 0.01, "{abs}");
    assert_eq!(cols[11], "ok");
}

#[test]
fn table2_markdown_has_value_and_blank_rows() {
    let o = run(&["table", "--preset", "table2", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("3.455e-7"), "{text}");
    assert!(text
        .lines()
        .any(|l| l.starts_with("| 1 |") && l.contains("n/a")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("| 2 |") && l.contains("n/a")));
}

#[test]
fn custom_single_cell() {
    let o = run(&["table", "--preset", "custom", "--cells", "100,0.5,0.75,0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, [HEADER, lines[1]]);
    assert!(lines[1].starts_with("100,0.5,0.75,0,expanded_am,"));
}

#[test]
fn custom_partial_failure_keeps_good_rows() {
    let o = run(&[
        "table",
        "--preset",
        "custom",
        "--cells",
        "100,0.5,0.75,0;100,1.5,0.75,0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].ends_with(",ok"));
    assert!(lines[2].contains("domain error"));
}

#[test]
fn custom_without_cells_is_rejected() {
    assert_eq!(run(&["table", "--preset", "custom"]).status.code(), Some(2));
}

#[test]
fn preset_with_loose_tolerance_is_rejected() {
    let o = run(&["table", "--preset", "table1", "--oracle-tol", "1e-10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_asym_example() {
    let o = run(&[
        "eval", "--k", "100", "--x", "0.5", "--t", "0.75", "--method", "asym", "--order", "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let abs: f64 = field(&text, "abs_error").parse().unwrap();
    assert!((abs / 5.723e-3 - 1.0).abs() < 1e-3, "{abs}");
    assert_eq!(field(&text, "rerouted"), "false");
}

#[test]
fn eval_oracle_at_zero_argument() {
    let o = run(&[
        "eval", "--k", "100", "--x", "0", "--t", "0.75", "--method", "oracle",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "value").parse::<f64>().unwrap(), 1.0);
    assert_eq!(field(&text, "terms_used"), "1");
}

#[test]
fn eval_uniform_reports_coalescence() {
    let o = run(&[
        "eval",
        "--k",
        "150",
        "--x",
        "0.75",
        "--t",
        "0.333333",
        "--method",
        "uniform_f0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "coalesced"), "true");
    assert_eq!(field(&text, "target"), "F_0");
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 6] = [
        (
            &[
                "eval", "--k", "100", "--x", "1.5", "--t", "0.75", "--method", "asym",
            ],
            2,
        ),
        (
            &[
                "eval",
                "--k",
                "50",
                "--x",
                "1",
                "--t",
                "1",
                "--method",
                "uniform_f0",
            ],
            2,
        ),
        (
            &[
                "eval",
                "--k",
                "300",
                "--x",
                "0.75",
                "--t",
                "0.5",
                "--method",
                "oracle",
                "--max-terms",
                "20",
            ],
            3,
        ),
        (
            &[
                "eval", "--k", "2000", "--x", "1", "--t", "0", "--method", "oracle",
            ],
            3,
        ),
        (
            &[
                "eval", "--k", "100", "--x", "0.5", "--t", "0.75", "--method", "bogus",
            ],
            2,
        ),
        (
            &[
                "sweep", "--k-min", "5", "--k-max", "800", "--steps", "4", "--x", "0.5", "--t",
                "0.75",
            ],
            2,
        ),
    ];
    for (args, code) in cases {
        let o = run(args);
        assert_eq!(
            o.status.code(),
            Some(code),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(o.stdout.is_empty() || code == 0, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("hypasym-out-{}.csv", std::process::id()));
    let o = run(&[
        "table",
        "--preset",
        "table2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().next(), Some(HEADER));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn sweep_csv_schema() {
    let o = run(&[
        "sweep", "--k-min", "100", "--k-max", "800", "--steps", "5", "--x", "0.5", "--t", "0.75",
        "--order", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,rel_error,local_slope");
    assert_eq!(lines.len(), 6);
    let stderr = String::from_utf8(o.stderr).unwrap();
    let slope: f64 = field(&stderr, "fitted_slope").parse().unwrap();
    assert!((slope + 2.0).abs() < 0.2, "{slope}");
}
