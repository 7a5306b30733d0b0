use std::process::{Command, Output};

use serde_json::Value;

fn qalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalg"))
        .args(args)
        .output()
        .expect("spawn qalg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

#[test]
fn exit_codes() {
    assert_eq!(qalg(&["verify", "rtt"]).status.code(), Some(0));
    assert_eq!(
        qalg(&["verify", "--suite", "rmatrix"]).status.code(),
        Some(0)
    );
    assert_eq!(qalg(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(
        qalg(&["verify", "--suite", "oscillator", "--q", "-1.0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qalg(&["emit", "nope"]).status.code(), Some(2));
    // [2]_q vanishes at q = -1
    let pole = qalg(&["qseries", "qexp", "1", "--q", "-1"]);
    assert_eq!(pole.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&pole.stderr).contains("domain"));
}

fn without_timings(s: &str) -> Value {
    let mut v: Value = serde_json::from_str(s).expect("json");
    v.as_object_mut().unwrap().remove("timings_ms");
    v
}

#[test]
fn json_is_deterministic_apart_from_timings() {
    let a = qalg(&["verify", "--suite", "rmatrix", "--format", "json"]);
    let b = qalg(&["verify", "--suite", "rmatrix", "--format", "json"]);
    let (a, b) = (without_timings(&stdout(&a)), without_timings(&stdout(&b)));
    assert_eq!(a, b);
    assert_eq!(a["status"], "pass");
    let names: Vec<&str> = a["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 14);
}

#[test]
fn text_and_csv_shapes() {
    let text = stdout(&qalg(&["verify", "--suite", "plane"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    for l in &lines[..4] {
        let fields: Vec<&str> = l.split_whitespace().collect();
        assert_eq!(fields[2], "pass", "{l}");
        let numeric = fields[0] == "covariance-classical";
        assert_eq!(fields[1], if numeric { "numeric" } else { "exact" }, "{l}");
    }
    assert_eq!(lines[4], "suite plane pass");

    let csv = stdout(&qalg(&[
        "verify",
        "boson-ccr",
        "--format",
        "csv",
        "--d",
        "10",
    ]));
    let mut rows = csv.lines();
    assert_eq!(rows.next(), Some("name,mode,status,residual,witness"));
    let row: Vec<&str> = rows.next().unwrap().split(',').collect();
    assert_eq!(&row[..3], ["boson-ccr", "numeric", "pass"]);
    assert!(row[3].parse::<f64>().unwrap() < 1e-12);
}

#[test]
fn emit_objects() {
    let r2: Value = serde_json::from_str(&stdout(&qalg(&["emit", "R2"]))).unwrap();
    assert_eq!(r2["matrix"]["entries"][0][0], "s");
    assert_eq!(r2["matrix"]["entries"][1][2], "s - s^-3");

    let p: Value = serde_json::from_str(&stdout(&qalg(&["emit", "P"]))).unwrap();
    let flip: Vec<Vec<&str>> = p["matrix"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap())
                .collect()
        })
        .collect();
    for (i, row) in flip.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            // P|ab> = |ba> on C^2 (x) C^2
            let expected = if j == 2 * (i % 2) + i / 2 { "1" } else { "0" };
            assert_eq!(*x, expected, "P({i},{j})");
        }
    }

    let spin1 = stdout(&qalg(&["emit", "rep-spin1", "--format", "csv"]));
    let e_block: Vec<&str> = spin1
        .lines()
        .skip_while(|l| *l != "# E")
        .skip(1)
        .take(3)
        .collect();
    assert_eq!(e_block[0].split(',').nth(1), Some("r"));
}

#[test]
fn qseries_values() {
    let run = |a: &[&str]| stdout(&qalg(a)).trim().to_string();
    assert_eq!(run(&["qseries", "qintsym", "4"]), "s^6 + s^2 + s^-2 + s^-6");
    // (1)(1 + q)(1 + q + q^2) with q = s^2
    assert_eq!(run(&["qseries", "qfact", "3"]), "s^6 + 2*s^4 + 2*s^2 + 1");
    assert_eq!(run(&["qseries", "qint", "3", "--q", "2"]), "7");
    let e = run(&["qseries", "qexp", "1", "--q", "0.5", "--terms", "30"]);
    let phi = run(&[
        "qseries", "phi", "0.5", "--q", "0.5", "--terms", "30", "--a", "0",
    ]);
    let (e, phi): (f64, f64) = (e.parse().unwrap(), phi.parse().unwrap());
    assert!((e - phi).abs() < 1e-12);
    // sum over n of 1/[n]_q! at q = 1/2, summed independently
    let mut fact = 1.0;
    let mut sum = 1.0;
    for n in 1..30 {
        fact *= (1.0 - 0.5f64.powi(n)) / 0.5;
        sum += 1.0 / fact;
    }
    assert!((e - sum).abs() < 1e-12, "{e} vs {sum}");
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("qalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r3.csv");
    let o = qalg(&[
        "emit",
        "R3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&qalg(&["emit", "R3", "--format", "csv"])));
    assert_eq!(written.lines().count(), 9);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qalg::cli::run(["qalg", "verify", "delta-flip"], &mut out, &mut err);
    assert_eq!(code, qalg::cli::EXIT_PASS);
    assert!(err.is_empty());
    assert_eq!(
        String::from_utf8(out).unwrap(),
        stdout(&qalg(&["verify", "delta-flip"]))
    );
}
