use std::fs;
use std::process::{Command, Output};

use vpinterp::chebyshev::{nodes, ChebyshevKind};

fn vpinterp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vpinterp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Data rows (header lines and the column-name line removed), split on commas.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn col(text: &str, i: usize) -> Vec<f64> {
    rows(text).iter().map(|r| r[i].parse().unwrap()).collect()
}

#[test]
fn nodes_first_and_second_kind() {
    let t = col(&stdout(&vpinterp(&["nodes", "--kind", "w1", "--n", "4"])), 1);
    let pi = std::f64::consts::PI;
    for (a, b) in t.iter().zip([pi / 8.0, 3.0 * pi / 8.0, 5.0 * pi / 8.0, 7.0 * pi / 8.0]) {
        assert!((a - b).abs() < 1e-15);
    }
    let t = col(&stdout(&vpinterp(&["nodes", "--kind", "w2", "--n", "3"])), 1);
    assert_eq!(t.len(), 3);
    assert!((t[0] - pi / 4.0).abs() < 1e-15 && (t[2] - 3.0 * pi / 4.0).abs() < 1e-15);
}

#[test]
fn usage_and_numeric_exit_codes() {
    assert_eq!(vpinterp(&["nodes", "--kind", "w5", "--n", "3"]).status.code(), Some(2));
    assert_eq!(vpinterp(&["nodes", "--n", "3"]).status.code(), Some(2));
    assert_eq!(vpinterp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vpinterp(&["nodes", "--kind", "w1", "--n", "0"]).status.code(), Some(3));
    assert_eq!(
        vpinterp(&["interp", "--kind", "w1", "--n", "8", "--m", "8", "--fn", "const", "--grid", "3"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn interp_builtin_functions() {
    let text = stdout(&vpinterp(&[
        "interp", "--kind", "w1", "--n", "16", "--m", "8", "--fn", "const", "--grid", "11",
    ]));
    assert!(col(&text, 1).iter().all(|v| (v - 1.0).abs() < 1e-12));

    let text = stdout(&vpinterp(&[
        "interp", "--kind", "w3", "--n", "16", "--m", "8", "--fn", "poly:3", "--grid", "101",
    ]));
    assert!(col(&text, 3).iter().all(|e| *e <= 1e-9));

    let text = stdout(&vpinterp(&[
        "interp", "--kind", "w4", "--n", "16", "--m", "8", "--fn", "poly:2", "--grid", "21", "--deriv", "1",
    ]));
    assert!(text.contains("r=1"));
    for (z, v) in col(&text, 0).iter().zip(col(&text, 1)) {
        assert!((v - 2.0 * z).abs() <= 1e-9);
    }
}

#[test]
fn interp_from_files_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let set = nodes(ChebyshevKind::Second, 10).unwrap();
    let samples: String = set.x.iter().map(|x| format!("{:.17e}\n", x * x)).collect();
    let sample_path = dir.path().join("samples.csv");
    fs::write(&sample_path, format!("# x^2 at second-kind nodes\n{samples}")).unwrap();
    let point_path = dir.path().join("points.csv");
    fs::write(&point_path, "-0.5\n0.25\n\n1\n").unwrap();
    let out_path = dir.path().join("out.csv");
    let status = vpinterp(&[
        "interp",
        "--kind",
        "w2",
        "--n",
        "10",
        "--m",
        "3",
        "--samples",
        sample_path.to_str().unwrap(),
        "--points",
        point_path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    assert!(status.stdout.is_empty());
    let text = fs::read_to_string(&out_path).unwrap();
    let z = col(&text, 0);
    let v = col(&text, 1);
    assert_eq!(z, vec![-0.5, 0.25, 1.0]);
    for (z, v) in z.iter().zip(v) {
        assert!((v - z * z).abs() < 1e-12);
    }

    fs::write(&sample_path, "1\n2\n").unwrap();
    let short = vpinterp(&[
        "interp",
        "--kind",
        "w2",
        "--n",
        "10",
        "--m",
        "3",
        "--samples",
        sample_path.to_str().unwrap(),
        "--grid",
        "3",
    ]);
    assert_eq!(short.status.code(), Some(3));
    fs::write(&sample_path, "1\nabc\n").unwrap();
    let bad = vpinterp(&[
        "interp",
        "--kind",
        "w2",
        "--n",
        "2",
        "--m",
        "1",
        "--samples",
        sample_path.to_str().unwrap(),
        "--grid",
        "3",
    ]);
    assert_eq!(bad.status.code(), Some(3));
}

fn matrix(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn interp2d_examples() {
    let base = [
        "interp2d", "--kind1", "w1", "--kind2", "w4", "--n1", "9", "--n2", "7", "--m1", "3", "--m2", "2",
    ];
    let ones = stdout(&vpinterp(
        &[&base[..], &["--fn", "const", "--grid-x", "5", "--grid-y", "4"]].concat(),
    ));
    let w = matrix(&ones);
    assert_eq!((w.len(), w[0].len()), (5, 4));
    assert!(w.iter().flatten().all(|v| (v - 1.0).abs() < 1e-10));

    let sep = stdout(&vpinterp(
        &[&base[..], &["--fn", "sine:2*poly:1", "--grid-x", "5", "--grid-y", "4"]].concat(),
    ));
    let gx = col(
        &stdout(&vpinterp(&[
            "interp", "--kind", "w1", "--n", "9", "--m", "3", "--fn", "sine:2", "--grid", "5",
        ])),
        1,
    );
    let hy = col(
        &stdout(&vpinterp(&[
            "interp", "--kind", "w4", "--n", "7", "--m", "2", "--fn", "poly:1", "--grid", "4",
        ])),
        1,
    );
    for (i, row) in matrix(&sep).iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert!((v - gx[i] * hy[j]).abs() < 1e-9);
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let data: Vec<Vec<f64>> = (0..9)
        .map(|i| (0..7).map(|j| (i * 7 + j) as f64 * 0.1 - 2.0).collect())
        .collect();
    let text: String = data
        .iter()
        .map(|r| r.iter().map(|v| format!("{v:.17e}")).collect::<Vec<_>>().join(",") + "\n")
        .collect();
    fs::write(&path, text).unwrap();
    let back = stdout(&vpinterp(
        &[&base[..], &["--samples", path.to_str().unwrap(), "--at-nodes"]].concat(),
    ));
    for (a, b) in matrix(&back).iter().flatten().zip(data.iter().flatten()) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn analysis_commands() {
    let sweep = stdout(&vpinterp(&[
        "sweep-theta",
        "--kind",
        "w3",
        "--n",
        "40",
        "--thetas",
        "0.25,0.5,0.75",
        "--grid",
        "2000",
    ]));
    let r = rows(&sweep);
    assert_eq!(r.len(), 3);
    for row in &r {
        let (value, bound): (f64, f64) = (row[6].parse().unwrap(), row[7].parse().unwrap());
        assert!(value <= bound);
    }

    let conv = stdout(&vpinterp(&[
        "converge", "--kind", "w1", "--fn", "poly:3", "--theta", "0.5", "--n-list", "16,32",
    ]));
    assert!(col(&conv, 2).iter().all(|e| *e <= 1e-9));

    let out = vpinterp(&[
        "lebesgue", "--kind", "w2", "--n", "20", "--m", "5", "--gamma", "0", "--delta", "1", "--grid", "1000",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(rows(&String::from_utf8(out.stdout).unwrap()).len(), 1);

    let conv_bad = vpinterp(&[
        "converge", "--kind", "w2", "--fn", "runge", "--theta", "0.5", "--n-list", "16",
    ]);
    assert_eq!(conv_bad.status.code(), Some(3));

    let lemma = stdout(&vpinterp(&[
        "lemma-test",
        "--kind",
        "w4",
        "--n",
        "8",
        "--nu",
        "12",
        "--trials",
        "6",
        "--seed",
        "42",
    ]));
    assert!(lemma.contains("seed=42"));
    assert!(lemma.contains("# all_passed=true"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "lemma-test",
        "--kind",
        "w1",
        "--n",
        "16",
        "--nu",
        "20",
        "--trials",
        "8",
        "--seed",
        "7",
    ];
    assert_eq!(stdout(&vpinterp(&args)), stdout(&vpinterp(&args)));
    let args = ["lebesgue", "--kind", "w4", "--n", "30", "--m", "12", "--grid", "1500"];
    assert_eq!(stdout(&vpinterp(&args)), stdout(&vpinterp(&args)));
}
