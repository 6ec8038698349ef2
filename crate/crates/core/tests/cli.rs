use std::process::{Command, Output};

fn hyperball(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperball"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_default_reproduces_published_rows() {
    let out = hyperball(&["table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let expected = "\
p,h,vol_orthoscheme,vol_hyperball_piece,density
7,0.78871,0.08856,0.07284,0.82251
8,0.56419,0.10721,0.08220,0.76673
9,0.45320,0.11825,0.08474,0.71663
20,0.16397,0.14636,0.06064,0.41431
50,0.06325,0.15167,0.02918,0.19240
100,0.03147,0.15241,0.01549,0.10165
";
    assert_eq!(text, expected);
}

#[test]
fn table_with_list_and_range() {
    let out = hyperball(&["table", "--p", "100,7"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "100,0.03147,0.15241,0.01549,0.10165");
    assert_eq!(lines[2], "7,0.78871,0.08856,0.07284,0.82251");

    let out = hyperball(&["table", "--p-range", "7:9:0.5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 6);

    let out = hyperball(&["table", "--p", ""]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "p,h,vol_orthoscheme,vol_hyperball_piece,density\n");
}

#[test]
fn invalid_p_exits_2_without_output() {
    let out = hyperball(&["table", "--p", "7,6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains('6'));

    assert_eq!(hyperball(&["table", "--p", "seven"]).status.code(), Some(2));
    assert_eq!(hyperball(&["volume", "--p", "5"]).status.code(), Some(2));
    assert_eq!(hyperball(&["--precision", "0", "optimize"]).status.code(), Some(2));
    assert_eq!(hyperball(&["--tol", "-1", "optimize"]).status.code(), Some(2));
    assert_eq!(hyperball(&["lob", "nan"]).status.code(), Some(2));
    assert_eq!(hyperball(&["curve", "--from", "7", "--to", "6.5"]).status.code(), Some(2));
}

#[test]
fn curve_is_well_formed_and_peaks_near_optimum() {
    let out = hyperball(&["curve", "--from", "6.01", "--to", "12", "--samples", "500"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,density"));
    let rows: Vec<(f64, f64)> = lines
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            assert_eq!(cols.len(), 2, "row {l:?}");
            (cols[0].parse().unwrap(), cols[1].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 500);
    assert_eq!(rows[0].0, 6.01);
    assert_eq!(rows[499].0, 12.0);
    let step = (12.0 - 6.01) / 499.0;
    // rounding to 5 decimals can tie neighbours near the flat top
    let top = rows.iter().map(|r| r.1).fold(f64::MIN, f64::max);
    let peak: Vec<f64> = rows.iter().filter(|r| r.1 == top).map(|r| r.0).collect();
    assert!(peak.iter().any(|p| (p - 6.13499).abs() <= step), "peak at {peak:?}");

    let out = hyperball(&["curve", "--from", "7", "--to", "7.0001", "--samples", "2"]);
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        let d: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!((d - 0.82251).abs() < 1e-4);
    }
}

#[test]
fn optimize_report_formats() {
    let out = hyperball(&["optimize"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // 6.1349953 rounds to 6.13500 at five decimals
    assert!(text.starts_with("p_opt=6.13500 delta_opt=0.86338 iterations="), "{text}");

    let out = hyperball(&["optimize", "--precision", "3"]);
    assert!(stdout(&out).starts_with("p_opt=6.135 delta_opt=0.863 "));

    let out = hyperball(&["--tol", "1e-2", "optimize"]);
    let text = stdout(&out);
    let p: f64 = text.split_whitespace().next().unwrap()["p_opt=".len()..].parse().unwrap();
    assert!((p - 6.13499).abs() <= 1e-2);
}

#[test]
fn lob_and_volume() {
    assert_eq!(stdout(&hyperball(&["lob", "0"])), "0.00000\n");
    assert_eq!(stdout(&hyperball(&["lob", "1.5707963267948966"])), "0.00000\n");
    assert_eq!(stdout(&hyperball(&["lob", "0.5235987755982988"])), "0.50747\n");
    assert_eq!(stdout(&hyperball(&["lob", "-0.5235987755982988"])), "-0.50747\n");

    let text = stdout(&hyperball(&["volume", "--p", "7"]));
    assert!(text.contains("vol_tetra=2.12548\n"), "{text}");
    assert!(text.contains("surface_area=14.36157\n"), "{text}");
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let a = hyperball(&["curve", "--samples", "50"]);
    let b = hyperball(&["curve", "--samples", "50"]);
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = hyperball(&["table", "--p", "7", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "p,h,vol_orthoscheme,vol_hyperball_piece,density\n7,0.78871,0.08856,0.07284,0.82251\n");
}
