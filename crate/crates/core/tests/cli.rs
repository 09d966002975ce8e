use std::path::PathBuf;
use std::process::{Command, Output};

fn damu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_damu"))
        .args(args)
        .env_remove("DAMU_DATA_DIR")
        .output()
        .expect("spawn damu")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn example(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn column(header: &str, row: &str, name: &str) -> f64 {
    let i = header.split(',').position(|h| h == name).unwrap();
    row.split(',').nth(i).unwrap().parse().unwrap()
}

#[test]
fn turn_radius_prints_both_units() {
    let o = damu(&["aero", "turn-radius", "--speed-mps", "20", "--bank-deg", "30"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "232.49 ft / 70.86 m");
}

#[test]
fn zero_bank_is_an_input_error() {
    let o = damu(&["aero", "turn-radius", "--speed-mps", "20", "--bank-deg", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bank"));
}

#[test]
fn lift_at_five_km() {
    let o = damu(&["aero", "lift", "--cl", "1.165", "--alt-m", "5000", "--speed-mps", "50", "--area-m2", "11"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("lift:")).unwrap();
    let n: f64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((n - 11_800.0).abs() / 11_800.0 < 0.01, "{line}");
    assert!(line.contains("lbf"));
}

#[test]
fn minspeed_rejects_zero_wing() {
    let o = damu(&["aero", "minspeed", "--cl", "1.2", "--alt-m", "1000", "--area-m2", "0", "--mass-kg", "50"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fog_row_at_28_ghz() {
    let o = damu(&[
        "atten", "--freq-min", "28", "--freq-max", "40", "--step", "12", "--weather", "advection-fog", "--path",
        "0,2000",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "freq_ghz,gaseous_db,rain_db,cloud_db,fog_db,total_db");
    assert_eq!(lines.len(), 3);
    let fog28 = column(lines[0], lines[1], "fog_db");
    let fog40 = column(lines[0], lines[2], "fog_db");
    assert!((fog28 - 0.68).abs() / 0.68 < 0.15, "{fog28}");
    assert!((fog40 - 1.28).abs() / 1.28 < 0.15, "{fog40}");
}

#[test]
fn per_km_mode_near_oxygen_peak() {
    let o = damu(&[
        "atten", "--freq-min", "61", "--freq-max", "61", "--step", "1", "--weather", "clear", "--path", "0,1000",
        "--per-km",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    let g = column(lines[0], lines[1], "gaseous_db_per_km");
    assert!((g - 15.0).abs() / 15.0 < 0.2, "{g}");
}

#[test]
fn atten_writes_file_and_components_sum() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let o = damu(&[
        "atten", "--freq-min", "10", "--freq-max", "100", "--step", "5", "--weather", "rain-heavy", "--path",
        "0,3000", "--elevation-deg", "30", "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 19);
    for row in rows {
        let parts: f64 = ["gaseous_db", "rain_db", "cloud_db", "fog_db"]
            .iter()
            .map(|c| column(header, row, c))
            .sum();
        assert!((parts - column(header, row, "total_db")).abs() < 5e-4, "{row}");
    }
}

#[test]
fn atten_usage_errors_exit_2() {
    let base = ["atten", "--freq-min", "28", "--freq-max", "40", "--path", "0,2000"];
    for extra in [
        &["--step", "0"][..],
        &["--step", "-1"],
        &["--step", "1", "--freq-min", "0.5"],
        &["--step", "1", "--freq-max", "120"],
        &["--step", "1", "--weather", "no-such-preset"],
        &["--step", "1", "--elevation-deg", "0"],
        &["--step", "1", "--elevation-deg", "2"],
    ] {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        let o = damu(&args);
        assert_eq!(o.status.code(), Some(2), "{extra:?}: {}", stderr(&o));
    }
    let o = damu(&["atten", "--freq-min", "28", "--freq-max", "40", "--step", "1", "--path", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_weather_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    std::fs::write(&file, "{\n  \"rain_rate_mm_h\": 5,\n  \"fog_lwd_g_m3\": oops\n}\n").unwrap();
    let o = damu(&[
        "atten", "--freq-min", "28", "--freq-max", "40", "--step", "1", "--path", "0,2000", "--weather",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("w.json:3:"), "{}", stderr(&o));
}

#[test]
fn scenario_rerun_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let file = example("fig4_damu.json");
    for out in [&a, &b] {
        let o = damu(&["scenario", "run", &file, "--out", out.to_str().unwrap(), "--strict"]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let (a, b) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn scenario_reports_balloon_deviation() {
    let o = damu(&["scenario", "run", &example("fig4_damu.json")]);
    assert!(o.status.success());
    let err = stderr(&o);
    let line = err
        .lines()
        .find(|l| l.starts_with("link balloon-1/fw-1:"))
        .unwrap();
    let dev: f64 = line.split_whitespace().nth(5).unwrap().parse().unwrap();
    assert!((dev - 0.42).abs() <= 0.03, "{line}");
    let out = stdout(&o);
    assert!(out.starts_with(
        "t_s,link_id,distance_m,elevation_deg,fspl_dB,gaseous_dB,rain_dB,cloud_dB,fog_dB,rx_power_dBm,margin_dB,viable\n"
    ));
    // 240 steps, 3 links, plus header
    assert_eq!(out.lines().count(), 721);
}

#[test]
fn strict_validation_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.json");
    let text = std::fs::read_to_string(example("fig4_damu.json"))
        .unwrap()
        .replace("20001", "15000");
    std::fs::write(&file, text).unwrap();
    let lax = damu(&["scenario", "run", file.to_str().unwrap()]);
    assert!(lax.status.success());
    assert!(stderr(&lax).contains("violation: node `balloon-1`"));
    let strict = damu(&["scenario", "run", file.to_str().unwrap(), "--strict"]);
    assert_eq!(strict.status.code(), Some(3));
    assert!(strict.stdout.is_empty());
}

#[test]
fn missing_scenario_exits_2() {
    let o = damu(&["scenario", "run", "/nonexistent/scenario.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn data_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    for f in ["p676_oxygen_lines.csv", "p676_water_lines.csv", "p838_rain_coeffs.csv"] {
        std::fs::copy(data.join(f), dir.path().join(f)).unwrap();
    }
    let args = [
        "atten", "--freq-min", "40", "--freq-max", "40", "--step", "1", "--weather", "rain-violent", "--path",
        "0,1700",
    ];
    let builtin = damu(&args);
    let run = |dir: &std::path::Path| {
        Command::new(env!("CARGO_BIN_EXE_damu"))
            .args(args)
            .env("DAMU_DATA_DIR", dir)
            .output()
            .unwrap()
    };
    let copied = run(dir.path());
    assert!(copied.status.success());
    assert_eq!(builtin.stdout, copied.stdout);

    // a corrupt rain table must be rejected with a line number
    std::fs::write(
        dir.path().join("p838_rain_coeffs.csv"),
        "f_ghz,k_h,alpha_h,k_v,alpha_v\n1,0.1,1,0.1,1\n2,x,1,0.1,1\n",
    )
    .unwrap();
    let broken = run(dir.path());
    assert_eq!(broken.status.code(), Some(2));
    assert!(stderr(&broken).contains(":3:"), "{}", stderr(&broken));

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(run(empty.path()).status.code(), Some(2));
}

#[test]
fn laser_and_isa_subcommands() {
    let o = damu(&["laser", "--power-w", "100", "--distance-m", "5000", "--efficiency", "0.5"]);
    assert!(o.status.success());
    let v: f64 = stdout(&o).split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((v - 100.0 * 10f64.powf(-0.1) * 0.5).abs() < 1e-4);

    let o = damu(&["isa", "--alt-m", "11000"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("temperature: 216.65 K"));
    assert_eq!(damu(&["isa", "--alt-m", "40000"]).status.code(), Some(2));
}
