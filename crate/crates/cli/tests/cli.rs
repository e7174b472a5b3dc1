use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_posetween"))
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/scenarios")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn simulate(scenario_path: &Path, out: &Path, extra: &[&str]) -> Output {
    bin()
        .arg("simulate")
        .arg(scenario_path)
        .arg("--out")
        .arg(out)
        .args(extra)
        .output()
        .unwrap()
}

fn trace_lines(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn fig4_writes_paired_traces() {
    let dir = tempfile::tempdir().unwrap();
    let o = simulate(&scenario("fig4.json"), dir.path(), &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let lerp = trace_lines(&dir.path().join("MotorLerpPGA_1ups.csv"));
    let slerp = trace_lines(&dir.path().join("MotorSlerp_1ups.csv"));
    assert_eq!(lerp.len(), 22);
    assert_eq!(slerp.len(), 22);
    for (a, b) in lerp.iter().zip(&slerp) {
        assert_eq!(a[0], b[0]);
        assert_eq!(a[1], b[1]);
    }
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["runs"].as_array().unwrap().len(), 2);
}

#[test]
fn static_scenario_gives_constant_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = simulate(&scenario("static.json"), dir.path(), &[]);
    assert!(o.status.success());
    let mut checked = 0;
    for entry in fs::read_dir(dir.path()).unwrap().flatten() {
        let path = entry.path();
        if path.extension().is_some_and(|e| e == "csv") {
            let rows = trace_lines(&path);
            assert!(rows.len() > 1);
            for r in &rows {
                assert_eq!(r[3..10], rows[0][3..10]);
                assert_eq!(r[10], "0.0");
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn unknown_key_exits_2_and_names_it() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(scenario("fig4.json"))
        .unwrap()
        .replace("\"render_rate_hz\"", "\"render_hz\"");
    let bad = dir.path().join("bad.json");
    fs::write(&bad, text).unwrap();
    let o = simulate(&bad, &dir.path().join("out"), &[]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("render_hz"), "{err}");
    assert!(err.contains("line"), "{err}");
}

#[test]
fn out_of_range_value_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(scenario("lossy_bent_path.json"))
        .unwrap()
        .replace("\"drop_prob\": 0.15", "\"drop_prob\": 1.5");
    let bad = dir.path().join("bad.json");
    fs::write(&bad, text).unwrap();
    let o = simulate(&bad, &dir.path().join("out"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("channel.drop_prob"));
}

#[test]
fn full_loss_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = fs::read_to_string(scenario("lossy_bent_path.json"))
        .unwrap()
        .replace("\"drop_prob\": 0.15", "\"drop_prob\": 1.0");
    let bad = dir.path().join("dead.json");
    fs::write(&bad, text).unwrap();
    let o = simulate(&bad, &dir.path().join("out"), &[]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn traces_are_deterministic() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let path = scenario("lossy_bent_path.json");
    assert!(simulate(&path, a.path(), &["--packets"]).status.success());
    assert!(simulate(&path, b.path(), &["--packets"]).status.success());
    let mut n = 0;
    for entry in fs::read_dir(a.path()).unwrap().flatten() {
        let name = entry.file_name();
        if name == "summary.json" {
            continue;
        }
        assert_eq!(fs::read(entry.path()).unwrap(), fs::read(b.path().join(&name)).unwrap());
        n += 1;
    }
    assert!(n > 3);
}

#[test]
fn seed_changes_the_losses() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let path = scenario("lossy_bent_path.json");
    assert!(simulate(&path, a.path(), &["--packets", "--seed", "1"]).status.success());
    assert!(simulate(&path, b.path(), &["--packets", "--seed", "2"]).status.success());
    let dumps = |d: &Path| {
        ["5", "10", "20"].map(|r| fs::read(d.join(format!("packets_{r}ups.bin"))).unwrap())
    };
    assert_ne!(dumps(a.path()), dumps(b.path()));
}

#[test]
fn packet_dump_has_fixed_layout() {
    let dir = tempfile::tempdir().unwrap();
    assert!(simulate(&scenario("fig4.json"), dir.path(), &["--packets"]).status.success());
    let bytes = fs::read(dir.path().join("packets_1ups.bin")).unwrap();
    // two packets: u32 seq, f64 time, 7 x f64
    assert_eq!(bytes.len(), 2 * 68);
    assert_eq!(&bytes[0..4], &0u32.to_le_bytes());
    assert_eq!(&bytes[68..72], &1u32.to_le_bytes());
    assert_eq!(&bytes[72..80], &1.0f64.to_le_bytes());
    assert_eq!(&bytes[80..88], &1.0f64.to_le_bytes());
}

#[test]
fn engine_filter_limits_traces() {
    let dir = tempfile::tempdir().unwrap();
    let o = simulate(&scenario("fig4.json"), dir.path(), &["--filter", "slerp"]);
    assert!(o.status.success());
    assert!(dir.path().join("MotorSlerp_1ups.csv").exists());
    assert!(!dir.path().join("MotorLerpPGA_1ups.csv").exists());
    let o = simulate(&scenario("fig4.json"), dir.path(), &["--filter", "cubic"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table1_prints_the_bandwidth_column() {
    let o = run(&["table1", "--calls", "2000"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for row in ["30 vs 20 \u{2192} 33%", "20 vs 10 \u{2192} 50%", "15 vs 7 \u{2192} 53%", "12 vs 5 \u{2192} 58%"] {
        assert!(text.contains(row), "{text}");
    }
    let o = run(&["table1", "--calls", "2000", "--filter", "poor"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn selftest_passes_and_filters() {
    let o = run(&["selftest"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("6 of 6 suites passed"));
    let o = run(&["selftest", "--filter", "dq"]);
    let text = stdout(&o);
    assert!(text.contains("roundtrip-dq") && text.contains("isomorphism-dq-motor-slerp"));
    assert!(!text.contains("roundtrip-pga"));
}

#[test]
fn selftest_catches_injected_sign_flip() {
    let o = run(&["selftest", "--mutate", "pga-sign"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL roundtrip-pga"), "{text}");
    assert!(text.contains("seed 1"));
}

#[test]
fn bench_reports_every_engine() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.txt");
    let o = bin()
        .args(["bench", "--calls", "2000", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = fs::read_to_string(out).unwrap();
    assert_eq!(text, stdout(&o));
    for e in ["Baseline", "DualQuat", "MotorLerpPGA", "MotorLerpCGA", "MotorSlerp", "DualQuat/Baseline"] {
        assert!(text.contains(e), "{text}");
    }
}

fn bench_ns(calls: &str) -> Vec<f64> {
    let o = run(&["bench", "--calls", calls]);
    stdout(&o)
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with("DualQuat/"))
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect()
}

/// Wall-clock stability on an idle machine; run with `--ignored`.
#[test]
#[ignore]
fn bench_is_stable_between_runs() {
    let (a, b) = (bench_ns("1000000"), bench_ns("1000000"));
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() / x.min(*y) < 0.2, "{a:?} vs {b:?}");
    }
}
