use std::path::PathBuf;
use std::process::{Command, Output};

use binpade::arith::{int, rat};
use binpade::cli::{GoldenCase, VerifyReport, WConstruct, WConstructNth, WDelta, WTheta, CONFIG_ENV};
use binpade::wire::{self, WCertificate, WHunt, WRat};
use num_rational::BigRational;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_binpade"));
    c.env_remove(CONFIG_ENV);
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn golden<T: for<'de> serde::Deserialize<'de>>(name: &str) -> T {
    let text = std::fs::read_to_string(golden_dir().join(name)).unwrap();
    let case: GoldenCase = wire::from_json(&text).unwrap();
    serde_json::from_value(case.output).unwrap()
}

fn r(v: &[WRat]) -> Vec<BigRational> {
    v.iter().map(|x| x.0.clone()).collect()
}

#[test]
fn golden_values_are_the_known_ones() {
    let c: WConstruct = golden("construct_half.json");
    assert_eq!(r(&c.system.a.concat()), vec![int(2), int(-2)]);
    assert_eq!(r(&c.remainder), vec![int(0), int(1), rat(1, 4), rat(1, 8)]);

    let s: WConstructNth = golden("construct_n3_m2.json");
    assert_eq!(r(&s.triple.s[1]), vec![rat(9, 4), rat(3, 2), rat(3, 4)]);
    assert_eq!(r(&s.system.a[1][1]), vec![int(-3), rat(3, 4)]);

    let d: WDelta = golden("delta_third.json");
    assert_eq!(d.delta.0, rat(9, 8));

    let t: WTheta = golden("theta_cube2.json");
    assert_eq!((t.diagnostic_rho1.u.0, t.diagnostic_rho1.h0), (rat(-9, 2875), 1));
    assert_eq!(t.selected.rho, 2);

    let cert: WCertificate = golden("certify_cube2.json");
    assert_eq!(cert.mu.0, int(3));
    assert_eq!(cert.constants.c2.0, int(81));
    assert_eq!(r(&cert.thresholds.q2min_exponents), vec![int(4), int(20)]);

    let h: WHunt = golden("hunt_cube2.json");
    let qs: Vec<String> = h.convergents.iter().map(|c| serde_json::to_string(&c.q).unwrap()).collect();
    assert_eq!(qs[..4], ["1", "3", "4", "23"]);
}

#[test]
fn verify_replays_the_golden_corpus() {
    let o = run(&["verify", "--max-n", "3", "--max-rho", "1", "--random", "2", "--golden", golden_dir().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: VerifyReport = wire::from_json(&stdout(&o)).unwrap();
    let golden: Vec<_> = report.checks.iter().filter(|c| c.criterion == 11).collect();
    assert_eq!(golden.len(), 6);
    assert!(golden.iter().all(|c| c.pass));
}

#[test]
fn config_from_environment_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("binpade.toml");
    std::fs::write(&cfg, "precision = 128\nformat = \"text\"\n").unwrap();
    let out = dir.path().join("report.txt");
    let o = bin()
        .env(CONFIG_ENV, &cfg)
        .args(["delta", "--omega", "0,1/2", "--rho", "1,1", "--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("delta = 4/3"));

    std::fs::write(&cfg, "precision = 128\ncolour = true\n").unwrap();
    let o = bin().env(CONFIG_ENV, &cfg).args(["delta", "--omega", "0,1/2", "--rho", "1,1"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));

    std::fs::write(&cfg, "precision = 10000\n").unwrap();
    let o = bin().args(["--config", cfg.to_str().unwrap(), "delta", "--omega", "0,1/2", "--rho", "1,1"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let args = ["theta", "--a", "3", "--n", "3", "--p1", "13", "--q1", "9", "--p2", "36", "--q2", "25"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_format_for_every_subcommand() {
    for args in [
        vec!["construct", "--n", "4", "--m", "3", "--rho", "1"],
        vec!["delta", "--omega", "0,1/3", "--rho", "2,1"],
        vec!["theta", "--a", "2", "--n", "3", "--p1", "5", "--q1", "4", "--p2", "29", "--q2", "23"],
        vec!["certify", "--a", "2", "--n", "5", "--m", "3", "--eps", "1/3"],
        vec!["hunt", "--a", "7", "--n", "3", "--depth", "10"],
        vec!["verify", "--max-n", "3", "--max-rho", "1", "--random", "0"],
    ] {
        let o = bin().arg("--format").arg("text").args(&args).output().unwrap();
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["construct", "--omega", "0,1/2", "--rho", "1"],
        vec!["construct", "--omega", "0,x", "--rho", "1,1"],
        vec!["theta", "--a", "2", "--n", "3", "--p1", "5", "--q1", "1", "--p2", "29", "--q2", "23"],
        vec!["hunt", "--a", "2", "--n", "3", "--depth", "201"],
        vec!["certify", "--a", "4", "--b", "2", "--n", "3"],
        vec!["verify", "--max-n", "2"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}
