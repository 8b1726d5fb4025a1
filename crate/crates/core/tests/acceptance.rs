//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::Command;
use std::time::Instant;

use binpade::arith::{int, rat};
use binpade::binomial::build_system;
use binpade::bounds::{self, eval_s_interval, eval_t_interval, power_dominates};
use binpade::certify::{self, cf_hunt, gap_certificate, theta_pair, PairInput, RhoMode, Target};
use binpade::cli::{verify, GridLimits, VerifyReport};
use binpade::interval::{Interval, DEFAULT_PREC};
use binpade::pade::{compare_delta, ExponentSystem};
use binpade::wire::{self, WCertificate, WHunt};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Suite {
    failures: usize,
}

impl Suite {
    fn report(&mut self, id: u8, title: &str, pass: bool, detail: String) {
        if !pass {
            self.failures += 1;
        }
        println!("{} criterion {id:>2}: {title} ({detail})", if pass { "PASS" } else { "FAIL" });
    }
}

fn targets(eps: BigRational) -> Vec<Target> {
    [(2, 3), (3, 3), (7, 3), (2, 5)]
        .into_iter()
        .map(|(a, n)| Target::new(a, 1, n, certify::best_m(n).0, eps.clone()).unwrap())
        .collect()
}

fn grid_report() -> (VerifyReport, f64) {
    let start = Instant::now();
    let r = verify::run_verify(&GridLimits::default()).unwrap();
    (r, start.elapsed().as_secs_f64())
}

fn criteria_1_to_4(s: &mut Suite, r: &VerifyReport, secs: f64) {
    let count = |c: u8| r.checks.iter().filter(|k| k.criterion == c).count();
    s.report(
        1,
        "residue, linear-solve and log-series constructions agree exactly",
        r.criterion_passed(1) && secs < 60.0,
        format!("{} systems, {secs:.1} s", count(1)),
    );
    s.report(
        2,
        "remainder vanishes to order sigma-1 with the prescribed leading coefficient",
        r.criterion_passed(2),
        format!("{} systems, zero tolerance", count(2)),
    );
    let sys = ExponentSystem::new(vec![int(0), rat(1, 2)], vec![1, 1]).unwrap();
    let c = compare_delta(&sys).unwrap();
    s.report(
        3,
        "det = delta z^sigma with delta != 0",
        r.criterion_passed(3) && c.determinant == rat(4, 3),
        format!(
            "{} systems; omega=(0,1/2): delta = {}, closed-form value {} (ratio {})",
            count(3),
            c.determinant,
            c.footnote,
            c.ratio
        ),
    );
    s.report(
        4,
        "U = (x-1)^(m rho) S + (y-x) T and (x-1)^(m rho) | R",
        r.criterion_passed(4),
        format!("{} (n, m, rho) systems, all rows", count(4)),
    );
}

fn criterion_5(s: &mut Suite) {
    let t = Target::new(2, 1, 3, 2, rat(1, 2)).unwrap();
    let pair = theta_pair(&PairInput::new(5, 4, 29, 23), &t, RhoMode::Fixed(1), DEFAULT_PREC).unwrap();
    let sys = build_system(3, 2, 1).unwrap();
    let direct = sys.frak_u_eval(0, &rat(128, 125), &rat(116, 115)).unwrap();
    let want = rat(-9, 2875);
    s.report(
        5,
        "worked value U_1 = -9/2875",
        pair.u == want && direct == want && pair.h0 == 0,
        format!("theta path {}, direct {}", pair.u, direct),
    );
}

fn criterion_6(s: &mut Suite) {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for (n, m) in [(3, 2), (3, 3), (4, 2)] {
        let table = bounds::maier_growth_table(n, m, 12).unwrap();
        ok &= table.all_bounded();
        println!("      maier (n={n}, m={m}) base 3^((m-1)(n+m-1)) = {}", table.base);
        for row in &table.rows {
            println!(
                "      rho={:>2} lcm^(1/rho)={:>12.4} divides lcm(1..N)^(m-1): {} below base^rho: {}",
                row.rho, row.growth, row.divides_bound, row.below_base_power
            );
        }
        detail.push(format!("({n},{m}): sup {:.3} <= {}", table.empirical_sup, table.base));
    }
    let secs = start.elapsed().as_secs_f64();
    s.report(
        6,
        "denominator lcm^(1/rho) bounded by the reported constant",
        ok && secs < 120.0,
        format!("{}; {secs:.1} s", detail.join(", ")),
    );
}

/// A rational strictly inside the band of `x`: `(2/3)^{1/n} <= x <= (3/2)^{1/n}`.
fn band_point(rng: &mut ChaCha8Rng, lo: &BigRational, hi: &BigRational) -> BigRational {
    let t = rat(rng.gen_range(0..=1000), 1000);
    lo + (hi - lo) * t
}

fn criterion_7(s: &mut Suite) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let prec = DEFAULT_PREC;
    let mut checked = 0usize;
    let mut ok = true;
    for (n, m) in [(3u32, 2u32), (4, 2)] {
        let c2 = bounds::derive_c2(n, m).unwrap().value;
        let c3 = bounds::derive_c3(n, m).unwrap().value;
        let lo = binpade::interval::nth_root_rational(&rat(2, 3), n, 128).hi().to_rational();
        let hi = binpade::interval::nth_root_rational(&rat(3, 2), n, 128).lo().to_rational();
        let points: Vec<(BigRational, BigRational)> =
            (0..100).map(|_| (band_point(&mut rng, &lo, &hi), band_point(&mut rng, &lo, &hi))).collect();
        for rho in 1..=10 {
            let sys = build_system(n, m, rho).unwrap();
            for (x, y) in &points {
                let xi = Interval::from_rational(x, prec);
                let yi = Interval::from_rational(y, prec);
                for h in 0..m as usize {
                    let sv = eval_s_interval(&sys, h, &xi).unwrap();
                    let tv = eval_t_interval(&sys, h, &xi, &yi).unwrap();
                    ok &= power_dominates(&c2, rho, &sv) && power_dominates(&c3, rho, &tv);
                    checked += 1;
                }
            }
        }
    }
    s.report(
        7,
        "|S_h| <= c2^rho and |T_h| <= c3^rho on the band",
        ok,
        format!("{checked} interval evaluations, (n,m) in {{(3,2),(4,2)}}, rho <= 10"),
    );
}

fn criterion_8(s: &mut Suite) {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for t in targets(rat(1, 2)) {
        match certify::convergent_theta_pairs(&t, 20, DEFAULT_PREC) {
            Ok(ps) => {
                pairs += ps.len();
                for p in ps.iter().filter(|p| !(p.sum_exceeds_two() && p.max_exceeds_one())) {
                    bad.push(format!("{}/{}", p.input.p1, p.input.q1));
                }
            }
            Err(e) => bad.push(format!("({})^(1/{}): {e}", t.a, t.n)),
        }
    }
    s.report(
        8,
        "theta1 + theta2 > 2 and max > 1 on consecutive band convergents",
        bad.is_empty() && pairs > 0,
        format!("{pairs} pairs over 4 targets, depth 20, failures {bad:?}"),
    );
}

fn criterion_9(s: &mut Suite) {
    let mut violations = 0;
    let mut rows = 0;
    let mut deterministic = true;
    for eps in [rat(1, 4), rat(1, 2)] {
        for t in targets(eps) {
            let r = cf_hunt(&t, 30, DEFAULT_PREC).unwrap();
            rows += r.rows.len();
            violations += r.violations.len() + r.pair_violations.len() + r.rows.iter().filter(|x| !x.legendre).count();
            let a = wire::to_json(&WCertificate::from(&gap_certificate(&t).unwrap()));
            let b = wire::to_json(&WCertificate::from(&gap_certificate(&t).unwrap()));
            let h2 = wire::to_json(&WHunt::from(&cf_hunt(&t, 30, DEFAULT_PREC).unwrap()));
            deterministic &= a == b && h2 == wire::to_json(&WHunt::from(&r));
        }
    }
    s.report(
        9,
        "no approximations beyond the certificate thresholds; byte-deterministic certificates",
        violations == 0 && deterministic,
        format!("{rows} convergents, {violations} violations, deterministic: {deterministic}"),
    );
}

fn criterion_10(s: &mut Suite) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut probes = 0;
    let mut all_zero = 0;
    for n in 3..=5u32 {
        for m in 2..=n.min(4) {
            for rho in 1..=4 {
                let sys = build_system(n, m, rho).unwrap();
                let mut done = 0;
                while done < 500 {
                    let w = rat(rng.gen_range(-40..=40), rng.gen_range(1..=40));
                    let y = rat(rng.gen_range(-40..=40), rng.gen_range(1..=40));
                    if w == int(1) {
                        continue;
                    }
                    if let Err(binpade::Error::AllZero { .. }) = sys.select_h(&w, &y) {
                        all_zero += 1;
                    }
                    done += 1;
                    probes += 1;
                }
            }
        }
    }
    s.report(10, "select_h never returns ALL_ZERO", all_zero == 0, format!("{probes} probes, {all_zero} ALL_ZERO"));
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_binpade"))
        .args(args)
        .env_remove(binpade::cli::CONFIG_ENV)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn round_trips<T: serde::Serialize + for<'de> serde::Deserialize<'de>>(json: &str) -> bool {
    wire::from_json::<T>(json).map(|v| wire::to_json(&v) == json).unwrap_or(false)
}

fn criterion_11(s: &mut Suite) {
    use binpade::cli::{WConstruct, WConstructNth, WDelta, WTheta};
    let mut notes = Vec::new();
    let mut ok = true;
    let mut expect = |name: &str, cond: bool| {
        if !cond {
            notes.push(name.to_string());
        }
        ok &= cond;
    };

    let (c, j) = run_cli(&["construct", "--omega", "0,1/2", "--rho", "1,1", "--len", "4"]);
    expect("construct omega", c == 0 && round_trips::<WConstruct>(&j));
    let (c, j) = run_cli(&["construct", "--n", "3", "--m", "2", "--rho", "1"]);
    expect("construct n m", c == 0 && round_trips::<WConstructNth>(&j));
    let (c, _) = run_cli(&["construct", "--omega", "0,1", "--rho", "1,1"]);
    expect("construct integer difference exits 2", c == 2);
    let (c, j) = run_cli(&["delta", "--omega", "0,1/3", "--rho", "1,1"]);
    expect("delta", c == 0 && round_trips::<WDelta>(&j));
    let (c, j) = run_cli(&["theta", "--a", "2", "--b", "1", "--n", "3", "--m", "2", "--p1", "5", "--q1", "4", "--p2", "29", "--q2", "23"]);
    let theta_ok = wire::from_json::<WTheta>(&j)
        .map(|t| t.selected.rho == 2 && t.diagnostic_rho1.u.0 == rat(-9, 2875))
        .unwrap_or(false);
    expect("theta", c == 0 && round_trips::<WTheta>(&j) && theta_ok);
    let (c, _) = run_cli(&["theta", "--a", "2", "--n", "3", "--p1", "1", "--q1", "1", "--p2", "5", "--q2", "4"]);
    expect("theta outside band exits 2", c == 2);
    let (c, j) = run_cli(&["certify", "--a", "2", "--b", "1", "--n", "3", "--m", "2", "--eps", "1/2"]);
    let mu_ok = wire::from_json::<WCertificate>(&j).map(|w| w.mu.0 == int(3)).unwrap_or(false);
    let (_, j2) = run_cli(&["certify", "--a", "2", "--b", "1", "--n", "3", "--m", "2", "--eps", "1/2"]);
    expect("certify", c == 0 && mu_ok && j == j2 && round_trips::<WCertificate>(&j));
    let (c, _) = run_cli(&["certify", "--a", "2", "--n", "3", "--eps", "0"]);
    expect("certify eps = 0 exits 2", c == 2);
    let (c, _) = run_cli(&["certify", "--a", "8", "--n", "3"]);
    expect("certify perfect cube exits 2", c == 2);
    let (c, j) = run_cli(&["hunt", "--a", "2", "--n", "3", "--depth", "12"]);
    expect("hunt", c == 0 && round_trips::<WHunt>(&j));
    let (c, _) = run_cli(&["--prec", "32", "hunt", "--a", "2", "--n", "3"]);
    expect("precision below 64 exits 2", c == 2);
    let (c, _) = run_cli(&["frobnicate"]);
    expect("unknown subcommand exits 2", c == 2);
    let (c, j) = run_cli(&["verify"]);
    let verify_ok = wire::from_json::<VerifyReport>(&j)
        .map(|r| (1..=4).all(|k| r.criterion_passed(k)) && r.passed())
        .unwrap_or(false);
    expect("verify drives criteria 1-4", c == 0 && verify_ok && round_trips::<VerifyReport>(&j));

    s.report(11, "CLI round-trips JSON, exit codes conform, verify covers 1-4", ok, if notes.is_empty() {
        "6 subcommands".to_string()
    } else {
        format!("failed: {notes:?}")
    });
}

fn diagnostics() {
    let sys = build_system(3, 2, 2).unwrap();
    let ratios = bounds::k_formula_ratios(&sys).unwrap();
    let first = ratios.first().map(|r| r.1.clone()).unwrap_or_else(BigRational::zero);
    let uniform = ratios.iter().all(|r| r.1 == first);
    println!("INFO factorised coefficient formula / residue coefficient (n=3, m=2, rho=2): {first}, uniform: {uniform} (rho(rho-1)^(m-1) = 2)");
    let q = BigInt::from(2);
    println!("INFO select_rho(2, 10^9, m=2) = {}", certify::select_rho(&q, &BigInt::from(1_000_000_000), 2).unwrap());
}

fn main() {
    let mut s = Suite { failures: 0 };
    let (report, secs) = grid_report();
    criteria_1_to_4(&mut s, &report, secs);
    criterion_5(&mut s);
    criterion_6(&mut s);
    criterion_7(&mut s);
    criterion_8(&mut s);
    criterion_9(&mut s);
    criterion_10(&mut s);
    criterion_11(&mut s);
    diagnostics();
    if s.failures > 0 {
        println!("{} criteria failed", s.failures);
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
