//! Command-line surface. Every subcommand builds a wire object, prints it as
//! JSON or text, and maps library errors to exit codes 1 and 2.

pub mod config;
pub mod verify;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::parse_rational;
use crate::binomial::build_system;
use crate::certify::{cf_hunt, gap_certificate, theta_pair, PairInput, RhoMode, Target};
use crate::error::{Error, Result};
use crate::pade::{compare_delta, construct_residue, remainder_series, ExponentSystem};
use crate::wire::{self, WCertificate, WHunt, WNthRootSystem, WPadeSystem, WPair, WRat, WTarget, WTriple};

pub use config::{Config, Format, GridLimits, CONFIG_ENV};
pub use verify::{Check, VerifyReport};

#[derive(Debug, Parser)]
#[command(name = "binpade", version, about = "Hermite-Pade systems for binomial functions and approximation certificates for n-th roots")]
pub struct Cli {
    /// Config file (TOML); defaults to $BINPADE_CONFIG.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Working precision in bits, 64..=4096.
    #[arg(long, global = true)]
    pub prec: Option<u32>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a system from explicit exponents or from (n, m, rho).
    Construct(ConstructArgs),
    /// Run the identity suite over a grid and replay golden cases.
    Verify(VerifyArgs),
    /// Determinant constant and the closed-form comparison value.
    Delta(DeltaArgs),
    /// theta_1, theta_2 for a pair of approximations.
    Theta(ThetaArgs),
    /// Gap certificate for (a/b)^(1/n).
    Certify(TargetArgs),
    /// Continued-fraction stress test against the certificate.
    Hunt(HuntArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Comma-separated exponents, e.g. 0,1/2.
    #[arg(long, conflicts_with_all = ["n", "m"])]
    pub omega: Option<String>,
    /// Comma-separated multiplicities with --omega, a single value with --n/--m.
    #[arg(long)]
    pub rho: String,
    #[arg(long, requires = "m")]
    pub n: Option<u32>,
    #[arg(long, requires = "n")]
    pub m: Option<u32>,
    /// Number of remainder coefficients; defaults to sigma + 1.
    #[arg(long)]
    pub len: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub max_m: Option<u32>,
    #[arg(long)]
    pub max_rho: Option<u64>,
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Directory of golden cases; overrides the config.
    #[arg(long)]
    pub golden: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[arg(long)]
    pub omega: String,
    #[arg(long)]
    pub rho: String,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long, default_value_t = 1)]
    pub b: u64,
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long, default_value = "1/2")]
    pub eps: String,
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub p1: String,
    #[arg(long)]
    pub q1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub p2: String,
    #[arg(long)]
    pub q2: String,
    /// Evaluate at this rho instead of the selected one.
    #[arg(long)]
    pub rho: Option<u64>,
}

#[derive(Debug, Args)]
pub struct HuntArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long, default_value_t = 30)]
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WConstruct {
    pub system: WPadeSystem,
    pub normalization: WRat,
    pub remainder: Vec<WRat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WConstructNth {
    pub system: WNthRootSystem,
    pub triple: WTriple,
    /// `det[A_hk(w)]` in `w`.
    pub det: Vec<WRat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WDelta {
    pub omega: Vec<WRat>,
    pub rho: Vec<u64>,
    pub delta: WRat,
    /// Coefficients of `det[A_hk(z)]`.
    pub det: Vec<WRat>,
    pub footnote: WRat,
    pub ratio: WRat,
    pub magnitude_ratio: WRat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WTheta {
    pub target: WTarget,
    pub selected: WPair,
    pub diagnostic_rho1: WPair,
}

/// A rendered report and the exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub json: String,
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok<T: Serialize>(v: &T, text: String) -> Output {
        Output { json: wire::to_json(v), text, code: 0 }
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

pub fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("not a non-negative integer: {t:?}"))))
        .collect()
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

impl TargetArgs {
    fn target(&self) -> Result<Target> {
        Target::new(self.a, self.b, self.n, self.m, parse_rational(&self.eps)?)
    }
}

fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn cmd_construct(args: &ConstructArgs) -> Result<Output> {
    if let Some(omega) = &args.omega {
        let sys = ExponentSystem::new(parse_rational_list(omega)?, parse_u64_list(&args.rho)?)?;
        let ps = construct_residue(&sys)?;
        let len = args.len.unwrap_or(sys.sigma() as usize + 1);
        let rem = remainder_series(&ps, len);
        let out = WConstruct {
            system: WPadeSystem::from(&ps),
            normalization: WRat::from(&sys.normalization()),
            remainder: wire::rats(rem.coeffs()),
        };
        let mut text = String::new();
        for (k, a) in ps.a.iter().enumerate() {
            let _ = writeln!(text, "A_{} = {}", k + 1, a);
        }
        let _ = writeln!(text, "remainder: [{}]", join(rem.coeffs()));
        return Ok(Output::ok(&out, text));
    }
    let (Some(n), Some(m)) = (args.n, args.m) else {
        return Err(Error::BadParams("give either --omega or both --n and --m".into()));
    };
    let rho = args.rho.trim().parse::<u64>().map_err(|_| Error::Parse(format!("rho must be one integer with --n/--m, got {:?}", args.rho)))?;
    let sys = build_system(n, m, rho)?;
    let triple = sys.triple()?;
    let det = sys.det_in_w()?;
    let out = WConstructNth {
        system: WNthRootSystem::from(&sys),
        triple: WTriple::from(&triple),
        det: wire::poly(&det),
    };
    let mut text = String::new();
    for (h, row) in sys.ahk.iter().enumerate() {
        for (k, a) in row.iter().enumerate() {
            let _ = writeln!(text, "A_{}{}(w) = {}", h + 1, k + 1, a);
        }
    }
    for (h, s) in triple.s.iter().enumerate() {
        let _ = writeln!(text, "S_{}(x) = {}", h + 1, s);
    }
    let _ = writeln!(text, "det = {det}");
    Ok(Output::ok(&out, text))
}

fn cmd_delta(args: &DeltaArgs) -> Result<Output> {
    let sys = ExponentSystem::new(parse_rational_list(&args.omega)?, parse_u64_list(&args.rho)?)?;
    let det = crate::pade::determinant_delta(&sys)?;
    let c = compare_delta(&sys)?;
    let out = WDelta {
        omega: wire::rats(sys.omega()),
        rho: sys.rho().to_vec(),
        delta: WRat::from(&c.determinant),
        det: wire::poly(&det.det),
        footnote: WRat::from(&c.footnote),
        ratio: WRat::from(&c.ratio),
        magnitude_ratio: WRat::from(&c.magnitude_ratio()),
    };
    let text = format!(
        "delta = {}\ndet = {}\nclosed form = {}\nratio = {}\n",
        c.determinant, det.det, c.footnote, c.ratio
    );
    Ok(Output::ok(&out, text))
}

fn pair_text(label: &str, p: &WPair, pair: &crate::certify::ApproxPair) -> String {
    format!(
        "{label}: rho = {}, h0 = {}, U = {}, theta1 in {}, theta2 in {}, sum > 2: {}, max > 1: {}\n",
        p.rho, p.h0, pair.u, pair.theta1, pair.theta2, p.sum_exceeds_two, p.max_exceeds_one
    )
}

fn cmd_theta(args: &ThetaArgs, prec: u32) -> Result<Output> {
    let t = args.target.target()?;
    let input = PairInput {
        p1: parse_int(&args.p1)?,
        q1: parse_int(&args.q1)?,
        p2: parse_int(&args.p2)?,
        q2: parse_int(&args.q2)?,
    };
    let mode = args.rho.map_or(RhoMode::Select, RhoMode::Fixed);
    let sel = theta_pair(&input, &t, mode, prec)?;
    let diag = theta_pair(&input, &t, RhoMode::Fixed(1), prec)?;
    let out = WTheta { target: WTarget::from(&t), selected: WPair::from(&sel), diagnostic_rho1: WPair::from(&diag) };
    let text = pair_text("selected", &out.selected, &sel) + &pair_text("rho = 1", &out.diagnostic_rho1, &diag);
    Ok(Output::ok(&out, text))
}

fn cmd_certify(args: &TargetArgs) -> Result<Output> {
    let c = gap_certificate(&args.target()?)?;
    let out = WCertificate::from(&c);
    let mut text = format!("{}\n", c.statement);
    for (name, b) in [("c1", &c.constants.c1), ("c2", &c.constants.c2), ("c3", &c.constants.c3), ("c4", &c.constants.c4), ("c5", &c.constants.c5)] {
        let _ = writeln!(text, "{name} = {}", b.value);
    }
    let _ = writeln!(text, "Q1min in {}, ceiling {}", c.thresholds.q1min, c.thresholds.q1min_ceil);
    Ok(Output::ok(&out, text))
}

fn cmd_hunt(args: &HuntArgs, prec: u32) -> Result<Output> {
    let report = cf_hunt(&args.target.target()?, args.depth, prec)?;
    let out = WHunt::from(&report);
    let mut text = format!("mu = {}, Q1min <= {}\n", report.mu, report.q1min_ceil);
    for r in &report.rows {
        let _ = writeln!(
            text,
            "{:>3} a={} {}/{} band={} |xi-p/q| in {} mu_emp={} good={}",
            r.index,
            r.partial_quotient,
            r.p,
            r.q,
            r.in_band,
            r.error,
            r.mu_emp.map_or("-".to_string(), |v| format!("{v:.4}")),
            r.satisfies
        );
    }
    let _ = writeln!(text, "violations: {:?}, pair violations: {:?}", report.violations, report.pair_violations);
    let code = if report.clean() { 0 } else { 1 };
    Ok(Output { json: wire::to_json(&out), text, code })
}

/// One golden case: CLI arguments (without the program name) and the
/// expected JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenCase {
    pub args: Vec<String>,
    pub output: serde_json::Value,
}

pub fn replay_golden(dir: &Path) -> Result<Vec<Check>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Parse(format!("golden dir {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let subject = p.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let text = std::fs::read_to_string(&p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
        let case: GoldenCase = wire::from_json(&text)?;
        let outcome = (|| {
            let cli = Cli::try_parse_from(std::iter::once("binpade".to_string()).chain(case.args.clone()))
                .map_err(|e| e.to_string())?;
            if matches!(cli.command, Command::Verify(_)) {
                return Err("golden cases may not run verify".to_string());
            }
            let got = execute(&cli, &Config::default()).map_err(|e| e.to_string())?;
            let value: serde_json::Value = serde_json::from_str(&got.json).map_err(|e| e.to_string())?;
            if value == case.output {
                Ok("matches".to_string())
            } else {
                Err(format!("output differs: {}", got.json))
            }
        })();
        let (pass, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        out.push(Check { criterion: 11, name: "golden".into(), subject, pass, detail });
    }
    Ok(out)
}

fn cmd_verify(args: &VerifyArgs, cfg: &Config) -> Result<Output> {
    let mut limits = cfg.verify.clone();
    if let Some(v) = args.max_n {
        limits.max_n = v;
    }
    if let Some(v) = args.max_m {
        limits.max_m = v;
    }
    if let Some(v) = args.max_rho {
        limits.max_rho = v;
    }
    if let Some(v) = args.random {
        limits.random_systems = v;
    }
    if let Some(v) = args.seed {
        limits.seed = v;
    }
    if limits.max_n < 3 || limits.max_m < 2 || limits.max_rho < 1 {
        return Err(Error::BadParams("grid needs max_n >= 3, max_m >= 2, max_rho >= 1".into()));
    }
    let mut report = verify::run_verify(&limits)?;
    if let Some(dir) = args.golden.as_ref().or(cfg.golden.dir.as_ref()) {
        report.checks.extend(replay_golden(dir)?);
        report.total = report.checks.len();
        report.failed = report.checks.iter().filter(|c| !c.pass).count();
    }
    let mut text = String::new();
    for c in &report.checks {
        let _ = writeln!(text, "{} [{}] {} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.criterion, c.name, c.subject, c.detail);
    }
    let _ = writeln!(text, "{} checks, {} failed", report.total, report.failed);
    let code = if report.passed() { 0 } else { 1 };
    Ok(Output { json: wire::to_json(&report), text, code })
}

/// Runs a parsed command with an already resolved config.
pub fn execute(cli: &Cli, cfg: &Config) -> Result<Output> {
    let prec = cli.prec.unwrap_or(cfg.precision);
    config::check_precision(prec)?;
    match &cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a, cfg),
        Command::Delta(a) => cmd_delta(a),
        Command::Theta(a) => cmd_theta(a, prec),
        Command::Certify(a) => cmd_certify(a),
        Command::Hunt(a) => cmd_hunt(a, prec),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = Config::resolve(cli.config.as_deref()).and_then(|cfg| {
        let out = execute(&cli, &cfg)?;
        let format = cli.format.unwrap_or(cfg.format);
        let body = match format {
            Format::Json => &out.json,
            Format::Text => &out.text,
        };
        match &cli.out {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{body}"),
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
