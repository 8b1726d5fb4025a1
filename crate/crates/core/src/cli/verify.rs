//! The identity suite behind `binpade verify`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::GridLimits;
use crate::binomial::{base_exponents, build_system};
use crate::error::Result;
use crate::pade::{
    compare_delta, construct_linsolve, construct_residue, log_rep_series, remainder_series,
    ExponentSystem,
};
use crate::wire::WRat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub subject: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaRow {
    pub subject: String,
    pub delta: WRat,
    pub footnote: WRat,
    pub ratio: WRat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyReport {
    pub limits: GridLimits,
    pub checks: Vec<Check>,
    pub deltas: Vec<DeltaRow>,
    pub total: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn criterion_passed(&self, c: u8) -> bool {
        self.checks.iter().filter(|k| k.criterion == c).all(|k| k.pass)
            && self.checks.iter().any(|k| k.criterion == c)
    }
}

fn label(sys: &ExponentSystem) -> String {
    let om: Vec<String> = sys.omega().iter().map(|w| w.to_string()).collect();
    let rho: Vec<String> = sys.rho().iter().map(|r| r.to_string()).collect();
    format!("omega=({}) rho=({})", om.join(","), rho.join(","))
}

/// Each base system `ω_k = (k-1)/n, ϱ_k = ϱ` and its `m` bumped rows.
pub fn grid_systems(limits: &GridLimits) -> Result<Vec<ExponentSystem>> {
    let mut out = Vec::new();
    for n in 3..=limits.max_n {
        for m in 2..=n.min(limits.max_m) {
            for rho in 1..=limits.max_rho {
                let base = base_exponents(n, m, rho)?;
                out.extend((0..m as usize).map(|h| base.bumped(h)));
                out.push(base);
            }
        }
    }
    Ok(out)
}

/// Random systems with `m <= 3`, `ϱ_k <= 3` and small rational `ω`.
pub fn random_systems(count: usize, seed: u64) -> Vec<ExponentSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = rng.gen_range(1..=3usize);
        let omega = (0..m)
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(-6i64..=6)), BigInt::from(rng.gen_range(1i64..=7))))
            .collect();
        let rho = (0..m).map(|_| rng.gen_range(1u64..=3)).collect();
        if let Ok(sys) = ExponentSystem::new(omega, rho) {
            out.push(sys);
        }
    }
    out
}

fn check(criterion: u8, name: &str, subject: &str, outcome: std::result::Result<String, String>) -> Check {
    let (pass, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { criterion, name: name.into(), subject: subject.into(), pass, detail }
}

/// Residue, linear-solve and log-series constructions agree exactly.
pub fn check_routes(sys: &ExponentSystem) -> Check {
    let len = sys.sigma() as usize + 3;
    let outcome = (|| {
        let res = construct_residue(sys).map_err(|e| e.to_string())?;
        let lin = construct_linsolve(sys, len).map_err(|e| e.to_string())?;
        if res.a != lin.a {
            return Err("residue and linear-solve polynomials differ".to_string());
        }
        let rem = remainder_series(&res, len);
        let log = log_rep_series(sys, len).map_err(|e| e.to_string())?;
        if rem != log {
            return Err(format!("remainder {:?} differs from log series", rem.coeffs()));
        }
        Ok(format!("agree to order {len}"))
    })();
    check(1, "triple construction", &label(sys), outcome)
}

/// `R` vanishes to order `σ-1` with coefficient `∏(ϱ_k-1)!/(σ-1)!`.
pub fn check_normalization(sys: &ExponentSystem) -> Check {
    let sigma = sys.sigma() as usize;
    let outcome = (|| {
        let ps = construct_residue(sys).map_err(|e| e.to_string())?;
        let rem = remainder_series(&ps, sigma + 1);
        if let Some(i) = (0..sigma - 1).find(|&i| !rem.coeff(i).is_zero()) {
            return Err(format!("coefficient of z^{i} is {}", rem.coeff(i)));
        }
        let lead = rem.coeff(sigma - 1);
        if *lead != sys.normalization() {
            return Err(format!("z^{} coefficient {lead} != {}", sigma - 1, sys.normalization()));
        }
        if !ps.degrees_exact() {
            return Err("degree of some A_k differs from rho_k - 1".to_string());
        }
        Ok(format!("z^{} coefficient {lead}", sigma - 1))
    })();
    check(2, "normalization", &label(sys), outcome)
}

pub fn check_determinant(sys: &ExponentSystem) -> (Check, Option<DeltaRow>) {
    let subject = label(sys);
    match compare_delta(sys) {
        Ok(c) => {
            let row = DeltaRow {
                subject: subject.clone(),
                delta: WRat::from(&c.determinant),
                footnote: WRat::from(&c.footnote),
                ratio: WRat::from(&c.ratio),
            };
            let detail = format!("delta = {}, footnote/delta = {}", c.determinant, c.ratio);
            (check(3, "determinant", &subject, Ok(detail)), Some(row))
        }
        Err(e) => (check(3, "determinant", &subject, Err(e.to_string())), None),
    }
}

pub fn check_specialization(n: u32, m: u32, rho: u64) -> Check {
    let subject = format!("n={n} m={m} rho={rho}");
    let outcome = build_system(n, m, rho)
        .and_then(|s| s.verify_identities())
        .map(|_| "U = (x-1)^(m rho) S + (y-x) T and (x-1)^(m rho) | R for every row".to_string())
        .map_err(|e| e.to_string());
    check(4, "specialization", &subject, outcome)
}

pub fn run_verify(limits: &GridLimits) -> Result<VerifyReport> {
    let mut systems = grid_systems(limits)?;
    systems.extend(random_systems(limits.random_systems, limits.seed));
    let per_system: Vec<(Vec<Check>, Option<DeltaRow>)> = systems
        .par_iter()
        .map(|s| {
            let (det, row) = check_determinant(s);
            (vec![check_routes(s), check_normalization(s), det], row)
        })
        .collect();
    let mut specs = Vec::new();
    for n in 3..=limits.max_n {
        for m in 2..=n.min(limits.max_m) {
            for rho in 1..=limits.max_rho {
                specs.push((n, m, rho));
            }
        }
    }
    let spec_checks: Vec<Check> = specs.par_iter().map(|&(n, m, rho)| check_specialization(n, m, rho)).collect();

    let mut checks = Vec::new();
    let mut deltas = Vec::new();
    for (c, row) in per_system {
        checks.extend(c);
        deltas.extend(row);
    }
    checks.extend(spec_checks);
    checks.sort_by_key(|c| c.criterion);
    let failed = checks.iter().filter(|c| !c.pass).count();
    Ok(VerifyReport { limits: limits.clone(), total: checks.len(), failed, checks, deltas })
}
