//! Band checks, the `ϑ₁, ϑ₂` inequality for pairs of approximations, the
//! gap certificate and a continued-fraction stress test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{big, int};
use crate::binomial::build_system;
use crate::bounds::{self, BoundConstants};
use crate::error::{Error, Result};
use crate::interval::{self, Float, Interval, MAX_PREC};

/// `ξ = (a/b)^{1/n}` with the auxiliary parameter `m` and the slack `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub a: u64,
    pub b: u64,
    pub n: u32,
    pub m: u32,
    pub eps: BigRational,
}

impl Target {
    pub fn new(a: u64, b: u64, n: u32, m: u32, eps: BigRational) -> Result<Target> {
        if n < 3 || m < 2 || m > n {
            return Err(Error::BadParams(format!("need n >= 3 and 2 <= m <= n; got n={n} m={m}")));
        }
        if !eps.is_positive() {
            return Err(Error::BadParams(format!("eps must be positive, got {eps}")));
        }
        bounds::check_target(a, b, n)?;
        Ok(Target { a, b, n, m, eps })
    }

    pub fn radicand(&self) -> BigRational {
        BigRational::new(self.a.into(), self.b.into())
    }

    pub fn mu(&self) -> BigRational {
        mu(self.n, self.m, &self.eps)
    }

    pub fn xi(&self, prec: u32) -> Interval {
        interval::nth_root_rational(&self.radicand(), self.n, prec)
    }

    pub fn constants(&self) -> Result<BoundConstants> {
        bounds::derive_all(self.n, self.m, self.a, self.b)
    }
}

/// `n/m + m - 1 + ε`.
pub fn mu(n: u32, m: u32, eps: &BigRational) -> BigRational {
    BigRational::new(n.into(), m.into()) + int(m as i64 - 1) + eps
}

/// The `m` in `2..=n` minimising `n/m + m - 1`, smallest on ties.
pub fn best_m(n: u32) -> (u32, BigRational) {
    (2..=n.max(2))
        .map(|m| (m, mu(n, m, &BigRational::zero())))
        .fold(None, |best: Option<(u32, BigRational)>, c| match best {
            Some(b) if b.1 <= c.1 => Some(b),
            _ => Some(c),
        })
        .expect("non-empty range")
}

/// `(2/3)^{1/n} ξ <= p/q <= (3/2)^{1/n} ξ`, decided by comparing n-th powers
/// exactly.
pub fn band_check(p: &BigInt, q: &BigInt, t: &Target) -> Result<bool> {
    if !q.is_positive() {
        return Err(Error::Precondition(format!("q must be positive, got {q}")));
    }
    if !p.is_positive() {
        return Ok(false);
    }
    let pn = num_traits::pow(p.clone(), t.n as usize);
    let qn = num_traits::pow(q.clone(), t.n as usize);
    let (a, b) = (BigInt::from(t.a), BigInt::from(t.b));
    let lower_ok = BigInt::from(3) * &b * &pn >= BigInt::from(2) * &a * &qn;
    let upper_ok = BigInt::from(2) * &b * &pn <= BigInt::from(3) * &a * &qn;
    Ok(lower_ok && upper_ok)
}

/// Enclosures of the band endpoints `(2a/3b)^{1/n}` and `(3a/2b)^{1/n}`.
pub fn band_endpoints(t: &Target, prec: u32) -> (Interval, Interval) {
    let lo = BigRational::new(BigInt::from(2 * t.a), BigInt::from(3 * t.b));
    let hi = BigRational::new(BigInt::from(3 * t.a), BigInt::from(2 * t.b));
    (
        interval::nth_root_rational(&lo, t.n, prec),
        interval::nth_root_rational(&hi, t.n, prec),
    )
}

/// The unique `ϱ >= 1` with `q1^{m(ϱ-1)} < q2 <= q1^{mϱ}`.
pub fn select_rho(q1: &BigInt, q2: &BigInt, m: u32) -> Result<u64> {
    if q1.is_one() {
        return Err(Error::Q1IsOne);
    }
    if q1 < &BigInt::from(2) {
        return Err(Error::Precondition(format!("q1 must be >= 2, got {q1}")));
    }
    if q2.is_one() {
        return Err(Error::Precondition("q2 = 1 satisfies no sandwich with rho >= 1".into()));
    }
    if !q2.is_positive() {
        return Err(Error::Precondition(format!("q2 must be positive, got {q2}")));
    }
    let step = num_traits::pow(q1.clone(), m as usize);
    let mut rho = 1u64;
    let mut top = step.clone();
    while &top < q2 {
        top *= &step;
        rho += 1;
    }
    Ok(rho)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairInput {
    pub p1: BigInt,
    pub q1: BigInt,
    pub p2: BigInt,
    pub q2: BigInt,
}

impl PairInput {
    pub fn new(p1: i64, q1: i64, p2: i64, q2: i64) -> PairInput {
        PairInput { p1: p1.into(), q1: q1.into(), p2: p2.into(), q2: q2.into() }
    }
}

/// How `ϱ` is chosen for [`theta_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoMode {
    Select,
    /// Evaluate at a given `ϱ`; the inequality chain does not depend on the
    /// sandwich, so the postcondition still applies.
    Fixed(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxPair {
    pub input: PairInput,
    pub rho: u64,
    /// 0-based row.
    pub h0: usize,
    pub u: BigRational,
    pub w: BigRational,
    pub y: BigRational,
    pub theta1: Interval,
    pub theta2: Interval,
}

impl ApproxPair {
    /// Certified lower bound for `ϑ₁ + ϑ₂`.
    pub fn sum_lower(&self) -> BigRational {
        self.theta1.lo().to_rational() + self.theta2.lo().to_rational()
    }

    pub fn sum_exceeds_two(&self) -> bool {
        self.sum_lower() > int(2)
    }

    pub fn max_exceeds_one(&self) -> bool {
        self.theta1.lo().to_rational() > int(1) || self.theta2.lo().to_rational() > int(1)
    }
}

/// `|ξ - p/q|`.
pub fn distance(xi: &Interval, p: &BigInt, q: &BigInt) -> Interval {
    let prec = xi.prec();
    xi.sub(&Interval::from_rational(&BigRational::new(p.clone(), q.clone()), prec)).abs()
}

/// Runs `f` at doubling precision until it resolves or the cap is reached.
pub fn refine<T>(prec: u32, what: &str, mut f: impl FnMut(u32) -> Result<Option<T>>) -> Result<T> {
    let mut p = prec.clamp(interval::MIN_PREC, MAX_PREC);
    loop {
        if let Some(v) = f(p)? {
            return Ok(v);
        }
        if p >= MAX_PREC {
            return Err(Error::Indeterminate(what.to_string()));
        }
        p = (p * 2).min(MAX_PREC);
    }
}

pub fn theta_pair(input: &PairInput, t: &Target, mode: RhoMode, prec: u32) -> Result<ApproxPair> {
    theta_pair_with(input, t, &t.constants()?, mode, prec)
}

pub fn theta_pair_with(
    input: &PairInput,
    t: &Target,
    consts: &BoundConstants,
    mode: RhoMode,
    prec: u32,
) -> Result<ApproxPair> {
    for (p, q) in [(&input.p1, &input.q1), (&input.p2, &input.q2)] {
        if !band_check(p, q, t)? {
            return Err(Error::Precondition(format!("{p}/{q} lies outside the band")));
        }
    }
    let rho = match mode {
        RhoMode::Select => select_rho(&input.q1, &input.q2, t.m)?,
        RhoMode::Fixed(r) if r >= 1 => r,
        RhoMode::Fixed(_) => return Err(Error::BadParams("rho must be >= 1".into())),
    };
    let (n, m) = (t.n, t.m);
    let sys = build_system(n, m, rho)?;
    let (p1, q1, p2, q2) = (&input.p1, &input.q1, &input.p2, &input.q2);
    let w = BigRational::new(
        BigInt::from(t.a) * num_traits::pow(q1.clone(), n as usize),
        BigInt::from(t.b) * num_traits::pow(p1.clone(), n as usize),
    );
    let y = BigRational::new(q1 * p2, p1 * q2);
    let (h0, u) = sys.select_h(&w, &y)?;

    let common = num_traits::pow(big(q1.clone()), (n as u64 * rho + m as u64 - 1) as usize)
        * num_traits::pow(big(q2.clone()), (m - 1) as usize);
    let k1 = num_traits::pow(consts.c4.value.clone(), rho as usize) * &common;
    let k2 = num_traits::pow(consts.c5.value.clone(), rho as usize) * &common;
    let e1 = u32::try_from(m as u64 * rho).map_err(|_| Error::BadParams("rho too large".into()))?;

    let (theta1, theta2) = refine(prec, "theta lower bounds", |p| {
        let xi = t.xi(p);
        let th1 = Interval::from_rational(&k1, p).mul(&distance(&xi, p1, q1).powi(e1));
        let th2 = Interval::from_rational(&k2, p).mul(&distance(&xi, p2, q2));
        let lo = th1.lo().to_rational() + th2.lo().to_rational();
        let hi = th1.hi().to_rational() + th2.hi().to_rational();
        if lo > int(2) {
            Ok(Some((th1, th2)))
        } else if hi <= int(2) {
            Err(Error::InvariantViolation(format!(
                "theta1 + theta2 <= 2 for {p1}/{q1}, {p2}/{q2} at rho = {rho}: theta1 in {th1}, theta2 in {th2}"
            )))
        } else {
            Ok(None)
        }
    })?;
    Ok(ApproxPair { input: input.clone(), rho, h0, u, w, y, theta1, theta2 })
}

/// An exponent `c + r ϱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub c: BigRational,
    pub r: BigRational,
}

impl Affine {
    pub fn new(c: BigRational, r: BigRational) -> Affine {
        Affine { c, r }
    }

    fn add(&self, o: &Affine) -> Affine {
        Affine::new(&self.c + &o.c, &self.r + &o.r)
    }

    /// True when `self <= o` for every `ϱ >= 1`.
    pub fn le_for_rho_ge_1(&self, o: &Affine) -> bool {
        self.r <= o.r && (&self.c + &self.r) <= (&o.c + &o.r)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({}) rho", self.c, self.r)
    }
}

/// `q1^{e1} q2^{e2} c^ϱ` where `c` is the named constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub q1: Affine,
    pub q2: Affine,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q1^({}) q2^({})", self.q1, self.q2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentCheck {
    pub theta: u8,
    pub derived: Monomial,
    pub target: Monomial,
    pub steps: Vec<String>,
    pub holds: bool,
}

/// Moves `s q2`-exponent into `q1` using `q2 <= q1^{mϱ}` (for `s > 0`) or
/// `q2 > q1^{m(ϱ-1)}` (for `s < 0`).
fn trade_q2_for_q1(mono: &Monomial, s: &BigRational, m: u32, steps: &mut Vec<String>) -> Monomial {
    let mm = int(m as i64);
    let shift = if s.is_positive() {
        steps.push(format!("q2^({s}) <= q1^({s} m rho) from q2 <= q1^(m rho)"));
        Affine::new(BigRational::zero(), s * &mm)
    } else {
        steps.push(format!("q2^({s}) < q1^({s} m (rho - 1)) from q2 > q1^(m (rho - 1))"));
        Affine::new(-(s * &mm), s * &mm)
    };
    Monomial {
        q1: mono.q1.add(&shift),
        q2: mono.q2.add(&Affine::new(-s.clone(), BigRational::zero())),
    }
}

/// Re-derives the two bounds
/// `ϑ₁ <= q1^{m-1} q2^{-ε/2} (c4 q1^{-mε/2})^ϱ` and
/// `ϑ₂ <= q1^{n+m+mε-1} q2^{-ε/2} (c5 q1^{-mε/2})^ϱ`
/// from `|ξ - p_i/q_i| <= q_i^{-μ}` and the `ϱ` sandwich, in exact exponent
/// arithmetic.
pub fn verify_exponents(t: &Target) -> [ExponentCheck; 2] {
    let (n, m) = (int(t.n as i64), int(t.m as i64));
    let eps = t.eps.clone();
    let mu = t.mu();
    let half_eps = &eps / int(2);
    let one = BigRational::one();

    let mut steps = Vec::new();
    let start = Monomial {
        q1: Affine::new(&m - &one, n.clone()),
        q2: Affine::new(&m - &one, BigRational::zero()),
    };
    steps.push(format!("theta1 / c4^rho = {start} |xi - p1/q1|^(m rho)"));
    let mut d1 = Monomial { q1: start.q1.add(&Affine::new(BigRational::zero(), -(&m * &mu))), q2: start.q2.clone() };
    steps.push(format!("|xi - p1/q1| <= q1^(-mu), mu = {mu}: {d1}"));
    let target_q2 = Affine::new(-half_eps.clone(), BigRational::zero());
    let s = &d1.q2.c - &target_q2.c;
    d1 = trade_q2_for_q1(&d1, &s, t.m, &mut steps);
    steps.push(format!("now {d1}"));
    let target1 = Monomial {
        q1: Affine::new(&m - &one, -(&m * &half_eps)),
        q2: target_q2.clone(),
    };
    let holds1 = d1.q2 == target1.q2 && d1.q1.le_for_rho_ge_1(&target1.q1);
    steps.push(format!("target {target1}; q1 >= 1 so a smaller q1 exponent suffices: {holds1}"));
    let check1 = ExponentCheck { theta: 1, derived: d1, target: target1, steps, holds: holds1 };

    let mut steps = Vec::new();
    steps.push(format!("theta2 / c5^rho = {start} |xi - p2/q2|"));
    let mut d2 = Monomial { q1: start.q1.clone(), q2: start.q2.add(&Affine::new(-mu.clone(), BigRational::zero())) };
    steps.push(format!("|xi - p2/q2| <= q2^(-mu), mu = {mu}: {d2}"));
    let s = &d2.q2.c - &target_q2.c;
    d2 = trade_q2_for_q1(&d2, &s, t.m, &mut steps);
    steps.push(format!("now {d2}"));
    let target2 = Monomial {
        q1: Affine::new(&n + &m + &m * &eps - &one, -(&m * &half_eps)),
        q2: target_q2,
    };
    let holds2 = d2.q2 == target2.q2 && d2.q1.le_for_rho_ge_1(&target2.q1);
    steps.push(format!("target {target2}; q1 >= 1 so a smaller q1 exponent suffices: {holds2}"));
    let check2 = ExponentCheck { theta: 2, derived: d2, target: target2, steps, holds: holds2 };
    [check1, check2]
}

#[derive(Clone, Debug, PartialEq)]
pub struct Thresholds {
    /// `max(c4, c5)^{2/(mε)}`.
    pub q1min: Interval,
    pub q1min_ceil: BigInt,
    /// `Q2min(q1) = max(q1^{e1}, q1^{e2})`.
    pub q2min_exponents: [BigRational; 2],
    base: BigRational,
    power: BigRational,
}

impl Thresholds {
    pub fn base(&self) -> &BigRational {
        &self.base
    }

    /// `2/(mε)`.
    pub fn power(&self) -> &BigRational {
        &self.power
    }

    /// Exact `q >= Q1min`.
    pub fn q1_reached(&self, q: &BigInt) -> bool {
        rational_power_le(&self.base, &self.power, &big(q.clone()))
    }

    /// Exact `q2 >= Q2min(q1)`.
    pub fn q2_reached(&self, q1: &BigInt, q2: &BigInt) -> bool {
        self.q2min_exponents
            .iter()
            .all(|e| rational_power_le(&big(q1.clone()), e, &big(q2.clone())))
    }
}

/// `base^e <= v` for `base, v > 0` and rational `e >= 0`.
fn rational_power_le(base: &BigRational, e: &BigRational, v: &BigRational) -> bool {
    let r = e.numer().to_usize().expect("exponent numerator fits");
    let s = e.denom().to_usize().expect("exponent denominator fits");
    num_traits::pow(base.clone(), r) <= num_traits::pow(v.clone(), s)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub target: Target,
    pub mu: BigRational,
    pub constants: BoundConstants,
    pub thresholds: Thresholds,
    pub checks: [ExponentCheck; 2],
    pub statement: String,
    pub version: String,
}

pub const CERT_PREC: u32 = 128;

pub fn gap_certificate(t: &Target) -> Result<Certificate> {
    let constants = t.constants()?;
    let checks = verify_exponents(t);
    if let Some(c) = checks.iter().find(|c| !c.holds) {
        return Err(Error::InvariantViolation(format!(
            "exponent bound for theta{} does not follow: {} vs {}",
            c.theta, c.derived, c.target
        )));
    }
    let base = constants.c4.value.clone().max(constants.c5.value.clone());
    let power = int(2) / (int(t.m as i64) * &t.eps);
    let r = power.numer().to_usize().ok_or_else(|| Error::BadParams("eps too small".into()))?;
    let s = power.denom().to_u32().ok_or_else(|| Error::BadParams("eps too small".into()))?;
    let q1min = interval::nth_root_rational(&num_traits::pow(base.clone(), r), s, CERT_PREC);
    let hi = q1min.hi().to_rational();
    let q1min_ceil = -((-hi.numer()).div_floor(hi.denom()));
    // q1^{m-1} q2^{-ε/2} <= 1 and q1^{n+m+mε-1} q2^{-ε/2} <= 1
    let two_over_eps = int(2) / &t.eps;
    let q2min_exponents = [&two_over_eps * &checks[0].target.q1.c, &two_over_eps * &checks[1].target.q1.c];
    let mu = t.mu();
    let statement = format!(
        "xi = ({}/{})^(1/{}), m = {}, mu = {}: any two band solutions p1/q1, p2/q2 of |xi - p/q| <= q^(-mu) with q1 >= Q1min = max(c4, c5)^({}) force q2 < max(q1^({}), q1^({}))",
        t.a, t.b, t.n, t.m, mu, power, q2min_exponents[0], q2min_exponents[1]
    );
    Ok(Certificate {
        target: t.clone(),
        mu,
        constants,
        thresholds: Thresholds { q1min, q1min_ceil, q2min_exponents, base, power },
        checks,
        statement,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergentRow {
    pub index: usize,
    pub partial_quotient: BigInt,
    pub p: BigInt,
    pub q: BigInt,
    pub in_band: bool,
    pub error: Interval,
    /// `-log|ξ - p/q| / log q`; `None` for `q = 1`.
    pub mu_emp: Option<f64>,
    /// `|ξ - p/q| <= q^{-μ}`.
    pub satisfies: bool,
    pub above_q1min: bool,
    /// `|ξ - p/q| < 1/q²`.
    pub legendre: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HuntReport {
    pub target: Target,
    pub mu: BigRational,
    pub q1min_ceil: BigInt,
    pub rows: Vec<ConvergentRow>,
    /// Band solutions of `|ξ - p/q| <= q^{-μ}` with `q >= Q1min`.
    pub violations: Vec<usize>,
    /// Pairs contradicting the gap statement.
    pub pair_violations: Vec<(usize, usize)>,
}

impl HuntReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.pair_violations.is_empty() && self.rows.iter().all(|r| r.legendre)
    }
}

pub const MAX_DEPTH: usize = 200;

/// The first `depth` partial quotients of `r^{1/n}`, each floor certified
/// by refining the enclosure of the complete quotient
/// `-(p_{k-2} - q_{k-2} ξ) / (p_{k-1} - q_{k-1} ξ)`.
pub fn partial_quotients(r: &BigRational, n: u32, depth: usize, prec: u32) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(depth);
    let (mut p2, mut q2) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut work = prec.clamp(interval::MIN_PREC, MAX_PREC);
    for k in 0..depth {
        let a = loop {
            let xi = interval::nth_root_rational(r, n, work);
            let num = Interval::from_int(0, work)
                .sub(&Interval::from_rational(&big(p2.clone()), work).sub(&Interval::from_rational(&big(q2.clone()), work).mul(&xi)));
            let den = Interval::from_rational(&big(p1.clone()), work)
                .sub(&Interval::from_rational(&big(q1.clone()), work).mul(&xi));
            let floor = if den.contains_zero() { None } else { num.div(&den)?.floor() };
            match floor {
                Some(a) => break a,
                None if work >= MAX_PREC => return Err(Error::IndeterminatePartialQuotient { index: k }),
                None => work = (work * 2).min(MAX_PREC),
            }
        };
        let p = &a * &p1 + &p2;
        let q = &a * &q1 + &q2;
        p2 = std::mem::replace(&mut p1, p);
        q2 = std::mem::replace(&mut q1, q);
        out.push(a);
    }
    Ok(out)
}

/// Convergents `p_k/q_k` from partial quotients.
pub fn convergents(pq: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let (mut p2, mut q2) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    pq.iter()
        .map(|a| {
            let p = a * &p1 + &p2;
            let q = a * &q1 + &q2;
            p2 = std::mem::replace(&mut p1, p.clone());
            q2 = std::mem::replace(&mut q1, q.clone());
            (p, q)
        })
        .collect()
}

fn log_abs(f: &Float) -> f64 {
    f.log2_approx() * std::f64::consts::LN_2
}

pub fn cf_hunt(t: &Target, depth: usize, prec: u32) -> Result<HuntReport> {
    if depth > MAX_DEPTH {
        return Err(Error::BadParams(format!("depth {depth} exceeds {MAX_DEPTH}")));
    }
    let cert = gap_certificate(t)?;
    let mu = cert.mu.clone();
    let (mu_r, mu_s) = (
        mu.numer().to_usize().expect("small mu"),
        mu.denom().to_u32().expect("small mu"),
    );
    let pq = partial_quotients(&t.radicand(), t.n, depth, prec)?;
    let mut rows = Vec::with_capacity(depth);
    for (index, ((p, q), a)) in convergents(&pq).into_iter().zip(pq).enumerate() {
        let in_band = band_check(&p, &q, t)?;
        let qr = big(q.clone());
        let q_mu = num_traits::pow(qr.clone(), mu_r);
        let inv_q2 = BigRational::new(BigInt::one(), &q * &q);
        let (error, satisfies, legendre) = refine(prec, "convergent error", |w| {
            let d = distance(&t.xi(w), &p, &q);
            // |ξ - p/q|^s q^r versus 1
            let scaled = d.powi(mu_s);
            let lhs_lo = scaled.lo().to_rational() * &q_mu;
            let lhs_hi = scaled.hi().to_rational() * &q_mu;
            let sat = if lhs_hi <= int(1) {
                Some(true)
            } else if lhs_lo > int(1) {
                Some(false)
            } else {
                None
            };
            let leg = if d.hi().to_rational() < inv_q2 {
                Some(true)
            } else if d.lo().to_rational() >= inv_q2 {
                Some(false)
            } else {
                None
            };
            Ok(sat.zip(leg).map(|(s, l)| (d, s, l)))
        })?;
        let mu_emp = (q > BigInt::one() && !error.lo().is_zero())
            .then(|| -log_abs(error.hi()) / log_abs(&Float::new(q.clone(), 0)));
        rows.push(ConvergentRow {
            index,
            partial_quotient: a,
            above_q1min: cert.thresholds.q1_reached(&q),
            p,
            q,
            in_band,
            error,
            mu_emp,
            satisfies,
            legendre,
        });
    }
    let good: Vec<&ConvergentRow> = rows.iter().filter(|r| r.in_band && r.satisfies).collect();
    let violations = good.iter().filter(|r| r.above_q1min).map(|r| r.index).collect();
    let mut pair_violations = Vec::new();
    for (i, r1) in good.iter().enumerate() {
        for r2 in &good[i + 1..] {
            if r1.above_q1min && cert.thresholds.q2_reached(&r1.q, &r2.q) {
                pair_violations.push((r1.index, r2.index));
            }
        }
    }
    Ok(HuntReport {
        target: t.clone(),
        mu,
        q1min_ceil: cert.thresholds.q1min_ceil.clone(),
        rows,
        violations,
        pair_violations,
    })
}

/// `ϑ` pairs for consecutive band-passing convergents with `q1 >= 2`,
/// evaluated in parallel.
pub fn convergent_theta_pairs(t: &Target, depth: usize, prec: u32) -> Result<Vec<ApproxPair>> {
    let pq = partial_quotients(&t.radicand(), t.n, depth, prec)?;
    let mut band = Vec::new();
    for (p, q) in convergents(&pq) {
        if q > BigInt::one() && band_check(&p, &q, t)? {
            band.push((p, q));
        }
    }
    let consts = t.constants()?;
    band.windows(2)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|w| {
            let input = PairInput { p1: w[0].0.clone(), q1: w[0].1.clone(), p2: w[1].0.clone(), q2: w[1].1.clone() };
            theta_pair_with(&input, t, &consts, RhoMode::Select, prec)
        })
        .collect()
}
