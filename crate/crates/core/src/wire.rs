//! JSON representation of every emitted object.
//!
//! Rationals are `[num, den]` pairs whose entries are JSON integers when
//! they fit in 53 bits and decimal strings otherwise. Interval endpoints
//! are C99 hex floats. Map keys come out sorted, so output is byte-stable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::arith::{BiPoly, Poly};
use crate::binomial::NthRootSystem;
use crate::bounds::{Bound, BoundConstants};
use crate::certify::{ApproxPair, Certificate, ExponentCheck, HuntReport, Target};
use crate::error::{Error, Result};
use crate::interval::{Float, Interval};
use crate::pade::{ExponentSystem, PadeSystem};

const SAFE: i64 = 1 << 53;

/// A big integer on the wire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WInt(pub BigInt);

/// A rational on the wire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WRat(pub BigRational);

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) if x.abs() < SAFE => Value::from(x),
        _ => Value::from(v.to_string()),
    }
}

fn parse_int_value(v: &Value) -> std::result::Result<BigInt, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| format!("not an integer: {n}")),
        Value::String(s) => s.parse().map_err(|_| format!("not an integer: {s:?}")),
        other => Err(format!("expected integer, got {other}")),
    }
}

impl Serialize for WInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        int_value(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for WInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        parse_int_value(&Value::deserialize(d)?).map(WInt).map_err(D::Error::custom)
    }
}

impl Serialize for WRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [int_value(self.0.numer()), int_value(self.0.denom())].serialize(s)
    }
}

impl<'de> Deserialize<'de> for WRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [n, den]: [Value; 2] = Deserialize::deserialize(d)?;
        let n = parse_int_value(&n).map_err(D::Error::custom)?;
        let den = parse_int_value(&den).map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        let r = BigRational::new(n, den);
        Ok(WRat(r))
    }
}

impl From<&BigRational> for WRat {
    fn from(r: &BigRational) -> WRat {
        WRat(r.clone())
    }
}

impl From<&BigInt> for WInt {
    fn from(v: &BigInt) -> WInt {
        WInt(v.clone())
    }
}

pub fn rats(v: &[BigRational]) -> Vec<WRat> {
    v.iter().map(WRat::from).collect()
}

pub fn unrats(v: &[WRat]) -> Vec<BigRational> {
    v.iter().map(|r| r.0.clone()).collect()
}

/// Ascending coefficients.
pub fn poly(p: &Poly) -> Vec<WRat> {
    rats(p.coeffs())
}

pub fn unpoly(v: &[WRat]) -> Poly {
    Poly::new(unrats(v))
}

/// `rows[i][j]` is the coefficient of `x^i y^j`.
pub fn bipoly(p: &BiPoly) -> Vec<Vec<WRat>> {
    p.rows().iter().map(|r| rats(r)).collect()
}

pub fn unbipoly(v: &[Vec<WRat>]) -> BiPoly {
    BiPoly::new(v.iter().map(|r| unrats(r)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WInterval {
    pub lo: String,
    pub hi: String,
    pub prec: u32,
}

impl From<&Interval> for WInterval {
    fn from(iv: &Interval) -> WInterval {
        WInterval { lo: iv.lo().to_hex(), hi: iv.hi().to_hex(), prec: iv.prec() }
    }
}

impl WInterval {
    pub fn to_interval(&self) -> Result<Interval> {
        let lo = Float::from_hex(&self.lo)?;
        let hi = Float::from_hex(&self.hi)?;
        if lo > hi {
            return Err(Error::Parse(format!("interval endpoints out of order: {} > {}", self.lo, self.hi)));
        }
        Ok(Interval::new(lo, hi, self.prec))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WPadeSystem {
    pub omega: Vec<WRat>,
    pub rho: Vec<u64>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<WRat>>,
}

impl From<&PadeSystem> for WPadeSystem {
    fn from(ps: &PadeSystem) -> WPadeSystem {
        WPadeSystem {
            omega: rats(ps.sys.omega()),
            rho: ps.sys.rho().to_vec(),
            a: ps.a.iter().map(poly).collect(),
        }
    }
}

impl WPadeSystem {
    pub fn to_system(&self) -> Result<PadeSystem> {
        let sys = ExponentSystem::new(unrats(&self.omega), self.rho.clone())?;
        if self.a.len() != sys.m() {
            return Err(Error::Parse(format!("expected {} polynomials, got {}", sys.m(), self.a.len())));
        }
        let normalization = sys.normalization();
        Ok(PadeSystem { sys, a: self.a.iter().map(|c| unpoly(c)).collect(), normalization })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WNthRootSystem {
    pub n: u32,
    pub m: u32,
    pub rho: u64,
    /// `A[h][k]` in the variable `w = 1 - z`.
    #[serde(rename = "A")]
    pub a: Vec<Vec<Vec<WRat>>>,
}

impl From<&NthRootSystem> for WNthRootSystem {
    fn from(s: &NthRootSystem) -> WNthRootSystem {
        WNthRootSystem {
            n: s.n,
            m: s.m,
            rho: s.rho,
            a: s.ahk.iter().map(|row| row.iter().map(poly).collect()).collect(),
        }
    }
}

impl WNthRootSystem {
    pub fn to_system(&self) -> Result<NthRootSystem> {
        let sys = crate::binomial::build_system(self.n, self.m, self.rho)?;
        let ahk: Vec<Vec<Poly>> =
            self.a.iter().map(|row| row.iter().map(|c| unpoly(c)).collect()).collect();
        if ahk != sys.ahk {
            return Err(Error::Parse("A does not match the system built from (n, m, rho)".into()));
        }
        Ok(sys)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WTriple {
    #[serde(rename = "S")]
    pub s: Vec<Vec<WRat>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Vec<WRat>>>,
    #[serde(rename = "U")]
    pub u: Vec<Vec<Vec<WRat>>>,
}

impl From<&crate::binomial::SpecializedTriple> for WTriple {
    fn from(t: &crate::binomial::SpecializedTriple) -> WTriple {
        WTriple {
            s: t.s.iter().map(poly).collect(),
            t: t.t.iter().map(bipoly).collect(),
            u: t.u.iter().map(bipoly).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WTarget {
    pub a: u64,
    pub b: u64,
    pub n: u32,
    pub m: u32,
    pub eps: WRat,
}

impl From<&Target> for WTarget {
    fn from(t: &Target) -> WTarget {
        WTarget { a: t.a, b: t.b, n: t.n, m: t.m, eps: WRat::from(&t.eps) }
    }
}

impl WTarget {
    pub fn to_target(&self) -> Result<Target> {
        Target::new(self.a, self.b, self.n, self.m, self.eps.0.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WPair {
    pub p1: WInt,
    pub q1: WInt,
    pub p2: WInt,
    pub q2: WInt,
    pub rho: u64,
    /// 1-based row index.
    pub h0: usize,
    #[serde(rename = "U")]
    pub u: WRat,
    pub w: WRat,
    pub y: WRat,
    pub theta1: WInterval,
    pub theta2: WInterval,
    pub sum_exceeds_two: bool,
    pub max_exceeds_one: bool,
}

impl From<&ApproxPair> for WPair {
    fn from(p: &ApproxPair) -> WPair {
        WPair {
            p1: WInt::from(&p.input.p1),
            q1: WInt::from(&p.input.q1),
            p2: WInt::from(&p.input.p2),
            q2: WInt::from(&p.input.q2),
            rho: p.rho,
            h0: p.h0 + 1,
            u: WRat::from(&p.u),
            w: WRat::from(&p.w),
            y: WRat::from(&p.y),
            theta1: WInterval::from(&p.theta1),
            theta2: WInterval::from(&p.theta2),
            sum_exceeds_two: p.sum_exceeds_two(),
            max_exceeds_one: p.max_exceeds_one(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WConstants {
    pub c1: WRat,
    pub c2: WRat,
    pub c3: WRat,
    pub c4: WRat,
    pub c5: WRat,
    pub traces: BTreeMap<String, Vec<String>>,
}

impl From<&BoundConstants> for WConstants {
    fn from(c: &BoundConstants) -> WConstants {
        let named: [(&str, &Bound); 5] = [("c1", &c.c1), ("c2", &c.c2), ("c3", &c.c3), ("c4", &c.c4), ("c5", &c.c5)];
        WConstants {
            c1: WRat::from(&c.c1.value),
            c2: WRat::from(&c.c2.value),
            c3: WRat::from(&c.c3.value),
            c4: WRat::from(&c.c4.value),
            c5: WRat::from(&c.c5.value),
            traces: named.iter().map(|(k, b)| (k.to_string(), b.trace.clone())).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WThresholds {
    #[serde(rename = "Q1min")]
    pub q1min: WInterval,
    #[serde(rename = "Q1min_ceil")]
    pub q1min_ceil: WInt,
    #[serde(rename = "Q2min_exponents")]
    pub q2min_exponents: [WRat; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WExponentCheck {
    pub theta: u8,
    /// `[const, rho coefficient]` for the exponents of `q1` and `q2`.
    pub derived_q1: [WRat; 2],
    pub derived_q2: [WRat; 2],
    pub target_q1: [WRat; 2],
    pub target_q2: [WRat; 2],
    pub steps: Vec<String>,
    pub holds: bool,
}

impl From<&ExponentCheck> for WExponentCheck {
    fn from(c: &ExponentCheck) -> WExponentCheck {
        let aff = |a: &crate::certify::Affine| [WRat::from(&a.c), WRat::from(&a.r)];
        WExponentCheck {
            theta: c.theta,
            derived_q1: aff(&c.derived.q1),
            derived_q2: aff(&c.derived.q2),
            target_q1: aff(&c.target.q1),
            target_q2: aff(&c.target.q2),
            steps: c.steps.clone(),
            holds: c.holds,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WCertificate {
    pub target: WTarget,
    pub mu: WRat,
    pub constants: WConstants,
    pub thresholds: WThresholds,
    pub exponent_checks: Vec<WExponentCheck>,
    pub statement: String,
    pub version: String,
}

impl From<&Certificate> for WCertificate {
    fn from(c: &Certificate) -> WCertificate {
        WCertificate {
            target: WTarget::from(&c.target),
            mu: WRat::from(&c.mu),
            constants: WConstants::from(&c.constants),
            thresholds: WThresholds {
                q1min: WInterval::from(&c.thresholds.q1min),
                q1min_ceil: WInt::from(&c.thresholds.q1min_ceil),
                q2min_exponents: [
                    WRat::from(&c.thresholds.q2min_exponents[0]),
                    WRat::from(&c.thresholds.q2min_exponents[1]),
                ],
            },
            exponent_checks: c.checks.iter().map(WExponentCheck::from).collect(),
            statement: c.statement.clone(),
            version: c.version.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WConvergent {
    pub index: usize,
    pub partial_quotient: WInt,
    pub p: WInt,
    pub q: WInt,
    pub in_band: bool,
    pub error: WInterval,
    /// Six decimals; diagnostic only.
    pub mu_emp: Option<String>,
    pub satisfies: bool,
    pub above_q1min: bool,
    pub legendre: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WHunt {
    pub target: WTarget,
    pub mu: WRat,
    #[serde(rename = "Q1min_ceil")]
    pub q1min_ceil: WInt,
    pub convergents: Vec<WConvergent>,
    pub violations: Vec<usize>,
    pub pair_violations: Vec<(usize, usize)>,
    pub clean: bool,
}

impl From<&HuntReport> for WHunt {
    fn from(h: &HuntReport) -> WHunt {
        WHunt {
            target: WTarget::from(&h.target),
            mu: WRat::from(&h.mu),
            q1min_ceil: WInt::from(&h.q1min_ceil),
            convergents: h
                .rows
                .iter()
                .map(|r| WConvergent {
                    index: r.index,
                    partial_quotient: WInt::from(&r.partial_quotient),
                    p: WInt::from(&r.p),
                    q: WInt::from(&r.q),
                    in_band: r.in_band,
                    error: WInterval::from(&r.error),
                    mu_emp: r.mu_emp.map(|v| format!("{v:.6}")),
                    satisfies: r.satisfies,
                    above_q1min: r.above_q1min,
                    legendre: r.legendre,
                })
                .collect(),
            violations: h.violations.clone(),
            pair_violations: h.pair_violations.clone(),
            clean: h.clean(),
        }
    }
}

/// Deterministic pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("wire types serialise");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}
