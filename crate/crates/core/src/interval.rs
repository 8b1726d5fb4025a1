//! Outward-rounded interval arithmetic on dyadic endpoints.
//!
//! An endpoint is `mant · 2^exp` with an arbitrary-precision mantissa. Each
//! operation computes the exact result and then rounds the lower endpoint
//! down and the upper endpoint up to `prec` significant bits, so every
//! interval encloses the true value of the expression it came from.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MIN_PREC: u32 = 64;
pub const MAX_PREC: u32 = 4096;
pub const DEFAULT_PREC: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// Exact dyadic number `mant · 2^exp`. The mantissa is odd unless it is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Float {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

impl Float {
    pub fn new(mant: BigInt, exp: i64) -> Float {
        if mant.is_zero() {
            return Float { mant, exp: 0 };
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        Float { mant: mant >> tz, exp: exp + tz as i64 }
    }

    pub fn zero() -> Float {
        Float { mant: BigInt::zero(), exp: 0 }
    }

    pub fn from_int(v: i64) -> Float {
        Float::new(BigInt::from(v), 0)
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Rounds to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Float {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let d = pow2(shift);
        let q = match dir {
            Round::Down => self.mant.div_floor(&d),
            Round::Up => -((-&self.mant).div_floor(&d)),
        };
        Float::new(q, self.exp + shift as i64)
    }

    /// `num / den` rounded in direction `dir` to `prec` bits; `den > 0`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32, dir: Round) -> Float {
        debug_assert!(den.is_positive());
        if num.is_zero() {
            return Float::zero();
        }
        let k = prec as i64 + 2 + den.bits() as i64 - num.bits() as i64;
        let (n, d) = if k >= 0 {
            (num << k as u64, den.clone())
        } else {
            (num.clone(), den << (-k) as u64)
        };
        let q = match dir {
            Round::Down => n.div_floor(&d),
            Round::Up => -((-n).div_floor(&d)),
        };
        Float::new(q, -k).round(prec, dir)
    }

    pub fn from_rational(r: &BigRational, prec: u32, dir: Round) -> Float {
        Float::from_ratio(r.numer(), r.denom(), prec, dir)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), pow2((-self.exp) as u64))
        }
    }

    fn align(a: &Float, b: &Float) -> (BigInt, BigInt, i64) {
        let e = a.exp.min(b.exp);
        (
            &a.mant << (a.exp - e) as u64,
            &b.mant << (b.exp - e) as u64,
            e,
        )
    }

    pub fn add_exact(&self, o: &Float) -> Float {
        let (a, b, e) = Float::align(self, o);
        Float::new(a + b, e)
    }

    pub fn mul_exact(&self, o: &Float) -> Float {
        Float::new(&self.mant * &o.mant, self.exp + o.exp)
    }

    pub fn neg(&self) -> Float {
        Float { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Float {
        Float { mant: self.mant.abs(), exp: self.exp }
    }

    /// `self / o` rounded; `o ≠ 0`.
    pub fn div_round(&self, o: &Float, prec: u32, dir: Round) -> Float {
        let (mut num, mut den) = (self.mant.clone(), o.mant.clone());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let q = Float::from_ratio(&num, &den, prec + 2, dir);
        Float::new(q.mant, q.exp + self.exp - o.exp).round(prec, dir)
    }

    /// Approximate `log2 |self|`; diagnostics only.
    pub fn log2_approx(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mant.bits();
        let shift = bits.saturating_sub(60);
        let top = (self.mant.abs() >> shift).to_f64().unwrap();
        top.log2() + shift as f64 + self.exp as f64
    }

    /// Approximate value as `f64`; diagnostics only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let shift = self.mant.bits().saturating_sub(62);
        let top = (&self.mant >> shift).to_f64().unwrap();
        let e = self.exp + shift as i64;
        // split the scaling so intermediate powers stay finite
        let half = (e / 2).clamp(-1100, 1100) as i32;
        let rest = (e - half as i64).clamp(-1100, 1100) as i32;
        top * 2f64.powi(half) * 2f64.powi(rest)
    }

    /// C99 hexadecimal floating literal, e.g. `0x1.8p+1` for 3.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0x0p+0".to_string();
        }
        let sign = if self.mant.is_negative() { "-" } else { "" };
        let mag = self.mant.abs();
        let bits = mag.bits();
        let frac_bits = bits - 1;
        let pad = (4 - frac_bits % 4) % 4;
        let frac = (&mag - pow2(frac_bits)) << pad;
        let e = self.exp + frac_bits as i64;
        let digits = ((frac_bits + pad) / 4) as usize;
        if digits == 0 {
            format!("{sign}0x1p{e:+}")
        } else {
            format!("{sign}0x1.{:0>width$}p{e:+}", frac.to_str_radix(16), width = digits)
        }
    }

    pub fn from_hex(s: &str) -> Result<Float> {
        let bad = || Error::Parse(format!("bad hex float {s:?}"));
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let body = body.strip_prefix("0x").ok_or_else(bad)?;
        let (mantissa, exp) = body.split_once('p').ok_or_else(bad)?;
        let exp: i64 = exp.parse().map_err(|_| bad())?;
        let (int_part, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        let digits = format!("{int_part}{frac}");
        let m = BigInt::parse_bytes(digits.as_bytes(), 16).ok_or_else(bad)?;
        let m = if neg { -m } else { m };
        Ok(Float::new(m, exp - 4 * frac.len() as i64))
    }
}

impl PartialOrd for Float {
    fn partial_cmp(&self, other: &Float) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Float {
    fn cmp(&self, other: &Float) -> Ordering {
        let (a, b, _) = Float::align(self, other);
        a.cmp(&b)
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Float,
    hi: Float,
    prec: u32,
}

impl Interval {
    pub fn new(lo: Float, hi: Float, prec: u32) -> Interval {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval { lo, hi, prec }
    }

    pub fn point(v: Float, prec: u32) -> Interval {
        Interval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_int(v: i64, prec: u32) -> Interval {
        Interval::point(Float::from_int(v), prec)
    }

    /// Tightest `prec`-bit enclosure of `r`; a point when `r` is dyadic
    /// and fits.
    pub fn from_rational(r: &BigRational, prec: u32) -> Interval {
        Interval {
            lo: Float::from_rational(r, prec, Round::Down),
            hi: Float::from_rational(r, prec, Round::Up),
            prec,
        }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(mut self, prec: u32) -> Interval {
        self.prec = prec;
        self
    }

    pub fn width(&self) -> BigRational {
        self.hi.to_rational() - self.lo.to_rational()
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        &self.lo.to_rational() <= r && r <= &self.hi.to_rational()
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    fn p(&self, o: &Interval) -> u32 {
        self.prec.max(o.prec)
    }

    fn rounded(lo: Float, hi: Float, prec: u32) -> Interval {
        Interval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up), prec }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::rounded(self.lo.add_exact(&o.lo), self.hi.add_exact(&o.hi), self.p(o))
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            self.lo.mul_exact(&o.lo),
            self.lo.mul_exact(&o.hi),
            self.hi.mul_exact(&o.lo),
            self.hi.mul_exact(&o.hi),
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::rounded(lo, hi, self.p(o))
    }

    pub fn mul_rational(&self, r: &BigRational) -> Interval {
        self.mul(&Interval::from_rational(r, self.prec))
    }

    /// Fails when the divisor contains zero.
    pub fn div(&self, o: &Interval) -> Result<Interval> {
        if o.contains_zero() {
            return Err(Error::Indeterminate("interval divisor contains zero".into()));
        }
        let prec = self.p(o);
        let mut lows = Vec::with_capacity(4);
        let mut highs = Vec::with_capacity(4);
        for a in [&self.lo, &self.hi] {
            for b in [&o.lo, &o.hi] {
                lows.push(a.div_round(b, prec, Round::Down));
                highs.push(a.div_round(b, prec, Round::Up));
            }
        }
        Ok(Interval {
            lo: lows.into_iter().min().unwrap(),
            hi: highs.into_iter().max().unwrap(),
            prec,
        })
    }

    pub fn abs(&self) -> Interval {
        if self.lo.signum() >= 0 {
            self.clone()
        } else if self.hi.signum() <= 0 {
            self.neg()
        } else {
            let hi = self.lo.abs().max(self.hi.abs());
            Interval { lo: Float::zero(), hi, prec: self.prec }
        }
    }

    pub fn powi(&self, e: u32) -> Interval {
        if e == 0 {
            return Interval::from_int(1, self.prec);
        }
        // |x|^e then restore the sign for odd powers of negative intervals
        let base = if e % 2 == 0 { self.abs() } else { self.clone() };
        let mut acc = Interval::from_int(1, self.prec);
        let mut b = base;
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Union hull.
    pub fn hull(&self, o: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
            prec: self.p(o),
        }
    }

    /// `[-r, r]`
    pub fn symmetric(r: Float, prec: u32) -> Interval {
        let r = r.abs();
        Interval { lo: r.neg(), hi: r, prec }
    }

    /// `true`/`false` when `self < o` is decided, `None` when they overlap.
    pub fn lt(&self, o: &Interval) -> Option<bool> {
        if self.hi < o.lo {
            Some(true)
        } else if self.lo >= o.hi {
            Some(false)
        } else {
            None
        }
    }

    pub fn le(&self, o: &Interval) -> Option<bool> {
        if self.hi <= o.lo {
            Some(true)
        } else if self.lo > o.hi {
            Some(false)
        } else {
            None
        }
    }

    /// Integer part when both endpoints agree on it.
    pub fn floor(&self) -> Option<BigInt> {
        let f = |v: &Float| {
            let r = v.to_rational();
            r.numer().div_floor(r.denom())
        };
        let lo = f(&self.lo);
        (lo == f(&self.hi)).then_some(lo)
    }

    pub fn midpoint_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Enclosure of `r^{1/n}` for rational `r > 0`, via the integer n-th root of
/// `r · 2^{nk}`. Doubling `prec` yields a nested interval, and the width is
/// at most `2^{-(prec-1)}` relative to the root.
pub fn nth_root_rational(r: &BigRational, n: u32, prec: u32) -> Interval {
    assert!(r.is_positive(), "nth_root_rational needs r > 0");
    assert!(n >= 1);
    let num = r.numer();
    let den = r.denom();
    // want the integer root to carry at least prec + 1 bits
    let target = n as i64 * (prec as i64 + 2);
    let have = num.bits() as i64 - den.bits() as i64;
    let k = ((target - have).max(0) + n as i64 - 1) / n as i64;
    let scaled = (num << (n as i64 * k) as u64).div_floor(den);
    let root = scaled.nth_root(n);
    let exact = num_traits::pow(root.clone(), n as usize) * den == (num << (n as i64 * k) as u64);
    let lo = Float::new(root.clone(), -k);
    let hi = if exact { lo.clone() } else { Float::new(root + 1, -k) };
    Interval { lo, hi, prec }
}

/// Enclosure of `(a/b)^{1/n}`.
pub fn nth_root_interval(a: u64, b: u64, n: u32, prec: u32) -> Interval {
    nth_root_rational(&BigRational::new(a.into(), b.into()), n, prec)
}

/// `x^{1/n}` for an interval of positive numbers.
pub fn nth_root_of(x: &Interval, n: u32) -> Interval {
    assert!(x.is_positive(), "nth_root_of needs a positive interval");
    let lo = nth_root_rational(&x.lo.to_rational(), n, x.prec).lo;
    let hi = nth_root_rational(&x.hi.to_rational(), n, x.prec).hi;
    Interval { lo, hi, prec: x.prec }
}

/// `Σ (-1)^j / ((2j+1) k^{2j+1})` with the alternating-series tail bound.
fn atan_inv(k: u64, prec: u32) -> Interval {
    let work = prec + 16;
    let tiny = BigRational::new(BigInt::one(), pow2(work as u64 + 8));
    let mut acc = Interval::from_int(0, work);
    let mut j = 0u64;
    loop {
        let denom = BigInt::from(2 * j + 1) * num_traits::pow(BigInt::from(k), (2 * j + 1) as usize);
        let term = BigRational::new(BigInt::one(), denom);
        if term < tiny {
            let tail = Float::from_rational(&term, work, Round::Up);
            return acc.add(&Interval::symmetric(tail, work));
        }
        let t = Interval::from_rational(&term, work);
        acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        j += 1;
    }
}

/// Enclosure of π by Machin's formula.
pub fn pi(prec: u32) -> Interval {
    let a = atan_inv(5, prec).mul(&Interval::from_int(16, prec + 16));
    let b = atan_inv(239, prec).mul(&Interval::from_int(4, prec + 16));
    let r = a.sub(&b);
    Interval::rounded(r.lo, r.hi, prec)
}

/// Enclosure of `sin x` for `|x| ≤ 4` by Taylor series plus remainder bound.
pub fn sin(x: &Interval) -> Interval {
    let prec = x.prec;
    let work = prec + 16;
    let x = x.clone().with_prec(work);
    let bound = Float::from_int(4);
    assert!(x.abs().hi <= bound, "sin enclosure needs |x| <= 4");
    let x2 = x.mul(&x);
    let mut term = x.clone();
    let mut acc = x.clone();
    let mut j = 1u64;
    let tiny = Float::new(BigInt::one(), -(work as i64) - 8);
    loop {
        // term_j = (-1)^j x^{2j+1} / (2j+1)!
        let d = BigRational::from_integer(BigInt::from((2 * j) * (2 * j + 1)));
        term = term.mul(&x2).div(&Interval::from_rational(&d, work)).unwrap().neg();
        if term.abs().hi < tiny {
            // next omitted term bounds the tail since |x| <= 4 gives decreasing terms here
            let tail = term.abs().hi;
            acc = acc.add(&Interval::symmetric(tail, work));
            break;
        }
        acc = acc.add(&term);
        j += 1;
    }
    Interval::rounded(acc.lo, acc.hi, prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn rounding_directions() {
        let third = rat(1, 3);
        let iv = Interval::from_rational(&third, 64);
        assert!(iv.contains_rational(&third));
        assert!(iv.width() < BigRational::new(BigInt::one(), pow2(62)));
        let neg = Interval::from_rational(&-third.clone(), 64);
        assert!(neg.contains_rational(&-third));
        let exact = Interval::from_rational(&rat(3, 8), 64);
        assert_eq!(exact.lo(), exact.hi());
    }

    #[test]
    fn hex_round_trip() {
        for v in [Float::from_int(3), Float::new(BigInt::from(-12345), -20), Float::from_int(1), Float::zero()] {
            let s = v.to_hex();
            assert_eq!(Float::from_hex(&s).unwrap(), v, "{s}");
        }
        assert_eq!(Float::from_int(3).to_hex(), "0x1.8p+1");
        assert_eq!(Float::from_int(1).to_hex(), "0x1p+0");
    }

    #[test]
    fn cube_root_of_two() {
        let iv = nth_root_interval(2, 1, 3, 64);
        assert!((iv.midpoint_f64() - 1.259921049894873).abs() < 1e-15);
        assert!(iv.lo().to_rational().pow(3) <= int(2) && int(2) <= iv.hi().to_rational().pow(3));
        // width < 2^-60 * 2
        assert!(iv.width() < BigRational::new(BigInt::from(2), pow2(60)));
        // cube contains 2
        assert!(iv.powi(3).contains_rational(&int(2)));
        let one = nth_root_interval(1, 1, 5, 64);
        assert_eq!(one.lo(), one.hi());
        assert_eq!(one.lo(), &Float::from_int(1));
    }

    #[test]
    fn refinement_nests() {
        let mut prev = nth_root_interval(7, 3, 5, 64);
        for prec in [128, 256, 512] {
            let next = nth_root_interval(7, 3, 5, prec);
            assert!(prev.contains(&next));
            prev = next;
        }
    }

    #[test]
    fn pi_and_sin() {
        let p = pi(128);
        assert!(p.lo().to_f64() <= std::f64::consts::PI && std::f64::consts::PI <= p.hi().to_f64());
        assert!(p.width() < BigRational::new(BigInt::one(), pow2(120)));
        let s = sin(&p.div(&Interval::from_int(6, 128)).unwrap());
        assert!(s.contains_rational(&rat(1, 2)));
        assert!(s.width() < BigRational::new(BigInt::one(), pow2(100)));
        let s3 = sin(&p.div(&Interval::from_int(3, 128)).unwrap());
        // sin(pi/3)^2 = 3/4
        assert!(s3.powi(2).contains_rational(&rat(3, 4)));
    }

    #[test]
    fn division_and_floor() {
        let a = Interval::from_int(7, 64);
        let b = Interval::from_int(2, 64);
        let q = a.div(&b).unwrap();
        assert_eq!(q.floor(), Some(BigInt::from(3)));
        assert!(a.div(&Interval::symmetric(Float::from_int(1), 64)).is_err());
        let neg = Interval::from_int(-7, 64).div(&b).unwrap();
        assert_eq!(neg.floor(), Some(BigInt::from(-4)));
    }
}
