//! Exact scalar, polynomial and truncated power series arithmetic over
//! `BigRational`, plus the falling-factorial products that stand in for
//! every gamma quotient used elsewhere in the crate.

mod bipoly;
mod factorial;
mod poly;
mod series;

pub use bipoly::BiPoly;
pub use factorial::{
    binomial, factorial, falling_factorial, falling_factorial_derivative, rising_factorial,
};
pub use poly::{poly_divexact, poly_mul, Poly};
pub use series::{binomial_series, log_power_series, series_mul, series_pow, TruncSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Signed, Zero};

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn big(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: i64) -> BigRational {
    if e.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// True when `r` is in lowest terms with a positive denominator.
pub fn is_canonical(r: &BigRational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive()
        && r.numer().gcd(r.denom()).is_one()
        && (!r.numer().is_zero() || r.denom().is_one())
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational, crate::Error> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Integer power of a rational with a signed exponent.
pub fn rat_pow(r: &BigRational, e: i64) -> BigRational {
    num_traits::pow::Pow::pow(r, e as i32)
}
