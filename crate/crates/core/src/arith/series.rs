use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Poly;

/// Power series known modulo `t^order`.
///
/// The coefficient vector always has exactly `order` entries. Binary
/// operations produce the smaller of the two orders; nothing ever extends a
/// truncation silently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    /// Pads with zeros or truncates `coeffs` to length `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order, BigRational::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::new(vec![BigRational::one()], order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncSeries::new(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot extend a series");
        TruncSeries { coeffs: self.coeffs[..order].to_vec() }
    }

    pub fn add(&self, other: &TruncSeries) -> Self {
        let order = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> Self {
        let order = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &TruncSeries) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Product with a polynomial, keeping this series' order.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        self.mul(&TruncSeries::from_poly(p, self.order()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TruncSeries::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        }
    }
}

/// First `len` coefficients of `(1 - t)^ω`.
pub fn binomial_series(omega: &BigRational, len: usize) -> TruncSeries {
    assert!(len >= 1, "binomial_series needs len >= 1");
    let mut coeffs = Vec::with_capacity(len);
    let mut c = BigRational::one();
    for j in 0..len {
        coeffs.push(c.clone());
        let j = BigRational::from_integer(BigInt::from(j));
        c = c * (&j - omega) / (j + BigRational::one());
    }
    TruncSeries { coeffs }
}

/// First `len` coefficients of `log(1 - t) = -Σ t^j / j`.
pub fn log_power_series(len: usize) -> TruncSeries {
    let coeffs = (0..len)
        .map(|j| match j {
            0 => BigRational::zero(),
            _ => -BigRational::new(BigInt::one(), BigInt::from(j)),
        })
        .collect();
    TruncSeries { coeffs }
}

pub fn series_pow(s: &TruncSeries, e: u32) -> TruncSeries {
    s.pow(e)
}

pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
    a.mul(b)
}
