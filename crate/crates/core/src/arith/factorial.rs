use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `F(zv | ω, ϱ) = ∏_{h=0}^{ϱ-1} (zv - ω - h)`.
pub fn falling_factorial(zv: &BigRational, omega: &BigRational, rho: u64) -> BigRational {
    assert!(rho >= 1, "falling_factorial needs rho >= 1");
    let base = zv - omega;
    (0..rho).fold(BigRational::one(), |acc, h| acc * (&base - BigRational::from_integer(h.into())))
}

/// Derivative in `zv` of [`falling_factorial`].
///
/// If `zv = ω + h0` with `0 <= h0 < ϱ` the sum collapses to the product of the
/// surviving factors, `∏_{h≠h0} (h0 - h)`.
pub fn falling_factorial_derivative(zv: &BigRational, omega: &BigRational, rho: u64) -> BigRational {
    assert!(rho >= 1, "falling_factorial_derivative needs rho >= 1");
    let base = zv - omega;
    let factors: Vec<BigRational> = (0..rho)
        .map(|h| &base - BigRational::from_integer(h.into()))
        .collect();
    if let Some(h0) = factors.iter().position(Zero::is_zero) {
        return factors
            .iter()
            .enumerate()
            .filter(|&(h, _)| h != h0)
            .fold(BigRational::one(), |acc, (_, f)| acc * f);
    }
    let total = factors.iter().fold(BigRational::one(), |acc, f| acc * f);
    factors
        .iter()
        .fold(BigRational::zero(), |acc, f| acc + &total / f)
}

/// `(a)_ϱ = a (a+1) … (a+ϱ-1)`, equal to `Γ(a+ϱ)/Γ(a)`.
pub fn rising_factorial(a: &BigRational, rho: u64) -> BigRational {
    (0..rho).fold(BigRational::one(), |acc, h| acc * (a + BigRational::from_integer(h.into())))
}
