use num_rational::BigRational;
use num_traits::One;

use crate::arith::{big, factorial, Poly};
use crate::error::{Error, Result};

/// Exponents `ω_1..ω_m` with multiplicities `ϱ_1..ϱ_m`.
///
/// Construction rejects any pair of exponents whose difference is an integer,
/// since the residue closed form would then divide by zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentSystem {
    omega: Vec<BigRational>,
    rho: Vec<u64>,
}

impl ExponentSystem {
    pub fn new(omega: Vec<BigRational>, rho: Vec<u64>) -> Result<Self> {
        if omega.is_empty() {
            return Err(Error::BadParams("need at least one exponent".into()));
        }
        if omega.len() != rho.len() {
            return Err(Error::BadParams(format!(
                "{} exponents but {} multiplicities",
                omega.len(),
                rho.len()
            )));
        }
        if rho.contains(&0) {
            return Err(Error::BadParams("multiplicities must be positive".into()));
        }
        for h in 0..omega.len() {
            for k in h + 1..omega.len() {
                if (&omega[h] - &omega[k]).is_integer() {
                    return Err(Error::InvalidSystem(omega[h].clone(), omega[k].clone()));
                }
            }
        }
        Ok(ExponentSystem { omega, rho })
    }

    pub fn omega(&self) -> &[BigRational] {
        &self.omega
    }

    pub fn rho(&self) -> &[u64] {
        &self.rho
    }

    pub fn m(&self) -> usize {
        self.omega.len()
    }

    /// Total multiplicity `σ = Σ ϱ_k`.
    pub fn sigma(&self) -> u64 {
        self.rho.iter().sum()
    }

    /// `Γ(ϱ_1)…Γ(ϱ_m)/Γ(σ)`, the coefficient of `z^{σ-1}` in the remainder.
    pub fn normalization(&self) -> BigRational {
        self.gamma_product() / big(factorial(self.sigma() - 1))
    }

    /// `Γ(ϱ_1)…Γ(ϱ_m)`.
    pub fn gamma_product(&self) -> BigRational {
        self.rho
            .iter()
            .fold(BigRational::one(), |acc, &r| acc * big(factorial(r - 1)))
    }

    /// Same exponents with `ϱ_h` raised by one (0-based `h`).
    pub fn bumped(&self, h: usize) -> ExponentSystem {
        let mut rho = self.rho.clone();
        rho[h] += 1;
        ExponentSystem { omega: self.omega.clone(), rho }
    }
}

/// The polynomials `A_1..A_m` together with the system they solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeSystem {
    pub sys: ExponentSystem,
    pub a: Vec<Poly>,
    pub normalization: BigRational,
}

impl PadeSystem {
    /// Checks `deg A_k = ϱ_k - 1` for every block.
    pub fn degrees_exact(&self) -> bool {
        self.a
            .iter()
            .zip(self.sys.rho())
            .all(|(p, &r)| p.degree() == Some((r - 1) as usize))
    }
}

/// Row `h` holds the coefficient polynomials for multiplicities `ϱ + e_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantSystem {
    pub sys: ExponentSystem,
    pub ahk: Vec<Vec<Poly>>,
}
