use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{big, factorial, rising_factorial, Poly};
use crate::error::{Error, Result};

use super::{construct_residue, DeterminantSystem, ExponentSystem};

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination over `Q[z]`. Every intermediate division is exact.
pub fn poly_det(matrix: &[Vec<Poly>]) -> Result<Poly> {
    let n = matrix.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut m: Vec<Vec<Poly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

pub fn determinant_system(sys: &ExponentSystem) -> Result<DeterminantSystem> {
    let ahk = (0..sys.m())
        .map(|h| construct_residue(&sys.bumped(h)).map(|ps| ps.a))
        .collect::<Result<Vec<_>>>()?;
    Ok(DeterminantSystem { sys: sys.clone(), ahk })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaReport {
    pub delta: BigRational,
    pub det: Poly,
}

/// `Δ(z) = det[A_hk(z)]`, checked to be exactly `δ z^σ` with `δ ≠ 0`.
pub fn determinant_delta(sys: &ExponentSystem) -> Result<DeltaReport> {
    let ds = determinant_system(sys)?;
    let det = poly_det(&ds.ahk)?;
    let sigma = sys.sigma() as usize;
    let delta = det.coeff(sigma);
    let pure = det.degree() == Some(sigma) && det.valuation() == Some(sigma);
    if !pure || delta.is_zero() {
        return Err(Error::IdentityViolation(format!(
            "determinant {det} is not a nonzero multiple of z^{sigma}"
        )));
    }
    Ok(DeltaReport { delta, det })
}

/// `∏_{h≠k} Γ(ω_h-ω_k) Γ(ϱ_k) / Γ(ϱ_k+ω_h-ω_k)`, each factor evaluated as
/// `(ϱ_k-1)! / (ω_h-ω_k)_{ϱ_k}`. The leading `∓` is left off.
pub fn footnote_delta(sys: &ExponentSystem) -> BigRational {
    let mut acc = BigRational::one();
    for h in 0..sys.m() {
        for k in (0..sys.m()).filter(|&k| k != h) {
            let diff = &sys.omega()[h] - &sys.omega()[k];
            let rho = sys.rho()[k];
            acc *= big(factorial(rho - 1)) / rising_factorial(&diff, rho);
        }
    }
    acc
}

/// Both values of `δ` side by side. They are not expected to agree; the
/// ratio is reported as found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaComparison {
    pub determinant: BigRational,
    pub footnote: BigRational,
    /// `footnote / determinant`, signs carried as computed.
    pub ratio: BigRational,
}

impl DeltaComparison {
    pub fn magnitude_ratio(&self) -> BigRational {
        self.ratio.abs()
    }
}

pub fn compare_delta(sys: &ExponentSystem) -> Result<DeltaComparison> {
    let determinant = determinant_delta(sys)?.delta;
    let footnote = footnote_delta(sys);
    let ratio = &footnote / &determinant;
    Ok(DeltaComparison { determinant, footnote, ratio })
}

