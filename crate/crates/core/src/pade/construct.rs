use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{
    big, binomial_series, falling_factorial, falling_factorial_derivative, log_power_series,
    sign_pow, Poly, TruncSeries,
};
use crate::error::{Error, Result};

use super::{ExponentSystem, PadeSystem};

/// `Φ'(ω_k + h)` through its block factorisation `F'_k · ∏_{x≠k} F_x`.
pub fn phi_prime(sys: &ExponentSystem, k: usize, h: u64) -> BigRational {
    let omega = sys.omega();
    let rho = sys.rho();
    let zv = &omega[k] + BigRational::from_integer(BigInt::from(h));
    let mut acc = falling_factorial_derivative(&zv, &omega[k], rho[k]);
    for x in (0..sys.m()).filter(|&x| x != k) {
        acc *= falling_factorial(&zv, &omega[x], rho[x]);
    }
    acc
}

/// Coefficients of `A_k` in the basis `(1-z)^h`, i.e. `A_k` as a polynomial
/// in `w = 1 - z`.
pub fn residue_block_in_w(sys: &ExponentSystem, k: usize) -> Poly {
    let prefactor = sign_pow(sys.sigma() as i64 - 1) * sys.gamma_product();
    Poly::new(
        (0..sys.rho()[k])
            .map(|h| &prefactor / phi_prime(sys, k, h))
            .collect(),
    )
}

/// `A_k = (-1)^{σ-1} Γ(ϱ_1)…Γ(ϱ_m) Σ_h (1-z)^h / Φ'(ω_k+h)`, expanded in `z`.
pub fn construct_residue(sys: &ExponentSystem) -> Result<PadeSystem> {
    // ExponentSystem::new already rejects integer differences
    let a = (0..sys.m())
        .map(|k| residue_block_in_w(sys, k).reflect())
        .collect();
    Ok(PadeSystem { sys: sys.clone(), a, normalization: sys.normalization() })
}

/// Independent construction: solve the homogeneous order conditions
/// `a_l = 0 (l < σ-1)` for the σ unknown coefficients and rescale.
pub fn construct_linsolve(sys: &ExponentSystem, len: usize) -> Result<PadeSystem> {
    let sigma = sys.sigma() as usize;
    if len < sigma {
        return Err(Error::Precondition(format!("len {len} < sigma {sigma}")));
    }
    let series: Vec<TruncSeries> = sys.omega().iter().map(|w| binomial_series(w, len)).collect();

    // column (k, j) holds the series of z^j (1-z)^{ω_k}
    let mut columns = Vec::with_capacity(sigma);
    for (k, &r) in sys.rho().iter().enumerate() {
        for j in 0..r as usize {
            columns.push((k, j));
        }
    }
    let entry = |l: usize, (k, j): (usize, usize)| -> BigRational {
        if l >= j {
            series[k].coeff(l - j).clone()
        } else {
            BigRational::zero()
        }
    };
    let mut mat: Vec<Vec<BigRational>> = (0..sigma - 1)
        .map(|l| columns.iter().map(|&c| entry(l, c)).collect())
        .collect();

    let null = null_vector(&mut mat, sigma)?;

    let mut a = Vec::with_capacity(sys.m());
    let mut it = null.into_iter();
    for &r in sys.rho() {
        a.push(Poly::new(it.by_ref().take(r as usize).collect()));
    }
    let lead: BigRational = columns
        .iter()
        .map(|&(k, j)| a[k].coeff(j) * entry(sigma - 1, (k, j)))
        .sum();
    if lead.is_zero() {
        return Err(Error::IdentityViolation(
            "null vector has vanishing coefficient at z^(sigma-1)".into(),
        ));
    }
    let scale = sys.normalization() / lead;
    let a = a.iter().map(|p| p.scale(&scale)).collect();
    Ok(PadeSystem { sys: sys.clone(), a, normalization: sys.normalization() })
}

/// Reduces `mat` (rows × ncols) to row echelon form and returns the unique
/// null vector, failing unless the null space is one-dimensional.
fn null_vector(mat: &mut [Vec<BigRational>], ncols: usize) -> Result<Vec<BigRational>> {
    let nrows = mat.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        let inv = BigRational::one() / &mat[row][col];
        for c in col..ncols {
            mat[row][c] *= &inv;
        }
        for r in 0..nrows {
            if r != row && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..ncols {
                    let delta = &f * &mat[row][c];
                    mat[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let nullity = ncols - pivots.len();
    if nullity != 1 {
        return Err(Error::SingularSystem(nullity));
    }
    let free = (0..ncols).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![BigRational::zero(); ncols];
    v[free] = BigRational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -mat[r][free].clone();
    }
    Ok(v)
}

/// `R = Σ A_k (1-z)^{ω_k}` modulo `z^len`.
pub fn remainder_series(ps: &PadeSystem, len: usize) -> TruncSeries {
    ps.a.iter()
        .zip(ps.sys.omega())
        .fold(TruncSeries::zero(len), |acc, (a, w)| {
            acc.add(&binomial_series(w, len).mul_poly(a))
        })
}

/// `b_0..b_{count-1}` from `∏ (1 - r/𝔷)^{-1} = Σ b_l 𝔷^{-l}` over the roots
/// `r = ω_k + h`; these are the complete homogeneous symmetric sums.
pub fn inverse_root_expansion(sys: &ExponentSystem, count: usize) -> Vec<BigRational> {
    let mut acc = TruncSeries::one(count);
    for (w, &r) in sys.omega().iter().zip(sys.rho()) {
        for h in 0..r {
            let root = w + BigRational::from_integer(BigInt::from(h));
            let mut geo = Vec::with_capacity(count);
            let mut p = BigRational::one();
            for _ in 0..count {
                geo.push(p.clone());
                p *= &root;
            }
            acc = acc.mul(&TruncSeries::new(geo, count));
        }
    }
    acc.coeffs().to_vec()
}

/// `(-1)^{σ-1} Γ(ϱ_1)…Γ(ϱ_m) Σ_l b_l log(1-z)^{σ+l-1} / (σ+l-1)!` modulo `z^len`.
pub fn log_rep_series(sys: &ExponentSystem, len: usize) -> Result<TruncSeries> {
    let sigma = sys.sigma() as usize;
    if len < sigma {
        return Err(Error::Precondition(format!("len {len} < sigma {sigma}")));
    }
    let b = inverse_root_expansion(sys, len - sigma + 1);
    let log = log_power_series(len);
    let mut power = log.pow(sigma as u32 - 1);
    let mut fact = big(crate::arith::factorial(sigma as u64 - 1));
    let mut out = TruncSeries::zero(len);
    for (l, bl) in b.iter().enumerate() {
        if l > 0 {
            power = power.mul(&log);
            fact *= big(BigInt::from(sigma + l - 1));
        }
        out = out.add(&power.scale(&(bl / &fact)));
    }
    Ok(out.scale(&(sign_pow(sigma as i64 - 1) * sys.gamma_product())))
}

/// Outcome of comparing `d^{ϱ_1}/dz^{ϱ_1} [(1-z)^{-ω_1} R]` with the
/// remainder of the shifted (m-1)-block system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub shifted: ExponentSystem,
    pub scale: BigRational,
    pub expected_scale: BigRational,
    pub equal_up_to_scale: bool,
}

pub fn differential_shift_check(sys: &ExponentSystem, len: usize) -> Result<ShiftReport> {
    if sys.m() < 2 {
        return Err(Error::NotApplicable("shift needs at least two blocks".into()));
    }
    let rho1 = sys.rho()[0];
    let sigma = sys.sigma();
    if (len as u64) < sigma + rho1 {
        return Err(Error::Precondition(format!(
            "len {len} < sigma + rho_1 = {}",
            sigma + rho1
        )));
    }
    let w1 = &sys.omega()[0];
    let shift = w1 + BigRational::from_integer(BigInt::from(rho1));
    let shifted = ExponentSystem::new(
        sys.omega()[1..].iter().map(|w| w - &shift).collect(),
        sys.rho()[1..].to_vec(),
    )?;

    let ps = construct_residue(sys)?;
    let mut lhs = binomial_series(&-w1.clone(), len).mul(&remainder_series(&ps, len));
    for _ in 0..rho1 {
        lhs = lhs.derivative();
    }
    let rhs = remainder_series(&construct_residue(&shifted)?, lhs.order());

    let lead = shifted.sigma() as usize - 1;
    let scale = lhs.coeff(lead) / rhs.coeff(lead);
    let equal_up_to_scale = lhs == rhs.scale(&scale);
    Ok(ShiftReport {
        shifted,
        scale,
        expected_scale: big(crate::arith::factorial(rho1 - 1)),
        equal_up_to_scale,
    })
}
