//! Rigorous magnitudes: the denominator constant `c1`, the uniform bounds
//! `c2` for `𝔖_h` and `c3` for `𝔗_h`, the derived `c4`, `c5`, and interval
//! evaluation of the specialised polynomials.
//!
//! Every constant is a positive rational together with the chain of
//! inequalities that produced it. Irrational intermediate quantities are
//! enclosed at [`CONST_PREC`] bits and rounded up to six decimals, so the
//! constants never depend on the user's working precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{big, factorial, falling_factorial_derivative, int, BiPoly, Poly};
use crate::binomial::NthRootSystem;
use crate::error::{Error, Result};
use crate::interval::{self, Float, Interval};

/// Working precision for the constants themselves.
pub const CONST_PREC: u32 = 128;

/// A constant with its derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: BigRational,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundConstants {
    pub c1: Bound,
    pub c2: Bound,
    pub c3: Bound,
    pub c4: Bound,
    pub c5: Bound,
}

/// Smallest multiple of `10^-6` that is `>= v`.
pub fn ceil_micro(v: &Float) -> BigRational {
    let scale = BigInt::from(1_000_000u32);
    let r = v.to_rational() * big(scale.clone());
    let c = -((-r.numer()).div_floor(r.denom()));
    BigRational::new(c, scale)
}

fn upper(iv: &Interval) -> BigRational {
    ceil_micro(iv.hi())
}

fn check_nm(n: u32, m: u32) -> Result<()> {
    if n < 3 || m < 2 || m > n {
        return Err(Error::BadParams(format!("need n >= 3 and 2 <= m <= n; got n={n} m={m}")));
    }
    Ok(())
}

/// LCM of the denominators of every coefficient of every `A_hk(z)`.
pub fn maier_lcm(sys: &NthRootSystem) -> BigInt {
    let mut acc = BigInt::one();
    for h in 0..sys.m as usize {
        for k in 0..sys.m as usize {
            acc = acc.lcm(&sys.a_in_z(h, k).denominator_lcm());
        }
    }
    acc
}

pub fn lcm_up_to(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)))
}

/// `lcm(1..nϱ+m-1)^{m-1}`, a proven multiple of [`maier_lcm`].
///
/// Each factor `Γ(ϱ')/F(ω_k+l | ω_x, ϱ')` has a denominator dividing
/// `lcm(1..M)` with `M = nϱ+m-1` the largest `|k-x+n(l-j)|`.
pub fn maier_divisor_bound(n: u32, m: u32, rho: u64) -> BigInt {
    num_traits::pow(
        lcm_up_to(n as u64 * rho + m as u64 - 1),
        m as usize - 1,
    )
}

/// `3^{(m-1)(n+m-1)}`: since `lcm(1..N) < 3^N`, the denominators are below
/// this base to the power `ϱ` for every `ϱ >= 1`.
pub fn maier_base(n: u32, m: u32) -> BigInt {
    num_traits::pow(BigInt::from(3), ((m - 1) * (n + m - 1)) as usize)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaierRow {
    pub rho: u64,
    pub lcm: BigInt,
    /// `lcm^{1/ϱ}`, approximate.
    pub growth: f64,
    pub divides_bound: bool,
    pub below_base_power: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaierTable {
    pub n: u32,
    pub m: u32,
    pub rows: Vec<MaierRow>,
    pub base: BigInt,
    /// Largest observed `lcm^{1/ϱ}`.
    pub empirical_sup: f64,
}

impl MaierTable {
    pub fn all_bounded(&self) -> bool {
        self.rows.iter().all(|r| r.divides_bound && r.below_base_power)
    }
}

pub fn maier_growth_table(n: u32, m: u32, max_rho: u64) -> Result<MaierTable> {
    check_nm(n, m)?;
    let base = maier_base(n, m);
    let mut rows = Vec::new();
    for rho in 1..=max_rho {
        let sys = crate::binomial::build_system(n, m, rho)?;
        let lcm = maier_lcm(&sys);
        let bound = maier_divisor_bound(n, m, rho);
        let growth = (Float::new(lcm.clone(), 0).log2_approx() / rho as f64).exp2();
        rows.push(MaierRow {
            rho,
            divides_bound: (&bound % &lcm).is_zero(),
            below_base_power: lcm <= num_traits::pow(base.clone(), rho as usize),
            lcm,
            growth,
        });
    }
    let empirical_sup = rows.iter().map(|r| r.growth).fold(0.0, f64::max);
    Ok(MaierTable { n, m, rows, base, empirical_sup })
}

/// `(-1)^{ϱ'} ∏_{j=1}^{ϱ'} jn / (jn + K)` with `ϱ' = ϱ + δ_hx` and
/// `K = -nl + x - k - n`. Indices `h, k, x` are 1-based.
pub fn coefficient_k_formula(
    n: u32,
    m: u32,
    rho: u64,
    h: u32,
    k: u32,
    l: u64,
    x: u32,
) -> Result<BigRational> {
    for (name, idx) in [("h", h), ("k", k), ("x", x)] {
        if idx < 1 || idx > m {
            return Err(Error::BadParams(format!("{name} = {idx} outside 1..={m}")));
        }
    }
    let rho_x = rho + u64::from(h == x);
    let kk = -(n as i64) * l as i64 + x as i64 - k as i64 - n as i64;
    let mut acc = crate::arith::sign_pow(rho_x as i64);
    for j in 1..=rho_x {
        let jn = j as i64 * n as i64;
        let den = jn + kk;
        if den == 0 {
            return Err(Error::DivisionByZero { index: j });
        }
        acc *= crate::arith::rat(jn, den);
    }
    Ok(acc)
}

/// Coefficient of `(1-z)^l` in `A_hk` reassembled from the factorised
/// product `∏_x ϱ_x'! / F^(')(…)`, divided by the residue-form coefficient.
/// Returns the ratio for every `(h, k, l)`; the displayed prefactor in the
/// factorised form is `∏_x ϱ_x' = (ϱ+1) ϱ^{m-1}` if the two agree.
pub fn k_formula_ratios(sys: &NthRootSystem) -> Result<Vec<((u32, u32, u64), BigRational)>> {
    let (n, m, rho) = (sys.n, sys.m, sys.rho);
    let mut out = Vec::new();
    for h in 1..=m {
        for k in 1..=m {
            let rho_k = rho + u64::from(h == k);
            let omega_k = crate::arith::rat(k as i64 - 1, n as i64);
            for l in 0..rho_k {
                let zv = &omega_k + int(l as i64);
                let mut prod = big(factorial(rho_k))
                    / falling_factorial_derivative(&zv, &omega_k, rho_k);
                for x in (1..=m).filter(|&x| x != k) {
                    prod *= coefficient_k_formula(n, m, rho, h, k, l, x)?;
                }
                prod *= crate::arith::sign_pow((m as u64 * rho) as i64);
                let c = sys.ahk[(h - 1) as usize][(k - 1) as usize].coeff(l as usize);
                out.push(((h, k, l), prod / c));
            }
        }
    }
    Ok(out)
}

/// `c2 = (3n/2)^m · 2^m`, so `|𝔖_h(x)| <= c2^ϱ` on the band.
pub fn derive_c2(n: u32, m: u32) -> Result<Bound> {
    check_nm(n, m)?;
    let three_n_half = crate::arith::rat(3 * n as i64, 2);
    let value = num_traits::pow(three_n_half.clone(), m as usize) * big(BigInt::from(1u64 << m));
    let trace = vec![
        "band: (2/3)^(1/n) <= x <= (3/2)^(1/n), so |z| = |1 - x^n| <= 1/2".to_string(),
        "R_h(z) = z^(m rho) J with J over the simplex 1 >= u_1 >= ... >= u_(m-1) >= 0".to_string(),
        "each denominator factor 1 - z u_i lies in [1/2, 3/2], so (1 - z u_i)^(1/n - rho_i') <= 2^(rho_i')".to_string(),
        "sum_(i<m) rho_i' <= (m-1) rho + 1, numerator integrates to prod (rho_i'-1)!/(m rho)! <= 1".to_string(),
        "|J| <= 2^((m-1) rho + 1) <= 2^(m rho)".to_string(),
        format!("|1 + x + ... + x^(n-1)| <= n (3/2)^((n-1)/n) <= 3n/2 = {three_n_half}"),
        "S_h(x) = (-(1 + ... + x^(n-1)))^(m rho) J, |S_h| <= ((3n/2) 2)^(m rho)".to_string(),
        "volume factor 1 (the Dirichlet integral is at most 1)".to_string(),
        format!("c2 = (3n/2)^m 2^m = {value}"),
    ];
    Ok(Bound { value, trace })
}

/// Lower bound for `min_{1<=j<m} sin(jπ/n)`.
pub fn min_sine(n: u32, m: u32, prec: u32) -> Interval {
    let pi = interval::pi(prec);
    (1..m)
        .map(|j| {
            let jj = j.min(n - j);
            interval::sin(&pi.mul(&Interval::from_rational(&crate::arith::rat(jj as i64, n as i64), prec)))
        })
        .reduce(|a, b| if a.lo() <= b.lo() { a } else { b })
        .expect("m >= 2")
}

/// `c3 = Σ_{k=2}^m (k-1) B^{k-2} · (π / sin(π/n))^{m-1} · 5 · 2^{m-2}` with
/// `B = (3/2)^{2/n}` bounding `|x|` and `|y|` on the band.
pub fn derive_c3(n: u32, m: u32) -> Result<Bound> {
    check_nm(n, m)?;
    let prec = CONST_PREC;
    let pi = interval::pi(prec);
    let s = min_sine(n, m, prec);
    let q = Interval::from_int(1, prec)
        .div(&s.mul(&Interval::from_int(2, prec)))?;
    let b = interval::nth_root_rational(&crate::arith::rat(9, 4), n, prec);
    let mut w = Interval::from_int(0, prec);
    for k in 2..=m {
        w = w.add(&b.powi(k - 2).mul(&Interval::from_int(k as i64 - 1, prec)));
    }
    let per_factor = pi.div(&s)?;
    let prefactor = w.mul(&per_factor.powi(m - 1));
    let geometric = Interval::from_int(5 * (1i64 << (m - 2)), prec);
    let total = prefactor.mul(&geometric);
    let value = upper(&total);
    let trace = vec![
        format!("|Q_k| = prod_(x != k) 1/(2 sin(|k-x| pi/n)) <= (1/(2 sin(pi/n)))^(m-1), 1/(2 sin(pi/n)) in {q}"),
        "Gamma(rho')/F(omega_k + l | omega_x, rho') = i(-1)^(rho'-l)/(2 sin((omega_k-omega_x)pi)) int_G t^(...) (1+t)^(rho'-1) dt".to_string(),
        "on |t| = 1: |t^(...)| = 1, |1 + t| <= 2, contour length 2 pi".to_string(),
        format!("so |Gamma/F| <= pi 2^(rho'-1) / sin(pi/n), pi/sin(pi/n) in {per_factor}"),
        "band: |w| = |1 - z| <= 3/2, |1 + (-1)^m (1-z) prod t| <= 5/2, sum_l C(rho_k'-1, l)|w|^l <= (5/2)^(rho_k'-1)".to_string(),
        "|A_hk| <= (pi/sin(pi/n))^(m-1) ((5/2) 2^(m-1))^rho".to_string(),
        format!("band: |x|, |y| <= B = (3/2)^(2/n) in {b}"),
        format!("|(y^(k-1) - x^(k-1))/(y - x)| <= (k-1) B^(k-2), W = sum_(k=2..m) (k-1) B^(k-2) in {w}"),
        format!("prefactor W (pi/sin(pi/n))^(m-1) >= 1 in {prefactor}, folded into the rho-th power"),
        format!("c3 = prefactor 5 2^(m-2) rounded up to 1e-6: {value}"),
    ];
    Ok(Bound { value, trace })
}

/// `c1 = 3^{(m-1)(n+m-1)} · b`.
pub fn derive_c1(n: u32, m: u32, b: u64) -> Result<Bound> {
    check_nm(n, m)?;
    let base = maier_base(n, m);
    let value = big(&base * BigInt::from(b));
    let trace = vec![
        "denominators of all A_hk divide lcm(1..n rho + m - 1)^(m-1)".to_string(),
        format!("lcm(1..N) < 3^N gives denominators < (3^((m-1)(n+m-1)))^rho = {base}^rho"),
        "U_h0 = sum_k A_h0k(1 - a q1^n/(b p1^n)) (q1 p2/(p1 q2))^(k-1), deg_w <= rho".to_string(),
        "so b^rho p1^(n rho + m - 1) q2^(m-1) clears the remaining denominators".to_string(),
        format!("nonzero integer numerator: |U_h0|^-1 <= c1^rho p1^(n rho + m - 1) q2^(m-1), c1 = {value}"),
    ];
    Ok(Bound { value, trace })
}

/// Largest integer `r` with `r^n <= v`.
fn int_root_floor(v: u64, n: u32) -> u64 {
    BigInt::from(v).nth_root(n).try_into().unwrap()
}

/// True when `(a/b)^{1/n}` has degree exactly `n` over the rationals
/// (`gcd(a, b) = 1`). For positive radicands this holds iff `a/b` is not a
/// `p`-th power for any prime `p | n`.
pub fn exact_degree(a: u64, b: u64, n: u32) -> bool {
    let mut d = n;
    let mut p = 2;
    while d > 1 {
        if d % p == 0 {
            let ra = int_root_floor(a, p);
            let rb = int_root_floor(b, p);
            if num_traits::pow(BigInt::from(ra), p as usize) == BigInt::from(a)
                && num_traits::pow(BigInt::from(rb), p as usize) == BigInt::from(b)
            {
                return false;
            }
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    true
}

pub fn check_target(a: u64, b: u64, n: u32) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::BadParams("a and b must be positive".into()));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::BadParams(format!("gcd({a}, {b}) != 1")));
    }
    if !exact_degree(a, b, n) {
        return Err(Error::NotDegreeN { a, b, n });
    }
    Ok(())
}

/// `max(1, (3a/(2b))^{1/n})`, an upper bound for `p/q` on the band.
pub fn band_ratio_bound(a: u64, b: u64, n: u32) -> BigRational {
    let beta = interval::nth_root_rational(
        &BigRational::new(BigInt::from(3 * a), BigInt::from(2 * b)),
        n,
        CONST_PREC,
    );
    upper(&beta).max(BigRational::one())
}

/// `c4 = 3 c1 c2 β^{n-1}` and `c5 = 3 c1 c3 β^{n+m-2}` with `β` from
/// [`band_ratio_bound`].
pub fn derive_c45(n: u32, m: u32, a: u64, b: u64) -> Result<(Bound, Bound)> {
    check_nm(n, m)?;
    check_target(a, b, n)?;
    let c1 = derive_c1(n, m, b)?.value;
    let c2 = derive_c2(n, m)?.value;
    let c3 = derive_c3(n, m)?.value;
    let beta = band_ratio_bound(a, b, n);
    let three = int(3);
    let c4 = &three * &c1 * &c2 * num_traits::pow(beta.clone(), (n - 1) as usize);
    let c5 = &three * &c1 * &c3 * num_traits::pow(beta.clone(), (n + m - 2) as usize);
    let common = vec![
        format!("band: p/q <= beta = max(1, (3a/(2b))^(1/n)) <= {beta}"),
        "U_h0 = (q1/p1)^(m rho) S_h0(x) (xi - p1/q1)^(m rho) + (q1/p1) T_h0(x,y) (p2/q2 - xi)".to_string(),
        "1 <= c1^rho p1^(n rho + m - 1) q2^(m-1) |U_h0|".to_string(),
    ];
    let mut t4 = common.clone();
    t4.push("first term: p1^((n-m) rho + m - 1) q1^(m rho) <= beta^((n-1) rho) q1^(n rho + m - 1)".into());
    t4.push("normalisation factor 3: then theta_1 + theta_2 >= 3^rho > 2 and max(theta_1, theta_2) >= 3^rho/2 > 1".into());
    t4.push(format!("c4 = 3 c1 c2 beta^(n-1) = {c4}"));
    let mut t5 = common;
    t5.push("second term: p1^(n rho + m - 2) q1 <= beta^((n+m-2) rho) q1^(n rho + m - 1)".into());
    t5.push("normalisation factor 3 as for c4".into());
    t5.push(format!("c5 = 3 c1 c3 beta^(n+m-2) = {c5}"));
    Ok((Bound { value: c4, trace: t4 }, Bound { value: c5, trace: t5 }))
}

pub fn derive_all(n: u32, m: u32, a: u64, b: u64) -> Result<BoundConstants> {
    let (c4, c5) = derive_c45(n, m, a, b)?;
    Ok(BoundConstants {
        c1: derive_c1(n, m, b)?,
        c2: derive_c2(n, m)?,
        c3: derive_c3(n, m)?,
        c4,
        c5,
    })
}

/// Horner evaluation over intervals.
pub fn eval_poly_interval(p: &Poly, x: &Interval) -> Interval {
    let prec = x.prec();
    p.coeffs().iter().rev().fold(Interval::from_int(0, prec), |acc, c| {
        acc.mul(x).add(&Interval::from_rational(c, prec))
    })
}

pub fn eval_bipoly_interval(p: &BiPoly, x: &Interval, y: &Interval) -> Interval {
    let prec = x.prec().max(y.prec());
    p.rows().iter().rev().fold(Interval::from_int(0, prec), |acc, row| {
        let inner = row.iter().rev().fold(Interval::from_int(0, prec), |a, c| {
            a.mul(y).add(&Interval::from_rational(c, prec))
        });
        acc.mul(x).add(&inner)
    })
}

pub fn eval_s_interval(sys: &NthRootSystem, h: usize, x: &Interval) -> Result<Interval> {
    Ok(eval_poly_interval(&sys.frak_s(h)?, x))
}

pub fn eval_t_interval(sys: &NthRootSystem, h: usize, x: &Interval, y: &Interval) -> Result<Interval> {
    Ok(eval_bipoly_interval(&sys.frak_t(h)?, x, y))
}

/// `c^ϱ` as an exact rational power compared against an interval upper end.
pub fn power_dominates(bound: &BigRational, rho: u64, iv: &Interval) -> bool {
    let pow = num_traits::pow(bound.clone(), rho as usize);
    iv.abs().hi().to_rational() <= pow
}
