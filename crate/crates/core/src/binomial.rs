//! Specialisation `ω_k = (k-1)/n`, `ϱ_k = ϱ` and the substitution
//! `x = (1-z)^{1/n}`. Nothing here touches an irrational number: the
//! polynomials live in `w = x^n = 1 - z` and in `x`, `y` symbolically, and
//! `U_h` is evaluated from the rationals `w` and `y` alone.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{BiPoly, Poly};
use crate::error::{Error, Result};
use crate::pade::{residue_block_in_w, ExponentSystem};

/// The m×m matrix `𝔄_hk(w) = A_hk(1-w)` for the n-th root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NthRootSystem {
    pub n: u32,
    pub m: u32,
    pub rho: u64,
    /// `ahk[h][k]` as a polynomial in `w`, 0-based indices.
    pub ahk: Vec<Vec<Poly>>,
}

/// `𝔖_h`, `𝔗_h`, `𝔘_h` for every row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedTriple {
    pub s: Vec<Poly>,
    pub t: Vec<BiPoly>,
    pub u: Vec<BiPoly>,
}

/// `(0, 1/n, …, (m-1)/n)` with every multiplicity equal to `rho`.
pub fn base_exponents(n: u32, m: u32, rho: u64) -> Result<ExponentSystem> {
    check_params(n, m, rho)?;
    let omega = (0..m as i64)
        .map(|k| BigRational::new(BigInt::from(k), BigInt::from(n)))
        .collect();
    ExponentSystem::new(omega, vec![rho; m as usize])
}

fn check_params(n: u32, m: u32, rho: u64) -> Result<()> {
    if n < 3 || m < 2 || m > n || rho < 1 {
        return Err(Error::BadParams(format!(
            "need n >= 3, 2 <= m <= n, rho >= 1; got n={n} m={m} rho={rho}"
        )));
    }
    Ok(())
}

pub fn build_system(n: u32, m: u32, rho: u64) -> Result<NthRootSystem> {
    let base = base_exponents(n, m, rho)?;
    let ahk = (0..m as usize)
        .map(|h| {
            let row = base.bumped(h);
            (0..m as usize).map(|k| residue_block_in_w(&row, k)).collect()
        })
        .collect();
    Ok(NthRootSystem { n, m, rho, ahk })
}

impl NthRootSystem {
    fn check_row(&self, h: usize) -> Result<()> {
        if h >= self.m as usize {
            return Err(Error::BadParams(format!("row {h} out of range (m = {})", self.m)));
        }
        Ok(())
    }

    /// `mϱ`, the order of the zero at `x = 1`.
    pub fn zero_order(&self) -> u32 {
        self.m * self.rho as u32
    }

    /// `A_hk(z)` in the original variable.
    pub fn a_in_z(&self, h: usize, k: usize) -> Poly {
        self.ahk[h][k].reflect()
    }

    /// `ℜ_h(x) = Σ_k 𝔄_hk(x^n) x^{k-1}`.
    pub fn frak_r(&self, h: usize) -> Result<Poly> {
        self.check_row(h)?;
        Ok(self.ahk[h]
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, a)| &acc + &a.spread(self.n as usize).shift(k)))
    }

    /// `𝔖_h(x) = ℜ_h(x) / (x-1)^{mϱ}`; the division must be exact.
    pub fn frak_s(&self, h: usize) -> Result<Poly> {
        let r = self.frak_r(h)?;
        r.div_exact(&Poly::linear_root(&BigRational::one()).pow(self.zero_order()))
    }

    /// `𝔗_h(x, y) = Σ_k 𝔄_hk(x^n) (y^{k-1} - x^{k-1}) / (y - x)`.
    pub fn frak_t(&self, h: usize) -> Result<BiPoly> {
        self.check_row(h)?;
        let mut acc = BiPoly::zero();
        for (k, a) in self.ahk[h].iter().enumerate().skip(1) {
            let ax = BiPoly::from_x(&a.spread(self.n as usize));
            // (y^k - x^k)/(y - x) = Σ_{i+j=k-1} x^i y^j  (0-based k)
            let dd = (0..k).fold(BiPoly::zero(), |s, i| {
                &s + &BiPoly::monomial(BigRational::one(), i, k - 1 - i)
            });
            acc = &acc + &(&ax * &dd);
        }
        Ok(acc)
    }

    /// `𝔘_h(x, y) = Σ_k 𝔄_hk(x^n) y^{k-1}`.
    pub fn frak_u(&self, h: usize) -> Result<BiPoly> {
        self.check_row(h)?;
        Ok(self.ahk[h].iter().enumerate().fold(BiPoly::zero(), |acc, (k, a)| {
            let ax = BiPoly::from_x(&a.spread(self.n as usize));
            &acc + &(&ax * &BiPoly::monomial(BigRational::one(), 0, k))
        }))
    }

    pub fn triple(&self) -> Result<SpecializedTriple> {
        let rows = 0..self.m as usize;
        Ok(SpecializedTriple {
            s: rows.clone().map(|h| self.frak_s(h)).collect::<Result<_>>()?,
            t: rows.clone().map(|h| self.frak_t(h)).collect::<Result<_>>()?,
            u: rows.map(|h| self.frak_u(h)).collect::<Result<_>>()?,
        })
    }

    /// Exact value of `𝔘_h` from `w = x^n` and `y`.
    pub fn frak_u_eval(&self, h: usize, w: &BigRational, y: &BigRational) -> Result<BigRational> {
        self.check_row(h)?;
        let mut ypow = BigRational::one();
        let mut acc = BigRational::zero();
        for a in &self.ahk[h] {
            acc += a.eval(w) * &ypow;
            ypow *= y;
        }
        Ok(acc)
    }

    /// Smallest row (0-based) with `𝔘_h(w, y) ≠ 0`, together with that value.
    pub fn select_h(&self, w: &BigRational, y: &BigRational) -> Result<(usize, BigRational)> {
        if w.is_one() {
            return Err(Error::RootOfUnity);
        }
        for h in 0..self.m as usize {
            let u = self.frak_u_eval(h, w, y)?;
            if !u.is_zero() {
                return Ok((h, u));
            }
        }
        Err(Error::AllZero { w: w.clone(), y: y.clone() })
    }

    /// Checks `𝔘_h = (x-1)^{mϱ} 𝔖_h + (y-x) 𝔗_h` and `𝔘_h(x,x) = ℜ_h(x)`
    /// as exact polynomial identities for every row.
    pub fn verify_identities(&self) -> Result<()> {
        let x_minus_1 = Poly::linear_root(&BigRational::one()).pow(self.zero_order());
        let y_minus_x = &BiPoly::monomial(BigRational::one(), 0, 1)
            - &BiPoly::monomial(BigRational::one(), 1, 0);
        for h in 0..self.m as usize {
            let s = self.frak_s(h)?;
            let t = self.frak_t(h)?;
            let u = self.frak_u(h)?;
            let rhs = &BiPoly::from_x(&(&x_minus_1 * &s)) + &(&y_minus_x * &t);
            if u != rhs {
                return Err(Error::IdentityViolation(format!(
                    "U_{h} != (x-1)^mr S_{h} + (y-x) T_{h} at n={} m={} rho={}",
                    self.n, self.m, self.rho
                )));
            }
            if u.diagonal() != self.frak_r(h)? {
                return Err(Error::IdentityViolation(format!("U_{h}(x,x) != R_{h}(x)")));
            }
        }
        Ok(())
    }

    /// `det[𝔄_hk(w)]` as a polynomial in `w`.
    pub fn det_in_w(&self) -> Result<Poly> {
        crate::pade::poly_det(&self.ahk)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::pade::construct_linsolve;

    fn p(c: &[BigRational]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn rows_for_cube_root_rho_one() {
        let s = build_system(3, 2, 1).unwrap();
        assert_eq!(s.ahk[0], vec![p(&[int(3), rat(3, 2)]), p(&[rat(-9, 2)])]);
        // A_22(z) = -9/4 - (3/4)z, so 𝔄_22(w) = -3 + (3/4)w
        assert_eq!(s.ahk[1], vec![p(&[rat(9, 4)]), p(&[int(-3), rat(3, 4)])]);
        // same rows through the linear-solve construction
        let row = base_exponents(3, 2, 1).unwrap().bumped(0);
        let lin = construct_linsolve(&row, 4).unwrap();
        assert_eq!(lin.a[0], s.a_in_z(0, 0));
        assert_eq!(lin.a[0], p(&[rat(9, 2), rat(-3, 2)]));
    }

    #[test]
    fn degree_pattern() {
        for rho in 1..4u64 {
            let s = build_system(3, 3, rho).unwrap();
            for h in 0..3 {
                for k in 0..3 {
                    let want = rho as usize + usize::from(h == k) - 1;
                    assert_eq!(s.ahk[h][k].degree(), Some(want));
                }
            }
        }
    }

    #[test]
    fn frak_r_and_s() {
        let s = build_system(3, 2, 1).unwrap();
        let r1 = s.frak_r(0).unwrap();
        assert_eq!(r1, p(&[int(3), rat(-9, 2), int(0), rat(3, 2)]));
        assert!(r1.eval(&int(1)).is_zero());
        assert_eq!(s.frak_s(0).unwrap(), p(&[int(3), rat(3, 2)]));
        let r2 = s.frak_r(1).unwrap();
        let s2 = s.frak_s(1).unwrap();
        assert_eq!(s2.degree().unwrap(), r2.degree().unwrap() - 2);
        // R_2(x) = (3/4)(x^4 - 4x + 3) = (3/4)(x-1)^2 (x^2 + 2x + 3)
        assert_eq!(r2, p(&[rat(9, 4), int(-3), int(0), int(0), rat(3, 4)]));
        assert_eq!(s2, p(&[rat(9, 4), rat(3, 2), rat(3, 4)]));
    }

    #[test]
    fn frak_t_u() {
        let s = build_system(3, 2, 1).unwrap();
        let t1 = s.frak_t(0).unwrap();
        assert_eq!(t1, BiPoly::from_x(&s.ahk[0][1].spread(3)));
        let u1 = s.frak_u(0).unwrap();
        let want = &(&BiPoly::monomial(int(3), 0, 0) + &BiPoly::monomial(rat(3, 2), 3, 0))
            + &BiPoly::monomial(rat(-9, 2), 0, 1);
        assert_eq!(u1, want);
        s.verify_identities().unwrap();
    }

    #[test]
    fn worked_u_value() {
        let s = build_system(3, 2, 1).unwrap();
        let w = rat(128, 125);
        let y = rat(116, 115);
        let u = s.frak_u_eval(0, &w, &y).unwrap();
        assert_eq!(u, rat(-9, 2875));
        // direct fraction arithmetic
        assert_eq!(rat(9, 2) + rat(9, 250) - rat(9, 2) * rat(116, 115), rat(-9, 2875));
        assert_eq!(s.select_h(&w, &y).unwrap(), (0, rat(-9, 2875)));
        assert!(s.frak_u_eval(1, &int(1), &int(1)).unwrap().is_zero());
        assert_eq!(s.select_h(&int(1), &int(3)), Err(Error::RootOfUnity));
    }

    #[test]
    fn specialised_determinant() {
        let s = build_system(4, 3, 2).unwrap();
        let det = s.det_in_w().unwrap();
        let base = base_exponents(4, 3, 2).unwrap();
        let delta = crate::pade::determinant_delta(&base).unwrap().delta;
        let one_minus_w = Poly::new(vec![int(1), int(-1)]);
        assert_eq!(det, one_minus_w.pow(6).scale(&delta));
    }

    #[test]
    fn bad_params() {
        assert!(matches!(build_system(2, 2, 1), Err(Error::BadParams(_))));
        assert!(matches!(build_system(3, 4, 1), Err(Error::BadParams(_))));
        assert!(matches!(build_system(3, 1, 1), Err(Error::BadParams(_))));
        assert!(matches!(build_system(3, 2, 0), Err(Error::BadParams(_))));
    }
}
