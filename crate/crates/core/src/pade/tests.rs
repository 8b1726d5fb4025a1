use num_rational::BigRational;
use num_traits::Zero;

use super::*;
use crate::arith::{int, rat, Poly};
use crate::error::Error;

fn sys(omega: &[(i64, i64)], rho: &[u64]) -> ExponentSystem {
    ExponentSystem::new(omega.iter().map(|&(n, d)| rat(n, d)).collect(), rho.to_vec()).unwrap()
}

fn poly(c: &[BigRational]) -> Poly {
    Poly::new(c.to_vec())
}

/// Cofactor expansion along the first row; exponential but independent of
/// the elimination in `poly_det`.
fn laplace_det(m: &[Vec<Poly>]) -> Poly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = entry * &laplace_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[test]
fn integer_difference_rejected() {
    let err = ExponentSystem::new(vec![int(0), int(1)], vec![1, 1]).unwrap_err();
    assert!(matches!(err, Error::InvalidSystem(..)));
    assert!(ExponentSystem::new(vec![rat(1, 3), rat(-2, 3)], vec![1, 2]).is_err());
}

#[test]
fn single_block_is_a_monomial() {
    for rho in 1..6u64 {
        let s = sys(&[(0, 1)], &[rho]);
        let ps = construct_residue(&s).unwrap();
        assert_eq!(ps.a[0], Poly::monomial(int(1), rho as usize - 1));
    }
}

#[test]
fn residue_worked_examples() {
    let ps = construct_residue(&sys(&[(0, 1), (1, 2)], &[1, 1])).unwrap();
    assert_eq!(ps.a, vec![poly(&[int(2)]), poly(&[int(-2)])]);
    assert_eq!(remainder_series(&ps, 4).coeffs(), &[int(0), int(1), rat(1, 4), rat(1, 8)]);

    let ps = construct_residue(&sys(&[(0, 1), (1, 2)], &[2, 1])).unwrap();
    assert_eq!(ps.a, vec![poly(&[int(4), int(-2)]), poly(&[int(-4)])]);
    assert_eq!(remainder_series(&ps, 4).coeffs(), &[int(0), int(0), rat(1, 2), rat(1, 4)]);
    assert_eq!(ps.normalization, rat(1, 2));

    let ps = construct_residue(&sys(&[(0, 1), (1, 3)], &[1, 1])).unwrap();
    assert_eq!(remainder_series(&ps, 3).coeffs(), &[int(0), int(1), rat(1, 3)]);
}

#[test]
fn linsolve_worked_examples() {
    let ps = construct_linsolve(&sys(&[(0, 1), (1, 2)], &[1, 1]), 2).unwrap();
    assert_eq!(ps.a, vec![poly(&[int(2)]), poly(&[int(-2)])]);
    let ps = construct_linsolve(&sys(&[(0, 1), (1, 3)], &[1, 1]), 2).unwrap();
    assert_eq!(ps.a, vec![poly(&[int(3)]), poly(&[int(-3)])]);
    assert!(matches!(
        construct_linsolve(&sys(&[(0, 1), (1, 3)], &[1, 1]), 1),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn three_routes_agree_on_small_systems() {
    let cases = [
        sys(&[(0, 1), (1, 2)], &[2, 3]),
        sys(&[(1, 5), (-3, 7), (2, 3)], &[2, 1, 3]),
        sys(&[(0, 1), (1, 4), (1, 2), (3, 4)], &[1, 2, 1, 2]),
    ];
    for s in &cases {
        let len = s.sigma() as usize + 3;
        let res = construct_residue(s).unwrap();
        assert!(res.degrees_exact());
        assert_eq!(res, construct_linsolve(s, len).unwrap());
        assert_eq!(remainder_series(&res, len), log_rep_series(s, len).unwrap());
    }
}

#[test]
fn log_rep_b_coefficients() {
    let b = inverse_root_expansion(&sys(&[(0, 1), (1, 2)], &[1, 1]), 3);
    assert_eq!(b[0], int(1));
    assert_eq!(b[1], rat(1, 2));
    // h_2(0, 1/2) = 1/4
    assert_eq!(b[2], rat(1, 4));
    let s = log_rep_series(&sys(&[(0, 1), (1, 2)], &[1, 1]), 4).unwrap();
    assert_eq!(s.coeffs(), &[int(0), int(1), rat(1, 4), rat(1, 8)]);
}

#[test]
fn shift_check() {
    let r = differential_shift_check(&sys(&[(0, 1), (1, 2)], &[1, 1]), 4).unwrap();
    assert!(r.equal_up_to_scale);
    assert_eq!(r.shifted.omega(), &[rat(-1, 2)]);
    assert_eq!(r.scale, int(1));

    let r = differential_shift_check(&sys(&[(0, 1), (1, 3), (2, 3)], &[1, 1, 1]), 8).unwrap();
    assert!(r.equal_up_to_scale);

    let r = differential_shift_check(&sys(&[(1, 7), (1, 3), (2, 5)], &[3, 2, 1]), 12).unwrap();
    assert!(r.equal_up_to_scale);
    assert_eq!(r.scale, r.expected_scale);

    assert!(matches!(
        differential_shift_check(&sys(&[(0, 1)], &[2]), 8),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn determinant_worked_examples() {
    let rep = determinant_delta(&sys(&[(0, 1), (1, 2)], &[1, 1])).unwrap();
    assert_eq!(rep.delta, rat(4, 3));
    assert_eq!(rep.det, Poly::monomial(rat(4, 3), 2));
    assert!(rep.det.eval(&BigRational::zero()).is_zero());

    let rep = determinant_delta(&sys(&[(0, 1), (1, 3)], &[1, 1])).unwrap();
    assert_eq!(rep.delta, rat(9, 8));
}

#[test]
fn footnote_values_and_ratio() {
    let s = sys(&[(0, 1), (1, 2)], &[1, 1]);
    assert_eq!(footnote_delta(&s), int(-4));
    let cmp = compare_delta(&s).unwrap();
    assert_eq!(cmp.magnitude_ratio(), int(3));
    assert_eq!(footnote_delta(&sys(&[(0, 1), (1, 3)], &[1, 1])), int(-9));
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    for s in [
        sys(&[(0, 1), (1, 3), (2, 3)], &[2, 1, 2]),
        sys(&[(1, 5), (-3, 7), (2, 3), (1, 2)], &[1, 2, 1, 1]),
    ] {
        let ds = determinant_system(&s).unwrap();
        assert_eq!(poly_det(&ds.ahk).unwrap(), laplace_det(&ds.ahk));
    }
    // a zero pivot forces a row swap
    let m = vec![
        vec![Poly::zero(), Poly::one()],
        vec![Poly::one(), Poly::var()],
    ];
    assert_eq!(poly_det(&m).unwrap(), Poly::constant(int(-1)));
}
