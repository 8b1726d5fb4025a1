use binpade::arith::{binomial_series, falling_factorial, int, is_canonical, Poly};
use binpade::certify::{self, band_check, select_rho, Target};
use binpade::interval::{nth_root_rational, Interval};
use binpade::pade::{construct_residue, remainder_series, ExponentSystem};
use binpade::wire::{self, WRat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..max_len).prop_map(Poly::new)
}

fn small_system() -> impl Strategy<Value = ExponentSystem> {
    prop::collection::vec((small_rat(), 1u64..=3), 1..=3)
        .prop_filter_map("integer difference", |v| {
            let (omega, rho): (Vec<_>, Vec<_>) = v.into_iter().unzip();
            ExponentSystem::new(omega, rho).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn binomial_series_multiplies(a in small_rat(), b in small_rat()) {
        let len = 8;
        let lhs = binomial_series(&a, len).mul(&binomial_series(&b, len));
        prop_assert_eq!(lhs, binomial_series(&(&a + &b), len));
    }

    #[test]
    fn falling_factorial_splits(z in small_rat(), w in small_rat(), r1 in 1u64..5, r2 in 1u64..5) {
        let whole = falling_factorial(&z, &w, r1 + r2);
        let split = falling_factorial(&z, &w, r1) * falling_factorial(&z, &(&w + int(r1 as i64)), r2);
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_strategy(6), b in poly_strategy(5)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn polynomial_outputs_are_canonical(a in poly_strategy(6), b in poly_strategy(6)) {
        for p in [&a + &b, &a - &b, &a * &b, a.derivative(), b.reflect()] {
            prop_assert!(p.coeffs().last().is_none_or(|c| !c.is_zero()));
            prop_assert!(p.coeffs().iter().all(is_canonical));
        }
    }

    #[test]
    fn remainder_order_and_linearity(sys in small_system(), c in small_rat()) {
        prop_assume!(!c.is_zero());
        let ps = construct_residue(&sys).unwrap();
        let sigma = sys.sigma() as usize;
        let rem = remainder_series(&ps, sigma + 1);
        prop_assert!((0..sigma - 1).all(|i| rem.coeff(i).is_zero()));
        prop_assert_eq!(rem.coeff(sigma - 1), &sys.normalization());
        let mut scaled = ps.clone();
        scaled.a = ps.a.iter().map(|a| a.scale(&c)).collect();
        prop_assert_eq!(remainder_series(&scaled, sigma + 1), rem.scale(&c));
    }

    #[test]
    fn select_rho_sandwich(q1 in 2u64..50, q2 in 2u64..10_000_000, m in 2u32..5) {
        let (a, b) = (BigInt::from(q1), BigInt::from(q2));
        let rho = select_rho(&a, &b, m).unwrap();
        let holds = |r: u64| {
            let lo = num_traits::pow(a.clone(), (m as u64 * (r - 1)) as usize);
            let hi = num_traits::pow(a.clone(), (m as u64 * r) as usize);
            lo < b && b <= hi
        };
        prop_assert!(holds(rho));
        prop_assert!(!holds(rho + 1));
        if rho > 1 {
            prop_assert!(!holds(rho - 1));
        }
    }

    #[test]
    fn wire_rationals_round_trip(n in any::<i128>(), d in 1u64..u64::MAX) {
        let r = WRat(BigRational::new(n.into(), d.into()));
        let back: WRat = wire::from_json(&wire::to_json(&r)).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn band_check_matches_enclosure(p in 1i64..2000, q in 1i64..2000) {
        let t = Target::new(2, 1, 3, 2, BigRational::new(1.into(), 2.into())).unwrap();
        let exact = band_check(&BigInt::from(p), &BigInt::from(q), &t).unwrap();
        let (lo, hi) = certify::band_endpoints(&t, 256);
        let r = BigRational::new(p.into(), q.into());
        let inside = lo.hi().to_rational() <= r && r <= hi.lo().to_rational();
        let outside = r < lo.lo().to_rational() || hi.hi().to_rational() < r;
        prop_assert!(inside || outside);
        prop_assert_eq!(exact, inside);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn interval_operations_enclose(x in small_rat(), y in small_rat(), prec in 64u32..200) {
        let (ix, iy) = (Interval::from_rational(&x, prec), Interval::from_rational(&y, prec));
        prop_assert!(ix.add(&iy).contains_rational(&(&x + &y)));
        prop_assert!(ix.sub(&iy).contains_rational(&(&x - &y)));
        prop_assert!(ix.mul(&iy).contains_rational(&(&x * &y)));
        prop_assert!(ix.powi(3).contains_rational(&(&x * &x * &x)));
        if !y.is_zero() {
            prop_assert!(ix.div(&iy).unwrap().contains_rational(&(&x / &y)));
        }
    }

    #[test]
    fn nth_roots_bracket(num in 1u64..100_000, den in 1u64..1000, n in 2u32..8) {
        let r = BigRational::new(num.into(), den.into());
        let iv = nth_root_rational(&r, n, 96);
        let lo = iv.lo().to_rational();
        let hi = iv.hi().to_rational();
        prop_assert!(num_traits::pow(lo, n as usize) <= r);
        prop_assert!(num_traits::pow(hi, n as usize) >= r);
    }
}

#[test]
fn mu_is_exact_for_small_degrees() {
    let eps = BigRational::new(1.into(), 7.into());
    for n in 2..=8u32 {
        for m in 2..=n {
            let want = BigRational::new(n.into(), m.into()) + int(m as i64 - 1) + &eps;
            assert_eq!(certify::mu(n, m, &eps), want);
        }
    }
    assert!(certify::mu(3, 2, &BigRational::zero()) > BigRational::one());
}
