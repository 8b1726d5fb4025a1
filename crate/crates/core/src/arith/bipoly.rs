use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::Poly;

/// Dense bivariate polynomial; `rows[i][j]` is the coefficient of `x^i y^j`.
///
/// Each row is trimmed of trailing zeros and trailing empty rows are dropped,
/// so derived equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    rows: Vec<Vec<BigRational>>,
}

impl BiPoly {
    pub fn new(mut rows: Vec<Vec<BigRational>>) -> Self {
        for row in rows.iter_mut() {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// Polynomial in `x` only.
    pub fn from_x(p: &Poly) -> Self {
        BiPoly::new(p.coeffs().iter().map(|c| vec![c.clone()]).collect())
    }

    /// Polynomial in `y` only.
    pub fn from_y(p: &Poly) -> Self {
        BiPoly::new(vec![p.coeffs().to_vec()])
    }

    /// `c x^i y^j`
    pub fn monomial(c: BigRational, i: usize, j: usize) -> Self {
        let mut rows = vec![Vec::new(); i + 1];
        let mut row = vec![BigRational::zero(); j + 1];
        row[j] = c;
        rows[i] = row;
        BiPoly::new(rows)
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.len().checked_sub(1)).max()
    }

    /// Iterator over nonzero terms `(i, j, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.rows.iter().rev().fold(BigRational::zero(), |acc, row| {
            let inner = row
                .iter()
                .rev()
                .fold(BigRational::zero(), |a, c| a * y + c);
            acc * x + inner
        })
    }

    /// Restriction to the diagonal `y = x`.
    pub fn diagonal(&self) -> Poly {
        let mut out = Poly::zero();
        for (i, j, c) in self.terms() {
            out = &out + &Poly::monomial(c.clone(), i + j);
        }
        out
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        if self.rows.len() <= i {
            self.rows.resize(i + 1, Vec::new());
        }
        let row = &mut self.rows[i];
        if row.len() <= j {
            row.resize(j + 1, BigRational::zero());
        }
        &mut row[j]
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            *out.get_mut(i, j) += c;
        }
        BiPoly::new(out.rows)
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            *out.get_mut(i, j) -= c;
        }
        BiPoly::new(out.rows)
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                *out.get_mut(i + k, j + l) += a * b;
            }
        }
        BiPoly::new(out.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn diagonal_and_eval() {
        // (y - x)(x + y) = y^2 - x^2
        let x = BiPoly::monomial(int(1), 1, 0);
        let y = BiPoly::monomial(int(1), 0, 1);
        let prod = &(&y - &x) * &(&x + &y);
        assert_eq!(prod, &BiPoly::monomial(int(1), 0, 2) - &BiPoly::monomial(int(1), 2, 0));
        assert!(prod.diagonal().is_zero());
        assert_eq!(prod.eval(&rat(1, 2), &int(3)), rat(35, 4));
        assert_eq!(prod.degree_x(), Some(2));
        assert_eq!(prod.degree_y(), Some(2));
    }

    #[test]
    fn canonical_trims() {
        let b = BiPoly::new(vec![vec![int(1), int(0)], vec![], vec![int(0)]]);
        assert_eq!(b.rows().len(), 1);
        assert_eq!(b.rows()[0].len(), 1);
    }
}
