//! The exact commutative ring contract shared by rationals and polynomials.
//!
//! Linear algebra, symmetric-function evaluation and the determinant formulas
//! are all written once against [`ExactRing`]. Instantiating them with
//! [`Rational`] gives numeric answers; instantiating them with
//! [`MultiPoly`](crate::mpoly::MultiPoly) turns the very same code path into a
//! polynomial identity check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, ExactMatrix};

/// Arbitrary precision rational number, the base field everywhere.
pub type Rational = BigRational;

/// A commutative ring with decidable equality and exact arithmetic.
///
/// Constants are built from a context: nothing for rationals, the variable
/// arity for polynomials.
pub trait ExactRing: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_of(ctx: &Self::Ctx) -> Self;
    fn one_of(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, value: &Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_of(&self.ctx());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Determinant of a square matrix; the preferred algorithm for the ring.
    fn determinant(m: &ExactMatrix<Self>) -> Result<Self> {
        linalg::det_laplace(m)
    }
}

impl ExactRing for Rational {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero_of(_: &()) -> Self {
        Zero::zero()
    }
    fn one_of(_: &()) -> Self {
        One::one()
    }
    fn from_rational(_: &(), value: &Rational) -> Self {
        value.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }

    fn determinant(m: &ExactMatrix<Self>) -> Result<Self> {
        linalg::det_bareiss(m)
    }
}

/// Product of a sequence, `one` for the empty sequence.
pub fn product<T: ExactRing>(ctx: &T::Ctx, items: &[T]) -> T {
    items.iter().fold(T::one_of(ctx), |acc, x| acc.mul(x))
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` with `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    match text.split_once('/') {
        None => BigInt::from_str(text).map(Rational::from_integer).map_err(|_| bad()),
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            if den.trim_start().starts_with(['+', '-']) {
                return Err(bad());
            }
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if !den.is_positive() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Renders `p` or `p/q` in lowest terms with `q > 0`.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Parses a comma-separated list of rationals, e.g. `1,2/3,-4`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(format_rational(&ratio(-4, 6)), "-2/3");
        assert_eq!(format_rational(&ratio(6, 3)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational_list("1, 2/3").unwrap(), vec![rat(1), ratio(2, 3)]);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(ratio(2, 3).pow(5), ratio(32, 243));
        assert_eq!(rat(7).pow(0), rat(1));
    }
}
