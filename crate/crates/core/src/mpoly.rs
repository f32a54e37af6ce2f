//! Sparse multivariate polynomials with rational coefficients.
//!
//! Used as a drop-in coefficient ring so determinants and closed forms can be
//! compared as polynomials rather than at sample points.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{ExactRing, Rational};

/// Polynomial over a fixed number of variables. Exponent vectors are dense
/// and coefficients are never stored as zero, so `==` is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    /// The variable with index `idx`.
    pub fn var(arity: usize, idx: usize) -> Self {
        assert!(idx < arity, "variable {idx} out of range for arity {arity}");
        let mut exps = vec![0; arity];
        exps[idx] = 1;
        Self::from_terms(arity, [(exps, Rational::one())]).expect("arity checked")
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: exps.len(),
                });
            }
            p.accumulate(exps, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given monomial (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn accumulate(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.accumulate(exps, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Substitutes `point` for the variables.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term *= ExactRing::pow(x, e);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Renders with the given variable names (one per variable).
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // highest monomials first
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = exps
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect();
            let negative = c.is_negative();
            let magnitude = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if monomial.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
                out.push_str(&monomial.join("*"));
            }
        }
        out
    }

    /// Default variable names: `a1..aN, b1..bN` for even arity `2N`,
    /// otherwise `x1..xN`.
    pub fn default_names(arity: usize) -> Vec<String> {
        if arity % 2 == 0 {
            let n = arity / 2;
            (1..=n)
                .map(|i| format!("a{i}"))
                .chain((1..=n).map(|i| format!("b{i}")))
                .collect()
        } else {
            (1..=arity).map(|i| format!("x{i}")).collect()
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Self::default_names(self.arity)))
    }
}

/// Arity mismatches inside generic code are programming errors, so the ring
/// operations panic where the `checked_*` methods would return an error.
impl ExactRing for MultiPoly {
    type Ctx = usize;

    fn ctx(&self) -> usize {
        self.arity
    }
    fn zero_of(ctx: &usize) -> Self {
        MultiPoly::zero(*ctx)
    }
    fn one_of(ctx: &usize) -> Self {
        MultiPoly::one(*ctx)
    }
    fn from_rational(ctx: &usize, value: &Rational) -> Self {
        MultiPoly::constant(*ctx, value.clone())
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("arity mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("arity mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("arity mismatch")
    }
    fn neg(&self) -> Self {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn v(arity: usize, i: usize) -> MultiPoly {
        MultiPoly::var(arity, i)
    }

    #[test]
    fn addition() {
        let (x, y) = (v(2, 0), v(2, 1));
        let s = x.checked_add(&y).unwrap().checked_add(&x.checked_sub(&y).unwrap()).unwrap();
        assert_eq!(s, MultiPoly::constant(2, rat(2)).checked_mul(&x).unwrap());
        assert_eq!(x.checked_add(&MultiPoly::zero(2)).unwrap(), x);
        let xy2 = MultiPoly::constant(2, rat(2)).checked_mul(&x.checked_mul(&y).unwrap()).unwrap();
        assert!(xy2.checked_add(&xy2.negate()).unwrap().terms().is_empty());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        assert_eq!(
            v(2, 0).checked_add(&v(3, 0)),
            Err(Error::ArityMismatch { left: 2, right: 3 })
        );
        assert!(v(2, 0).checked_mul(&v(3, 0)).is_err());
        assert!(v(2, 0).eval(&[rat(1)]).is_err());
        assert!(MultiPoly::from_terms(2, [(vec![1], rat(1))]).is_err());
    }

    #[test]
    fn product_of_two_linear_forms() {
        // variables a1 a2 b1 b2 x y
        let (a1, a2, b1, b2, x, y) = (v(6, 0), v(6, 1), v(6, 2), v(6, 3), v(6, 4), v(6, 5));
        let l1 = a1.mul(&x).add(&b1.mul(&y));
        let l2 = a2.mul(&x).add(&b2.mul(&y));
        let expected = a1
            .mul(&a2)
            .mul(&x.pow(2))
            .add(&a1.mul(&b2).add(&a2.mul(&b1)).mul(&x).mul(&y))
            .add(&b1.mul(&b2).mul(&y.pow(2)));
        assert_eq!(l1.mul(&l2), expected);
        assert_eq!(l1.mul(&MultiPoly::one(6)), l1);
        assert!(l1.mul(&MultiPoly::zero(6)).is_zero());
    }

    #[test]
    fn evaluation() {
        let (x, y) = (v(2, 0), v(2, 1));
        assert_eq!(x.pow(2).add(&y).eval(&[rat(2), rat(3)]).unwrap(), rat(7));
        assert_eq!(MultiPoly::zero(2).eval(&[rat(5), rat(9)]).unwrap(), rat(0));
        // E_1((a1,a2);(b1,b2)) = a1 b2 + a2 b1 at (1,3,2,1)
        let e1 = v(4, 0).mul(&v(4, 3)).add(&v(4, 1).mul(&v(4, 2)));
        assert_eq!(e1.eval(&[rat(1), rat(3), rat(2), rat(1)]).unwrap(), rat(7));
    }

    #[test]
    fn rendering() {
        let p = v(4, 0).pow(3).mul(&v(4, 1).pow(3));
        assert_eq!(p.to_string(), "a1^3*a2^3");
        let q = v(2, 0).sub(&MultiPoly::constant(2, rat(2)).mul(&v(2, 1)));
        assert_eq!(q.to_string(), "a1 - 2*b1");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
        assert_eq!(MultiPoly::constant(1, rat(-3)).to_string(), "-3");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const ARITY: usize = 4;

        fn poly() -> impl Strategy<Value = MultiPoly> {
            prop::collection::vec((prop::collection::vec(0u32..3, ARITY), -5i64..=5), 0..=8).prop_map(
                |terms| {
                    MultiPoly::from_terms(ARITY, terms.into_iter().map(|(e, c)| (e, rat(c))))
                        .unwrap()
                },
            )
        }

        fn point() -> impl Strategy<Value = Vec<Rational>> {
            prop::collection::vec((-6i64..=6, 1i64..=4), ARITY)
                .prop_map(|v| v.into_iter().map(|(n, d)| crate::exact::ratio(n, d)).collect())
        }

        proptest! {
            #[test]
            fn ring_axioms(p in poly(), q in poly(), r in poly()) {
                prop_assert_eq!(p.add(&q), q.add(&p));
                prop_assert_eq!(p.mul(&q), q.mul(&p));
                prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
                prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
                prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
                prop_assert!(p.sub(&p).is_zero());
                prop_assert!(p.terms().values().all(|c| !c.is_zero()));
            }

            #[test]
            fn eval_is_a_ring_homomorphism(p in poly(), q in poly(), x in point()) {
                let (ep, eq) = (p.eval(&x).unwrap(), q.eval(&x).unwrap());
                prop_assert_eq!(p.mul(&q).eval(&x).unwrap(), &ep * &eq);
                prop_assert_eq!(p.add(&q).eval(&x).unwrap(), &ep + &eq);
            }
        }
    }
}
