//! Closed forms for `D_{d,q}(a; b)`, the determinant of multiplication by
//! `l_1 ... l_{d+q-2k}` from `R_k` to `R_{d+q-k}`.
//!
//! The forms are split into a *check* group `l_1..l_u` (mapping `R_k` to
//! `R_{k+u}`, matrix `X`) and a *hat* group (mapping `R_{k+u}` to
//! `R_{d+q-k}`, matrix `Y`). Cauchy–Binet writes `det(YX)` as a sum over
//! subsets `delta` of intermediate basis positions, and each maximal minor is
//! a Jacobi–Trudi determinant:
//!
//! * `X`-minor on rows `delta`: `det(E_{lam_r + c - r}(a_check; b_check))`
//!   with `lam_r = u + r - delta_r`;
//! * `Y`-minor on columns `delta`: `det(E_{nu_r + c - r}(b_hat; a_hat))`
//!   with `nu_r = max(0, q - k) + r - delta_r`.
//!
//! Positions are y-exponents. The homogenized `E` determinants need no
//! nonvanishing hypotheses on the coefficients.
//!
//! [`det_paper_literal`] evaluates the four published case formulas as
//! written, for auditing only; they are not expected to match in general.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{product, ExactRing, Rational};
use crate::json::{ser_display, ser_display_opt};
use crate::mpoly::MultiPoly;
use crate::partitions::Partition;
use crate::ring::{self, check_lower_half, dim, FormList, RingParams};
use crate::symfunc::{
    elementary_homog_all, jacobi_trudi_det, schur, schur_homog, schur_jacobi_trudi, HomogPair, ValueVector,
};

/// The forms split into the check group (first `u`) and the hat group.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitForms<T: ExactRing = Rational> {
    check: FormList<T>,
    hat: FormList<T>,
}

impl<T: ExactRing> SplitForms<T> {
    pub fn new(check: FormList<T>, hat: FormList<T>) -> Result<Self> {
        if check.ctx() != hat.ctx() {
            return Err(Error::Split("check and hat groups live in different rings".into()));
        }
        Ok(SplitForms { check, hat })
    }

    /// `forms[..u]` as the check group, the rest as the hat group.
    pub fn at(forms: &FormList<T>, u: usize) -> Result<Self> {
        if u > forms.len() {
            return Err(Error::Split(format!("u = {u} exceeds {} forms", forms.len())));
        }
        let (check, hat) = forms.split_at(u);
        Ok(SplitForms { check, hat })
    }

    pub fn check(&self) -> &FormList<T> {
        &self.check
    }

    pub fn hat(&self) -> &FormList<T> {
        &self.hat
    }

    pub fn u(&self) -> usize {
        self.check.len()
    }

    pub fn all(&self) -> FormList<T> {
        self.check.concat(&self.hat)
    }

    fn validate(&self, rp: &RingParams, k: usize) -> Result<()> {
        let total = rp.socle() - 2 * k;
        if self.check.len() + self.hat.len() != total {
            return Err(Error::Split(format!(
                "|check| + |hat| = {} + {} but d + q - 2k = {total}",
                self.check.len(),
                self.hat.len()
            )));
        }
        Ok(())
    }
}

/// One Cauchy–Binet term.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct ExpansionTerm<T: ExactRing> {
    /// Intermediate basis positions (y-exponents), strictly increasing.
    pub delta: Vec<usize>,
    /// `lam_r = u + r - delta_r`.
    #[serde(serialize_with = "ser_display")]
    pub lam: Partition,
    /// `nu_r = max(0, q - k) + r - delta_r`; may go negative, which kills the
    /// term.
    pub nu: Vec<i64>,
    #[serde(serialize_with = "ser_display")]
    pub x_minor: T,
    #[serde(serialize_with = "ser_display")]
    pub y_minor: T,
    #[serde(serialize_with = "ser_display")]
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct Expansion<T: ExactRing> {
    #[serde(serialize_with = "ser_display")]
    pub value: T,
    pub terms: Vec<ExpansionTerm<T>>,
}

impl<T: ExactRing> Expansion<T> {
    pub fn nonzero_terms(&self) -> usize {
        self.terms.iter().filter(|t| !t.value.vanishes()).count()
    }
}

/// `D_{d,q}` as the Cauchy–Binet sum of Jacobi–Trudi minors.
pub fn det_schur_expansion<T: ExactRing>(rp: &RingParams, k: i64, sf: &SplitForms<T>) -> Result<Expansion<T>> {
    let k = check_lower_half(rp, k)?;
    sf.validate(rp, k)?;
    let ctx = sf.check.ctx();
    let u = sf.u();
    let rows = dim(rp, k as i64);
    let mid = k + u;
    let positions = mid.saturating_sub(rp.d())..=mid.min(rp.q());
    let source_min_y = k.saturating_sub(rp.d()) as i64;
    let target_min_y = rp.q().saturating_sub(k) as i64;

    let check_table = elementary_homog_all(&sf.check.homog_pair());
    let hat_table = elementary_homog_all(&sf.hat.homog_pair().swapped());

    let mut total = T::zero_of(ctx);
    let mut terms = Vec::new();
    for delta in positions.combinations(rows) {
        let lam_rows: Vec<i64> = delta
            .iter()
            .enumerate()
            .map(|(r, &t)| u as i64 + source_min_y + r as i64 - t as i64)
            .collect();
        let nu: Vec<i64> = delta
            .iter()
            .enumerate()
            .map(|(r, &t)| target_min_y + r as i64 - t as i64)
            .collect();
        let x_minor = jacobi_trudi_det(&lam_rows, &check_table, ctx);
        let y_minor = jacobi_trudi_det(&nu, &hat_table, ctx);
        let value = x_minor.mul(&y_minor);
        total = total.add(&value);
        let lam = Partition::new(
            lam_rows
                .iter()
                .map(|&p| usize::try_from(p).expect("rows of X-minors are nonnegative"))
                .collect(),
        )?;
        terms.push(ExpansionTerm {
            delta,
            lam,
            nu,
            x_minor,
            y_minor,
            value,
        });
    }
    Ok(Expansion { value: total, terms })
}

/// The rectangle whose homogenized Jacobi–Trudi determinant is `D` for an
/// unsplit form list: `((d-k)^(k+1))` for `k <= q`, else
/// `((d+q-2k)^(q+1))`. Its conjugate indexes the Schur polynomial.
pub fn corollary_rectangle(rp: &RingParams, k: usize) -> Partition {
    if k <= rp.q() {
        Partition::rectangle(rp.d() - k, k + 1)
    } else {
        Partition::rectangle(rp.socle() - 2 * k, rp.q() + 1)
    }
}

/// `beta^(k+1) s_{((k+1)^(d-k))}(a/b)` for `k <= q`, and
/// `beta^(q+1) s_{((q+1)^(d+q-2k))}(a/b)` otherwise, evaluated without
/// division so it holds at every point.
pub fn det_corollary<T: ExactRing>(rp: &RingParams, k: i64, forms: &FormList<T>) -> Result<T> {
    let k = check_lower_half(rp, k)?;
    let expected = rp.socle() - 2 * k;
    if forms.len() != expected {
        return Err(Error::NonSquareMap {
            expected,
            got: forms.len(),
        });
    }
    Ok(schur_homog(&corollary_rectangle(rp, k), &forms.homog_pair()))
}

/// The corollary in its ratio form `beta^e s(a/b)`; needs every `b_t != 0`.
pub fn det_corollary_ratio(rp: &RingParams, k: i64, forms: &FormList<Rational>) -> Result<Rational> {
    let k = check_lower_half(rp, k)?;
    if forms.len() != rp.socle() - 2 * k {
        return Err(Error::NonSquareMap {
            expected: rp.socle() - 2 * k,
            got: forms.len(),
        });
    }
    let hp = forms.homog_pair();
    let ratios = ValueVector::ratios(hp.a(), hp.b())?;
    let beta = product(&(), hp.b());
    let shape = corollary_rectangle(rp, k).conjugate();
    let exponent = if k <= rp.q() { k + 1 } else { rp.q() + 1 };
    Ok(ExactRing::pow(&beta, exponent as u32) * schur(&shape, &ratios))
}

/// The four published case statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LiteralCase {
    /// `q <= k <= (q+d)/2`
    Case1,
    /// `0 <= k <= k+u <= q`
    Case2,
    /// `0 <= k <= q <= d <= k+u`
    Case3,
    /// `k <= q <= k+u <= d`
    Case4,
}

impl LiteralCase {
    pub fn id(&self) -> &'static str {
        match self {
            LiteralCase::Case1 => "case1",
            LiteralCase::Case2 => "case2",
            LiteralCase::Case3 => "case3",
            LiteralCase::Case4 => "case4",
        }
    }

    /// Every case whose hypothesis holds at `(d, q, k, u)`.
    pub fn applicable(rp: &RingParams, k: usize, u: usize) -> Vec<LiteralCase> {
        let (d, q) = (rp.d(), rp.q());
        let mut out = Vec::new();
        if q <= k && 2 * k <= q + d {
            out.push(LiteralCase::Case1);
        }
        if k + u <= q {
            out.push(LiteralCase::Case2);
        }
        if k <= q && q <= d && d <= k + u {
            out.push(LiteralCase::Case3);
        }
        if k <= q && q <= k + u && k + u <= d {
            out.push(LiteralCase::Case4);
        }
        out
    }
}

impl fmt::Display for LiteralCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct LiteralValue<T: ExactRing> {
    pub case_id: LiteralCase,
    #[serde(serialize_with = "ser_display")]
    pub value: T,
    /// Summands dropped because `(d^(k+1)) \ lam` is undefined (case 3 with
    /// `u > d`).
    pub skipped_terms: usize,
}

/// How one side of a literal summand is evaluated: `s_{lam'}` at the
/// check-side or hat-side point, times that side's prefactor to `exponent`.
trait LiteralSides<T: ExactRing> {
    fn check(&self, lam: &Partition, exponent: usize) -> T;
    fn hat(&self, lam: &Partition, exponent: usize) -> T;
    fn ctx(&self) -> T::Ctx;
}

/// Ratio vectors `a_check / b_check` and `b_hat / a_hat` with explicit
/// prefactors `beta_check`, `alpha_hat`.
struct RatioSides {
    check_point: ValueVector,
    hat_point: ValueVector,
    beta_check: Rational,
    alpha_hat: Rational,
}

impl LiteralSides<Rational> for RatioSides {
    fn check(&self, lam: &Partition, exponent: usize) -> Rational {
        ExactRing::pow(&self.beta_check, exponent as u32) * schur_jacobi_trudi(lam, &self.check_point)
    }
    fn hat(&self, lam: &Partition, exponent: usize) -> Rational {
        ExactRing::pow(&self.alpha_hat, exponent as u32) * schur_jacobi_trudi(lam, &self.hat_point)
    }
    fn ctx(&self) {}
}

/// Division-free sides: `prefactor^e s_{lam'}(num/den)` equals
/// `schur_homog(lam) * den_prod^(e - len(lam))`.
struct HomogSides<T: ExactRing> {
    check: HomogPair<T>,
    hat: HomogPair<T>,
}

impl<T: ExactRing> HomogSides<T> {
    fn side(pair: &HomogPair<T>, lam: &Partition, exponent: usize) -> T {
        let den = product(pair.ctx(), pair.b());
        let extra = exponent.checked_sub(lam.len()).expect("at most `exponent` rows");
        schur_homog(lam, pair).mul(&ExactRing::pow(&den, extra as u32))
    }
}

impl<T: ExactRing> LiteralSides<T> for HomogSides<T> {
    fn check(&self, lam: &Partition, exponent: usize) -> T {
        Self::side(&self.check, lam, exponent)
    }
    fn hat(&self, lam: &Partition, exponent: usize) -> T {
        Self::side(&self.hat, lam, exponent)
    }
    fn ctx(&self) -> T::Ctx {
        self.check.ctx().clone()
    }
}

fn literal_cases<T: ExactRing, S: LiteralSides<T>>(
    rp: &RingParams,
    k: usize,
    u: usize,
    v: usize,
    sides: &S,
) -> Vec<LiteralValue<T>> {
    let (d, q) = (rp.d(), rp.q());
    let ctx = sides.ctx();
    let summed = |range: Partition, swap: bool| -> (T, usize) {
        let mut total = T::zero_of(&ctx);
        let mut skipped = 0;
        let height = k + 1;
        for lam in Partition::enumerate_in_rectangle(range.part(0), range.len()) {
            let Ok(mu) = lam.complement(d, height) else {
                skipped += 1;
                continue;
            };
            let term = if swap {
                sides.check(&mu, height).mul(&sides.hat(&lam, height))
            } else {
                sides.check(&lam, height).mul(&sides.hat(&mu, height))
            };
            total = total.add(&term);
        }
        (total, skipped)
    };
    LiteralCase::applicable(rp, k, u)
        .into_iter()
        .map(|case| {
            let (value, skipped_terms) = match case {
                LiteralCase::Case1 => {
                    // s_{((q+1)^u)} and s_{((q+1)^v)}: conjugate rectangles (u^(q+1)), (v^(q+1))
                    let e = q + 1;
                    let value = sides
                        .check(&Partition::rectangle(u, q + 1), e)
                        .mul(&sides.hat(&Partition::rectangle(v, q + 1), e));
                    (value, 0)
                }
                LiteralCase::Case2 => summed(Partition::rectangle(u, k + 1), false),
                LiteralCase::Case3 => summed(Partition::rectangle(u, k + 1), true),
                LiteralCase::Case4 => summed(Partition::rectangle(q - k, k + 1), false),
            };
            LiteralValue {
                case_id: case,
                value,
                skipped_terms,
            }
        })
        .collect()
}

fn literal_args<T: ExactRing>(rp: &RingParams, k: i64, u: usize, sf: &SplitForms<T>) -> Result<usize> {
    let k = check_lower_half(rp, k)?;
    sf.validate(rp, k)?;
    if sf.u() != u {
        return Err(Error::Split(format!("u = {u} but the check group has {} forms", sf.u())));
    }
    Ok(k)
}

/// The published case formulas, transcribed with ratio vectors. Requires
/// `beta_check != 0` and `alpha_hat != 0`. Returns one value per applicable
/// case.
pub fn det_paper_literal(
    rp: &RingParams,
    k: i64,
    u: usize,
    sf: &SplitForms<Rational>,
) -> Result<Vec<LiteralValue<Rational>>> {
    let k = literal_args(rp, k, u, sf)?;
    let check = sf.check.homog_pair();
    let hat = sf.hat.homog_pair();
    let beta_check = product(&(), check.b());
    let alpha_hat = product(&(), hat.a());
    if ExactRing::vanishes(&beta_check) {
        return Err(Error::LiteralUndefined("beta_check = 0".into()));
    }
    if ExactRing::vanishes(&alpha_hat) {
        return Err(Error::LiteralUndefined("alpha_hat = 0".into()));
    }
    let sides = RatioSides {
        check_point: ValueVector::ratios(check.a(), check.b())?,
        hat_point: ValueVector::ratios(hat.b(), hat.a())?,
        beta_check,
        alpha_hat,
    };
    Ok(literal_cases(rp, k, u, sf.hat.len(), &sides))
}

/// The same case formulas with the prefactors absorbed into homogenized
/// determinants. Polynomial in the coefficients, so it also runs over
/// [`MultiPoly`]; agrees with [`det_paper_literal`] wherever that is defined.
pub fn det_paper_literal_homog<T: ExactRing>(
    rp: &RingParams,
    k: i64,
    u: usize,
    sf: &SplitForms<T>,
) -> Result<Vec<LiteralValue<T>>> {
    let k = literal_args(rp, k, u, sf)?;
    let sides = HomogSides {
        check: sf.check.homog_pair(),
        hat: sf.hat.homog_pair().swapped(),
    };
    Ok(literal_cases(rp, k, u, sf.hat.len(), &sides))
}

/// Both sides of an identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    #[serde(serialize_with = "ser_display")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_display")]
    pub rhs: Rational,
    pub equal: bool,
}

impl IdentityCheck {
    fn new(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        IdentityCheck { lhs, rhs, equal }
    }
}

fn require_nonzero(name: &str, xs: &[Rational]) -> Result<()> {
    if xs.iter().any(ExactRing::vanishes) {
        return Err(Error::ZeroEntry(format!("{name} has a zero entry")));
    }
    Ok(())
}

/// `beta^r s_{(r^m)}(a/b) = alpha^r s_{(r^m)}(b/a)` for `|a| = |b| = 2m`.
pub fn duality_check(r: usize, m: usize, a: &[Rational], b: &[Rational]) -> Result<IdentityCheck> {
    if a.len() != 2 * m || b.len() != 2 * m {
        return Err(Error::Length(format!(
            "need |a| = |b| = 2m = {}, got {} and {}",
            2 * m,
            a.len(),
            b.len()
        )));
    }
    require_nonzero("a", a)?;
    require_nonzero("b", b)?;
    let shape = Partition::rectangle(r, m);
    let alpha = product(&(), a);
    let beta = product(&(), b);
    let lhs = ExactRing::pow(&beta, r as u32) * schur_jacobi_trudi(&shape.conjugate(), &ValueVector::ratios(a, b)?);
    let rhs = ExactRing::pow(&alpha, r as u32) * schur_jacobi_trudi(&shape.conjugate(), &ValueVector::ratios(b, a)?);
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `(prod y)^r s_lam(x/y) = (prod x)^r s_mu(y/x)` with `mu = (r^n) \ lam`.
pub fn ec2_check(lam: &Partition, r: usize, n: usize, x: &[Rational], y: &[Rational]) -> Result<IdentityCheck> {
    if x.len() != n || y.len() != n {
        return Err(Error::Length(format!("need |x| = |y| = n = {n}, got {} and {}", x.len(), y.len())));
    }
    require_nonzero("x", x)?;
    require_nonzero("y", y)?;
    let mu = lam.complement(r, n)?;
    let lhs = ExactRing::pow(&product(&(), y), r as u32) * schur(lam, &ValueVector::ratios(x, y)?);
    let rhs = ExactRing::pow(&product(&(), x), r as u32) * schur(&mu, &ValueVector::ratios(y, x)?);
    Ok(IdentityCheck::new(lhs, rhs))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct LiteralAudit<T: ExactRing> {
    pub case_id: LiteralCase,
    #[serde(serialize_with = "ser_display")]
    pub value: T,
    pub skipped_terms: usize,
    pub matches_direct: bool,
}

/// Everything computed for one `(d, q, k, u, forms)` instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct DiscrepancyReport<T: ExactRing> {
    pub d: usize,
    pub q: usize,
    pub k: usize,
    pub u: usize,
    #[serde(serialize_with = "ser_display")]
    pub direct: T,
    pub expansion: Expansion<T>,
    /// Present when the split is trivial (hat group empty).
    #[serde(serialize_with = "ser_display_opt")]
    pub corollary: Option<T>,
    pub expansion_matches_direct: bool,
    pub corollary_matches_direct: Option<bool>,
    pub paper_literal_audit: Vec<LiteralAudit<T>>,
    /// Why the literal formulas could not be evaluated, if they could not.
    pub paper_literal_undefined: Option<String>,
}

impl<T: ExactRing> DiscrepancyReport<T> {
    /// Direct, expansion and (when present) corollary all agree.
    pub fn consistent(&self) -> bool {
        self.expansion_matches_direct && self.corollary_matches_direct.unwrap_or(true)
    }

    pub fn literal_mismatches(&self) -> Vec<LiteralCase> {
        self.paper_literal_audit
            .iter()
            .filter(|l| !l.matches_direct)
            .map(|l| l.case_id)
            .collect()
    }
}

fn build_report<T: ExactRing>(
    rp: &RingParams,
    k: i64,
    u: usize,
    forms: &FormList<T>,
    literal: impl FnOnce(&SplitForms<T>) -> Result<Vec<LiteralValue<T>>>,
) -> Result<DiscrepancyReport<T>> {
    let kk = check_lower_half(rp, k)?;
    let sf = SplitForms::at(forms, u)?;
    let direct = ring::det_direct(rp, k, forms)?;
    let expansion = det_schur_expansion(rp, k, &sf)?;
    let corollary = if sf.hat.is_empty() {
        Some(det_corollary(rp, k, forms)?)
    } else {
        None
    };
    let (paper_literal_audit, paper_literal_undefined) = match literal(&sf) {
        Ok(values) => (
            values
                .into_iter()
                .map(|l| LiteralAudit {
                    matches_direct: l.value == direct,
                    case_id: l.case_id,
                    value: l.value,
                    skipped_terms: l.skipped_terms,
                })
                .collect(),
            None,
        ),
        Err(Error::LiteralUndefined(why)) => (Vec::new(), Some(why)),
        Err(e) => return Err(e),
    };
    Ok(DiscrepancyReport {
        d: rp.d(),
        q: rp.q(),
        k: kk,
        u,
        expansion_matches_direct: expansion.value == direct,
        corollary_matches_direct: corollary.as_ref().map(|c| c == &direct),
        direct,
        expansion,
        corollary,
        paper_literal_audit,
        paper_literal_undefined,
    })
}

/// Direct, expansion, corollary and literal values side by side, with the
/// literal formulas in their ratio form.
pub fn discrepancy_report(
    rp: &RingParams,
    k: i64,
    u: usize,
    forms: &FormList<Rational>,
) -> Result<DiscrepancyReport<Rational>> {
    build_report(rp, k, u, forms, |sf| det_paper_literal(rp, k, u, sf))
}

/// [`discrepancy_report`] over indeterminate coefficients `a1.., b1..`, with
/// the literal formulas in division-free form.
pub fn discrepancy_report_symbolic(rp: &RingParams, k: i64, u: usize) -> Result<DiscrepancyReport<MultiPoly>> {
    let kk = check_lower_half(rp, k)?;
    let forms = FormList::symbolic(rp.socle() - 2 * kk);
    build_report(rp, k, u, &forms, |sf| det_paper_literal_homog(rp, k, u, sf))
}
