//! The graded algebra `R = K[x,y] / <x^(d+1), y^(q+1)>`.
//!
//! Bases are ordered by strictly decreasing x-exponent (equivalently
//! increasing y-exponent), so the position of `x^i y^j` in `B_k` is
//! `j - max(0, k - d)`. All determinants in the crate are taken in these
//! orders. This module is the brute-force ground truth for [`crate::formulas`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactRing, Rational};
use crate::linalg::ExactMatrix;
use crate::mpoly::MultiPoly;
use crate::symfunc::HomogPair;

/// Exponent bounds `d` (for x) and `q` (for y). Public construction enforces
/// `d >= q >= 1`; the transposed ring used for symmetry checks is built
/// internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingParams {
    d: usize,
    q: usize,
}

impl RingParams {
    pub fn new(d: usize, q: usize) -> Result<Self> {
        if q < 1 || d < q {
            return Err(Error::RingParams { d, q });
        }
        Ok(RingParams { d, q })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Socle degree `d + q`.
    pub fn socle(&self) -> usize {
        self.d + self.q
    }

    /// The ring with x and y exchanged; may violate `d >= q`.
    pub(crate) fn transposed(&self) -> Self {
        RingParams { d: self.q, q: self.d }
    }

    fn check_degree(&self, k: i64) -> Result<usize> {
        if k < 0 || k as usize > self.socle() {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                top: self.socle(),
            });
        }
        Ok(k as usize)
    }

    /// Smallest y-exponent occurring in degree `k`.
    fn min_y(&self, k: usize) -> usize {
        k.saturating_sub(self.d)
    }

    /// Every pair `(d, q)` with `d >= q >= 1` and `d + q <= max_socle`,
    /// ordered by `(d, q)`.
    pub fn all_up_to(max_socle: usize) -> Vec<RingParams> {
        let mut out = Vec::new();
        for d in 1..max_socle {
            for q in 1..=d.min(max_socle - d) {
                out.push(RingParams { d, q });
            }
        }
        out
    }
}

/// `a x + b y` with not both coefficients zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm<T: ExactRing = Rational> {
    a: T,
    b: T,
}

impl<T: ExactRing> LinearForm<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if a.vanishes() && b.vanishes() {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { a, b })
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    /// `b x + a y`.
    pub fn swapped(&self) -> Self {
        LinearForm {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

impl LinearForm<Rational> {
    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(crate::exact::rat(a), crate::exact::rat(b))
    }
}

/// An ordered list of linear forms together with the coefficient ring
/// context (needed when the list is empty).
#[derive(Debug, Clone, PartialEq)]
pub struct FormList<T: ExactRing = Rational> {
    ctx: T::Ctx,
    forms: Vec<LinearForm<T>>,
}

impl<T: ExactRing> FormList<T> {
    pub fn with_ctx(ctx: T::Ctx, forms: Vec<LinearForm<T>>) -> Self {
        FormList { ctx, forms }
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn forms(&self) -> &[LinearForm<T>] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// `(a; b)` coefficient lists.
    pub fn homog_pair(&self) -> HomogPair<T> {
        HomogPair::with_ctx(
            self.ctx.clone(),
            self.forms.iter().map(|f| f.a.clone()).collect(),
            self.forms.iter().map(|f| f.b.clone()).collect(),
        )
        .expect("equal lengths")
    }

    pub fn swapped(&self) -> Self {
        FormList {
            ctx: self.ctx.clone(),
            forms: self.forms.iter().map(LinearForm::swapped).collect(),
        }
    }

    /// Forms split at position `u`: `(forms[..u], forms[u..])`.
    pub fn split_at(&self, u: usize) -> (Self, Self) {
        let (lo, hi) = self.forms.split_at(u.min(self.forms.len()));
        (
            FormList::with_ctx(self.ctx.clone(), lo.to_vec()),
            FormList::with_ctx(self.ctx.clone(), hi.to_vec()),
        )
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut forms = self.forms.clone();
        forms.extend(other.forms.iter().cloned());
        FormList::with_ctx(self.ctx.clone(), forms)
    }

    /// The forms reordered by `perm` (a permutation of `0..len`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        FormList::with_ctx(self.ctx.clone(), perm.iter().map(|&i| self.forms[i].clone()).collect())
    }
}

impl FormList<Rational> {
    pub fn new(forms: Vec<LinearForm<Rational>>) -> Self {
        Self::with_ctx((), forms)
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(a, b)| LinearForm::from_ints(a, b))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Parses the wire format `a1,b1;a2,b2;...`; the empty string is the
    /// empty list.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::new(Vec::new()));
        }
        text.split(';')
            .map(|pair| {
                let coords = crate::exact::parse_rational_list(pair)?;
                match <[Rational; 2]>::try_from(coords) {
                    Ok([a, b]) => LinearForm::new(a, b),
                    Err(_) => Err(Error::Parse(format!("form {pair:?} is not a pair a,b"))),
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Inverse of [`FormList::parse`].
    pub fn to_wire(&self) -> String {
        self.forms
            .iter()
            .map(|f| format!("{},{}", f.a, f.b))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl FormList<MultiPoly> {
    /// `n` forms `a_i x + b_i y` with independent indeterminates, laid out as
    /// variables `a1..an, b1..bn`.
    pub fn symbolic(n: usize) -> Self {
        let arity = 2 * n;
        let forms = (0..n)
            .map(|i| LinearForm {
                a: MultiPoly::var(arity, i),
                b: MultiPoly::var(arity, n + i),
            })
            .collect();
        FormList { ctx: arity, forms }
    }

    /// Substitutes rational values for `a_i` and `b_i`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<FormList<Rational>> {
        self.forms
            .iter()
            .map(|f| LinearForm::new(f.a.eval(point)?, f.b.eval(point)?))
            .collect::<Result<Vec<_>>>()
            .map(FormList::new)
    }
}

/// The monomial basis `B_k` as `(x-exponent, y-exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedBasis {
    pub degree: usize,
    pub monomials: Vec<(usize, usize)>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, monomial: (usize, usize)) -> Option<usize> {
        self.monomials.iter().position(|&m| m == monomial)
    }
}

pub fn basis(rp: &RingParams, k: i64) -> Result<GradedBasis> {
    let k = rp.check_degree(k)?;
    let monomials = (rp.min_y(k)..=k.min(rp.q)).map(|j| (k - j, j)).collect();
    Ok(GradedBasis { degree: k, monomials })
}

/// `dim_K R_k`, zero outside `0..=d+q`.
pub fn dim(rp: &RingParams, k: i64) -> usize {
    basis(rp, k).map_or(0, |b| b.len())
}

/// Coefficients of `prod (a_t x + b_t y)` indexed by y-exponent `0..=u`,
/// computed by repeated multiplication.
pub fn product_coefficients<T: ExactRing>(forms: &FormList<T>) -> Vec<T> {
    let mut coeffs = vec![T::one_of(&forms.ctx)];
    for f in &forms.forms {
        let mut next = vec![T::zero_of(&forms.ctx); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] = next[i].add(&c.mul(&f.a));
            next[i + 1] = next[i + 1].add(&c.mul(&f.b));
        }
        coeffs = next;
    }
    coeffs
}

/// Matrix of `f -> f * form` from `R_k` to `R_{k+1}`, built monomial by
/// monomial.
pub fn mult_matrix<T: ExactRing>(rp: &RingParams, form: &LinearForm<T>, k: i64) -> Result<ExactMatrix<T>> {
    if k < 0 || k as usize >= rp.socle() {
        return Err(Error::DegreeOutOfRange {
            degree: k,
            top: rp.socle().saturating_sub(1),
        });
    }
    let source = basis(rp, k)?;
    let target = basis(rp, k + 1)?;
    let ctx = form.a.ctx();
    let mut m = ExactMatrix::zeros(target.len(), source.len(), ctx);
    for (col, &(i, j)) in source.monomials.iter().enumerate() {
        if let Some(row) = target.position((i + 1, j)) {
            m.set(row, col, form.a.clone());
        }
        if let Some(row) = target.position((i, j + 1)) {
            m.set(row, col, form.b.clone());
        }
    }
    Ok(m)
}

/// Matrix of multiplication by `l_1 ... l_u` from `R_k` to `R_{k+u}` in one
/// shot: the entry at target y-degree `i` and source y-degree `j` is the
/// coefficient of `y^(i-j)` in the product. Reduction only deletes monomials
/// outside the bases, so unreduced coefficients are the entries.
pub fn mult_matrix_block<T: ExactRing>(rp: &RingParams, forms: &FormList<T>, k: i64) -> Result<ExactMatrix<T>> {
    let source = basis(rp, k)?;
    let target = basis(rp, k + forms.len() as i64)?;
    let coeffs = product_coefficients(forms);
    Ok(ExactMatrix::from_fn(target.len(), source.len(), forms.ctx.clone(), |r, c| {
        let (i, j) = (target.monomials[r].1, source.monomials[c].1);
        i.checked_sub(j)
            .and_then(|t| coeffs.get(t))
            .cloned()
            .unwrap_or_else(|| T::zero_of(&forms.ctx))
    }))
}

/// `D_{d,q}(a; b)`: determinant of multiplication by all forms from `R_k` to
/// `R_{d+q-k}`. The artifact-wide ground truth.
pub fn det_direct<T: ExactRing>(rp: &RingParams, k: i64, forms: &FormList<T>) -> Result<T> {
    let k = check_lower_half(rp, k)?;
    let expected = rp.socle() - 2 * k;
    if forms.len() != expected {
        return Err(Error::NonSquareMap {
            expected,
            got: forms.len(),
        });
    }
    mult_matrix_block(rp, forms, k as i64)?.det()
}

/// `D_{q,d}(b; a)`: the same determinant computed in the ring with x and y
/// exchanged and every form swapped accordingly.
pub fn det_direct_transposed<T: ExactRing>(rp: &RingParams, k: i64, forms: &FormList<T>) -> Result<T> {
    det_direct(&rp.transposed(), k, &forms.swapped())
}

pub(crate) fn check_lower_half(rp: &RingParams, k: i64) -> Result<usize> {
    if k < 0 || 2 * k as usize > rp.socle() {
        return Err(Error::DegreeOutOfRange {
            degree: k,
            top: rp.socle() / 2,
        });
    }
    Ok(k as usize)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlpDegree {
    pub k: usize,
    #[serde(serialize_with = "crate::json::ser_display")]
    pub det: Rational,
    pub nonzero: bool,
}

/// Per-degree determinants of `x l^(d+q-2k)` and the overall verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlpReport {
    pub degrees: Vec<SlpDegree>,
    pub slp: bool,
    pub first_failing_k: Option<usize>,
}

pub fn slp_check(rp: &RingParams, form: &LinearForm<Rational>) -> Result<SlpReport> {
    let degrees = (0..=rp.socle() / 2)
        .map(|k| {
            let forms = FormList::new(vec![form.clone(); rp.socle() - 2 * k]);
            let det = det_direct(rp, k as i64, &forms)?;
            let nonzero = !ExactRing::vanishes(&det);
            Ok(SlpDegree { k, det, nonzero })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_failing_k = degrees.iter().find(|e| !e.nonzero).map(|e| e.k);
    Ok(SlpReport {
        slp: first_failing_k.is_none(),
        degrees,
        first_failing_k,
    })
}
