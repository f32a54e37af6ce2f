//! Elementary symmetric and Schur polynomials evaluated at points.
//!
//! Three independent Schur evaluators are provided: the Jacobi–Trudi
//! determinant in elementary symmetric polynomials, the ratio of alternants,
//! and a sum over semistandard tableaux. The homogenized variants take a pair
//! of coefficient lists `(a; b)` in place of the ratios `a_i / b_i` and never
//! divide.

use crate::error::{Error, Result};
use crate::exact::{ExactRing, Rational};
use crate::linalg::ExactMatrix;
use crate::partitions::Partition;

/// A point `(x_1, ..., x_n)` at which symmetric polynomials are evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueVector<T: ExactRing = Rational> {
    ctx: T::Ctx,
    entries: Vec<T>,
}

impl<T: ExactRing> ValueVector<T> {
    pub fn with_ctx(ctx: T::Ctx, entries: Vec<T>) -> Self {
        ValueVector { ctx, entries }
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl ValueVector<Rational> {
    pub fn new(entries: Vec<Rational>) -> Self {
        ValueVector { ctx: (), entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| crate::exact::rat(v)).collect())
    }

    /// Componentwise ratios `num_i / den_i`.
    pub fn ratios(num: &[Rational], den: &[Rational]) -> Result<Self> {
        if num.len() != den.len() {
            return Err(Error::Length(format!("{} numerators vs {} denominators", num.len(), den.len())));
        }
        if den.iter().any(ExactRing::vanishes) {
            return Err(Error::ZeroEntry("ratio with zero denominator".into()));
        }
        Ok(Self::new(num.iter().zip(den).map(|(n, d)| n / d).collect()))
    }
}

impl From<Vec<Rational>> for ValueVector<Rational> {
    fn from(entries: Vec<Rational>) -> Self {
        Self::new(entries)
    }
}

/// Paired coefficient lists `a = (a_1, ...)`, `b = (b_1, ...)` of equal
/// length, standing for the point `a / b` without forming the ratios.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogPair<T: ExactRing = Rational> {
    ctx: T::Ctx,
    a: Vec<T>,
    b: Vec<T>,
}

impl<T: ExactRing> HomogPair<T> {
    pub fn with_ctx(ctx: T::Ctx, a: Vec<T>, b: Vec<T>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Length(format!("|a| = {} but |b| = {}", a.len(), b.len())));
        }
        Ok(HomogPair { ctx, a, b })
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `(b; a)`, the pair describing the reciprocal point.
    pub fn swapped(&self) -> Self {
        HomogPair {
            ctx: self.ctx.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

impl HomogPair<Rational> {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>) -> Result<Self> {
        Self::with_ctx((), a, b)
    }
}

/// `[E_0, ..., E_n]` where `E_k(a; b)` sums, over k-subsets `S`, the product
/// of `a_i` for `i` in `S` and `b_i` for `i` outside `S`.
pub fn elementary_homog_all<T: ExactRing>(hp: &HomogPair<T>) -> Vec<T> {
    let mut e = vec![T::one_of(&hp.ctx)];
    for (a, b) in hp.a.iter().zip(&hp.b) {
        let mut next = Vec::with_capacity(e.len() + 1);
        for j in 0..=e.len() {
            let keep = e.get(j).map(|x| x.mul(b));
            let take = j.checked_sub(1).map(|i| e[i].mul(a));
            next.push(match (keep, take) {
                (Some(x), Some(y)) => x.add(&y),
                (Some(x), None) | (None, Some(x)) => x,
                (None, None) => unreachable!(),
            });
        }
        e = next;
    }
    e
}

fn pick<T: ExactRing>(table: &[T], k: i64, ctx: &T::Ctx) -> T {
    usize::try_from(k)
        .ok()
        .and_then(|k| table.get(k))
        .cloned()
        .unwrap_or_else(|| T::zero_of(ctx))
}

/// `[e_0(x), ..., e_n(x)]`.
pub fn elementary_all<T: ExactRing>(x: &ValueVector<T>) -> Vec<T> {
    let ones = vec![T::one_of(&x.ctx); x.len()];
    elementary_homog_all(&HomogPair {
        ctx: x.ctx.clone(),
        a: x.entries.clone(),
        b: ones,
    })
}

/// `e_k(x)`; zero for `k < 0` or `k > n`, one for `k = 0`.
pub fn elementary<T: ExactRing>(k: i64, x: &ValueVector<T>) -> T {
    pick(&elementary_all(x), k, &x.ctx)
}

/// `E_k(a; b)`; equals `(prod b_i) e_k(a / b)` when every `b_i` is nonzero.
pub fn elementary_homog<T: ExactRing>(k: i64, hp: &HomogPair<T>) -> T {
    pick(&elementary_homog_all(hp), k, &hp.ctx)
}

/// `det(table[parts_i + j - i])` over `parts.len()` rows, with out-of-range
/// indices reading as zero.
pub(crate) fn jacobi_trudi_det<T: ExactRing>(parts: &[i64], table: &[T], ctx: &T::Ctx) -> T {
    let l = parts.len();
    if l == 0 {
        return T::one_of(ctx);
    }
    let m = ExactMatrix::from_fn(l, l, ctx.clone(), |i, j| {
        pick(table, parts[i] + j as i64 - i as i64, ctx)
    });
    m.det().expect("square by construction")
}

fn signed_parts(lam: &Partition) -> Vec<i64> {
    lam.parts().iter().map(|&p| p as i64).collect()
}

/// Jacobi–Trudi in elementary symmetric polynomials: returns
/// `det(e_{lam_i + j - i}(x))`, which is the Schur polynomial of the
/// *conjugate* of `lam`.
pub fn schur_jacobi_trudi<T: ExactRing>(lam: &Partition, x: &ValueVector<T>) -> T {
    jacobi_trudi_det(&signed_parts(lam), &elementary_all(x), &x.ctx)
}

/// `s_lam(x)`, via Jacobi–Trudi on the conjugate partition.
pub fn schur<T: ExactRing>(lam: &Partition, x: &ValueVector<T>) -> T {
    schur_jacobi_trudi(&lam.conjugate(), x)
}

/// Division-free Jacobi–Trudi: `det(E_{lam_i + j - i}(a; b))` over the parts
/// of `lam`. Equals `(prod b_i)^len(lam) * s_{lam'}(a / b)` where all `b_i`
/// are nonzero.
pub fn schur_homog<T: ExactRing>(lam: &Partition, hp: &HomogPair<T>) -> T {
    homog_jacobi_trudi(&signed_parts(lam), hp)
}

/// [`schur_homog`] over an explicit row sequence. Rows may be zero or
/// negative; each trailing zero row contributes a factor `E_0 = prod b_i`.
pub fn homog_jacobi_trudi<T: ExactRing>(rows: &[i64], hp: &HomogPair<T>) -> T {
    jacobi_trudi_det(rows, &elementary_homog_all(hp), &hp.ctx)
}

/// Ratio of alternants `det(x_j^{lam_i + n - i}) / det(x_j^{n - i})`.
pub fn schur_bialternant(lam: &Partition, x: &ValueVector<Rational>) -> Result<Rational> {
    let n = x.len();
    if lam.len() > n {
        return Err(Error::TooManyParts {
            parts: lam.len(),
            vars: n,
        });
    }
    let xs = x.entries();
    for i in 0..n {
        for j in i + 1..n {
            if xs[i] == xs[j] {
                return Err(Error::NonDistinctPoint);
            }
        }
    }
    let alternant = |shift: &dyn Fn(usize) -> usize| {
        ExactMatrix::from_fn(n, n, (), |i, j| ExactRing::pow(&xs[j], (shift(i) + n - 1 - i) as u32))
            .det()
            .expect("square")
    };
    let numerator = alternant(&|i| lam.part(i));
    let vandermonde = alternant(&|_| 0);
    Ok(numerator / vandermonde)
}

/// Sum over semistandard Young tableaux of shape `lam` with entries in
/// `1..=n` of the monomial `prod x_{T(c)}`.
pub fn schur_tableaux<T: ExactRing>(lam: &Partition, x: &ValueVector<T>) -> Result<T> {
    let n = x.len();
    if lam.size() > 10 || n > 5 {
        return Err(Error::TableauxGuard {
            cells: lam.size(),
            vars: n,
        });
    }
    let cells: Vec<(usize, usize)> = lam
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &w)| (0..w).map(move |j| (i, j)))
        .collect();
    let width = lam.part(0);
    let mut filling = vec![vec![0usize; width]; lam.len()];
    let mut total = T::zero_of(&x.ctx);
    fill(&cells, 0, &mut filling, x, T::one_of(&x.ctx), &mut total);
    Ok(total)
}

fn fill<T: ExactRing>(
    cells: &[(usize, usize)],
    at: usize,
    filling: &mut [Vec<usize>],
    x: &ValueVector<T>,
    weight: T,
    total: &mut T,
) {
    let Some(&(i, j)) = cells.get(at) else {
        *total = total.add(&weight);
        return;
    };
    // rows weakly increase, columns strictly increase
    let lo_row = if j > 0 { filling[i][j - 1] } else { 0 };
    let lo_col = if i > 0 { filling[i - 1][j] + 1 } else { 0 };
    for v in lo_row.max(lo_col)..x.len() {
        filling[i][j] = v;
        fill(cells, at + 1, filling, x, weight.mul(&x.entries[v]), total);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn vv(values: &[i64]) -> ValueVector {
        ValueVector::from_ints(values)
    }

    // Direct sum over k-subsets.
    fn subset_sum(k: usize, a: &[Rational], b: &[Rational]) -> Rational {
        let n = a.len();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| {
                (0..n)
                    .map(|i| if m & (1 << i) != 0 { a[i].clone() } else { b[i].clone() })
                    .product::<Rational>()
            })
            .sum()
    }

    #[test]
    fn elementary_examples() {
        let x = vv(&[1, 2, 3]);
        let ones = vec![rat(1); 3];
        assert_eq!(elementary(2, &x), subset_sum(2, x.entries(), &ones));
        assert_eq!(elementary(2, &x), rat(11));
        assert_eq!(elementary(0, &x), rat(1));
        assert_eq!(elementary(0, &vv(&[])), rat(1));
        assert_eq!(elementary(3, &vv(&[1, 2])), rat(0));
        assert_eq!(elementary(-1, &x), rat(0));
    }

    #[test]
    fn elementary_homog_examples() {
        let hp = HomogPair::new(vec![rat(1), rat(3)], vec![rat(2), rat(1)]).unwrap();
        assert_eq!(elementary_homog(1, &hp), subset_sum(1, hp.a(), hp.b()));
        assert_eq!(elementary_homog(1, &hp), rat(7));
        let single = HomogPair::new(vec![rat(5)], vec![rat(4)]).unwrap();
        assert_eq!(elementary_homog(0, &single), rat(4));
        let a = vec![rat(2), ratio(-1, 3), rat(7)];
        let hp = HomogPair::new(a.clone(), vec![rat(1); 3]).unwrap();
        for k in 0..=3 {
            assert_eq!(elementary_homog(k, &hp), elementary(k, &ValueVector::new(a.clone())));
        }
        assert!(HomogPair::new(vec![rat(1)], vec![]).is_err());
    }

    #[test]
    fn jacobi_trudi_examples() {
        // s_(2,1)(2,1) = x1 x2 (x1 + x2) = 6
        assert_eq!(schur_jacobi_trudi(&p(&[2, 1]), &vv(&[2, 1])), rat(6));
        assert_eq!(schur_jacobi_trudi(&Partition::empty(), &vv(&[4, 5])), rat(1));
        // (1,1) is conjugate to (2): x1^2 + x1 x2 + x2^2 at (1,1)
        assert_eq!(schur_jacobi_trudi(&p(&[1, 1]), &vv(&[1, 1])), rat(3));
        assert_eq!(schur(&p(&[2]), &vv(&[1, 1])), rat(3));
    }

    #[test]
    fn schur_in_no_variables() {
        assert_eq!(schur(&Partition::empty(), &vv(&[])), rat(1));
        assert_eq!(schur(&p(&[1]), &vv(&[])), rat(0));
        assert_eq!(schur_jacobi_trudi(&p(&[2]), &vv(&[])), rat(0));
    }

    #[test]
    fn bialternant_examples() {
        assert_eq!(schur_bialternant(&p(&[2, 1]), &vv(&[2, 1])).unwrap(), rat(6));
        assert_eq!(schur_bialternant(&p(&[1]), &vv(&[5, 7])).unwrap(), rat(12));
        assert_eq!(schur_bialternant(&p(&[2, 2]), &vv(&[1, 1])), Err(Error::NonDistinctPoint));
        assert!(matches!(
            schur_bialternant(&p(&[1, 1, 1]), &vv(&[1, 2])),
            Err(Error::TooManyParts { .. })
        ));
    }

    #[test]
    fn tableaux_examples() {
        let x = vv(&[3, 4]);
        assert_eq!(schur_tableaux(&p(&[1]), &x).unwrap(), rat(7));
        // 8 semistandard tableaux of shape (2,1) with entries <= 3
        assert_eq!(schur_tableaux(&p(&[2, 1]), &vv(&[1, 1, 1])).unwrap(), rat(8));
        assert_eq!(schur_tableaux(&p(&[3]), &vv(&[1])).unwrap(), rat(1));
        assert!(schur_tableaux(&p(&[11]), &vv(&[1])).is_err());
        assert!(schur_tableaux(&p(&[1]), &vv(&[1; 6])).is_err());
    }

    #[test]
    fn homog_examples() {
        // lam=(1,1) on one pair: det [[E1, E2], [E0, E1]] = a^2
        for (a, b) in [(3, 5), (-2, 0), (0, 7)] {
            let hp = HomogPair::new(vec![rat(a)], vec![rat(b)]).unwrap();
            assert_eq!(schur_homog(&p(&[1, 1]), &hp), rat(a * a));
        }
        let hp = HomogPair::new(vec![rat(1), rat(3)], vec![rat(2), rat(1)]).unwrap();
        assert_eq!(schur_homog(&Partition::empty(), &hp), rat(1));
        assert_eq!(schur_homog(&p(&[1]), &hp), rat(7));
    }

    #[test]
    fn trailing_zero_rows_contribute_e0() {
        let hp = HomogPair::new(vec![rat(2), rat(5)], vec![rat(3), rat(7)]).unwrap();
        let base = schur_homog(&p(&[2, 1]), &hp);
        assert_eq!(homog_jacobi_trudi(&[2, 1, 0, 0], &hp), base * rat(21) * rat(21));
        assert_eq!(homog_jacobi_trudi(&[2, 1, -1], &hp), rat(0));
    }
}
