//! Dense exact matrices, determinants, minors and a Cauchy–Binet verifier.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactRing, Rational};

/// Row-major dense matrix over an exact ring.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<T: ExactRing> {
    rows: usize,
    cols: usize,
    ctx: T::Ctx,
    entries: Vec<T>,
}

impl<T: ExactRing> ExactMatrix<T> {
    pub fn new(rows: usize, cols: usize, ctx: T::Ctx, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            ctx,
            entries,
        })
    }

    pub fn from_rows(ctx: T::Ctx, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(n, m, ctx, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, ctx: T::Ctx) -> Self {
        let entries = vec![T::zero_of(&ctx); rows * cols];
        ExactMatrix {
            rows,
            cols,
            ctx,
            entries,
        }
    }

    pub fn identity(n: usize, ctx: T::Ctx) -> Self {
        let mut m = Self::zeros(n, n, ctx);
        for i in 0..n {
            m.set(i, i, T::one_of(&m.ctx));
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, ctx: T::Ctx, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        ExactMatrix {
            rows,
            cols,
            ctx,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.ctx.clone(), |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, self.ctx.clone(), |i, j| {
            (0..self.cols).fold(T::zero_of(&self.ctx), |acc, t| {
                acc.add(&self.get(i, t).mul(rhs.get(t, j)))
            })
        }))
    }

    /// The submatrix on the given (strictly increasing) row and column sets.
    pub fn submatrix(&self, rowset: &[usize], colset: &[usize]) -> Result<Self> {
        check_index_set(rowset, self.rows, "row")?;
        check_index_set(colset, self.cols, "column")?;
        Ok(Self::from_fn(rowset.len(), colset.len(), self.ctx.clone(), |i, j| {
            self.get(rowset[i], colset[j]).clone()
        }))
    }

    /// Determinant using the ring's preferred algorithm.
    pub fn det(&self) -> Result<T> {
        T::determinant(self)
    }
}

fn check_index_set(set: &[usize], bound: usize, what: &str) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadIndices(format!("{what} indices {set:?} not strictly increasing")));
    }
    if set.last().is_some_and(|&i| i >= bound) {
        return Err(Error::BadIndices(format!("{what} indices {set:?} exceed {bound}")));
    }
    Ok(())
}

fn require_square<T: ExactRing>(m: &ExactMatrix<T>) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    Ok(())
}

pub fn det<T: ExactRing>(m: &ExactMatrix<T>) -> Result<T> {
    m.det()
}

/// Cofactor expansion along rows, memoised over the set of used columns, so
/// an `n x n` determinant costs `O(n 2^n)` ring operations. Works over any
/// commutative ring.
pub fn det_laplace<T: ExactRing>(m: &ExactMatrix<T>) -> Result<T> {
    require_square(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok(T::one_of(&m.ctx));
    }
    assert!(n <= 20, "cofactor expansion limited to 20x20");
    // minors[mask] = det of the bottom |mask| rows restricted to columns in mask
    let mut minors: Vec<Option<T>> = vec![None; 1 << n];
    minors[0] = Some(T::one_of(&m.ctx));
    for mask in 1usize..(1 << n) {
        let size = mask.count_ones() as usize;
        let row = n - size;
        let mut acc = T::zero_of(&m.ctx);
        // sign alternates over the columns of mask in increasing order
        for (pos, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
            let entry = m.get(row, col);
            if entry.vanishes() {
                continue;
            }
            let rest = minors[mask & !(1 << col)].as_ref().expect("smaller masks first");
            let term = entry.mul(rest);
            acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        minors[mask] = Some(acc);
    }
    Ok(minors[(1 << n) - 1].take().expect("full mask computed"))
}

/// Fraction-free (Bareiss) elimination. Each row is first scaled to integers
/// by the lcm of its denominators; every elimination division is then checked
/// to be exact over the integers.
pub fn det_bareiss(m: &ExactMatrix<Rational>) -> Result<Rational> {
    require_square(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (quot, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = quot;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        det = -det;
    }
    Ok(det)
}

/// Determinant of the submatrix on `rowset x colset`; the empty minor is 1.
pub fn minor_det<T: ExactRing>(m: &ExactMatrix<T>, rowset: &[usize], colset: &[usize]) -> Result<T> {
    if rowset.len() != colset.len() {
        return Err(Error::BadIndices(format!(
            "row set of size {} vs column set of size {}",
            rowset.len(),
            colset.len()
        )));
    }
    m.submatrix(rowset, colset)?.det()
}

/// Both sides of the Cauchy–Binet formula for `Y` (p x m) times `X` (m x p).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CauchyBinet<T> {
    /// `det(Y X)`.
    pub lhs: T,
    /// Sum over p-subsets `S` of `det(Y[:, S]) det(X[S, :])`; empty when `p > m`.
    pub rhs: T,
    pub equal: bool,
}

pub fn cauchy_binet_check<T: ExactRing>(y: &ExactMatrix<T>, x: &ExactMatrix<T>) -> Result<CauchyBinet<T>> {
    let (p, m) = (y.rows, y.cols);
    if x.rows != m || x.cols != p {
        return Err(Error::Dimension(format!(
            "Cauchy-Binet needs Y p x m and X m x p, got {}x{} and {}x{}",
            y.rows, y.cols, x.rows, x.cols
        )));
    }
    let lhs = y.matmul(x)?.det()?;
    let all: Vec<usize> = (0..p).collect();
    let mut rhs = T::zero_of(&y.ctx);
    for subset in (0..m).combinations(p) {
        let ym = minor_det(y, &all, &subset)?;
        if ym.vanishes() {
            continue;
        }
        rhs = rhs.add(&ym.mul(&minor_det(x, &subset, &all)?));
    }
    let equal = lhs == rhs;
    Ok(CauchyBinet { lhs, rhs, equal })
}
