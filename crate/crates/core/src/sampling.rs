//! Seeded random inputs for verification sweeps.
//!
//! Every random stream is keyed by a base seed and the coordinates of the
//! cell that consumes it, so results do not depend on how cells are
//! scheduled across workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{ratio, Rational};
use crate::linalg::ExactMatrix;
use crate::ring::{FormList, LinearForm};

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// ChaCha8 stream for `(seed, coords...)`.
pub fn cell_rng(seed: u64, coords: &[u64]) -> ChaCha8Rng {
    let key = coords
        .iter()
        .fold(splitmix64(seed), |h, &c| splitmix64(h ^ splitmix64(c.wrapping_add(1))));
    ChaCha8Rng::seed_from_u64(key)
}

fn nonzero_digit<R: Rng>(rng: &mut R) -> i64 {
    let v = rng.gen_range(1..=9);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// `n / m` with `n, m` drawn from `[-9, 9] \ {0}`.
pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(nonzero_digit(rng), nonzero_digit(rng))
}

/// Like [`nonzero_rational`], but zero with probability 1/4 when
/// `allow_zero` is set.
pub fn rational<R: Rng>(rng: &mut R, allow_zero: bool) -> Rational {
    if allow_zero && rng.gen_ratio(1, 4) {
        ratio(0, 1)
    } else {
        nonzero_rational(rng)
    }
}

pub fn nonzero_rationals<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| nonzero_rational(rng)).collect()
}

/// `n` pairwise distinct nonzero rationals.
pub fn distinct_rationals<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let x = nonzero_rational(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn form<R: Rng>(rng: &mut R, allow_zero: bool) -> LinearForm {
    loop {
        if let Ok(f) = LinearForm::new(rational(rng, allow_zero), rational(rng, allow_zero)) {
            return f;
        }
    }
}

pub fn forms<R: Rng>(rng: &mut R, n: usize, allow_zero: bool) -> FormList {
    FormList::new((0..n).map(|_| form(rng, allow_zero)).collect())
}

/// Matrix with entries from [`rational`] (zeros allowed).
pub fn rational_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> ExactMatrix<Rational> {
    ExactMatrix::from_fn(rows, cols, (), |_, _| rational(rng, true))
}
