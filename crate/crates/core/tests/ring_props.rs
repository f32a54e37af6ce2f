use lefdet::exact::ExactRing;
use lefdet::ring::{det_direct_transposed, dim, mult_matrix, mult_matrix_block, product_coefficients};
use lefdet::sampling::{cell_rng, forms};
use lefdet::{det_direct, ExactMatrix, FormList, RingParams};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (RingParams, usize, u64)> {
    prop::sample::select(RingParams::all_up_to(8))
        .prop_flat_map(|rp| (Just(rp), 0..=rp.socle() / 2, any::<u64>()))
}

fn random_forms(rp: &RingParams, k: usize, seed: u64, allow_zero: bool) -> FormList {
    forms(&mut cell_rng(seed, &[]), rp.socle() - 2 * k, allow_zero)
}

proptest! {
    #[test]
    fn block_equals_chained_product((rp, k, seed) in instance()) {
        let fl = random_forms(&rp, k, seed, true);
        let mut chained = ExactMatrix::identity(dim(&rp, k as i64), ());
        for (i, f) in fl.forms().iter().enumerate() {
            chained = mult_matrix(&rp, f, (k + i) as i64).unwrap().matmul(&chained).unwrap();
        }
        prop_assert_eq!(chained, mult_matrix_block(&rp, &fl, k as i64).unwrap());
    }

    #[test]
    fn invariant_under_reordering((rp, k, seed) in instance(), rot in 0usize..6) {
        let fl = random_forms(&rp, k, seed, true);
        let n = fl.len();
        let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n.max(1)).rev().collect();
        prop_assert_eq!(det_direct(&rp, k as i64, &fl).unwrap(), det_direct(&rp, k as i64, &fl.permuted(&perm)).unwrap());
    }

    #[test]
    fn transposition_symmetry((rp, k, seed) in instance()) {
        let fl = random_forms(&rp, k, seed, true);
        prop_assert_eq!(det_direct(&rp, k as i64, &fl).unwrap(), det_direct_transposed(&rp, k as i64, &fl).unwrap());
    }

    #[test]
    fn entries_follow_product_coefficients((rp, k, seed) in instance()) {
        let fl = random_forms(&rp, k, seed, false);
        let m = mult_matrix_block(&rp, &fl, k as i64).unwrap();
        let coeffs = product_coefficients(&fl);
        let u = fl.len();
        let lo_src = k.saturating_sub(rp.d());
        let lo_dst = (k + u).saturating_sub(rp.d());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let t = (lo_dst + i) as i64 - (lo_src + j) as i64;
                let expected = if (0..=u as i64).contains(&t) { coeffs[t as usize].clone() } else { <lefdet::Rational as ExactRing>::zero_of(&()) };
                prop_assert_eq!(m.get(i, j), &expected);
            }
        }
    }

    #[test]
    fn square_and_symmetric_dimensions((rp, k, _seed) in instance()) {
        let k = k as i64;
        prop_assert_eq!(dim(&rp, k), dim(&rp, rp.socle() as i64 - k));
    }
}
