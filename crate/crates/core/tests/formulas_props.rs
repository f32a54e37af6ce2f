use lefdet::formulas::{det_corollary_ratio, LiteralCase};
use lefdet::sampling::{cell_rng, forms};
use lefdet::{det_corollary, det_direct, det_schur_expansion, discrepancy_report, FormList, MultiPoly, RingParams, SplitForms};
use proptest::prelude::*;

fn instance(max_socle: usize) -> impl Strategy<Value = (RingParams, usize, usize, u64)> {
    prop::sample::select(RingParams::all_up_to(max_socle))
        .prop_flat_map(|rp| (Just(rp), 0..=rp.socle() / 2))
        .prop_flat_map(|(rp, k)| (Just(rp), Just(k), 0..=rp.socle() - 2 * k, any::<u64>()))
}

proptest! {
    #[test]
    fn expansion_matches_direct((rp, k, u, seed) in instance(9), allow_zero in any::<bool>()) {
        let fl = forms(&mut cell_rng(seed, &[]), rp.socle() - 2 * k, allow_zero);
        let ex = det_schur_expansion(&rp, k as i64, &SplitForms::at(&fl, u).unwrap()).unwrap();
        prop_assert_eq!(ex.value, det_direct(&rp, k as i64, &fl).unwrap());
    }

    #[test]
    fn corollary_matches_direct((rp, k, _u, seed) in instance(10)) {
        let fl = forms(&mut cell_rng(seed, &[]), rp.socle() - 2 * k, true);
        let direct = det_direct(&rp, k as i64, &fl).unwrap();
        prop_assert_eq!(det_corollary(&rp, k as i64, &fl).unwrap(), direct.clone());
        if fl.forms().iter().all(|f| !num_traits::Zero::is_zero(f.b())) {
            prop_assert_eq!(det_corollary_ratio(&rp, k as i64, &fl).unwrap(), direct);
        }
    }

    #[test]
    fn split_point_is_irrelevant((rp, k, u, seed) in instance(8)) {
        let fl = forms(&mut cell_rng(seed, &[]), rp.socle() - 2 * k, false);
        let a = det_schur_expansion(&rp, k as i64, &SplitForms::at(&fl, u).unwrap()).unwrap();
        let b = det_schur_expansion(&rp, k as i64, &SplitForms::at(&fl, 0).unwrap()).unwrap();
        prop_assert_eq!(a.value, b.value);
    }

    #[test]
    fn report_is_consistent((rp, k, u, seed) in instance(8)) {
        let fl = forms(&mut cell_rng(seed, &[]), rp.socle() - 2 * k, false);
        let r = discrepancy_report(&rp, k as i64, u, &fl).unwrap();
        prop_assert!(r.consistent());
        let cases: Vec<LiteralCase> = r.paper_literal_audit.iter().map(|l| l.case_id).collect();
        if r.paper_literal_undefined.is_none() {
            prop_assert_eq!(cases, LiteralCase::applicable(&rp, k, u));
        }
    }
}

#[test]
fn symbolic_expansion_identity_small() {
    for rp in RingParams::all_up_to(5) {
        for k in 0..=rp.socle() / 2 {
            let fl: FormList<MultiPoly> = FormList::symbolic(rp.socle() - 2 * k);
            let direct = det_direct(&rp, k as i64, &fl).unwrap();
            for u in 0..=fl.len() {
                let ex = det_schur_expansion(&rp, k as i64, &SplitForms::at(&fl, u).unwrap()).unwrap();
                assert_eq!(ex.value, direct, "d={} q={} k={k} u={u}", rp.d(), rp.q());
            }
        }
    }
}
