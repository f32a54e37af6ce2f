//! Direct and expanded determinants as polynomials in indeterminate
//! coefficients.
//!
//!     cargo run --example symbolic

use lefdet::{det_corollary, det_direct, det_schur_expansion, FormList, MultiPoly, RingParams, SplitForms};

fn main() -> lefdet::Result<()> {
    for (d, q, k) in [(2, 1, 0), (2, 2, 1), (3, 2, 1), (4, 2, 2)] {
        let rp = RingParams::new(d, q)?;
        let n = rp.socle() - 2 * k;
        let forms = FormList::symbolic(n);
        let direct: MultiPoly = det_direct(&rp, k as i64, &forms)?;
        println!("d={d} q={q} k={k}: {direct}");
        for u in 0..=n {
            let ex = det_schur_expansion(&rp, k as i64, &SplitForms::at(&forms, u)?)?;
            println!("  u={u}: {} terms, equal {}", ex.nonzero_terms(), ex.value == direct);
        }
        println!("  corollary equal {}", det_corollary(&rp, k as i64, &forms)? == direct);
    }
    Ok(())
}
