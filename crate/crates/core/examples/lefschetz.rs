//! Per-degree determinants of powers of one linear form.
//!
//!     cargo run --example lefschetz

use lefdet::ring::slp_check;
use lefdet::{LinearForm, RingParams};

fn main() -> lefdet::Result<()> {
    for (a, b) in [(1, 1), (1, 0), (2, -1)] {
        let form = LinearForm::from_ints(a, b)?;
        for rp in RingParams::all_up_to(6) {
            let r = slp_check(&rp, &form)?;
            let dets: Vec<String> = r.degrees.iter().map(|g| g.det.to_string()).collect();
            println!("({a},{b}) d={} q={}: slp={} dets [{}]", rp.d(), rp.q(), r.slp, dets.join(", "));
        }
    }
    Ok(())
}
