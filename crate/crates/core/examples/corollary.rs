//! Closed form as a single rectangular Schur polynomial in homogenized
//! coordinates. Zero coefficients are fine here.
//!
//!     cargo run --example corollary

use lefdet::formulas::corollary_rectangle;
use lefdet::{det_corollary, det_direct, FormList, RingParams};

fn main() -> lefdet::Result<()> {
    let cases = [(2, 2, 1, "2,1;1,3"), (3, 1, 1, "1,0;1,1"), (4, 3, 2, "1,2;0,1;3,-1"), (2, 1, 0, "1,1;1,-1;2,1")];
    for (d, q, k, wire) in cases {
        let rp = RingParams::new(d, q)?;
        let forms = FormList::parse(wire)?;
        let rect = corollary_rectangle(&rp, k);
        let c = det_corollary(&rp, k as i64, &forms)?;
        let direct = det_direct(&rp, k as i64, &forms)?;
        println!("d={d} q={q} k={k} forms={wire}: shape {rect}, corollary {c}, direct {direct}");
    }
    Ok(())
}
