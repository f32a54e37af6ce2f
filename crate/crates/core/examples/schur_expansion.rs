//! Expands the determinant as a sum of products of Schur minors and lists
//! every term.
//!
//!     cargo run --example schur_expansion

use lefdet::{det_direct, det_schur_expansion, FormList, RingParams, SplitForms};

fn main() -> lefdet::Result<()> {
    let rp = RingParams::new(2, 2)?;
    let forms = FormList::parse("2,1;1,3")?;
    let k = 1;
    for u in 0..=forms.len() {
        let ex = det_schur_expansion(&rp, k, &SplitForms::at(&forms, u)?)?;
        println!("u = {u}: {} ({} nonzero terms)", ex.value, ex.nonzero_terms());
        for t in &ex.terms {
            println!(
                "  delta={:?} lam={} nu={:?}  {} * {} = {}",
                t.delta, t.lam, t.nu, t.x_minor, t.y_minor, t.value
            );
        }
    }
    println!("direct: {}", det_direct(&rp, k, &forms)?);
    Ok(())
}
