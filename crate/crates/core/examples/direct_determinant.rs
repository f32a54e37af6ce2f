//! Builds the multiplication matrix for a product of linear forms and takes
//! its determinant.
//!
//!     cargo run --example direct_determinant

use lefdet::ring::{basis, mult_matrix_block};
use lefdet::{det_direct, FormList, RingParams};

fn main() -> lefdet::Result<()> {
    let rp = RingParams::new(2, 2)?;
    let forms = FormList::parse("2,1;1,3")?;
    let k = 1;

    let src = basis(&rp, k)?;
    let dst = basis(&rp, k + forms.len() as i64)?;
    println!("source basis {:?}", src.monomials);
    println!("target basis {:?}", dst.monomials);

    let m = mult_matrix_block(&rp, &forms, k)?;
    for row in m.to_rows() {
        println!("  {}", row.iter().map(|e| format!("{e:>4}")).collect::<String>());
    }
    println!("det = {}", det_direct(&rp, k, &forms)?);
    Ok(())
}
