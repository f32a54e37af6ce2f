//! Three independent Schur evaluators on the same input.
//!
//!     cargo run --example schur_evaluators

use lefdet::exact::parse_rational_list;
use lefdet::symfunc::{schur, schur_bialternant, schur_tableaux, ValueVector};
use lefdet::Partition;

fn main() -> lefdet::Result<()> {
    let x = ValueVector::new(parse_rational_list("2,1/3,-1")?);
    for text in ["[2,1]", "[3]", "[1,1,1]", "[2,2]", "[3,1,1]"] {
        let lam: Partition = text.parse()?;
        let jt = schur(&lam, &x);
        let bi = schur_bialternant(&lam, &x)?;
        let tab = schur_tableaux(&lam, &x)?;
        println!("s_{lam}(2,1/3,-1): jacobi-trudi {jt}, bialternant {bi}, tableaux {tab}");
    }
    Ok(())
}
