//! Compares the literal textbook case formulas against brute force and shows
//! where they disagree.
//!
//!     cargo run --example literal_audit

use lefdet::formulas::discrepancy_report_symbolic;
use lefdet::{discrepancy_report, FormList, RingParams};

fn main() -> lefdet::Result<()> {
    let rp = RingParams::new(2, 2)?;
    let forms = FormList::parse("2,1;1,3")?;
    let r = discrepancy_report(&rp, 1, 1, &forms)?;
    println!("(2,2,1,1) direct {} expansion {}", r.direct, r.expansion.value);
    for l in &r.paper_literal_audit {
        println!("  {}: {} matches={} skipped={}", l.case_id.id(), l.value, l.matches_direct, l.skipped_terms);
    }

    let rp = RingParams::new(4, 2)?;
    let r = discrepancy_report_symbolic(&rp, 2, 1)?;
    println!("(4,2,2,1) symbolic direct {}", r.direct);
    for l in &r.paper_literal_audit {
        println!("  {}: {} matches={}", l.case_id.id(), l.value, l.matches_direct);
    }
    println!("consistent closed forms: {}", r.consistent());
    Ok(())
}
