//! Rectangle duality and the rectangle-complement identity.
//!
//!     cargo run --example duality

use lefdet::exact::rat;
use lefdet::formulas::{duality_check, ec2_check};
use lefdet::Partition;

fn main() -> lefdet::Result<()> {
    let c = duality_check(2, 1, &[rat(1), rat(2)], &[rat(3), rat(4)])?;
    println!("r=2 m=1: {} = {} ({})", c.lhs, c.rhs, c.equal);

    let (x, y) = ([rat(1), rat(-2), rat(5)], [rat(3), rat(1), rat(2)]);
    for lam in Partition::enumerate_in_rectangle(2, 3) {
        let mu = lam.complement(2, 3)?;
        let c = ec2_check(&lam, 2, 3, &x, &y)?;
        println!("{lam:>8} / {mu:<8} {} = {} ({})", c.lhs, c.rhs, c.equal);
    }
    Ok(())
}
