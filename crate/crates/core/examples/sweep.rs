//! Seeded sweep over small rings, printing the summary and a few CSV rows.
//!
//!     cargo run --release --example sweep

use lefdet::verify::{run_sweep, to_csv, SweepConfig};

fn main() -> lefdet::Result<()> {
    let cfg = SweepConfig {
        max_socle: 6,
        trials: 5,
        seed: 42,
        ..SweepConfig::default()
    };
    let result = run_sweep(&cfg)?;
    println!("{}", serde_json::to_string_pretty(&result.summary).expect("summary"));
    for line in to_csv(cfg.seed, &result.records).lines().take(6) {
        println!("{line}");
    }
    Ok(())
}
