//! Exhaustive enumeration against the golden tables, under each reading,
//! with optional overrides from `SATAKE_LEVI_SEED_DIR`.
//!
//!     cargo run --release --example golden_tables

use satake_levi::classify::{verify_tables_with, Reading, Seeds};
use satake_levi::satake::default_instances;

fn main() -> Result<(), satake_levi::error::Error> {
    let seeds = Seeds::from_env()?;
    if !seeds.is_empty() {
        println!("{} instance(s) overridden from seed files", seeds.len());
    }
    let instances = default_instances();
    for reading in Reading::ALL {
        let diffs = verify_tables_with(&instances, reading, &seeds)?;
        println!(
            "{reading}: {} diff(s) over {} instances",
            diffs.len(),
            instances.len()
        );
        for d in diffs {
            println!(
                "    {} {:?}: table {}, computed {}",
                d.form, d.phi, d.expected, d.computed
            );
        }
    }
    Ok(())
}
