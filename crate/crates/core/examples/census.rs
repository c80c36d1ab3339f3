//! Full order-4 census: orbits, per-type counts and the determinant sweep.
//!
//! Worker count comes from `MAGICLAB_THREADS` when set.

use std::time::Instant;

use magiclab::enumerate::{self, EnumOptions};

fn main() -> magiclab::Result<()> {
    let threads = std::env::var("MAGICLAB_THREADS").ok().and_then(|v| v.parse().ok());
    let start = Instant::now();
    let census = enumerate::enumerate_natural_with(4, EnumOptions { threads })?;
    println!("{} squares, {} orbits in {:.2?}", census.len(), census.orbit_count, start.elapsed());

    let counts = enumerate::census_classify(&census)?;
    for (label, n) in &counts.by_label {
        println!("  {label:<6} {n}");
    }
    for (group, n) in &counts.by_group {
        println!("  group {group} {n}");
    }

    let sweep = enumerate::census_determinants(&census)?;
    println!("{} distinct determinants", sweep.histogram.len());
    for (label, n) in &sweep.nonzero_by_label {
        println!("  {label:<6} {n} nonsingular");
    }
    Ok(())
}
