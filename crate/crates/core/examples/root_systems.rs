//! Builds the irreducible root systems and prints counts, simple roots and
//! the highest root's coefficients.
//!
//!     cargo run --example root_systems

use satake_levi::rootspace::{build_root_system, Family};

fn main() -> Result<(), satake_levi::error::Error> {
    let cases = [
        (Family::A, 4),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 5),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ];
    for (family, rank) in cases {
        let rs = build_root_system(family, rank)?;
        let highest = rs
            .positive()
            .iter()
            .max_by_key(|&i| rs.height(i))
            .expect("nonempty");
        println!(
            "{}{rank}: {} roots, highest root {} with coefficients {:?}",
            family.letter(),
            rs.len(),
            rs.root(highest),
            rs.coeffs(highest)
        );
        let simple: Vec<String> = (0..rs.rank())
            .map(|a| rs.simple_root(a).to_string())
            .collect();
        println!("    simple: {}", simple.join(", "));
    }
    // Sums are table lookups on root indices.
    let rs = build_root_system(Family::A, 3)?;
    let (a, b) = (rs.simple_indices()[0], rs.simple_indices()[1]);
    let sum = rs.sum_index(a, b).expect("α1 + α2 is a root");
    println!("in A3: {} + {} = {}", rs.root(a), rs.root(b), rs.root(sum));
    Ok(())
}
