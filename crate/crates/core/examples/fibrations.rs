//! CR fibrations φ → ψ, the degeneracy reduction, and the lattice as DOT.
//!
//!     cargo run --example fibrations > lattice.dot

use satake_levi::bits::NodeSet;
use satake_levi::fibration::{
    fiber_totally_complex, is_cr_fibration, is_cr_fibration_diagram, lattice, reduce_degenerate,
};
use satake_levi::satake::build_form_str;

fn main() -> Result<(), satake_levi::error::Error> {
    let form = build_form_str("AIV l=4")?;
    let phi = NodeSet::from_labels(&[1, 2, 3]);
    for psi in phi.subsets_of().filter(|&p| p != phi) {
        eprintln!(
            "{phi:?} → {psi:?}: cr {} (diagram {}), fiber totally complex {}",
            is_cr_fibration(&form, phi, psi)?,
            is_cr_fibration_diagram(&form, phi, psi)?,
            fiber_totally_complex(&form, phi, psi)?
        );
    }
    // A degenerate fundamental marking reduces along a fibration with
    // totally complex fiber.
    for (spec, labels) in [("AIV l=4", &[1, 2, 3][..]), ("EIII", &[1, 2, 3, 4][..])] {
        let f = build_form_str(spec)?;
        let phi = NodeSet::from_labels(labels);
        match reduce_degenerate(&f, phi) {
            Ok(r) => eprintln!("{f} {phi:?}: Π = {:?}, ψ = {:?}", r.pi, r.psi),
            Err(e) => eprintln!("{f} {phi:?}: {e}"),
        }
    }
    print!("{}", lattice(&form, phi)?.to_dot());
    Ok(())
}
