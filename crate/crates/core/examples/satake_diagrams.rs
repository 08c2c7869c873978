//! Real forms as conjugations: Satake diagrams, the involution ε, and the
//! check of σ on simple roots against the conjugation patterns.
//!
//!     cargo run --example satake_diagrams

use satake_levi::bits::NodeSet;
use satake_levi::satake::{build_form_str, render_diagram, validate_conjugation_rules, RootClass};

fn main() -> Result<(), satake_levi::error::Error> {
    for spec in [
        "AIIIa p=2 l=5",
        "AII p=3",
        "DIIIb p=2",
        "EIV",
        "FII",
        "COMPLEX:A l=3",
    ] {
        let form = build_form_str(spec)?;
        println!("{form}");
        println!("{}", render_diagram(&form, NodeSet::EMPTY));
        let eps: Vec<String> = (0..form.rank())
            .map(|a| format!("{}→{}", a + 1, form.epsilon(a).unwrap() + 1))
            .collect();
        println!("ε: {}", eps.join(" "));
        let count = |c: RootClass| {
            (0..form.rs().len())
                .filter(|&i| form.class_of(i) == c)
                .count()
        };
        println!(
            "roots: {} real, {} imaginary, {} complex",
            count(RootClass::Real),
            count(RootClass::Imaginary),
            count(RootClass::Complex)
        );
        let report = validate_conjugation_rules(&form);
        println!(
            "conjugation patterns: {}\n",
            if report.passed() {
                "all nodes match"
            } else {
                "MISMATCH"
            }
        );
    }
    Ok(())
}
