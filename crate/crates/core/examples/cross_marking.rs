//! The parabolic sets cut out by a cross-marking, on su(1,3) with α2 crossed.
//!
//!     cargo run --example cross_marking

use satake_levi::bits::NodeSet;
use satake_levi::parabolic::mark;
use satake_levi::satake::{build_form_str, render_diagram};

fn main() -> Result<(), satake_levi::error::Error> {
    let form = build_form_str("AIV l=3")?;
    let phi = NodeSet::from_labels(&[2]);
    let m = mark(&form, phi);
    println!("{}", render_diagram(&form, phi));
    let show = |name: &str, s| {
        let v: Vec<String> = m.vectors(&s).iter().map(|r| r.to_string()).collect();
        println!("{name:<16} {}", v.join(", "));
    };
    show("Q⁻ⁿ ∩ σQ⁻ⁿ", m.outside());
    show("σQ ∩ Q⁻ⁿ", m.sigma_q & m.q_neg_n);
    show("Q ∩ σQ⁻ⁿ", m.critical());
    let dims = m.cr_dims();
    println!("n = {}, d = {}, {}", dims.n, dims.d, m.trichotomy()?);
    println!(
        "{}",
        serde_json::to_string(&m.summary()?).expect("summary serializes")
    );

    // Every cross-marking of a split form is totally real.
    let split = build_form_str("SPLIT:A l=2")?;
    for phi in NodeSet::subsets(2) {
        println!("SPLIT:A l=2 {phi:?}: {}", mark(&split, phi).trichotomy()?);
    }
    Ok(())
}
