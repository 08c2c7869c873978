//! Levi order: the descending chain, per-root orders κ with witnesses, and
//! the cross-checks run on every verdict.
//!
//!     cargo run --example levi_order [-- "EIV" 3]

use satake_levi::bits::NodeSet;
use satake_levi::classify::analyze;
use satake_levi::levi::check_witness_properties;
use satake_levi::parabolic::mark;
use satake_levi::satake::build_form_str;

fn main() -> Result<(), satake_levi::error::Error> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "AIV l=3".into());
    let labels: Vec<usize> = args.filter_map(|a| a.parse().ok()).collect();
    let labels = if labels.is_empty() { vec![2] } else { labels };
    let form = build_form_str(&spec)?;
    let phi = NodeSet::from_labels(&labels);
    let report = analyze(&form, phi)?;
    print!("{}", report.to_text());

    let m = mark(&form, phi);
    for c in report.verdict.critical.iter().filter(|c| c.kappa.is_some()) {
        let w = check_witness_properties(&m, c.root, &c.witness);
        println!(
            "witness for {}: {}",
            form.rs().root(c.root),
            if w.all() {
                "all properties hold"
            } else {
                "FAILS"
            }
        );
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&report.verdict_json()).expect("json")
    );
    Ok(())
}
