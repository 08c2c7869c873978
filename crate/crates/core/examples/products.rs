//! Markings of a direct sum, factor by factor.
//!
//!     cargo run --example products

use satake_levi::bits::NodeSet;
use satake_levi::classify::product_analysis;
use satake_levi::satake::FormSpec;

fn main() -> Result<(), satake_levi::error::Error> {
    let su13 = (FormSpec::new("AIV").l(3), NodeSet::from_labels(&[2]));
    let split = (FormSpec::new("SPLIT:A").l(1), NodeSet::EMPTY);
    let bi1 = (FormSpec::new("BI").p(2).l(3), NodeSet::from_labels(&[3]));
    let bi2 = (FormSpec::new("BI").p(2).l(4), NodeSet::from_labels(&[4]));
    for factors in [
        vec![su13.clone(), su13.clone()],
        vec![su13, split],
        vec![bi1, bi2],
    ] {
        let r = product_analysis(&factors)?;
        println!("{}", serde_json::to_string_pretty(&r).expect("json"));
    }
    Ok(())
}
