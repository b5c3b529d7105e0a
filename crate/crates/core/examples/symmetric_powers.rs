//! Characters of symmetric and exterior powers of a permutation
//! representation, with the symmetric powers also built as G-sets.
//!
//! cargo run --example symmetric_powers

use std::fmt::Write;
use std::sync::Arc;

use burnside::colorings::{exterior_character_series, symmetric_character_series};
use burnside::group::{symmetric_group, GroupConfig};
use burnside::gset::GSet;
use burnside::oracle::{oracle_symmetric_power, OracleConfig};

pub fn run() -> burnside::Result<String> {
    let s4 = Arc::new(symmetric_group(4, &GroupConfig::default())?);
    let x = GSet::natural(s4.clone());
    let mut out = String::new();
    let mut seen = Vec::new();
    for g in 0..s4.order() {
        let cycle_type = s4.element(g).cycle_type();
        if seen.contains(&cycle_type) {
            continue;
        }
        let sym = symmetric_character_series(&x, g, 6)?;
        let ext = exterior_character_series(&x, g, 6)?;
        writeln!(out, "{:<12} S_t = {sym}", s4.element(g).to_string()).unwrap();
        writeln!(out, "{:<12} λ_t = {ext}", "").unwrap();
        seen.push(cycle_type);
    }
    let s3 = oracle_symmetric_power(&x, 3, &OracleConfig::default())?;
    let fixed: Vec<String> = (0..s4.order())
        .take(6)
        .map(|g| s3.fixed_points_of(g).to_string())
        .collect();
    writeln!(
        out,
        "S^3(X) has {} points; fixed points of the first elements: {}",
        s3.size(),
        fixed.join(" ")
    )
    .unwrap();
    Ok(out)
}

fn main() -> burnside::Result<()> {
    print!("{}", run()?);
    Ok(())
}
