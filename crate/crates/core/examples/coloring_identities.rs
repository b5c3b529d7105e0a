//! Product and Frobenius identities for orbit counts of colorings.
//!
//! cargo run --example coloring_identities

use std::fmt::Write;
use std::sync::Arc;

use burnside::burnside::BurnsideRing;
use burnside::colorings::{verify_frobenius_corollary, verify_product_identity};
use burnside::group::{dihedral_group, GroupConfig, Subgroup};
use burnside::gset::GSet;

pub fn run() -> burnside::Result<String> {
    let d3 = Arc::new(dihedral_group(3)?);
    let ring = Arc::new(BurnsideRing::new(d3.clone(), &GroupConfig::default())?);
    let regular = GSet::coset_space(d3, &Subgroup::trivial())?;
    let mut out = String::new();
    write!(out, "{}", verify_product_identity(&ring, &regular, 2, 3)?).unwrap();
    write!(
        out,
        "{}",
        verify_frobenius_corollary(&ring, &regular, 2, 2)?
    )
    .unwrap();
    Ok(out)
}

fn main() -> burnside::Result<()> {
    print!("{}", run()?);
    Ok(())
}
