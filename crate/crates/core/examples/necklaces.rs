//! Primitive necklaces, the two classic product identities and the
//! cyclotomic identity.
//!
//! cargo run --example necklaces

use std::fmt::Write;

use burnside::colorings::{necklace_frobenius_identity, necklace_product_identity};
use burnside::series::{cyclotomic_identity_sides, necklace};

pub fn run() -> burnside::Result<String> {
    let mut out = String::new();
    for k in 2..=3 {
        let row: Vec<String> = (1..=8)
            .map(|n| necklace(k, n).map(|m| m.to_string()))
            .collect::<Result<_, _>>()?;
        writeln!(out, "M({k}, 1..8) = {}", row.join(", ")).unwrap();
    }

    let product = necklace_product_identity(2, 3, 6)?;
    writeln!(out, "{}: {} = {}", product.label, product.lhs, product.rhs).unwrap();
    let frobenius = necklace_frobenius_identity(2, 3, 4)?;
    writeln!(
        out,
        "{}: {} = {}",
        frobenius.label, frobenius.lhs, frobenius.rhs
    )
    .unwrap();

    let (lhs, rhs) = cyclotomic_identity_sides(2, 8)?;
    writeln!(out, "1/(1-2t) = {lhs}").unwrap();
    writeln!(out, "product  = {rhs}").unwrap();
    Ok(out)
}

fn main() -> burnside::Result<()> {
    print!("{}", run()?);
    Ok(())
}
