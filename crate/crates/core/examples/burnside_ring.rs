//! Arithmetic in the Burnside ring of D_4: decomposition, products and
//! restriction to the rotation subgroup.
//!
//! cargo run --example burnside_ring

use std::fmt::Write;

use num_bigint::BigInt;

use burnside::burnside::BurnsideRing;
use burnside::group::{dihedral_subgroup_classes, GroupConfig};
use burnside::gset::ngon_vertices_dihedral;

fn combination(coeffs: &[BigInt], labels: &[String], group: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(labels)
        .filter(|(c, _)| **c != BigInt::from(0))
        .map(|(c, l)| {
            if *c == BigInt::from(1) {
                format!("[{group}/{l}]")
            } else {
                format!("{c}[{group}/{l}]")
            }
        })
        .collect();
    terms.join(" + ")
}

pub fn run() -> burnside::Result<String> {
    let mut out = String::new();
    let cls = dihedral_subgroup_classes(4)?;
    let (c1, d1, c4) = (cls.c(4).unwrap(), cls.d(4).unwrap(), cls.c(1).unwrap());
    let ring = BurnsideRing::with_classes(cls.table.clone(), &GroupConfig::default())?;
    let labels = ring.classes().labels();

    let square = ngon_vertices_dihedral(4)?;
    writeln!(out, "[square]          = {}", ring.decompose(&square)?).unwrap();
    writeln!(
        out,
        "[square x square] = {}",
        ring.decompose(&square.product(&square)?)?
    )
    .unwrap();

    let b = ring.product_coefficients(d1, d1)?;
    writeln!(out, "[G/D_1][G/D_1]    = {}", combination(&b, &labels, "G")).unwrap();

    let rotations = ring.classes().canonical(c4).clone();
    let (sub, c) = ring.restriction_coefficients(&rotations, c1)?;
    let sub_labels = sub.ring.classes().labels();
    writeln!(
        out,
        "Res_C_4 [G/C_1]   = {}",
        combination(&c, &sub_labels, "C_4")
    )
    .unwrap();
    let (_, c) = ring.restriction_coefficients(&rotations, d1)?;
    writeln!(
        out,
        "Res_C_4 [G/D_1]   = {}",
        combination(&c, &sub_labels, "C_4")
    )
    .unwrap();
    Ok(out)
}

fn main() -> burnside::Result<()> {
    print!("{}", run()?);
    Ok(())
}
