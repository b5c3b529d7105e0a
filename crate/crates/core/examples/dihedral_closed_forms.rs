//! Closed forms for primitive colorings of prisms and polygons under the
//! dihedral group, checked against the generic computation.
//!
//! cargo run --example dihedral_closed_forms

use std::fmt::Write;

use burnside::colorings::{dihedral_closed_forms, DihedralFamily};

pub fn run() -> burnside::Result<String> {
    let mut out = String::new();
    for (family, n, k) in [
        (DihedralFamily::Prism, 3, 2),
        (DihedralFamily::NgonDihedral, 4, 3),
        (DihedralFamily::NgonDihedral, 5, 3),
        (DihedralFamily::NgonDihedral, 6, 2),
        (DihedralFamily::Prism, 6, 3),
        (DihedralFamily::NgonDihedral, 12, 2),
    ] {
        let r = dihedral_closed_forms(n, k, family)?;
        writeln!(
            out,
            "{family:<13} n = {n:<2} k = {k}  case {:<3} total {:<6} {}",
            format!("{:?}", r.case),
            r.total,
            r.series
        )
        .unwrap();
    }
    Ok(out)
}

fn main() -> burnside::Result<()> {
    print!("{}", run()?);
    Ok(())
}
