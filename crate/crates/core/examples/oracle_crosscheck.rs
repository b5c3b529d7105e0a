//! Brute-force enumeration of colorings compared with the generating functions.
//!
//! cargo run --release --example oracle_crosscheck

use std::fmt::Write;

use num_rational::BigRational;

use burnside::colorings::{ColoringProblem, DegreeSet};
use burnside::gset::{ngon_vertices, ngon_vertices_dihedral, prism_vertices, GSet};
use burnside::oracle::{oracle_primitive_census, OracleConfig};

pub fn run() -> burnside::Result<String> {
    let cases: Vec<(&str, GSet, u64)> = vec![
        ("hexagon / C_6", ngon_vertices(6)?, 2),
        ("octagon / C_8", ngon_vertices(8)?, 3),
        ("pentagon / D_5", ngon_vertices_dihedral(5)?, 3),
        ("prism / D_4", prism_vertices(4)?, 3),
    ];
    let mut out = String::new();
    for (name, x, k) in cases {
        let census = oracle_primitive_census(&x, k, &OracleConfig::default())?;
        let problem = ColoringProblem::for_gset(x, k, DegreeSet::ZeroOne)?;
        let series = problem.mu_series(0)?;
        let agree = (0..=problem.truncation())
            .all(|d| series.coeff(d) == BigRational::from_integer(census.count(d).into()));
        writeln!(
            out,
            "{name:<15} k = {k}: enumeration {:>5}, series {:>5}  {}",
            census.total(),
            problem.primitive_count()?,
            if agree { "agree" } else { "DIFFER" }
        )
        .unwrap();
    }
    Ok(out)
}

fn main() -> burnside::Result<()> {
    print!("{}", run()?);
    Ok(())
}
