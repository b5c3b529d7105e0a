//! Vertices of a cube under its rotation group, a group given by generators.
//!
//! cargo run --example cube_colorings

use std::fmt::Write;
use std::sync::Arc;

use burnside::colorings::{ColoringProblem, DegreeSet};
use burnside::group::{group_from_generators, GroupConfig, Permutation};
use burnside::gset::GSet;

pub fn run() -> burnside::Result<String> {
    // vertices 0..3 on the top face, 4..7 below them
    let turn = Permutation::parse_cycles(8, "(0 1 2 3)(4 5 6 7)")?;
    let roll = Permutation::parse_cycles(8, "(0 1 5 4)(3 2 6 7)")?;
    let rotations = Arc::new(group_from_generators(
        8,
        &[turn, roll],
        &GroupConfig::default(),
    )?);
    let cube = GSet::natural(rotations.clone());
    let mut out = String::new();
    writeln!(out, "rotation group of order {}", rotations.order()).unwrap();
    for k in 2..=3 {
        let problem = ColoringProblem::for_gset(cube.clone(), k, DegreeSet::ZeroOne)?;
        writeln!(
            out,
            "k = {k}: {} (total {})",
            problem.mu_series(0)?,
            problem.primitive_count()?
        )
        .unwrap();
    }
    Ok(out)
}

fn main() -> burnside::Result<()> {
    print!("{}", run()?);
    Ok(())
}
