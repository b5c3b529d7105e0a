//! Colorings of the vertices of a regular n-gon under rotations, counted by
//! symmetry type and by number of non-background colors.
//!
//! cargo run --example ngon_colorings -- 6 2

use std::fmt::Write;

use burnside::colorings::{ColoringProblem, DegreeSet};
use burnside::gset::ngon_vertices;

pub fn run(n: usize, k: u64) -> burnside::Result<String> {
    let problem = ColoringProblem::for_gset(ngon_vertices(n)?, k, DegreeSet::ZeroOne)?;
    let classes = problem.ring().classes().clone();
    let mut out = String::new();
    writeln!(out, "{n}-gon, {k} colors").unwrap();
    for (h, mu) in problem.mu_series_all()?.iter().enumerate() {
        writeln!(
            out,
            "  stabilizer {:<4} {mu}  (total {})",
            classes.label(h),
            mu.evaluate_at_one()
        )
        .unwrap();
    }
    writeln!(out, "primitive colorings: {}", problem.primitive_count()?).unwrap();
    Ok(out)
}

fn main() -> burnside::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let k = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    print!("{}", run(n, k)?);
    Ok(())
}
