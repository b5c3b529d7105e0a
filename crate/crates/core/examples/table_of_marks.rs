//! The table of marks of a group and its rational inverse.
//!
//! cargo run --example table_of_marks -- dihedral:4

use std::fmt::Write;
use std::sync::Arc;

use burnside::cli::GroupSpec;
use burnside::group::GroupConfig;

pub fn run(spec: &str) -> burnside::Result<String> {
    let config = GroupConfig::default();
    let spec: GroupSpec = spec.parse()?;
    let ring = Arc::new(spec.ring(&config)?);
    let labels = ring.classes().labels();

    let mut out = String::new();
    writeln!(
        out,
        "{spec}: order {}, {} classes of subgroups",
        ring.group().order(),
        ring.len()
    )
    .unwrap();
    for (v, row) in ring.marks().entries.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|m| format!("{m:>3}")).collect();
        writeln!(out, "φ_{:<5}{}", labels[v], cells.join("")).unwrap();
    }
    for (h, row) in ring.inverse().entries.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>6}")).collect();
        writeln!(out, "a_{:<5}{}", labels[h], cells.join("")).unwrap();
    }
    Ok(out)
}

fn main() -> burnside::Result<()> {
    let spec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "dihedral:4".into());
    print!("{}", run(&spec)?);
    Ok(())
}
