//! Each example compiled in and run, with its key lines checked.

#[allow(dead_code)]
#[path = "../examples/burnside_ring.rs"]
mod burnside_ring;
#[allow(dead_code)]
#[path = "../examples/coloring_identities.rs"]
mod coloring_identities;
#[allow(dead_code)]
#[path = "../examples/cube_colorings.rs"]
mod cube_colorings;
#[allow(dead_code)]
#[path = "../examples/dihedral_closed_forms.rs"]
mod dihedral_closed_forms;
#[allow(dead_code)]
#[path = "../examples/necklaces.rs"]
mod necklaces;
#[allow(dead_code)]
#[path = "../examples/ngon_colorings.rs"]
mod ngon_colorings;
#[allow(dead_code)]
#[path = "../examples/oracle_crosscheck.rs"]
mod oracle_crosscheck;
#[allow(dead_code)]
#[path = "../examples/symmetric_powers.rs"]
mod symmetric_powers;
#[allow(dead_code)]
#[path = "../examples/table_of_marks.rs"]
mod table_of_marks;

#[test]
fn necklaces() {
    let out = necklaces::run().unwrap();
    assert!(out.contains("M(2, 1..8) = 2, 1, 2, 3, 6, 9, 18, 30"));
    assert!(out.contains("M(2·3, 6): 7735 = 7735"));
}

#[test]
fn table_of_marks() {
    let out = table_of_marks::run("dihedral:4").unwrap();
    assert!(out.contains("order 8, 8 classes"));
    assert!(out.contains("φ_C_1    8  4  4  4  2  2  2  1"));
}

#[test]
fn burnside_ring() {
    let out = burnside_ring::run().unwrap();
    assert!(out.contains("[square]          = [G/D_1]"));
    assert!(out.contains("[square x square] = [G/C_1] + 2[G/D_1]"));
}

#[test]
fn ngon_colorings() {
    let out = ngon_colorings::run(6, 2).unwrap();
    assert!(out.contains("t + 2t^2 + 3t^3 + 2t^4 + t^5  (total 9)"));
    assert!(out.contains("primitive colorings: 9"));
}

#[test]
fn dihedral_closed_forms() {
    let out = dihedral_closed_forms::run().unwrap();
    assert!(out.contains("total 7"));
    assert!(out.contains("total 12"));
    assert!(out.contains("case III total 127"));
}

#[test]
fn symmetric_powers() {
    let out = symmetric_powers::run().unwrap();
    assert!(out.contains("S_t = 1 + 4t + 10t^2 + 20t^3"));
    assert!(out.contains("S^3(X) has 20 points"));
}

#[test]
fn oracle_crosscheck() {
    let out = oracle_crosscheck::run().unwrap();
    assert_eq!(
        out.lines().filter(|l| l.ends_with("agree")).count(),
        out.lines().count()
    );
}

#[test]
fn coloring_identities() {
    let out = coloring_identities::run().unwrap();
    assert!(!out.contains("FAIL"));
    assert!(out.contains("[ok]"));
}

#[test]
fn cube_colorings() {
    let out = cube_colorings::run().unwrap();
    assert!(out.contains("order 24"));
    assert!(out.contains("(total 5)"));
    assert!(out.contains("(total 237)"));
}
