#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use burnside::burnside::BurnsideRing;
use burnside::group::{
    cyclic_group, dihedral_group, symmetric_group, FiniteGroup, GroupConfig, Subgroup,
};
use burnside::gset::{ngon_vertices, ngon_vertices_dihedral, prism_vertices, GSet};

pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(cyclic_group(n).unwrap())
}

pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
    Arc::new(dihedral_group(n).unwrap())
}

pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    Arc::new(symmetric_group(n, &GroupConfig::default()).unwrap())
}

pub fn ring(g: &Arc<FiniteGroup>) -> Arc<BurnsideRing> {
    Arc::new(BurnsideRing::new(g.clone(), &GroupConfig::default()).unwrap())
}

/// C_1…C_8, D_1…D_6, S_3, S_4.
pub fn listed_groups() -> Vec<(String, Arc<FiniteGroup>)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("C_{n}"), cyclic(n)));
    }
    for n in 1..=6 {
        out.push((format!("D_{n}"), dihedral(n)));
    }
    out.push(("S_3".into(), symmetric(3)));
    out.push(("S_4".into(), symmetric(4)));
    out
}

/// Groups of order at most 12 from the list.
pub fn small_groups() -> Vec<(String, Arc<FiniteGroup>)> {
    listed_groups()
        .into_iter()
        .filter(|(_, g)| g.order() <= 12)
        .collect()
}

/// Regular, every `G/H`, and the polygon and prism where they apply.
pub fn standard_gsets(name: &str, ring: &BurnsideRing) -> Vec<(String, GSet)> {
    let g = ring.group().clone();
    let mut out = vec![(
        "regular".to_string(),
        GSet::coset_space(g.clone(), &Subgroup::trivial()).unwrap(),
    )];
    for h in 1..ring.len() {
        out.push((
            format!("G/{}", ring.classes().label(h)),
            ring.coset(h).clone(),
        ));
    }
    let n: usize = name[2..].parse().unwrap();
    match &name[..1] {
        "C" => out.push(("ngon".into(), ngon_vertices(n).unwrap())),
        "D" => {
            out.push(("ngon".into(), ngon_vertices_dihedral(n).unwrap()));
            out.push(("prism".into(), prism_vertices(n).unwrap()));
        }
        _ => out.push(("natural".into(), GSet::natural(g))),
    }
    out
}

/// A disjoint union of one to three random transitive G-sets, each `G/H` for
/// a random subgroup `H` (not only class representatives).
pub fn random_gset<R: Rng>(rng: &mut R, ring: &BurnsideRing, max_size: usize) -> GSet {
    let g = ring.group().clone();
    let classes = ring.classes();
    let mut x = GSet::empty(g.clone());
    for _ in 0..rng.gen_range(1..=3) {
        let class = classes.class(rng.gen_range(0..classes.len()));
        let h: &Subgroup = class.conjugates.choose(rng).unwrap();
        if x.size() + g.order() / h.order() > max_size && x.size() > 0 {
            break;
        }
        x = x
            .disjoint_union(&GSet::coset_space(g.clone(), h).unwrap())
            .unwrap();
    }
    x
}

pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
