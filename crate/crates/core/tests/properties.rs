mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use burnside::burnside::BurnsideRing;
use burnside::cli::spec::{GSetSpec, GroupSpec};
use burnside::colorings::{
    exterior_character_series, symmetric_character_series, ColoringProblem, DegreeSet,
};
use burnside::group::{dihedral_subgroup_classes, FiniteGroup};
use burnside::gset::GSet;
use burnside::oracle::{oracle_mu_by_degree, OracleConfig};
use burnside::series::{divisors, mobius_inversion, necklace, RationalSeries};

use common::*;

fn small(idx: usize) -> (String, Arc<FiniteGroup>, Arc<BurnsideRing>) {
    let groups = small_groups();
    let (name, g) = groups[idx % groups.len()].clone();
    let r = ring(&g);
    (name, g, r)
}

fn gset(r: &BurnsideRing, seed: u64, max: usize) -> GSet {
    random_gset(&mut ChaCha8Rng::seed_from_u64(seed), r, max)
}

fn degree_set(i: u8) -> DegreeSet {
    match i % 3 {
        0 => DegreeSet::ZeroOne,
        1 => DegreeSet::Full,
        _ => DegreeSet::explicit([0, 1, 3]).unwrap(),
    }
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn series_strategy(len: usize) -> impl Strategy<Value = RationalSeries> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..=len).prop_map(|c| {
        RationalSeries::new(
            c.into_iter()
                .map(|(p, q)| BigRational::new(p.into(), q.into()))
                .collect(),
            10,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_is_additive_and_multiplicative(idx in 0usize..32, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (name, _, r) = small(idx);
        let x = gset(&r, s1, 12);
        let y = gset(&r, s2, 12);
        let dx = r.decompose(&x).unwrap();
        let dy = r.decompose(&y).unwrap();
        prop_assert_eq!(r.decompose(&x.disjoint_union(&y).unwrap()).unwrap(), dx.add(&dy).unwrap(), "{}", name);
        prop_assert_eq!(r.decompose(&x.product(&y).unwrap()).unwrap(), r.multiply(&dx, &dy).unwrap(), "{}", name);
        prop_assert_eq!(dx.cardinality(), BigInt::from(x.size()));
        prop_assert!(dx.is_effective());
    }

    #[test]
    fn mark_vectors_are_fixed_point_counts(idx in 0usize..32, seed in any::<u64>()) {
        let (_, _, r) = small(idx);
        let x = gset(&r, seed, 20);
        let marks = r.decompose(&x).unwrap().mark_vector(r.marks());
        for h in 0..r.len() {
            prop_assert_eq!(&marks[h], &BigInt::from(x.fixed_points(r.classes().canonical(h)).unwrap()));
        }
    }

    #[test]
    fn double_coset_products_agree(idx in 0usize..32, v1 in 0usize..16, v2 in 0usize..16) {
        let (_, _, r) = small(idx);
        let (v1, v2) = (v1 % r.len(), v2 % r.len());
        prop_assert_eq!(
            r.product_coefficients(v1, v2).unwrap(),
            r.product_coefficients_by_double_cosets(v1, v2).unwrap()
        );
    }

    #[test]
    fn phi_is_multiplicative_and_conjugation_invariant(
        idx in 0usize..32, s1 in any::<u64>(), s2 in any::<u64>(), k in 2u64..=4, ds in any::<u8>()
    ) {
        let (_, g, r) = small(idx);
        let x = gset(&r, s1, 8);
        let y = gset(&r, s2, 8);
        let p = |s: &GSet| ColoringProblem::new(r.clone(), s.clone(), k, degree_set(ds)).unwrap().with_truncation(10);
        let (px, py, pxy) = (p(&x), p(&y), p(&x.disjoint_union(&y).unwrap()));
        for class in r.classes().classes() {
            let phi = pxy.phi_series(&class.canonical).unwrap();
            prop_assert_eq!(&phi, &(px.phi_series(&class.canonical).unwrap() * py.phi_series(&class.canonical).unwrap()));
            for c in 0..g.order() {
                let conj = class.canonical.conjugate_by(&g, c);
                prop_assert_eq!(&pxy.phi_series(&conj).unwrap(), &phi);
            }
        }
    }

    #[test]
    fn orbit_types_account_for_every_coloring(idx in 0usize..32, seed in any::<u64>(), k in 2u64..=4) {
        let (_, g, r) = small(idx);
        let x = gset(&r, seed, 10);
        let p = ColoringProblem::new(r.clone(), x.clone(), k, DegreeSet::ZeroOne).unwrap();
        let mut sum = BigInt::zero();
        for h in 0..r.len() {
            let total = p.total(h).unwrap();
            prop_assert!(total >= BigInt::zero());
            sum += total * BigInt::from(g.order() / r.classes().canonical(h).order());
        }
        prop_assert_eq!(sum, BigInt::from(k).pow(x.size() as u32));
    }

    #[test]
    fn restriction_commutes_with_marks(idx in 0usize..32, seed in any::<u64>(), h in 0usize..16) {
        let (_, _, r) = small(idx);
        let x = gset(&r, seed, 16);
        let hs = r.classes().canonical(h % r.len()).clone();
        let (sub, restricted) = r.restrict_element(&r.decompose(&x).unwrap(), &hs).unwrap();
        let (_, xh) = x.restrict_to(&hs).unwrap();
        prop_assert_eq!(sub.ring.decompose(&xh).unwrap(), restricted);
    }

    #[test]
    fn symmetric_times_exterior_is_one(idx in 0usize..32, seed in any::<u64>(), e in 0usize..32) {
        let (_, g, r) = small(idx);
        let x = gset(&r, seed, 12);
        let e = e % g.order();
        let s = symmetric_character_series(&x, e, 10).unwrap();
        let l = exterior_character_series(&x, e, 10).unwrap();
        prop_assert_eq!(&s * &l.negate_variable(), RationalSeries::one(10));
        let id = symmetric_character_series(&x, g.identity_index(), 10).unwrap();
        for n in 0..=10u64 {
            prop_assert_eq!(id.coeff(n as usize), rational(binomial(x.size() as u64 + n - 1, n) as i64));
        }
    }

    #[test]
    fn oracle_census_matches_series(idx in 0usize..32, seed in any::<u64>(), k in 2u64..=3) {
        let (_, _, r) = small(idx);
        let x = gset(&r, seed, 9);
        let p = ColoringProblem::new(r.clone(), x.clone(), k, DegreeSet::ZeroOne).unwrap();
        for h in 0..r.len() {
            let census = oracle_mu_by_degree(&x, k, r.classes(), h, &OracleConfig::default()).unwrap();
            let series = p.mu_series(h).unwrap();
            for d in 0..=x.size() {
                prop_assert_eq!(series.coeff(d), rational(census.count(d) as i64));
            }
        }
    }

    #[test]
    fn series_ring_laws(a in series_strategy(6), b in series_strategy(6), c in series_strategy(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).substitute_power(2), &a.substitute_power(2) * &b.substitute_power(2));
        if !a.coeff(0).is_zero() {
            prop_assert_eq!(&a * &a.reciprocal().unwrap(), RationalSeries::one(10));
        } else {
            prop_assert!(a.reciprocal().is_err());
        }
    }

    #[test]
    fn mobius_inversion_undoes_divisor_sums(n in 1u64..=60, values in prop::collection::vec(-50i64..50, 60)) {
        let a: BTreeMap<u64, BigInt> = divisors(n).unwrap().into_iter().map(|d| (d, values[d as usize - 1].into())).collect();
        let b: BTreeMap<u64, BigInt> = a
            .keys()
            .map(|&m| (m, a.iter().filter(|(d, _)| m % **d == 0).map(|(_, v)| v.clone()).sum()))
            .collect();
        prop_assert_eq!(mobius_inversion(&b).unwrap(), a);
    }

    #[test]
    fn necklaces_partition_words(k in 1u64..=6, n in 1u64..=12) {
        let sum: BigInt = divisors(n).unwrap().into_iter().map(|d| BigInt::from(d) * necklace(k, d).unwrap()).sum();
        prop_assert_eq!(sum, BigInt::from(k).pow(n as u32));
    }

    #[test]
    fn group_specs_round_trip(kind in 0u8..4, n in 1usize..=9, gens in prop::collection::vec(prop::collection::vec(0usize..6, 2..=4), 0..=3)) {
        let spec = match kind {
            0 => GroupSpec::Cyclic(n),
            1 => GroupSpec::Dihedral(n),
            2 => GroupSpec::Symmetric(n),
            _ => {
                let generators: Vec<Vec<Vec<usize>>> = gens
                    .into_iter()
                    .map(|mut c| {
                        c.sort_unstable();
                        c.dedup();
                        if c.len() < 2 { vec![] } else { vec![c] }
                    })
                    .collect();
                GroupSpec::Perm { degree: 6, generators }
            }
        };
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), spec);
    }

    #[test]
    fn gset_specs_round_trip(shape in prop::collection::vec(0u8..6, 1..=5)) {
        fn build(shape: &[u8]) -> GSetSpec {
            let leaf = |b: u8| match b % 4 {
                0 => GSetSpec::Ngon,
                1 => GSetSpec::Prism,
                2 => GSetSpec::Natural,
                _ => GSetSpec::Coset(vec![vec![vec![0, 1]]]),
            };
            match shape {
                [b] => leaf(*b),
                [b, rest @ ..] if b % 2 == 0 => GSetSpec::Product(Box::new(leaf(*b)), Box::new(build(rest))),
                [b, rest @ ..] => GSetSpec::Union(Box::new(build(rest)), Box::new(leaf(*b))),
                [] => unreachable!(),
            }
        }
        let spec = build(&shape);
        prop_assert_eq!(spec.to_string().parse::<GSetSpec>().unwrap(), spec);
    }
}

#[test]
fn dihedral_labels_match_generated_subgroups() {
    for n in 1..=12usize {
        let cls = dihedral_subgroup_classes(n).unwrap();
        let g = cls.group().clone();
        let (a, b) = (g.generators()[0], g.generators()[1]);
        let ba = g.mult(b, a);
        let divs = divisors(n as u64).unwrap();
        let mut expected_classes = 0;
        for &d in &divs {
            let d = d as usize;
            let ad = g.pow(a, d);
            let found = |seeds: &[usize]| cls.table.class_of(&g.closure(seeds)).unwrap();
            assert_eq!(cls.c(d), Some(found(&[ad])), "D_{n} C_{}", n / d);
            assert_eq!(cls.d(d), Some(found(&[ad, b])), "D_{n} D_{}", n / d);
            assert_eq!(cls.d_prime(d), Some(found(&[ad, ba])), "D_{n} D'_{}", n / d);
            assert_eq!(cls.d(d) == cls.d_prime(d), d % 2 == 1, "D_{n} d = {d}");
            assert_eq!(cls.table.canonical(cls.c(d).unwrap()).order(), n / d);
            expected_classes += if d % 2 == 1 { 2 } else { 3 };
        }
        assert_eq!(cls.table.len(), expected_classes, "D_{n}");
    }
}
