//! Generating functions for colorings of a G-set.
//!
//! A coloring assigns to each point of `X` one of `k` colors, one of which is
//! distinguished. Its degree is the number of points carrying a
//! non-distinguished color. More generally each point may carry a multiplicity
//! `n ∈ N` of non-distinguished colors; `N = {0, 1}` gives plain colorings and
//! `N = {0, 1, 2, …}` gives multisets.
//!
//! For a subgroup `H`, `φ_{H,t}` counts `H`-fixed colorings by degree:
//!
//! ```text
//! φ_{H,t} = Π_i ( Σ_{n∈N} ((k-1) tⁱ)ⁿ )^{O_{X,H,i}}
//! ```
//!
//! where `O_{X,H,i}` is the number of `H`-orbits of size `i`. Inverting the
//! table of marks turns these into `μ_{H,t}`, which counts orbits of colorings
//! with stabilizer conjugate to `H`; `μ_{1,t}` counts primitive colorings.

mod characters;
mod dihedral;
mod identities;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rayon::prelude::*;

pub use characters::{exterior_character_series, symmetric_character_series};
pub use dihedral::{dihedral_closed_forms, DihedralCase, DihedralFamily, DihedralReport};
pub use identities::{
    corollary_frobenius_setup, necklace_frobenius_identity, necklace_product_identity,
    verify_frobenius_corollary, verify_frobenius_identity, verify_product_identity, FrobeniusSetup,
    IdentityCheck, IdentityReport,
};

use crate::burnside::BurnsideRing;
use crate::error::{Error, Result};
use crate::group::{GroupConfig, Subgroup};
use crate::gset::{same_group, GSet};
use crate::series::RationalSeries;

/// Truncation used for series with infinite support unless overridden.
pub const DEFAULT_TRUNCATION: usize = 24;

/// The allowed multiplicities `N` of non-distinguished colors per point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DegreeSet {
    /// `N = {0, 1, 2, …}`.
    Full,
    /// `N = {0, 1}`: ordinary colorings.
    ZeroOne,
    /// A finite non-empty set.
    Explicit(BTreeSet<u64>),
}

impl DegreeSet {
    pub fn explicit(values: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = values.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidArgument(
                "degree set must be non-empty".into(),
            ));
        }
        Ok(Self::Explicit(set))
    }

    /// `Σ_{n∈N} (c·tⁱ)ⁿ` up to `t^truncation`.
    pub fn orbit_factor(&self, c: &BigRational, i: usize, truncation: usize) -> RationalSeries {
        let mut s = RationalSeries::zero(truncation);
        let mut add = |n: usize| {
            let deg = n * i;
            if deg <= truncation {
                s = &s + &RationalSeries::monomial(num_traits::pow(c.clone(), n), deg, truncation);
            }
        };
        match self {
            DegreeSet::ZeroOne => {
                add(0);
                add(1);
            }
            DegreeSet::Full => (0..=truncation / i).for_each(&mut add),
            DegreeSet::Explicit(set) => set.iter().for_each(|&n| add(n as usize)),
        }
        s
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeSet::Full => f.write_str("full"),
            DegreeSet::ZeroOne => f.write_str("zeroone"),
            DegreeSet::Explicit(set) => {
                let items: Vec<String> = set.iter().map(u64::to_string).collect();
                write!(f, "set:{}", items.join(","))
            }
        }
    }
}

/// Colorings of a G-set with `colors` colors and multiplicities from `degrees`.
#[derive(Clone, Debug)]
pub struct ColoringProblem {
    ring: Arc<BurnsideRing>,
    gset: GSet,
    colors: u64,
    degrees: DegreeSet,
    truncation: usize,
}

impl ColoringProblem {
    pub fn new(
        ring: Arc<BurnsideRing>,
        gset: GSet,
        colors: u64,
        degrees: DegreeSet,
    ) -> Result<Self> {
        if colors < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 colors, got {colors}"
            )));
        }
        if !same_group(ring.group(), gset.group()) {
            return Err(Error::GroupMismatch);
        }
        let truncation = match &degrees {
            DegreeSet::ZeroOne => gset.size(),
            DegreeSet::Full => DEFAULT_TRUNCATION,
            DegreeSet::Explicit(set) => {
                *set.iter().next_back().expect("non-empty") as usize * gset.size()
            }
        };
        Ok(Self {
            ring,
            gset,
            colors,
            degrees,
            truncation,
        })
    }

    /// Builds the Burnside ring of the G-set's group with default limits.
    pub fn for_gset(gset: GSet, colors: u64, degrees: DegreeSet) -> Result<Self> {
        let ring = Arc::new(BurnsideRing::new(
            gset.group().clone(),
            &GroupConfig::default(),
        )?);
        Self::new(ring, gset, colors, degrees)
    }

    pub fn with_truncation(mut self, truncation: usize) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn colors(&self) -> u64 {
        self.colors
    }

    pub fn degrees(&self) -> &DegreeSet {
        &self.degrees
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    fn other_colors(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.colors - 1))
    }

    /// `φ_{H,t}` for an arbitrary subgroup `H`.
    pub fn phi_series(&self, h: &Subgroup) -> Result<RationalSeries> {
        let profile = self.gset.orbit_profile(h)?;
        let c = self.other_colors();
        let mut acc = RationalSeries::one(self.truncation);
        for (&i, &count) in &profile.counts {
            let factor = self.degrees.orbit_factor(&c, i, self.truncation);
            acc = acc * factor.pow(count as u64);
        }
        Ok(acc)
    }

    /// `φ_{V,t}` for every class of Φ(G).
    pub fn phi_series_all(&self) -> Result<Vec<RationalSeries>> {
        let classes = self.ring.classes();
        (0..classes.len())
            .into_par_iter()
            .map(|v| self.phi_series(classes.canonical(v)))
            .collect()
    }

    fn combine(&self, h: usize, phis: &[RationalSeries]) -> Result<RationalSeries> {
        let mut acc = RationalSeries::zero(self.truncation);
        for (a, phi) in self.ring.inverse().entries[h].iter().zip(phis) {
            if !a.is_zero() {
                acc = acc + phi.scale(a);
            }
        }
        if let Some(bad) = acc
            .coeffs()
            .iter()
            .find(|c| !c.is_integer() || c.is_negative())
        {
            return Err(Error::NonIntegral(format!(
                "orbit count {bad} for class {}",
                self.ring.classes().label(h)
            )));
        }
        Ok(acc)
    }

    /// `μ_{H,t} = Σ_V a_{H,V} φ_{V,t}` for class index `h`.
    pub fn mu_series(&self, h: usize) -> Result<RationalSeries> {
        let classes = self.ring.classes();
        if h >= classes.len() {
            return Err(Error::InvalidArgument(format!("no subgroup class {h}")));
        }
        let phis = (0..classes.len())
            .map(|v| {
                if self.ring.inverse().entries[h][v].is_zero() {
                    Ok(RationalSeries::zero(self.truncation))
                } else {
                    self.phi_series(classes.canonical(v))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.combine(h, &phis)
    }

    /// `μ_{H,t}` for every class.
    pub fn mu_series_all(&self) -> Result<Vec<RationalSeries>> {
        let phis = self.phi_series_all()?;
        (0..phis.len()).map(|h| self.combine(h, &phis)).collect()
    }

    fn require_zero_one(&self, what: &str) -> Result<()> {
        if self.degrees != DegreeSet::ZeroOne {
            return Err(Error::Precondition(format!(
                "{what} requires the zeroone degree set, got {}",
                self.degrees
            )));
        }
        Ok(())
    }

    /// Number of colorings with trivial stabilizer, up to symmetry.
    pub fn primitive_count(&self) -> Result<BigInt> {
        self.require_zero_one("primitive_count")?;
        self.total(self.ring.classes().trivial_class())
    }

    /// `μ_H` summed over all degrees; the series is a polynomial of degree at
    /// most `|X|` for `N = {0, 1}`.
    pub fn total(&self, h: usize) -> Result<BigInt> {
        self.require_zero_one("total")?;
        Ok(self.mu_series(h)?.evaluate_at_one().to_integer())
    }

    /// `φ_H` summed over all degrees: `k^{#H-orbits}`.
    pub fn phi_total(&self, h: &Subgroup) -> Result<BigInt> {
        self.require_zero_one("phi_total")?;
        let orbits = self.gset.orbit_profile(h)?.orbit_count();
        Ok(BigInt::from(self.colors).pow(orbits as u32))
    }

    /// The same problem over a subgroup `H`, acting on the restricted set.
    pub fn restrict(&self, h: &Subgroup) -> Result<ColoringProblem> {
        let sub = self.ring.subgroup_ring(h)?;
        let gset = self.gset.restrict(&sub.subgroup)?;
        let ring = Arc::new(BurnsideRing::with_classes(
            sub.ring.classes().as_ref().clone(),
            self.ring.config(),
        )?);
        Ok(
            ColoringProblem::new(ring, gset, self.colors, self.degrees.clone())?
                .with_truncation(self.truncation),
        )
    }
}

/// `C(n, r)` as a big integer.
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    (0..r).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, dihedral_group, dihedral_subgroup_classes};
    use crate::gset::{ngon_vertices, ngon_vertices_dihedral, prism_vertices};

    fn series(v: &[i64], d: usize) -> RationalSeries {
        RationalSeries::from_integers(v.iter().copied(), d)
    }

    #[test]
    fn hexagon_under_rotations() {
        let p =
            ColoringProblem::for_gset(ngon_vertices(6).unwrap(), 2, DegreeSet::ZeroOne).unwrap();
        assert_eq!(p.mu_series(0).unwrap(), series(&[0, 1, 2, 3, 2, 1], 6));
        assert_eq!(p.primitive_count().unwrap(), 9.into());
        // C_{6/d} classes are ordered C_1, C_2, C_3, C_6
        let c1 = p.ring().classes().canonical(0).clone();
        assert_eq!(
            p.phi_series(&c1).unwrap(),
            series(&[1, 6, 15, 20, 15, 6, 1], 6)
        );
        let c2 = p.ring().classes().canonical(1).clone();
        assert_eq!(p.phi_total(&c2).unwrap(), 8.into());
        assert_eq!(
            p.phi_series(&c2).unwrap().evaluate_at_one(),
            BigRational::from_integer(8.into())
        );
        assert_eq!(p.total(1).unwrap(), 2.into());
    }

    #[test]
    fn prism_and_dihedral_polygons() {
        let prism =
            ColoringProblem::for_gset(prism_vertices(3).unwrap(), 2, DegreeSet::ZeroOne).unwrap();
        assert_eq!(prism.mu_series(0).unwrap(), series(&[0, 1, 1, 3, 1, 1], 6));
        assert_eq!(prism.primitive_count().unwrap(), 7.into());

        let cases: [(usize, u64, &[i64], i64); 3] = [
            (4, 3, &[0, 0, 1, 2], 3),
            (5, 3, &[0, 0, 2, 4, 6], 12),
            (6, 2, &[0, 0, 0, 1], 1),
        ];
        for (n, k, coeffs, total) in cases {
            let p = ColoringProblem::for_gset(
                ngon_vertices_dihedral(n).unwrap(),
                k,
                DegreeSet::ZeroOne,
            )
            .unwrap();
            assert_eq!(p.mu_series(0).unwrap(), series(coeffs, n));
            assert_eq!(p.primitive_count().unwrap(), total.into());
        }
    }

    #[test]
    fn transitive_top_class() {
        let x = ngon_vertices(5).unwrap();
        let g = x.group().clone();
        let p = ColoringProblem::for_gset(x, 4, DegreeSet::ZeroOne).unwrap();
        let mut expected = RationalSeries::one(5);
        expected = expected + RationalSeries::monomial(BigRational::from_integer(3.into()), 5, 5);
        assert_eq!(p.phi_series(&g.whole()).unwrap(), expected);
    }

    #[test]
    fn hexagon_reflection_factor() {
        let cls = dihedral_subgroup_classes(6).unwrap();
        let d1 = cls.table.canonical(cls.d(6).unwrap()).clone();
        let p =
            ColoringProblem::for_gset(ngon_vertices_dihedral(6).unwrap(), 3, DegreeSet::ZeroOne)
                .unwrap();
        let a = series(&[1, 2], 6);
        let b = series(&[1, 0, 2], 6);
        assert_eq!(p.phi_series(&d1).unwrap(), a.pow(2) * b.pow(2));
    }

    #[test]
    fn full_degree_set_on_two_points() {
        let x = GSet::natural(Arc::new(cyclic_group(2).unwrap()));
        let p = ColoringProblem::for_gset(x, 2, DegreeSet::Full)
            .unwrap()
            .with_truncation(6);
        // multisets on two swapped points: orbit counts by size
        let mu1 = p.mu_series(0).unwrap();
        let mu2 = p.mu_series(1).unwrap();
        assert_eq!(mu2, series(&[1, 0, 1, 0, 1, 0, 1], 6));
        assert_eq!(mu1, series(&[0, 1, 1, 2, 2, 3, 3], 6));
        assert!(p.primitive_count().is_err());
    }

    #[test]
    fn explicit_degrees_match_zero_one() {
        let x = GSet::natural(Arc::new(dihedral_group(4).unwrap()));
        let a = ColoringProblem::for_gset(x.clone(), 3, DegreeSet::ZeroOne).unwrap();
        let b = ColoringProblem::for_gset(x, 3, DegreeSet::explicit([0, 1]).unwrap()).unwrap();
        assert_eq!(a.mu_series_all().unwrap(), b.mu_series_all().unwrap());
        assert!(DegreeSet::explicit([]).is_err());
    }

    #[test]
    fn rejects_bad_inputs() {
        let x = ngon_vertices(3).unwrap();
        assert!(ColoringProblem::for_gset(x.clone(), 1, DegreeSet::ZeroOne).is_err());
        let p = ColoringProblem::for_gset(x, 2, DegreeSet::ZeroOne).unwrap();
        assert!(p.mu_series(99).is_err());
        assert_eq!(binomial(6, 3), 20.into());
    }
}
