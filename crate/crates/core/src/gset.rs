//! Finite G-sets stored as explicit action tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{
    cyclic_group, dihedral_group, FiniteGroup, Permutation, Subgroup, SubgroupClassTable,
    SubgroupGroup,
};

/// Action tables up to this many `(element, point)` pairs are validated on construction.
pub const VALIDATION_LIMIT: usize = 1_000_000;

/// Whether two handles refer to the same group.
pub fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A finite set `{0, …, size-1}` with a left action of a finite group.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    size: usize,
    // action[g * size + x] = g·x
    action: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Number of orbits of each cardinality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrbitProfile {
    pub counts: BTreeMap<usize, usize>,
}

impl OrbitProfile {
    /// Number of orbits of cardinality `i`.
    pub fn count(&self, i: usize) -> usize {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    pub fn orbit_count(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn point_count(&self) -> usize {
        self.counts.iter().map(|(i, c)| i * c).sum()
    }
}

/// Double cosets `H g K` with the intersections `H ∩ gKg⁻¹`.
#[derive(Clone, Debug)]
pub struct DoubleCosetDecomposition {
    /// Least element of each double coset, ascending.
    pub representatives: Vec<usize>,
    /// `H ∩ gKg⁻¹` for each representative, in parent indices.
    pub parts: Vec<Subgroup>,
    /// Size of each double coset.
    pub sizes: Vec<usize>,
}

impl GSet {
    /// Builds a G-set from its action table (`action[g * size + x] = g·x`).
    pub fn from_table(group: Arc<FiniteGroup>, size: usize, action: Vec<usize>) -> Result<Self> {
        if action.len() != group.order() * size {
            return Err(Error::InvalidAction(format!(
                "table has {} entries, expected {}",
                action.len(),
                group.order() * size
            )));
        }
        let set = Self {
            group,
            size,
            action,
            labels: None,
        };
        if set.group.order() * size <= VALIDATION_LIMIT {
            set.validate()?;
        }
        Ok(set)
    }

    /// Checks the action axioms. Compatibility is tested against the
    /// generators only; since every element is a product of generators this
    /// implies `g₁(g₂x) = (g₁g₂)x` for all pairs.
    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        for g in 0..self.group.order() {
            let mut seen = vec![false; n];
            for x in 0..n {
                let y = self.act(g, x);
                if y >= n || seen[y] {
                    return Err(Error::InvalidAction(format!(
                        "element {g} does not act bijectively"
                    )));
                }
                seen[y] = true;
            }
        }
        if (0..n).any(|x| self.act(0, x) != x) {
            return Err(Error::InvalidAction("identity moves a point".into()));
        }
        for g in 0..self.group.order() {
            for &s in self.group.generators() {
                let gs = self.group.mult(g, s);
                if (0..n).any(|x| self.act(gs, x) != self.act(g, self.act(s, x))) {
                    return Err(Error::InvalidAction(format!(
                        "compatibility fails for elements {g} and {s}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The empty G-set.
    pub fn empty(group: Arc<FiniteGroup>) -> Self {
        Self {
            group,
            size: 0,
            action: Vec::new(),
            labels: None,
        }
    }

    /// A single fixed point.
    pub fn point(group: Arc<FiniteGroup>) -> Self {
        let order = group.order();
        Self {
            group,
            size: 1,
            action: vec![0; order],
            labels: None,
        }
    }

    /// The permutation domain `{0, …, degree-1}` with the defining action.
    pub fn natural(group: Arc<FiniteGroup>) -> Self {
        let size = group.degree();
        let action = group
            .elements()
            .iter()
            .flat_map(|p| p.images().to_vec())
            .collect();
        Self {
            group,
            size,
            action,
            labels: None,
        }
    }

    /// Extends images of the group generators to a full action table and
    /// validates it. `images[j]` is the permutation by which `generators()[j]` acts.
    pub fn from_generator_action(group: Arc<FiniteGroup>, images: &[Permutation]) -> Result<Self> {
        if images.len() != group.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{} generator images for {} generators",
                images.len(),
                group.generators().len()
            )));
        }
        let size = images.first().map_or(0, Permutation::degree);
        if let Some(p) = images.iter().find(|p| p.degree() != size) {
            return Err(Error::DegreeMismatch {
                expected: size,
                found: p.degree(),
            });
        }
        let order = group.order();
        let mut action = vec![0; order * size];
        action[..size]
            .iter_mut()
            .enumerate()
            .for_each(|(x, y)| *y = x);
        // parents precede children in breadth-first order
        for g in 1..order {
            let (parent, slot) = group.spanning_parent(g).expect("non-identity has a parent");
            for x in 0..size {
                action[g * size + x] = action[parent * size + images[slot].apply(x)];
            }
        }
        let set = Self {
            group,
            size,
            action,
            labels: None,
        };
        set.validate()?;
        Ok(set)
    }

    /// Left cosets `gH`, ordered by their least element index, with action by
    /// left multiplication.
    pub fn coset_space(group: Arc<FiniteGroup>, h: &Subgroup) -> Result<Self> {
        let h = Subgroup::from_members(&group, h.members().to_vec())?;
        let order = group.order();
        let mut coset_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &x in h.members() {
                coset_of[group.mult(g, x)] = reps.len();
            }
            reps.push(g);
        }
        let size = reps.len();
        let mut action = Vec::with_capacity(order * size);
        for g in 0..order {
            action.extend(reps.iter().map(|&r| coset_of[group.mult(g, r)]));
        }
        Ok(Self {
            group,
            size,
            action,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} points",
                labels.len(),
                self.size
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `g·x`.
    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x]
    }

    /// The permutation by which `g` acts.
    pub fn action_of(&self, g: usize) -> &[usize] {
        &self.action[g * self.size..(g + 1) * self.size]
    }

    fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.members().last().is_some_and(|&g| g >= self.group.order()) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        Ok(())
    }

    /// Orbits of `h`, each sorted, listed by least point.
    pub fn orbits(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut cursor = 0;
            while cursor < orbit.len() {
                let x = orbit[cursor];
                cursor += 1;
                for &g in h.members() {
                    let y = self.act(g, x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Histogram of orbit sizes under `h`.
    pub fn orbit_profile(&self, h: &Subgroup) -> Result<OrbitProfile> {
        self.check_subgroup(h)?;
        let mut counts = BTreeMap::new();
        for orbit in self.orbits(h) {
            *counts.entry(orbit.len()).or_insert(0) += 1;
        }
        Ok(OrbitProfile { counts })
    }

    /// Number of points fixed by every element of `h` (the mark φ_H).
    pub fn fixed_points(&self, h: &Subgroup) -> Result<usize> {
        self.check_subgroup(h)?;
        Ok((0..self.size)
            .filter(|&x| h.members().iter().all(|&g| self.act(g, x) == x))
            .count())
    }

    /// Number of points fixed by the single element `g`.
    pub fn fixed_points_of(&self, g: usize) -> usize {
        self.action_of(g)
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x == y)
            .count()
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let members = (0..self.group.order())
            .filter(|&g| self.act(g, x) == x)
            .collect();
        Subgroup::from_members(&self.group, members).expect("stabilizers are subgroups")
    }

    /// `φ_V(X)` for every class `V` of `table`.
    pub fn mark_vector(&self, table: &SubgroupClassTable) -> Result<Vec<usize>> {
        if !same_group(&self.group, table.group()) {
            return Err(Error::GroupMismatch);
        }
        table
            .classes()
            .iter()
            .map(|c| self.fixed_points(&c.canonical))
            .collect()
    }

    /// Isomorphism of G-sets, decided by comparing mark vectors.
    pub fn is_isomorphic(&self, other: &GSet, table: &SubgroupClassTable) -> Result<bool> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(self.mark_vector(table)? == other.mark_vector(table)?)
    }

    /// Diagonal action on pairs; `(x, y)` has index `x * |Y| + y`.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let size = self.size * other.size;
        let mut action = Vec::with_capacity(self.group.order() * size);
        for g in 0..self.group.order() {
            for x in 0..self.size {
                let gx = self.act(g, x);
                action.extend((0..other.size).map(|y| gx * other.size + other.act(g, y)));
            }
        }
        Ok(GSet {
            group: self.group.clone(),
            size,
            action,
            labels: None,
        })
    }

    /// Tagged union: points of `self` first, then points of `other` shifted by `|self|`.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        let size = self.size + other.size;
        let mut action = Vec::with_capacity(self.group.order() * size);
        for g in 0..self.group.order() {
            action.extend_from_slice(self.action_of(g));
            action.extend(other.action_of(g).iter().map(|&y| y + self.size));
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(GSet {
            group: self.group.clone(),
            size,
            action,
            labels,
        })
    }

    /// The same points viewed as a set acted on by the subgroup only.
    pub fn restrict(&self, sub: &SubgroupGroup) -> Result<GSet> {
        if sub
            .embedding
            .last()
            .is_some_and(|&g| g >= self.group.order())
        {
            return Err(Error::GroupMismatch);
        }
        let mut action = Vec::with_capacity(sub.embedding.len() * self.size);
        for &g in &sub.embedding {
            action.extend_from_slice(self.action_of(g));
        }
        Ok(GSet {
            group: sub.group.clone(),
            size: self.size,
            action,
            labels: self.labels.clone(),
        })
    }

    /// Convenience: re-index `h` as a group and restrict to it.
    pub fn restrict_to(&self, h: &Subgroup) -> Result<(SubgroupGroup, GSet)> {
        let h = Subgroup::from_members(&self.group, h.members().to_vec())?;
        let sub = self.group.subgroup_group(&h);
        let set = self.restrict(&sub)?;
        Ok((sub, set))
    }
}

/// Partition of `G` into double cosets `HgK`.
pub fn double_cosets(
    group: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<DoubleCosetDecomposition> {
    let h = Subgroup::from_members(group, h.members().to_vec())?;
    let k = Subgroup::from_members(group, k.members().to_vec())?;
    let mut assigned = vec![false; group.order()];
    let mut out = DoubleCosetDecomposition {
        representatives: Vec::new(),
        parts: Vec::new(),
        sizes: Vec::new(),
    };
    for g in 0..group.order() {
        if assigned[g] {
            continue;
        }
        let mut size = 0;
        for &x in h.members() {
            let xg = group.mult(x, g);
            for &y in k.members() {
                let z = group.mult(xg, y);
                if !assigned[z] {
                    assigned[z] = true;
                    size += 1;
                }
            }
        }
        out.representatives.push(g);
        out.parts.push(h.intersect(&k.conjugate_by(group, g)));
        out.sizes.push(size);
    }
    Ok(out)
}

/// Vertices of the regular `n`-gon under rotations, `C_n/C_1`.
pub fn ngon_vertices(n: usize) -> Result<GSet> {
    Ok(GSet::natural(Arc::new(cyclic_group(n)?)))
}

/// Vertices of the regular `n`-gon under the full dihedral group, `D_n/D_1`.
pub fn ngon_vertices_dihedral(n: usize) -> Result<GSet> {
    let group = Arc::new(dihedral_group(n)?);
    if n >= 3 {
        return Ok(GSet::natural(group));
    }
    let reflection = group.closure(&[group.generators()[1]]);
    GSet::coset_space(group, &reflection)
}

/// Vertices of the regular `n`-prism under `D_n`, `D_n/C_1`.
///
/// Top-face vertex `i` has index `i`, bottom-face vertex `i` has index `n + i`.
/// The rotation turns both faces; the reflection sends top `i` to bottom `-i`
/// and bottom `i` to top `-i`.
pub fn prism_vertices(n: usize) -> Result<GSet> {
    let group = Arc::new(dihedral_group(n)?);
    let mut a = vec![0; 2 * n];
    let mut b = vec![0; 2 * n];
    for s in 0..2 {
        for i in 0..n {
            a[s * n + i] = s * n + (i + 1) % n;
            b[s * n + i] = (1 - s) * n + (n - i) % n;
        }
    }
    GSet::from_generator_action(group, &[Permutation::new(a)?, Permutation::new(b)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{dihedral_subgroup_classes, subgroup_classes, GroupConfig};

    fn profile(pairs: &[(usize, usize)]) -> OrbitProfile {
        OrbitProfile {
            counts: pairs.iter().copied().collect(),
        }
    }

    #[test]
    fn coset_spaces() {
        let c6 = Arc::new(cyclic_group(6).unwrap());
        let whole = GSet::coset_space(c6.clone(), &c6.whole()).unwrap();
        assert_eq!(whole.size(), 1);
        let regular = GSet::coset_space(c6.clone(), &Subgroup::trivial()).unwrap();
        assert_eq!(regular.size(), 6);
        assert_eq!(
            regular.orbit_profile(&c6.whole()).unwrap(),
            profile(&[(6, 1)])
        );

        let d3 = Arc::new(dihedral_group(3).unwrap());
        let refl = d3.closure(&[d3.generators()[1]]);
        assert_eq!(GSet::coset_space(d3.clone(), &refl).unwrap().size(), 3);
        assert!(GSet::coset_space(d3, &Subgroup::from_sorted_unchecked(vec![0, 1])).is_err());
    }

    #[test]
    fn orbit_profiles() {
        let c6 = Arc::new(cyclic_group(6).unwrap());
        let x = GSet::coset_space(c6.clone(), &Subgroup::trivial()).unwrap();
        let c2 = c6.closure(&[c6.pow(c6.generators()[0], 3)]);
        assert_eq!(x.orbit_profile(&c2).unwrap(), profile(&[(2, 3)]));
        assert_eq!(
            x.orbit_profile(&Subgroup::trivial()).unwrap(),
            profile(&[(1, 6)])
        );

        let d6 = dihedral_subgroup_classes(6).unwrap();
        let hexagon = ngon_vertices_dihedral(6).unwrap();
        let dp3 = d6.table.canonical(d6.d_prime(2).unwrap()).clone();
        assert_eq!(hexagon.orbit_profile(&dp3).unwrap(), profile(&[(6, 1)]));
        let d1 = d6.table.canonical(d6.d(6).unwrap()).clone();
        assert_eq!(
            hexagon.orbit_profile(&d1).unwrap(),
            profile(&[(1, 2), (2, 2)])
        );
    }

    #[test]
    fn marks_of_small_cases() {
        let c6 = Arc::new(cyclic_group(6).unwrap());
        let c3 = c6.closure(&[c6.pow(c6.generators()[0], 2)]);
        let c6_c3 = GSet::coset_space(c6.clone(), &c3).unwrap();
        assert_eq!(c6_c3.fixed_points(&c3).unwrap(), 2);

        let d6 = dihedral_subgroup_classes(6).unwrap();
        let regular = GSet::coset_space(d6.group().clone(), &Subgroup::trivial()).unwrap();
        let d1 = d6.table.canonical(d6.d(6).unwrap()).clone();
        assert_eq!(regular.fixed_points(&d1).unwrap(), 0);

        let pentagon = ngon_vertices_dihedral(5).unwrap();
        let g = pentagon.group().clone();
        assert_eq!(
            pentagon
                .fixed_points(&g.closure(&[g.generators()[1]]))
                .unwrap(),
            1
        );
    }

    #[test]
    fn prism_is_regular() {
        for n in 1..=6 {
            let prism = prism_vertices(n).unwrap();
            let table = subgroup_classes(prism.group().clone(), &GroupConfig::default()).unwrap();
            let regular = GSet::coset_space(prism.group().clone(), &Subgroup::trivial()).unwrap();
            assert!(prism.is_isomorphic(&regular, &table).unwrap());
        }
    }

    #[test]
    fn ngon_dihedral_is_reflection_quotient() {
        for n in 1..=8 {
            let x = ngon_vertices_dihedral(n).unwrap();
            let g = x.group().clone();
            let table = subgroup_classes(g.clone(), &GroupConfig::default()).unwrap();
            let refl = g.closure(&[g.generators()[1]]);
            let quotient = GSet::coset_space(g, &refl).unwrap();
            assert!(x.is_isomorphic(&quotient, &table).unwrap());
            assert_eq!(x.size(), n);
        }
    }

    #[test]
    fn products_and_unions() {
        let d3 = Arc::new(dihedral_group(3).unwrap());
        let table = subgroup_classes(d3.clone(), &GroupConfig::default()).unwrap();
        let x = GSet::natural(d3.clone());
        let y = GSet::coset_space(d3.clone(), &d3.closure(&[d3.generators()[0]])).unwrap();
        let px = x.product(&y).unwrap().mark_vector(&table).unwrap();
        let ux = x.disjoint_union(&y).unwrap().mark_vector(&table).unwrap();
        let (mx, my) = (
            x.mark_vector(&table).unwrap(),
            y.mark_vector(&table).unwrap(),
        );
        for i in 0..table.len() {
            assert_eq!(px[i], mx[i] * my[i]);
            assert_eq!(ux[i], mx[i] + my[i]);
        }
        let unit = x.product(&GSet::point(d3.clone())).unwrap();
        assert!(unit.is_isomorphic(&x, &table).unwrap());
        let empty = GSet::empty(d3.clone());
        assert_eq!(empty.mark_vector(&table).unwrap(), vec![0; table.len()]);
        let c3 = Arc::new(cyclic_group(3).unwrap());
        assert_eq!(
            x.product(&GSet::natural(c3)).err(),
            Some(Error::GroupMismatch)
        );
    }

    #[test]
    fn restriction() {
        let c6 = Arc::new(cyclic_group(6).unwrap());
        let c2 = c6.closure(&[c6.pow(c6.generators()[0], 3)]);
        let c3 = c6.closure(&[c6.pow(c6.generators()[0], 2)]);
        let x = GSet::coset_space(c6.clone(), &c2).unwrap();
        let (sub, r) = x.restrict_to(&c3).unwrap();
        assert_eq!(
            r.orbit_profile(&sub.group.whole()).unwrap(),
            profile(&[(3, 1)])
        );

        let hexagon = ngon_vertices_dihedral(6).unwrap();
        let g = hexagon.group().clone();
        let rot = g.closure(&[g.generators()[0]]);
        let (sub, r) = hexagon.restrict_to(&rot).unwrap();
        assert_eq!(
            r.orbit_profile(&sub.group.whole()).unwrap(),
            profile(&[(6, 1)])
        );
    }

    #[test]
    fn double_coset_cases() {
        let c6 = cyclic_group(6).unwrap();
        let dc = double_cosets(&c6, &c6.whole(), &c6.whole()).unwrap();
        assert_eq!(dc.representatives, vec![0]);
        let c2 = c6.closure(&[c6.pow(c6.generators()[0], 3)]);
        let c3 = c6.closure(&[c6.pow(c6.generators()[0], 2)]);
        assert_eq!(
            double_cosets(&c6, &c3, &c2).unwrap().representatives.len(),
            1
        );

        let d6 = dihedral_group(6).unwrap();
        let d1 = d6.closure(&[d6.generators()[1]]);
        let dc = double_cosets(&d6, &d1, &d1).unwrap();
        assert_eq!(dc.representatives.len(), 4);
        let total: usize = dc.parts.iter().map(|p| d1.order() / p.order()).sum();
        assert_eq!(total, 6);
        assert_eq!(dc.sizes.iter().sum::<usize>(), 12);
    }

    #[test]
    fn invalid_actions_are_rejected() {
        let c2 = Arc::new(cyclic_group(2).unwrap());
        assert!(GSet::from_table(c2.clone(), 2, vec![0, 1, 0, 0]).is_err());
        assert!(GSet::from_table(c2.clone(), 2, vec![1, 0, 1, 0]).is_err());
        let c3 = Arc::new(cyclic_group(3).unwrap());
        let swap = Permutation::parse_cycles(2, "(0 1)").unwrap();
        assert!(GSet::from_generator_action(c3, &[swap]).is_err());
    }
}
