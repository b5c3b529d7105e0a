//! Concrete finite permutation groups, their subgroups, and the conjugacy
//! classification of subgroups.
//!
//! Every group is stored fully enumerated. Element `0` is always the identity
//! and elements are listed breadth-first from it, applying generators in the
//! order they were given, so indices are reproducible across runs.

mod permutation;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

pub use permutation::Permutation;
pub use subgroup::{
    all_subgroups, dihedral_subgroup_classes, subgroup_classes, DihedralClassification, Subgroup,
    SubgroupClass, SubgroupClassTable,
};

use crate::error::{Error, Result};

/// Groups up to this order keep a dense multiplication table.
pub const DENSE_TABLE_LIMIT: usize = 512;

/// Resource limits for group construction and subgroup enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupConfig {
    /// Largest closure accepted by [`group_from_generators`].
    pub closure_cap: usize,
    /// Largest group order for which all subgroups are enumerated.
    pub subgroup_cap: usize,
    /// Largest `n` accepted by [`symmetric_group`].
    pub symmetric_cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        Self {
            closure_cap: 100_000,
            subgroup_cap: 200,
            symmetric_cap: 8,
        }
    }
}

/// A finite group of permutations with full element enumeration.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverse: Vec<usize>,
    table: Option<Vec<u32>>,
    generators: Vec<usize>,
    // element = parent ∘ generators[slot]; None for the identity
    parent: Vec<Option<(usize, usize)>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    fn from_parts(
        degree: usize,
        elements: Vec<Permutation>,
        generators: Vec<usize>,
        parent: Vec<Option<(usize, usize)>>,
    ) -> Self {
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let order = elements.len();
        let table = (order <= DENSE_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(order * order);
            for g in &elements {
                for h in &elements {
                    t.push(index[&g.compose(h)] as u32);
                }
            }
            t
        });
        Self {
            degree,
            elements,
            index,
            inverse,
            table,
            generators,
            parent,
        }
    }

    /// Re-wraps an already closed, identity-first element list, keeping its order.
    fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements[0].is_identity());
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        // greedy generating set, then a breadth-first spanning tree over it
        let mut generators = Vec::new();
        let mut reached = vec![false; elements.len()];
        reached[0] = true;
        let mut parent = vec![None; elements.len()];
        for candidate in 0..elements.len() {
            if reached[candidate] {
                continue;
            }
            generators.push(candidate);
            reached.iter_mut().for_each(|r| *r = false);
            reached[0] = true;
            parent.iter_mut().for_each(|p| *p = None);
            let mut queue = VecDeque::from([0usize]);
            while let Some(e) = queue.pop_front() {
                for (slot, &s) in generators.iter().enumerate() {
                    let next = index[&elements[e].compose(&elements[s])];
                    if !reached[next] {
                        reached[next] = true;
                        parent[next] = Some((e, slot));
                        queue.push_back(next);
                    }
                }
            }
        }
        Self::from_parts(degree, elements, generators, parent)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, g: usize) -> &Permutation {
        &self.elements[g]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Element indices of the generators, in the order they were supplied.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Breadth-first spanning tree: `g = parent ∘ generators[slot]`.
    pub fn spanning_parent(&self, g: usize) -> Option<(usize, usize)> {
        self.parent[g]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Group product `g ∘ h`.
    #[inline]
    pub fn mult(&self, g: usize, h: usize) -> usize {
        match &self.table {
            Some(t) => t[g * self.order() + h] as usize,
            None => self.index[&self.elements[g].compose(&self.elements[h])],
        }
    }

    pub fn has_dense_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn pow(&self, g: usize, exponent: usize) -> usize {
        (0..exponent).fold(0, |acc, _| self.mult(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mult(x, g);
            k += 1;
        }
        k
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mult(self.mult(g, x), self.inverse[g])
    }

    /// Smallest subgroup containing `seeds`.
    pub fn closure(&self, seeds: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0];
        let gens: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
        let mut cursor = 0;
        while cursor < members.len() {
            let e = members[cursor];
            cursor += 1;
            for &s in &gens {
                let next = self.mult(e, s);
                if !inside[next] {
                    inside[next] = true;
                    members.push(next);
                }
            }
        }
        members.sort_unstable();
        Subgroup::from_sorted_unchecked(members)
    }

    /// The subgroup `h` as a standalone group. Elements keep the relative order
    /// of `h`'s members; `embedding[i]` is the parent index of element `i`.
    pub fn subgroup_group(&self, h: &Subgroup) -> SubgroupGroup {
        let elements = h
            .members()
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect();
        SubgroupGroup {
            group: Arc::new(Self::from_closed_elements(self.degree, elements)),
            embedding: h.members().to_vec(),
            subgroup: h.clone(),
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked((0..self.order()).collect())
    }
}

/// A subgroup re-indexed as its own group.
#[derive(Clone, Debug)]
pub struct SubgroupGroup {
    pub group: Arc<FiniteGroup>,
    /// Parent-group index of each element of `group`.
    pub embedding: Vec<usize>,
    /// The subgroup in parent indices.
    pub subgroup: Subgroup,
}

impl SubgroupGroup {
    /// Translates a subgroup given in parent indices (contained in this
    /// subgroup) into local indices.
    pub fn localize(&self, k: &Subgroup) -> Result<Subgroup> {
        let members = k
            .members()
            .iter()
            .map(|g| {
                self.embedding.binary_search(g).map_err(|_| {
                    Error::NotASubgroup(format!("element {g} lies outside the subgroup"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Subgroup::from_members(&self.group, members)
    }

    /// Translates a local subgroup back into parent indices.
    pub fn globalize(&self, k: &Subgroup) -> Subgroup {
        let mut members: Vec<usize> = k.members().iter().map(|&i| self.embedding[i]).collect();
        members.sort_unstable();
        Subgroup::from_sorted_unchecked(members)
    }
}

/// Closure of `generators` under composition, enumerated breadth-first from the
/// identity with generators applied in the given order.
pub fn group_from_generators(
    degree: usize,
    generators: &[Permutation],
    config: &GroupConfig,
) -> Result<FiniteGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut parent = vec![None];
    let mut cursor = 0;
    while cursor < elements.len() {
        let e = cursor;
        cursor += 1;
        for (slot, s) in generators.iter().enumerate() {
            let next = elements[e].compose(s);
            if !index.contains_key(&next) {
                if elements.len() >= config.closure_cap {
                    return Err(Error::CapExceeded {
                        what: "group closure".into(),
                        cap: config.closure_cap,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
                parent.push(Some((e, slot)));
            }
        }
    }
    let gens = generators.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup::from_parts(degree, elements, gens, parent))
}

fn nonzero(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} requires n >= 1")));
    }
    Ok(())
}

/// `C_n` generated by the rotation `i ↦ i+1 mod n`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    nonzero(n, "cyclic_group")?;
    let rotation = Permutation::new((0..n).map(|i| (i + 1) % n).collect())?;
    group_from_generators(n, &[rotation], &GroupConfig::default())
}

/// `D_n` with generators `[a, b]`: rotation and reflection, `a^n = b^2 = 1`, `bab = a⁻¹`.
///
/// For `n ≥ 3` the group acts on the `n` polygon vertices with `b: i ↦ -i`.
/// The vertex action is not faithful for `n ≤ 2`, so there the group is
/// realized by its regular action on `2n` points `(i, s) ↦ s·n + i` with
/// `a: (i, s) ↦ (i+1, s)` and `b: (i, s) ↦ (-i, 1-s)`.
pub fn dihedral_group(n: usize) -> Result<FiniteGroup> {
    nonzero(n, "dihedral_group")?;
    let (degree, a, b) = if n >= 3 {
        (
            n,
            (0..n).map(|i| (i + 1) % n).collect::<Vec<_>>(),
            (0..n).map(|i| (n - i) % n).collect::<Vec<_>>(),
        )
    } else {
        let point = |i: usize, s: usize| s * n + i;
        let mut a = vec![0; 2 * n];
        let mut b = vec![0; 2 * n];
        for s in 0..2 {
            for i in 0..n {
                a[point(i, s)] = point((i + 1) % n, s);
                b[point(i, s)] = point((n - i) % n, 1 - s);
            }
        }
        (2 * n, a, b)
    };
    group_from_generators(
        degree,
        &[Permutation::new(a)?, Permutation::new(b)?],
        &GroupConfig::default(),
    )
}

/// Full symmetric group on `n` points, generated by `(0 1)` and `(0 1 … n-1)`.
pub fn symmetric_group(n: usize, config: &GroupConfig) -> Result<FiniteGroup> {
    nonzero(n, "symmetric_group")?;
    if n > config.symmetric_cap {
        return Err(Error::CapExceeded {
            what: format!("symmetric group degree {n}"),
            cap: config.symmetric_cap,
        });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
        gens.push(Permutation::new((0..n).map(|i| (i + 1) % n).collect())?);
    }
    group_from_generators(n, &gens, config)
}

/// Direct product acting on the disjoint union of the two domains, together
/// with the component indices `(left, right)` of every product element.
pub fn direct_product(
    left: &FiniteGroup,
    right: &FiniteGroup,
) -> Result<(FiniteGroup, Vec<(usize, usize)>)> {
    let degree = left.degree() + right.degree();
    let shift_left = |p: &Permutation| {
        let mut images = p.images().to_vec();
        images.extend(left.degree()..degree);
        Permutation::new(images)
    };
    let shift_right = |p: &Permutation| {
        let mut images: Vec<usize> = (0..left.degree()).collect();
        images.extend(p.images().iter().map(|&y| y + left.degree()));
        Permutation::new(images)
    };
    let mut gens = Vec::new();
    for &g in left.generators() {
        gens.push(shift_left(left.element(g))?);
    }
    for &g in right.generators() {
        gens.push(shift_right(right.element(g))?);
    }
    let config = GroupConfig {
        closure_cap: left.order() * right.order() + 1,
        ..GroupConfig::default()
    };
    let product = group_from_generators(degree, &gens, &config)?;
    let components = product
        .elements()
        .iter()
        .map(|p| {
            let l = Permutation::new(p.images()[..left.degree()].to_vec())?;
            let r = Permutation::new(
                p.images()[left.degree()..]
                    .iter()
                    .map(|&y| y - left.degree())
                    .collect(),
            )?;
            Ok((
                left.index_of(&l)
                    .expect("left component lies in the left factor"),
                right
                    .index_of(&r)
                    .expect("right component lies in the right factor"),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((product, components))
}
