use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use super::{dihedral_group, FiniteGroup, GroupConfig};
use crate::error::{Error, Result};
use crate::series::divisors;

/// A subgroup stored as the sorted indices of its members in the parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `members` is a subgroup of `group`.
    pub fn from_members(group: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&g| g >= group.order()) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        let h = Self { members };
        for &x in &h.members {
            if !h.contains(group.inverse(x)) {
                return Err(Error::NotASubgroup(format!(
                    "not closed under inverse at {x}"
                )));
            }
            for &y in &h.members {
                if !h.contains(group.mult(x, y)) {
                    return Err(Error::NotASubgroup(format!("not closed: {x}·{y}")));
                }
            }
        }
        Ok(h)
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    /// The trivial subgroup.
    pub fn trivial() -> Self {
        Self { members: vec![0] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self
            .members
            .iter()
            .map(|&h| group.conjugate(g, h))
            .collect();
        members.sort_unstable();
        Subgroup { members }
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&g| other.contains(g))
                .collect(),
        }
    }

    pub fn is_cyclic(&self, group: &FiniteGroup) -> bool {
        self.members
            .iter()
            .any(|&g| group.element_order(g) == self.order())
    }
}

/// Every subgroup of `group`, sorted by order and then by member set.
///
/// Subgroups are generated by repeatedly joining known subgroups with cyclic
/// subgroups, starting from the trivial subgroup.
pub fn all_subgroups(group: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    if group.order() > cap {
        return Err(Error::CapExceeded {
            what: format!(
                "subgroup enumeration for a group of order {}",
                group.order()
            ),
            cap,
        });
    }
    let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for g in 1..group.order() {
        let c = group.closure(&[g]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((g, c));
        }
    }

    let trivial = Subgroup::trivial();
    let mut found: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
    let mut queue: Vec<(Subgroup, Vec<usize>)> = vec![(trivial, Vec::new())];
    let mut cursor = 0;
    while cursor < queue.len() {
        let (h, gens) = queue[cursor].clone();
        cursor += 1;
        for (g, _) in &cyclic {
            if h.contains(*g) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(*g);
            let k = group.closure(&next_gens);
            if found.insert(k.clone()) {
                queue.push((k, next_gens));
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Ok(out)
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Lexicographically least member set in the class.
    pub canonical: Subgroup,
    /// All subgroups of the class, sorted.
    pub conjugates: Vec<Subgroup>,
    /// `witnesses[i]` conjugates `canonical` onto `conjugates[i]`.
    pub witnesses: Vec<usize>,
    pub label: String,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.canonical.order()
    }
}

/// The set Φ(G) of conjugacy classes of subgroups, ordered by subgroup order
/// and then by canonical member set.
#[derive(Clone, Debug)]
pub struct SubgroupClassTable {
    group: Arc<FiniteGroup>,
    classes: Vec<SubgroupClass>,
    lookup: HashMap<Subgroup, usize>,
    // below[i][j]: some conjugate of class i lies in class j's canonical
    below: Vec<Vec<bool>>,
}

/// Conjugacy classification of all subgroups of `group`.
pub fn subgroup_classes(
    group: Arc<FiniteGroup>,
    config: &GroupConfig,
) -> Result<SubgroupClassTable> {
    let subgroups = all_subgroups(&group, config.subgroup_cap)?;
    let mut lookup: HashMap<Subgroup, usize> = HashMap::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    for h in &subgroups {
        if lookup.contains_key(h) {
            continue;
        }
        let mut conj: BTreeMap<Subgroup, usize> = BTreeMap::new();
        for g in 0..group.order() {
            conj.entry(h.conjugate_by(&group, g)).or_insert(g);
        }
        let idx = classes.len();
        let (conjugates, witnesses): (Vec<_>, Vec<_>) = conj.into_iter().unzip();
        for c in &conjugates {
            lookup.insert(c.clone(), idx);
        }
        // h is the first of its class in sorted order, so it is the least member
        debug_assert_eq!(&conjugates[0], h);
        classes.push(SubgroupClass {
            canonical: h.clone(),
            conjugates,
            witnesses,
            label: String::new(),
        });
    }
    generic_labels(&group, &mut classes);
    let below = classes
        .iter()
        .map(|v| {
            classes
                .iter()
                .map(|w| {
                    v.order() <= w.order()
                        && w.order() % v.order() == 0
                        && v.conjugates.iter().any(|c| c.is_subset_of(&w.canonical))
                })
                .collect()
        })
        .collect();
    Ok(SubgroupClassTable {
        group,
        classes,
        lookup,
        below,
    })
}

fn generic_labels(group: &FiniteGroup, classes: &mut [SubgroupClass]) {
    let mut used: HashMap<String, usize> = HashMap::new();
    for class in classes.iter_mut() {
        let stem = if class.canonical.is_cyclic(group) {
            "C"
        } else {
            "H"
        };
        let base = format!("{stem}_{}", class.order());
        let count = used.entry(base.clone()).or_insert(0);
        class.label = format!("{base}{}", "'".repeat(*count));
        *count += 1;
    }
}

impl SubgroupClassTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, idx: usize) -> &SubgroupClass {
        &self.classes[idx]
    }

    pub fn canonical(&self, idx: usize) -> &Subgroup {
        &self.classes[idx].canonical
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.classes[idx].label
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Class index of an arbitrary subgroup of the group.
    pub fn class_of(&self, h: &Subgroup) -> Option<usize> {
        self.lookup.get(h).copied()
    }

    /// Index of the trivial subgroup (always the first class).
    pub fn trivial_class(&self) -> usize {
        0
    }

    /// Index of the whole group (always the last class).
    pub fn whole_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// Whether some conjugate of class `v` is contained in class `w`.
    pub fn is_subconjugate(&self, v: usize, w: usize) -> bool {
        self.below[v][w]
    }

    /// Total number of subgroups across all classes.
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.conjugates.len()).sum()
    }

    fn relabel(&mut self, labels: Vec<String>) {
        for (class, label) in self.classes.iter_mut().zip(labels) {
            class.label = label;
        }
    }
}

/// Φ(D_n) with the dihedral labelling `C_m`, `D_m`, `D'_m` (`m = n/d`).
///
/// For each divisor `d` of `n`: `C_{n/d} = ⟨a^d⟩`, `D_{n/d} = ⟨a^d, b⟩` and
/// `D'_{n/d} = ⟨a^d, ba⟩`. The two reflection classes coincide when `d` is odd.
#[derive(Clone, Debug)]
pub struct DihedralClassification {
    pub n: usize,
    pub table: SubgroupClassTable,
    pub cyclic: BTreeMap<usize, usize>,
    pub reflection: BTreeMap<usize, usize>,
    pub reflection_prime: BTreeMap<usize, usize>,
}

impl DihedralClassification {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.table.group()
    }

    /// Class of `C_{n/d}`.
    pub fn c(&self, d: usize) -> Option<usize> {
        self.cyclic.get(&d).copied()
    }

    /// Class of `D_{n/d}`.
    pub fn d(&self, d: usize) -> Option<usize> {
        self.reflection.get(&d).copied()
    }

    /// Class of `D'_{n/d}`.
    pub fn d_prime(&self, d: usize) -> Option<usize> {
        self.reflection_prime.get(&d).copied()
    }
}

pub fn dihedral_subgroup_classes(n: usize) -> Result<DihedralClassification> {
    let group = Arc::new(dihedral_group(n)?);
    let mut table = subgroup_classes(group.clone(), &GroupConfig::default())?;
    let (a, b) = (group.generators()[0], group.generators()[1]);
    let ba = group.mult(b, a);

    let mut labels: Vec<Option<String>> = vec![None; table.len()];
    let mut assign = |idx: usize, label: String| -> Result<()> {
        match &labels[idx] {
            Some(existing) if *existing != label => Err(Error::Mismatch(format!(
                "class {idx} labelled both {existing} and {label}"
            ))),
            _ => {
                labels[idx] = Some(label);
                Ok(())
            }
        }
    };
    let locate = |seeds: &[usize]| {
        table
            .class_of(&group.closure(seeds))
            .expect("closure is a subgroup")
    };

    let (mut cyclic, mut reflection, mut reflection_prime) =
        (BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
    for d in divisors(n as u64)? {
        let d = d as usize;
        let m = n / d;
        let ad = group.pow(a, d);
        let c = locate(&[ad]);
        let r = locate(&[ad, b]);
        let rp = locate(&[ad, ba]);
        if (r == rp) != (d % 2 == 1) {
            return Err(Error::Mismatch(format!(
                "D_{m} and D'_{m} conjugacy disagrees with the parity of {d}"
            )));
        }
        assign(c, format!("C_{m}"))?;
        assign(r, format!("D_{m}"))?;
        if rp != r {
            assign(rp, format!("D'_{m}"))?;
        }
        cyclic.insert(d, c);
        reflection.insert(d, r);
        reflection_prime.insert(d, rp);
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| Error::Mismatch(format!("class {i} has no dihedral label"))))
        .collect::<Result<Vec<_>>>()?;
    table.relabel(labels);
    Ok(DihedralClassification {
        n,
        table,
        cyclic,
        reflection,
        reflection_prime,
    })
}
