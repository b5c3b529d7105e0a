//! The Burnside ring B(G): tables of marks, their inverse, decomposition of
//! G-sets into transitive pieces, and the structure constants for products
//! and restriction.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{
    subgroup_classes, FiniteGroup, GroupConfig, Subgroup, SubgroupClassTable, SubgroupGroup,
};
use crate::gset::{double_cosets, same_group, GSet};

/// `entries[V][W] = φ_V(G/W)` over Φ(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkTable {
    pub entries: Vec<Vec<u64>>,
}

impl MarkTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The table with rows indexed by the transitive G-sets `G/W` and columns
    /// by subgroups `V`, i.e. the transpose of `entries`.
    pub fn by_gset(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        (0..n)
            .map(|w| (0..n).map(|v| self.entries[v][w]).collect())
            .collect()
    }
}

/// `entries[H][V] = a_{H,V}` with `μ_H(X) = Σ_V a_{H,V} φ_V(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionTable {
    pub entries: Vec<Vec<BigRational>>,
}

impl InversionTable {
    /// `Σ_V a_{H,V} φ_V` for every `H`.
    pub fn apply(&self, marks: &[BigRational]) -> Vec<BigRational> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(marks)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(BigRational::zero(), |acc, (a, m)| acc + a * m)
            })
            .collect()
    }
}

/// Builds the table of marks from the canonical class representatives.
pub fn mark_table(classes: &SubgroupClassTable) -> Result<MarkTable> {
    let group = classes.group();
    let mut entries = vec![vec![0; classes.len()]; classes.len()];
    for w in 0..classes.len() {
        let coset = GSet::coset_space(group.clone(), classes.canonical(w))?;
        for (v, row) in entries.iter_mut().enumerate() {
            row[w] = coset.fixed_points(classes.canonical(v))? as u64;
        }
    }
    Ok(MarkTable { entries })
}

/// Inverts an upper-triangular table of marks by back-substitution from the
/// largest subgroup downwards:
/// `a_H = (e_H - Σ_{V>H} φ_H(G/V)·a_V) / φ_H(G/H)`.
pub fn inversion_table(marks: &MarkTable) -> Result<InversionTable> {
    let n = marks.len();
    for v in 0..n {
        if marks.entries[v][v] == 0 {
            return Err(Error::Precondition(format!(
                "zero diagonal mark at class {v}"
            )));
        }
        if (0..v).any(|w| marks.entries[v][w] != 0) {
            return Err(Error::Precondition(
                "table of marks is not upper triangular".into(),
            ));
        }
    }
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for h in (0..n).rev() {
        let mut row = vec![BigRational::zero(); n];
        row[h] = BigRational::one();
        for v in h + 1..n {
            let m = marks.entries[h][v];
            if m == 0 {
                continue;
            }
            let m = BigRational::from_integer(m.into());
            for (r, x) in row.iter_mut().zip(&a[v]) {
                if !x.is_zero() {
                    *r -= &m * x;
                }
            }
        }
        let diag = BigRational::from_integer(marks.entries[h][h].into());
        a[h] = row.into_iter().map(|x| x / &diag).collect();
    }
    Ok(InversionTable { entries: a })
}

/// An integer combination `Σ_H c_H [G/H]` over Φ(G).
#[derive(Clone, Debug)]
pub struct BurnsideElement {
    pub coeffs: Vec<BigInt>,
    pub classes: Arc<SubgroupClassTable>,
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_group(self.classes.group(), other.classes.group())
    }
}

impl BurnsideElement {
    pub fn zero(classes: Arc<SubgroupClassTable>) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); classes.len()],
            classes,
        }
    }

    /// The transitive class `[G/H]` for class index `h`.
    pub fn basis(classes: Arc<SubgroupClassTable>, h: usize) -> Self {
        let mut e = Self::zero(classes);
        e.coeffs[h] = BigInt::one();
        e
    }

    /// Number of points, `Σ c_H |G/H|`.
    pub fn cardinality(&self) -> BigInt {
        let order = self.classes.group().order();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(h, c)| c * BigInt::from(order / self.classes.canonical(h).order()))
            .sum()
    }

    /// `φ_V(α) = Σ_W c_W φ_V(G/W)`.
    pub fn mark_vector(&self, marks: &MarkTable) -> Vec<BigInt> {
        marks
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.coeffs)
                    .map(|(&m, c)| c * BigInt::from(m))
                    .sum()
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_group(self.classes.group(), other.classes.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            classes: self.classes.clone(),
        })
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (h, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let m = c.abs();
            if !m.is_one() {
                write!(f, "{m}")?;
            }
            write!(f, "[G/{}]", self.classes.label(h))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The Burnside ring of a subgroup together with the subgroup's embedding.
#[derive(Debug)]
pub struct SubgroupRing {
    pub subgroup: SubgroupGroup,
    pub ring: BurnsideRing,
}

/// Φ(G) with its table of marks, inverse, transitive G-sets and memoized
/// structure constants.
#[derive(Debug)]
pub struct BurnsideRing {
    classes: Arc<SubgroupClassTable>,
    marks: MarkTable,
    inverse: InversionTable,
    cosets: Vec<GSet>,
    config: GroupConfig,
    products: Mutex<HashMap<(usize, usize), Vec<BigInt>>>,
    subrings: Mutex<HashMap<Subgroup, Arc<SubgroupRing>>>,
}

impl BurnsideRing {
    pub fn new(group: Arc<FiniteGroup>, config: &GroupConfig) -> Result<Self> {
        Self::with_classes(subgroup_classes(group, config)?, config)
    }

    /// Uses a precomputed (possibly relabelled) classification.
    pub fn with_classes(classes: SubgroupClassTable, config: &GroupConfig) -> Result<Self> {
        let marks = mark_table(&classes)?;
        let inverse = inversion_table(&marks)?;
        let cosets = (0..classes.len())
            .map(|w| GSet::coset_space(classes.group().clone(), classes.canonical(w)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            classes: Arc::new(classes),
            marks,
            inverse,
            cosets,
            config: *config,
            products: Mutex::new(HashMap::new()),
            subrings: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.classes.group()
    }

    pub fn classes(&self) -> &Arc<SubgroupClassTable> {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn marks(&self) -> &MarkTable {
        &self.marks
    }

    pub fn inverse(&self) -> &InversionTable {
        &self.inverse
    }

    /// The transitive G-set `G/V` for class index `v`.
    pub fn coset(&self, v: usize) -> &GSet {
        &self.cosets[v]
    }

    pub fn config(&self) -> &GroupConfig {
        &self.config
    }

    /// The unit `[G/G]`.
    pub fn unit(&self) -> BurnsideElement {
        BurnsideElement::basis(self.classes.clone(), self.classes.whole_class())
    }

    fn check_group(&self, x: &GSet) -> Result<()> {
        if same_group(self.group(), x.group()) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// `μ_H(X)` for every class, from the marks of `X`.
    pub fn decompose(&self, x: &GSet) -> Result<BurnsideElement> {
        self.check_group(x)?;
        let marks: Vec<BigRational> = x
            .mark_vector(&self.classes)?
            .into_iter()
            .map(|m| BigRational::from_integer(m.into()))
            .collect();
        let coeffs = self
            .inverse
            .apply(&marks)
            .into_iter()
            .map(|mu| {
                if mu.is_integer() {
                    Ok(mu.to_integer())
                } else {
                    Err(Error::NonIntegral(mu.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BurnsideElement {
            coeffs,
            classes: self.classes.clone(),
        })
    }

    /// `b_{V1,V2}(H) = μ_H(G/V1 × G/V2)` for every `H`.
    pub fn product_coefficients(&self, v1: usize, v2: usize) -> Result<Vec<BigInt>> {
        let key = (v1.min(v2), v1.max(v2));
        if let Some(hit) = self.products.lock().expect("cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let product = self.cosets[v1].product(&self.cosets[v2])?;
        let coeffs = self.decompose(&product)?.coeffs;
        self.products
            .lock()
            .expect("cache poisoned")
            .insert(key, coeffs.clone());
        Ok(coeffs)
    }

    /// The same coefficients from the double-coset formula
    /// `G/V1 × G/V2 ≅ ⋃_{V1 g V2} G/(V1 ∩ gV2g⁻¹)`.
    pub fn product_coefficients_by_double_cosets(
        &self,
        v1: usize,
        v2: usize,
    ) -> Result<Vec<BigInt>> {
        let dc = double_cosets(
            self.group(),
            self.classes.canonical(v1),
            self.classes.canonical(v2),
        )?;
        let mut coeffs = vec![BigInt::zero(); self.len()];
        for part in &dc.parts {
            let h = self
                .classes
                .class_of(part)
                .ok_or_else(|| Error::NotASubgroup("double-coset intersection".into()))?;
            coeffs[h] += 1;
        }
        Ok(coeffs)
    }

    /// `[X]·[Y]` through the structure constants `b`.
    pub fn multiply(
        &self,
        alpha: &BurnsideElement,
        beta: &BurnsideElement,
    ) -> Result<BurnsideElement> {
        for e in [alpha, beta] {
            if !same_group(self.group(), e.classes.group()) {
                return Err(Error::GroupMismatch);
            }
        }
        let mut out = BurnsideElement::zero(self.classes.clone());
        for (i, a) in alpha.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in beta.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.coeffs.iter_mut().zip(self.product_coefficients(i, j)?) {
                    *o += &ab * c;
                }
            }
        }
        Ok(out)
    }

    /// Burnside ring of the subgroup `h`, cached per subgroup.
    pub fn subgroup_ring(&self, h: &Subgroup) -> Result<Arc<SubgroupRing>> {
        if let Some(hit) = self.subrings.lock().expect("cache poisoned").get(h) {
            return Ok(hit.clone());
        }
        let h = Subgroup::from_members(self.group(), h.members().to_vec())?;
        let subgroup = self.group().subgroup_group(&h);
        let ring = BurnsideRing::new(subgroup.group.clone(), &self.config)?;
        let entry = Arc::new(SubgroupRing { subgroup, ring });
        self.subrings
            .lock()
            .expect("cache poisoned")
            .insert(h, entry.clone());
        Ok(entry)
    }

    /// `c_V(K) = μ_K(Res^G_H(G/V))` for every class `K` of Φ(H).
    pub fn restriction_coefficients(
        &self,
        h: &Subgroup,
        v: usize,
    ) -> Result<(Arc<SubgroupRing>, Vec<BigInt>)> {
        let sub = self.subgroup_ring(h)?;
        let restricted = self.cosets[v].restrict(&sub.subgroup)?;
        let coeffs = sub.ring.decompose(&restricted)?.coeffs;
        Ok((sub, coeffs))
    }

    /// `Res^G_H(α)` through the structure constants `c`.
    pub fn restrict_element(
        &self,
        alpha: &BurnsideElement,
        h: &Subgroup,
    ) -> Result<(Arc<SubgroupRing>, BurnsideElement)> {
        if !same_group(self.group(), alpha.classes.group()) {
            return Err(Error::GroupMismatch);
        }
        let sub = self.subgroup_ring(h)?;
        let mut out = BurnsideElement::zero(sub.ring.classes.clone());
        for (v, a) in alpha.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (_, c) = self.restriction_coefficients(h, v)?;
            for (o, cv) in out.coeffs.iter_mut().zip(c) {
                *o += a * cv;
            }
        }
        Ok((sub, out))
    }
}
