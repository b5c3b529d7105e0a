use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use super::{ColoringProblem, DegreeSet};
use crate::burnside::BurnsideRing;
use crate::error::{Error, Result};
use crate::group::{cyclic_group, direct_product, GroupConfig, Subgroup};
use crate::gset::{same_group, GSet};
use crate::series::{divisors, gcd, lcm, necklace};

/// One instance of an identity: both sides computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// All instances checked for one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.identity)?;
        for c in &self.checks {
            let status = if c.holds() { "ok" } else { "FAIL" };
            writeln!(f, "  {}: {} = {} [{status}]", c.label, c.lhs, c.rhs)?;
        }
        Ok(())
    }
}

fn totals(problem: &ColoringProblem) -> Result<Vec<BigInt>> {
    problem
        .mu_series_all()?
        .into_iter()
        .map(|s| Ok(s.evaluate_at_one().to_integer()))
        .collect()
}

/// `μ_H(colorings with k₁k₂ colors) = Σ b_{V1,V2}(H) μ_{V1}(k₁ colors) μ_{V2}(k₂ colors)`
/// for every class `H`.
pub fn verify_product_identity(
    ring: &Arc<BurnsideRing>,
    x: &GSet,
    k1: u64,
    k2: u64,
) -> Result<IdentityReport> {
    let joint = ColoringProblem::new(ring.clone(), x.clone(), k1 * k2, DegreeSet::ZeroOne)?;
    let left = totals(&ColoringProblem::new(
        ring.clone(),
        x.clone(),
        k1,
        DegreeSet::ZeroOne,
    )?)?;
    let right = totals(&ColoringProblem::new(
        ring.clone(),
        x.clone(),
        k2,
        DegreeSet::ZeroOne,
    )?)?;
    let lhs = totals(&joint)?;
    let n = ring.len();
    let mut rhs = vec![BigInt::zero(); n];
    for v1 in 0..n {
        for v2 in 0..n {
            let weight = &left[v1] * &right[v2];
            if weight.is_zero() {
                continue;
            }
            for (r, b) in rhs.iter_mut().zip(ring.product_coefficients(v1, v2)?) {
                *r += &weight * b;
            }
        }
    }
    let checks = (0..n)
        .map(|h| IdentityCheck {
            label: ring.classes().label(h).to_string(),
            lhs: lhs[h].clone(),
            rhs: rhs[h].clone(),
        })
        .collect();
    Ok(IdentityReport {
        identity: format!("product identity, k1 = {k1}, k2 = {k2}"),
        checks,
    })
}

/// A larger group `G'` containing `G`, and a `G'`-set `Y`.
#[derive(Debug)]
pub struct FrobeniusSetup {
    pub big_ring: Arc<BurnsideRing>,
    pub y: GSet,
    /// `embedding[g]` is the index in `G'` of element `g` of `G`.
    pub embedding: Vec<usize>,
}

/// `G' = C_r × G` acting on `Y = C_r × X`, with `G` embedded as `1 × G`.
pub fn corollary_frobenius_setup(x: &GSet, r: usize) -> Result<FrobeniusSetup> {
    let cr = cyclic_group(r)?;
    let g = x.group();
    let (product, components) = direct_product(&cr, g)?;
    let mut embedding = vec![usize::MAX; g.order()];
    for (e, &(zl, zr)) in components.iter().enumerate() {
        if zl == 0 {
            embedding[zr] = e;
        }
    }
    let n = x.size();
    let mut action = Vec::with_capacity(product.order() * r * n);
    for &(zl, zr) in &components {
        for c in 0..r {
            let c2 = cr.mult(zl, c);
            action.extend((0..n).map(|p| c2 * n + x.act(zr, p)));
        }
    }
    let product = Arc::new(product);
    let config = GroupConfig {
        subgroup_cap: GroupConfig::default().subgroup_cap.max(product.order()),
        ..GroupConfig::default()
    };
    let y = GSet::from_table(product.clone(), r * n, action)?;
    Ok(FrobeniusSetup {
        big_ring: Arc::new(BurnsideRing::new(product, &config)?),
        y,
        embedding,
    })
}

/// `μ_H(colorings of X with k^r colors) = Σ_{V∈Φ(G')} c_V(H) μ_V(colorings of Y with k colors)`
/// for every class `H` of Φ(G). Requires `[Res Y] = r[X]`.
pub fn verify_frobenius_identity(
    ring: &Arc<BurnsideRing>,
    x: &GSet,
    k: u64,
    r: u32,
    setup: &FrobeniusSetup,
) -> Result<IdentityReport> {
    let g = ring.group();
    if !same_group(g, x.group()) || !same_group(setup.big_ring.group(), setup.y.group()) {
        return Err(Error::GroupMismatch);
    }
    let big = setup.big_ring.group();
    let emb = &setup.embedding;
    if emb.len() != g.order() || emb.iter().any(|&e| e >= big.order()) {
        return Err(Error::Precondition(
            "embedding does not map into the larger group".into(),
        ));
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            if emb[g.mult(a, b)] != big.mult(emb[a], emb[b]) {
                return Err(Error::Precondition(
                    "embedding is not a homomorphism".into(),
                ));
            }
        }
    }
    let image = Subgroup::from_members(big, emb.clone())?;
    if image.order() != g.order() {
        return Err(Error::Precondition("embedding is not injective".into()));
    }
    let sub = setup.big_ring.subgroup_ring(&image)?;
    let y_res = setup.y.restrict(&sub.subgroup)?;

    let local_class = |h: usize| -> Result<(Subgroup, usize)> {
        let mapped: Vec<usize> = ring
            .classes()
            .canonical(h)
            .members()
            .iter()
            .map(|&m| emb[m])
            .collect();
        let mut mapped = mapped;
        mapped.sort_unstable();
        let global = Subgroup::from_members(big, mapped)?;
        let local = sub.subgroup.localize(&global)?;
        let idx = sub
            .ring
            .classes()
            .class_of(&local)
            .ok_or_else(|| Error::NotASubgroup("embedded class".into()))?;
        Ok((local, idx))
    };

    let n = ring.len();
    let mut locals = Vec::with_capacity(n);
    for h in 0..n {
        let (local, idx) = local_class(h)?;
        let lhs_marks = y_res.fixed_points(&local)?;
        let rhs_marks = r as usize * x.fixed_points(ring.classes().canonical(h))?;
        if lhs_marks != rhs_marks {
            return Err(Error::Precondition(format!(
                "[Res Y] != {r}[X]: marks differ at {}",
                ring.classes().label(h)
            )));
        }
        locals.push(idx);
    }

    let lhs = totals(&ColoringProblem::new(
        ring.clone(),
        x.clone(),
        Pow::pow(k, r),
        DegreeSet::ZeroOne,
    )?)?;
    let mu_y = totals(&ColoringProblem::new(
        setup.big_ring.clone(),
        setup.y.clone(),
        k,
        DegreeSet::ZeroOne,
    )?)?;
    let mut rhs = vec![BigInt::zero(); n];
    for (v, mu) in mu_y.iter().enumerate() {
        if mu.is_zero() {
            continue;
        }
        let (_, c) = setup.big_ring.restriction_coefficients(&image, v)?;
        for h in 0..n {
            rhs[h] += &c[locals[h]] * mu;
        }
    }
    let checks = (0..n)
        .map(|h| IdentityCheck {
            label: ring.classes().label(h).to_string(),
            lhs: lhs[h].clone(),
            rhs: rhs[h].clone(),
        })
        .collect();
    Ok(IdentityReport {
        identity: format!("frobenius identity, k = {k}, r = {r}"),
        checks,
    })
}

/// The Frobenius identity with `Y = C_r × X` under `C_r × G`.
pub fn verify_frobenius_corollary(
    ring: &Arc<BurnsideRing>,
    x: &GSet,
    k: u64,
    r: u32,
) -> Result<IdentityReport> {
    let setup = corollary_frobenius_setup(x, r as usize)?;
    verify_frobenius_identity(ring, x, k, r, &setup)
}

/// `M(k₁k₂, n) = Σ_{[i,j]=n} (i,j) M(k₁,i) M(k₂,j)`.
pub fn necklace_product_identity(k1: u64, k2: u64, n: u64) -> Result<IdentityCheck> {
    let lhs = necklace(k1 * k2, n)?;
    let mut rhs = BigInt::zero();
    for &i in &divisors(n)? {
        for &j in &divisors(n)? {
            if lcm(i, j) == n {
                rhs += BigInt::from(gcd(i, j)) * necklace(k1, i)? * necklace(k2, j)?;
            }
        }
    }
    Ok(IdentityCheck {
        label: format!("M({}·{}, {n})", k1, k2),
        lhs,
        rhs,
    })
}

/// `M(k^r, n) = Σ_{[j,r]=nr} (j/n) M(k,j)`.
pub fn necklace_frobenius_identity(k: u64, r: u32, n: u64) -> Result<IdentityCheck> {
    let lhs = necklace(Pow::pow(k, r), n)?;
    let nr = n * r as u64;
    let mut scaled = BigInt::zero();
    for j in divisors(nr)? {
        if lcm(j, r as u64) == nr {
            scaled += BigInt::from(j) * necklace(k, j)?;
        }
    }
    if !(&scaled % BigInt::from(n)).is_zero() {
        return Err(Error::NonIntegral(format!("{scaled}/{n}")));
    }
    Ok(IdentityCheck {
        label: format!("M({k}^{r}, {n})"),
        lhs,
        rhs: scaled / BigInt::from(n),
    })
}
