//! Brute-force ground truth by direct enumeration.
//!
//! Nothing here uses marks, inversion or generating functions. Colorings are
//! materialized as vectors of color indices (color `0` is the distinguished
//! one) and orbits are found by scanning for canonical representatives: a
//! coloring represents its orbit when it is lexicographically least among its
//! images. This keeps memory constant, and the scan is split across threads.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::{Subgroup, SubgroupClassTable};
use crate::gset::{same_group, GSet};

/// Default limit on the number of objects enumerated.
pub const DEFAULT_ORACLE_CAP: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Orbit counts bucketed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub counts: BTreeMap<usize, u64>,
}

impl Census {
    pub fn count(&self, degree: usize) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    fn merge(mut self, other: Census) -> Census {
        for (d, c) in other.counts {
            *self.counts.entry(d).or_default() += c;
        }
        self
    }
}

fn coloring_count(x: &GSet, k: u64, cap: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 colors, got {k}"
        )));
    }
    let exceeded = || Error::CapExceeded {
        what: format!("{k}^{} colorings", x.size()),
        cap: cap as usize,
    };
    let total = u32::try_from(x.size())
        .ok()
        .and_then(|n| k.checked_pow(n))
        .ok_or_else(exceeded)?;
    if total > cap {
        return Err(exceeded());
    }
    Ok(total)
}

fn decode(mut code: u64, k: u64, f: &mut [u64]) {
    for slot in f.iter_mut().rev() {
        *slot = code % k;
        code /= k;
    }
}

/// Scans all colorings; `visit(coloring, stabilizer)` is called once per orbit
/// with the orbit's least coloring.
fn scan_orbits<F>(x: &GSet, k: u64, cap: u64, visit: F) -> Result<Census>
where
    F: Fn(&[u64], &[usize]) -> Option<usize> + Sync,
{
    let total = coloring_count(x, k, cap)?;
    let n = x.size();
    let order = x.group().order();
    let chunk = (total / (rayon::current_num_threads() as u64 * 8)).max(1024);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let census = starts
        .into_par_iter()
        .map(|start| {
            let mut census = Census::default();
            let mut f = vec![0u64; n];
            let mut image = vec![0u64; n];
            let mut stab = Vec::with_capacity(order);
            for code in start..(start + chunk).min(total) {
                decode(code, k, &mut f);
                stab.clear();
                let mut least = true;
                for g in 0..order {
                    // (g·f)(g·p) = f(p)
                    for (p, &c) in f.iter().enumerate() {
                        image[x.act(g, p)] = c;
                    }
                    match image.as_slice().cmp(f.as_slice()) {
                        std::cmp::Ordering::Less => {
                            least = false;
                            break;
                        }
                        std::cmp::Ordering::Equal => stab.push(g),
                        std::cmp::Ordering::Greater => {}
                    }
                }
                if least {
                    if let Some(bucket) = visit(&f, &stab) {
                        *census.counts.entry(bucket).or_default() += 1;
                    }
                }
            }
            census
        })
        .reduce(Census::default, Census::merge);
    Ok(census)
}

fn degree(f: &[u64]) -> usize {
    f.iter().filter(|&&c| c != 0).count()
}

/// Orbits of `k`-colorings of `x` on which the group acts freely, by degree.
pub fn oracle_primitive_census(x: &GSet, k: u64, config: &OracleConfig) -> Result<Census> {
    scan_orbits(x, k, config.cap, |f, stab| {
        (stab.len() == 1).then(|| degree(f))
    })
}

/// Orbits of `k`-colorings of `x` whose stabilizers lie in class `h` of
/// `classes`, by degree.
pub fn oracle_mu_by_degree(
    x: &GSet,
    k: u64,
    classes: &SubgroupClassTable,
    h: usize,
    config: &OracleConfig,
) -> Result<Census> {
    if !same_group(x.group(), classes.group()) {
        return Err(Error::GroupMismatch);
    }
    if h >= classes.len() {
        return Err(Error::InvalidArgument(format!("no subgroup class {h}")));
    }
    let target = classes.class(h).order();
    let group = x.group();
    scan_orbits(x, k, config.cap, |f, stab| {
        if stab.len() != target {
            return None;
        }
        let stab = Subgroup::from_members(group, stab.to_vec()).expect("stabilizers are subgroups");
        (classes.class_of(&stab) == Some(h)).then(|| degree(f))
    })
}

fn multisets(size: usize, n: usize, cap: u64) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current = vec![0; size];
    fn fill(
        pos: usize,
        left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: u64,
    ) -> bool {
        if pos + 1 == current.len() {
            current[pos] = left;
            out.push(current.clone());
            return out.len() as u64 <= cap;
        }
        for v in (0..=left).rev() {
            current[pos] = v;
            if !fill(pos + 1, left - v, current, out, cap) {
                return false;
            }
        }
        true
    }
    if size == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return Ok(out);
    }
    if !fill(0, n, &mut current, &mut out, cap) {
        return Err(Error::CapExceeded {
            what: format!("multisets of size {n} on {size} points"),
            cap: cap as usize,
        });
    }
    Ok(out)
}

/// The G-set `Sⁿ(X)` of functions `f: X → ℕ` with `Σ f = n`, acted on by
/// `(g·f)(x) = f(g⁻¹x)`. Points are labelled by their multiplicity vectors.
pub fn oracle_symmetric_power(x: &GSet, n: usize, config: &OracleConfig) -> Result<GSet> {
    let funcs = multisets(x.size(), n, config.cap)?;
    let index: HashMap<&[usize], usize> = funcs
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let group = x.group().clone();
    let mut action = Vec::with_capacity(group.order() * funcs.len());
    let mut image = vec![0; x.size()];
    for g in 0..group.order() {
        for f in &funcs {
            for (p, &m) in f.iter().enumerate() {
                image[x.act(g, p)] = m;
            }
            action.push(index[image.as_slice()]);
        }
    }
    let labels = funcs
        .iter()
        .map(|f| {
            let parts: Vec<String> = f.iter().map(usize::to_string).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    GSet::from_table(group, funcs.len(), action)?.with_labels(labels)
}

/// Tallies orbits of `x` by the class of a point stabilizer.
pub fn oracle_burnside_decompose(
    x: &GSet,
    classes: &Arc<SubgroupClassTable>,
    config: &OracleConfig,
) -> Result<BurnsideElement> {
    if !same_group(x.group(), classes.group()) {
        return Err(Error::GroupMismatch);
    }
    if x.size() as u64 > config.cap {
        return Err(Error::CapExceeded {
            what: format!("G-set of size {}", x.size()),
            cap: config.cap as usize,
        });
    }
    let mut out = BurnsideElement::zero(classes.clone());
    let mut seen = vec![false; x.size()];
    for start in 0..x.size() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(p) = stack.pop() {
            for g in 0..x.group().order() {
                let q = x.act(g, p);
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        let class = classes
            .class_of(&x.stabilizer(start))
            .ok_or_else(|| Error::NotASubgroup("stabilizer has no class".into()))?;
        out.coeffs[class] += BigInt::from(1);
    }
    Ok(out)
}
