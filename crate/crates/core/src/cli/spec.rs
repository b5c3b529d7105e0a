use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::burnside::BurnsideRing;
use crate::error::{Error, Result};
use crate::group::{
    cyclic_group, dihedral_group, dihedral_subgroup_classes, group_from_generators,
    symmetric_group, FiniteGroup, GroupConfig, Permutation,
};
use crate::gset::{ngon_vertices, ngon_vertices_dihedral, prism_vertices, GSet};

/// A permutation in disjoint-cycle notation, independent of any degree.
pub type Cycles = Vec<Vec<usize>>;

fn parse_cycles(text: &str) -> Result<Cycles> {
    let degree = text
        .split(|c: char| !c.is_ascii_digit())
        .filter_map(|s| s.parse::<usize>().ok())
        .max()
        .map_or(0, |m| m + 1);
    Ok(Permutation::parse_cycles(degree, text)?.cycles())
}

fn write_cycles(f: &mut fmt::Formatter<'_>, cycles: &Cycles) -> fmt::Result {
    if cycles.is_empty() {
        return f.write_str("()");
    }
    for c in cycles {
        let points: Vec<String> = c.iter().map(usize::to_string).collect();
        write!(f, "({})", points.join(" "))?;
    }
    Ok(())
}

fn parse_generators(text: &str) -> Result<Vec<Cycles>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';').map(parse_cycles).collect()
}

fn write_generators(f: &mut fmt::Formatter<'_>, gens: &[Cycles]) -> fmt::Result {
    for (i, g) in gens.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        write_cycles(f, g)?;
    }
    Ok(())
}

fn to_permutations(degree: usize, gens: &[Cycles]) -> Result<Vec<Permutation>> {
    gens.iter()
        .map(|c| Permutation::from_cycles(degree, c))
        .collect()
}

/// `cyclic:N`, `dihedral:N`, `symmetric:N` or `perm:DEGREE:GEN;GEN;…`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Perm {
        degree: usize,
        generators: Vec<Cycles>,
    },
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad group spec {s:?}"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let number = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match kind {
            "cyclic" => Ok(GroupSpec::Cyclic(number(rest)?)),
            "dihedral" => Ok(GroupSpec::Dihedral(number(rest)?)),
            "symmetric" => Ok(GroupSpec::Symmetric(number(rest)?)),
            "perm" => {
                let (degree, gens) = rest.split_once(':').unwrap_or((rest, ""));
                let degree = number(degree)?;
                let generators = parse_generators(gens)?;
                to_permutations(degree, &generators)?;
                Ok(GroupSpec::Perm { degree, generators })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "perm:{degree}:")?;
                write_generators(f, generators)
            }
        }
    }
}

impl GroupSpec {
    fn check_order(&self, config: &GroupConfig) -> Result<()> {
        let order = match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::Dihedral(n) => Some(2 * *n as u128),
            GroupSpec::Symmetric(n) => (1..=*n as u128)
                .try_fold(1u128, |acc, i| acc.checked_mul(i))
                .or(Some(u128::MAX)),
            GroupSpec::Perm { .. } => None,
        };
        match order {
            Some(o) if o > config.closure_cap as u128 => Err(Error::CapExceeded {
                what: format!("order of {self}"),
                cap: config.closure_cap,
            }),
            _ => Ok(()),
        }
    }

    pub fn build(&self, config: &GroupConfig) -> Result<FiniteGroup> {
        self.check_order(config)?;
        let group = match self {
            GroupSpec::Cyclic(n) => cyclic_group(*n)?,
            GroupSpec::Dihedral(n) => dihedral_group(*n)?,
            GroupSpec::Symmetric(n) => symmetric_group(*n, config)?,
            GroupSpec::Perm { degree, generators } => {
                group_from_generators(*degree, &to_permutations(*degree, generators)?, config)?
            }
        };
        if group.order() > config.closure_cap {
            return Err(Error::CapExceeded {
                what: format!("group order {}", group.order()),
                cap: config.closure_cap,
            });
        }
        Ok(group)
    }

    /// The Burnside ring, with dihedral labels for `dihedral:N`.
    pub fn ring(&self, config: &GroupConfig) -> Result<BurnsideRing> {
        match self {
            GroupSpec::Dihedral(n) => {
                self.check_order(config)?;
                let cls = dihedral_subgroup_classes(*n)?;
                BurnsideRing::with_classes(cls.table, config)
            }
            _ => BurnsideRing::new(Arc::new(self.build(config)?), config),
        }
    }
}

/// A G-set over the group of an accompanying [`GroupSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GSetSpec {
    /// `coset:GEN;GEN;…`: `G/H` with `H` generated by the listed elements.
    Coset(Vec<Cycles>),
    Ngon,
    NgonDihedral,
    Prism,
    Natural,
    Product(Box<GSetSpec>, Box<GSetSpec>),
    Union(Box<GSetSpec>, Box<GSetSpec>),
}

/// Splits `(A)sep(B)` at the top level.
fn split_pair<'a>(s: &'a str, sep: char) -> Option<(&'a str, &'a str)> {
    let bytes = s.as_bytes();
    if bytes.first() != Some(&b'(') {
        return None;
    }
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    let rest = &s[i + 1..];
                    let right = rest.strip_prefix(sep)?;
                    let right = right.strip_prefix('(')?.strip_suffix(')')?;
                    return Some((&s[1..i], right));
                }
            }
            _ => {}
        }
    }
    None
}

impl FromStr for GSetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad G-set spec {s:?}"));
        let s = s.trim();
        match s {
            "ngon" => return Ok(GSetSpec::Ngon),
            "ngon-dihedral" => return Ok(GSetSpec::NgonDihedral),
            "prism" => return Ok(GSetSpec::Prism),
            "natural" => return Ok(GSetSpec::Natural),
            "regular" => return Ok(GSetSpec::Coset(Vec::new())),
            _ => {}
        }
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "coset" => Ok(GSetSpec::Coset(parse_generators(rest)?)),
            "product" => {
                let (a, b) = split_pair(rest, 'x').ok_or_else(bad)?;
                Ok(GSetSpec::Product(
                    Box::new(a.parse()?),
                    Box::new(b.parse()?),
                ))
            }
            "union" => {
                let (a, b) = split_pair(rest, '+').ok_or_else(bad)?;
                Ok(GSetSpec::Union(Box::new(a.parse()?), Box::new(b.parse()?)))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GSetSpec::Coset(gens) if gens.is_empty() => f.write_str("regular"),
            GSetSpec::Coset(gens) => {
                f.write_str("coset:")?;
                write_generators(f, gens)
            }
            GSetSpec::Ngon => f.write_str("ngon"),
            GSetSpec::NgonDihedral => f.write_str("ngon-dihedral"),
            GSetSpec::Prism => f.write_str("prism"),
            GSetSpec::Natural => f.write_str("natural"),
            GSetSpec::Product(a, b) => write!(f, "product:({a})x({b})"),
            GSetSpec::Union(a, b) => write!(f, "union:({a})+({b})"),
        }
    }
}

/// Moves `x` onto `group`, which must equal its own group.
fn rebase(x: GSet, group: &Arc<FiniteGroup>) -> Result<GSet> {
    if x.group().as_ref() != group.as_ref() {
        return Err(Error::GroupMismatch);
    }
    let action = (0..group.order())
        .flat_map(|g| x.action_of(g).to_vec())
        .collect();
    GSet::from_table(group.clone(), x.size(), action)
}

impl GSetSpec {
    pub fn build(&self, group_spec: &GroupSpec, group: &Arc<FiniteGroup>) -> Result<GSet> {
        let family = |what: &str| {
            Error::InvalidArgument(format!(
                "G-set {what} needs a group of the matching family, not {group_spec}"
            ))
        };
        match self {
            GSetSpec::Natural => Ok(GSet::natural(group.clone())),
            GSetSpec::Coset(gens) => {
                let mut seeds = Vec::with_capacity(gens.len());
                for p in to_permutations(group.degree(), gens)? {
                    let g = group.index_of(&p).ok_or_else(|| {
                        Error::NotASubgroup(format!("{p} is not in {group_spec}"))
                    })?;
                    seeds.push(g);
                }
                GSet::coset_space(group.clone(), &group.closure(&seeds))
            }
            GSetSpec::Ngon => match group_spec {
                GroupSpec::Cyclic(n) => rebase(ngon_vertices(*n)?, group),
                GroupSpec::Dihedral(n) => rebase(ngon_vertices_dihedral(*n)?, group),
                _ => Err(family("ngon")),
            },
            GSetSpec::NgonDihedral => match group_spec {
                GroupSpec::Dihedral(n) => rebase(ngon_vertices_dihedral(*n)?, group),
                _ => Err(family("ngon-dihedral")),
            },
            GSetSpec::Prism => match group_spec {
                GroupSpec::Dihedral(n) => rebase(prism_vertices(*n)?, group),
                _ => Err(family("prism")),
            },
            GSetSpec::Product(a, b) => a
                .build(group_spec, group)?
                .product(&b.build(group_spec, group)?),
            GSetSpec::Union(a, b) => a
                .build(group_spec, group)?
                .disjoint_union(&b.build(group_spec, group)?),
        }
    }
}
