use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ColoringProblem, DegreeSet};
use crate::burnside::BurnsideRing;
use crate::error::{Error, Result};
use crate::group::{dihedral_subgroup_classes, DihedralClassification, GroupConfig};
use crate::gset::{ngon_vertices_dihedral, prism_vertices};
use crate::series::{divisors, mobius, necklace_poly, QuadraticValue, RationalSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DihedralFamily {
    /// Vertices of the `n`-prism, `D_n/C_1`.
    Prism,
    /// Vertices of the `n`-gon, `D_n/D_1`.
    NgonDihedral,
}

impl fmt::Display for DihedralFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DihedralFamily::Prism => "prism",
            DihedralFamily::NgonDihedral => "ngon-dihedral",
        })
    }
}

/// `n` odd, `n ≡ 2 (mod 4)`, `4 | n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DihedralCase {
    I,
    II,
    III,
}

impl DihedralCase {
    pub fn of(n: usize) -> Self {
        match n % 4 {
            0 => DihedralCase::III,
            2 => DihedralCase::II,
            _ => DihedralCase::I,
        }
    }
}

/// Result of checking the dihedral closed forms against the generic path.
#[derive(Clone, Debug)]
pub struct DihedralReport {
    pub family: DihedralFamily,
    pub n: usize,
    pub k: u64,
    pub case: DihedralCase,
    /// The closed-form count of primitive colorings, before integrality is asserted.
    pub closed_total: QuadraticValue,
    pub total: BigInt,
    /// Closed-form `μ_{C_1,t}`, equal to the generic series.
    pub series: RationalSeries,
    /// Number of per-class series identities checked.
    pub corollary_checks: usize,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

struct Builder {
    a: BigRational,
    trunc: usize,
}

impl Builder {
    /// `(1 + (k-1) t^step)^exp`.
    fn factor(&self, step: usize, exp: u64) -> RationalSeries {
        (RationalSeries::one(self.trunc)
            + RationalSeries::monomial(self.a.clone(), step, self.trunc))
        .pow(exp)
    }
}

fn mu(n: usize) -> Result<BigRational> {
    Ok(BigRational::from_integer(mobius(n as u64)?.into()))
}

fn divs(n: usize) -> Result<Vec<usize>> {
    Ok(divisors(n as u64)?
        .into_iter()
        .map(|d| d as usize)
        .collect())
}

fn class(idx: Option<usize>, what: &str, d: usize) -> Result<usize> {
    idx.ok_or_else(|| Error::Mismatch(format!("no class for {what} at d = {d}")))
}

/// Checks `μ_{C_{n/d}}`, `μ_{D_{n/d}}` and `μ_{D'_{n/d}}` against the Möbius
/// sums of the `φ` series for every divisor `d`. Returns the number of checks.
fn check_corollary(
    cls: &DihedralClassification,
    phi: &[RationalSeries],
    mu_series: &[RationalSeries],
    trunc: usize,
) -> Result<usize> {
    let n = cls.n;
    let mut checks = 0;
    let mut expect = |label: String, idx: usize, rhs: RationalSeries| -> Result<()> {
        if mu_series[idx] != rhs {
            return Err(Error::Mismatch(format!(
                "{label}: generic {} vs closed {rhs}",
                mu_series[idx]
            )));
        }
        checks += 1;
        Ok(())
    };
    for d in divs(n)? {
        let (c, r, rp) = (
            class(cls.c(d), "C", d)?,
            class(cls.d(d), "D", d)?,
            class(cls.d_prime(d), "D'", d)?,
        );
        let mut sum_c = RationalSeries::zero(trunc);
        let mut sum_d = RationalSeries::zero(trunc);
        let mut sum_dp = RationalSeries::zero(trunc);
        for e in divs(d)? {
            let m = mu(d / e)?;
            if m.is_zero() {
                continue;
            }
            let pc = &phi[class(cls.c(e), "C", e)?];
            let pd = &phi[class(cls.d(e), "D", e)?];
            let pdp = &phi[class(cls.d_prime(e), "D'", e)?];
            let cyc = if d % 2 == 1 {
                pc.scale(&q(1, 2 * d as i64)) - pd.scale(&q(1, 2))
            } else {
                pc.scale(&q(1, 2 * d as i64)) - pd.scale(&q(1, 4)) - pdp.scale(&q(1, 4))
            };
            sum_c = sum_c + cyc.scale(&m);
            sum_d = sum_d + pd.scale(&m);
            sum_dp = sum_dp + pdp.scale(&m);
        }
        let m = n / d;
        expect(format!("C_{m}"), c, sum_c)?;
        if d % 2 == 1 {
            expect(format!("D_{m}"), r, sum_d)?;
        } else {
            expect(format!("D_{m}"), r, sum_d.scale(&q(1, 2)))?;
            expect(format!("D'_{m}"), rp, sum_dp.scale(&q(1, 2)))?;
        }
    }
    Ok(checks)
}

fn prism_series(n: usize, b: &Builder) -> Result<RationalSeries> {
    let mut acc = RationalSeries::zero(b.trunc);
    for d in divs(n)? {
        let m = mu(n / d)?;
        if m.is_zero() {
            continue;
        }
        let term = b.factor(n / d, 2 * d as u64).scale(&q(1, 2 * n as i64))
            - b.factor(2 * n / d, d as u64).scale(&q(1, 2));
        acc = acc + term.scale(&m);
    }
    Ok(acc)
}

fn ngon_series(n: usize, b: &Builder) -> Result<RationalSeries> {
    let mut acc = RationalSeries::zero(b.trunc);
    let inv2n = q(1, 2 * n as i64);
    match DihedralCase::of(n) {
        DihedralCase::I => {
            for d in divs(n)? {
                let m = mu(n / d)?;
                if m.is_zero() {
                    continue;
                }
                let s = n / d;
                let term = b.factor(s, d as u64).scale(&inv2n)
                    - (b.factor(s, 1) * b.factor(2 * s, (d as u64 - 1) / 2)).scale(&q(1, 2));
                acc = acc + term.scale(&m);
            }
        }
        DihedralCase::II => {
            for d in divs(n)? {
                acc = acc + b.factor(n / d, d as u64).scale(&(&inv2n * mu(n / d)?));
            }
            let half = n / 2;
            let mut inner = RationalSeries::zero(b.trunc);
            for d in divs(half)? {
                let m = mu(half / d)?;
                if m.is_zero() {
                    continue;
                }
                let s = n / d;
                let odd = (d as u64 - 1) / 2;
                let term = (b.factor(s, 1) * b.factor(2 * s, odd)).scale(&q(-2, 1))
                    + b.factor(s / 2, 2) * b.factor(s, d as u64 - 1)
                    + b.factor(s, d as u64);
                inner = inner + term.scale(&m);
            }
            acc = acc - inner.scale(&q(1, 4));
        }
        DihedralCase::III => {
            for d in divs(n)? {
                let m = mu(n / d)?;
                if m.is_zero() {
                    continue;
                }
                let s = n / d;
                let term = b.factor(s, d as u64).scale(&inv2n)
                    - (b.factor(s, 2) * b.factor(2 * s, d as u64 / 2 - 1)).scale(&q(1, 4))
                    - b.factor(2 * s, d as u64 / 2).scale(&q(1, 4));
                acc = acc + term.scale(&m);
            }
        }
    }
    Ok(acc)
}

fn necklace_q(k: &QuadraticValue, n: usize) -> Result<QuadraticValue> {
    necklace_poly(k, n as u64)
}

fn closed_total(family: DihedralFamily, n: usize, k: u64) -> Result<QuadraticValue> {
    let kk = QuadraticValue::from_integer(k, k);
    let root = QuadraticValue::sqrt(k);
    let half = q(1, 2);
    let nq = |c: i64, den: i64| q(n as i64 * c, den);
    Ok(match family {
        DihedralFamily::Prism => {
            let k2 = QuadraticValue::from_integer(k * k, k);
            (necklace_q(&k2, n)? - necklace_q(&kk, n)?.scale(&nq(1, 1))).scale(&half)
        }
        DihedralFamily::NgonDihedral => match DihedralCase::of(n) {
            DihedralCase::I => (necklace_q(&kk, n)?
                - (&root * &necklace_q(&root, n)?).scale(&nq(1, 1)))
            .scale(&half),
            DihedralCase::II => {
                let k1 = BigRational::from_integer((k + 1).into());
                necklace_q(&kk, n)?.scale(&half) - necklace_q(&kk, n / 2)?.scale(&(nq(1, 8) * k1))
                    + (&root * &necklace_q(&root, n / 2)?).scale(&nq(1, 4))
            }
            DihedralCase::III => {
                let k1 = BigRational::from_integer((k + 1).into());
                necklace_q(&kk, n)?.scale(&half) - necklace_q(&root, n)?.scale(&(nq(1, 4) * k1))
            }
        },
    })
}

/// Evaluates the closed forms for primitive colorings of the `n`-prism or
/// `n`-gon under `D_n` with `k` colors and checks them against the generic
/// Burnside-ring computation.
///
/// Along the way every `μ_{C_{n/d},t}`, `μ_{D_{n/d},t}` and `μ_{D'_{n/d},t}` is
/// compared with its Möbius sum of `φ` series. Any disagreement is an
/// [`Error::Mismatch`]; a non-integral closed total is [`Error::NonIntegral`].
///
/// ```
/// use burnside::colorings::{dihedral_closed_forms, DihedralFamily};
///
/// let report = dihedral_closed_forms(5, 3, DihedralFamily::NgonDihedral).unwrap();
/// assert_eq!(report.total, 12.into());
/// assert_eq!(report.series.to_string(), "2t^2 + 4t^3 + 6t^4");
/// ```
pub fn dihedral_closed_forms(n: usize, k: u64, family: DihedralFamily) -> Result<DihedralReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let cls = dihedral_subgroup_classes(n)?;
    let ring = Arc::new(BurnsideRing::with_classes(
        cls.table.clone(),
        &GroupConfig::default(),
    )?);
    let x = match family {
        DihedralFamily::Prism => prism_vertices(n)?,
        DihedralFamily::NgonDihedral => ngon_vertices_dihedral(n)?,
    };
    let problem = ColoringProblem::new(ring, x, k, DegreeSet::ZeroOne)?;
    let trunc = problem.truncation();
    let phi = problem.phi_series_all()?;
    let mu_series = problem.mu_series_all()?;
    let corollary_checks = check_corollary(&cls, &phi, &mu_series, trunc)?;

    let builder = Builder {
        a: BigRational::from_integer((k - 1).into()),
        trunc,
    };
    let series = match family {
        DihedralFamily::Prism => prism_series(n, &builder)?,
        DihedralFamily::NgonDihedral => ngon_series(n, &builder)?,
    };
    let generic = &mu_series[cls.table.trivial_class()];
    if &series != generic {
        return Err(Error::Mismatch(format!(
            "{family} n = {n}: closed series {series} vs generic {generic}"
        )));
    }
    let closed_total = closed_total(family, n, k)?;
    let total = closed_total
        .to_integer()
        .ok_or_else(|| Error::NonIntegral(format!("{closed_total:?}")))?;
    let generic_total = problem.primitive_count()?;
    if total != generic_total
        || BigRational::from_integer(total.clone()) != series.evaluate_at_one()
    {
        return Err(Error::Mismatch(format!(
            "{family} n = {n}: closed total {total} vs generic {generic_total}"
        )));
    }
    Ok(DihedralReport {
        family,
        n,
        k,
        case: DihedralCase::of(n),
        closed_total,
        total,
        series,
        corollary_checks,
    })
}
