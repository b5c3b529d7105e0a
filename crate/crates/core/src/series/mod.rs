//! Exact truncated power series in one variable `t`, quadratic surds, and the
//! number theory that feeds them (Möbius function, necklace polynomials).

mod arith;
mod quadratic;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use arith::{
    cyclotomic_identity_holds, cyclotomic_identity_sides, divisors, gcd, lcm, mobius,
    mobius_inversion, necklace, necklace_poly, NecklaceRing,
};
pub use quadratic::QuadraticValue;

use crate::error::{Error, Result};

/// A power series `Σ c_n tⁿ` known exactly up to and including `tᵈ`,
/// where `d` is the truncation degree.
///
/// Binary operations on series of different truncation degrees truncate to the
/// smaller one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// Builds a series from its leading coefficients, padding with zeros or
    /// dropping terms so that exactly degrees `0..=truncation` are kept.
    pub fn new(mut coeffs: Vec<BigRational>, truncation: usize) -> Self {
        coeffs.resize(truncation + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I, truncation: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
            truncation,
        )
    }

    pub fn zero(truncation: usize) -> Self {
        Self::new(Vec::new(), truncation)
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(BigRational::one(), truncation)
    }

    pub fn constant(c: BigRational, truncation: usize) -> Self {
        Self::new(vec![c], truncation)
    }

    /// `c·tᵈᵉᵍ`, which is zero when `deg` lies beyond the truncation.
    pub fn monomial(c: BigRational, deg: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if deg <= truncation {
            s.coeffs[deg] = c;
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Drops all terms above `degree`; never extends.
    pub fn truncate(&self, degree: usize) -> Self {
        Self::new(
            self.coeffs[..=degree.min(self.truncation())].to_vec(),
            degree.min(self.truncation()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Highest degree with a non-zero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut exponent: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.truncation());
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = &acc * &base;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse up to the truncation degree.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let d = self.truncation();
        let mut out = vec![BigRational::zero(); d + 1];
        out[0] = inv0.clone();
        for n in 1..=d {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -acc * &inv0;
        }
        Ok(Self { coeffs: out })
    }

    /// The substitution `t ↦ -t`.
    pub fn negate_variable(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// The substitution `t ↦ tᵐ`, keeping the truncation degree.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        let mut out = Self::zero(self.truncation());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * m > self.truncation() {
                break;
            }
            out.coeffs[n * m] = c.clone();
        }
        out
    }

    /// Sum of the retained coefficients, i.e. the value at `t = 1` when the
    /// series is a polynomial of degree at most the truncation.
    pub fn evaluate_at_one(&self) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(c.to_string()))
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            truncation: self.truncation(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() > json.truncation + 1 {
            return Err(Error::Parse(
                "more coefficients than the truncation allows".into(),
            ));
        }
        Ok(Self::new(coeffs, json.truncation))
    }
}

/// Serialized form: coefficients as `"p/q"` strings in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub truncation: usize,
    pub coeffs: Vec<String>,
}

impl fmt::Display for RationalSeries {
    /// Ascending-degree polynomial such as `1 + 2t - 1/3t^2`. Zero terms are
    /// omitted and the zero series prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match n {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{n}"),
            };
            if n == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            f.write_str(&var)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn zip_coeffs<'a>(
    a: &'a RationalSeries,
    b: &'a RationalSeries,
) -> impl Iterator<Item = (&'a BigRational, &'a BigRational)> {
    a.coeffs.iter().zip(&b.coeffs)
}

impl Add for &RationalSeries {
    type Output = RationalSeries;
    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries {
            coeffs: zip_coeffs(self, rhs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries {
            coeffs: zip_coeffs(self, rhs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let d = self.truncation().min(rhs.truncation());
        let mut out = vec![BigRational::zero(); d + 1];
        for (i, x) in self.coeffs.iter().enumerate().take(d + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate().take(d + 1 - i) {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        RationalSeries { coeffs: out }
    }
}

impl Neg for &RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RationalSeries {
            type Output = RationalSeries;
            fn $method(self, rhs: RationalSeries) -> RationalSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalSeries> for RationalSeries {
            type Output = RationalSeries;
            fn $method(self, rhs: &RationalSeries) -> RationalSeries {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64], d: usize) -> RationalSeries {
        RationalSeries::from_integers(v.iter().copied(), d)
    }

    #[test]
    fn geometric_reciprocal() {
        let s = ints(&[1, -1], 6).reciprocal().unwrap();
        assert_eq!(s, ints(&[1; 7], 6));
        let sq = ints(&[1, -2, 1], 3).reciprocal().unwrap();
        assert_eq!(sq, ints(&[1, 2, 3, 4], 3));
        assert_eq!(ints(&[0, 1], 3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn binomial_power() {
        assert_eq!(
            ints(&[1, 1], 10).pow(6),
            ints(&[1, 6, 15, 20, 15, 6, 1], 10)
        );
        assert_eq!(ints(&[1, 1], 3).pow(6), ints(&[1, 6, 15, 20], 3));
        assert_eq!(ints(&[5, 1], 3).pow(0), RationalSeries::one(3));
    }

    #[test]
    fn mixed_truncation_takes_minimum() {
        let a = ints(&[1, 1, 1], 5);
        let b = ints(&[1, 1], 2);
        assert_eq!((&a + &b).truncation(), 2);
        assert_eq!((&a * &b).truncation(), 2);
    }

    #[test]
    fn evaluation_and_printing() {
        let s = ints(&[0, 1, 2, 3, 2, 1], 6);
        assert_eq!(s.evaluate_at_one(), BigRational::from_integer(9.into()));
        assert_eq!(s.to_string(), "t + 2t^2 + 3t^3 + 2t^4 + t^5");
        assert_eq!(RationalSeries::zero(3).to_string(), "0");
        assert_eq!(ints(&[1, -1, 0, -2], 3).to_string(), "1 - t - 2t^3");
        let half = RationalSeries::monomial(BigRational::new(1.into(), 2.into()), 2, 3);
        assert_eq!(half.to_string(), "1/2t^2");
        assert_eq!(ints(&[0, 0, 0, 1], 6).evaluate_at_one(), BigRational::one());
    }

    #[test]
    fn json_round_trip() {
        let s = ints(&[1, 2], 3).scale(&BigRational::new(1.into(), 3.into()));
        let json = s.to_json();
        assert_eq!(json.coeffs, vec!["1/3", "2/3", "0", "0"]);
        assert_eq!(RationalSeries::from_json(&json).unwrap(), s);
    }

    #[test]
    fn substitutions() {
        let s = ints(&[1, 1, 1], 4);
        assert_eq!(s.negate_variable(), ints(&[1, -1, 1], 4));
        assert_eq!(s.substitute_power(2), ints(&[1, 0, 1, 0, 1], 4));
        assert_eq!(s.degree(), Some(2));
        assert_eq!(RationalSeries::zero(2).degree(), None);
    }
}
