use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{QuadraticValue, RationalSeries};
use crate::error::{Error, Result};

fn positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} requires n >= 1")));
    }
    Ok(())
}

/// The Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    positive(n, "mobius")?;
    let mut m = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Positive divisors in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    positive(n, "divisors")?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Values the necklace polynomial can be evaluated at.
pub trait NecklaceRing: Clone {
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;
}

impl NecklaceRing for BigRational {
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigRational) -> Self {
        self * c
    }
}

impl NecklaceRing for QuadraticValue {
    fn one_like(&self) -> Self {
        QuadraticValue::from_integer(1, self.radicand())
    }
    fn zero_like(&self) -> Self {
        QuadraticValue::from_integer(0, self.radicand())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigRational) -> Self {
        QuadraticValue::scale(self, c)
    }
}

/// `M(k, n) = (1/n) Σ_{d|n} μ(n/d) k^d`.
pub fn necklace_poly<T: NecklaceRing>(k: &T, n: u64) -> Result<T> {
    positive(n, "necklace_poly")?;
    let mut power = k.one_like();
    let mut acc = k.zero_like();
    let mut exponent = 0;
    for d in divisors(n)? {
        while exponent < d {
            power = power.mul_ref(k);
            exponent += 1;
        }
        acc = match mobius(n / d)? {
            1 => acc.add_ref(&power),
            -1 => acc.sub_ref(&power),
            _ => acc,
        };
    }
    Ok(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n))))
}

/// Number of primitive necklaces of length `n` over `k` colors.
pub fn necklace(k: u64, n: u64) -> Result<BigInt> {
    let value = necklace_poly(&BigRational::from_integer(k.into()), n)?;
    if !value.is_integer() {
        return Err(Error::NonIntegral(value.to_string()));
    }
    Ok(value.to_integer())
}

/// Given `b` on every divisor of its largest key `n`, returns `a` on the same
/// divisors with `b_m = Σ_{d|m} a_d`.
pub fn mobius_inversion<T>(b: &BTreeMap<u64, T>) -> Result<BTreeMap<u64, T>>
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T>,
{
    let Some(&n) = b.keys().next_back() else {
        return Ok(BTreeMap::new());
    };
    let divs = divisors(n)?;
    for d in &divs {
        if !b.contains_key(d) {
            return Err(Error::MissingDivisor(*d));
        }
    }
    let mut a = BTreeMap::new();
    for &m in &divs {
        let mut acc = T::zero();
        for d in divisors(m)? {
            acc = match mobius(m / d)? {
                1 => acc + b[&d].clone(),
                -1 => acc - b[&d].clone(),
                _ => acc,
            };
        }
        a.insert(m, acc);
    }
    Ok(a)
}

/// Both sides of `1/(1 - kt) = Π_{n≥1} (1/(1 - tⁿ))^{M(k,n)}` up to `tᵈᵉᵍʳᵉᵉ`.
pub fn cyclotomic_identity_sides(
    k: u64,
    degree: usize,
) -> Result<(RationalSeries, RationalSeries)> {
    let kq = BigRational::from_integer(k.into());
    let lhs =
        (RationalSeries::one(degree) - RationalSeries::monomial(kq, 1, degree)).reciprocal()?;
    let mut rhs = RationalSeries::one(degree);
    for n in 1..=degree {
        let exponent = necklace(k, n as u64)?
            .to_u64()
            .ok_or_else(|| Error::InvalidArgument("necklace count too large".into()))?;
        if exponent == 0 {
            continue;
        }
        let factor = (RationalSeries::one(degree)
            - RationalSeries::monomial(BigRational::one(), n, degree))
        .reciprocal()?;
        rhs = rhs * factor.pow(exponent);
    }
    Ok((lhs, rhs))
}

pub fn cyclotomic_identity_holds(k: u64, degree: usize) -> Result<bool> {
    let (lhs, rhs) = cyclotomic_identity_sides(k, degree)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expected.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1).unwrap(), m);
        }
        assert!(mobius(0).is_err());
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(16).unwrap(), vec![1, 2, 4, 8, 16]);
        assert_eq!((gcd(4, 6), lcm(4, 6)), (2, 12));
    }

    #[test]
    fn necklace_values() {
        assert_eq!(necklace(2, 6).unwrap(), 9.into());
        assert_eq!(necklace(4, 3).unwrap(), 20.into());
        assert_eq!(necklace(2, 3).unwrap(), 2.into());
        assert_eq!(necklace(7, 1).unwrap(), 7.into());
        let root2 = necklace_poly(&QuadraticValue::sqrt(2), 3).unwrap();
        assert!(root2.rational_part().is_zero());
        assert_eq!(root2.surd_part(), &BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn inversion_prime_lattice() {
        let b = BTreeMap::from([(1u64, 3i64), (5, 243)]);
        let a = mobius_inversion(&b).unwrap();
        assert_eq!(a[&5], 240);
        let gap = BTreeMap::from([(1u64, 1i64), (6, 1)]);
        assert_eq!(mobius_inversion(&gap), Err(Error::MissingDivisor(2)));
    }

    #[test]
    fn cyclotomic_small() {
        for k in 1..=3 {
            assert!(cyclotomic_identity_holds(k, 12).unwrap());
        }
    }
}
