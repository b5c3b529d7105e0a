use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// An exact value `rational + surd·√radicand` with a positive integer radicand.
///
/// Values with different radicands may only be combined when at least one of
/// them has a zero surd part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    rational: BigRational,
    surd: BigRational,
    radicand: u64,
}

impl QuadraticValue {
    /// # Panics
    /// If `radicand` is zero.
    pub fn new(rational: BigRational, surd: BigRational, radicand: u64) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        let root = radicand.sqrt();
        if root * root == radicand {
            // perfect squares fold into the rational part
            let rational = rational + surd * BigRational::from_integer(root.into());
            return Self {
                rational,
                surd: BigRational::zero(),
                radicand,
            };
        }
        Self {
            rational,
            surd,
            radicand,
        }
    }

    pub fn from_rational(value: BigRational, radicand: u64) -> Self {
        Self::new(value, BigRational::zero(), radicand)
    }

    pub fn from_integer(value: impl Into<BigInt>, radicand: u64) -> Self {
        Self::from_rational(BigRational::from_integer(value.into()), radicand)
    }

    /// `√k`.
    pub fn sqrt(k: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), k)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_integer(&self) -> bool {
        self.surd.is_zero() && self.rational.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.rational.to_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            rational: &self.rational * c,
            surd: &self.surd * c,
            radicand: self.radicand,
        }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::from_integer(1, self.radicand);
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Floating-point approximation for display and sanity checks.
    pub fn to_f64(&self) -> f64 {
        let r = self.rational.to_f64().unwrap_or(f64::NAN);
        let s = self.surd.to_f64().unwrap_or(f64::NAN);
        r + s * (self.radicand as f64).sqrt()
    }

    fn radicand_with(&self, other: &Self) -> u64 {
        if self.surd.is_zero() {
            other.radicand
        } else if other.surd.is_zero() || self.radicand == other.radicand {
            self.radicand
        } else {
            panic!(
                "cannot combine surds of different radicands {} and {}",
                self.radicand, other.radicand
            )
        }
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rational);
        }
        write!(f, "{} + {}·√{}", self.rational, self.surd, self.radicand)
    }
}

impl Add for &QuadraticValue {
    type Output = QuadraticValue;
    fn add(self, rhs: &QuadraticValue) -> QuadraticValue {
        let k = self.radicand_with(rhs);
        QuadraticValue::new(&self.rational + &rhs.rational, &self.surd + &rhs.surd, k)
    }
}

impl Sub for &QuadraticValue {
    type Output = QuadraticValue;
    fn sub(self, rhs: &QuadraticValue) -> QuadraticValue {
        self + &(-rhs)
    }
}

impl Mul for &QuadraticValue {
    type Output = QuadraticValue;
    fn mul(self, rhs: &QuadraticValue) -> QuadraticValue {
        let k = self.radicand_with(rhs);
        let kq = BigRational::from_integer(k.into());
        QuadraticValue::new(
            &self.rational * &rhs.rational + &self.surd * &rhs.surd * kq,
            &self.rational * &rhs.surd + &self.surd * &rhs.rational,
            k,
        )
    }
}

impl Neg for &QuadraticValue {
    type Output = QuadraticValue;
    fn neg(self) -> QuadraticValue {
        QuadraticValue {
            rational: -&self.rational,
            surd: -&self.surd,
            radicand: self.radicand,
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for QuadraticValue {
            type Output = QuadraticValue;
            fn $method(self, rhs: QuadraticValue) -> QuadraticValue {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for QuadraticValue {
    type Output = QuadraticValue;
    fn neg(self) -> QuadraticValue {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, k: u64) -> QuadraticValue {
        QuadraticValue::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            k,
        )
    }

    #[test]
    fn product_rule() {
        // (1 + 2√3)(4 - √3) = 4 - 6 + (8 - 1)√3
        assert_eq!(&q(1, 2, 3) * &q(4, -1, 3), q(-2, 7, 3));
        assert_eq!(
            &QuadraticValue::sqrt(2) * &QuadraticValue::sqrt(2),
            q(2, 0, 2)
        );
    }

    #[test]
    fn perfect_squares_fold() {
        let v = QuadraticValue::sqrt(4);
        assert!(v.is_integer());
        assert_eq!(v.to_integer(), Some(2.into()));
    }

    #[test]
    fn rational_mixes_with_any_radicand() {
        let r = QuadraticValue::from_integer(3, 1);
        assert_eq!(&r + &QuadraticValue::sqrt(5), q(3, 1, 5));
    }

    #[test]
    #[should_panic]
    fn distinct_surds_do_not_mix() {
        let _ = &QuadraticValue::sqrt(2) + &QuadraticValue::sqrt(3);
    }
}
