use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Rational;

/// An element `rational + irrational * sqrt(radicand)` of a real quadratic field.
///
/// Operands combined with `+`, `-`, `*` must share the same radicand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticNumber {
    pub rational: Rational,
    pub irrational: Rational,
    pub radicand: BigInt,
}

impl QuadraticNumber {
    pub fn new(rational: Rational, irrational: Rational, radicand: BigInt) -> Self {
        Self {
            rational,
            irrational,
            radicand,
        }
    }

    pub fn from_rational(r: Rational, radicand: BigInt) -> Self {
        Self::new(r, Rational::zero(), radicand)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.irrational.is_zero()
    }

    /// Sign of the real value, computed exactly.
    pub fn signum(&self) -> i8 {
        let a = &self.rational;
        let b = &self.irrational;
        let sa = sign(a);
        let sb = sign(b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // Opposite signs: compare a^2 with b^2 D.
        let lhs = a * a;
        let rhs = b * b * Rational::from_integer(self.radicand.clone());
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.radicand, other.radicand, "quadratic numbers from different fields");
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: Self) -> QuadraticNumber {
        self.check(rhs);
        QuadraticNumber::new(
            &self.rational + &rhs.rational,
            &self.irrational + &rhs.irrational,
            self.radicand.clone(),
        )
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: Self) -> QuadraticNumber {
        self.check(rhs);
        QuadraticNumber::new(
            &self.rational - &rhs.rational,
            &self.irrational - &rhs.irrational,
            self.radicand.clone(),
        )
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: Self) -> QuadraticNumber {
        self.check(rhs);
        let d = Rational::from_integer(self.radicand.clone());
        QuadraticNumber::new(
            &self.rational * &rhs.rational + &self.irrational * &rhs.irrational * d,
            &self.rational * &rhs.irrational + &self.irrational * &rhs.rational,
            self.radicand.clone(),
        )
    }
}

impl Mul<&Rational> for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &Rational) -> QuadraticNumber {
        QuadraticNumber::new(&self.rational * rhs, &self.irrational * rhs, self.radicand.clone())
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::new(-&self.rational, -&self.irrational, self.radicand.clone())
    }
}
