use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A finite simple continued fraction `[a_0, a_1, ..., a_n]`.
///
/// `a_0` is any integer and every later digit is at least 1. The expansion
/// produced by [`cf_of_rational`] is canonical: when it has more than one
/// digit, the last one is at least 2, so every rational has exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct ContinuedFraction {
    digits: Vec<BigInt>,
}

impl ContinuedFraction {
    /// Wraps a digit sequence after checking that it is nonempty and that
    /// every digit after the first is positive.
    pub fn new(digits: Vec<BigInt>) -> Result<Self> {
        check_digits(&digits)?;
        Ok(Self { digits })
    }

    pub fn digits(&self) -> &[BigInt] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// True unless the expansion ends in a trailing 1 after the first digit.
    pub fn is_canonical(&self) -> bool {
        self.digits.len() == 1 || self.digits.last().is_some_and(|d| *d >= BigInt::from(2))
    }

    pub fn eval(&self) -> Rational {
        eval_digits(&self.digits)
    }

    pub fn digit_sum(&self) -> BigInt {
        self.digits.iter().sum()
    }

    /// The other expansion of the same value: `[.., a_n]` becomes
    /// `[.., a_n - 1, 1]`. This is the form that ends on the straight-on
    /// triangle of a cutting sequence.
    pub fn to_noncanonical(&self) -> Self {
        let mut digits = self.digits.clone();
        let last = digits.pop().expect("nonempty");
        digits.push(last - 1);
        digits.push(BigInt::one());
        Self { digits }
    }

    /// Inverse of [`Self::to_noncanonical`]; a canonical expansion is returned unchanged.
    pub fn to_canonical(&self) -> Self {
        if self.is_canonical() {
            return self.clone();
        }
        let mut digits = self.digits.clone();
        digits.pop();
        let last = digits.pop().expect("at least two digits");
        digits.push(last + 1);
        Self { digits }
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

impl From<ContinuedFraction> for Vec<String> {
    fn from(cf: ContinuedFraction) -> Self {
        cf.digits.iter().map(|d| d.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for ContinuedFraction {
    type Error = Error;
    fn try_from(digits: Vec<String>) -> Result<Self> {
        let digits = digits
            .iter()
            .map(|d| {
                d.parse()
                    .map_err(|_| Error::parse(0, format!("'{d}' is not an integer")))
            })
            .collect::<Result<Vec<BigInt>>>()?;
        Self::new(digits)
    }
}

fn check_digits(digits: &[BigInt]) -> Result<()> {
    if digits.is_empty() {
        return Err(Error::EmptyContinuedFraction);
    }
    for (index, d) in digits.iter().enumerate().skip(1) {
        if !d.is_positive() {
            return Err(Error::NonPositiveDigit {
                index,
                value: d.to_string(),
            });
        }
    }
    Ok(())
}

fn eval_digits(digits: &[BigInt]) -> Rational {
    // Convergent recurrence h_n = a_n h_{n-1} + h_{n-2}.
    let (mut h, mut h_prev) = (BigInt::one(), BigInt::zero());
    let (mut k, mut k_prev) = (BigInt::zero(), BigInt::one());
    for a in digits {
        let h_next = a * &h + &h_prev;
        let k_next = a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    Rational::new(h, k)
}

/// Canonical continued fraction of `r` with `a_0 = floor(r)`.
pub fn cf_of_rational(r: &Rational) -> ContinuedFraction {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut digits = Vec::new();
    while !den.is_zero() {
        let (a, rem) = num.div_mod_floor(&den);
        digits.push(a);
        num = std::mem::replace(&mut den, rem);
    }
    ContinuedFraction { digits }
}

/// Exact value of a digit sequence.
pub fn cf_eval(digits: &[BigInt]) -> Result<Rational> {
    check_digits(digits)?;
    Ok(eval_digits(digits))
}
