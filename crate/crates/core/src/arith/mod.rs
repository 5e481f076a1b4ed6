//! Exact arithmetic: rationals, finite continued fractions, and quadratic
//! surds with their eventually periodic expansions.

mod cf;
mod quadratic;
mod surd;

pub use cf::{cf_eval, cf_of_rational, ContinuedFraction};
pub use quadratic::QuadraticNumber;
pub use surd::{cf_of_surd, periodic_sum, PeriodicCF, QuadraticSurd};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` in lowest terms. Panics when `den` is zero.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Renders a rational as `"n"` when integral and `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer square root rounded down. `n` must be non-negative.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(n.sign() != num_bigint::Sign::Minus, "isqrt of a negative number");
    if n.is_zero() {
        return BigInt::zero();
    }
    n.sqrt()
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.sign() == num_bigint::Sign::Minus {
        return false;
    }
    let s = isqrt(n);
    &s * &s == *n
}
