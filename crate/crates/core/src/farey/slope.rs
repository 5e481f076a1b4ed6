use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::parse::Cursor;

/// A point of `Q ∪ {∞}`: the reduced fraction `p/q` with `q >= 0`, and
/// `∞ = 1/0`.
///
/// A slope is also the primitive vector `(p, q)` up to sign, which is how
/// the determinant-based predicates below treat it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Reduces `p/q` and normalizes the sign of the denominator.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::InvalidSlope(p.to_string(), q.to_string()));
        }
        Ok(Self::from_vector(&p, &q))
    }

    /// Slope of a nonzero integer vector.
    pub(crate) fn from_vector(p: &BigInt, q: &BigInt) -> Self {
        let g = p.gcd(q);
        debug_assert!(!g.is_zero());
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Self { p, q }
    }

    pub fn infinity() -> Self {
        Self {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            p: n.into(),
            q: BigInt::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self {
            p: r.numer().clone(),
            q: r.denom().clone(),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (!self.is_infinity()).then(|| Rational::new(self.p.clone(), self.q.clone()))
    }

    /// The determinant `p_a q_b - q_a p_b` of the two representing vectors.
    pub fn det(&self, other: &Slope) -> BigInt {
        &self.p * &other.q - &self.q * &other.p
    }

    /// The two slopes `(a ± b)` adjacent to both ends of a Farey edge.
    pub(crate) fn sum_and_difference(&self, other: &Slope) -> (Slope, Slope) {
        (
            Slope::from_vector(&(&self.p + &other.p), &(&self.q + &other.q)),
            Slope::from_vector(&(&self.p - &other.p), &(&self.q - &other.q)),
        )
    }
}

/// True when `a` and `b` span a Farey edge, i.e. `|p_a q_b - q_a p_b| = 1`.
pub fn is_farey_edge(a: &Slope, b: &Slope) -> bool {
    a.det(b).abs().is_one()
}

/// Cyclic orientation of three slopes on the circle `Q ∪ {∞}`.
///
/// Returns `1` when `x, y, z` occur in increasing order around the circle
/// (as `0, 1, ∞` do), `-1` for the opposite order, and `0` if two coincide.
/// Each vector appears in two of the three determinants, so the sign does
/// not depend on the choice of representative.
pub fn orientation(x: &Slope, y: &Slope, z: &Slope) -> i8 {
    let prod = x.det(y) * y.det(z) * z.det(x);
    match prod.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

impl Ord for Slope {
    /// Numeric order with `∞` placed after every rational.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl Slope {
    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Self> {
        cur.skip_ws();
        let start = cur.pos();
        if cur.eat_word("inf") || cur.eat('∞') {
            return Ok(Self::infinity());
        }
        let p = cur.integer()?;
        let q = if cur.eat('/') { cur.integer()? } else { BigInt::one() };
        Self::new(p.clone(), q.clone()).map_err(|_| Error::parse(start, format!("{p}/{q} is not a slope")))
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let slope = Self::parse_from(&mut cur)?;
        cur.finish()?;
        Ok(slope)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(Slope::new(-2, -4).unwrap(), s("1/2"));
        assert_eq!(Slope::new(3, -6).unwrap(), s("-1/2"));
        assert_eq!(Slope::new(-5, 0).unwrap(), Slope::infinity());
        assert!(Slope::new(0, 0).is_err());
        assert_eq!(s("7"), Slope::integer(7));
        assert_eq!(s(" inf "), Slope::infinity());
        assert_eq!(Slope::infinity().to_string(), "inf");
        assert_eq!(s("3").to_string(), "3/1");
    }

    #[test]
    fn edges() {
        assert!(is_farey_edge(&s("0/1"), &s("inf")));
        assert!(is_farey_edge(&s("1/2"), &s("1/3")));
        assert!(!is_farey_edge(&s("1/2"), &s("3/4")));
    }

    #[test]
    fn orientation_matches_numeric_order() {
        let (a, b, c) = (s("0"), s("1"), s("inf"));
        assert_eq!(orientation(&a, &b, &c), 1);
        assert_eq!(orientation(&b, &c, &a), 1);
        assert_eq!(orientation(&b, &a, &c), -1);
        assert_eq!(orientation(&s("-3/2"), &s("1/7"), &s("5")), 1);
        assert_eq!(orientation(&s("5"), &s("1/7"), &s("-3/2")), -1);
        assert_eq!(orientation(&a, &a, &c), 0);
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = vec![s("inf"), s("1/2"), s("-3"), s("1/3")];
        v.sort();
        assert_eq!(v, vec![s("-3"), s("1/3"), s("1/2"), s("inf")]);
    }
}
