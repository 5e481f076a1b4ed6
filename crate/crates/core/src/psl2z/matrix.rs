use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::parse::Cursor;

/// A 2x2 integer matrix with rows `(a b)` and `(c d)`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    #[serde_as(as = "DisplayFromStr")]
    pub a: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub b: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub c: BigInt,
    #[serde_as(as = "DisplayFromStr")]
    pub d: BigInt,
}

impl IntMatrix {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    /// Builds a matrix and checks that it lies in `SL(2,Z)`.
    pub fn sl2(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let m = Self::new(a, b, c, d);
        m.require_sl2()?;
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// The order-2 generator `[[0,-1],[1,0]]`.
    pub fn s() -> Self {
        Self::new(0, -1, 1, 0)
    }

    /// The order-3 generator `[[0,-1],[1,-1]]`.
    pub fn t() -> Self {
        Self::new(0, -1, 1, -1)
    }

    /// `[[1,1],[0,1]]`, which equals `T^-1 S` in `PSL(2,Z)`.
    pub fn r() -> Self {
        Self::new(1, 1, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn require_sl2(&self) -> Result<()> {
        let det = self.det();
        if det.is_one() {
            Ok(())
        } else {
            Err(Error::NotUnimodular(det.to_string()))
        }
    }

    pub fn require_gl2(&self) -> Result<()> {
        let det = self.det();
        if det.abs().is_one() {
            Ok(())
        } else {
            Err(Error::NotInvertible(det.to_string()))
        }
    }

    /// Inverse of a determinant `+-1` matrix.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotInvertible(det.to_string()));
        }
        Ok(Self {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Representative of `+-A` whose first nonzero entry among `(a, b, c)`
    /// is positive.
    pub fn psl_normalized(&self) -> Self {
        let lead = [&self.a, &self.b, &self.c]
            .into_iter()
            .find(|x| !x.is_zero())
            .cloned()
            .unwrap_or_else(BigInt::one);
        if lead.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Equality in `PSL(2,Z)`, i.e. up to sign.
    pub fn psl_eq(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }

    pub fn is_plus_minus_identity(&self) -> bool {
        self.psl_eq(&Self::identity())
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        IntMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl Mul for IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: IntMatrix) -> IntMatrix {
        &self * &rhs
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    /// Parses `[[a,b],[c,d]]`, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect('[')?;
        cur.expect('[')?;
        let a = cur.integer()?;
        cur.expect(',')?;
        let b = cur.integer()?;
        cur.expect(']')?;
        cur.expect(',')?;
        cur.expect('[')?;
        let c = cur.integer()?;
        cur.expect(',')?;
        let d = cur.integer()?;
        cur.expect(']')?;
        cur.expect(']')?;
        cur.finish()?;
        Ok(Self { a, b, c, d })
    }
}
