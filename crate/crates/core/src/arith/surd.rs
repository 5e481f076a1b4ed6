use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use super::{is_perfect_square, isqrt, QuadraticNumber, Rational};
use crate::error::{Error, Result};

/// The irrational number `(p + sqrt(d)) / q`.
///
/// Construction normalizes so that `q` divides `d - p^2`, which is the
/// invariant the continued-fraction iteration needs. `d` is never reduced to
/// its square-free part, so two surds with the same value may carry
/// different triples; equality compares values.
#[derive(Debug, Clone)]
pub struct QuadraticSurd {
    p: BigInt,
    d: BigInt,
    q: BigInt,
}

impl QuadraticSurd {
    pub fn new(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut d, mut q) = (p.into(), d.into(), q.into());
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !d.is_positive() {
            return Err(Error::NonPositiveRadicand(d.to_string()));
        }
        if is_perfect_square(&d) {
            return Err(Error::PerfectSquare(d.to_string()));
        }
        if !(&d - &p * &p).is_multiple_of(&q) {
            let scale = q.abs();
            d *= &q * &q;
            p *= &scale;
            q *= &scale;
        }
        Ok(Self { p, d, q })
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: impl Into<BigInt>) -> Result<Self> {
        Self::new(BigInt::zero(), d, BigInt::one())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The Galois conjugate `(p - sqrt(d)) / q`.
    pub fn conjugate(&self) -> Self {
        Self {
            p: -&self.p,
            d: self.d.clone(),
            q: -&self.q,
        }
    }

    pub fn floor(&self) -> BigInt {
        let s = isqrt(&self.d);
        if self.q.is_positive() {
            (&self.p + &s).div_floor(&self.q)
        } else {
            // (p + sqrt d)/q = (-p - sqrt d)/(-q) and -p - sqrt d lies in (-p-s-1, -p-s).
            let num: BigInt = -&self.p - &s - 1;
            num.div_floor(&(-&self.q))
        }
    }

    pub fn is_positive(&self) -> bool {
        self.to_number().signum() > 0
    }

    /// The same value as an element of `Q(sqrt d)`.
    pub fn to_number(&self) -> QuadraticNumber {
        QuadraticNumber::new(
            Rational::new(self.p.clone(), self.q.clone()),
            Rational::new(BigInt::one(), self.q.clone()),
            self.d.clone(),
        )
    }
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        // p/q = p'/q', d/q^2 = d'/q'^2 and sign(q) = sign(q').
        &self.p * &other.q == &other.p * &self.q
            && &self.d * &other.q * &other.q == &other.d * &self.q * &self.q
            && self.q.sign() == other.q.sign()
    }
}

impl Eq for QuadraticSurd {}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+sqrt({}))/{}", self.p, self.d, self.q)
    }
}

/// An eventually periodic continued fraction `[preperiod; (period)*]`.
///
/// The stored period always has even length: an odd minimal period is
/// doubled. The minimal length is kept for diagnostics.
///
/// Equality compares the infinite digit sequences, so `[1; (2, 1)]` and
/// `[(1, 2)]` are equal.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(into = "PeriodicRepr", try_from = "PeriodicRepr")]
pub struct PeriodicCF {
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
    minimal_period_len: usize,
}

impl PeriodicCF {
    pub fn new(preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyContinuedFraction);
        }
        for (index, d) in preperiod.iter().enumerate().skip(1) {
            if !d.is_positive() {
                return Err(Error::NonPositiveDigit {
                    index,
                    value: d.to_string(),
                });
            }
        }
        for (i, d) in period.iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::NonPositiveDigit {
                    index: preperiod.len() + i,
                    value: d.to_string(),
                });
            }
        }
        let minimal_period_len = period.len();
        let period = if period.len() % 2 == 1 {
            period.iter().chain(period.iter()).cloned().collect()
        } else {
            period
        };
        Ok(Self {
            preperiod,
            period,
            minimal_period_len,
        })
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn minimal_period_len(&self) -> usize {
        self.minimal_period_len
    }

    /// The `i`-th digit of the infinite expansion.
    pub fn digit(&self, i: usize) -> &BigInt {
        if i < self.preperiod.len() {
            &self.preperiod[i]
        } else {
            &self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn take(&self, n: usize) -> Vec<BigInt> {
        (0..n).map(|i| self.digit(i).clone()).collect()
    }

    pub fn periodic_sum(&self) -> BigInt {
        self.period.iter().sum()
    }
}

impl fmt::Display for PeriodicCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
        if self.preperiod.is_empty() {
            write!(f, "[({})]", join(&self.period))
        } else {
            write!(f, "[{}; ({})]", join(&self.preperiod), join(&self.period))
        }
    }
}

#[serde_as]
#[derive(Serialize, Deserialize)]
struct PeriodicRepr {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    preperiod: Vec<BigInt>,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    period: Vec<BigInt>,
    #[serde_as(as = "DisplayFromStr")]
    minimal_period_len: usize,
}

impl From<PeriodicCF> for PeriodicRepr {
    fn from(cf: PeriodicCF) -> Self {
        Self {
            preperiod: cf.preperiod,
            period: cf.period,
            minimal_period_len: cf.minimal_period_len,
        }
    }
}

impl TryFrom<PeriodicRepr> for PeriodicCF {
    type Error = Error;
    fn try_from(r: PeriodicRepr) -> Result<Self> {
        let m = r.minimal_period_len;
        let repeats = m > 0
            && r.period.len().is_multiple_of(m)
            && r.period.iter().enumerate().all(|(i, d)| *d == r.period[i % m]);
        if !repeats {
            return Err(Error::Precondition(format!(
                "period is not a repetition of its first {m} digits"
            )));
        }
        Self::new(r.preperiod, r.period[..m].to_vec())
    }
}

impl PartialEq for PeriodicCF {
    fn eq(&self, other: &Self) -> bool {
        let n = self.preperiod.len().max(other.preperiod.len()) + self.period.len().lcm(&other.period.len());
        (0..n).all(|i| self.digit(i) == other.digit(i))
    }
}

impl Eq for PeriodicCF {}

pub fn periodic_sum(pcf: &PeriodicCF) -> BigInt {
    pcf.periodic_sum()
}

/// Upper bound on the number of steps of the surd iteration.
///
/// Every state after the first has `|P| <= sqrt(D) + |Q0|` and
/// `|Q| <= 2 sqrt(D) + |P0| + |Q0|`, so the number of distinct states is
/// below this product.
fn iteration_cap(x: &QuadraticSurd) -> usize {
    let s = isqrt(&x.d);
    let pb: BigInt = &s + x.q.abs() + x.p.abs() + 2;
    let qb: BigInt = BigInt::from(2) * &s + x.p.abs() + x.q.abs() + 2;
    let cap: BigInt = BigInt::from(4) * pb * qb;
    cap.to_usize().unwrap_or(usize::MAX)
}

/// Continued-fraction expansion of a quadratic surd.
///
/// Runs the standard `(P, Q)` recurrence `a = floor((P + sqrt D)/Q)`,
/// `P' = aQ - P`, `Q' = (D - P'^2)/Q` and stops at the first repeated state.
pub fn cf_of_surd(x: &QuadraticSurd) -> Result<PeriodicCF> {
    let d = x.d.clone();
    let mut p = x.p.clone();
    let mut q = x.q.clone();
    let mut digits: Vec<BigInt> = Vec::new();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let cap = iteration_cap(x);
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let period = digits.split_off(start);
            return PeriodicCF::new(digits, period);
        }
        if digits.len() >= cap {
            return Err(Error::IterationCap(cap));
        }
        seen.insert((p.clone(), q.clone()), digits.len());
        let state = QuadraticSurd {
            p: p.clone(),
            d: d.clone(),
            q: q.clone(),
        };
        let a = state.floor();
        let p_next = &a * &q - &p;
        let num = &d - &p_next * &p_next;
        debug_assert!(num.is_multiple_of(&q));
        let q_next = num / &q;
        digits.push(a);
        p = p_next;
        q = q_next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&d| BigInt::from(d)).collect()
    }

    #[test]
    fn normalizes_on_construction() {
        let x = QuadraticSurd::new(1, 3, 2).unwrap();
        assert_eq!(
            (x.p(), x.d(), x.q()),
            (&BigInt::from(1), &BigInt::from(3), &BigInt::from(2))
        );
        // 4 does not divide 3 - 1, so everything is rescaled by |Q| = 4.
        let y = QuadraticSurd::new(1, 3, 4).unwrap();
        assert_eq!(y.q(), &BigInt::from(16));
        assert_eq!(y.d(), &BigInt::from(48));
        assert_eq!(y.p(), &BigInt::from(4));
        let z = QuadraticSurd::new(1, 3, -4).unwrap();
        assert_eq!(z.q(), &BigInt::from(-16));
    }

    #[test]
    fn value_equality_ignores_representation() {
        let a = QuadraticSurd::new(2, 12, 4).unwrap();
        let b = QuadraticSurd::new(1, 3, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, b.conjugate());
    }

    #[test]
    fn rejects_rational_values() {
        assert_eq!(QuadraticSurd::sqrt(16), Err(Error::PerfectSquare("16".into())));
        assert_eq!(QuadraticSurd::new(1, 5, 0), Err(Error::ZeroDenominator));
        assert!(QuadraticSurd::sqrt(-5).is_err());
    }

    #[test]
    fn floors_both_signs() {
        // sqrt 5 = 2.236..., -sqrt 5 = -2.236..., (1 - sqrt 5)/2 = -0.618...
        assert_eq!(QuadraticSurd::sqrt(5).unwrap().floor(), BigInt::from(2));
        assert_eq!(QuadraticSurd::new(0, 5, -1).unwrap().floor(), BigInt::from(-3));
        assert_eq!(
            QuadraticSurd::new(1, 5, 2).unwrap().conjugate().floor(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn expands_spec_examples() {
        let r5 = cf_of_surd(&QuadraticSurd::sqrt(5).unwrap()).unwrap();
        assert_eq!(r5.preperiod(), big(&[2]));
        assert_eq!(r5.period(), big(&[4, 4]));
        assert_eq!(r5.minimal_period_len(), 1);

        let phi = cf_of_surd(&QuadraticSurd::new(1, 5, 2).unwrap()).unwrap();
        assert!(phi.preperiod().is_empty());
        assert_eq!(phi.period(), big(&[1, 1]));

        // (1 + sqrt 3)/2 is reduced, so the state recurs immediately and the
        // expansion comes out purely periodic; as an infinite sequence it is
        // [1; (2, 1)].
        let x = cf_of_surd(&QuadraticSurd::new(1, 3, 2).unwrap()).unwrap();
        assert!(x.preperiod().is_empty());
        assert_eq!(x.period(), big(&[1, 2]));
        assert_eq!(x, PeriodicCF::new(big(&[1]), big(&[2, 1])).unwrap());
        assert_eq!(x.periodic_sum(), BigInt::from(3));
        assert_eq!(x.minimal_period_len(), 2);
    }

    #[test]
    fn equality_is_on_infinite_sequences() {
        let a = PeriodicCF::new(big(&[2]), big(&[4])).unwrap();
        let b = PeriodicCF::new(big(&[2, 4]), big(&[4, 4])).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, PeriodicCF::new(big(&[2]), big(&[4, 3])).unwrap());
    }

    #[test]
    fn periodic_sums() {
        let p = |v: &[i64]| PeriodicCF::new(vec![], big(v)).unwrap();
        assert_eq!(periodic_sum(&p(&[4, 4])), BigInt::from(8));
        assert_eq!(periodic_sum(&p(&[1, 1])), BigInt::from(2));
        assert_eq!(periodic_sum(&p(&[2, 1])), BigInt::from(3));
    }

    #[test]
    fn negative_surds_have_positive_tail() {
        let x = cf_of_surd(&QuadraticSurd::new(0, 7, -1).unwrap()).unwrap();
        assert_eq!(x.digit(0), &BigInt::from(-3));
        assert!(x.period().iter().all(|d| d.is_positive()));
        assert_eq!(x.period().len() % 2, 0);
    }

    #[test]
    fn classic_sqrt_periods() {
        // sqrt 2 = [1; (2)], sqrt 3 = [1; (1, 2)], sqrt 7 = [2; (1, 1, 1, 4)]
        let e = |d: i64| cf_of_surd(&QuadraticSurd::sqrt(d).unwrap()).unwrap();
        assert_eq!(e(2).period(), big(&[2, 2]));
        assert_eq!(e(3).period(), big(&[1, 2]));
        assert_eq!(e(7).period(), big(&[1, 1, 1, 4]));
        assert_eq!(e(7).preperiod(), big(&[2]));
    }

    #[test]
    fn display() {
        let r5 = cf_of_surd(&QuadraticSurd::sqrt(5).unwrap()).unwrap();
        assert_eq!(r5.to_string(), "[2; (4, 4)]");
        assert_eq!(QuadraticSurd::new(1, 5, 2).unwrap().to_string(), "(1+sqrt(5))/2");
    }
}
