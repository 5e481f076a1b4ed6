use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use super::report::{BoundsReport, Family};
use crate::arith::Rational;
use crate::error::{Error, Result};

/// Seifert invariants `p0` and three exceptional fibres `p_i/q_i` with
/// `0 < p_i < q_i` and `q_1 <= q_2 <= q_3`.
///
/// Platonic manifolds are those with `(q_1, q_2, q_3) = (2, 3, 3..=5)`; the
/// type also admits other three-fibre data so that degenerate inputs reach
/// [`platonic_bounds`] and are rejected there with a precise reason.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertData {
    #[serde_as(as = "DisplayFromStr")]
    p0: BigInt,
    #[serde_as(as = "[(DisplayFromStr, DisplayFromStr); 3]")]
    fibres: [(BigInt, BigInt); 3],
}

impl SeifertData {
    pub fn new(p0: impl Into<BigInt>, fibres: [(i64, i64); 3]) -> Result<Self> {
        Self::from_big(p0.into(), fibres.map(|(p, q)| (BigInt::from(p), BigInt::from(q))))
    }

    pub fn from_big(p0: BigInt, fibres: [(BigInt, BigInt); 3]) -> Result<Self> {
        for (p, q) in &fibres {
            if !(p.is_positive() && p < q && p.gcd(q).is_one()) {
                return Err(Error::Precondition(format!(
                    "fibre {p}/{q} must be coprime with 0 < p < q"
                )));
            }
        }
        if !(fibres[0].1 <= fibres[1].1 && fibres[1].1 <= fibres[2].1) {
            return Err(Error::Precondition("fibre denominators must be non-decreasing".into()));
        }
        Ok(Self { p0, fibres })
    }

    /// Accepts any numerators and moves their integer parts into `p0`,
    /// which leaves the Euler number unchanged.
    pub fn denormalized(p0: impl Into<BigInt>, fibres: [(i64, i64); 3]) -> Result<Self> {
        let mut p0 = p0.into();
        let mut out = Vec::with_capacity(3);
        for (p, q) in fibres {
            if q <= 1 {
                return Err(Error::Precondition(format!("fibre denominator {q} must be at least 2")));
            }
            let (k, r) = BigInt::from(p).div_mod_floor(&BigInt::from(q));
            p0 += k;
            out.push((r, BigInt::from(q)));
        }
        let fibres: [(BigInt, BigInt); 3] = out.try_into().expect("three fibres");
        Self::from_big(p0, fibres)
    }

    pub fn p0(&self) -> &BigInt {
        &self.p0
    }

    pub fn fibres(&self) -> &[(BigInt, BigInt); 3] {
        &self.fibres
    }

    pub fn is_platonic(&self) -> bool {
        let q: Vec<&BigInt> = self.fibres.iter().map(|(_, q)| q).collect();
        *q[0] == BigInt::from(2) && *q[1] == BigInt::from(3) && (3..=5).any(|n| *q[2] == BigInt::from(n))
    }
}

/// The Euler number `p0 + p1/q1 + p2/q2 + p3/q3`.
pub fn platonic_euler(s: &SeifertData) -> Rational {
    s.fibres
        .iter()
        .fold(Rational::from_integer(s.p0.clone()), |acc, (p, q)| {
            acc + Rational::new(p.clone(), q.clone())
        })
}

/// Bounds for a Platonic manifold: proxy `|e|`, no certified upper count.
pub fn platonic_bounds(s: &SeifertData) -> Result<BoundsReport> {
    let e = platonic_euler(s);
    if e.is_zero() {
        return Err(Error::ZeroEulerNumber);
    }
    if !s.is_platonic() {
        return Err(Error::Precondition(
            "fibre denominators must be (2, 3, 3), (2, 3, 4) or (2, 3, 5)".into(),
        ));
    }
    let mut report = BoundsReport::new(Family::Platonic, e.abs(), None);
    report
        .notes
        .push(format!("Euler number e = {}", crate::arith::format_rational(&e)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn euler_examples() {
        let s = SeifertData::new(-1, [(1, 2), (1, 3), (1, 5)]).unwrap();
        assert_eq!(platonic_euler(&s), ratio(1, 30));
        let s = SeifertData::new(1, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(platonic_euler(&s), ratio(25, 12));
        let s = SeifertData::new(-1, [(1, 2), (1, 3), (1, 3)]).unwrap();
        assert_eq!(platonic_euler(&s), ratio(1, 6));
        assert_eq!(platonic_bounds(&s).unwrap().proxy, ratio(1, 6));
    }

    #[test]
    fn denormalized_input_keeps_the_euler_number() {
        let s = SeifertData::new(-1, [(1, 2), (1, 3), (1, 5)]).unwrap();
        let d = SeifertData::denormalized(-2, [(1, 2), (4, 3), (1, 5)]).unwrap();
        assert_eq!(d, s);
        let d = SeifertData::denormalized(0, [(-1, 2), (1, 3), (1, 5)]).unwrap();
        assert_eq!(d, s);
    }

    #[test]
    fn rejects_bad_data() {
        let flat = SeifertData::new(-1, [(1, 2), (1, 3), (1, 6)]).unwrap();
        assert_eq!(platonic_bounds(&flat), Err(Error::ZeroEulerNumber));
        let other = SeifertData::new(0, [(1, 2), (1, 3), (1, 7)]).unwrap();
        assert!(matches!(platonic_bounds(&other), Err(Error::Precondition(_))));
        assert!(SeifertData::new(0, [(2, 2), (1, 3), (1, 5)]).is_err());
        assert!(SeifertData::new(0, [(1, 3), (1, 2), (1, 5)]).is_err());
    }
}
