use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::arith::{cf_of_rational, cf_of_surd, QuadraticSurd, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

/// Alternating runs `L^{a_0} R^{a_1} L^{a_2} ...` of left and right turns
/// made by a geodesic through the Farey tessellation.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuttingSequence {
    #[serde_as(as = "Vec<(_, DisplayFromStr)>")]
    pub runs: Vec<(Side, BigInt)>,
}

impl CuttingSequence {
    pub fn exponents(&self) -> Vec<BigInt> {
        self.runs.iter().map(|(_, n)| n.clone()).collect()
    }

    fn from_digits<'a>(digits: impl Iterator<Item = &'a BigInt>) -> Self {
        let runs = digits
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (if i % 2 == 0 { Side::L } else { Side::R }, a.clone()))
            .collect();
        Self { runs }
    }
}

impl fmt::Display for CuttingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.runs.iter().map(|(side, n)| format!("{side:?}^{n}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The number whose geodesic is cut.
#[derive(Debug, Clone)]
pub enum CutTarget {
    Rational(Rational),
    Surd(QuadraticSurd),
}

/// Cutting sequence of the geodesic from `∞` to a positive number.
///
/// Run lengths are the continued-fraction digits. A rational sequence ends
/// with the canonical last digit (at least 2 unless it is the only run);
/// `max_runs` truncates only the infinite surd case.
pub fn cutting_sequence(target: &CutTarget, max_runs: usize) -> Result<CuttingSequence> {
    if max_runs == 0 {
        return Err(Error::Precondition("max_runs must be at least 1".into()));
    }
    match target {
        CutTarget::Rational(r) => {
            if !r.is_positive() {
                return Err(Error::NonPositive);
            }
            Ok(CuttingSequence::from_digits(cf_of_rational(r).digits().iter()))
        }
        CutTarget::Surd(x) => {
            if !x.is_positive() {
                return Err(Error::NonPositive);
            }
            let cf = cf_of_surd(x)?;
            let skip = usize::from(cf.digit(0).is_zero());
            let digits = cf.take(max_runs + skip);
            Ok(CuttingSequence::from_digits(digits.iter()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn examples() {
        let c = cutting_sequence(&CutTarget::Rational(ratio(5, 2)), 1).unwrap();
        assert_eq!(c.to_string(), "L^2 R^2");
        let c = cutting_sequence(&CutTarget::Rational(ratio(3, 1)), 1).unwrap();
        assert_eq!(c.to_string(), "L^3");
        let phi = QuadraticSurd::new(1, 5, 2).unwrap();
        let c = cutting_sequence(&CutTarget::Surd(phi), 5).unwrap();
        assert_eq!(c.to_string(), "L^1 R^1 L^1 R^1 L^1");
    }

    #[test]
    fn numbers_below_one_start_with_a_right_run() {
        let c = cutting_sequence(&CutTarget::Rational(ratio(2, 7)), 1).unwrap();
        assert_eq!(c.to_string(), "R^3 L^2");
        let x = QuadraticSurd::new(-1, 5, 2).unwrap();
        let c = cutting_sequence(&CutTarget::Surd(x), 3).unwrap();
        assert_eq!(c.to_string(), "R^1 L^1 R^1");
    }

    #[test]
    fn rejects_non_positive() {
        assert_eq!(
            cutting_sequence(&CutTarget::Rational(ratio(-1, 2)), 1),
            Err(Error::NonPositive)
        );
        let x = QuadraticSurd::new(-3, 5, 1).unwrap();
        assert_eq!(cutting_sequence(&CutTarget::Surd(x), 4), Err(Error::NonPositive));
    }
}
