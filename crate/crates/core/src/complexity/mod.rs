//! Upper bounds and comparison quantities for the triangulation complexity
//! of lens spaces, prism manifolds, Platonic manifolds, sol torus bundles and
//! products `T² × I`.

mod report;
mod seifert;

pub use report::{BoundsReport, Family, LOWER_FORM};
pub use seifert::{platonic_bounds, platonic_euler, SeifertData};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::arith::{cf_of_rational, cf_of_surd, QuadraticSurd, Rational};
use crate::error::{Error, Result};
use crate::farey::{translation_length, tree_distance, FareyTriangle, TranslationMethod};
use crate::psl2z::{cyclic_reduce, matrix_to_word, primitive_root, require_anosov, word_length, IntMatrix};

fn digit_sum(p: &BigInt, q: &BigInt) -> BigInt {
    cf_of_rational(&Rational::new(p.clone(), q.clone())).digit_sum()
}

/// Bounds for the lens space `L(p, q)`: the digit sum of `p/q` is both the
/// comparison quantity and a realized upper bound.
pub fn lens_bounds(p: &BigInt, q: &BigInt) -> Result<BoundsReport> {
    if !(q.is_positive() && q < p && p.gcd(q).is_one()) {
        return Err(Error::Precondition(format!(
            "lens space needs coprime 0 < q < p, got p={p}, q={q}"
        )));
    }
    let sum = digit_sum(p, q);
    let mut report = BoundsReport::new(Family::Lens, Rational::from_integer(sum.clone()), Some(sum.clone()));
    if *p > BigInt::from(3) {
        report.notes.push(format!(
            "layered triangulation uses (sum of digits) - 3 = {} tetrahedra",
            &sum - 3
        ));
    } else if *p == BigInt::from(2) {
        report
            .notes
            .push("L(2,1) is RP^3, whose complexity is exactly 2".into());
    } else {
        report.notes.push("L(3,1) has complexity exactly 2".into());
    }
    let four = BigInt::from(4);
    if p.is_multiple_of(&four) {
        let n = p / &four;
        let half = &n * 2;
        if *q == &half + 1 || *q == &half - 1 {
            report.notes.push(format!(
                "L(4n, 2n±1) with n = {n}: exact complexity is known from prior work and not recomputed here"
            ));
        }
    }
    Ok(report)
}

/// Bounds for the prism manifold `P(p, q)`; no certified upper count is given.
pub fn prism_bounds(p: &BigInt, q: &BigInt) -> Result<BoundsReport> {
    if p.is_zero() || q.is_zero() || !p.gcd(q).is_one() {
        return Err(Error::Precondition(format!(
            "prism manifold needs nonzero coprime p, q, got p={p}, q={q}"
        )));
    }
    let sum = digit_sum(p, q);
    let mut report = BoundsReport::new(Family::Prism, Rational::from_integer(sum.clone()), None);
    if !sum.is_positive() {
        report.notes.push(format!(
            "warning: digit sum {sum} is not positive; the comparison is uninformative for this sign convention"
        ));
    }
    Ok(report)
}

/// Bounds for the torus bundle with Anosov monodromy `A` from the length of
/// a cyclically reduced word: proxy `ℓ`, realized upper bound `ℓ/2 + 6`.
pub fn sol_bounds_word(a: &IntMatrix) -> Result<BoundsReport> {
    require_anosov(a)?;
    let len = word_length(a)?;
    assert!(len >= 2 && len % 2 == 0, "Anosov words have even length, got {len}");
    Ok(BoundsReport::new(
        Family::Sol,
        Rational::from_integer(BigInt::from(len)),
        Some(BigInt::from(len / 2 + 6)),
    ))
}

/// Both readings of the continued-fraction bound for a sol manifold.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolCfBounds {
    #[serde(flatten)]
    pub report: BoundsReport,
    /// Exponent `n` with the monodromy an `n`-th power of a primitive element.
    #[serde_as(as = "DisplayFromStr")]
    pub power: usize,
    /// `n` times the period sum of `sqrt(tr² - 4)`.
    #[serde_as(as = "DisplayFromStr")]
    pub trace_reading: BigInt,
    /// `n` times the period sum of the attracting fixed slope.
    #[serde_as(as = "DisplayFromStr")]
    pub fixed_point_reading: BigInt,
    pub disagreement: bool,
}

/// Continued-fraction bounds for a sol manifold.
///
/// The report's proxy is the fixed-point reading, which equals the
/// translation length in the Farey tree; the reading built from
/// `sqrt(tr² - 4)` is reported alongside and flagged when different.
pub fn sol_bounds_cf(a: &IntMatrix) -> Result<SolCfBounds> {
    let class = require_anosov(a)?;
    let (_, n) = primitive_root(&cyclic_reduce(&matrix_to_word(a)?))?;
    let disc: BigInt = &class.trace * &class.trace - 4;
    let trace_reading = cf_of_surd(&QuadraticSurd::sqrt(disc.clone())?)?.periodic_sum() * n;
    let fixed_point_reading = translation_length(a, TranslationMethod::FixedPointCf)?;
    let disagreement = trace_reading != fixed_point_reading;
    let mut report = BoundsReport::new(
        Family::Sol,
        Rational::from_integer(fixed_point_reading.clone()),
        Some(&fixed_point_reading + 6),
    );
    report.notes.push(format!(
        "fixed-point reading: n = {n} times period sum of the attracting fixed slope = {fixed_point_reading}"
    ));
    report.notes.push(format!(
        "trace reading: n = {n} times period sum of sqrt({disc}) = {trace_reading}"
    ));
    if disagreement {
        report.notes.push(format!(
            "readings disagree ({fixed_point_reading} vs {trace_reading}); the fixed-point reading matches the translation length"
        ));
    }
    Ok(SolCfBounds {
        report,
        power: n,
        trace_reading,
        fixed_point_reading,
        disagreement,
    })
}

/// Bounds for `T² × I` with boundary triangulations `t0` and `t1`: proxy is
/// their Farey-tree distance `d`, realized upper bound `d + 6`.
pub fn product_bounds(t0: &FareyTriangle, t1: &FareyTriangle) -> BoundsReport {
    let d = BigInt::from(tree_distance(t0, t1));
    BoundsReport::new(Family::Product, Rational::from_integer(d.clone()), Some(d + 6))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(big(n))
    }

    #[test]
    fn lens_examples() {
        let r = lens_bounds(&big(7), &big(2)).unwrap();
        assert_eq!((r.proxy, r.upper), (int(5), Some(big(5))));
        let r = lens_bounds(&big(5), &big(2)).unwrap();
        assert_eq!(r.proxy, int(4));
        assert!(r.notes[0].contains("= 1 tetrahedra"));
        let r = lens_bounds(&big(2), &big(1)).unwrap();
        assert_eq!(r.proxy, int(2));
        assert!(r.notes[0].contains("RP^3"));
        assert!(lens_bounds(&big(6), &big(4)).is_err());
        assert!(lens_bounds(&big(3), &big(3)).is_err());
        assert!(lens_bounds(&big(8), &big(3))
            .unwrap()
            .notes
            .iter()
            .any(|n| n.contains("4n")));
    }

    #[test]
    fn prism_examples() {
        assert_eq!(prism_bounds(&big(7), &big(2)).unwrap().proxy, int(5));
        assert_eq!(prism_bounds(&big(7), &big(3)).unwrap().proxy, int(5));
        let r = prism_bounds(&big(-3), &big(2)).unwrap();
        assert_eq!(r.proxy, int(0));
        assert!(r.notes[0].starts_with("warning"));
        assert!(r.upper.is_none());
        assert!(prism_bounds(&big(0), &big(1)).is_err());
    }

    #[test]
    fn sol_word_examples() {
        let a = IntMatrix::new(2, 1, 1, 1);
        let r = sol_bounds_word(&a).unwrap();
        assert_eq!((r.proxy, r.upper), (int(4), Some(big(8))));
        let r = sol_bounds_word(&IntMatrix::new(3, 1, 2, 1)).unwrap();
        assert_eq!((r.proxy, r.upper), (int(6), Some(big(9))));
        let r = sol_bounds_word(&a.pow(5)).unwrap();
        assert_eq!((r.proxy, r.upper), (int(20), Some(big(16))));
        assert!(sol_bounds_word(&IntMatrix::new(1, 1, 0, 1)).is_err());
    }

    #[test]
    fn sol_cf_examples() {
        let a = IntMatrix::new(2, 1, 1, 1);
        let r = sol_bounds_cf(&a).unwrap();
        assert_eq!(r.fixed_point_reading, big(2));
        assert_eq!(r.trace_reading, big(8));
        assert!(r.disagreement);
        assert_eq!(
            sol_bounds_cf(&IntMatrix::new(3, 1, 2, 1)).unwrap().fixed_point_reading,
            big(3)
        );
        let r = sol_bounds_cf(&a.pow(2)).unwrap();
        assert_eq!((r.power, r.fixed_point_reading.clone()), (2, big(4)));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<SolCfBounds>(&json).unwrap(), r);
    }

    #[test]
    fn product_examples() {
        let base = FareyTriangle::base();
        let r = product_bounds(&base, &base);
        assert_eq!((r.proxy, r.upper), (int(0), Some(big(6))));
        let r = product_bounds(&base, &"{1,2,inf}".parse().unwrap());
        assert_eq!((r.proxy, r.upper), (int(1), Some(big(7))));
        let r = product_bounds(&base, &"{1,3/2,2}".parse().unwrap());
        assert_eq!((r.proxy, r.upper), (int(2), Some(big(8))));
    }
}
