use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::slope::Slope;
use crate::error::{Error, Result};
use crate::psl2z::IntMatrix;

/// The line `L(s)` of the Farey tree: the bi-infinite path of triangles that
/// have `s` as a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyLine {
    pub center: Slope,
}

impl FareyLine {
    pub fn new(center: Slope) -> Self {
        Self { center }
    }
}

/// An `SL(2,Z)` matrix sending `s` to `∞`.
fn to_infinity(s: &Slope) -> IntMatrix {
    let egcd = s.p().extended_gcd(s.q());
    debug_assert!(egcd.gcd.is_one());
    IntMatrix::new(egcd.x, egcd.y, -s.q().clone(), s.p().clone())
}

/// Tree distance between the lines `L(s1)` and `L(s2)`.
///
/// After moving `s1` to `∞` by a tree isometry, the triangles around `∞` are
/// `{n, n+1, ∞}`, and the nearest triangle containing `s2 = a/b` is reached
/// by descending the Stern–Brocot tree from `{n, n+1}` until `a/b` appears
/// as a mediant. Each descent step is one tree edge. The running time is
/// linear in that distance.
pub fn line_distance(l1: &FareyLine, l2: &FareyLine) -> Result<usize> {
    if l1.center == l2.center {
        return Err(Error::SameLine(l1.center.to_string()));
    }
    let m = to_infinity(&l1.center);
    let (a, b) = m.apply(l2.center.p(), l2.center.q());
    let target = Slope::from_vector(&a, &b);
    let (a, b) = (target.p().clone(), target.q().clone());
    if b.is_one() {
        return Ok(0);
    }
    let n = a.div_floor(&b);
    let (mut lo, mut hi) = ((n.clone(), BigInt::one()), (n + 1, BigInt::one()));
    let mut steps = 0;
    loop {
        let mid = (&lo.0 + &hi.0, &lo.1 + &hi.1);
        steps += 1;
        if mid.0 == a && mid.1 == b {
            return Ok(steps);
        }
        if &a * &mid.1 < &mid.0 * &b {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(s: &str) -> FareyLine {
        FareyLine::new(s.parse().unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(line_distance(&line("inf"), &line("1/2")).unwrap(), 1);
        assert_eq!(line_distance(&line("inf"), &line("2/5")).unwrap(), 3);
        assert_eq!(line_distance(&line("0"), &line("inf")).unwrap(), 0);
        assert_eq!(line_distance(&line("2/5"), &line("inf")).unwrap(), 3);
        assert_eq!(line_distance(&line("1/3"), &line("1/2")).unwrap(), 0);
        assert!(matches!(
            line_distance(&line("1/3"), &line("1/3")),
            Err(Error::SameLine(_))
        ));
    }

    #[test]
    fn moves_centre_to_infinity() {
        for s in ["2/5", "-7/3", "0", "inf", "13/1"] {
            let s: Slope = s.parse().unwrap();
            let m = to_infinity(&s);
            assert!(m.require_sl2().is_ok());
            let (x, y) = m.apply(s.p(), s.q());
            assert_eq!(Slope::from_vector(&x, &y), Slope::infinity());
        }
    }
}
