use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::slope::{orientation, Slope};
use super::triangle::{tree_distance, tree_path, FareyTriangle};
use crate::arith::cf_of_surd;
use crate::error::{Error, Result};
use crate::psl2z::{classify, cyclic_reduce, fixed_slopes, matrix_to_word, primitive_root, IntMatrix, Kind};

/// `p/q -> (ap + bq)/(cp + dq)` for a matrix of determinant `±1`.
pub fn act(m: &IntMatrix, s: &Slope) -> Result<Slope> {
    m.require_gl2()?;
    let (x, y) = m.apply(s.p(), s.q());
    Ok(Slope::from_vector(&x, &y))
}

pub fn act_triangle(m: &IntMatrix, t: &FareyTriangle) -> Result<FareyTriangle> {
    let [a, b, c] = t.vertices();
    FareyTriangle::new(act(m, a)?, act(m, b)?, act(m, c)?)
}

/// The matrix sending the ordered triangle `from` onto the ordered triangle
/// `to` vertex by vertex. Its determinant is `+1` exactly when the two
/// orderings have the same cyclic orientation.
pub fn triangle_map(from: &[Slope; 3], to: &[Slope; 3]) -> Result<IntMatrix> {
    for tri in [from, to] {
        FareyTriangle::new(tri[0].clone(), tri[1].clone(), tri[2].clone())?;
    }
    let vec = |s: &Slope| (s.p().clone(), s.q().clone());
    let (a1, b1) = (vec(&from[0]), vec(&from[1]));
    let (a2, b2) = (vec(&to[0]), vec(&to[1]));
    let basis = IntMatrix::new(a1.0, b1.0, a1.1, b1.1);
    let inv = basis.inverse()?;
    for sign in [1, -1] {
        let image = IntMatrix::new(a2.0.clone(), &b2.0 * sign, a2.1.clone(), &b2.1 * sign);
        let m = &image * &inv;
        if act(&m, &from[2])? == to[2] {
            return Ok(m.psl_normalized());
        }
    }
    unreachable!("Farey triangles are related by an integral map")
}

/// Which procedure [`translation_length`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TranslationMethod {
    /// Half the length of a cyclically reduced word.
    Word,
    /// Minimum displacement along a geodesic segment from `{0, 1, ∞}`.
    AxisOracle,
    /// Period sum of the attracting fixed point, times the power exponent.
    FixedPointCf,
}

impl TranslationMethod {
    pub const ALL: [TranslationMethod; 3] = [Self::Word, Self::AxisOracle, Self::FixedPointCf];
}

impl fmt::Display for TranslationMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Word => "word",
            Self::AxisOracle => "axis",
            Self::FixedPointCf => "cf",
        })
    }
}

impl FromStr for TranslationMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "word" => Ok(Self::Word),
            "axis" | "axis_oracle" => Ok(Self::AxisOracle),
            "cf" | "fixed_point_cf" => Ok(Self::FixedPointCf),
            _ => Err(Error::parse(0, format!("unknown method '{s}'"))),
        }
    }
}

fn require_not_identity(m: &IntMatrix) -> Result<Kind> {
    let class = classify(m)?;
    if m.is_plus_minus_identity() {
        return Err(Error::Identity);
    }
    Ok(class.kind)
}

/// A triangle on the axis of `m`, with its displacement `d(x, m x)`.
///
/// Along the geodesic from `v = {0, 1, ∞}` to `m v` the displacement is
/// `ℓ + 2 d(x, axis)`, so its minimum is attained on the axis. The first
/// minimizer (closest to `v`) is returned.
pub fn axis_vertex(m: &IntMatrix) -> Result<(FareyTriangle, usize)> {
    require_not_identity(m)?;
    let v = FareyTriangle::base();
    let mv = act_triangle(m, &v)?;
    let mut best: Option<(FareyTriangle, usize)> = None;
    for x in tree_path(&v, &mv) {
        let d = tree_distance(&x, &act_triangle(m, &x)?);
        if best.as_ref().is_none_or(|(_, b)| d < *b) {
            best = Some((x, d));
        }
    }
    Ok(best.expect("path is nonempty"))
}

/// Translation length of `m` acting on the Farey tree.
pub fn translation_length(m: &IntMatrix, method: TranslationMethod) -> Result<BigInt> {
    let kind = require_not_identity(m)?;
    match method {
        TranslationMethod::Word => {
            if kind == Kind::Elliptic {
                return Err(Error::Elliptic(m.trace().to_string()));
            }
            let len = cyclic_reduce(&matrix_to_word(m)?).len();
            debug_assert!(len.is_multiple_of(2));
            Ok(BigInt::from(len / 2))
        }
        TranslationMethod::AxisOracle => {
            if kind == Kind::Elliptic {
                return Ok(BigInt::from(0));
            }
            Ok(BigInt::from(axis_vertex(m)?.1))
        }
        TranslationMethod::FixedPointCf => {
            if kind != Kind::Anosov {
                return Err(Error::NotAnosov(m.trace().to_string()));
            }
            let (attracting, _) = fixed_slopes(m)?;
            let cf = cf_of_surd(&attracting)?;
            let (_, n) = primitive_root(&cyclic_reduce(&matrix_to_word(m)?))?;
            Ok(cf.periodic_sum() * n)
        }
    }
}

/// An Anosov matrix carrying `t1` to `t2` whose axis passes through both.
///
/// Orientation-preserving maps `t1 -> t2` correspond to the three rotations
/// of the vertex labels. Write `e` for the edge of `t1` crossed first on the
/// way to `t2` and `f` for the edge of `t2` crossed last. When `A e != f` the
/// path `t1 .. t2` followed by its image under `A` does not backtrack, so `A`
/// translates along it by `d(t1, t2)`. Of the two such labellings the one
/// sending the vertex of `t1` opposite `e` to the vertex of `t2` after the
/// one opposite `f` is tried first; a labelling whose axis is the fan of a
/// single slope gives a parabolic and is skipped.
pub fn connecting_anosov(t1: &FareyTriangle, t2: &FareyTriangle) -> Result<IntMatrix> {
    let path = tree_path(t1, t2);
    let d = path.len() - 1;
    if d < 2 {
        return Err(Error::TooClose(d));
    }
    let first_apex = t1.adjacency(&path[1]).expect("path steps are adjacent");
    let last_apex = t2.adjacency(&path[d - 1]).expect("path steps are adjacent");
    let src = t1.vertices();
    let dst = t2.vertices();
    debug_assert_eq!(orientation(&src[0], &src[1], &src[2]), 1);
    for shift in [1, 2] {
        let target_apex = (last_apex + shift) % 3;
        let from = [0, 1, 2].map(|k| src[(first_apex + k) % 3].clone());
        let to = [0, 1, 2].map(|k| dst[(target_apex + k) % 3].clone());
        let m = triangle_map(&from, &to)?;
        debug_assert_eq!(m.det(), BigInt::from(1));
        if classify(&m)?.kind == Kind::Anosov {
            debug_assert_eq!(
                translation_length(&m, TranslationMethod::AxisOracle)?.to_usize(),
                Some(d)
            );
            return Ok(m);
        }
    }
    unreachable!("one of the two non-backtracking labellings is Anosov")
}
