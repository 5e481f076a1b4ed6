//! Integer matrices and the word problem in `PSL(2,Z) = Z/2 * Z/3` over the
//! generators `S = [[0,-1],[1,0]]` and `T = [[0,-1],[1,-1]]`.

mod matrix;
mod word;

pub use matrix::IntMatrix;
pub use word::{cyclic_reduce, matrix_to_word, primitive_root, word_length, word_to_matrix, GroupWord, Letter};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::arith::QuadraticSurd;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Elliptic,
    Parabolic,
    Anosov,
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: Kind,
    #[serde_as(as = "DisplayFromStr")]
    pub trace: BigInt,
}

/// Trace classification of an `SL(2,Z)` matrix: Anosov iff `|tr| > 2`.
pub fn classify(m: &IntMatrix) -> Result<Classification> {
    m.require_sl2()?;
    let trace = m.trace();
    let abs = trace.abs();
    let two = BigInt::from(2);
    let kind = if abs > two {
        Kind::Anosov
    } else if abs == two {
        Kind::Parabolic
    } else {
        Kind::Elliptic
    };
    Ok(Classification { kind, trace })
}

pub fn require_anosov(m: &IntMatrix) -> Result<Classification> {
    let c = classify(m)?;
    if c.kind != Kind::Anosov {
        return Err(Error::NotAnosov(c.trace.to_string()));
    }
    Ok(c)
}

/// The two fixed points of `u -> (au + b)/(cu + d)` for an Anosov matrix,
/// attracting point first.
///
/// They solve `c u^2 + (d - a) u - b = 0`, so
/// `u = (a - d +- sqrt(tr^2 - 4)) / 2c`. The eigenvalue on `(u, 1)` is
/// `cu + d = (tr +- sqrt(tr^2 - 4))/2`, whose absolute value is larger when
/// the sign of the root matches the sign of the trace.
pub fn fixed_slopes(m: &IntMatrix) -> Result<(QuadraticSurd, QuadraticSurd)> {
    let class = require_anosov(m)?;
    assert!(!m.c.is_zero(), "an Anosov matrix has c != 0");
    let disc = &class.trace * &class.trace - 4;
    let p = &m.a - &m.d;
    let q = BigInt::from(2) * &m.c;
    let plus = QuadraticSurd::new(p, disc, q)?;
    let minus = plus.conjugate();
    if class.trace.is_positive() {
        Ok((plus, minus))
    } else {
        Ok((minus, plus))
    }
}
