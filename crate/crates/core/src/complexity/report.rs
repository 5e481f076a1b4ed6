use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::arith::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Lens,
    Prism,
    Platonic,
    Sol,
    Product,
}

/// Text used for every lower bound: the constants are universal but not known.
pub const LOWER_FORM: &str = "k · proxy for an unspecified universal k > 0";

/// Complexity bounds for one manifold.
///
/// `proxy` is the quantity the minimal tetrahedron count is comparable to,
/// `upper` a count realized by an explicit construction when one is known.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub family: Family,
    #[serde_as(as = "DisplayFromStr")]
    pub proxy: Rational,
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub upper: Option<BigInt>,
    pub lower_form: String,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub(crate) fn new(family: Family, proxy: Rational, upper: Option<BigInt>) -> Self {
        Self {
            family,
            proxy,
            upper,
            lower_form: LOWER_FORM.to_string(),
            notes: Vec::new(),
        }
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {:?}", self.family)?;
        writeln!(f, "proxy: {}", crate::arith::format_rational(&self.proxy))?;
        match &self.upper {
            Some(u) => writeln!(f, "upper: {u}")?,
            None => writeln!(f, "upper: none")?,
        }
        write!(f, "lower: {}", self.lower_form)?;
        for note in &self.notes {
            write!(f, "\nnote: {note}")?;
        }
        Ok(())
    }
}
