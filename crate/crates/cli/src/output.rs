//! JSON documents printed by each subcommand. Every integer is a decimal
//! string, and every document deserializes back to the values the library
//! produced.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use tricomplex::complexity::SolCfBounds;
use tricomplex::farey::CuttingSequence;
use tricomplex::psl2z::Classification;
use tricomplex::{
    BoundsReport, ContinuedFraction, GroupWord, HomologyProfile, IntMatrix, PeriodicCF, ValidationReport,
};

/// `cf`: the canonical expansion of a rational.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfOutput {
    pub value: String,
    pub digits: ContinuedFraction,
    pub noncanonical: ContinuedFraction,
    #[serde_as(as = "DisplayFromStr")]
    pub digit_sum: BigInt,
    pub cutting_sequence: Option<CuttingSequence>,
}

/// `surd`: the eventually periodic expansion of `(p + sqrt(d)) / q`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurdOutput {
    pub value: String,
    pub expansion: PeriodicCF,
    #[serde_as(as = "DisplayFromStr")]
    pub periodic_sum: BigInt,
}

/// `word`: a matrix and its normal-form word.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordOutput {
    pub matrix: IntMatrix,
    #[serde_as(as = "DisplayFromStr")]
    pub word: GroupWord,
    #[serde_as(as = "DisplayFromStr")]
    pub cyclically_reduced: GroupWord,
    #[serde_as(as = "DisplayFromStr")]
    pub cyclic_length: usize,
    pub classification: Classification,
}

/// `tlen`: the translation length by each method; a method that does not
/// apply to the matrix is `null`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TlenOutput {
    pub matrix: IntMatrix,
    #[serde_as(as = "DisplayFromStr")]
    pub translation_length: BigInt,
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub word: Option<BigInt>,
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub axis: Option<BigInt>,
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub cf: Option<BigInt>,
}

/// `sol`: the word bound and both continued-fraction readings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolOutput {
    pub word: BoundsReport,
    pub cf: SolCfBounds,
}

/// `validate`: structure and homology of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateOutput {
    pub report: ValidationReport,
    pub homology: HomologyProfile,
}
