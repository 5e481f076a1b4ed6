//! Exact computations behind triangulation-complexity bounds for lens,
//! prism, Platonic, sol and torus-product 3-manifolds.
//!
//! The crate is organized bottom-up:
//!
//! * [`arith`]: rationals, finite continued fractions, quadratic surds.
//! * [`psl2z`]: integer matrices and the word problem in `PSL(2,Z)` over `S`, `T`.
//! * [`farey`]: slopes, Farey triangles, the Farey tree and translation lengths.
//! * [`complexity`]: the bound calculators.
//! * [`triangulate`]: gluing tables, layered builders, homology certification.

pub mod arith;
pub mod complexity;
pub mod error;
pub mod farey;
mod parse;
pub mod psl2z;
pub mod triangulate;

pub use arith::{ContinuedFraction, PeriodicCF, QuadraticSurd, Rational};
pub use complexity::{BoundsReport, Family, SeifertData};
pub use error::{Error, Result};
pub use farey::{FareyLine, FareyTriangle, Slope};
pub use psl2z::{GroupWord, IntMatrix};
pub use triangulate::{GluingTable, HomologyProfile, ValidationReport};
