//! Triangulations as gluing tables: validation, homology, and layered
//! constructions of products, torus bundles, solid tori and lens spaces.

mod builders;
mod complex;
mod layered;
mod perm;
mod snf;
mod table;
mod validate;

pub use builders::{build_layered_solid_torus, build_lens, build_sol, build_torus_product, SolidTorus, TorusProduct};
pub use complex::{BoundaryComponent, HomologyProfile};
pub use layered::{basis_with_diagonal, fold, glue_tori, layer_tetrahedron, BoundaryTorusState, BoundaryTriangle};
pub use perm::Perm;
pub use snf::{invariant_factors, smith_invariant_factors};
pub use table::{Gluing, GluingTable, Tetrahedron};
pub use validate::{homology, validate, ValidationReport};
