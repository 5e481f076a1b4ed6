//! The Farey tessellation of the hyperbolic plane and its dual tree.
//!
//! Vertices of the tree are Farey triangles, equivalently one-vertex
//! triangulations of the torus, and `SL(2,Z)` acts on it by isometries.

mod action;
mod cutting;
mod line;
mod slope;
mod triangle;

pub use action::{
    act, act_triangle, axis_vertex, connecting_anosov, translation_length, triangle_map, TranslationMethod,
};
pub use cutting::{cutting_sequence, CutTarget, CuttingSequence, Side};
pub use line::{line_distance, FareyLine};
pub use slope::{is_farey_edge, orientation, Slope};
pub use triangle::{tree_distance, tree_path, FareyTriangle};
