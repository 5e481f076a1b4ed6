use std::fmt;

use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use super::complex::{BoundaryComponent, Complex, HomologyProfile};
use super::table::GluingTable;
use crate::error::Result;

/// Structural summary of a gluing table.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    #[serde_as(as = "DisplayFromStr")]
    pub tetrahedra: usize,
    pub closed: bool,
    pub orientable: bool,
    /// False when some edge is identified with itself in reverse.
    pub valid_edges: bool,
    #[serde_as(as = "DisplayFromStr")]
    pub vertex_count: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub edge_count: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub face_count: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub euler: i64,
    pub boundary: Vec<BoundaryComponent>,
}

pub fn validate(table: &GluingTable) -> Result<ValidationReport> {
    let c = Complex::new(table)?;
    Ok(ValidationReport {
        tetrahedra: c.tets,
        closed: c.boundary_faces.is_empty(),
        orientable: c.orientable,
        valid_edges: c.valid_edges,
        vertex_count: c.vertex_count,
        edge_count: c.edge_count,
        face_count: c.face_count,
        euler: c.euler(),
        boundary: c.boundary_components(),
    })
}

/// Integer homology of the quotient cell complex.
pub fn homology(table: &GluingTable) -> Result<HomologyProfile> {
    Complex::new(table)?.homology()
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tetrahedra: {}", self.tetrahedra)?;
        writeln!(f, "closed: {}", self.closed)?;
        writeln!(f, "orientable: {}", self.orientable)?;
        writeln!(f, "valid edges: {}", self.valid_edges)?;
        writeln!(
            f,
            "vertices: {}, edges: {}, faces: {}",
            self.vertex_count, self.edge_count, self.face_count
        )?;
        write!(f, "euler: {}", self.euler)?;
        for (k, b) in self.boundary.iter().enumerate() {
            write!(
                f,
                "\nboundary {k}: {} faces, {} edges, {} vertices",
                b.faces, b.edges, b.vertices
            )?;
        }
        Ok(())
    }
}
