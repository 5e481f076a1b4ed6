//! One-vertex boundary tori and the layering, folding and gluing moves.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use super::perm::{missing, Perm};
use super::table::GluingTable;
use crate::error::{Error, Result};
use crate::farey::{FareyTriangle, Slope};
use crate::psl2z::IntMatrix;

type Vector = (BigInt, BigInt);

fn add(a: &Vector, b: &Vector) -> Vector {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn sub(a: &Vector, b: &Vector) -> Vector {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn neg(a: &Vector) -> Vector {
    (-&a.0, -&a.1)
}

fn det(a: &Vector, b: &Vector) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn slope(a: &Vector) -> Slope {
    Slope::from_vector(&a.0, &a.1)
}

/// A boundary triangle: a tetrahedron and three of its vertices, listed in
/// the order of the triangle's corners in the plane.
#[serde_as]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryTriangle {
    #[serde_as(as = "DisplayFromStr")]
    pub tet: usize,
    #[serde_as(as = "[DisplayFromStr; 3]")]
    pub vertices: [u8; 3],
}

impl BoundaryTriangle {
    pub fn face(&self) -> u8 {
        missing(self.vertices)
    }
}

/// An exposed one-vertex torus made of two boundary faces.
///
/// The torus is `R²/Z²` with a basis `(u, v)` of determinant one. The first
/// triangle has corners `0, u, u + v`, the second `0, u + v, v`, so the
/// three edges have directions `u`, `v` and the diagonal `u + v`, and their
/// slopes form a Farey triangle.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryTorusState {
    #[serde_as(as = "(DisplayFromStr, DisplayFromStr)")]
    pub u: Vector,
    #[serde_as(as = "(DisplayFromStr, DisplayFromStr)")]
    pub v: Vector,
    pub first: BoundaryTriangle,
    pub second: BoundaryTriangle,
}

impl BoundaryTorusState {
    pub(crate) fn new(u: Vector, v: Vector, first: BoundaryTriangle, second: BoundaryTriangle) -> Self {
        debug_assert!(det(&u, &v).is_one());
        Self { u, v, first, second }
    }

    pub fn triangle(&self) -> FareyTriangle {
        FareyTriangle::new(slope(&self.u), slope(&self.v), slope(&add(&self.u, &self.v)))
            .expect("a unimodular basis spans a Farey triangle")
    }

    pub fn diagonal(&self) -> Slope {
        slope(&add(&self.u, &self.v))
    }

    /// Same torus, relabelled so that the edge `u` becomes the diagonal.
    pub fn rotate(&self) -> Self {
        let s = &self.second.vertices;
        Self {
            u: neg(&self.v),
            v: add(&self.u, &self.v),
            first: BoundaryTriangle {
                tet: self.second.tet,
                vertices: [s[2], s[0], s[1]],
            },
            second: self.first,
        }
    }

    /// Relabelled so that the edge of slope `s` is the diagonal.
    pub fn with_diagonal(&self, s: &Slope) -> Result<Self> {
        let mut cur = self.clone();
        for _ in 0..3 {
            if cur.diagonal() == *s {
                return Ok(cur);
            }
            cur = cur.rotate();
        }
        Err(Error::NotBoundaryEdge(s.to_string()))
    }

    /// Corner positions of both triangles.
    fn corners(&self) -> [[Vector; 3]; 2] {
        let zero = (BigInt::from(0), BigInt::from(0));
        let uv = add(&self.u, &self.v);
        [[zero.clone(), self.u.clone(), uv.clone()], [zero, uv, self.v.clone()]]
    }

    fn triangles(&self) -> [BoundaryTriangle; 2] {
        [self.first, self.second]
    }

    pub(crate) fn shifted(&self, offset: usize) -> Self {
        let mut s = self.clone();
        s.first.tet += offset;
        s.second.tet += offset;
        s
    }
}

/// A basis `(u, v)` of the torus whose edges are the vertices of `t`, with
/// `u + v` of slope `diagonal`.
pub fn basis_with_diagonal(t: &FareyTriangle, diagonal: &Slope) -> Result<(Vector, Vector)> {
    let i = t
        .index_of(diagonal)
        .ok_or_else(|| Error::NotBoundaryEdge(diagonal.to_string()))?;
    let vs = t.vertices();
    let a = (vs[(i + 1) % 3].p().clone(), vs[(i + 1) % 3].q().clone());
    let b = (vs[(i + 2) % 3].p().clone(), vs[(i + 2) % 3].q().clone());
    let (u, v) = if det(&a, &b).is_one() { (a, b) } else { (b, a) };
    if slope(&add(&u, &v)) == *diagonal {
        Ok((u, v))
    } else {
        Ok((neg(&v), u))
    }
}

/// A fresh tetrahedron viewed as a layer: its faces 3 and 2 form a
/// boundary torus with basis `(u, v)` (the bottom), and its faces 1 and 0
/// the torus obtained by flipping the diagonal `u + v` (the top).
pub(crate) fn fresh_layer(table: &mut GluingTable, u: Vector, v: Vector) -> (BoundaryTorusState, BoundaryTorusState) {
    let n = table.add_tetrahedron();
    // corners: N0 at 0, N1 at u + v, N2 at u, N3 at v
    let bottom = BoundaryTorusState::new(
        u.clone(),
        v.clone(),
        BoundaryTriangle {
            tet: n,
            vertices: [0, 2, 1],
        },
        BoundaryTriangle {
            tet: n,
            vertices: [0, 1, 3],
        },
    );
    let top = BoundaryTorusState::new(
        u.clone(),
        sub(&v, &u),
        BoundaryTriangle {
            tet: n,
            vertices: [0, 2, 3],
        },
        BoundaryTriangle {
            tet: n,
            vertices: [2, 1, 3],
        },
    );
    (bottom, top)
}

/// Glues two boundary triangles corner by corner.
fn glue_triangles(
    table: &mut GluingTable,
    a: BoundaryTriangle,
    b: BoundaryTriangle,
    corner_map: [usize; 3],
) -> Result<()> {
    let to = [0, 1, 2].map(|k| b.vertices[corner_map[k]]);
    let perm = Perm::from_triples(a.vertices, to);
    table.glue(a.tet, a.face(), b.tet, perm)
}

/// Layers one tetrahedron onto `state`, removing the edge of slope `flip`
/// and adding the other diagonal of the square it bounds.
pub fn layer_tetrahedron(
    table: &mut GluingTable,
    state: &BoundaryTorusState,
    flip: &Slope,
) -> Result<BoundaryTorusState> {
    let s = state.with_diagonal(flip)?;
    let (bottom, top) = fresh_layer(table, s.u.clone(), s.v.clone());
    glue_triangles(table, bottom.first, s.first, [0, 1, 2])?;
    glue_triangles(table, bottom.second, s.second, [0, 1, 2])?;
    Ok(top)
}

/// Closes the torus by folding its two triangles onto each other across the
/// edge of slope `along`. In the result the curve of slope `v - u` (the
/// other diagonal of the square) bounds a disc.
pub fn fold(table: &mut GluingTable, state: &BoundaryTorusState, along: &Slope) -> Result<()> {
    let s = state.with_diagonal(along)?;
    // reflection across the diagonal: 0 -> 0, u -> v, u + v -> u + v
    glue_triangles(table, s.first, s.second, [0, 2, 1])
}

/// Identifies the boundary torus `b` with the boundary torus `a` through
/// the linear map `m` from `b`'s coordinates to `a`'s.
pub fn glue_tori(table: &mut GluingTable, a: &BoundaryTorusState, b: &BoundaryTorusState, m: &IntMatrix) -> Result<()> {
    m.require_gl2()?;
    let a_corners = a.corners();
    let b_corners = b.corners();
    let apply = |x: &Vector| m.apply(&x.0, &x.1);
    for (bi, bt) in b.triangles().iter().enumerate() {
        let image: Vec<Vector> = b_corners[bi].iter().map(apply).collect();
        let mut found = None;
        for (ai, at) in a.triangles().iter().enumerate() {
            for anchor in 0..3 {
                let shift = sub(&a_corners[ai][anchor], &image[0]);
                let moved: Vec<Vector> = image.iter().map(|p| add(p, &shift)).collect();
                let map: Option<Vec<usize>> = a_corners[ai]
                    .iter()
                    .map(|p| moved.iter().position(|q| q == p))
                    .collect();
                if let Some(map) = map {
                    assert!(found.is_none(), "boundary triangle matches twice");
                    found = Some((*at, [map[0], map[1], map[2]]));
                }
            }
        }
        let (at, map) = found
            .ok_or_else(|| Error::Precondition(format!("{m} does not carry {} onto {}", b.triangle(), a.triangle())))?;
        glue_triangles(table, at, *bt, map)?;
    }
    Ok(())
}
