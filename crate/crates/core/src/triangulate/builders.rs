//! Explicit triangulations of `T² × I`, sol torus bundles, layered solid
//! tori and lens spaces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::layered::{
    basis_with_diagonal, fold, fresh_layer, glue_tori, layer_tetrahedron, BoundaryTorusState, BoundaryTriangle,
};
use super::perm::Perm;
use super::table::GluingTable;
use crate::error::{Error, Result};
use crate::farey::{act_triangle, axis_vertex, tree_path, FareyTriangle, Slope};
use crate::psl2z::{require_anosov, IntMatrix};

/// A triangulated `T² × I` with its two boundary tori.
#[derive(Debug, Clone)]
pub struct TorusProduct {
    pub table: GluingTable,
    pub bottom: BoundaryTorusState,
    pub top: BoundaryTorusState,
}

/// A layered solid torus: the meridian is the slope `∞` of the boundary
/// coordinates.
#[derive(Debug, Clone)]
pub struct SolidTorus {
    pub table: GluingTable,
    pub boundary: BoundaryTorusState,
}

type Point = ((i64, i64), u8);

/// Six tetrahedra forming `T² × I` with both ends triangulated by the basis
/// `(u, v)`.
///
/// Each triangle times the interval is a prism cut into three tetrahedra
/// along the vertex order of the triangle. The orders `0 < u < u + v` and
/// `0 < v < u + v` induce the same direction on every torus edge, so the
/// vertical squares get matching diagonals. Faces are paired by comparing
/// their corner sets up to integer translation.
fn product_block(
    table: &mut GluingTable,
    u: &(BigInt, BigInt),
    v: &(BigInt, BigInt),
) -> (BoundaryTorusState, BoundaryTorusState) {
    let base = table.len();
    // prism corners in the basis (u, v): first triangle 0, u, u+v; second 0, v, u+v
    let prisms: [[(i64, i64); 3]; 2] = [[(0, 0), (1, 0), (1, 1)], [(0, 0), (0, 1), (1, 1)]];
    let mut tets: Vec<[Point; 4]> = Vec::new();
    for [a, b, c] in prisms {
        tets.push([(a, 0), (b, 0), (c, 0), (c, 1)]);
        tets.push([(a, 0), (b, 0), (b, 1), (c, 1)]);
        tets.push([(a, 0), (a, 1), (b, 1), (c, 1)]);
    }
    for _ in &tets {
        table.add_tetrahedron();
    }
    let mut open: BTreeMap<Vec<Point>, (usize, u8, Vec<Point>)> = BTreeMap::new();
    for (t, pts) in tets.iter().enumerate() {
        for f in 0..4u8 {
            let face: Vec<Point> = (0..4).filter(|&k| k != f as usize).map(|k| pts[k]).collect();
            let key = canonical(&face);
            if let Some((t2, f2, face2)) = open.remove(&key) {
                let shift = translation(&face, &face2);
                let mut images = [0u8; 4];
                for k in 0..4u8 {
                    if k == f {
                        images[k as usize] = f2;
                        continue;
                    }
                    let p = pts[k as usize];
                    let moved = ((p.0 .0 + shift.0, p.0 .1 + shift.1), p.1);
                    images[k as usize] = tets[t2].iter().position(|q| *q == moved).expect("matching corner") as u8;
                }
                let perm = Perm::new(images).expect("corner matching is bijective");
                table.glue(base + t, f, base + t2, perm).expect("fresh faces are free");
            } else {
                open.insert(key, (t, f, face));
            }
        }
    }
    assert_eq!(open.len(), 4, "the block has exactly four boundary faces");
    // prism 0 is tets 0..3 over (0, u, u+v); prism 1 is tets 3..6 over (0, v, u+v)
    let bottom = BoundaryTorusState::new(
        u.clone(),
        v.clone(),
        BoundaryTriangle {
            tet: base,
            vertices: [0, 1, 2],
        },
        BoundaryTriangle {
            tet: base + 3,
            vertices: [0, 2, 1],
        },
    );
    let top = BoundaryTorusState::new(
        u.clone(),
        v.clone(),
        BoundaryTriangle {
            tet: base + 2,
            vertices: [1, 2, 3],
        },
        BoundaryTriangle {
            tet: base + 5,
            vertices: [1, 3, 2],
        },
    );
    (bottom, top)
}

fn canonical(face: &[Point]) -> Vec<Point> {
    let min = *face.iter().min().expect("three corners");
    let mut out: Vec<Point> = face
        .iter()
        .map(|&((x, y), l)| ((x - min.0 .0, y - min.0 .1), l))
        .collect();
    out.sort();
    out
}

/// The translation carrying `from` onto `to` (which share a canonical form).
fn translation(from: &[Point], to: &[Point]) -> (i64, i64) {
    let a = *from.iter().min().expect("nonempty");
    let b = *to.iter().min().expect("nonempty");
    (b.0 .0 - a.0 .0, b.0 .1 - a.0 .1)
}

/// `T² × I` whose bottom is triangulated by `path[0]` and whose top by the
/// last entry, using `6 + len - 1` tetrahedra.
pub fn build_torus_product(path: &[FareyTriangle]) -> Result<TorusProduct> {
    let first = path
        .first()
        .ok_or_else(|| Error::Precondition("path is empty".into()))?;
    for w in path.windows(2) {
        if w[0].adjacency(&w[1]).is_none() {
            return Err(Error::Precondition(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    let mut table = GluingTable::new();
    let (u, v) = basis_with_diagonal(first, &first.vertices()[2])?;
    let (bottom, mut top) = product_block(&mut table, &u, &v);
    for w in path.windows(2) {
        let flip = &w[0].vertices()[w[0].adjacency(&w[1]).expect("checked")];
        top = layer_tetrahedron(&mut table, &top, flip)?;
        debug_assert_eq!(top.triangle(), w[1]);
    }
    Ok(TorusProduct { table, bottom, top })
}

/// The torus bundle with monodromy `a`: a product over the geodesic from an
/// axis triangle `t` to `a t`, with the top glued to the bottom by `a`.
pub fn build_sol(a: &IntMatrix) -> Result<GluingTable> {
    require_anosov(a)?;
    let (t, _) = axis_vertex(a)?;
    let path = tree_path(&t, &act_triangle(a, &t)?);
    let mut product = build_torus_product(&path)?;
    glue_tori(&mut product.table, &product.top, &product.bottom, a)?;
    Ok(product.table)
}

/// Farey triangles from `{0, 1, ∞}` down the Stern–Brocot tree to the first
/// one having `target` (in `(0, 1)`) as a vertex.
fn stern_brocot_path(target: &Slope) -> Vec<FareyTriangle> {
    let mut path = vec![FareyTriangle::base()];
    while !path.last().expect("nonempty").contains(target) {
        let cur = path.last().expect("nonempty");
        let vs = cur.vertices();
        // the largest vertex, or the one on the far side of the target
        let i = (0..3)
            .find(|&i| {
                let (x, y, z) = (&vs[(i + 1) % 3], &vs[(i + 2) % 3], &vs[i]);
                crate::farey::orientation(x, y, target) == -crate::farey::orientation(x, y, z)
            })
            .expect("the target lies beyond one edge");
        path.push(cur.flip(i));
    }
    path
}

/// Layers along a Stern–Brocot path `T_0, T_1, ..., T_k` (`k >= 2`) with
/// meridian `∞`: the first tetrahedron has its bottom folded across the
/// slope `1/2`, and each further one flips `T_j \ T_{j+1}`.
fn layered_along(path: &[FareyTriangle]) -> SolidTorus {
    assert!(path.len() >= 3);
    let mut table = GluingTable::new();
    let t1 = &path[1];
    let diagonal = &t1.vertices()[t1.adjacency(&path[2]).expect("adjacent")];
    let folded = &t1.vertices()[t1.adjacency(&path[0]).expect("adjacent")];
    let (u, v) = basis_with_diagonal(t1, diagonal).expect("diagonal is a vertex");
    let (bottom, mut top) = fresh_layer(&mut table, u, v);
    fold(&mut table, &bottom, folded).expect("fold edge differs from the layered diagonal");
    for w in path[2..].windows(2) {
        let flip = &w[0].vertices()[w[0].adjacency(&w[1]).expect("adjacent")];
        top = layer_tetrahedron(&mut table, &top, flip).expect("flip is a boundary edge");
    }
    debug_assert_eq!(&top.triangle(), path.last().expect("nonempty"));
    SolidTorus { table, boundary: top }
}

fn check_lens_args(p: &BigInt, q: &BigInt) -> Result<()> {
    if q.is_positive() && q < p && p.gcd(q).is_one() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("need coprime 0 < q < p, got p={p}, q={q}")))
    }
}

/// The layered solid torus whose meridian meets the three boundary edges
/// `q`, `p - q` and `p` times; it has `(sum of digits of p/q) - 2`
/// tetrahedra.
pub fn build_layered_solid_torus(p: &BigInt, q: &BigInt) -> Result<SolidTorus> {
    check_lens_args(p, q)?;
    if *p < BigInt::from(3) {
        return Err(Error::Precondition(format!(
            "layered solid torus needs p >= 3, got {p}"
        )));
    }
    // the boundary triangle containing r/p, r = q^-1 mod p, has denominators q, p - q, p
    let r = q.extended_gcd(p).x.mod_floor(p);
    let path = stern_brocot_path(&Slope::new(r, p.clone())?);
    Ok(layered_along(&path))
}

/// A closed triangulation of the lens space `L(p, q)`.
///
/// For `p >= 4` a layered solid torus is folded shut, giving
/// `(sum of digits of p/q) - 3` tetrahedra. `L(2, 1)` and `L(3, q)` use
/// two-tetrahedron special cases.
pub fn build_lens(p: &BigInt, q: &BigInt) -> Result<GluingTable> {
    check_lens_args(p, q)?;
    match p.to_u8() {
        Some(2) => {
            // LST(1, 3, 4) folded so that the slope 1/2 bounds a disc
            let path = stern_brocot_path(&Slope::new(1, 4)?);
            let mut solid = layered_along(&path);
            fold(&mut solid.table, &solid.boundary, &Slope::new(1, 4)?)?;
            Ok(solid.table)
        }
        Some(3) => {
            // two copies of LST(1, 2, 3) glued by a map sending ∞ to 2/3
            let path = stern_brocot_path(&Slope::new(1, 3)?);
            let solid = layered_along(&path);
            let mut table = solid.table.clone();
            let offset = table.append(&solid.table);
            let other = solid.boundary.shifted(offset);
            glue_tori(&mut table, &solid.boundary, &other, &IntMatrix::new(-2, 1, -3, 2))?;
            Ok(table)
        }
        _ => {
            let path = stern_brocot_path(&Slope::new(q.clone(), p.clone())?);
            let m = path.len() - 1;
            let solid = layered_along(&path[..m]);
            let mut table = solid.table;
            let last = &path[m - 1];
            let edge = &last.vertices()[last.adjacency(&path[m]).expect("adjacent")];
            fold(&mut table, &solid.boundary, edge)?;
            Ok(table)
        }
    }
}
