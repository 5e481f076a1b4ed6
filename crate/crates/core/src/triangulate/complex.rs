//! Cell structure of the quotient space of a gluing table.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use super::perm::sequence_is_odd;
use super::snf::invariant_factors;
use super::table::GluingTable;
use crate::error::{Error, Result};

/// Edges of a tetrahedron as increasing vertex pairs.
pub(crate) const EDGES: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub(crate) fn edge_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    EDGES.iter().position(|&e| e == (a, b)).expect("distinct vertices")
}

fn face_vertices(f: u8) -> [u8; 3] {
    let mut out = [0u8; 3];
    let mut k = 0;
    for v in 0..4u8 {
        if v != f {
            out[k] = v;
            k += 1;
        }
    }
    out
}

/// Union-find with a parity bit relative to the parent.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    /// Records `parity(a) xor parity(b) = rel`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, rel: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        self.parity[hi] = pa ^ pb ^ rel;
        true
    }
}

/// Vertex, edge and face classes with orientation signs.
pub(crate) struct Complex {
    pub tets: usize,
    /// Class of vertex `4t + v`.
    pub vertex_class: Vec<usize>,
    pub vertex_count: usize,
    /// Class of edge `6t + e` and whether it runs against the class orientation.
    pub edge_class: Vec<(usize, bool)>,
    pub edge_count: usize,
    /// Representative `(tet, edge)` of each edge class.
    pub edge_rep: Vec<(usize, usize)>,
    /// Class of face `4t + f` and whether its sorted-vertex orientation is
    /// opposite to the class orientation.
    pub face_class: Vec<(usize, bool)>,
    pub face_count: usize,
    pub face_rep: Vec<(usize, u8)>,
    pub boundary_faces: Vec<(usize, u8)>,
    pub valid_edges: bool,
    pub orientable: bool,
}

impl Complex {
    pub fn new(table: &GluingTable) -> Result<Self> {
        table.check_involution()?;
        let n = table.len();
        let mut verts = ParityUnionFind::new(4 * n);
        let mut edges = ParityUnionFind::new(6 * n);
        let mut valid_edges = true;
        let mut face_class = vec![(usize::MAX, false); 4 * n];
        let mut face_rep = Vec::new();
        let mut boundary_faces = Vec::new();
        let mut sign: Vec<Option<bool>> = vec![None; n];
        let mut orientable = true;

        for i in 0..n {
            for f in 0..4u8 {
                let Some(g) = table.face(i, f) else {
                    face_class[4 * i + f as usize] = (face_rep.len(), false);
                    face_rep.push((i, f));
                    boundary_faces.push((i, f));
                    continue;
                };
                let j = g.tet;
                let gf = g.perm.apply(f);
                for v in face_vertices(f) {
                    verts.union(4 * i + v as usize, 4 * j + g.perm.apply(v) as usize, false);
                }
                for (a, b) in EDGES {
                    if a == f || b == f {
                        continue;
                    }
                    let (x, y) = (g.perm.apply(a), g.perm.apply(b));
                    let ok = edges.union(6 * i + edge_index(a, b), 6 * j + edge_index(x, y), x > y);
                    valid_edges &= ok;
                }
                if (i, f) < (j, gf) {
                    let class = face_rep.len();
                    face_rep.push((i, f));
                    face_class[4 * i + f as usize] = (class, false);
                    let inv = g.perm.inverse();
                    let pre: Vec<u8> = face_vertices(gf).iter().map(|&w| inv.apply(w)).collect();
                    face_class[4 * j + gf as usize] = (class, sequence_is_odd(&pre));
                }
            }
        }

        // orientation: an odd gluing joins tetrahedra of equal sign
        for start in 0..n {
            if sign[start].is_some() {
                continue;
            }
            sign[start] = Some(false);
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let si = sign[i].expect("visited");
                for g in table.tets[i].faces.iter().flatten() {
                    let want = si ^ !g.perm.is_odd();
                    match sign[g.tet] {
                        None => {
                            sign[g.tet] = Some(want);
                            stack.push(g.tet);
                        }
                        Some(s) if s != want => orientable = false,
                        Some(_) => {}
                    }
                }
            }
        }

        let mut vertex_index = BTreeMap::new();
        let vertex_class = (0..4 * n)
            .map(|x| {
                let root = verts.find(x).0;
                let next = vertex_index.len();
                *vertex_index.entry(root).or_insert(next)
            })
            .collect();
        let mut edge_index_map = BTreeMap::new();
        let mut edge_rep = Vec::new();
        let edge_class = (0..6 * n)
            .map(|x| {
                let (root, par) = edges.find(x);
                let next = edge_index_map.len();
                let class = *edge_index_map.entry(root).or_insert_with(|| {
                    edge_rep.push((root / 6, root % 6));
                    next
                });
                (class, par)
            })
            .collect();

        Ok(Self {
            tets: n,
            vertex_count: vertex_index.len(),
            vertex_class,
            edge_count: edge_index_map.len(),
            edge_class,
            edge_rep,
            face_count: face_rep.len(),
            face_class,
            face_rep,
            boundary_faces,
            valid_edges,
            orientable,
        })
    }

    fn edge(&self, t: usize, a: u8, b: u8) -> (usize, bool) {
        self.edge_class[6 * t + edge_index(a, b)]
    }

    pub fn euler(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count as i64 + self.face_count as i64 - self.tets as i64
    }

    /// Boundary components as groups of boundary faces joined along edges.
    pub fn boundary_components(&self) -> Vec<BoundaryComponent> {
        let faces = &self.boundary_faces;
        let mut uf = ParityUnionFind::new(faces.len());
        let mut by_edge: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, &(t, f)) in faces.iter().enumerate() {
            let vs = face_vertices(f);
            for (a, b) in [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])] {
                let e = self.edge(t, a, b).0;
                if let Some(&other) = by_edge.get(&e) {
                    uf.union(k, other, false);
                } else {
                    by_edge.insert(e, k);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..faces.len() {
            groups.entry(uf.find(k).0).or_default().push(k);
        }
        groups
            .values()
            .map(|members| {
                let mut edges = std::collections::BTreeSet::new();
                let mut verts = std::collections::BTreeSet::new();
                for &k in members {
                    let (t, f) = faces[k];
                    let vs = face_vertices(f);
                    for v in vs {
                        verts.insert(self.vertex_class[4 * t + v as usize]);
                    }
                    for (a, b) in [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])] {
                        edges.insert(self.edge(t, a, b).0);
                    }
                }
                BoundaryComponent {
                    faces: members.len(),
                    edges: edges.len(),
                    vertices: verts.len(),
                }
            })
            .collect()
    }

    /// Nonzero entries of the boundary map from `k`-cells to `(k-1)`-cells.
    fn boundary_entries(&self, k: usize) -> Vec<(usize, usize, BigInt)> {
        let sgn = |odd: bool| BigInt::from(if odd { -1 } else { 1 });
        let mut out = Vec::new();
        match k {
            3 => {
                for t in 0..self.tets {
                    for f in 0..4u8 {
                        let (class, odd) = self.face_class[4 * t + f as usize];
                        out.push((class, t, sgn(odd ^ (f % 2 == 1))));
                    }
                }
            }
            2 => {
                for (class, &(t, f)) in self.face_rep.iter().enumerate() {
                    let [a, b, c] = face_vertices(f);
                    for ((x, y), s) in [((b, c), false), ((a, c), true), ((a, b), false)] {
                        let (e, odd) = self.edge(t, x, y);
                        out.push((e, class, sgn(odd ^ s)));
                    }
                }
            }
            1 => {
                for (class, &(t, e)) in self.edge_rep.iter().enumerate() {
                    let (a, b) = EDGES[e];
                    out.push((self.vertex_class[4 * t + b as usize], class, BigInt::from(1)));
                    out.push((self.vertex_class[4 * t + a as usize], class, BigInt::from(-1)));
                }
            }
            _ => unreachable!(),
        }
        out
    }

    pub fn homology(&self) -> Result<HomologyProfile> {
        if !self.valid_edges {
            return Err(Error::InvalidTable(
                "an edge is identified with itself in reverse".into(),
            ));
        }
        let dims = [self.vertex_count, self.edge_count, self.face_count, self.tets];
        // factors[k] are the invariant factors of the map C_k -> C_{k-1}
        let mut factors: [Vec<BigInt>; 5] = Default::default();
        for k in 1..=3 {
            factors[k] = invariant_factors(dims[k - 1], dims[k], self.boundary_entries(k));
        }
        let mut betti = [0usize; 4];
        let mut torsion: [Vec<BigInt>; 4] = Default::default();
        for k in 0..4 {
            betti[k] = dims[k] - factors[k].len() - factors[k + 1].len();
            torsion[k] = factors[k + 1]
                .iter()
                .filter(|d| **d > BigInt::from(1))
                .cloned()
                .collect();
        }
        Ok(HomologyProfile { betti, torsion })
    }
}

/// Combinatorics of one boundary surface.
#[serde_as]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryComponent {
    #[serde_as(as = "DisplayFromStr")]
    pub faces: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub edges: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub vertices: usize,
}

impl BoundaryComponent {
    /// Two triangles, three edges and one vertex.
    pub fn is_one_vertex_torus(&self) -> bool {
        (self.faces, self.edges, self.vertices) == (2, 3, 1)
    }
}

/// Integer homology `H_k = Z^{b_k} ⊕ Z/d_1 ⊕ ...` for `k = 0..=3`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    #[serde_as(as = "[DisplayFromStr; 4]")]
    pub betti: [usize; 4],
    #[serde_as(as = "[Vec<DisplayFromStr>; 4]")]
    pub torsion: [Vec<BigInt>; 4],
}

impl HomologyProfile {
    /// `H_k` written as `0`, `Z`, `Z^2 + Z/2`, and so on.
    pub fn group(&self, k: usize) -> String {
        let mut parts = Vec::new();
        match self.betti[k] {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion[k].iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// True when `H_k` is `Z^betti` plus exactly the given torsion.
    pub fn is(&self, k: usize, betti: usize, torsion: &[i64]) -> bool {
        self.betti[k] == betti
            && self.torsion[k]
                .iter()
                .eq(torsion.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>().iter())
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<String> = (0..4).map(|k| format!("H{k} = {}", self.group(k))).collect();
        f.write_str(&groups.join(", "))
    }
}
