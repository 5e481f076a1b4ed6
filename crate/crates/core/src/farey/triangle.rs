use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::slope::{is_farey_edge, orientation, Slope};
use crate::error::{Error, Result};
use crate::parse::Cursor;

/// Three pairwise Farey-adjacent slopes: an ideal triangle of the Farey
/// tessellation, a one-vertex triangulation of the torus, and a vertex of
/// the dual Farey tree.
///
/// Vertices are stored in increasing order with `∞` last, which is also
/// their positive cyclic order, so equal triangles compare and hash equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyTriangle {
    v: [Slope; 3],
}

impl FareyTriangle {
    pub fn new(a: Slope, b: Slope, c: Slope) -> Result<Self> {
        if !(is_farey_edge(&a, &b) && is_farey_edge(&b, &c) && is_farey_edge(&a, &c)) {
            return Err(Error::NotFareyTriangle(format!("{{{a}, {b}, {c}}}")));
        }
        let mut v = [a, b, c];
        v.sort();
        Ok(Self { v })
    }

    /// The triangle `{0, 1, ∞}`.
    pub fn base() -> Self {
        Self {
            v: [Slope::integer(0), Slope::integer(1), Slope::infinity()],
        }
    }

    /// Vertices in positive cyclic order.
    pub fn vertices(&self) -> &[Slope; 3] {
        &self.v
    }

    pub fn contains(&self, s: &Slope) -> bool {
        self.v.contains(s)
    }

    /// Position of `s` among the vertices.
    pub fn index_of(&self, s: &Slope) -> Option<usize> {
        self.v.iter().position(|x| x == s)
    }

    /// The triangle on the other side of the edge opposite `v[i]`.
    pub fn flip(&self, i: usize) -> Self {
        let (x, y) = (&self.v[(i + 1) % 3], &self.v[(i + 2) % 3]);
        let (sum, diff) = x.sum_and_difference(y);
        let apex = if sum == self.v[i] { diff } else { sum };
        Self::new(x.clone(), y.clone(), apex).expect("flip of a Farey triangle is a Farey triangle")
    }

    /// The triangle across the edge opposite vertex `s`.
    pub fn flip_vertex(&self, s: &Slope) -> Result<Self> {
        let i = self.index_of(s).ok_or_else(|| Error::NotBoundaryEdge(s.to_string()))?;
        Ok(self.flip(i))
    }

    /// The three neighbours in the Farey tree, across the edges
    /// `{v0, v1}`, `{v1, v2}`, `{v0, v2}` in that order.
    pub fn neighbors(&self) -> [Self; 3] {
        [self.flip(2), self.flip(0), self.flip(1)]
    }

    /// The vertex shared by neither triangle's common edge, if the two
    /// triangles are adjacent: returns the index in `self` of the vertex not
    /// in `other`.
    pub fn adjacency(&self, other: &Self) -> Option<usize> {
        let missing: Vec<usize> = (0..3).filter(|&i| !other.contains(&self.v[i])).collect();
        (missing.len() == 1).then(|| missing[0])
    }

    /// Index of the vertex to flip in order to move one step towards `target`.
    ///
    /// The vertices of `target` not shared with `self` lie in exactly one of
    /// the three arcs cut off by the edges of `self`; that edge is crossed.
    fn step_towards(&self, target: &Self) -> usize {
        let outside: Vec<&Slope> = target.v.iter().filter(|w| !self.contains(w)).collect();
        debug_assert!(!outside.is_empty());
        let mut chosen = None;
        for i in 0..3 {
            let (x, y, z) = (&self.v[(i + 1) % 3], &self.v[(i + 2) % 3], &self.v[i]);
            let side = orientation(x, y, z);
            if outside.iter().all(|w| orientation(x, y, w) == -side) {
                assert!(chosen.is_none(), "two edges separate {self} from {target}");
                chosen = Some(i);
            }
        }
        chosen.unwrap_or_else(|| panic!("no edge of {self} separates it from {target}"))
    }
}

/// The geodesic in the Farey tree from `t1` to `t2`, both ends included.
pub fn tree_path(t1: &FareyTriangle, t2: &FareyTriangle) -> Vec<FareyTriangle> {
    let mut path = vec![t1.clone()];
    let mut cur = t1.clone();
    while cur != *t2 {
        cur = cur.flip(cur.step_towards(t2));
        path.push(cur.clone());
    }
    path
}

/// Graph distance in the Farey tree.
pub fn tree_distance(t1: &FareyTriangle, t2: &FareyTriangle) -> usize {
    tree_path(t1, t2).len() - 1
}

impl fmt::Display for FareyTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.v[0], self.v[1], self.v[2])
    }
}

impl FareyTriangle {
    pub(crate) fn parse_from(cur: &mut Cursor<'_>) -> Result<Self> {
        cur.skip_ws();
        let start = cur.pos();
        cur.expect('{')?;
        let a = Slope::parse_from(cur)?;
        cur.expect(',')?;
        let b = Slope::parse_from(cur)?;
        cur.expect(',')?;
        let c = Slope::parse_from(cur)?;
        cur.expect('}')?;
        Self::new(a, b, c).map_err(|e| Error::parse(start, e.to_string()))
    }
}

impl FromStr for FareyTriangle {
    type Err = Error;

    /// Parses `{a, b, c}` with slopes written as for [`Slope`].
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let t = Self::parse_from(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}

impl Serialize for FareyTriangle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FareyTriangle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
