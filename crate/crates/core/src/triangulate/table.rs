use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::parse::Cursor;

/// Where a face of a tetrahedron goes: vertex `v` of this tetrahedron is
/// identified with vertex `perm(v)` of tetrahedron `tet`, so face `f` is
/// glued to face `perm(f)` there.
#[serde_as]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gluing {
    #[serde_as(as = "DisplayFromStr")]
    pub tet: usize,
    pub perm: Perm,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tetrahedron {
    /// Face `f` is the face opposite vertex `f`; `None` is boundary.
    pub faces: [Option<Gluing>; 4],
}

/// A triangulation given by face pairings between tetrahedra.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GluingTable {
    pub tets: Vec<Tetrahedron>,
}

impl GluingTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.tets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tets.is_empty()
    }

    pub fn add_tetrahedron(&mut self) -> usize {
        self.tets.push(Tetrahedron::default());
        self.tets.len() - 1
    }

    pub fn face(&self, tet: usize, face: u8) -> Option<Gluing> {
        self.tets[tet].faces[face as usize]
    }

    /// Glues face `face` of `tet` to face `perm(face)` of `target`, setting
    /// both directions. Both faces must currently be boundary.
    pub fn glue(&mut self, tet: usize, face: u8, target: usize, perm: Perm) -> Result<()> {
        let back = perm.apply(face);
        if tet >= self.len() || target >= self.len() {
            return Err(Error::InvalidTable(format!(
                "tetrahedron index out of range in {tet} -> {target}"
            )));
        }
        if tet == target && back == face {
            return Err(Error::InvalidTable(format!(
                "face {face} of tetrahedron {tet} glued to itself"
            )));
        }
        if self.face(tet, face).is_some() || self.face(target, back).is_some() {
            return Err(Error::InvalidTable(format!(
                "face {face} of tetrahedron {tet} or face {back} of tetrahedron {target} is already glued"
            )));
        }
        self.tets[tet].faces[face as usize] = Some(Gluing { tet: target, perm });
        self.tets[target].faces[back as usize] = Some(Gluing {
            tet,
            perm: perm.inverse(),
        });
        Ok(())
    }

    /// Appends the tetrahedra of `other`, returning the index offset.
    pub fn append(&mut self, other: &GluingTable) -> usize {
        let offset = self.len();
        for t in &other.tets {
            let faces = t.faces.map(|g| {
                g.map(|g| Gluing {
                    tet: g.tet + offset,
                    perm: g.perm,
                })
            });
            self.tets.push(Tetrahedron { faces });
        }
        offset
    }

    /// Checks that every gluing is paired with its inverse and that no face
    /// is glued to itself.
    pub fn check_involution(&self) -> Result<()> {
        for (i, t) in self.tets.iter().enumerate() {
            for f in 0..4u8 {
                let Some(g) = t.faces[f as usize] else { continue };
                if g.tet >= self.len() {
                    return Err(Error::InvalidTable(format!(
                        "tet {i} face {f} points to missing tetrahedron {}",
                        g.tet
                    )));
                }
                let back_face = g.perm.apply(f);
                if g.tet == i && back_face == f {
                    return Err(Error::InvalidTable(format!("tet {i} face {f} is glued to itself")));
                }
                let expected = Gluing {
                    tet: i,
                    perm: g.perm.inverse(),
                };
                if self.face(g.tet, back_face) != Some(expected) {
                    return Err(Error::InvalidTable(format!(
                        "tet {i} face {f} -> tet {} face {back_face} is not matched by the reverse gluing",
                        g.tet
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("gluing tables serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse(0, e.to_string()))
    }
}

impl fmt::Display for GluingTable {
    /// One line per tetrahedron, e.g. `tet 0: 1(0132) 1(1023) bdry bdry`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tets.iter().enumerate() {
            write!(f, "tet {i}:")?;
            for face in &t.faces {
                match face {
                    Some(g) => write!(f, " {}({})", g.tet, g.perm)?,
                    None => write!(f, " bdry")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for GluingTable {
    type Err = Error;

    /// Parses the text format written by `Display`. Positions in errors are
    /// byte offsets into the input. The involution property is not checked
    /// here; see [`GluingTable::check_involution`].
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut tets = Vec::new();
        while !cur.at_end() {
            if !cur.eat_word("tet") {
                return Err(cur.error("expected 'tet'"));
            }
            cur.skip_ws();
            let at = cur.pos();
            let index = cur.integer()?;
            if index.to_usize() != Some(tets.len()) {
                return Err(Error::parse(at, format!("expected tetrahedron index {}", tets.len())));
            }
            cur.expect(':')?;
            let mut faces = [None; 4];
            for face in &mut faces {
                if cur.eat_word("bdry") {
                    continue;
                }
                cur.skip_ws();
                let at = cur.pos();
                let target = cur
                    .integer()?
                    .to_usize()
                    .ok_or_else(|| Error::parse(at, "tetrahedron index out of range"))?;
                cur.expect('(')?;
                cur.skip_ws();
                let at = cur.pos();
                let digits = cur
                    .raw(4)
                    .ok_or_else(|| Error::parse(at, "expected four permutation digits"))?;
                let perm: Perm = digits.parse().map_err(|e| match e {
                    Error::Parse { message, .. } => Error::parse(at, message),
                    other => other,
                })?;
                cur.expect(')')?;
                *face = Some(Gluing { tet: target, perm });
            }
            tets.push(Tetrahedron { faces });
        }
        Ok(Self { tets })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "tet 0: 1(0132) 1(0132) bdry bdry\ntet 1: 0(0132) 0(0132) bdry bdry\n";
        let t: GluingTable = text.parse().unwrap();
        assert_eq!(t.to_string(), text);
        assert!(t.check_involution().is_ok());
        let back = GluingTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "tet 0: 1(01x2) bdry bdry bdry".parse::<GluingTable>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("unexpected {other:?}"),
        }
        match "tet 1: bdry bdry bdry bdry".parse::<GluingTable>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("tet 0: bdry bdry bdry".parse::<GluingTable>().is_err());
    }

    #[test]
    fn detects_broken_involution() {
        let t: GluingTable = "tet 0: 1(0132) bdry bdry bdry\ntet 1: bdry bdry bdry bdry\n"
            .parse()
            .unwrap();
        assert!(t.check_involution().is_err());
        let mut t = GluingTable::new();
        t.add_tetrahedron();
        assert!(t.glue(0, 0, 0, Perm::IDENTITY).is_err());
        assert!(t.glue(0, 0, 0, "1023".parse().unwrap()).is_ok());
        assert!(t.check_involution().is_ok());
    }
}
