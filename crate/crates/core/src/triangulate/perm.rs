use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of the tetrahedron vertices `{0, 1, 2, 3}`, stored as the
/// images of `0, 1, 2, 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; 4]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &x in &images {
            if x > 3 || seen[x as usize] {
                return Err(Error::InvalidTable(format!("{images:?} is not a permutation of 0..4")));
            }
            seen[x as usize] = true;
        }
        Ok(Self(images))
    }

    /// The permutation sending `from[k]` to `to[k]`, extended to the
    /// remaining vertex.
    pub fn from_triples(from: [u8; 3], to: [u8; 3]) -> Self {
        let mut images = [0u8; 4];
        for k in 0..3 {
            images[from[k] as usize] = to[k];
        }
        images[missing(from) as usize] = missing(to);
        Self::new(images).expect("distinct triples define a permutation")
    }

    pub fn apply(&self, v: u8) -> u8 {
        self.0[v as usize]
    }

    pub fn images(&self) -> [u8; 4] {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0u8; 4];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Self(inv)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Perm) -> Self {
        Self(other.0.map(|x| self.0[x as usize]))
    }

    pub fn is_odd(&self) -> bool {
        sequence_is_odd(&self.0)
    }
}

/// The vertex of `{0, 1, 2, 3}` not among three distinct ones.
pub(crate) fn missing(triple: [u8; 3]) -> u8 {
    6 - triple.iter().sum::<u8>()
}

/// Parity of a sequence of distinct integers relative to its sorted order.
pub(crate) fn sequence_is_odd(seq: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Four digits such as `0132`.
    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::parse(0, format!("'{s}' is not a permutation")))?;
        let images: [u8; 4] = digits
            .try_into()
            .map_err(|_| Error::parse(0, format!("'{s}' must have four digits")))?;
        Self::new(images).map_err(|_| Error::parse(0, format!("'{s}' is not a permutation of 0123")))
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let p: Perm = "1023".parse().unwrap();
        assert!(p.is_odd());
        assert_eq!(p.compose(&p), Perm::IDENTITY);
        let q: Perm = "1230".parse().unwrap();
        assert!(q.is_odd());
        assert_eq!(q.compose(&q.inverse()), Perm::IDENTITY);
        assert_eq!(q.compose(&p).apply(0), q.apply(p.apply(0)));
        assert!(!"1203".parse::<Perm>().unwrap().is_odd());
        assert!("0012".parse::<Perm>().is_err());
        assert!("012".parse::<Perm>().is_err());
    }

    #[test]
    fn from_triples_extends() {
        let p = Perm::from_triples([0, 2, 1], [3, 1, 0]);
        assert_eq!(p.images(), [3, 0, 1, 2]);
        assert_eq!(missing([0, 2, 3]), 1);
    }
}
