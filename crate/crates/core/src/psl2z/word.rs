use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    T,
    /// `T^-1`, which equals `T^2`.
    TInv,
}

impl Letter {
    pub fn inverse(self) -> Self {
        match self {
            Letter::S => Letter::S,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }

    pub fn is_t(self) -> bool {
        !matches!(self, Letter::S)
    }

    fn t_exponent(self) -> u8 {
        match self {
            Letter::S => 0,
            Letter::T => 1,
            Letter::TInv => 2,
        }
    }

    pub fn matrix(self) -> IntMatrix {
        match self {
            Letter::S => IntMatrix::s(),
            Letter::T => IntMatrix::t(),
            Letter::TInv => IntMatrix::new(-1, 1, -1, 0),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::S => "S",
            Letter::T => "T",
            Letter::TInv => "T'",
        })
    }
}

/// A reduced word in `S`, `T`, `T'` naming an element of `PSL(2,Z)`.
///
/// Construction applies `SS = 1` and `T^3 = 1` until nothing changes, so the
/// stored letters alternate between `S` and a `T`-letter. Such a word is the
/// normal form of its group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for letter in letters {
            push_reduced(&mut stack, letter);
        }
        Self { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self::from_letters(self.letters.iter().rev().map(|l| l.inverse()))
    }

    pub fn pow(&self, n: usize) -> Self {
        Self::from_letters(std::iter::repeat_n(self.letters.iter().copied(), n).flatten())
    }

    /// Rotation starting at letter `k`.
    pub fn rotate(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Self::from_letters(letters)
    }

    /// True when `other` is a cyclic rotation of `self`.
    pub fn is_rotation_of(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        (0..self.len()).any(|k| (0..self.len()).all(|i| self.letters[(i + k) % self.len()] == other.letters[i]))
    }

    /// True when no cyclic rotation admits a further reduction.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(first), Some(last)) if self.len() >= 2 => first.is_t() != last.is_t(),
            _ => true,
        }
    }

    pub fn to_matrix(&self) -> IntMatrix {
        word_to_matrix(self)
    }
}

fn push_reduced(stack: &mut Vec<Letter>, letter: Letter) {
    match (stack.last().copied(), letter) {
        (Some(Letter::S), Letter::S) => {
            stack.pop();
        }
        (Some(top), l) if top.is_t() && l.is_t() => {
            stack.pop();
            match (top.t_exponent() + l.t_exponent()) % 3 {
                0 => {}
                1 => push_reduced(stack, Letter::T),
                _ => push_reduced(stack, Letter::TInv),
            }
        }
        _ => stack.push(letter),
    }
}

impl Mul for &GroupWord {
    type Output = GroupWord;
    fn mul(self, rhs: &GroupWord) -> GroupWord {
        GroupWord::from_letters(self.letters.iter().chain(rhs.letters.iter()).copied())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Parses strings such as `"T'STS"`; `"1"` or the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut chars = s.char_indices().peekable();
        while let Some((i, c)) = chars.next() {
            match c {
                'S' => letters.push(Letter::S),
                'T' => {
                    if matches!(chars.peek(), Some((_, '\''))) {
                        chars.next();
                        letters.push(Letter::TInv);
                    } else {
                        letters.push(Letter::T);
                    }
                }
                '1' if s.trim() == "1" => {}
                c if c.is_whitespace() => {}
                _ => return Err(Error::parse(i, format!("unexpected character '{c}'"))),
            }
        }
        Ok(Self::from_letters(letters))
    }
}

/// Product of the letters, sign-normalized in `PSL(2,Z)`.
pub fn word_to_matrix(w: &GroupWord) -> IntMatrix {
    w.letters
        .iter()
        .fold(IntMatrix::identity(), |acc, l| &acc * &l.matrix())
        .psl_normalized()
}

/// Writes an `SL(2,Z)` matrix as a reduced word by Euclidean row reduction.
///
/// Each round peels off `R^k S` with `R = [[1,1],[0,1]]`, where
/// `R^-k S A = [[c, d], [-(a - kc), -(b - kd)]]` has a strictly smaller
/// lower-left entry. `R^k` is spelled `(T'S)^k` and `R^-k` as `(ST)^k`.
pub fn matrix_to_word(m: &IntMatrix) -> Result<GroupWord> {
    m.require_sl2()?;
    let mut letters: Vec<Letter> = Vec::new();
    let mut cur = m.clone();
    let push_r_power = |letters: &mut Vec<Letter>, k: &num_bigint::BigInt| {
        let n = k.abs().to_usize().expect("row reduction exponent fits in usize");
        for _ in 0..n {
            if k.is_positive() {
                letters.extend([Letter::TInv, Letter::S]);
            } else {
                letters.extend([Letter::S, Letter::T]);
            }
        }
    };
    while !cur.c.is_zero() {
        let k = cur.a.div_floor(&cur.c);
        let a1 = &cur.a - &k * &cur.c;
        let b1 = &cur.b - &k * &cur.d;
        push_r_power(&mut letters, &k);
        letters.push(Letter::S);
        cur = IntMatrix {
            a: cur.c.clone(),
            b: cur.d.clone(),
            c: -a1,
            d: -b1,
        };
    }
    // cur = +-[[1, m], [0, 1]]
    let m_exp = if cur.a.is_positive() {
        cur.b.clone()
    } else {
        -cur.b.clone()
    };
    push_r_power(&mut letters, &m_exp);
    Ok(GroupWord::from_letters(letters))
}

/// Conjugates away matching end letters until the word is cyclically reduced.
pub fn cyclic_reduce(w: &GroupWord) -> GroupWord {
    let mut cur = w.clone();
    while cur.len() >= 2 && !cur.is_cyclically_reduced() {
        cur = cur.rotate(1);
    }
    cur
}

/// Length of a cyclically reduced word conjugate to the image of `m` in `PSL(2,Z)`.
pub fn word_length(m: &IntMatrix) -> Result<usize> {
    Ok(cyclic_reduce(&matrix_to_word(m)?).len())
}

/// Writes a cyclically reduced word as `B^n` with `n` maximal.
pub fn primitive_root(w: &GroupWord) -> Result<(GroupWord, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let len = w.len();
    for k in 1..=len {
        if !len.is_multiple_of(k) {
            continue;
        }
        let periodic = (k..len).all(|i| w.letters[i] == w.letters[i - k]);
        if periodic {
            let root = GroupWord {
                letters: w.letters[..k].to_vec(),
            };
            return Ok((root, len / k));
        }
    }
    unreachable!("k = len always succeeds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn w(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn construction_reduces() {
        assert_eq!(GroupWord::from_letters([S, S]), GroupWord::identity());
        assert_eq!(GroupWord::from_letters([T, T]), w("T'"));
        assert_eq!(GroupWord::from_letters([TInv, TInv]), w("T"));
        assert_eq!(GroupWord::from_letters([T, TInv]), GroupWord::identity());
        assert_eq!(GroupWord::from_letters([T, T, T]), GroupWord::identity());
        assert_eq!(GroupWord::from_letters([S, T, TInv, S, T]), w("T"));
    }

    #[test]
    fn word_to_matrix_examples() {
        // T^2 S by hand: [[-1,1],[-1,0]] [[0,-1],[1,0]] = [[1,1],[0,1]]
        assert_eq!(word_to_matrix(&w("T'S")), IntMatrix::new(1, 1, 0, 1));
        assert_eq!(word_to_matrix(&GroupWord::identity()), IntMatrix::identity());
        assert_eq!(word_to_matrix(&w("T'STS")), IntMatrix::new(2, 1, 1, 1));
    }

    #[test]
    fn matrix_to_word_examples() {
        assert_eq!(matrix_to_word(&IntMatrix::new(1, 1, 0, 1)).unwrap(), w("T'S"));
        assert_eq!(matrix_to_word(&IntMatrix::identity()).unwrap(), GroupWord::identity());
        assert_eq!(matrix_to_word(&IntMatrix::new(2, 1, 1, 1)).unwrap(), w("T'STS"));
        assert_eq!(
            matrix_to_word(&IntMatrix::new(-1, 0, 0, -1)).unwrap(),
            GroupWord::identity()
        );
        assert!(matrix_to_word(&IntMatrix::new(2, 0, 0, 1)).is_err());
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(cyclic_reduce(&w("STS")), w("T"));
        assert_eq!(cyclic_reduce(&w("T'STS")), w("T'STS"));
        assert_eq!(cyclic_reduce(&w("TST'")), w("S"));
        assert_eq!(cyclic_reduce(&w("TSTST")), w("STST'"));
    }

    #[test]
    fn word_length_examples() {
        assert_eq!(word_length(&IntMatrix::new(2, 1, 1, 1)).unwrap(), 4);
        assert_eq!(word_length(&IntMatrix::identity()).unwrap(), 0);
        assert_eq!(word_length(&IntMatrix::new(1, 1, 0, 1)).unwrap(), 2);
        assert_eq!(word_length(&IntMatrix::new(3, 1, 2, 1)).unwrap(), 6);
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(&w("T'STS")).unwrap(), (w("T'STS"), 1));
        assert_eq!(primitive_root(&w("T'ST'S")).unwrap(), (w("T'S"), 2));
        assert_eq!(primitive_root(&w("STSTST")).unwrap(), (w("ST"), 3));
        assert_eq!(primitive_root(&GroupWord::identity()), Err(Error::EmptyWord));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("T'STS").to_string(), "T'STS");
        assert_eq!(GroupWord::identity().to_string(), "1");
        assert_eq!(w("1"), GroupWord::identity());
        assert!(matches!(
            "TSX".parse::<GroupWord>(),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn rotations() {
        assert!(w("T'STS").is_rotation_of(&w("STST'")));
        assert!(w("T'STS").is_rotation_of(&w("TST'S")));
        assert!(!w("T'STS").is_rotation_of(&w("TSTS")));
    }
}
