//! Oracles and generators shared by the integration tests. Nothing here
//! calls the code paths it is used to check.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tricomplex::arith::{QuadraticNumber, Rational};
use tricomplex::psl2z::{GroupWord, Letter};
use tricomplex::FareyTriangle;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// A uniformly random letter string of length `1..=max_len`, reduced on construction.
pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> GroupWord {
    let len = rng.gen_range(1..=max_len);
    GroupWord::from_letters((0..len).map(|_| match rng.gen_range(0..3) {
        0 => Letter::S,
        1 => Letter::T,
        _ => Letter::TInv,
    }))
}

/// Breadth-first search of the Farey tree from `{0, 1, ∞}` using only
/// `neighbors`, recording depth and parent.
pub struct BfsTree {
    pub depth: HashMap<FareyTriangle, usize>,
    pub parent: HashMap<FareyTriangle, FareyTriangle>,
    pub order: Vec<FareyTriangle>,
}

impl BfsTree {
    pub fn new(radius: usize) -> Self {
        let root = FareyTriangle::base();
        let mut depth = HashMap::from([(root.clone(), 0)]);
        let mut parent = HashMap::new();
        let mut order = vec![root.clone()];
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            let d = depth[&t];
            if d == radius {
                continue;
            }
            for n in t.neighbors() {
                if !depth.contains_key(&n) {
                    depth.insert(n.clone(), d + 1);
                    parent.insert(n.clone(), t.clone());
                    order.push(n.clone());
                    queue.push_back(n);
                }
            }
        }
        Self { depth, parent, order }
    }

    /// Distance through the lowest common ancestor in the BFS tree.
    pub fn distance(&self, a: &FareyTriangle, b: &FareyTriangle) -> usize {
        let (mut x, mut y) = (a.clone(), b.clone());
        let mut steps = 0;
        while self.depth[&x] > self.depth[&y] {
            x = self.parent[&x].clone();
            steps += 1;
        }
        while self.depth[&y] > self.depth[&x] {
            y = self.parent[&y].clone();
            steps += 1;
        }
        while x != y {
            x = self.parent[&x].clone();
            y = self.parent[&y].clone();
            steps += 2;
        }
        steps
    }
}

fn mat_mul(a: [BigInt; 4], b: &[BigInt; 4]) -> [BigInt; 4] {
    [
        &a[0] * &b[0] + &a[1] * &b[2],
        &a[0] * &b[1] + &a[1] * &b[3],
        &a[2] * &b[0] + &a[3] * &b[2],
        &a[2] * &b[1] + &a[3] * &b[3],
    ]
}

/// Product of `[[a, 1], [1, 0]]` over the digits.
fn digits_matrix(digits: &[BigInt]) -> [BigInt; 4] {
    digits.iter().fold([big(1), big(0), big(0), big(1)], |acc, a| {
        mat_mul(acc, &[a.clone(), big(1), big(1), big(0)])
    })
}

/// Checks that `pre; (period)` is a root of `q x² - 2 p x + (p² - d)/q`,
/// taking the purely periodic tail as the fixed point of the period's
/// Möbius map and never calling the expansion code.
pub fn periodic_expansion_solves(pre: &[BigInt], period: &[BigInt], p: &BigInt, d: &BigInt, q: &BigInt) -> bool {
    let m = digits_matrix(period);
    // tail y > 1 solves m21 y² + (m22 - m11) y - m12 = 0
    let disc: BigInt = (&m[3] - &m[0]) * (&m[3] - &m[0]) + BigInt::from(4) * &m[2] * &m[1];
    let y = QuadraticNumber::new(
        Rational::new(&m[0] - &m[3], BigInt::from(2) * &m[2]),
        Rational::new(big(1), BigInt::from(2) * &m[2]),
        disc.clone(),
    );
    let pm = digits_matrix(pre);
    let c = |x: &BigInt| QuadraticNumber::from_rational(Rational::from_integer(x.clone()), disc.clone());
    let num = &(&c(&pm[0]) * &y) + &c(&pm[1]);
    let den = &(&c(&pm[2]) * &y) + &c(&pm[3]);
    let rest: BigInt = (p * p - d).div_floor(q);
    assert!((p * p - d).is_multiple_of(q));
    let lhs =
        &(&(&c(q) * &(&num * &num)) - &(&c(&(BigInt::from(2) * p)) * &(&num * &den))) + &(&c(&rest) * &(&den * &den));
    lhs.is_zero()
}

/// Invariant factors of a 2×2 integer matrix from `gcd` of the entries and
/// the determinant.
pub fn coker_2x2(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> (usize, Vec<BigInt>) {
    let g = a.gcd(b).gcd(c).gcd(d);
    let det: BigInt = (a * d - b * c).abs();
    if g.is_zero() {
        return (2, vec![]);
    }
    if det.is_zero() {
        return (1, if g > big(1) { vec![g] } else { vec![] });
    }
    let d2 = &det / &g;
    (0, [g, d2].into_iter().filter(|x| *x > big(1)).collect())
}
