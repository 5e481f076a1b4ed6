//! Smith normal form over the integers.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) of an integer
/// matrix given by its nonzero entries `(row, col, value)`; `r` is the rank.
///
/// Unit pivots are eliminated first on a sparse representation, which
/// removes almost everything for boundary matrices of triangulations; what
/// remains is reduced densely.
pub fn invariant_factors(
    rows: usize,
    cols: usize,
    entries: impl IntoIterator<Item = (usize, usize, BigInt)>,
) -> Vec<BigInt> {
    let mut m = Sparse::new(rows, cols);
    for (r, c, v) in entries {
        m.add(r, c, v);
    }
    let mut factors = Vec::new();
    while let Some((r, c)) = m.unit_pivot() {
        m.eliminate(r, c);
        factors.push(BigInt::one());
    }
    let dense = m.remaining();
    factors.extend(dense_diagonal(dense));
    normalize(factors)
}

/// Invariant factors of a dense matrix.
pub fn smith_invariant_factors(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let cols = matrix.first().map_or(0, Vec::len);
    let entries = matrix.iter().enumerate().flat_map(|(r, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(c, v)| (r, c, v.clone()))
    });
    invariant_factors(matrix.len(), cols, entries)
}

struct Sparse {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Sparse {
    fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BTreeMap::new(); rows],
            col_rows: vec![BTreeSet::new(); cols],
        }
    }

    fn add(&mut self, r: usize, c: usize, v: BigInt) {
        let e = self.rows[r].entry(c).or_insert_with(BigInt::zero);
        *e += v;
        if e.is_zero() {
            self.rows[r].remove(&c);
            self.col_rows[c].remove(&r);
        } else {
            self.col_rows[c].insert(r);
        }
    }

    /// A `±1` entry minimizing the fill-in estimate.
    fn unit_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), usize)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                if v.abs().is_one() {
                    let cost = (row.len() - 1) * (self.col_rows[c].len() - 1);
                    if best.is_none_or(|(_, b)| cost < b) {
                        best = Some(((r, c), cost));
                        if cost == 0 {
                            return Some((r, c));
                        }
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// Clears column `c` with row `r` and drops both.
    fn eliminate(&mut self, r: usize, c: usize) {
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for &col in pivot_row.keys() {
            self.col_rows[col].remove(&r);
        }
        let unit = pivot_row[&c].clone();
        let others: Vec<usize> = self.col_rows[c].iter().copied().collect();
        for r2 in others {
            let factor = &self.rows[r2][&c] * &unit;
            for (&col, v) in &pivot_row {
                self.add(r2, col, -(&factor * v));
            }
        }
        debug_assert!(self.col_rows[c].is_empty());
    }

    fn remaining(&self) -> Vec<Vec<BigInt>> {
        let cols: Vec<usize> = (0..self.col_rows.len())
            .filter(|&c| !self.col_rows[c].is_empty())
            .collect();
        let index: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.rows
            .iter()
            .filter(|row| !row.is_empty())
            .map(|row| {
                let mut dense = vec![BigInt::zero(); cols.len()];
                for (c, v) in row {
                    dense[index[c]] = v.clone();
                }
                dense
            })
            .collect()
    }
}

/// Diagonalizes by unimodular row and column operations and returns the
/// nonzero diagonal entries (not yet in divisibility order).
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pr, pc)) = min_entry(&a, k) else { break };
        a.swap(k, pr);
        for row in a.iter_mut() {
            row.swap(k, pc);
        }
        loop {
            let mut done = true;
            for r in k + 1..rows {
                if a[r][k].is_zero() {
                    continue;
                }
                let q = a[r][k].div_floor(&a[k][k]);
                let (upper, lower) = a.split_at_mut(r);
                for (x, p) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                    *x -= &q * p;
                }
                if !a[r][k].is_zero() {
                    done = false;
                }
            }
            for c in k + 1..cols {
                if a[k][c].is_zero() {
                    continue;
                }
                let q = a[k][c].div_floor(&a[k][k]);
                for row in a.iter_mut().skip(k) {
                    let t = &q * &row[k];
                    row[c] -= t;
                }
                if !a[k][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
            // move the smallest entry of row/column k to the pivot
            let mut best = (k, k);
            for r in k..rows {
                if !a[r][k].is_zero() && a[r][k].abs() < a[best.0][best.1].abs() {
                    best = (r, k);
                }
            }
            for c in k..cols {
                if !a[k][c].is_zero() && a[k][c].abs() < a[best.0][best.1].abs() {
                    best = (k, c);
                }
            }
            a.swap(k, best.0);
            for row in a.iter_mut() {
                row.swap(k, best.1);
            }
        }
        diag.push(a[k][k].abs());
        k += 1;
    }
    diag
}

fn min_entry(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(k) {
        for (c, v) in row.iter().enumerate().skip(k) {
            if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

/// Turns a diagonal into invariant factors by replacing pairs with their
/// gcd and lcm.
fn normalize(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        smith_invariant_factors(&m(rows))
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factors(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(factors(&[&[1, 1], &[1, -1]]), vec![1, 2]);
        assert_eq!(factors(&[&[0, 0], &[0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[&[6, 0], &[0, 4]]), vec![2, 12]);
        assert_eq!(factors(&[&[5]]), vec![5]);
        assert_eq!(factors(&[&[2, 3]]), vec![1]);
    }

    #[test]
    fn determinant_is_preserved() {
        // |det| = product of invariant factors for nonsingular matrices
        let a = m(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        let det = 3 * (5 * 5 - 9 * 6) - (5 - 18) + 4 * (6 - 10);
        let prod: BigInt = smith_invariant_factors(&a).iter().product();
        assert_eq!(prod, BigInt::from(det).abs());
    }
}
