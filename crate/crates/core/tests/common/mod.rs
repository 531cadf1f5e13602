//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's inversion or enumeration code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use tabinv_core::numbers::{compositions, partitions};
use tabinv_core::{Content, Filling, QPolynomial, Shape};

pub fn fill(rows: &[&[u32]]) -> Filling {
    Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn poly(c: &[i64]) -> QPolynomial {
    QPolynomial::from_coeffs(c.iter().copied())
}

pub fn shapes(n: usize) -> Vec<Shape> {
    partitions(n).into_iter().map(|p| Shape::new(p).unwrap()).collect()
}

/// Contents of size `n` with every multiplicity at most two.
pub fn small_contents(n: usize) -> Vec<Content> {
    compositions(n, 2).into_iter().map(|c| Content::new(c).unwrap()).collect()
}

pub fn all_contents(n: usize) -> Vec<Content> {
    compositions(n, n).into_iter().map(|c| Content::new(c).unwrap()).collect()
}

/// Cells `(row, col)` of an inversion pair read straight off the four-case
/// definition: `i < j` in one column, compared along their rows to the right.
pub fn direct_inversions(rows: &[Vec<u32>]) -> Vec<((usize, usize), (usize, usize))> {
    let mut out = Vec::new();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for c in 0..width {
        let col: Vec<usize> = (0..rows.len()).filter(|&r| rows[r].len() > c).collect();
        for &ri in &col {
            for &rj in &col {
                if rows[ri][c] >= rows[rj][c] {
                    continue;
                }
                let mut k = 1;
                let inverted = loop {
                    match (rows[ri].get(c + k), rows[rj].get(c + k)) {
                        (Some(a), Some(b)) if a == b => k += 1,
                        (Some(a), Some(b)) => break a > b,
                        _ => break ri > rj,
                    }
                };
                if inverted {
                    out.push(((ri, c), (rj, c)));
                }
            }
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut k = n - 1;
    while v[k] <= v[i - 1] {
        k -= 1;
    }
    v.swap(i - 1, k);
    v[i..].reverse();
    true
}

/// Every row-standard filling of the shape with the content, found by
/// permuting the whole multiset.
pub fn row_standard_fillings(shape: &Shape, content: &Content) -> Vec<Vec<Vec<u32>>> {
    let mut flat = content.values();
    let mut out = Vec::new();
    loop {
        let mut rows = Vec::new();
        let mut at = 0;
        for &p in shape.parts() {
            rows.push(flat[at..at + p].to_vec());
            at += p;
        }
        if rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1])) {
            out.push(rows);
        }
        if !next_permutation(&mut flat) {
            break;
        }
    }
    out
}

/// Inversion histogram from the two functions above.
pub fn direct_histogram(shape: &Shape, content: &Content) -> Vec<u64> {
    let mut h: BTreeMap<usize, u64> = BTreeMap::new();
    for rows in row_standard_fillings(shape, content) {
        *h.entry(direct_inversions(&rows).len()).or_default() += 1;
    }
    let max = h.keys().next_back().copied().unwrap_or(0);
    (0..=max).map(|k| h.get(&k).copied().unwrap_or(0)).collect()
}

pub fn to_u64(p: &QPolynomial) -> Vec<u64> {
    p.coeffs().iter().map(|c| u64::try_from(c).unwrap()).collect()
}
