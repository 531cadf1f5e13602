//! Exhaustive generators for semistandard tableaux and inverted fillings.
//!
//! These only use the raw definitions (row/column order and inversion pairs
//! from the height order) and serve as the oracle for every formula in
//! [`crate::genfun`] and [`crate::dyck`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::tableau::{count_unchecked, Content, Filling, Shape};
use crate::{Error, Result};

/// Default bound on `N` for exhaustive enumeration.
pub const DEFAULT_CAP: usize = 10;

/// Size guard for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    Cap(usize),
    Unbounded,
}

impl Default for Limit {
    fn default() -> Self {
        Limit::Cap(DEFAULT_CAP)
    }
}

impl Limit {
    pub fn check(self, size: usize) -> Result<()> {
        match self {
            Limit::Cap(cap) if size > cap => Err(Error::CapExceeded { size, cap }),
            _ => Ok(()),
        }
    }
}

/// Semistandard tableaux of a shape and content, lexicographic by row-major
/// reading word.
#[derive(Debug, Clone)]
pub struct SemistandardTableaux {
    shape: Shape,
    content: Content,
    /// Start of each row in `vals`.
    row_start: Vec<usize>,
    /// (row, col) of each flat position, row-major.
    cells: Vec<(usize, usize)>,
    vals: Vec<u32>,
    remaining: Vec<usize>,
    started: bool,
    done: bool,
}

/// All `T ∈ S(λ, μ)`.
pub fn semistandard_tableaux(shape: &Shape, content: &Content) -> Result<SemistandardTableaux> {
    content.check_against(shape)?;
    let mut row_start = Vec::with_capacity(shape.num_rows());
    let mut cells = Vec::with_capacity(shape.size());
    for (i, &len) in shape.parts().iter().enumerate() {
        row_start.push(cells.len());
        cells.extend((0..len).map(|j| (i, j)));
    }
    Ok(SemistandardTableaux {
        shape: shape.clone(),
        content: content.clone(),
        row_start,
        vals: vec![0; cells.len()],
        cells,
        remaining: content.counts().to_vec(),
        started: false,
        done: false,
    })
}

/// All standard Young tableaux `S(λ)`.
pub fn standard_tableaux(shape: &Shape) -> SemistandardTableaux {
    semistandard_tableaux(shape, &Content::standard(shape.size())).expect("sizes agree")
}

impl SemistandardTableaux {
    fn fits(&self, pos: usize, v: u32) -> bool {
        let (i, j) = self.cells[pos];
        if j > 0 && self.vals[pos - 1] >= v {
            return false;
        }
        if i > 0 && self.vals[self.row_start[i - 1] + j] > v {
            return false;
        }
        true
    }

    fn search(&mut self, mut pos: usize) -> bool {
        let max = self.content.max_value();
        loop {
            let prev = self.vals[pos];
            if prev != 0 {
                self.remaining[prev as usize - 1] += 1;
            }
            let next = (prev + 1..=max).find(|&v| self.remaining[v as usize - 1] > 0 && self.fits(pos, v));
            match next {
                Some(v) => {
                    self.vals[pos] = v;
                    self.remaining[v as usize - 1] -= 1;
                    if pos + 1 == self.vals.len() {
                        return true;
                    }
                    pos += 1;
                    self.vals[pos] = 0;
                }
                None => {
                    self.vals[pos] = 0;
                    if pos == 0 {
                        return false;
                    }
                    pos -= 1;
                }
            }
        }
    }

    fn current(&self) -> Filling {
        let rows = self
            .shape
            .parts()
            .iter()
            .zip(&self.row_start)
            .map(|(&len, &s)| self.vals[s..s + len].to_vec())
            .collect();
        Filling::from_parts_unchecked(self.shape.clone(), self.content.clone(), rows)
    }
}

impl Iterator for SemistandardTableaux {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let pos = if self.started { self.vals.len() - 1 } else { 0 };
        self.started = true;
        if self.search(pos) {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Row-standard fillings obtained by independently rearranging the columns
/// of a semistandard `T`: exactly `I^T(λ, μ)`.
#[derive(Debug, Clone)]
pub struct InvertedFillings {
    base: Filling,
    heights: Vec<usize>,
    /// Current arrangement of each column, top to bottom.
    cols: Vec<Vec<u32>>,
    started: bool,
    done: bool,
}

/// All `τ` with `st(τ) = t`.
pub fn inverted_with_standardization(t: &Filling) -> Result<InvertedFillings> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let cols = (0..t.num_cols()).map(|j| t.column(j)).collect();
    Ok(InvertedFillings {
        base: t.clone(),
        heights: t.shape().column_heights(),
        cols,
        started: false,
        done: false,
    })
}

/// Next distinct arrangement in lexicographic order; `false` (and the sorted
/// arrangement restored) when exhausted.
fn next_arrangement(v: &mut [u32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
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

impl InvertedFillings {
    fn fits(&self, j: usize) -> bool {
        match self.cols.get(j + 1) {
            None => true,
            Some(right) => self.cols[j].iter().zip(right).all(|(a, b)| a < b),
        }
    }

    fn search(&mut self, resume: bool) -> bool {
        let last = self.cols.len() - 1;
        let (mut j, mut step) = if resume { (0, true) } else { (last, false) };
        loop {
            if step && !next_arrangement(&mut self.cols[j]) {
                if j == last {
                    return false;
                }
                j += 1;
                continue;
            }
            if self.fits(j) {
                if j == 0 {
                    return true;
                }
                j -= 1;
                step = false;
                // Columns are visited right to left, so a freshly entered
                // column always starts from its sorted arrangement.
                debug_assert!(self.cols[j].windows(2).all(|w| w[0] <= w[1]));
            } else {
                step = true;
            }
        }
    }

    fn current(&self) -> Filling {
        let mut rows: Vec<Vec<u32>> = self.base.shape().parts().iter().map(|&p| vec![0; p]).collect();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                rows[i][j] = v;
            }
        }
        debug_assert!(self.heights.iter().zip(&self.cols).all(|(&h, c)| h == c.len()));
        self.base.rearranged(rows)
    }
}

impl Iterator for InvertedFillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.done {
            return None;
        }
        let resume = self.started;
        self.started = true;
        if self.search(resume) {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Number of inverted fillings with each inversion count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InversionHistogram {
    counts: BTreeMap<usize, BigUint>,
}

impl InversionHistogram {
    pub fn add(&mut self, k: usize, n: impl Into<BigUint>) {
        let n = n.into();
        if !n.is_zero() {
            *self.counts.entry(k).or_default() += n;
        }
    }

    /// Adds every count of `other` into `self`.
    pub fn merge(&mut self, other: &InversionHistogram) {
        for (&k, n) in &other.counts {
            self.add(k, n.clone());
        }
    }

    pub fn counts(&self) -> &BTreeMap<usize, BigUint> {
        &self.counts
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(&k).cloned().unwrap_or_default()
    }

    /// `|I(λ, μ)|`.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Largest `k` with a nonzero count.
    pub fn max_support(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Dense coefficient vector `[count(0), count(1), …]`, empty when the
    /// histogram is empty.
    pub fn to_coefficients(&self) -> Vec<BigUint> {
        match self.max_support() {
            None => Vec::new(),
            Some(m) => (0..=m).map(|k| self.get(k)).collect(),
        }
    }
}

/// Inversion counts over `I^T(λ, μ)`.
pub fn histogram_for(t: &Filling) -> Result<InversionHistogram> {
    let mut local: BTreeMap<usize, u64> = BTreeMap::new();
    for tau in inverted_with_standardization(t)? {
        *local.entry(count_unchecked(&tau)).or_default() += 1;
    }
    let mut h = InversionHistogram::default();
    for (k, n) in local {
        h.add(k, n);
    }
    Ok(h)
}

/// Brute-force inversion histogram over all of `I(λ, μ)`, partitioned by
/// standardization.
pub fn histogram(shape: &Shape, content: &Content, limit: Limit) -> Result<InversionHistogram> {
    content.check_against(shape)?;
    limit.check(shape.size())?;
    let mut h = InversionHistogram::default();
    for t in semistandard_tableaux(shape, content)? {
        h.merge(&histogram_for(&t)?);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::standardize;

    fn shape(p: &[usize]) -> Shape {
        Shape::new(p.to_vec()).unwrap()
    }

    fn fill(rows: &[&[u32]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux(&shape(&[4, 3])).count(), 14);
        assert_eq!(standard_tableaux(&shape(&[3, 3, 3])).count(), 42);
        let col = shape(&[1, 1, 1, 1]);
        assert_eq!(semistandard_tableaux(&col, &Content::new(vec![2, 2]).unwrap()).unwrap().count(), 1);
        assert_eq!(semistandard_tableaux(&col, &Content::new(vec![1, 3]).unwrap()).unwrap().count(), 1);
    }

    #[test]
    fn lexicographic_and_valid() {
        let all: Vec<_> = standard_tableaux(&shape(&[3, 2])).collect();
        assert!(all.windows(2).all(|w| w[0].rows().concat() < w[1].rows().concat()));
        assert!(all.iter().all(Filling::is_standard));
    }

    #[test]
    fn contains_4432_tableau() {
        let t4432 = fill(&[&[1, 2, 6, 10], &[2, 5, 8, 10], &[3, 5, 9], &[4, 7]]);
        let found = semistandard_tableaux(t4432.shape(), t4432.content()).unwrap().any(|t| t == t4432);
        assert!(found);
    }

    #[test]
    fn size_mismatch() {
        let err = semistandard_tableaux(&shape(&[2, 1]), &Content::standard(4)).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { shape: 3, content: 4 });
    }

    #[test]
    fn inverted_fillings() {
        let t = fill(&[&[1], &[2], &[3]]);
        let all: Vec<_> = inverted_with_standardization(&t).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|tau| standardize(tau).unwrap() == t));
        let t = fill(&[&[1], &[1], &[2], &[2]]);
        let h = histogram_for(&t).unwrap();
        assert_eq!(h.to_coefficients(), [1u32, 1, 2, 1, 1].map(BigUint::from));
        assert!(inverted_with_standardization(&fill(&[&[2], &[1]])).is_err());
    }

    #[test]
    fn fillings_over_4432_tableau() {
        let t4432 = fill(&[&[1, 2, 6, 10], &[2, 5, 8, 10], &[3, 5, 9], &[4, 7]]);
        assert_eq!(inverted_with_standardization(&t4432).unwrap().count(), 324);
    }

    #[test]
    fn histograms() {
        let h = histogram(&shape(&[4, 4]), &Content::standard(8), Limit::default()).unwrap();
        assert_eq!(h.to_coefficients(), [14u32, 28, 20, 7, 1].map(BigUint::from));
        let h = histogram(&shape(&[2, 2, 2]), &Content::standard(6), Limit::default()).unwrap();
        assert_eq!(h.to_coefficients(), [5u32, 16, 25, 24, 14, 5, 1].map(BigUint::from));
        let h = histogram(&shape(&[5]), &Content::standard(5), Limit::default()).unwrap();
        assert_eq!(h.to_coefficients(), [BigUint::from(1u32)]);
        let err = histogram(&shape(&[11]), &Content::standard(11), Limit::Cap(10)).unwrap_err();
        assert_eq!(err, Error::CapExceeded { size: 11, cap: 10 });
        assert!(histogram(&shape(&[11]), &Content::standard(11), Limit::Unbounded).is_ok());
    }
}
