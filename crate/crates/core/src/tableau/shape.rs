use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// An integer partition `λ_1 ≥ λ_2 ≥ … ≥ λ_m ≥ 1` giving row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidShape("empty shape".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not non-increasing")));
        }
        Ok(Shape { parts })
    }

    /// The two-column shape `2^m 1^(n-m)`.
    pub fn two_column(m: usize, n: usize) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidShape(format!("2^{m} 1^{} is not a shape", n as isize - m as isize)));
        }
        let mut parts = vec![2; m];
        parts.resize(n, 1);
        Shape::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.parts[0]
    }

    /// Total number of cells `N`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (0-based).
    pub fn row_len(&self, row: usize) -> usize {
        self.parts[row]
    }

    /// Height of column `col` (0-based): the number of parts exceeding `col`.
    pub fn col_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > col).count()
    }

    pub fn column_heights(&self) -> Vec<usize> {
        (0..self.num_cols()).map(|j| self.col_height(j)).collect()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row < self.parts.len() && col < self.parts[row]
    }

    /// The conjugate partition (column heights read as rows).
    pub fn conjugate(&self) -> Shape {
        Shape { parts: self.column_heights() }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Multiplicities `μ_1, …, μ_M` of the values `1..=M` in a filling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidContent("empty content".into()));
        }
        if let Some(v) = counts.iter().position(|&c| c == 0) {
            return Err(Error::InvalidContent(format!("value {} is skipped", v + 1)));
        }
        Ok(Content { counts })
    }

    /// Standard content `1^1 2^1 … n^1`.
    pub fn standard(n: usize) -> Self {
        Content { counts: vec![1; n.max(1)] }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Multiplicity of `value` (1-based); zero outside `1..=M`.
    pub fn count(&self, value: u32) -> usize {
        value
            .checked_sub(1)
            .and_then(|v| self.counts.get(v as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Largest value `M`.
    pub fn max_value(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_standard(&self) -> bool {
        self.counts.iter().all(|&c| c == 1)
    }

    /// Values in non-decreasing order, each repeated by its multiplicity.
    pub fn values(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        for (v, &c) in self.counts.iter().enumerate() {
            out.extend(core::iter::repeat_n(v as u32 + 1, c));
        }
        out
    }

    /// Sum of the multiplicities of all values below `value`.
    pub fn offset(&self, value: u32) -> usize {
        self.counts[..(value as usize - 1).min(self.counts.len())].iter().sum()
    }

    pub fn check_against(&self, shape: &Shape) -> Result<()> {
        if shape.size() != self.size() {
            return Err(Error::SizeMismatch { shape: shape.size(), content: self.size() });
        }
        Ok(())
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if *c == 1 {
                write!(f, "{}", i + 1)?;
            } else {
                write!(f, "{}^{c}", i + 1)?;
            }
        }
        Ok(())
    }
}
