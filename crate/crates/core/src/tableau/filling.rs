use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::shape::{Content, Shape};
use crate::{Error, Result};

/// A cell position, 1-based as in `a_ij`: `row` counts from the top, `col`
/// from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellRef {
    pub row: usize,
    pub col: usize,
}

impl CellRef {
    pub const fn new(row: usize, col: usize) -> Self {
        CellRef { row, col }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A ragged grid of positive integers conforming to a [`Shape`] and using
/// every value `1..=M` at least once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filling {
    shape: Shape,
    content: Content,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    /// Builds a filling from its rows, top row first. The shape and content
    /// are derived.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Shape::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::MalformedFilling(format!("{e}")))?;
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::MalformedFilling("entries must be positive".into()));
        }
        let mut counts = vec![0usize; max as usize];
        for &v in rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        let content = Content::new(counts).map_err(|e| Error::MalformedFilling(format!("{e}")))?;
        Ok(Filling { shape, content, rows })
    }

    /// Like [`Filling::from_rows`] but also checks the rows against a declared
    /// shape and content.
    pub fn with_shape(shape: &Shape, content: &Content, rows: Vec<Vec<u32>>) -> Result<Self> {
        let f = Filling::from_rows(rows)?;
        if &f.shape != shape {
            return Err(Error::MalformedFilling(format!(
                "rows have shape {} but {} was declared",
                f.shape, shape
            )));
        }
        if &f.content != content {
            return Err(Error::MalformedFilling(format!(
                "rows have content {} but {} was declared",
                f.content, content
            )));
        }
        Ok(f)
    }

    /// Rebuilds a filling of the same shape and content from new rows; used
    /// internally where the rows are a rearrangement of `self`.
    pub(crate) fn rearranged(&self, rows: Vec<Vec<u32>>) -> Filling {
        debug_assert_eq!(rows.iter().map(Vec::len).collect::<Vec<_>>(), self.shape.parts());
        Filling { shape: self.shape.clone(), content: self.content.clone(), rows }
    }

    pub(crate) fn from_parts_unchecked(shape: Shape, content: Content, rows: Vec<Vec<u32>>) -> Filling {
        Filling { shape, content, rows }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn content(&self) -> &Content {
        &self.content
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// Entry at a 1-based cell.
    pub fn get(&self, cell: CellRef) -> Option<u32> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub(crate) fn at(&self, row: usize, col: usize) -> u32 {
        self.rows[row][col]
    }

    pub fn contains(&self, cell: CellRef) -> bool {
        self.get(cell).is_some()
    }

    /// Entries of column `col` (0-based), top to bottom.
    pub fn column(&self, col: usize) -> Vec<u32> {
        (0..self.shape.col_height(col)).map(|i| self.rows[i][col]).collect()
    }

    pub fn num_rows(&self) -> usize {
        self.shape.num_rows()
    }

    pub fn num_cols(&self) -> usize {
        self.shape.num_cols()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Rows strictly increase left to right.
    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Columns weakly increase top to bottom.
    pub fn is_column_semistandard(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi <= lo))
    }

    /// Columns strictly increase top to bottom.
    pub fn is_column_standard(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo))
    }

    /// Row-standard and column-semistandard.
    pub fn is_semistandard(&self) -> bool {
        self.is_row_standard() && self.is_column_semistandard()
    }

    /// A standard Young tableau: standard content, rows and columns increasing.
    pub fn is_standard(&self) -> bool {
        self.content.is_standard() && self.is_row_standard() && self.is_column_standard()
    }

    pub(crate) fn require_row_standard(&self) -> Result<()> {
        if self.is_row_standard() { Ok(()) } else { Err(Error::NotRowStandard) }
    }

    pub(crate) fn require_semistandard(&self) -> Result<()> {
        if self.is_semistandard() { Ok(()) } else { Err(Error::NotSemistandard) }
    }

    pub(crate) fn require_standard(&self) -> Result<()> {
        if self.is_standard() { Ok(()) } else { Err(Error::NotStandard) }
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = CellRef> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| (0..r.len()).map(move |j| CellRef::new(i + 1, j + 1)))
    }

    /// Swaps rows `r1` and `r2` in columns `0..=col` (0-based).
    pub(crate) fn swap_prefix(rows: &mut [Vec<u32>], col: usize, r1: usize, r2: usize) {
        for j in 0..=col {
            let tmp = rows[r1][j];
            rows[r1][j] = rows[r2][j];
            rows[r2][j] = tmp;
        }
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fill(rows: &[&[u32]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn standardness_predicates() {
        assert!(fill(&[&[4, 7, 8, 9], &[2, 3, 6], &[1, 5]]).is_row_standard());
        assert!(fill(&[&[1]]).is_row_standard());
        assert!(!fill(&[&[2, 2], &[1]]).is_row_standard());
        assert!(!fill(&[&[2], &[1], &[1], &[2]]).is_column_semistandard());
        let t4432 = fill(&[&[1, 2, 6, 10], &[2, 5, 8, 10], &[3, 5, 9], &[4, 7]]);
        assert!(t4432.is_semistandard());
        assert!(!t4432.is_column_standard());
        assert!(fill(&[&[1], &[2], &[3]]).is_column_standard());
        assert!(fill(&[&[1], &[2], &[3]]).is_standard());
    }

    #[test]
    fn malformed() {
        assert!(Filling::from_rows(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Filling::from_rows(vec![vec![1, 3]]).is_err());
        assert!(Filling::from_rows(vec![vec![0, 1]]).is_err());
        assert!(Filling::from_rows(vec![]).is_err());
    }

    #[test]
    fn accessors() {
        let f = fill(&[&[1, 3], &[2]]);
        assert_eq!(f.get(CellRef::new(1, 2)), Some(3));
        assert_eq!(f.get(CellRef::new(2, 2)), None);
        assert_eq!(f.get(CellRef::new(0, 1)), None);
        assert_eq!(f.column(0), vec![1, 2]);
        assert_eq!(f.cells().count(), 3);
        assert_eq!(alloc::format!("{f}"), "1 3\n2");
    }
}
