use alloc::vec;
use alloc::vec::Vec;

use super::filling::{CellRef, Filling};
use crate::Result;

/// The height order `◀` on every column of a row-standard filling.
///
/// Built right to left: the rightmost column (and any run of cells lacking a
/// right neighbour) is ordered top to bottom; otherwise a cell precedes
/// another when its right neighbour is smaller, with equal neighbours broken
/// by their own height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightOrder {
    /// `heights[row][col]`, 1-based ranks.
    heights: Vec<Vec<usize>>,
    /// `order[col]` lists 0-based rows from height 1 upward.
    order: Vec<Vec<usize>>,
}

impl HeightOrder {
    pub fn of(f: &Filling) -> Result<Self> {
        f.require_row_standard()?;
        Ok(Self::compute(f))
    }

    pub(crate) fn compute(f: &Filling) -> Self {
        let shape = f.shape();
        let ncols = shape.num_cols();
        let mut heights: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        let mut order: Vec<Vec<usize>> = vec![Vec::new(); ncols];
        for j in (0..ncols).rev() {
            let h = shape.col_height(j);
            let with_neighbour = if j + 1 < ncols { shape.col_height(j + 1) } else { 0 };
            let mut rows: Vec<usize> = (0..with_neighbour).collect();
            rows.sort_unstable_by_key(|&i| (f.at(i, j + 1), heights[i][j + 1]));
            rows.extend(with_neighbour..h);
            for (rank, &i) in rows.iter().enumerate() {
                heights[i][j] = rank + 1;
            }
            order[j] = rows;
        }
        HeightOrder { heights, order }
    }

    /// Height of a 1-based cell.
    pub fn height(&self, cell: CellRef) -> usize {
        self.heights[cell.row - 1][cell.col - 1]
    }

    pub(crate) fn height_at(&self, row: usize, col: usize) -> usize {
        self.heights[row][col]
    }

    /// Cells of column `col` (1-based) from lowest to highest height.
    pub fn column_order(&self, col: usize) -> Vec<CellRef> {
        self.order[col - 1].iter().map(|&i| CellRef::new(i + 1, col)).collect()
    }

    pub(crate) fn rows_in_order(&self, col: usize) -> &[usize] {
        &self.order[col]
    }

    /// Heights laid out like the filling's rows.
    pub fn grid(&self) -> &[Vec<usize>] {
        &self.heights
    }
}

/// Convenience wrapper for [`HeightOrder::of`].
pub fn height_order(f: &Filling) -> Result<HeightOrder> {
    HeightOrder::of(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn fill(rows: &[&[u32]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rightmost_column_is_positional() {
        let f = fill(&[&[3, 5], &[1, 4], &[2]]);
        let h = height_order(&f).unwrap();
        assert_eq!(h.height(CellRef::new(1, 2)), 1);
        assert_eq!(h.height(CellRef::new(2, 2)), 2);
    }

    #[test]
    fn first_column_order() {
        // Right neighbours 7, 3, 5: the 2 comes first, then 1, then 4.
        let f = fill(&[&[4, 7, 8, 9], &[2, 3, 6], &[1, 5]]);
        let h = height_order(&f).unwrap();
        let order: Vec<u32> = h.column_order(1).iter().map(|&c| f.get(c).unwrap()).collect();
        assert_eq!(order, [2, 1, 4]);
        // 8 has a neighbour and 6 does not.
        assert_eq!(h.height(CellRef::new(1, 3)), 1);
        assert_eq!(h.height(CellRef::new(2, 3)), 2);
    }

    #[test]
    fn repeated_fives_in_height_order() {
        let t = fill(&[&[1, 4, 6], &[2, 5, 7], &[3, 5]]);
        let h = height_order(&t).unwrap();
        assert!(h.height(CellRef::new(2, 2)) < h.height(CellRef::new(3, 2)));
    }

    #[test]
    fn rejects_non_row_standard() {
        assert_eq!(height_order(&fill(&[&[2, 1]])), Err(Error::NotRowStandard));
    }
}
