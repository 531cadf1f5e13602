use alloc::vec::Vec;

use super::filling::{CellRef, Filling};
use crate::{Error, Result};

/// Number of entries of column `col + 1` (0-based `col`) that block an entry
/// of value `v` in column `col` from moving up: those `≤ v`.
fn blocked(t: &Filling, col: usize, v: u32) -> usize {
    if col + 1 >= t.num_cols() {
        return 0;
    }
    t.column(col + 1).iter().filter(|&&c| c <= v).count()
}

fn checked_cell(t: &Filling, cell: CellRef) -> Result<(usize, usize)> {
    t.require_semistandard()?;
    if !t.contains(cell) {
        return Err(Error::CellOutOfRange { row: cell.row, col: cell.col });
    }
    Ok((cell.row - 1, cell.col - 1))
}

/// Inversion depth `dep`: entries of the column smaller than this one,
/// minus entries of the next column that are at most its value. It is the
/// number of inversion pairs this entry can head as the larger element.
pub fn inversion_depth(t: &Filling, cell: CellRef) -> Result<usize> {
    let (i, j) = checked_cell(t, cell)?;
    Ok(depth_at(t, i, j))
}

/// Modified inversion depth: entries above this one in its column, minus
/// the same blocking count as [`inversion_depth`].
pub fn modified_inversion_depth(t: &Filling, cell: CellRef) -> Result<usize> {
    let (i, j) = checked_cell(t, cell)?;
    Ok(modified_depth_at(t, i, j))
}

pub(crate) fn depth_at(t: &Filling, i: usize, j: usize) -> usize {
    let v = t.at(i, j);
    let smaller = t.column(j).iter().filter(|&&b| b < v).count();
    smaller - blocked(t, j, v)
}

pub(crate) fn modified_depth_at(t: &Filling, i: usize, j: usize) -> usize {
    i - blocked(t, j, t.at(i, j))
}

/// `dep` for every cell, laid out like the tableau's rows.
pub fn depth_grid(t: &Filling) -> Result<Vec<Vec<usize>>> {
    t.require_semistandard()?;
    Ok(grid(t, depth_at))
}

/// Modified depth for every cell, laid out like the tableau's rows.
pub fn modified_depth_grid(t: &Filling) -> Result<Vec<Vec<usize>>> {
    t.require_semistandard()?;
    Ok(grid(t, modified_depth_at))
}

fn grid(t: &Filling, f: fn(&Filling, usize, usize) -> usize) -> Vec<Vec<usize>> {
    t.rows()
        .iter()
        .enumerate()
        .map(|(i, r)| (0..r.len()).map(|j| f(t, i, j)).collect())
        .collect()
}
