use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::filling::{CellRef, Filling};
use super::height::HeightOrder;
use crate::{Content, Error, Result};

/// An entry-specific inversion pair: two cells of one column whose values
/// and heights are ordered oppositely.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InversionPair {
    /// 1-based column shared by both cells.
    pub column: usize,
    pub smaller: CellRef,
    pub larger: CellRef,
    /// `(value(smaller), value(larger))`.
    pub values: (u32, u32),
}

impl InversionPair {
    /// Label such as `(4,5_a)^2`, where the subscript marks which
    /// instance (in height order) of a repeated value is meant.
    pub fn label(&self, f: &Filling, heights: &HeightOrder) -> String {
        format!(
            "({},{})^{}",
            entry_label(f, heights, self.smaller),
            entry_label(f, heights, self.larger),
            self.column
        )
    }
}

/// The value at `cell`, suffixed with `_a`, `_b`, … when the value occurs
/// more than once in its column.
pub fn entry_label(f: &Filling, heights: &HeightOrder, cell: CellRef) -> String {
    let v = f.get(cell).expect("cell inside filling");
    let (rank, repeated) = instance_rank(f, heights, cell);
    if !repeated {
        return format!("{v}");
    }
    match u8::try_from(rank).ok().filter(|&r| r < 26) {
        Some(r) => format!("{v}_{}", (b'a' + r) as char),
        None => format!("{v}_{rank}"),
    }
}

/// 0-based rank of `cell` among the equal-valued cells of its column in
/// height order, and whether that value repeats in the column.
pub(crate) fn instance_rank(f: &Filling, heights: &HeightOrder, cell: CellRef) -> (usize, bool) {
    let (i, j) = (cell.row - 1, cell.col - 1);
    let v = f.at(i, j);
    let h = heights.height_at(i, j);
    let mut rank = 0;
    let mut total = 0;
    for r in 0..f.shape().col_height(j) {
        if f.at(r, j) == v {
            total += 1;
            if heights.height_at(r, j) < h {
                rank += 1;
            }
        }
    }
    (rank, total > 1)
}

/// All inversion pairs of a row-standard filling, with multiplicity, in
/// canonical order (column descending, then larger value, smaller value,
/// larger height, smaller height).
pub fn inversion_pairs(f: &Filling) -> Result<Vec<InversionPair>> {
    let heights = HeightOrder::of(f)?;
    Ok(pairs_with(f, &heights))
}

pub(crate) fn pairs_with(f: &Filling, heights: &HeightOrder) -> Vec<InversionPair> {
    let mut out = Vec::new();
    for j in 0..f.num_cols() {
        let order = heights.rows_in_order(j);
        for (p, &hi) in order.iter().enumerate() {
            for &lo in &order[p + 1..] {
                // `hi` precedes `lo` in height order; an inversion needs the
                // earlier entry to be the larger value.
                if f.at(hi, j) > f.at(lo, j) {
                    out.push(InversionPair {
                        column: j + 1,
                        smaller: CellRef::new(lo + 1, j + 1),
                        larger: CellRef::new(hi + 1, j + 1),
                        values: (f.at(lo, j), f.at(hi, j)),
                    });
                }
            }
        }
    }
    sort_canonical(&mut out, heights);
    out
}

fn sort_canonical(pairs: &mut [InversionPair], heights: &HeightOrder) {
    pairs.sort_by_key(|p| {
        (
            core::cmp::Reverse(p.column),
            p.values.1,
            p.values.0,
            heights.height(p.larger),
            heights.height(p.smaller),
        )
    });
}

/// `inv(f)`: the number of inversion pairs.
pub fn inversion_count(f: &Filling) -> Result<usize> {
    f.require_row_standard()?;
    Ok(count_unchecked(f))
}

/// Inversion count of a filling already known to be row-standard.
pub(crate) fn count_unchecked(f: &Filling) -> usize {
    let heights = HeightOrder::compute(f);
    let mut inv = 0;
    for j in 0..f.num_cols() {
        let order = heights.rows_in_order(j);
        for (p, &hi) in order.iter().enumerate() {
            let v = f.at(hi, j);
            inv += order[p + 1..].iter().filter(|&&lo| f.at(lo, j) < v).count();
        }
    }
    inv
}

/// The standardization `st(f)`: every column sorted into weakly increasing
/// order. The result is semistandard (standard for standard content).
pub fn standardize(f: &Filling) -> Result<Filling> {
    f.require_row_standard()?;
    let mut rows = f.rows().to_vec();
    for j in 0..f.num_cols() {
        let mut col = f.column(j);
        col.sort_unstable();
        for (i, v) in col.into_iter().enumerate() {
            rows[i][j] = v;
        }
    }
    Ok(f.rearranged(rows))
}

/// For every cell of a row-standard `f`, the 0-based row of the same entry
/// in `st(f)`. Equal values of a column keep their height order, and in the
/// standardization they sit top to bottom.
pub(crate) fn standardization_rows(f: &Filling, heights: &HeightOrder) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = f.shape().parts().iter().map(|&p| vec![0; p]).collect();
    for j in 0..f.num_cols() {
        let col = f.column(j);
        for (i, &v) in col.iter().enumerate() {
            let below = col.iter().filter(|&&x| x < v).count();
            let (rank, _) = instance_rank(f, heights, CellRef::new(i + 1, j + 1));
            out[i][j] = below + rank;
        }
    }
    out
}

/// The inversion pairs of `f` with each cell replaced by the cell the same
/// entry occupies in `st(f)`. This is the form `build_from_inversions`
/// accepts.
pub fn inversion_pairs_on_standardization(f: &Filling) -> Result<Vec<InversionPair>> {
    let heights = HeightOrder::of(f)?;
    let map = standardization_rows(f, &heights);
    let mut pairs: Vec<InversionPair> = pairs_with(f, &heights)
        .into_iter()
        .map(|p| InversionPair {
            smaller: CellRef::new(map[p.smaller.row - 1][p.smaller.col - 1] + 1, p.column),
            larger: CellRef::new(map[p.larger.row - 1][p.larger.col - 1] + 1, p.column),
            ..p
        })
        .collect();
    // In a semistandard tableau heights follow rows, so this is canonical.
    pairs.sort_by_key(|p| (core::cmp::Reverse(p.column), p.values.1, p.values.0, p.larger.row, p.smaller.row));
    Ok(pairs)
}

/// Re-indexes `(T, τ)` to standard content: copies of each value are ordered
/// leftmost column first, then by height within a column, and the `k`-th
/// copy of `α` becomes `μ_1 + … + μ_(α-1) + k`. Inversion pairs correspond
/// one to one under this relabelling.
pub fn content_lift(t: &Filling, tau: &Filling) -> Result<(Filling, Filling)> {
    t.require_semistandard()?;
    tau.require_row_standard()?;
    if standardize(tau)? != *t {
        return Err(Error::StandardizationMismatch);
    }
    let content = t.content();
    let mut next: Vec<u32> = (1..=content.max_value()).map(|v| content.offset(v) as u32).collect();
    let mut t_rows = t.rows().to_vec();
    // Within a column of T equal values are contiguous and top-to-bottom is
    // their height order, so a column-major sweep visits copies in order.
    for j in 0..t.num_cols() {
        for i in 0..t.shape().col_height(j) {
            let v = t.at(i, j) as usize;
            next[v - 1] += 1;
            t_rows[i][j] = next[v - 1];
        }
    }
    let heights = HeightOrder::compute(tau);
    let map = standardization_rows(tau, &heights);
    let mut tau_rows = tau.rows().to_vec();
    for (i, row) in tau_rows.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = t_rows[map[i][j]][j];
        }
    }
    let standard = Content::standard(t.size());
    Ok((
        Filling::from_parts_unchecked(t.shape().clone(), standard.clone(), t_rows),
        Filling::from_parts_unchecked(t.shape().clone(), standard, tau_rows),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fill(rows: &[&[u32]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn value_pairs(f: &Filling) -> Vec<(u32, u32)> {
        let mut v: Vec<_> = inversion_pairs(f).unwrap().iter().map(|p| p.values).collect();
        v.sort();
        v
    }

    #[test]
    fn value_multisets() {
        let left = fill(&[&[4, 7, 8, 9], &[2, 3, 6], &[1, 5]]);
        assert_eq!(value_pairs(&left), [(1, 2), (5, 7), (6, 8)]);
        assert_eq!(inversion_count(&left).unwrap(), 3);
        let right = fill(&[&[3, 5, 6, 7], &[1, 5, 8, 9], &[2, 4, 8]]);
        assert_eq!(value_pairs(&right), [(1, 2), (1, 3), (4, 5), (4, 5)]);
    }

    #[test]
    fn canonical_order_and_labels() {
        let right = fill(&[&[3, 5, 6, 7], &[1, 5, 8, 9], &[2, 4, 8]]);
        let h = HeightOrder::of(&right).unwrap();
        let labels: Vec<String> =
            inversion_pairs(&right).unwrap().iter().map(|p| p.label(&right, &h)).collect();
        assert_eq!(labels, ["(4,5_a)^2", "(4,5_b)^2", "(1,2)^1", "(1,3)^1"]);
    }

    #[test]
    fn semistandard_has_no_inversions() {
        let t4432 = fill(&[&[1, 2, 6, 10], &[2, 5, 8, 10], &[3, 5, 9], &[4, 7]]);
        assert!(inversion_pairs(&t4432).unwrap().is_empty());
        assert_eq!(standardize(&t4432).unwrap(), t4432);
    }

    #[test]
    fn standardization_cells() {
        let tau = fill(&[&[3, 5, 6], &[1, 5, 7], &[2, 4]]);
        let t = fill(&[&[1, 4, 6], &[2, 5, 7], &[3, 5]]);
        assert_eq!(standardize(&tau).unwrap(), t);
        let on_t = inversion_pairs_on_standardization(&tau).unwrap();
        let cells: Vec<_> = on_t.iter().map(|p| (p.smaller, p.larger)).collect();
        let c = CellRef::new;
        assert_eq!(
            cells,
            [(c(1, 2), c(2, 2)), (c(1, 2), c(3, 2)), (c(1, 1), c(2, 1)), (c(1, 1), c(3, 1))]
        );
    }

    #[test]
    fn one_column_lift() {
        let tau = fill(&[&[2], &[1], &[1], &[2]]);
        assert_eq!(standardize(&tau).unwrap(), fill(&[&[1], &[1], &[2], &[2]]));
        assert_eq!(inversion_count(&tau).unwrap(), 2);
        let t = standardize(&tau).unwrap();
        let (t_lift, tau_lift) = content_lift(&t, &tau).unwrap();
        assert_eq!(tau_lift, fill(&[&[3], &[1], &[2], &[4]]));
        assert_eq!(t_lift, fill(&[&[1], &[2], &[3], &[4]]));
        assert_eq!(inversion_count(&tau_lift).unwrap(), 2);
    }

    #[test]
    fn lift_of_standard_is_identity() {
        let tau = fill(&[&[4, 7, 8, 9], &[2, 3, 6], &[1, 5]]);
        let t = standardize(&tau).unwrap();
        assert_eq!(content_lift(&t, &tau).unwrap(), (t, tau));
    }

    #[test]
    fn lift_rejects_mismatch() {
        let tau = fill(&[&[2, 3], &[1]]);
        let other = fill(&[&[1, 2], &[3]]);
        assert_eq!(content_lift(&other, &tau), Err(Error::StandardizationMismatch));
    }
}
