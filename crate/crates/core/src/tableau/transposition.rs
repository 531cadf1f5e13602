use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::filling::{CellRef, Filling};
use super::height::HeightOrder;
use super::inversion::{inversion_pairs_on_standardization, InversionPair};
use crate::{Error, Result};

fn check_transposition(f: &Filling, col: usize, r1: usize, r2: usize) -> Result<HeightOrder> {
    for row in [r1, r2] {
        if !f.contains(CellRef::new(row, col)) {
            return Err(Error::CellOutOfRange { row, col });
        }
    }
    let heights = HeightOrder::of(f)?;
    if f.at(r1 - 1, col - 1) == f.at(r2 - 1, col - 1) {
        return Err(Error::EqualValues);
    }
    let (h1, h2) = (heights.height_at(r1 - 1, col - 1), heights.height_at(r2 - 1, col - 1));
    if h1.abs_diff(h2) != 1 {
        return Err(Error::NotHeightAdjacent);
    }
    Ok(heights)
}

/// Partial row transposition: swaps rows `r1` and `r2` (1-based) in columns
/// `1..=col`. The two cells must hold different values and be adjacent in
/// the height order of column `col`. The result need not be row-standard;
/// see [`is_admissible`].
pub fn apply_transposition(f: &Filling, col: usize, r1: usize, r2: usize) -> Result<Filling> {
    check_transposition(f, col, r1, r2)?;
    let mut rows = f.rows().to_vec();
    Filling::swap_prefix(&mut rows, col - 1, r1 - 1, r2 - 1);
    Ok(f.rearranged(rows))
}

/// Whether the partial row transposition keeps the filling row-standard,
/// i.e. both transposed entries are smaller than both right neighbours.
pub fn is_admissible(f: &Filling, col: usize, r1: usize, r2: usize) -> Result<bool> {
    check_transposition(f, col, r1, r2)?;
    Ok(admissible_unchecked(f.rows(), col - 1, r1 - 1, r2 - 1))
}

fn admissible_unchecked(rows: &[Vec<u32>], col: usize, r1: usize, r2: usize) -> bool {
    let hi = rows[r1][col].max(rows[r2][col]);
    [r1, r2].iter().all(|&r| rows[r].get(col + 1).is_none_or(|&b| hi < b))
}

/// Rebuilds the unique `τ` with `st(τ) = t` whose entry-specific inversion
/// pairs are `pairs` (cells given in `t`).
///
/// Columns are processed right to left and, within a column, larger entries
/// top to bottom. An entry heading `m` pairs must pair with the `m` entries
/// directly below it in height order; it is moved past them by `m`
/// admissible transpositions. The first inconsistency or inadmissible step
/// is reported as an invalid inversion set.
pub fn build_from_inversions(t: &Filling, pairs: &[InversionPair]) -> Result<Filling> {
    t.require_semistandard()?;
    let invalid = |msg: alloc::string::String| Error::InvalidInversionSet(msg);

    // (col, larger row) -> smaller rows, all 0-based rows of t.
    let mut heads: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for p in pairs {
        for cell in [p.smaller, p.larger] {
            if cell.col != p.column || !t.contains(cell) {
                return Err(invalid(format!("cell {cell} is not in column {} of T", p.column)));
            }
        }
        let (s, l) = (t.get(p.smaller).unwrap(), t.get(p.larger).unwrap());
        if (s, l) != p.values {
            return Err(invalid(format!("values {:?} do not match T at {}, {}", p.values, p.smaller, p.larger)));
        }
        if s >= l {
            return Err(invalid(format!("{} is not smaller than {}", p.smaller, p.larger)));
        }
        heads.entry((p.column - 1, p.larger.row - 1)).or_default().push(p.smaller.row - 1);
    }

    let mut rows = t.rows().to_vec();
    // origin[row][col]: row of t whose entry currently sits at (row, col).
    let mut origin: Vec<Vec<usize>> =
        t.shape().parts().iter().enumerate().map(|(i, &p)| alloc::vec![i; p]).collect();

    for j in (0..t.num_cols()).rev() {
        let h = t.shape().col_height(j);
        for i in 0..h {
            let Some(mut wanted) = heads.remove(&(j, i)) else { continue };
            wanted.sort_unstable();
            let current = t.rearranged(rows.clone());
            let heights = HeightOrder::compute(&current);
            let order = heights.rows_in_order(j);
            let pos = (0..h).find(|&r| origin[r][j] == i).expect("entry tracked");
            if heights.height_at(pos, j) != i + 1 {
                return Err(invalid(format!("entry ({},{}) lost its height", i + 1, j + 1)));
            }
            if wanted.len() > i {
                return Err(invalid(format!(
                    "({},{}) heads {} pairs but has only {} entries below it",
                    i + 1,
                    j + 1,
                    wanted.len(),
                    i
                )));
            }
            // Entries just below in height order, nearest first.
            let partners: Vec<usize> = order[i - wanted.len()..i].iter().rev().copied().collect();
            let mut partner_origins: Vec<usize> = partners.iter().map(|&r| origin[r][j]).collect();
            partner_origins.sort_unstable();
            if partner_origins != wanted {
                return Err(invalid(format!(
                    "pairs headed by ({},{}) are not the entries directly below it in height order",
                    i + 1,
                    j + 1
                )));
            }
            let mut at = pos;
            for partner in partners {
                if !admissible_unchecked(&rows, j, at, partner) {
                    return Err(invalid(format!(
                        "transposition of ({},{}) with ({},{}) is inadmissible",
                        origin[partner][j] + 1,
                        j + 1,
                        i + 1,
                        j + 1
                    )));
                }
                Filling::swap_prefix(&mut rows, j, at, partner);
                swap_origin(&mut origin, j, at, partner);
                at = partner;
            }
        }
    }
    if let Some(((j, i), _)) = heads.into_iter().next() {
        return Err(invalid(format!("no entry at ({},{})", i + 1, j + 1)));
    }

    let tau = t.rearranged(rows);
    let mut got = inversion_pairs_on_standardization(&tau)?;
    let mut want = pairs.to_vec();
    got.sort();
    want.sort();
    if got != want {
        return Err(invalid("constructed filling has a different inversion set".into()));
    }
    Ok(tau)
}

fn swap_origin(origin: &mut [Vec<usize>], col: usize, r1: usize, r2: usize) {
    for j in 0..=col {
        let tmp = origin[r1][j];
        origin[r1][j] = origin[r2][j];
        origin[r2][j] = tmp;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::inversion::{inversion_count, standardize};
    use alloc::vec;

    fn fill(rows: &[&[u32]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn pair(t: &Filling, s: (usize, usize), l: (usize, usize)) -> InversionPair {
        let (s, l) = (CellRef::new(s.0, s.1), CellRef::new(l.0, l.1));
        InversionPair { column: s.col, smaller: s, larger: l, values: (t.get(s).unwrap(), t.get(l).unwrap()) }
    }

    #[test]
    fn transposition_chain() {
        let t = fill(&[&[1, 4, 6], &[2, 5, 7], &[3, 5]]);
        // 4 <-> 5_a, 4 <-> 5_b, 1 <-> 2, 1 <-> 3
        let steps = [(2, 1, 2), (2, 2, 3), (1, 3, 1), (1, 1, 2)];
        let expected = [
            fill(&[&[2, 5, 6], &[1, 4, 7], &[3, 5]]),
            fill(&[&[2, 5, 6], &[3, 5, 7], &[1, 4]]),
            fill(&[&[1, 5, 6], &[3, 5, 7], &[2, 4]]),
            fill(&[&[3, 5, 6], &[1, 5, 7], &[2, 4]]),
        ];
        let mut cur = t.clone();
        for (k, (&(col, r1, r2), want)) in steps.iter().zip(&expected).enumerate() {
            assert!(is_admissible(&cur, col, r1, r2).unwrap());
            cur = apply_transposition(&cur, col, r1, r2).unwrap();
            assert_eq!(&cur, want);
            assert_eq!(inversion_count(&cur).unwrap(), k + 1);
        }
        assert_eq!(standardize(&cur).unwrap(), t);

        let s = vec![pair(&t, (1, 1), (2, 1)), pair(&t, (1, 1), (3, 1)), pair(&t, (1, 2), (2, 2)), pair(&t, (1, 2), (3, 2))];
        assert_eq!(build_from_inversions(&t, &s).unwrap(), expected[3]);
    }

    #[test]
    fn involution() {
        let t = fill(&[&[1, 4, 6], &[2, 5, 7], &[3, 5]]);
        let once = apply_transposition(&t, 2, 1, 2).unwrap();
        assert_eq!(apply_transposition(&once, 2, 1, 2).unwrap(), t);
    }

    #[test]
    fn transposition_errors() {
        let t = fill(&[&[1, 4, 6], &[2, 5, 7], &[3, 5]]);
        assert_eq!(apply_transposition(&t, 2, 2, 3), Err(Error::EqualValues));
        assert_eq!(apply_transposition(&t, 1, 1, 3), Err(Error::NotHeightAdjacent));
        assert_eq!(apply_transposition(&t, 3, 1, 3), Err(Error::CellOutOfRange { row: 3, col: 3 }));
        // Swapping would leave 2 to the left of 2.
        let blocked = fill(&[&[1, 2], &[2, 3]]);
        assert!(!is_admissible(&blocked, 1, 1, 2).unwrap());
    }

    #[test]
    fn empty_set_is_identity() {
        let t = fill(&[&[1, 4, 6], &[2, 5, 7], &[3, 5]]);
        assert_eq!(build_from_inversions(&t, &[]).unwrap(), t);
    }

    #[test]
    fn unrealizable_sets() {
        let t = fill(&[&[1, 2], &[2, 3]]);
        // (1,2)^1 would need 2 to the left of 2.
        let s = [pair(&t, (1, 1), (2, 1))];
        assert!(matches!(build_from_inversions(&t, &s), Err(Error::InvalidInversionSet(_))));
        // Skipping the nearest entry below is not realizable.
        let t = fill(&[&[1], &[2], &[3]]);
        let s = [pair(&t, (1, 1), (3, 1))];
        assert!(matches!(build_from_inversions(&t, &s), Err(Error::InvalidInversionSet(_))));
    }
}
