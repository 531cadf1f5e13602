mod common;

use common::*;
use proptest::prelude::*;
use tabinv_core::genfun::{chi, max_inversions};
use tabinv_core::qpoly::{q_binomial, q_binomial_pascal};
use tabinv_core::tableau::{
    build_from_inversions, inversion_count, inversion_pairs, inversion_pairs_on_standardization, standardize,
};
use tabinv_core::{Filling, QPolynomial};

/// Row-standard fillings: random shape, random values per row, sorted and
/// made strict, then relabelled densely so no value is skipped.
fn row_standard() -> impl Strategy<Value = Filling> {
    prop::collection::vec(1usize..=4, 1..=4)
        .prop_flat_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let rows: Vec<_> =
                parts.iter().map(|&p| prop::collection::btree_set(1u32..=12, p..=p)).collect();
            rows
        })
        .prop_map(|rows| {
            let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.into_iter().collect()).collect();
            let mut used: Vec<u32> = rows.iter().flatten().copied().collect();
            used.sort_unstable();
            used.dedup();
            let rank = |v: u32| used.binary_search(&v).unwrap() as u32 + 1;
            Filling::from_rows(rows.iter().map(|r| r.iter().map(|&v| rank(v)).collect()).collect()).unwrap()
        })
}

fn small_poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(QPolynomial::from_coeffs)
}

proptest! {
    #[test]
    fn pairs_match_definition(f in row_standard()) {
        let mut got: Vec<_> = inversion_pairs(&f).unwrap().iter()
            .map(|p| ((p.smaller.row - 1, p.smaller.col - 1), (p.larger.row - 1, p.larger.col - 1)))
            .collect();
        let mut want = direct_inversions(f.rows());
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn standardize_is_idempotent(f in row_standard()) {
        let t = standardize(&f).unwrap();
        prop_assert!(t.is_semistandard());
        prop_assert_eq!(standardize(&t).unwrap(), t.clone());
        prop_assert_eq!(inversion_count(&t).unwrap(), 0);
    }

    #[test]
    fn rebuild_from_pairs(f in row_standard()) {
        let t = standardize(&f).unwrap();
        let pairs = inversion_pairs_on_standardization(&f).unwrap();
        prop_assert_eq!(build_from_inversions(&t, &pairs).unwrap(), f);
    }

    #[test]
    fn inversion_count_is_supported_by_chi(f in row_standard()) {
        let t = standardize(&f).unwrap();
        let c = chi(&t).unwrap();
        let k = inversion_count(&f).unwrap();
        prop_assert!(c.coeff(k) > 0.into());
        prop_assert!(c.is_monic());
        prop_assert!(c.is_palindromic().unwrap());
        prop_assert!(c.is_unimodal().unwrap());
        prop_assert!(c.degree().unwrap() <= max_inversions(f.shape(), f.content()).unwrap());
    }

    #[test]
    fn product_divides_exactly(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.exact_div(&b).unwrap(), a.clone());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a - &b) + b.clone(), a);
    }

    #[test]
    fn q_binomial_routes_agree(n in 0usize..12, k in 0usize..12) {
        prop_assume!(k <= n);
        let q = q_binomial(n, k).unwrap();
        prop_assert_eq!(&q, &q_binomial_pascal(n, k).unwrap());
        prop_assert_eq!(q, q_binomial(n, n - k).unwrap());
    }
}
