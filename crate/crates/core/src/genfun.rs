//! Generating functions for inversion counts.
//!
//! `chi` is the per-standardization product formula, `xi_by_sum` adds it up
//! over `S(λ, μ)`, and the remaining functions are closed forms for two-row
//! and two-column shapes together with the depth-sequence bijection for
//! `2^m 1^(n-m)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumerate::semistandard_tableaux;
use crate::numbers::{ballot, binomial, triangle, weak_compositions};
use crate::qpoly::{q_binomial, q_factorial, q_number};
use crate::tableau::{depth_at, modified_depth_at, Content, Filling, Shape};
use crate::{Error, QPolynomial, Result};

/// `χ^T(q)`: inversion counts over every filling that standardizes to `t`.
pub fn chi(t: &Filling) -> Result<QPolynomial> {
    t.require_semistandard()?;
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for j in 0..t.num_cols() {
        for i in 0..t.shape().col_height(j) {
            let dep = depth_at(t, i, j);
            let mdep = modified_depth_at(t, i, j);
            num = num * q_number(mdep + 1);
            den = den * q_number(mdep - dep + 1);
        }
    }
    let out = num.exact_div(&den)?;
    debug_assert_eq!(Some(&out), chi_by_columns(t).ok().as_ref());
    Ok(out)
}

/// `χ^T(q)` assembled column by column: a block of `c` equal values of depth
/// `d` contributes the q-binomial `[d + c choose c]`.
pub fn chi_by_columns(t: &Filling) -> Result<QPolynomial> {
    t.require_semistandard()?;
    let mut out = QPolynomial::one();
    for j in 0..t.num_cols() {
        let h = t.shape().col_height(j);
        let mut i = 0;
        while i < h {
            let v = t.at(i, j);
            let run = (i..h).take_while(|&r| t.at(r, j) == v).count();
            let d = depth_at(t, i, j);
            out = out * q_binomial(d + run, run)?;
            i += run;
        }
    }
    Ok(out)
}

/// `ξ(q) = Σ_T χ^T(q)` over `T ∈ S(λ, μ)`; the zero polynomial when the set
/// is empty.
pub fn xi_by_sum(shape: &Shape, content: &Content) -> Result<QPolynomial> {
    let mut acc = QPolynomial::zero();
    for t in semistandard_tableaux(shape, content)? {
        acc = acc + chi(&t)?;
    }
    Ok(acc)
}

/// Whether `S(λ, μ)` is non-empty. Rows are strict and columns weak, so this
/// is dominance of the sorted content by the conjugate shape.
pub fn has_semistandard(shape: &Shape, content: &Content) -> bool {
    if shape.size() != content.size() {
        return false;
    }
    let mut mu = content.counts().to_vec();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    let heights = shape.column_heights();
    let (mut sl, mut sm) = (0, 0);
    for k in 0..mu.len() {
        sl += heights.get(k).copied().unwrap_or(0);
        sm += mu[k];
        if sl < sm {
            return false;
        }
    }
    true
}

/// `M_{λ,μ} = Σ_j T(h_j - 1) - Σ_i T(μ_i - 1)` with `T` the triangle numbers.
pub fn max_inversions(shape: &Shape, content: &Content) -> Result<usize> {
    content.check_against(shape)?;
    if !has_semistandard(shape, content) {
        return Err(Error::InvalidContent(format!(
            "no semistandard tableau of shape {shape} has content {content}"
        )));
    }
    let cols: usize = shape.column_heights().iter().map(|&h| triangle(h - 1)).sum();
    let vals: usize = content.counts().iter().map(|&c| triangle(c - 1)).sum();
    Ok(cols - vals)
}

/// `|S_k(λ, μ)|` for `λ = (a, b)` and a content with `m` doubled values and
/// every other value used once.
pub fn two_row_count(a: usize, b: usize, m: usize, k: usize) -> Result<BigUint> {
    if a < b {
        return Err(Error::InvalidShape(format!("({a},{b}) is not a shape")));
    }
    if m + k > b {
        return Ok(BigUint::zero());
    }
    let num = binomial((a + b - 2 * m) as u64, (b - k - m) as u64) * (a - b + 1 + 2 * k);
    let den = BigUint::from(a + 1 + k - m);
    if !(&num % &den).is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(num / den)
}

/// [`two_row_count`] for an arbitrary content: multiplicities are reordered
/// (which does not change the count) and any multiplicity above two gives 0.
pub fn two_row_count_for(shape: &Shape, content: &Content, k: usize) -> Result<BigUint> {
    content.check_against(shape)?;
    let (a, b) = two_rows(shape)?;
    if content.counts().iter().any(|&c| c > 2) {
        return Ok(BigUint::zero());
    }
    let m = content.counts().iter().filter(|&&c| c == 2).count();
    if b == 0 {
        return Ok(if m == 0 && k == 0 { BigUint::one() } else { BigUint::zero() });
    }
    two_row_count(a, b, m, k)
}

/// `ξ(q)` for a shape with at most two rows, from [`two_row_count_for`].
pub fn two_row_xi(shape: &Shape, content: &Content) -> Result<QPolynomial> {
    let (_, b) = two_rows(shape)?;
    let coeffs = (0..=b)
        .map(|k| two_row_count_for(shape, content, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(QPolynomial::from_coeffs(coeffs.into_iter().map(num_bigint::BigInt::from)))
}

fn two_rows(shape: &Shape) -> Result<(usize, usize)> {
    match *shape.parts() {
        [a] => Ok((a, 0)),
        [a, b] => Ok((a, b)),
        _ => Err(Error::InvalidShape(format!("{shape} has more than two rows"))),
    }
}

/// `ξ(q)` for `(n, n)` and standard content: `Σ_i B(n-1, n-i) (1+q)^i`.
pub fn two_row_rect_xi(n: usize) -> QPolynomial {
    let one_plus_q = q_number(2);
    (1..=n)
        .map(|i| QPolynomial::constant(ballot(n as u64 - 1, (n - i) as u64)) * one_plus_q.pow(i as u32))
        .sum()
}

/// Number of two-column depth sequences with exactly `α_k` entries equal to
/// `k`: `Π_{i≥1} C(α_i + α_{i-1} - 1, α_i)`.
pub fn psi(alpha: &[usize]) -> BigUint {
    match alpha.first() {
        None => return BigUint::one(),
        Some(0) if alpha.iter().any(|&x| x > 0) => return BigUint::zero(),
        _ => {}
    }
    let mut acc = BigUint::one();
    for w in alpha.windows(2) {
        let (prev, cur) = (w[0], w[1]);
        if prev == 0 {
            if cur > 0 {
                return BigUint::zero();
            }
            continue;
        }
        acc *= binomial((cur + prev - 1) as u64, cur as u64);
    }
    acc
}

/// `ξ(q)` for `2^n` and standard content:
/// `[n]! Σ_α ψ(α) Π_i [i+1]^{α_i}` over weak compositions of `n`.
pub fn two_col_rect_xi(n: usize) -> QPolynomial {
    let powers: Vec<QPolynomial> = (0..n).map(|i| q_number(i + 1)).collect();
    let mut sum = QPolynomial::zero();
    for alpha in weak_compositions(n, n) {
        let w = psi(&alpha);
        if w.is_zero() {
            continue;
        }
        let term: QPolynomial = alpha.iter().zip(&powers).map(|(&a, p)| p.pow(a as u32)).product();
        sum = sum + QPolynomial::constant(w) * term;
    }
    q_factorial(n) * sum
}

/// `ξ(q)` from a closed form when one applies: at most two rows, or `2^n`
/// with standard content.
pub fn xi_closed(shape: &Shape, content: &Content) -> Result<QPolynomial> {
    content.check_against(shape)?;
    if shape.num_rows() <= 2 {
        return two_row_xi(shape, content);
    }
    if content.is_standard() && shape.parts().iter().all(|&p| p == 2) {
        return Ok(two_col_rect_xi(shape.num_rows()));
    }
    Err(Error::InvalidArgument(format!("no closed form for shape {shape} with content {content}")))
}

/// First-column inversion depths `c_1 … c_n` of a standard tableau of shape
/// `2^m 1^(n-m)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DepthSequence {
    c: Vec<usize>,
}

impl DepthSequence {
    /// Checks `c_1 = 0` and `c_i ≤ c_(i-1) + 1`.
    pub fn new(c: Vec<usize>) -> Result<Self> {
        if c.first().is_some_and(|&c1| c1 != 0) {
            return Err(Error::InvalidDepthSequence("c_1 must be 0".into()));
        }
        if let Some(i) = c.windows(2).position(|w| w[1] > w[0] + 1) {
            return Err(Error::InvalidDepthSequence(format!("c_{} > c_{} + 1", i + 2, i + 1)));
        }
        Ok(DepthSequence { c })
    }

    pub fn values(&self) -> &[usize] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// Whether the sequence is valid for `2^m 1^(n-m)`, `n = self.len()`:
    /// additionally `c_i ≥ i - m - 1` for `i > m`.
    pub fn fits(&self, m: usize) -> bool {
        m <= self.c.len() && self.c.iter().enumerate().skip(m).all(|(i, &ci)| ci + m >= i)
    }

    /// Multiplicity vector `α`: `α_k` is the number of entries equal to `k`.
    pub fn alpha(&self) -> Vec<usize> {
        let mut a = alloc::vec![0; self.c.len()];
        for &x in &self.c {
            a[x] += 1;
        }
        a
    }
}

impl core::fmt::Display for DepthSequence {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// All valid depth sequences for `2^m 1^(n-m)`, lexicographic.
pub fn depth_sequences(n: usize, m: usize) -> Result<Vec<DepthSequence>> {
    if n == 0 || m > n {
        return Err(Error::InvalidShape(format!("2^{m} 1^{} is not a shape", n as isize - m as isize)));
    }
    let mut out = Vec::new();
    let mut c = alloc::vec![0usize; n];
    extend_depths(&mut c, 1, m, &mut out);
    Ok(out)
}

fn extend_depths(c: &mut Vec<usize>, i: usize, m: usize, out: &mut Vec<DepthSequence>) {
    if i == c.len() {
        out.push(DepthSequence { c: c.clone() });
        return;
    }
    // 1-based index i + 1 > m needs c ≥ i - m.
    let lo = i.saturating_sub(m);
    for v in lo..=c[i - 1] + 1 {
        c[i] = v;
        extend_depths(c, i + 1, m, out);
    }
}

fn two_column_m(shape: &Shape) -> Result<usize> {
    if shape.num_cols() > 2 {
        return Err(Error::InvalidShape(format!("{shape} has more than two columns")));
    }
    Ok(shape.col_height(1))
}

/// The unique standard tableau of a two-column `shape` whose first column
/// has depths `c`: `a_i = 2i - 1 - c_i`, second column the remaining values.
pub fn tableau_from_depths(c: &DepthSequence, shape: &Shape) -> Result<Filling> {
    let m = two_column_m(shape)?;
    let n = shape.num_rows();
    if c.len() != n {
        return Err(Error::InvalidDepthSequence(format!("{c} has length {}, shape {shape} has {n} rows", c.len())));
    }
    if !c.fits(m) {
        return Err(Error::InvalidDepthSequence(format!("{c} is not valid for shape {shape}")));
    }
    let first: Vec<u32> = c.values().iter().enumerate().map(|(i, &ci)| (2 * i + 1 - ci) as u32).collect();
    let mut second = (1..=(n + m) as u32).filter(|v| !first.contains(v));
    let rows = first
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut row = alloc::vec![a];
            if i < m {
                row.extend(second.next());
            }
            row
        })
        .collect();
    let t = Filling::with_shape(shape, &Content::standard(n + m), rows)?;
    if !t.is_standard() {
        return Err(Error::InvalidDepthSequence(format!("{c} is not valid for shape {shape}")));
    }
    Ok(t)
}

/// Depths of the first column of a standard two-column tableau.
pub fn first_column_depths(t: &Filling) -> Result<DepthSequence> {
    two_column_m(t.shape())?;
    t.require_standard()?;
    DepthSequence::new((0..t.num_rows()).map(|i| depth_at(t, i, 0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::standard_tableaux;

    fn shape(p: &[usize]) -> Shape {
        Shape::new(p.to_vec()).unwrap()
    }

    fn fill(rows: &[&[u32]]) -> Filling {
        Filling::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn chi_of_semistandard_4432() {
        let t = fill(&[&[1, 2, 6, 10], &[2, 5, 8, 10], &[3, 5, 9], &[4, 7]]);
        let expect = poly(&[1, 6, 19, 40, 61, 70, 61, 40, 19, 6, 1]);
        assert_eq!(chi(&t).unwrap(), expect);
        assert_eq!(chi_by_columns(&t).unwrap(), expect);
    }

    #[test]
    fn chi_small_cases() {
        let col = fill(&[&[1], &[1], &[2], &[2]]);
        assert_eq!(chi(&col).unwrap(), q_binomial(4, 2).unwrap());
        assert_eq!(chi(&fill(&[&[1, 2, 3, 4]])).unwrap(), QPolynomial::one());
        assert_eq!(chi(&fill(&[&[2], &[1]])).unwrap_err(), Error::NotSemistandard);
    }

    #[test]
    fn xi_examples() {
        let x = xi_by_sum(&shape(&[4, 4]), &Content::standard(8)).unwrap();
        assert_eq!(x, poly(&[14, 28, 20, 7, 1]));
        assert_eq!(x, two_row_rect_xi(4));
        assert_eq!(x, xi_closed(&shape(&[4, 4]), &Content::standard(8)).unwrap());
        let x = xi_by_sum(&shape(&[2, 2, 2]), &Content::standard(6)).unwrap();
        assert_eq!(x, poly(&[5, 16, 25, 24, 14, 5, 1]));
        assert_eq!(x, two_col_rect_xi(3));
        assert_eq!(xi_by_sum(&shape(&[6]), &Content::standard(6)).unwrap(), QPolynomial::one());
        assert_eq!(two_row_rect_xi(1), poly(&[1, 1]));
        assert_eq!(two_col_rect_xi(1), QPolynomial::one());
        assert_eq!(two_col_rect_xi(4).coeff(0), 14.into());
    }

    #[test]
    fn two_row_counts() {
        assert_eq!(two_row_count(4, 4, 0, 0).unwrap(), BigUint::from(14u32));
        assert_eq!(two_row_count(4, 4, 0, 4).unwrap(), BigUint::one());
        assert_eq!(two_row_count(4, 4, 0, 5).unwrap(), BigUint::zero());
        assert!(two_row_count(3, 4, 0, 0).is_err());
        let triple = Content::new(alloc::vec![3, 1, 1, 1]).unwrap();
        assert_eq!(two_row_count_for(&shape(&[3, 3]), &triple, 0).unwrap(), BigUint::zero());
    }

    #[test]
    fn psi_values() {
        let p = |a: &[usize]| psi(a);
        assert_eq!(p(&[3, 0, 0]), BigUint::one());
        assert_eq!(p(&[2, 1, 0]), BigUint::from(2u32));
        assert_eq!(p(&[1, 2, 0]), BigUint::one());
        assert_eq!(p(&[1, 1, 1]), BigUint::one());
        assert_eq!(p(&[0, 3, 0]), BigUint::zero());
        assert_eq!(p(&[2, 0, 1]), BigUint::zero());
    }

    #[test]
    fn max_inversion_values() {
        assert_eq!(max_inversions(&shape(&[4, 4]), &Content::standard(8)).unwrap(), 4);
        assert_eq!(max_inversions(&shape(&[2, 2, 2]), &Content::standard(6)).unwrap(), 6);
        assert_eq!(max_inversions(&shape(&[1, 1, 1, 1, 1]), &Content::standard(5)).unwrap(), 10);
        assert!(max_inversions(&shape(&[2]), &Content::new(alloc::vec![2]).unwrap()).is_err());
    }

    #[test]
    fn depth_sequence_examples() {
        let seqs: Vec<_> = depth_sequences(3, 3).unwrap().into_iter().map(|s| s.values().to_vec()).collect();
        assert_eq!(seqs, [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2]]);
        let rect = shape(&[2, 2, 2]);
        let t = tableau_from_depths(&DepthSequence::new(alloc::vec![0, 1, 2]).unwrap(), &rect).unwrap();
        assert_eq!(t.column(0), [1, 2, 3]);
        let t = tableau_from_depths(&DepthSequence::new(alloc::vec![0, 0, 0]).unwrap(), &rect).unwrap();
        assert_eq!(t.column(0), [1, 3, 5]);
        let hook = shape(&[2, 1]);
        let t = tableau_from_depths(&DepthSequence::new(alloc::vec![0, 0]).unwrap(), &hook).unwrap();
        assert_eq!(t.rows(), [alloc::vec![1, 2], alloc::vec![3]]);
        assert!(DepthSequence::new(alloc::vec![0, 2]).is_err());
        assert!(DepthSequence::new(alloc::vec![1]).is_err());
    }

    #[test]
    fn depth_bijection_small() {
        for n in 1..=5 {
            for m in 0..=n {
                let sh = Shape::two_column(m, n).unwrap();
                let seqs = depth_sequences(n, m).unwrap();
                assert_eq!(seqs.len(), standard_tableaux(&sh).count(), "n={n} m={m}");
                for c in seqs {
                    let t = tableau_from_depths(&c, &sh).unwrap();
                    assert_eq!(first_column_depths(&t).unwrap(), c);
                }
            }
        }
    }
}
