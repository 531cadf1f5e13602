//! Exact integer helpers shared by the formula modules.

use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with a possibly negative top argument, using the
/// conventions `C(-1, 0) = 1` and `C(x - 1, x) = 0` for `x >= 1`.
pub fn binomial_signed(n: i64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n < 0 {
        return BigUint::zero();
    }
    binomial(n as u64, k)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Ballot number `B(a, b) = (a - b + 1) / (a + 1) * C(a + b, a)`, zero
/// unless `b <= a`.
pub fn ballot(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    binomial(a + b, a) * (a - b + 1) / (a + 1)
}

/// The triangle number `k (k + 1) / 2`.
pub fn triangle(k: usize) -> usize {
    k * (k + 1) / 2
}

/// Number of standard Young tableaux of a shape by the hook-length formula.
pub fn hook_length_count(parts: &[usize]) -> BigUint {
    let n: usize = parts.iter().sum();
    let mut hooks = BigUint::one();
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&p| p > j).count();
            hooks *= (arm + leg + 1) as u64;
        }
    }
    factorial(n as u64) / hooks
}

/// All weak compositions of `total` into exactly `parts` non-negative parts,
/// in lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            rec(rest - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// All partitions of `n` (non-increasing, positive parts), in reverse
/// lexicographic order starting from `(n)`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All compositions of `n` (ordered sequences of positive parts) whose parts
/// are at most `max_part`.
pub fn compositions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            rec(rest - p, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, max_part, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial_signed(-1, 0), BigUint::one());
        assert_eq!(binomial_signed(2, 3), BigUint::zero());
        let cats: Vec<_> = (0..8).map(catalan).collect();
        let expect: Vec<BigUint> = [1u32, 1, 2, 5, 14, 42, 132, 429]
            .iter()
            .map(|&x| x.into())
            .collect();
        assert_eq!(cats, expect);
        assert_eq!(triangle(3), 6);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(hook_length_count(&[4, 3]), BigUint::from(14u32));
        assert_eq!(hook_length_count(&[3, 3, 3]), BigUint::from(42u32));
        assert_eq!(hook_length_count(&[1, 1, 1]), BigUint::one());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(compositions(8, 2).len(), 34);
        assert_eq!(weak_compositions(3, 3).len(), 10);
    }
}
