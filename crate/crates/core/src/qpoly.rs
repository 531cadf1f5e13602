//! Dense polynomials in one variable `q` with big-integer coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `c_0 + c_1 q + … + c_d q^d`, stored densely with `c_d ≠ 0` (the zero
/// polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `c q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = QPolynomial { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient equal to one.
    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder. The divisor's leading coefficient must divide
    /// every leading term met during the division, which always holds for
    /// monic divisors.
    pub fn div_rem(&self, d: &QPolynomial) -> Result<(QPolynomial, QPolynomial)> {
        let Some(dd) = d.degree() else { return Err(Error::ZeroPolynomial) };
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else { return Ok((QPolynomial::zero(), QPolynomial::zero())) };
        if nd < dd {
            return Ok((QPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        Ok((QPolynomial::from_coeffs(quot), QPolynomial::from_coeffs(rem)))
    }

    /// `self / d`, failing with [`Error::InexactDivision`] on a nonzero
    /// remainder.
    pub fn exact_div(&self, d: &QPolynomial) -> Result<QPolynomial> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    fn require_nonzero(&self) -> Result<&[BigInt]> {
        if self.is_zero() { Err(Error::ZeroPolynomial) } else { Ok(&self.coeffs) }
    }

    /// `c_k = c_(d-k)` for every `k`.
    pub fn is_palindromic(&self) -> Result<bool> {
        let c = self.require_nonzero()?;
        Ok(c.iter().eq(c.iter().rev()))
    }

    /// Coefficients weakly rise and then weakly fall.
    pub fn is_unimodal(&self) -> Result<bool> {
        let c = self.require_nonzero()?;
        let mut i = 1;
        while i < c.len() && c[i - 1] <= c[i] {
            i += 1;
        }
        while i < c.len() && c[i - 1] >= c[i] {
            i += 1;
        }
        Ok(i >= c.len())
    }

    /// `c_k^2 ≥ c_(k-1) c_(k+1)` at every interior index.
    pub fn is_log_concave(&self) -> Result<bool> {
        let c = self.require_nonzero()?;
        Ok(c.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]))
    }

    /// Human-readable form such as `1 + 6q + 19q^2`.
    pub fn to_human(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                let _ = write!(out, "{mag}");
            }
            match k {
                0 => {}
                1 => out.push('q'),
                _ => {
                    let _ = write!(out, "q^{k}");
                }
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_human())
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(mut self, rhs: QPolynomial) -> QPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl core::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |acc, p| acc + p)
    }
}

impl core::iter::Product for QPolynomial {
    fn product<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::one(), |acc, p| acc * p)
    }
}

/// The q-number `[p]_q = 1 + q + … + q^(p-1)`; `[0]_q = 0`.
pub fn q_number(p: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![1; p])
}

/// `[p]_q! = [1]_q [2]_q … [p]_q`.
pub fn q_factorial(p: usize) -> QPolynomial {
    (1..=p).map(q_number).product()
}

/// Gaussian binomial `[a]_q! / ([b]_q! [a-b]_q!)` by exact division.
pub fn q_binomial(a: usize, b: usize) -> Result<QPolynomial> {
    if b > a {
        return Err(Error::InvalidArgument(alloc::format!("q_binomial({a}, {b}) needs b <= a")));
    }
    q_factorial(a).exact_div(&(&q_factorial(b) * &q_factorial(a - b)))
}

/// Gaussian binomial by the recurrence
/// `[a, b] = [a-1, b-1] + q^b [a-1, b]`.
pub fn q_binomial_pascal(a: usize, b: usize) -> Result<QPolynomial> {
    if b > a {
        return Err(Error::InvalidArgument(alloc::format!("q_binomial({a}, {b}) needs b <= a")));
    }
    // row[k] holds [n, k] for the current n.
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for n in 1..=a {
        let mut next = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let left = if k >= 1 { row[k - 1].clone() } else { QPolynomial::zero() };
            let right = match row.get(k) {
                Some(p) => p * &QPolynomial::monomial(1, k),
                None => QPolynomial::zero(),
            };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row.swap_remove(b))
}
