//! m-dimensional Dyck paths and returns to ground.
//!
//! Coordinate `j` of a path is row `j` of the matching standard tableau:
//! step `i` increments coordinate `j` exactly when `i` sits in row `j`. Every
//! prefix point satisfies `x_1 ≥ x_2 ≥ … ≥ x_m`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::enumerate::Limit;
use crate::qpoly::q_number;
use crate::tableau::{depth_at, Content, Filling, Shape};
use crate::{Error, QPolynomial, Result};

pub use crate::numbers::ballot;

/// A lattice path from the origin to `(λ_1, …, λ_m)` by unit steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<usize>,
    shape: Shape,
}

/// A single return to ground: the point reached by `step` has an equality
/// run of `degree + 1` coordinates ending at `coordinate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Return {
    pub step: usize,
    pub coordinate: usize,
    pub degree: usize,
}

/// `k_d` = number of returns of degree `d`, for `d = 1 … m-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReturnProfile {
    k: Vec<usize>,
}

impl ReturnProfile {
    pub fn new(k: Vec<usize>) -> Self {
        ReturnProfile { k }
    }

    /// `k_1, …, k_(m-1)`.
    pub fn counts(&self) -> &[usize] {
        &self.k
    }

    /// `k_d`, with `d` 1-based.
    pub fn get(&self, d: usize) -> usize {
        d.checked_sub(1).and_then(|i| self.k.get(i)).copied().unwrap_or(0)
    }

    /// `Π_d [d+1]_q^{k_d}`.
    pub fn weight(&self) -> QPolynomial {
        self.k.iter().enumerate().map(|(i, &kd)| q_number(i + 2).pow(kd as u32)).product()
    }
}

impl fmt::Display for ReturnProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.k.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Degree of the return made by incrementing `gamma` (0-based) at `point`,
/// which must already hold the incremented value.
fn degree_at(point: &[usize], gamma: usize) -> usize {
    let x = point[gamma];
    point[..gamma].iter().rev().take_while(|&&y| y == x).count()
}

impl DyckPath {
    /// Validates coordinates, the monotone condition and the endpoint.
    pub fn new(steps: Vec<usize>, shape: Shape) -> Result<Self> {
        let m = shape.num_rows();
        let mut point = vec![0usize; m];
        for (t, &g) in steps.iter().enumerate() {
            if g == 0 || g > m {
                return Err(Error::InvalidPath(format!("step {} uses coordinate {g} outside 1..={m}", t + 1)));
            }
            point[g - 1] += 1;
            if g > 1 && point[g - 1] > point[g - 2] {
                return Err(Error::InvalidPath(format!("step {} leaves x_{} > x_{}", t + 1, g, g - 1)));
            }
        }
        if point != shape.parts() {
            return Err(Error::InvalidPath(format!("path ends at {point:?}, not at shape {shape}")));
        }
        Ok(DyckPath { steps, shape })
    }

    /// A path whose shape is read off its endpoint.
    pub fn from_steps(steps: Vec<usize>) -> Result<Self> {
        let m = steps.iter().copied().max().ok_or_else(|| Error::InvalidPath("empty path".into()))?;
        let mut end = vec![0usize; m];
        for &g in &steps {
            if g == 0 {
                return Err(Error::InvalidPath("coordinate 0".into()));
            }
            end[g - 1] += 1;
        }
        let shape = Shape::new(end).map_err(|_| Error::InvalidPath("endpoint is not a partition".into()))?;
        DyckPath::new(steps, shape)
    }

    /// Coordinate (1-based) incremented by each step.
    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.shape.num_rows()
    }

    /// Lattice points `v_0, v_1, …, v_N`.
    pub fn points(&self) -> Vec<Vec<usize>> {
        let mut point = vec![0usize; self.dimension()];
        let mut out = vec![point.clone()];
        for &g in &self.steps {
            point[g - 1] += 1;
            out.push(point.clone());
        }
        out
    }

    /// Return degree at each `v_1 … v_N`, 0 when the step is not a return.
    pub fn return_degrees(&self) -> Vec<usize> {
        let mut point = vec![0usize; self.dimension()];
        self.steps
            .iter()
            .map(|&g| {
                point[g - 1] += 1;
                degree_at(&point, g - 1)
            })
            .collect()
    }

    /// Every return of positive degree, in path order.
    pub fn returns(&self) -> Vec<Return> {
        self.return_degrees()
            .into_iter()
            .zip(&self.steps)
            .enumerate()
            .filter(|(_, (d, _))| *d > 0)
            .map(|(t, (degree, &coordinate))| Return { step: t + 1, coordinate, degree })
            .collect()
    }

    pub fn return_profile(&self) -> ReturnProfile {
        let mut k = vec![0usize; self.dimension().saturating_sub(1)];
        for d in self.return_degrees() {
            if d > 0 {
                k[d - 1] += 1;
            }
        }
        ReturnProfile { k }
    }

    /// Number of returns to a point `(x, x, …, x)`.
    pub fn full_returns(&self) -> usize {
        let m = self.dimension();
        if m < 2 {
            return 0;
        }
        self.return_degrees().iter().filter(|&&d| d == m - 1).count()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::InvalidPath(format!("bad step {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::from_steps(steps)
    }
}

/// Path of a standard tableau: step `i` goes in the direction of the row of `i`.
pub fn syt_to_path(t: &Filling) -> Result<DyckPath> {
    t.require_standard()?;
    let mut steps = vec![0usize; t.size()];
    for (i, row) in t.rows().iter().enumerate() {
        for &v in row {
            steps[v as usize - 1] = i + 1;
        }
    }
    DyckPath::new(steps, t.shape().clone())
}

/// Inverse of [`syt_to_path`].
pub fn path_to_syt(p: &DyckPath) -> Filling {
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); p.dimension()];
    for (i, &g) in p.steps.iter().enumerate() {
        rows[g - 1].push(i as u32 + 1);
    }
    Filling::from_parts_unchecked(p.shape.clone(), Content::standard(p.len()), rows)
}

/// Dyck paths ending at a point, lexicographic by step sequence.
#[derive(Debug, Clone)]
pub struct Paths {
    target: Vec<usize>,
    shape: Option<Shape>,
    steps: Vec<usize>,
    point: Vec<usize>,
    started: bool,
    done: bool,
}

/// All paths of shape `λ`.
pub fn enumerate_paths(shape: &Shape) -> Paths {
    enumerate_paths_to(shape.parts())
}

/// All paths ending at `target`; empty unless `target` is non-increasing
/// with a positive first coordinate.
pub fn enumerate_paths_to(target: &[usize]) -> Paths {
    let shape = Shape::new(target.iter().copied().filter(|&x| x > 0).collect())
        .ok()
        .filter(|s| s.parts() == target);
    let total = target.iter().sum();
    Paths {
        target: target.to_vec(),
        done: shape.is_none(),
        shape,
        steps: Vec::with_capacity(total),
        point: vec![0; target.len()],
        started: false,
    }
}

impl Paths {
    fn allowed(&self, g: usize) -> bool {
        self.point[g] < self.target[g] && (g == 0 || self.point[g] < self.point[g - 1])
    }

    /// Depth-first search; `from` is the first coordinate to try at the
    /// current depth.
    fn search(&mut self, mut from: usize) -> bool {
        let total: usize = self.target.iter().sum();
        let m = self.target.len();
        loop {
            if self.steps.len() == total {
                return true;
            }
            match (from..m).find(|&g| self.allowed(g)) {
                Some(g) => {
                    self.point[g] += 1;
                    self.steps.push(g + 1);
                    from = 0;
                }
                None => match self.steps.pop() {
                    Some(last) => {
                        self.point[last - 1] -= 1;
                        from = last;
                    }
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for Paths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.search(0)
        } else {
            match self.steps.pop() {
                Some(last) => {
                    self.point[last - 1] -= 1;
                    self.search(last)
                }
                None => false,
            }
        };
        if !found {
            self.done = true;
            return None;
        }
        let shape = self.shape.clone().expect("checked at construction");
        Some(DyckPath { steps: self.steps.clone(), shape })
    }
}

/// Rows `0 … rows-1` of the Catalan triangle: row `a` is `B(a, 0) … B(a, a)`.
pub fn catalan_triangle(rows: usize) -> Vec<Vec<BigUint>> {
    (0..rows as u64).map(|a| (0..=a).map(|b| ballot(a, b)).collect()).collect()
}

/// Number of paths of shape `λ` with each return profile.
pub fn return_table(shape: &Shape, limit: Limit) -> Result<BTreeMap<ReturnProfile, BigUint>> {
    limit.check(shape.size())?;
    let mut local: BTreeMap<ReturnProfile, u64> = BTreeMap::new();
    for p in enumerate_paths(shape) {
        *local.entry(p.return_profile()).or_default() += 1;
    }
    Ok(local.into_iter().map(|(k, n)| (k, BigUint::from(n))).collect())
}

/// Number of paths of shape `λ` with each number of full returns.
pub fn full_return_table(shape: &Shape, limit: Limit) -> Result<BTreeMap<usize, BigUint>> {
    limit.check(shape.size())?;
    let mut local: BTreeMap<usize, u64> = BTreeMap::new();
    for p in enumerate_paths(shape) {
        *local.entry(p.full_returns()).or_default() += 1;
    }
    Ok(local.into_iter().map(|(k, n)| (k, BigUint::from(n))).collect())
}

/// `ξ(q)` for standard content as `Σ |D_λ(k)| Π_d [d+1]_q^{k_d}`.
pub fn xi_via_returns(shape: &Shape, limit: Limit) -> Result<QPolynomial> {
    Ok(return_table(shape, limit)?
        .into_iter()
        .map(|(profile, n)| QPolynomial::constant(n) * profile.weight())
        .sum())
}

/// Whether `dep(k)` equals the return degree at `v_k` for every value `k`.
pub fn depth_profile_equivalence(t: &Filling) -> Result<bool> {
    let degrees = syt_to_path(t)?.return_degrees();
    for (i, row) in t.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if depth_at(t, i, j) != degrees[v as usize - 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
