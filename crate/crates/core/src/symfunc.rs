//! Partitions and Schur, skew Schur and super Schur polynomials over finite
//! alphabets.
//!
//! Skew Schur polynomials are computed by enumerating semistandard tableaux;
//! [`skew_schur_jacobi_trudi`] evaluates the same polynomial as a determinant
//! of complete homogeneous polynomials and serves as a cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::grading::GradingPoly;
use crate::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(m)`; empty when `m = 0`.
    pub fn row(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self(vec![m])
        }
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: u32) -> Self {
        Self(vec![1; m as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let first = self.part(0);
        Self((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Whether the partition is a single row or column (the empty partition
    /// is both).
    pub fn is_row_or_column(&self) -> bool {
        self.len() <= 1 || self.part(0) == 1
    }

    /// The hook condition `λ_{k+1} ≤ j` under which `s_λ(q/u)` is nonzero
    /// with `k` bosonic and `j` fermionic variables.
    pub fn fits_hook(&self, k: usize, j: usize) -> bool {
        self.part(k) as usize <= j
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(bound: &[u32], prev: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            match bound.split_first() {
                None => out.push(Partition::new(acc.clone()).expect("decreasing by construction")),
                Some((&b, rest)) => {
                    for p in (0..=b.min(prev)).rev() {
                        acc.push(p);
                        go(rest, p, acc, out);
                        acc.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(&self.0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Binomial coefficient `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of multisets of size `m` drawn from `k` kinds, `C(k + m - 1, m)`,
/// with the convention that there is exactly one empty multiset even when
/// `k = 0`.
pub fn multichoose(k: u64, m: u64) -> BigInt {
    if m == 0 {
        BigInt::one()
    } else if k == 0 {
        BigInt::zero()
    } else {
        binomial(k + m - 1, m)
    }
}

/// Complete homogeneous symmetric polynomial `h_r` in `m` variables.
pub fn complete_homogeneous(r: i64, m: usize) -> GradingPoly {
    let mut out = GradingPoly::zero(m, 0);
    if r < 0 {
        return out;
    }
    fn go(r: u32, i: usize, exps: &mut Vec<u32>, out: &mut GradingPoly) {
        if i + 1 == exps.len() {
            exps[i] = r;
            out.add_term(exps.clone(), BigInt::one());
            exps[i] = 0;
            return;
        }
        for e in 0..=r {
            exps[i] = e;
            go(r - e, i + 1, exps, out);
        }
        exps[i] = 0;
    }
    if m == 0 {
        if r == 0 {
            out = GradingPoly::one(0, 0);
        }
        return out;
    }
    go(r as u32, 0, &mut vec![0; m], &mut out);
    out
}

/// Skew Schur polynomial `s_{λ/ν}(x_1..x_m)` by semistandard tableau
/// enumeration. Zero unless `ν ⊆ λ`.
pub fn skew_schur_poly(lam: &Partition, nu: &Partition, m: usize) -> GradingPoly {
    let mut out = GradingPoly::zero(m, 0);
    if !lam.contains(nu) {
        return out;
    }
    // cells in reading order: rows top to bottom, left to right
    let cells: Vec<(usize, usize)> =
        (0..lam.len()).flat_map(|r| (nu.part(r) as usize..lam.part(r) as usize).map(move |c| (r, c))).collect();
    if cells.is_empty() {
        return GradingPoly::one(m, 0);
    }
    if m == 0 {
        return out;
    }
    let width = lam.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; lam.len()];
    let mut weight = vec![0u32; m];
    fill(&cells, 0, nu, &mut grid, &mut weight, m as u32, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    nu: &Partition,
    grid: &mut [Vec<u32>],
    weight: &mut [u32],
    m: u32,
    out: &mut GradingPoly,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        out.add_term(weight.to_vec(), BigInt::one());
        return;
    };
    let in_skew = |row: usize, col: usize| col >= nu.part(row) as usize;
    let mut lo = 1;
    if c > 0 && in_skew(r, c - 1) {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 && in_skew(r - 1, c) {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for v in lo..=m {
        grid[r][c] = v;
        weight[v as usize - 1] += 1;
        fill(cells, idx + 1, nu, grid, weight, m, out);
        weight[v as usize - 1] -= 1;
    }
    grid[r][c] = 0;
}

/// Schur polynomial `s_λ(x_1..x_m)`.
pub fn schur_poly(lam: &Partition, m: usize) -> GradingPoly {
    skew_schur_poly(lam, &Partition::empty(), m)
}

/// `s_{λ/ν}` via the Jacobi–Trudi determinant `det(h_{λ_i - ν_j - i + j})`.
pub fn skew_schur_jacobi_trudi(lam: &Partition, nu: &Partition, m: usize) -> GradingPoly {
    if !lam.contains(nu) {
        return GradingPoly::zero(m, 0);
    }
    let size = lam.len();
    let matrix: Vec<Vec<GradingPoly>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|c| {
                    let r = lam.part(i) as i64 - nu.part(c) as i64 - i as i64 + c as i64;
                    complete_homogeneous(r, m)
                })
                .collect()
        })
        .collect();
    determinant(&matrix, m)
}

fn determinant(matrix: &[Vec<GradingPoly>], m: usize) -> GradingPoly {
    let size = matrix.len();
    if size == 0 {
        return GradingPoly::one(m, 0);
    }
    // Laplace expansion along the first row.
    let mut acc = GradingPoly::zero(m, 0);
    for col in 0..size {
        if matrix[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<GradingPoly>> = matrix[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &matrix[0][col] * &determinant(&minor, m);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Super Schur polynomial `s_λ(q/u) = Σ_{ν⊆λ} s_ν(q) s_{λ'/ν'}(u)` in the
/// `(k, j)` grading ring.
pub fn super_schur(lam: &Partition, k: usize, j: usize) -> GradingPoly {
    let lam_t = lam.transpose();
    let mut out = GradingPoly::zero(k, j);
    for nu in lam.subpartitions() {
        let bos = schur_poly(&nu, k);
        if bos.is_zero() {
            continue;
        }
        let ferm = skew_schur_poly(&lam_t, &nu.transpose(), j);
        if ferm.is_zero() {
            continue;
        }
        out = &out + &(&bos.embed(k, j, 0) * &ferm.embed(k, j, k));
    }
    out
}

/// Value of `s_λ(q/u)` at all ones for a row `(m)` or column `(1^m)`, from
/// the closed binomial sums.
pub fn super_schur_at_ones(lam: &Partition, k: usize, j: usize) -> Result<BigInt> {
    if !lam.is_row_or_column() {
        return Err(Error::NotRowOrColumn(lam.parts().to_vec()));
    }
    let m = lam.size() as u64;
    let (k, j) = (k as u64, j as u64);
    let is_row = lam.len() <= 1;
    Ok((0..=m)
        .map(|l| if is_row { multichoose(k, l) * binomial(j, m - l) } else { binomial(k, l) * multichoose(j, m - l) })
        .sum())
}
