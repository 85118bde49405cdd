//! Exact rank computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Row echelon form over the integers with primitive rows, built
/// incrementally. Rank is that of the rows over `Q`.
#[derive(Debug, Clone, Default)]
pub struct IntEchelon {
    ncols: usize,
    /// `(pivot column, row)` sorted by pivot; each row is zero left of its
    /// pivot and has a positive pivot entry.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntEchelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduces `v` against the stored pivots; zero iff `v` is in the span.
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ncols, "row length");
        for (c, row) in &self.rows {
            if v[*c].is_zero() {
                continue;
            }
            let g = v[*c].gcd(&row[*c]);
            let a = &row[*c] / &g;
            let b = &v[*c] / &g;
            for (x, y) in v.iter_mut().zip(row) {
                *x = &*x * &a - y * &b;
            }
            make_primitive(&mut v);
        }
        v
    }

    pub fn contains(&self, v: Vec<BigInt>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        if v[pivot].is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        let at = self.rows.partition_point(|(c, _)| *c < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }
}

/// Divides a vector by the gcd of its entries.
pub fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Clears denominators of a rational vector.
pub fn integer_row(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    out
}

/// Rank over any exact field by plain Gaussian elimination.
pub fn field_rank<F: Scalar>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].inverse().expect("nonzero pivot");
        let pivot_row: Vec<F> = m[rank].iter().map(|x| x.clone() * inv.clone()).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}
