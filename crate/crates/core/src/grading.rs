//! Integer polynomials in the grading variables `q_1..q_k, u_1..u_j`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Polynomial in `k` bosonic grading variables `q_i` followed by `j`
/// fermionic grading variables `u_i`, with integer coefficients.
///
/// Exponent vectors always have length `k + j`; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingPoly {
    k: usize,
    j: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl GradingPoly {
    pub fn zero(k: usize, j: usize) -> Self {
        Self { k, j, terms: BTreeMap::new() }
    }

    pub fn one(k: usize, j: usize) -> Self {
        Self::monomial(k, j, vec![0; k + j], BigInt::one())
    }

    pub fn monomial(k: usize, j: usize, exps: Vec<u32>, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), k + j, "exponent vector length");
        let mut p = Self::zero(k, j);
        p.add_term(exps, coeff);
        p
    }

    /// The `i`-th variable (0-based over `q_1..q_k, u_1..u_j`).
    pub fn var(k: usize, j: usize, i: usize) -> Self {
        let mut exps = vec![0; k + j];
        exps[i] = 1;
        Self::monomial(k, j, exps, BigInt::one())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn nvars(&self) -> usize {
        self.k + self.j
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars());
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.k, self.j);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Sum of all coefficients, i.e. the value at `q = u = 1`.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn max_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Re-homes a polynomial in `m` variables into the `(k, j)` grading ring,
    /// placing its variables at positions `offset..offset + m`.
    pub fn embed(&self, k: usize, j: usize, offset: usize) -> Self {
        let m = self.nvars();
        assert!(offset + m <= k + j, "embedding does not fit");
        let mut out = Self::zero(k, j);
        for (e, c) in &self.terms {
            let mut exps = vec![0; k + j];
            exps[offset..offset + m].copy_from_slice(e);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Keeps only the first two `q` variables and sends every other variable
    /// to zero. The result lives in the `(2, 0)` ring, printed with `q, t`.
    pub fn specialize_qt(&self) -> crate::Result<Self> {
        if self.k < 2 {
            return Err(crate::Error::SpecializationNeedsTwo(self.k));
        }
        let mut out = Self::zero(2, 0);
        for (e, c) in &self.terms {
            if e[2..].iter().all(|&x| x == 0) {
                out.add_term(e[..2].to_vec(), c.clone());
            }
        }
        Ok(out)
    }

    /// Variable names used for display: `q` for `(1, 0)`, `q, t` for
    /// `(2, 0)`, otherwise `q1..qk, u1..uj`.
    pub fn variable_names(k: usize, j: usize) -> Vec<String> {
        match (k, j) {
            (1, 0) => vec!["q".into()],
            (2, 0) => vec!["q".into(), "t".into()],
            _ => (1..=k).map(|i| format!("q{i}")).chain((1..=j).map(|i| format!("u{i}"))).collect(),
        }
    }

    /// Terms in display order: ascending total degree, then descending
    /// lexicographic exponent vectors.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }

    pub fn to_serial(&self) -> SerialGradingPoly {
        SerialGradingPoly {
            variables: Self::variable_names(self.k, self.j),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| SerialTerm { exponents: e.clone(), coefficient: c.to_string() })
                .collect(),
        }
    }
}

/// JSON shape of a [`GradingPoly`]. Coefficients are decimal strings so that
/// arbitrarily large values survive without floats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct SerialGradingPoly {
    pub variables: Vec<String>,
    pub terms: Vec<SerialTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct SerialTerm {
    pub coefficient: String,
    pub exponents: Vec<u32>,
}

pub(crate) fn format_monomial(names: &[String], exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect();
    factors.join("*")
}

impl fmt::Display for GradingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = Self::variable_names(self.k, self.j);
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = format_monomial(&names, e);
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}*{mono}"),
            };
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

fn assert_same_ring(a: &GradingPoly, b: &GradingPoly) {
    assert!(a.k == b.k && a.j == b.j, "grading rings differ: ({}, {}) vs ({}, {})", a.k, a.j, b.k, b.j);
}

impl Add for &GradingPoly {
    type Output = GradingPoly;

    fn add(self, rhs: &GradingPoly) -> GradingPoly {
        assert_same_ring(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GradingPoly {
    type Output = GradingPoly;

    fn sub(self, rhs: &GradingPoly) -> GradingPoly {
        assert_same_ring(self, rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &GradingPoly {
    type Output = GradingPoly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &GradingPoly) -> GradingPoly {
        assert_same_ring(self, rhs);
        let mut out = GradingPoly::zero(self.k, self.j);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Add for GradingPoly {
    type Output = GradingPoly;

    fn add(self, rhs: GradingPoly) -> GradingPoly {
        &self + &rhs
    }
}

impl Mul for GradingPoly {
    type Output = GradingPoly;

    fn mul(self, rhs: GradingPoly) -> GradingPoly {
        &self * &rhs
    }
}
