//! Polynomials over a supercommutative monomial basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::monomial::{Layout, SuperMonomial};
use crate::scalar::Scalar;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SuperPoly<F> {
    layout: Layout,
    terms: BTreeMap<SuperMonomial, F>,
}

impl<F: Scalar> SuperPoly<F> {
    pub fn zero(layout: Layout) -> Self {
        Self { layout, terms: BTreeMap::new() }
    }

    pub fn one(layout: Layout) -> Self {
        Self::monomial(layout, SuperMonomial::one(&layout), F::one())
    }

    pub fn monomial(layout: Layout, m: SuperMonomial, c: F) -> Self {
        let mut p = Self::zero(layout);
        p.add_term(m, c);
        p
    }

    /// The generator `x_{idx}^{(set)}` (0-based).
    pub fn x(layout: Layout, set: usize, idx: usize) -> Self {
        Self::monomial(layout, SuperMonomial::boson(&layout, layout.bos_slot(set, idx)), F::one())
    }

    /// The generator `θ_{idx}^{(set)}` (0-based).
    pub fn theta(layout: Layout, set: usize, idx: usize) -> Self {
        Self::monomial(layout, SuperMonomial::fermion(&layout, layout.ferm_bit(set, idx)), F::one())
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<SuperMonomial, F> {
        self.terms
    }

    pub fn coeff(&self, m: &SuperMonomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `c · (sign) m` where `negative` selects the sign.
    pub fn add_signed(&mut self, negative: bool, m: SuperMonomial, c: F) {
        self.add_term(m, if negative { -c } else { c });
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.layout);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> SuperPoly<G> {
        let mut out = SuperPoly::zero(self.layout);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), f(v));
        }
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch {
                left: format!("{:?}", self.layout),
                right: format!("{:?}", other.layout),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Supercommutative product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.layout);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((neg, m)) = a.mul(b) {
                    out.add_signed(neg, m, ca.clone() * cb.clone());
                }
            }
        }
        Ok(out)
    }

    /// Product with a single monomial on the right.
    pub fn mul_monomial(&self, m: &SuperMonomial) -> Self {
        let mut out = Self::zero(self.layout);
        for (a, c) in &self.terms {
            if let Some((neg, prod)) = a.mul(m) {
                out.add_signed(neg, prod, c.clone());
            }
        }
        out
    }

    /// Whether every term has the same multidegree.
    pub fn multidegree(&self) -> Option<Vec<u32>> {
        let mut degs = self.terms.keys().map(|m| m.multidegree(&self.layout));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Ring endomorphism sending each generator to the given image. Images
    /// of fermions must be odd for the result to be a homomorphism.
    pub fn substitute(&self, bos_images: &[Self], ferm_images: &[Self]) -> Self {
        assert_eq!(bos_images.len(), self.layout.nbos());
        assert_eq!(ferm_images.len(), self.layout.nferm());
        let mut out = Self::zero(self.layout);
        let mut power_cache: BTreeMap<(usize, u32), Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut acc = Self::monomial(self.layout, SuperMonomial::one(&self.layout), c.clone());
            for (slot, &e) in m.bos().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = power_cache
                    .entry((slot, e))
                    .or_insert_with(|| {
                        let mut p = Self::one(self.layout);
                        for _ in 0..e {
                            p = p.mul(&bos_images[slot]).expect("same layout");
                        }
                        p
                    })
                    .clone();
                acc = acc.mul(&pw).expect("same layout");
            }
            for bit in m.ferm_bits() {
                acc = acc.mul(&ferm_images[bit]).expect("same layout");
            }
            for (mm, cc) in acc.terms {
                out.add_term(mm, cc);
            }
        }
        out
    }

    /// `∂/∂x` for the bosonic slot.
    pub fn d_boson(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.layout);
        for (m, c) in &self.terms {
            let e = m.bos[slot];
            if e > 0 {
                let mut d = m.clone();
                d.bos[slot] -= 1;
                out.add_term(d, c.clone() * F::from_i64(e as i64));
            }
        }
        out
    }

    /// Left derivative `∂/∂θ`: moves the fermion to the front, then drops it.
    pub fn d_fermion(&self, bit: usize) -> Self {
        let mut out = Self::zero(self.layout);
        for (m, c) in &self.terms {
            if m.has_ferm(bit) {
                let before = (m.ferm & ((1u64 << bit) - 1)).count_ones();
                let mut d = m.clone();
                d.ferm &= !(1 << bit);
                out.add_signed(before % 2 == 1, d, c.clone());
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mono = self.layout.format_monomial(m);
                if c.is_one() {
                    mono
                } else if (-c.clone()).is_one() {
                    format!("-{mono}")
                } else if mono == "1" {
                    format!("({c})")
                } else {
                    format!("({c}) {mono}")
                }
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<F: Scalar> fmt::Display for SuperPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<F: Scalar> Add for &SuperPoly<F> {
    type Output = SuperPoly<F>;

    fn add(self, rhs: &SuperPoly<F>) -> SuperPoly<F> {
        self.checked_add(rhs).expect("adding polynomials from different rings")
    }
}

impl<F: Scalar> Sub for &SuperPoly<F> {
    type Output = SuperPoly<F>;

    fn sub(self, rhs: &SuperPoly<F>) -> SuperPoly<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Neg for &SuperPoly<F> {
    type Output = SuperPoly<F>;

    fn neg(self) -> SuperPoly<F> {
        SuperPoly { layout: self.layout, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}
