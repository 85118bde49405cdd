//! Variable layout and supercommutative monomials.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Shape of the ambient ring: `k` bosonic and `j` fermionic variable sets of
/// `width` variables each (2 for the dihedral group, 1 for `Z_n`).
///
/// Bosonic slot of `x_{i}^{(ℓ)}` is `ℓ * width + i`; fermionic bit of
/// `θ_{i}^{(ℓ)}` is `ℓ * width + i`. Set and variable indices are 0-based in
/// code and 1-based in the text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Layout {
    k: usize,
    j: usize,
    width: usize,
}

impl Layout {
    pub fn new(k: usize, j: usize, width: usize) -> Result<Self> {
        assert!(width == 1 || width == 2, "width must be 1 or 2");
        if j * width > 64 {
            return Err(Error::TooManyFermions(j * width));
        }
        Ok(Self { k, j, width })
    }

    pub fn dihedral(k: usize, j: usize) -> Result<Self> {
        Self::new(k, j, 2)
    }

    pub fn cyclic(k: usize, j: usize) -> Result<Self> {
        Self::new(k, j, 1)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn nbos(&self) -> usize {
        self.k * self.width
    }

    pub fn nferm(&self) -> usize {
        self.j * self.width
    }

    pub fn bos_slot(&self, set: usize, idx: usize) -> usize {
        debug_assert!(set < self.k && idx < self.width);
        set * self.width + idx
    }

    pub fn ferm_bit(&self, set: usize, idx: usize) -> usize {
        debug_assert!(set < self.j && idx < self.width);
        set * self.width + idx
    }

    /// `(set, idx)` of a bosonic slot or fermionic bit.
    pub fn split(&self, slot: usize) -> (usize, usize) {
        (slot / self.width, slot % self.width)
    }

    /// All monomials of the given multidegree (one entry per set, bosonic
    /// sets first).
    pub fn monomials_of_degree(&self, degree: &[u32]) -> Vec<SuperMonomial> {
        assert_eq!(degree.len(), self.k + self.j);
        let mut out = vec![SuperMonomial::one(self)];
        for (set, &d) in degree.iter().enumerate().take(self.k) {
            let mut next = Vec::new();
            for m in &out {
                for split in compositions(d, self.width) {
                    let mut m = m.clone();
                    for (idx, e) in split.into_iter().enumerate() {
                        m.bos[self.bos_slot(set, idx)] = e;
                    }
                    next.push(m);
                }
            }
            out = next;
        }
        for (set, &d) in degree.iter().enumerate().skip(self.k) {
            let set = set - self.k;
            let mut next = Vec::new();
            for m in &out {
                for mask in 0u64..(1 << self.width) {
                    if mask.count_ones() == d {
                        let mut m = m.clone();
                        m.ferm |= mask << self.ferm_bit(set, 0);
                        next.push(m);
                    }
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// All multidegrees with total degree at most `max_total` that admit a
    /// monomial (fermionic entries at most `width`).
    pub fn multidegrees_up_to(&self, max_total: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.k + self.j];
        self.push_degrees(0, max_total, &mut cur, &mut out);
        out.sort_by_key(|d| (d.iter().sum::<u32>(), std::cmp::Reverse(d.clone())));
        out
    }

    fn push_degrees(&self, pos: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        let cap = if pos < self.k { budget } else { budget.min(self.width as u32) };
        for d in 0..=cap {
            cur[pos] = d;
            self.push_degrees(pos + 1, budget - d, cur, out);
        }
        cur[pos] = 0;
    }

    fn var_name(&self, boson: bool, slot: usize) -> String {
        let (set, idx) = self.split(slot);
        format!("{}{}_{}", if boson { 'x' } else { 't' }, idx + 1, set + 1)
    }

    /// Text form: factors in generator order, e.g. `x1_1^3 x2_2 t1_1`; the
    /// constant monomial is `1`.
    pub fn format_monomial(&self, m: &SuperMonomial) -> String {
        let mut factors = Vec::new();
        for (slot, &e) in m.bos.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(self.var_name(true, slot)),
                _ => factors.push(format!("{}^{e}", self.var_name(true, slot))),
            }
        }
        for bit in m.ferm_bits() {
            factors.push(self.var_name(false, bit));
        }
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join(" ")
        }
    }

    /// Parses the text form. Factors may come in any order; the returned flag
    /// is true when reordering fermions introduced a sign.
    pub fn parse_monomial(&self, text: &str) -> Result<(bool, SuperMonomial)> {
        let bad = || Error::ParseMonomial(text.to_string());
        let mut m = SuperMonomial::one(self);
        let mut negative = false;
        let text = text.trim();
        if text == "1" {
            return Ok((false, m));
        }
        for factor in text.split_whitespace() {
            let (name, exp) = match factor.split_once('^') {
                Some((name, e)) => (name, e.parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let mut chars = name.chars();
            let kind = chars.next().ok_or_else(bad)?;
            let (idx, set) = chars.as_str().split_once('_').ok_or_else(bad)?;
            let idx: usize = idx.parse().map_err(|_| bad())?;
            let set: usize = set.parse().map_err(|_| bad())?;
            if idx == 0 || idx > self.width || set == 0 {
                return Err(bad());
            }
            match kind {
                'x' if set <= self.k => m.bos[self.bos_slot(set - 1, idx - 1)] += exp,
                't' if set <= self.j && exp == 1 => {
                    let single = SuperMonomial::fermion(self, self.ferm_bit(set - 1, idx - 1));
                    let (neg, prod) = m.mul(&single).ok_or_else(bad)?;
                    negative ^= neg;
                    m = prod;
                }
                _ => return Err(bad()),
            }
        }
        Ok((negative, m))
    }
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A monomial with bosonic exponents and a set of fermionic generators,
/// always written with fermions in increasing bit order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperMonomial {
    pub(crate) bos: Vec<u32>,
    pub(crate) ferm: u64,
}

impl SuperMonomial {
    pub fn one(layout: &Layout) -> Self {
        Self { bos: vec![0; layout.nbos()], ferm: 0 }
    }

    pub fn new(layout: &Layout, bos: Vec<u32>, ferm: u64) -> Self {
        assert_eq!(bos.len(), layout.nbos());
        assert!(layout.nferm() == 64 || ferm >> layout.nferm() == 0, "fermion bit out of range");
        Self { bos, ferm }
    }

    pub fn boson(layout: &Layout, slot: usize) -> Self {
        let mut m = Self::one(layout);
        m.bos[slot] = 1;
        m
    }

    pub fn fermion(layout: &Layout, bit: usize) -> Self {
        let mut m = Self::one(layout);
        m.ferm = 1 << bit;
        m
    }

    pub fn bos(&self) -> &[u32] {
        &self.bos
    }

    pub fn ferm(&self) -> u64 {
        self.ferm
    }

    pub fn ferm_bits(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |b| self.ferm >> b & 1 == 1)
    }

    pub fn has_ferm(&self, bit: usize) -> bool {
        self.ferm >> bit & 1 == 1
    }

    pub fn degree(&self) -> u32 {
        self.bos.iter().sum::<u32>() + self.ferm.count_ones()
    }

    pub fn is_odd(&self) -> bool {
        self.ferm.count_ones() % 2 == 1
    }

    /// Degree in each variable set, bosonic sets first.
    pub fn multidegree(&self, layout: &Layout) -> Vec<u32> {
        let w = layout.width();
        let mut out: Vec<u32> = self.bos.chunks(w).map(|c| c.iter().sum()).collect();
        out.extend((0..layout.j()).map(|s| (self.ferm >> (s * w) & ((1 << w) - 1)).count_ones()));
        out
    }

    /// Product `self · other` as `(negative, monomial)`, or `None` when a
    /// fermion repeats.
    pub fn mul(&self, other: &Self) -> Option<(bool, Self)> {
        if self.ferm & other.ferm != 0 {
            return None;
        }
        let mut swaps = 0u32;
        for b in other.ferm_bits() {
            swaps += if b == 63 { 0 } else { (self.ferm >> (b + 1)).count_ones() };
        }
        let bos = self.bos.iter().zip(&other.bos).map(|(a, b)| a + b).collect();
        Some((swaps % 2 == 1, Self { bos, ferm: self.ferm | other.ferm }))
    }

    /// Whether `other` divides `self`.
    pub fn divisible_by(&self, other: &Self) -> bool {
        other.ferm & !self.ferm == 0 && self.bos.iter().zip(&other.bos).all(|(a, b)| a >= b)
    }

    /// The cofactor `r` with `other · r = ± self`, when `other` divides `self`.
    pub fn quotient(&self, other: &Self) -> Option<Self> {
        if !self.divisible_by(other) {
            return None;
        }
        let bos = self.bos.iter().zip(&other.bos).map(|(a, b)| a - b).collect();
        Some(Self { bos, ferm: self.ferm & !other.ferm })
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}|{:b}", self.bos, self.ferm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        let l = Layout::dihedral(1, 1).unwrap();
        let t1 = SuperMonomial::fermion(&l, 0);
        let t2 = SuperMonomial::fermion(&l, 1);
        assert!(t1.mul(&t1).is_none());
        let (neg, m) = t2.mul(&t1).unwrap();
        assert!(neg);
        assert_eq!(l.format_monomial(&m), "t1_1 t2_1");
        let (neg, _) = t1.mul(&t2).unwrap();
        assert!(!neg);
        let x = SuperMonomial::boson(&l, 0);
        let (neg, m) = x.mul(&t1).unwrap();
        assert!(!neg);
        assert_eq!(l.format_monomial(&m), "x1_1 t1_1");
    }

    #[test]
    fn text_roundtrip() {
        let l = Layout::dihedral(2, 2).unwrap();
        let (neg, m) = l.parse_monomial("x1_1^3 x2_2 t1_1").unwrap();
        assert!(!neg);
        assert_eq!(l.format_monomial(&m), "x1_1^3 x2_2 t1_1");
        let (neg, m) = l.parse_monomial("t1_2 x2_1 t2_1").unwrap();
        assert!(neg);
        assert_eq!(l.format_monomial(&m), "x2_1 t2_1 t1_2");
        assert!(l.parse_monomial("t1_1 t1_1").is_err());
        assert!(l.parse_monomial("x3_1").is_err());
        assert!(l.parse_monomial("x1_3").is_err());
        assert!(l.parse_monomial("t1_1^2").is_err());
        let c = Layout::cyclic(1, 1).unwrap();
        assert_eq!(c.format_monomial(&c.parse_monomial("x1_1^2 t1_1").unwrap().1), "x1_1^2 t1_1");
        assert!(c.parse_monomial("x2_1").is_err());
    }

    #[test]
    fn monomials_by_degree() {
        let l = Layout::dihedral(2, 1).unwrap();
        // C(3,2) * C(2,1) * C(2,1)
        assert_eq!(l.monomials_of_degree(&[2, 1, 1]).len(), 3 * 2 * 2);
        assert_eq!(l.monomials_of_degree(&[0, 0, 2]).len(), 1);
        for m in l.monomials_of_degree(&[1, 2, 1]) {
            assert_eq!(m.multidegree(&l), vec![1, 2, 1]);
        }
        let degs = l.multidegrees_up_to(2);
        assert_eq!(degs.len(), 10);
        assert_eq!(degs[0], vec![0, 0, 0]);
        assert!(Layout::dihedral(1, 33).is_err());
    }
}
