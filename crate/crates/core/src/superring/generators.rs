//! Elements of the invariant ideal in closed form.

use super::monomial::{Layout, SuperMonomial};
use super::poly::SuperPoly;
use crate::scalar::Scalar;
use crate::Result;

/// One variable of a set: bosonic set `Bos(ℓ)` or fermionic `Ferm(ℓ)`,
/// 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum SetVar {
    Bos(usize),
    Ferm(usize),
}

impl SetVar {
    pub(crate) fn monomial(&self, layout: &Layout, idx: usize) -> SuperMonomial {
        match *self {
            SetVar::Bos(s) => SuperMonomial::boson(layout, layout.bos_slot(s, idx)),
            SetVar::Ferm(s) => SuperMonomial::fermion(layout, layout.ferm_bit(s, idx)),
        }
    }

    pub(crate) fn is_odd(&self) -> bool {
        matches!(self, SetVar::Ferm(_))
    }
}

/// `a_1 b_1 + a_2 b_2`, written in the order `a` then `b`.
fn pairing<F: Scalar>(layout: Layout, a: SetVar, b: SetVar) -> SuperPoly<F> {
    let mut out = SuperPoly::zero(layout);
    for idx in 0..2 {
        if let Some((neg, m)) = a.monomial(&layout, idx).mul(&b.monomial(&layout, idx)) {
            out.add_signed(neg, m, F::one());
        }
    }
    out
}

/// The quadratic elements `x_1^{(h)}x_1^{(i)} + x_2^{(h)}x_2^{(i)}` (`h <= i`),
/// `x_1^{(h)}θ_1^{(i)} + x_2^{(h)}θ_2^{(i)}` and
/// `θ_1^{(h)}θ_1^{(i)} + θ_2^{(h)}θ_2^{(i)}` (`h < i`).
pub fn quadratic_generators<F: Scalar>(k: usize, j: usize) -> Result<Vec<SuperPoly<F>>> {
    let layout = Layout::dihedral(k, j)?;
    let mut out = Vec::new();
    for h in 0..k {
        for i in h..k {
            out.push(pairing(layout, SetVar::Bos(h), SetVar::Bos(i)));
        }
    }
    for h in 0..k {
        for i in 0..j {
            out.push(pairing(layout, SetVar::Bos(h), SetVar::Ferm(i)));
        }
    }
    for h in 0..j {
        for i in (h + 1)..j {
            out.push(pairing(layout, SetVar::Ferm(h), SetVar::Ferm(i)));
        }
    }
    Ok(out)
}

/// Monomials in the first-index variables `x_1^{(ℓ)}, θ_1^{(ℓ)}` of total
/// degree `d`.
pub fn first_index_monomials(layout: &Layout, d: u32) -> Vec<SuperMonomial> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << layout.j()) {
        let f = mask.count_ones();
        if f > d {
            continue;
        }
        let mut ferm = 0u64;
        for s in 0..layout.j() {
            if mask >> s & 1 == 1 {
                ferm |= 1 << layout.ferm_bit(s, 0);
            }
        }
        for exps in weak_compositions(d - f, layout.k()) {
            let mut m = SuperMonomial::one(layout);
            for (s, e) in exps.into_iter().enumerate() {
                m.bos[layout.bos_slot(s, 0)] = e;
            }
            m.ferm = ferm;
            out.push(m);
        }
    }
    out.sort();
    out
}

pub(crate) fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All listed ideal elements: the quadratic families followed by every
/// first-index monomial of total degree `n`.
pub fn ideal_generators<F: Scalar>(n: u32, k: usize, j: usize) -> Result<Vec<SuperPoly<F>>> {
    let layout = Layout::dihedral(k, j)?;
    let mut out = quadratic_generators(k, j)?;
    out.extend(first_index_monomials(&layout, n).into_iter().map(|m| SuperPoly::monomial(layout, m, F::one())));
    Ok(out)
}
