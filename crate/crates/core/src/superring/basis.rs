//! Monomial bases of the coinvariant rings.

use std::collections::BTreeSet;

use super::generators::first_index_monomials;
use super::monomial::{Layout, SuperMonomial};
use crate::series::GroupKind;
use crate::Result;

fn times(m: &SuperMonomial, other: SuperMonomial) -> SuperMonomial {
    m.mul(&other).expect("disjoint fermions").1
}

/// The dihedral basis: pure first-index monomials of degree below `n`, the
/// families ending in `x_2^{(i)}` or `θ_2^{(i)}`, and the three sporadic
/// quadratic families. Sorted by degree, then monomial order.
pub fn basis_enumerate(n: u32, k: usize, j: usize) -> Result<Vec<SuperMonomial>> {
    GroupKind::Dihedral.check_order(n)?;
    let layout = Layout::dihedral(k, j)?;
    let low: Vec<SuperMonomial> = (0..n).flat_map(|d| first_index_monomials(&layout, d)).collect();
    let mut out: BTreeSet<SuperMonomial> = low.iter().cloned().collect();
    let first_bos_sets =
        |m: &SuperMonomial| -> Vec<usize> { (0..k).filter(|&s| m.bos[layout.bos_slot(s, 0)] > 0).collect() };
    for i in 0..k {
        let x2 = SuperMonomial::boson(&layout, layout.bos_slot(i, 1));
        for m in &low {
            if first_bos_sets(m).iter().all(|&s| s >= i) {
                out.insert(times(m, x2.clone()));
            }
        }
    }
    for i in 0..j {
        let t2 = SuperMonomial::fermion(&layout, layout.ferm_bit(i, 1));
        for m in &low {
            let ferm_ok = (0..j).all(|s| !m.has_ferm(layout.ferm_bit(s, 0)) || s > i);
            if first_bos_sets(m).is_empty() && ferm_ok {
                out.insert(times(m, t2.clone()));
            }
        }
    }
    for i in 0..k {
        for h in 0..i {
            let m = SuperMonomial::boson(&layout, layout.bos_slot(h, 0));
            out.insert(times(&m, SuperMonomial::boson(&layout, layout.bos_slot(i, 1))));
        }
    }
    for h in 0..k {
        for i in 0..j {
            let m = SuperMonomial::boson(&layout, layout.bos_slot(h, 0));
            out.insert(times(&m, SuperMonomial::fermion(&layout, layout.ferm_bit(i, 1))));
        }
    }
    for i in 0..j {
        for h in 0..=i {
            let m = SuperMonomial::fermion(&layout, layout.ferm_bit(h, 0));
            out.insert(times(&m, SuperMonomial::fermion(&layout, layout.ferm_bit(i, 1))));
        }
    }
    Ok(sorted(out))
}

fn sorted(set: BTreeSet<SuperMonomial>) -> Vec<SuperMonomial> {
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_by_key(|m| m.degree());
    v
}

/// The cyclic basis: all monomials of total degree below `n`, one variable
/// per set.
pub fn cyclic_basis_enumerate(n: u32, k: usize, j: usize) -> Result<Vec<SuperMonomial>> {
    GroupKind::Cyclic.check_order(n)?;
    let layout = Layout::cyclic(k, j)?;
    Ok(sorted((0..n).flat_map(|d| first_index_monomials(&layout, d)).collect()))
}
