//! Graded character traces on the quotient, computed through the monomial
//! basis and the straightening rewriter.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::action::GroupAction;
use super::hilbert::layout_for;
use crate::chartab::{Cyclotomic, GroupElement};
use crate::series::GroupKind;
use crate::superring::{basis_enumerate, cyclic_basis_enumerate, reduce_poly, SuperMonomial, SuperPoly};
use crate::Result;

pub fn basis_for(group: GroupKind, n: u32, k: usize, j: usize) -> Result<Vec<SuperMonomial>> {
    match group {
        GroupKind::Dihedral => basis_enumerate(n, k, j),
        GroupKind::Cyclic => cyclic_basis_enumerate(n, k, j),
    }
}

/// Trace of `g` on every multidegree component of the quotient, zero traces
/// omitted.
pub fn character_traces(
    group: GroupKind,
    n: u32,
    k: usize,
    j: usize,
    g: GroupElement,
) -> Result<BTreeMap<Vec<u32>, Cyclotomic>> {
    let layout = layout_for(group, k, j)?;
    let action = GroupAction::new(group, n, layout)?;
    let mut out: BTreeMap<Vec<u32>, Cyclotomic> = BTreeMap::new();
    for b in basis_for(group, n, k, j)? {
        let image = action.act(g, &SuperPoly::monomial(layout, b.clone(), Cyclotomic::one()));
        let diag = reduce_poly(&image, n).coeff(&b);
        let slot = out.entry(b.multidegree(&layout)).or_insert_with(Cyclotomic::zero);
        *slot = &*slot + &diag;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Trace of `g` on the multidegree-`degree` component.
pub fn character_trace_oracle(
    group: GroupKind,
    n: u32,
    k: usize,
    j: usize,
    g: GroupElement,
    degree: &[u32],
) -> Result<Cyclotomic> {
    Ok(character_traces(group, n, k, j, g)?.remove(degree).unwrap_or_else(Cyclotomic::zero))
}
