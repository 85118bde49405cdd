//! Polarization operators `E_ℓ`, `1 <= ℓ <= k + j - 1`.
//!
//! `E_ℓ` moves one variable from set `ℓ` to set `ℓ + 1` in the combined
//! ordering `x^{(1)}, …, x^{(k)}, θ^{(1)}, …, θ^{(j)}`; `E_k` is the mixed
//! operator `Σ_i θ_i^{(1)} ∂/∂x_i^{(k)}`.

use super::poly::SuperPoly;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Applies `E_ell` (1-based) to `p`.
pub fn polarize<F: Scalar>(ell: usize, p: &SuperPoly<F>) -> Result<SuperPoly<F>> {
    let layout = *p.layout();
    let (k, j) = (layout.k(), layout.j());
    if ell == 0 || ell + 1 > k + j {
        return Err(Error::InvalidOperator { index: ell, k, j });
    }
    let mut out = SuperPoly::zero(layout);
    for i in 0..layout.width() {
        let (target, derivative) = if ell < k {
            (SuperPoly::x(layout, ell, i), p.d_boson(layout.bos_slot(ell - 1, i)))
        } else if ell == k {
            (SuperPoly::theta(layout, 0, i), p.d_boson(layout.bos_slot(k - 1, i)))
        } else {
            let from = ell - k - 1;
            (SuperPoly::theta(layout, from + 1, i), p.d_fermion(layout.ferm_bit(from, i)))
        };
        out = &out + &target.mul(&derivative)?;
    }
    Ok(out)
}
