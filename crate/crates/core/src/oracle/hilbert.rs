//! Quotient Hilbert series of the coinvariant ring by brute force.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::action::{diagonal_reynolds, eigen_to_real, swap_zw, GroupAction};
use super::ideal::GradedIdeal;
use crate::series::{GradedDims, GroupKind};
use crate::superring::{Layout, SuperPoly};
use crate::{Error, Result};

/// Coordinates in which the invariant ideal is spanned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coordinates {
    /// `z, w` eigen-coordinates; Reynolds images are monomial pairs.
    Eigen,
    /// `x_1, x_2` with Reynolds images from averaging over the group.
    Real,
    /// `x_1, x_2` with the eigen-coordinate invariants rewritten in `x`.
    RealFromEigen,
}

pub fn layout_for(group: GroupKind, k: usize, j: usize) -> Result<Layout> {
    Layout::new(k, j, group.width())
}

/// Top degree of the closed-form Hilbert series.
pub fn top_degree(group: GroupKind, n: u32) -> u32 {
    match group {
        GroupKind::Dihedral => n,
        GroupKind::Cyclic => n - 1,
    }
}

fn eigen_seeds(layout: &Layout, n: u32, d: &[u32]) -> Vec<SuperPoly<BigRational>> {
    if d.iter().all(|&x| x == 0) {
        return Vec::new();
    }
    layout
        .monomials_of_degree(d)
        .into_iter()
        .filter(|m| layout.width() == 1 || *m <= swap_zw(layout, m).1)
        .map(|m| diagonal_reynolds(layout, n, &m))
        .filter(|p| !p.is_zero())
        .collect()
}

/// The invariant ideal's components up to total degree `cap`.
pub fn invariant_ideal(
    group: GroupKind,
    n: u32,
    k: usize,
    j: usize,
    cap: u32,
    coords: Coordinates,
) -> Result<GradedIdeal> {
    group.check_order(n)?;
    let layout = layout_for(group, k, j)?;
    Ok(match coords {
        Coordinates::Eigen => GradedIdeal::build(layout, cap, |d| eigen_seeds(&layout, n, d)),
        Coordinates::RealFromEigen => GradedIdeal::build(layout, cap, |d| {
            eigen_seeds(&layout, n, d).iter().map(|p| eigen_to_real(p).expect("φ-fixed invariants are real")).collect()
        }),
        Coordinates::Real => {
            let action = GroupAction::new(group, n, layout)?;
            GradedIdeal::build(layout, cap, |d| {
                if d.iter().all(|&x| x == 0) {
                    return Vec::new();
                }
                layout
                    .monomials_of_degree(d)
                    .into_iter()
                    .map(|m| {
                        let p = SuperPoly::monomial(layout, m, BigRational::from_integer(1.into()));
                        action.reynolds(&p).expect("group averages of rational polynomials are rational")
                    })
                    .filter(|p| !p.is_zero())
                    .collect()
            })
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleHilbert {
    pub cap: u32,
    pub dims: GradedDims,
    /// Multidegrees above the closed-form top degree with a nonzero
    /// quotient.
    pub violations: Vec<Vec<u32>>,
}

/// Quotient dimensions per multidegree up to total degree `cap`
/// (default `n + 2`).
pub fn quotient_hilbert_oracle(
    group: GroupKind,
    n: u32,
    k: usize,
    j: usize,
    cap: Option<u32>,
    coords: Coordinates,
) -> Result<OracleHilbert> {
    group.check_order(n)?;
    let cap = cap.unwrap_or(n + 2);
    if cap < n + 1 {
        return Err(Error::DegreeCapTooSmall { cap, min: n + 1 });
    }
    let ideal = invariant_ideal(group, n, k, j, cap, coords)?;
    let dims = ideal.quotient_dims();
    let top = top_degree(group, n);
    let violations = dims.dims.keys().filter(|d| d.iter().sum::<u32>() > top).cloned().collect();
    Ok(OracleHilbert { cap, dims, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{cyclic_hilbert, hilbert_series};

    fn dihedral(n: u32, k: usize, j: usize, coords: Coordinates) -> OracleHilbert {
        quotient_hilbert_oracle(GroupKind::Dihedral, n, k, j, None, coords).unwrap()
    }

    #[test]
    fn examples() {
        let o = quotient_hilbert_oracle(GroupKind::Dihedral, 3, 2, 0, Some(5), Coordinates::Eigen).unwrap();
        assert_eq!(o.dims.total(), 16);
        assert!(o.violations.is_empty());
        assert_eq!(o.dims.to_poly(2, 0), hilbert_series(3, 2, 0).unwrap());
        for n in 2..=6 {
            let o = dihedral(n, 1, 0, Coordinates::Eigen);
            let values: Vec<u64> = (0..=n + 2).map(|d| o.dims.get(&[d])).collect();
            let mut expected = vec![1];
            expected.extend(std::iter::repeat_n(2, n as usize - 1));
            expected.extend([1, 0, 0]);
            assert_eq!(values, expected);
            let empty = dihedral(n, 0, 0, Coordinates::Eigen);
            assert_eq!(empty.dims.dims.len(), 1);
            assert_eq!(empty.dims.get(&[]), 1);
        }
        assert!(matches!(
            quotient_hilbert_oracle(GroupKind::Dihedral, 4, 1, 0, Some(4), Coordinates::Eigen),
            Err(Error::DegreeCapTooSmall { cap: 4, min: 5 })
        ));
    }

    #[test]
    fn coordinates_agree() {
        for n in 2..=4 {
            for (k, j) in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)] {
                let e = dihedral(n, k, j, Coordinates::Eigen);
                assert_eq!(e.dims, dihedral(n, k, j, Coordinates::Real).dims, "({n},{k},{j})");
                assert_eq!(e.dims, dihedral(n, k, j, Coordinates::RealFromEigen).dims);
            }
        }
    }

    #[test]
    fn real_and_converted_ideals_coincide() {
        for n in 2..=4 {
            let a = invariant_ideal(GroupKind::Dihedral, n, 1, 1, n + 1, Coordinates::Real).unwrap();
            let b = invariant_ideal(GroupKind::Dihedral, n, 1, 1, n + 1, Coordinates::RealFromEigen).unwrap();
            for (d, ca) in a.components() {
                let cb = b.component(d).unwrap();
                assert_eq!(ca.rank(), cb.rank());
                for row in ca.echelon().rows() {
                    assert!(cb.echelon().contains(row.to_vec()));
                }
            }
        }
    }

    #[test]
    fn cyclic_mode() {
        for n in 1..=4 {
            for (k, j) in [(1, 0), (1, 1), (0, 2), (2, 1)] {
                for coords in [Coordinates::Eigen, Coordinates::Real] {
                    let o = quotient_hilbert_oracle(GroupKind::Cyclic, n, k, j, None, coords).unwrap();
                    assert_eq!(o.dims.to_poly(k, j), cyclic_hilbert(n, k, j).unwrap());
                    assert!(o.violations.is_empty());
                }
            }
        }
    }
}
