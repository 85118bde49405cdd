//! Elements of the dihedral group `I2(n)` and the cyclic group `Z_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// `Rotation(e)` is `ρ^e`; `Reflection(e)` is `ρ^e φ`. Exponents are kept
/// reduced modulo `n` by the constructors below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupElement {
    Rotation(u32),
    Reflection(u32),
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement::Rotation(0)
    }

    pub fn rotation(e: i64, n: u32) -> Self {
        GroupElement::Rotation(e.rem_euclid(n as i64) as u32)
    }

    pub fn reflection(e: i64, n: u32) -> Self {
        GroupElement::Reflection(e.rem_euclid(n as i64) as u32)
    }

    pub fn exponent(&self) -> u32 {
        match *self {
            GroupElement::Rotation(e) | GroupElement::Reflection(e) => e,
        }
    }

    pub fn is_reflection(&self) -> bool {
        matches!(self, GroupElement::Reflection(_))
    }

    /// Product `self · other`, using `φ ρ^b = ρ^{-b} φ`.
    pub fn compose(&self, other: &Self, n: u32) -> Self {
        use GroupElement::*;
        let (a, b) = (self.exponent() as i64, other.exponent() as i64);
        match (self, other) {
            (Rotation(_), Rotation(_)) => Self::rotation(a + b, n),
            (Rotation(_), Reflection(_)) => Self::reflection(a + b, n),
            (Reflection(_), Rotation(_)) => Self::reflection(a - b, n),
            (Reflection(_), Reflection(_)) => Self::rotation(a - b, n),
        }
    }

    pub fn inverse(&self, n: u32) -> Self {
        match *self {
            GroupElement::Rotation(e) => Self::rotation(-(e as i64), n),
            r @ GroupElement::Reflection(_) => r,
        }
    }

    /// Position in the enumeration produced by [`dihedral_elements`].
    pub fn index(&self, n: u32) -> usize {
        match *self {
            GroupElement::Rotation(e) => e as usize,
            GroupElement::Reflection(e) => (n + e) as usize,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupElement::Rotation(0) => write!(f, "1"),
            GroupElement::Rotation(1) => write!(f, "rho"),
            GroupElement::Rotation(e) => write!(f, "rho^{e}"),
            GroupElement::Reflection(0) => write!(f, "phi"),
            GroupElement::Reflection(1) => write!(f, "rho phi"),
            GroupElement::Reflection(e) => write!(f, "rho^{e} phi"),
        }
    }
}

/// All `2n` elements: rotations `ρ^0..ρ^{n-1}`, then reflections.
pub fn dihedral_elements(n: u32) -> Vec<GroupElement> {
    (0..n).map(GroupElement::Rotation).chain((0..n).map(GroupElement::Reflection)).collect()
}

/// The `n` elements `a^0..a^{n-1}` of `Z_n`, written as rotations.
pub fn cyclic_elements(n: u32) -> Vec<GroupElement> {
    (0..n).map(GroupElement::Rotation).collect()
}

/// Conjugacy classes of `I2(n)` as (representative, class size).
pub fn dihedral_classes(n: u32) -> Vec<(GroupElement, usize)> {
    let mut out: Vec<(GroupElement, usize)> = (0..=n / 2)
        .map(|e| {
            let size = if e == 0 || 2 * e == n { 1 } else { 2 };
            (GroupElement::Rotation(e), size)
        })
        .collect();
    if n % 2 == 1 {
        out.push((GroupElement::Reflection(0), n as usize));
    } else {
        out.push((GroupElement::Reflection(0), n as usize / 2));
        out.push((GroupElement::Reflection(1), n as usize / 2));
    }
    out
}
