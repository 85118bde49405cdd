//! Character values and class-function inner products.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyclotomic::Cyclotomic;
use super::group::{cyclic_elements, dihedral_elements, GroupElement};
use crate::{Error, Result};

/// Character labels. `Two(h)` is the 2-dimensional `χ^h`; `Cyclic(i)` is
/// the character `a^ℓ ↦ ζ_n^{iℓ}` of `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharLabel {
    Chi1,
    Chi2,
    Chi3,
    Chi4,
    Two(u32),
    Cyclic(u32),
}

impl CharLabel {
    /// Whether the label names a character of `I2(n)`, extended labels
    /// `χ^h` with `h <= n - 1` included.
    pub fn check_dihedral(&self, n: u32) -> Result<()> {
        let ok = n >= 2
            && match *self {
                CharLabel::Chi1 | CharLabel::Chi2 => true,
                CharLabel::Chi3 | CharLabel::Chi4 => n.is_multiple_of(2),
                CharLabel::Two(h) => (1..n).contains(&h),
                CharLabel::Cyclic(_) => false,
            };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel { label: self.to_string(), n })
        }
    }

    /// True for the irreducible labels of `I2(n)`.
    pub fn is_irreducible(&self, n: u32) -> bool {
        match *self {
            CharLabel::Two(h) => h >= 1 && h <= (n - 1) / 2,
            CharLabel::Cyclic(_) => false,
            _ => self.check_dihedral(n).is_ok(),
        }
    }

    /// Rewrites a label as a sum of irreducible labels:
    /// `χ^{n-h} ↦ χ^h` and `χ^{n/2} ↦ χ3 + χ4`.
    pub fn normalize(&self, n: u32) -> Result<Vec<CharLabel>> {
        self.check_dihedral(n)?;
        Ok(match *self {
            CharLabel::Two(h) if 2 * h == n => vec![CharLabel::Chi3, CharLabel::Chi4],
            CharLabel::Two(h) if 2 * h > n => vec![CharLabel::Two(n - h)],
            other => vec![other],
        })
    }

    pub fn dimension(&self) -> u32 {
        match self {
            CharLabel::Two(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::Chi1 => write!(f, "chi1"),
            CharLabel::Chi2 => write!(f, "chi2"),
            CharLabel::Chi3 => write!(f, "chi3"),
            CharLabel::Chi4 => write!(f, "chi4"),
            CharLabel::Two(h) => write!(f, "chi^{h}"),
            CharLabel::Cyclic(i) => write!(f, "chi_{i}"),
        }
    }
}

impl FromStr for CharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel { label: s.to_string(), n: 0 };
        match s {
            "chi1" => Ok(CharLabel::Chi1),
            "chi2" => Ok(CharLabel::Chi2),
            "chi3" => Ok(CharLabel::Chi3),
            "chi4" => Ok(CharLabel::Chi4),
            _ => {
                if let Some(h) = s.strip_prefix("chi^") {
                    h.parse().map(CharLabel::Two).map_err(|_| bad())
                } else if let Some(i) = s.strip_prefix("chi_") {
                    i.parse().map(CharLabel::Cyclic).map_err(|_| bad())
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl Serialize for CharLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CharLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Generator values `(χ(ρ), χ(φ))` of the 1-dimensional characters.
/// `χ2` is the sign (determinant) character; `χ3 + χ4` restricts to
/// `χ^{n/2}`.
fn linear_generator_values(label: CharLabel) -> (i64, i64) {
    match label {
        CharLabel::Chi1 => (1, 1),
        CharLabel::Chi2 => (1, -1),
        CharLabel::Chi3 => (-1, 1),
        CharLabel::Chi4 => (-1, -1),
        _ => unreachable!("not a linear character"),
    }
}

/// `χ(g)` for a character of `I2(n)`.
pub fn dihedral_char_value(label: CharLabel, g: GroupElement, n: u32) -> Result<Cyclotomic> {
    label.check_dihedral(n)?;
    let e = g.exponent() as i64;
    Ok(match label {
        CharLabel::Two(h) => {
            if g.is_reflection() {
                Cyclotomic::zero()
            } else {
                Cyclotomic::two_cos(n, h as i64 * e)
            }
        }
        linear => {
            let (r, f) = linear_generator_values(linear);
            let mut v = if r == -1 && e % 2 == 1 { -1 } else { 1 };
            if g.is_reflection() {
                v *= f;
            }
            Cyclotomic::from_integer(v)
        }
    })
}

/// `χ_i(a^ℓ) = ζ_n^{iℓ}`.
pub fn cyclic_char_value(i: u32, ell: i64, n: u32) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, i as i64 * ell)
}

/// The irreducible characters of `I2(n)` in table order.
pub fn dihedral_irreducibles(n: u32) -> Vec<CharLabel> {
    let mut out = vec![CharLabel::Chi1, CharLabel::Chi2];
    if n.is_multiple_of(2) {
        out.extend([CharLabel::Chi3, CharLabel::Chi4]);
    }
    out.extend((1..=(n.max(1) - 1) / 2).map(CharLabel::Two));
    out
}

/// Values on every element, ordered as in [`dihedral_elements`] (or
/// [`cyclic_elements`] for cyclic labels).
pub fn class_function(label: CharLabel, n: u32) -> Result<Vec<Cyclotomic>> {
    match label {
        CharLabel::Cyclic(i) => {
            if n == 0 || i >= n {
                return Err(Error::InvalidLabel { label: label.to_string(), n });
            }
            Ok(cyclic_elements(n).iter().map(|g| cyclic_char_value(i, g.exponent() as i64, n)).collect())
        }
        _ => dihedral_elements(n).into_iter().map(|g| dihedral_char_value(label, g, n)).collect(),
    }
}

/// Character of the regular representation on `order` elements.
pub fn regular_character(order: usize) -> Vec<Cyclotomic> {
    let mut v = vec![Cyclotomic::zero(); order];
    if order > 0 {
        v[0] = Cyclotomic::from_integer(order as i64);
    }
    v
}

/// `(1/|G|) Σ_g f(g) · conj(h(g))`, which must be rational.
pub fn inner_product(f: &[Cyclotomic], h: &[Cyclotomic]) -> Result<BigRational> {
    assert_eq!(f.len(), h.len(), "class functions on different groups");
    let mut total = Cyclotomic::zero();
    for (a, b) in f.iter().zip(h) {
        total = &total + &(a * &b.conj());
    }
    let r = total.to_rational().ok_or_else(|| Error::NotRational(total.to_string()))?;
    Ok(r / BigRational::from_integer((f.len() as i64).into()))
}
