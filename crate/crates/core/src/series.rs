//! Closed forms: universal coefficients, character series, Hilbert series,
//! dimensions and Catalan series for dihedral and cyclic coinvariant rings.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chartab::{
    cyclic_char_value, cyclic_elements, dihedral_char_value, dihedral_elements, CharLabel, Cyclotomic, GroupElement,
};
use crate::grading::GradingPoly;
use crate::scalar::Scalar;
use crate::symfunc::{binomial, multichoose, super_schur, Partition};
use crate::{Error, Result};

/// Which group acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Dihedral,
    Cyclic,
}

impl GroupKind {
    pub fn check_order(&self, n: u32) -> Result<()> {
        match self {
            GroupKind::Dihedral if n < 2 => Err(Error::DihedralOrder(n)),
            GroupKind::Cyclic if n < 1 => Err(Error::CyclicOrder(n)),
            _ => Ok(()),
        }
    }

    pub fn elements(&self, n: u32) -> Vec<GroupElement> {
        match self {
            GroupKind::Dihedral => dihedral_elements(n),
            GroupKind::Cyclic => cyclic_elements(n),
        }
    }

    /// Variables per set: `x_1, x_2` for the dihedral group, one for `Z_n`.
    pub fn width(&self) -> usize {
        match self {
            GroupKind::Dihedral => 2,
            GroupKind::Cyclic => 1,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Dihedral => "dihedral",
            GroupKind::Cyclic => "cyclic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub coefficient: u64,
    pub shape: Partition,
    pub label: CharLabel,
}

/// A formal sum `Σ c · s_λ(q/u) · χ`, kept symbolic until expanded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterSeries {
    pub group: GroupKind,
    pub n: u32,
    pub k: usize,
    pub j: usize,
    pub terms: Vec<SeriesTerm>,
}

/// Graded dimensions keyed by `(k + j)`-multidegree; only positive values
/// are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    #[serde(with = "dims_as_list")]
    pub dims: BTreeMap<Vec<u32>, u64>,
}

// JSON object keys must be strings, so the map travels as a list of entries.
mod dims_as_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        multidegree: Vec<u32>,
        dim: u64,
    }

    pub fn serialize<S: Serializer>(dims: &BTreeMap<Vec<u32>, u64>, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = dims.iter().map(|(d, &v)| Entry { multidegree: d.clone(), dim: v }).collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vec<u32>, u64>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| (e.multidegree, e.dim)).collect())
    }
}

impl GradedDims {
    pub fn from_poly(p: &GradingPoly) -> Self {
        let dims = p
            .terms()
            .map(|(e, c)| {
                let v = u64::try_from(c).expect("graded dimension must be a nonnegative machine integer");
                (e.clone(), v)
            })
            .collect();
        Self { dims }
    }

    pub fn insert(&mut self, degree: Vec<u32>, value: u64) {
        if value > 0 {
            self.dims.insert(degree, value);
        } else {
            self.dims.remove(&degree);
        }
    }

    pub fn get(&self, degree: &[u32]) -> u64 {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn to_poly(&self, k: usize, j: usize) -> GradingPoly {
        let mut p = GradingPoly::zero(k, j);
        for (e, &v) in &self.dims {
            p.add_term(e.clone(), BigInt::from(v));
        }
        p
    }
}

/// The coefficients `c_{λ,χ}` of the dihedral character series; every
/// listed pair has coefficient 1.
pub fn universal_coefficients(n: u32) -> Result<BTreeMap<(Partition, CharLabel), u64>> {
    GroupKind::Dihedral.check_order(n)?;
    let mut out = BTreeMap::new();
    out.insert((Partition::empty(), CharLabel::Chi1), 1);
    out.insert((Partition::column(2), CharLabel::Chi2), 1);
    out.insert((Partition::row(n), CharLabel::Chi2), 1);
    if n.is_multiple_of(2) {
        out.insert((Partition::row(n / 2), CharLabel::Chi3), 1);
        out.insert((Partition::row(n / 2), CharLabel::Chi4), 1);
    }
    for i in 1..=(n - 1) / 2 {
        out.insert((Partition::row(i), CharLabel::Two(i)), 1);
        out.insert((Partition::row(n - i), CharLabel::Two(i)), 1);
    }
    Ok(out)
}

/// The multigraded character series of the dihedral coinvariant ring.
pub fn character_series(n: u32, k: usize, j: usize) -> Result<CharacterSeries> {
    let terms = universal_coefficients(n)?
        .into_iter()
        .filter(|((shape, _), _)| shape.fits_hook(k, j))
        .map(|((shape, label), coefficient)| SeriesTerm { coefficient, shape, label })
        .collect();
    Ok(CharacterSeries { group: GroupKind::Dihedral, n, k, j, terms })
}

/// `Σ_{i<n} s_(i)(q/u) χ_i` for `Z_n`.
pub fn cyclic_character_series(n: u32, k: usize, j: usize) -> Result<CharacterSeries> {
    GroupKind::Cyclic.check_order(n)?;
    let terms = (0..n)
        .map(|i| SeriesTerm { coefficient: 1, shape: Partition::row(i), label: CharLabel::Cyclic(i) })
        .filter(|t| t.shape.fits_hook(k, j))
        .collect();
    Ok(CharacterSeries { group: GroupKind::Cyclic, n, k, j, terms })
}

impl CharacterSeries {
    /// Graded multiplicity of each label.
    pub fn label_polynomials(&self) -> BTreeMap<CharLabel, GradingPoly> {
        let mut out: BTreeMap<CharLabel, GradingPoly> = BTreeMap::new();
        for t in &self.terms {
            let s = super_schur(&t.shape, self.k, self.j).scale(&BigInt::from(t.coefficient));
            let slot = out.entry(t.label).or_insert_with(|| GradingPoly::zero(self.k, self.j));
            *slot = &*slot + &s;
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Graded multiplicity of a single label (zero if absent).
    pub fn multiplicity(&self, label: CharLabel) -> GradingPoly {
        self.label_polynomials().remove(&label).unwrap_or_else(|| GradingPoly::zero(self.k, self.j))
    }

    fn value(&self, label: CharLabel, g: GroupElement) -> Cyclotomic {
        match label {
            CharLabel::Cyclic(i) => cyclic_char_value(i, g.exponent() as i64, self.n),
            other => dihedral_char_value(other, g, self.n).expect("series labels are valid"),
        }
    }

    /// Graded character evaluated at `g`: multidegree ↦ trace.
    pub fn evaluate(&self, g: GroupElement) -> BTreeMap<Vec<u32>, Cyclotomic> {
        let mut out: BTreeMap<Vec<u32>, Cyclotomic> = BTreeMap::new();
        for (label, poly) in self.label_polynomials() {
            let v = self.value(label, g);
            for (e, c) in poly.terms() {
                let term = &v * &Cyclotomic::from_rational(c.clone().into());
                let slot = out.entry(e.clone()).or_insert_with(Cyclotomic::zero);
                *slot = &*slot + &term;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Multidegree ↦ class function over all group elements.
    pub fn expand(&self) -> BTreeMap<Vec<u32>, Vec<Cyclotomic>> {
        let elements = self.group.elements(self.n);
        let mut out: BTreeMap<Vec<u32>, Vec<Cyclotomic>> = BTreeMap::new();
        for (gi, g) in elements.iter().enumerate() {
            for (e, v) in self.evaluate(*g) {
                out.entry(e).or_insert_with(|| vec![Cyclotomic::zero(); elements.len()])[gi] = v;
            }
        }
        out
    }

    /// Graded dimension: the character at the identity, weighted by label
    /// dimension.
    pub fn at_identity(&self) -> GradingPoly {
        let mut out = GradingPoly::zero(self.k, self.j);
        for (label, poly) in self.label_polynomials() {
            out = &out + &poly.scale(&BigInt::from(label.dimension()));
        }
        out
    }
}

impl fmt::Display for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mut s = String::new();
                if t.coefficient != 1 {
                    s.push_str(&format!("{}*", t.coefficient));
                }
                if !t.shape.is_empty() {
                    s.push_str(&format!("s{}*", t.shape));
                }
                s.push_str(&t.label.to_string());
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `1 + s_(1,1) + s_(n) + 2 Σ_{i=1}^{n-1} s_(i)`.
pub fn hilbert_series(n: u32, k: usize, j: usize) -> Result<GradingPoly> {
    GroupKind::Dihedral.check_order(n)?;
    let mut out = GradingPoly::one(k, j);
    out = &out + &super_schur(&Partition::column(2), k, j);
    out = &out + &super_schur(&Partition::row(n), k, j);
    let two = BigInt::from(2);
    for i in 1..n {
        out = &out + &super_schur(&Partition::row(i), k, j).scale(&two);
    }
    Ok(out)
}

/// Dimension of the dihedral coinvariant ring from the closed binomial sum.
pub fn dimension(n: u32, k: usize, j: usize) -> Result<BigInt> {
    GroupKind::Dihedral.check_order(n)?;
    let (n, k, j) = (n as u64, k as u64, j as u64);
    let row = |m: u64| -> BigInt { (0..=m).map(|h| binomial(j, h) * multichoose(k, m - h)).sum() };
    let mut total = BigInt::one() + binomial(k, 2) + BigInt::from(k * j) + binomial(j + 1, 2);
    total += row(n);
    for i in 1..n {
        total += row(i) * 2;
    }
    Ok(total)
}

/// Graded multiplicity of the sign character: `s_(n)(q/u) + s_(1,1)(q/u)`.
pub fn catalan_series(n: u32, k: usize, j: usize) -> Result<GradingPoly> {
    GroupKind::Dihedral.check_order(n)?;
    Ok(&super_schur(&Partition::row(n), k, j) + &super_schur(&Partition::column(2), k, j))
}

/// `[m]_{q,t} = q^{m-1} + q^{m-2} t + … + t^{m-1}` in the `(2, 0)` ring.
pub fn qt_integer(m: u32) -> GradingPoly {
    let mut out = GradingPoly::zero(2, 0);
    for i in 0..m {
        out.add_term(vec![m - 1 - i, i], BigInt::one());
    }
    out
}

/// `Σ_{i<n} s_(i)(q/u)`.
pub fn cyclic_hilbert(n: u32, k: usize, j: usize) -> Result<GradingPoly> {
    GroupKind::Cyclic.check_order(n)?;
    let mut out = GradingPoly::zero(k, j);
    for i in 0..n {
        out = &out + &super_schur(&Partition::row(i), k, j);
    }
    Ok(out)
}

/// `Σ_{i<n} Σ_ℓ C(k+ℓ-1, ℓ) C(j, i-ℓ)`.
pub fn cyclic_dimension(n: u32, k: usize, j: usize) -> Result<BigInt> {
    GroupKind::Cyclic.check_order(n)?;
    let (k, j) = (k as u64, j as u64);
    Ok((0..n as u64).flat_map(|i| (0..=i).map(move |l| multichoose(k, l) * binomial(j, i - l))).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::dihedral_classes;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn universal_coefficient_examples() {
        let c3 = universal_coefficients(3).unwrap();
        let expected3: Vec<(Partition, CharLabel)> = vec![
            (p(&[]), CharLabel::Chi1),
            (p(&[1, 1]), CharLabel::Chi2),
            (p(&[3]), CharLabel::Chi2),
            (p(&[1]), CharLabel::Two(1)),
            (p(&[2]), CharLabel::Two(1)),
        ];
        assert_eq!(c3.len(), expected3.len());
        for key in expected3 {
            assert_eq!(c3[&key], 1);
        }
        let c4 = universal_coefficients(4).unwrap();
        assert_eq!(c4[&(p(&[2]), CharLabel::Chi3)], 1);
        assert_eq!(c4[&(p(&[2]), CharLabel::Chi4)], 1);
        let c2: Vec<_> = universal_coefficients(2).unwrap().into_keys().collect();
        assert_eq!(c2.len(), 5);
        assert!(c2.contains(&(p(&[1]), CharLabel::Chi3)));
        assert!(c2.contains(&(p(&[1]), CharLabel::Chi4)));
        assert!(c2.contains(&(p(&[2]), CharLabel::Chi2)));
        assert!(universal_coefficients(1).is_err());
    }

    #[test]
    fn one_set_series() {
        for n in 2..=8u32 {
            let polys = character_series(n, 1, 0).unwrap().label_polynomials();
            let q = |e: u32| GradingPoly::monomial(1, 0, vec![e], BigInt::one());
            assert_eq!(polys[&CharLabel::Chi1], q(0));
            assert_eq!(polys[&CharLabel::Chi2], q(n));
            for i in 1..=(n - 1) / 2 {
                assert_eq!(polys[&CharLabel::Two(i)], &q(i) + &q(n - i));
            }
            if n % 2 == 0 {
                assert_eq!(polys[&CharLabel::Chi3], q(n / 2));
                assert_eq!(polys[&CharLabel::Chi4], q(n / 2));
            }
        }
        let empty = character_series(5, 0, 0).unwrap();
        assert_eq!(empty.terms.len(), 1);
        assert_eq!(empty.terms[0].label, CharLabel::Chi1);
    }

    #[test]
    fn hilbert_examples() {
        let h = hilbert_series(3, 1, 1).unwrap();
        // s_(i)(q/u) = q^i + q^{i-1} u and s_(1,1)(q/u) = q u + u^2 in one set each
        let row = |i: u32| {
            let mut r = GradingPoly::zero(1, 1);
            r.add_term(vec![i, 0], BigInt::one());
            if i > 0 {
                r.add_term(vec![i - 1, 1], BigInt::one());
            }
            r
        };
        let mut expected = &GradingPoly::one(1, 1) + &row(3);
        expected.add_term(vec![1, 1], BigInt::one());
        expected.add_term(vec![0, 2], BigInt::one());
        for i in 1..3 {
            expected = &expected + &row(i).scale(&BigInt::from(2));
        }
        assert_eq!(h, expected);
        assert_eq!(h.to_string(), "1 + 2*q1 + 2*u1 + 2*q1^2 + 3*q1*u1 + u1^2 + q1^3 + q1^2*u1");
        assert_eq!(h.eval_at_ones(), BigInt::from(13));

        for n in 2..=6 {
            assert_eq!(hilbert_series(n, 0, 1).unwrap().to_string(), "1 + 2*u1 + u1^2");
            let h10 = hilbert_series(n, 1, 0).unwrap();
            for d in 0..=n {
                let expected = if d == 0 || d == n { 1 } else { 2 };
                assert_eq!(h10.coeff(&[d]), BigInt::from(expected));
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(3, 2, 0).unwrap(), BigInt::from(16));
        assert_eq!(dimension(6, 3, 0).unwrap(), BigInt::from(142));
        assert_eq!(dimension(5, 1, 2).unwrap(), BigInt::from(40));
        assert_eq!(dimension(2, 0, 1).unwrap(), BigInt::from(4));
        assert_eq!(dimension(2, 0, 2).unwrap(), BigInt::from(9));
        assert_eq!(dimension(7, 0, 0).unwrap(), BigInt::one());
        assert!(dimension(1, 1, 1).is_err());
    }

    #[test]
    fn dimension_matches_hilbert_and_characters() {
        for n in 2..=8 {
            for k in 0..=4 {
                for j in 0..=4 {
                    let h = hilbert_series(n, k, j).unwrap();
                    assert_eq!(h.eval_at_ones(), dimension(n, k, j).unwrap(), "({n},{k},{j})");
                    let series = character_series(n, k, j).unwrap();
                    assert_eq!(series.at_identity(), h);
                    assert_eq!(series.multiplicity(CharLabel::Chi2), catalan_series(n, k, j).unwrap());
                    let zero = vec![0; k + j];
                    let degree_zero: Vec<_> =
                        series.label_polynomials().into_iter().filter(|(_, p)| !p.coeff(&zero).is_zero()).collect();
                    assert_eq!(degree_zero.len(), 1);
                    assert_eq!(degree_zero[0].0, CharLabel::Chi1);
                    assert!(degree_zero[0].1.coeff(&zero).is_one());
                }
            }
        }
    }

    #[test]
    fn identity_evaluation_is_hilbert() {
        for n in 2..=6 {
            for (k, j) in [(1, 0), (2, 0), (1, 1), (0, 2)] {
                let series = character_series(n, k, j).unwrap();
                let at_id = series.evaluate(GroupElement::identity());
                let h = hilbert_series(n, k, j).unwrap();
                assert_eq!(at_id.len(), h.len());
                for (e, c) in h.terms() {
                    assert_eq!(at_id[e], Cyclotomic::from_rational(c.clone().into()));
                }
                let expanded = series.expand();
                for (_, values) in expanded {
                    for (rep, _) in dihedral_classes(n) {
                        assert_eq!(values[rep.index(n)].conj(), values[rep.inverse(n).index(n)]);
                    }
                }
            }
        }
    }

    #[test]
    fn catalan_examples() {
        for n in 2..=8 {
            let mut expected = qt_integer(n + 1);
            expected.add_term(vec![1, 1], BigInt::one());
            let c = catalan_series(n, 2, 0).unwrap();
            assert_eq!(c, expected);
            assert_eq!(c.eval_at_ones(), BigInt::from(n + 2));
            assert!(catalan_series(n, 0, 0).unwrap().is_zero());
        }
        assert_eq!(catalan_series(4, 2, 0).unwrap().to_string(), "q*t + q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4");
    }

    #[test]
    fn cyclic_closed_forms() {
        for n in 1..=6 {
            let h = cyclic_hilbert(n, 1, 0).unwrap();
            assert_eq!(h.len(), n as usize);
            assert!((0..n).all(|d| h.coeff(&[d]).is_one()));
            assert_eq!(cyclic_dimension(n, 1, 0).unwrap(), BigInt::from(n));
            for k in 0..=3 {
                for j in 0..=3 {
                    let s = cyclic_character_series(n, k, j).unwrap();
                    let h = cyclic_hilbert(n, k, j).unwrap();
                    assert_eq!(s.at_identity(), h);
                    assert_eq!(h.eval_at_ones(), cyclic_dimension(n, k, j).unwrap());
                }
            }
        }
        assert_eq!(cyclic_dimension(3, 1, 1).unwrap(), BigInt::from(5));
        assert_eq!(cyclic_hilbert(3, 1, 0).unwrap().to_string(), "1 + q + q^2");
        assert!(cyclic_dimension(0, 1, 1).is_err());
    }

    #[test]
    fn series_display_and_json() {
        let s = character_series(3, 1, 0).unwrap();
        assert_eq!(s.to_string(), "chi1 + s(1)*chi^1 + s(2)*chi^1 + s(3)*chi2");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<CharacterSeries>(&json).unwrap(), s);
        let dims = GradedDims::from_poly(&hilbert_series(3, 1, 1).unwrap());
        let json = serde_json::to_string(&dims).unwrap();
        assert_eq!(serde_json::from_str::<GradedDims>(&json).unwrap(), dims);
        let dims = GradedDims::from_poly(&hilbert_series(3, 2, 0).unwrap());
        assert_eq!(dims.total(), 16);
        assert_eq!(dims.to_poly(2, 0), hilbert_series(3, 2, 0).unwrap());
    }
}
