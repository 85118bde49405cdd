//! Multidegree components of a homogeneous ideal, built degree by degree:
//! `I_d = Σ_v v · I_{d - deg v} + span(seeds_d)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::linalg::{integer_row, IntEchelon};
use crate::series::GradedDims;
use crate::superring::{Layout, SuperMonomial, SuperPoly};

/// One multidegree component: all monomials of that degree as columns and
/// an echelon basis of the ideal's span.
#[derive(Debug, Clone)]
pub struct Component {
    columns: Vec<SuperMonomial>,
    index: HashMap<SuperMonomial, usize>,
    echelon: IntEchelon,
}

impl Component {
    fn new(layout: &Layout, degree: &[u32]) -> Self {
        let columns = layout.monomials_of_degree(degree);
        let index = columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let echelon = IntEchelon::new(columns.len());
        Self { columns, index, echelon }
    }

    pub fn columns(&self) -> &[SuperMonomial] {
        &self.columns
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Dimension of the quotient in this degree.
    pub fn quotient_dim(&self) -> usize {
        self.columns.len() - self.echelon.rank()
    }

    /// Coordinate vector of a polynomial supported in this degree.
    pub fn vector(&self, p: &SuperPoly<BigRational>) -> Vec<BigInt> {
        let mut v = vec![BigRational::zero(); self.columns.len()];
        for (m, c) in p.terms() {
            let i = *self.index.get(m).expect("polynomial has the component's multidegree");
            v[i] = c.clone();
        }
        integer_row(&v)
    }

    pub fn contains(&self, p: &SuperPoly<BigRational>) -> bool {
        p.is_zero() || self.echelon.contains(self.vector(p))
    }

    pub fn insert(&mut self, p: &SuperPoly<BigRational>) -> bool {
        !p.is_zero() && self.echelon.insert(self.vector(p))
    }

    pub fn echelon(&self) -> &IntEchelon {
        &self.echelon
    }
}

/// Components of an ideal for every multidegree of total degree `<= cap`.
#[derive(Debug, Clone)]
pub struct GradedIdeal {
    layout: Layout,
    cap: u32,
    comps: BTreeMap<Vec<u32>, Component>,
}

impl GradedIdeal {
    /// Builds the ideal generated by `seeds(d)` over all multidegrees `d`.
    /// Components of equal total degree are computed in parallel.
    pub fn build<S>(layout: Layout, cap: u32, seeds: S) -> Self
    where
        S: Fn(&[u32]) -> Vec<SuperPoly<BigRational>> + Sync,
    {
        let mut comps: BTreeMap<Vec<u32>, Component> = BTreeMap::new();
        let degrees = layout.multidegrees_up_to(cap);
        for total in 0..=cap {
            let level: Vec<&Vec<u32>> = degrees.iter().filter(|d| d.iter().sum::<u32>() == total).collect();
            let built: Vec<(Vec<u32>, Component)> =
                level.par_iter().map(|d| ((*d).clone(), Self::build_component(&layout, d, &comps, &seeds))).collect();
            comps.extend(built);
        }
        Self { layout, cap, comps }
    }

    fn build_component<S>(layout: &Layout, d: &[u32], lower: &BTreeMap<Vec<u32>, Component>, seeds: &S) -> Component
    where
        S: Fn(&[u32]) -> Vec<SuperPoly<BigRational>>,
    {
        let mut comp = Component::new(layout, d);
        for p in seeds(d) {
            if comp.echelon.is_full() {
                return comp;
            }
            comp.insert(&p);
        }
        let w = layout.width();
        for set in 0..d.len() {
            if d[set] == 0 {
                continue;
            }
            let mut below = d.to_vec();
            below[set] -= 1;
            let prev = &lower[&below];
            for idx in 0..w {
                let v = if set < layout.k() {
                    SuperMonomial::boson(layout, layout.bos_slot(set, idx))
                } else {
                    SuperMonomial::fermion(layout, layout.ferm_bit(set - layout.k(), idx))
                };
                for row in prev.echelon.rows() {
                    if comp.echelon.is_full() {
                        return comp;
                    }
                    let mut out = vec![BigInt::zero(); comp.columns.len()];
                    for (c, x) in row.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        if let Some((neg, m)) = prev.columns[c].mul(&v) {
                            out[comp.index[&m]] = if neg { -x } else { x.clone() };
                        }
                    }
                    comp.echelon.insert(out);
                }
            }
        }
        comp
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn component(&self, degree: &[u32]) -> Option<&Component> {
        self.comps.get(degree)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<u32>, &Component)> {
        self.comps.iter()
    }

    pub fn quotient_dims(&self) -> GradedDims {
        let mut dims = GradedDims::default();
        for (d, c) in &self.comps {
            dims.insert(d.clone(), c.quotient_dim() as u64);
        }
        dims
    }
}
