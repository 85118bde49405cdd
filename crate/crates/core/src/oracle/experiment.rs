//! Compares the ideal generated by the closed-form list of ideal elements
//! with the full invariant ideal, degree by degree. Reported, not asserted.

use serde::{Deserialize, Serialize};

use super::hilbert::{invariant_ideal, Coordinates};
use super::ideal::GradedIdeal;
use crate::series::GroupKind;
use crate::superring::{ideal_generators, Layout};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanComparison {
    pub multidegree: Vec<u32>,
    pub invariant_rank: usize,
    pub listed_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorExperiment {
    pub n: u32,
    pub k: usize,
    pub j: usize,
    pub cap: u32,
    /// Multidegrees where the listed elements span less than the ideal.
    pub deficits: Vec<SpanComparison>,
    /// Multidegrees where the listed elements exceed the invariant ideal,
    /// which would mean some listed element is not in it.
    pub excesses: Vec<SpanComparison>,
}

impl GeneratorExperiment {
    pub fn generates(&self) -> bool {
        self.deficits.is_empty() && self.excesses.is_empty()
    }
}

pub fn generator_experiment(n: u32, k: usize, j: usize, cap: u32) -> Result<GeneratorExperiment> {
    let layout = Layout::dihedral(k, j)?;
    let full = invariant_ideal(GroupKind::Dihedral, n, k, j, cap, Coordinates::RealFromEigen)?;
    let listed = ideal_generators(n, k, j)?;
    let generated = GradedIdeal::build(layout, cap, |d| {
        listed.iter().filter(|p| p.multidegree().as_deref() == Some(d)).cloned().collect()
    });
    let mut out = GeneratorExperiment { n, k, j, cap, deficits: Vec::new(), excesses: Vec::new() };
    for (d, c) in full.components() {
        let g = generated.component(d).expect("same multidegrees");
        let row = SpanComparison { multidegree: d.clone(), invariant_rank: c.rank(), listed_rank: g.rank() };
        if g.rank() < c.rank() {
            out.deficits.push(row);
        } else if g.rank() > c.rank() {
            out.excesses.push(row);
        }
    }
    Ok(out)
}
