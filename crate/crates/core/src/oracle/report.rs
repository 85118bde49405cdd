//! Verification of one `(group, n, k, j)` cell: oracle dimensions against
//! the closed-form Hilbert series, plus basis certification.

use serde::{Deserialize, Serialize};

use super::certify::{certify_basis, CertifyReport};
use super::hilbert::{quotient_hilbert_oracle, Coordinates};
use crate::series::{cyclic_hilbert, hilbert_series, GradedDims, GroupKind};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub multidegree: Vec<u32>,
    pub expected: u64,
    pub found: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCell {
    pub group: GroupKind,
    pub n: u32,
    pub k: usize,
    pub j: usize,
    pub cap: u32,
    pub passed: bool,
    pub oracle: GradedDims,
    pub mismatches: Vec<Mismatch>,
    pub violations: Vec<Vec<u32>>,
    pub certificate: CertifyReport,
}

/// Runs the oracle and the certifier on one cell.
pub fn verify_cell(
    group: GroupKind,
    n: u32,
    k: usize,
    j: usize,
    cap: Option<u32>,
    samples: usize,
) -> Result<VerifyCell> {
    let oracle = quotient_hilbert_oracle(group, n, k, j, cap, Coordinates::Eigen)?;
    let expected = GradedDims::from_poly(&match group {
        GroupKind::Dihedral => hilbert_series(n, k, j)?,
        GroupKind::Cyclic => cyclic_hilbert(n, k, j)?,
    });
    let mut keys: Vec<&Vec<u32>> = expected.dims.keys().chain(oracle.dims.dims.keys()).collect();
    keys.sort();
    keys.dedup();
    let mismatches: Vec<Mismatch> = keys
        .into_iter()
        .filter(|d| d.iter().sum::<u32>() <= oracle.cap)
        .filter_map(|d| {
            let (e, f) = (expected.get(d), oracle.dims.get(d));
            (e != f).then(|| Mismatch { multidegree: d.clone(), expected: e, found: f })
        })
        .collect();
    let certificate = certify_basis(group, n, k, j, samples)?;
    let passed = mismatches.is_empty() && oracle.violations.is_empty() && certificate.passed();
    Ok(VerifyCell {
        group,
        n,
        k,
        j,
        cap: oracle.cap,
        passed,
        oracle: oracle.dims,
        mismatches,
        violations: oracle.violations,
        certificate,
    })
}
