//! Certification of the monomial basis against the invariant ideal.

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::hilbert::{invariant_ideal, layout_for, top_degree, Coordinates};
use super::trace::basis_for;
use crate::series::GroupKind;
use crate::superring::{
    first_index_monomials, ideal_generators, reduce, reduce_poly, Layout, SuperMonomial, SuperPoly,
};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyFailure {
    pub check: String,
    pub multidegree: Vec<u32>,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub group: GroupKind,
    pub n: u32,
    pub k: usize,
    pub j: usize,
    pub basis_size: usize,
    pub random_checked: usize,
    pub failures: Vec<CertifyFailure>,
}

impl CertifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, check: &str, multidegree: Vec<u32>, witness: String) {
        self.failures.push(CertifyFailure { check: check.into(), multidegree, witness });
    }
}

/// A random monomial of total degree at most `max_degree`.
pub fn random_monomial(layout: &Layout, max_degree: u32, rng: &mut impl Rng) -> SuperMonomial {
    let mut m = SuperMonomial::one(layout);
    let nvars = layout.nbos() + layout.nferm();
    if nvars == 0 {
        return m;
    }
    let target = rng.gen_range(0..=max_degree);
    let mut placed = 0;
    let mut tries = 0;
    while placed < target && tries < 64 * (target as usize + 1) {
        tries += 1;
        let v = rng.gen_range(0..nvars);
        if v < layout.nbos() {
            m.bos[v] += 1;
        } else if !m.has_ferm(v - layout.nbos()) {
            m.ferm |= 1 << (v - layout.nbos());
        } else {
            continue;
        }
        placed += 1;
    }
    m
}

/// Checks, in `x` coordinates: the basis is independent modulo the ideal
/// in every multidegree, its counts match the eigen-coordinate oracle,
/// straightening fixes the basis and kills the listed ideal elements, and
/// `m - reduce(m)` lies in the ideal for `samples` random monomials.
pub fn certify_basis(group: GroupKind, n: u32, k: usize, j: usize, samples: usize) -> Result<CertifyReport> {
    let layout = layout_for(group, k, j)?;
    let basis = basis_for(group, n, k, j)?;
    let cap = n + 2;
    let eigen = invariant_ideal(group, n, k, j, cap, Coordinates::Eigen)?;
    let real = invariant_ideal(group, n, k, j, cap, Coordinates::RealFromEigen)?;
    let mut report = CertifyReport { group, n, k, j, basis_size: basis.len(), random_checked: 0, failures: Vec::new() };
    let top = top_degree(group, n);

    for (d, comp) in eigen.components() {
        let here: Vec<&SuperMonomial> = basis.iter().filter(|b| b.multidegree(&layout) == *d).collect();
        if here.len() != comp.quotient_dim() {
            report.fail(
                "count",
                d.clone(),
                format!("{} basis monomials, quotient dimension {}", here.len(), comp.quotient_dim()),
            );
        }
        if d.iter().sum::<u32>() > top && comp.quotient_dim() > 0 {
            report.fail("vanishing", d.clone(), format!("quotient dimension {}", comp.quotient_dim()));
        }
        let real_comp = real.component(d).expect("same multidegrees");
        if real_comp.quotient_dim() != comp.quotient_dim() {
            report.fail("coordinates", d.clone(), format!("x rank {} vs z,w rank {}", real_comp.rank(), comp.rank()));
        }
        let mut with_basis = real_comp.clone();
        for b in here {
            if !with_basis.insert(&SuperPoly::monomial(layout, b.clone(), BigRational::one())) {
                report.fail("independence", d.clone(), layout.format_monomial(b));
            }
        }
    }
    for b in &basis {
        if b.degree() > cap {
            report.fail("degree", b.multidegree(&layout), layout.format_monomial(b));
        }
        if reduce(&layout, n, b) != Some((false, b.clone())) {
            report.fail("idempotence", b.multidegree(&layout), layout.format_monomial(b));
        }
    }
    let generators: Vec<SuperPoly<BigRational>> = match group {
        GroupKind::Dihedral => ideal_generators(n, k, j)?,
        GroupKind::Cyclic => first_index_monomials(&layout, n)
            .into_iter()
            .map(|m| SuperPoly::monomial(layout, m, BigRational::one()))
            .collect(),
    };
    for g in &generators {
        if !reduce_poly(g, n).is_zero() {
            report.fail("generator", g.multidegree().unwrap_or_default(), g.to_text());
        }
    }

    let seed = (n as u64) << 32 | (k as u64) << 16 | j as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = random_monomial(&layout, n + 1, &mut rng);
        let d = m.multidegree(&layout);
        let mut diff = SuperPoly::monomial(layout, m.clone(), BigRational::one());
        if let Some((neg, b)) = reduce(&layout, n, &m) {
            diff.add_signed(!neg, b, BigRational::one());
        }
        let comp = real.component(&d).expect("sample degree is within the cap");
        if !comp.contains(&diff) {
            report.fail("membership", d, layout.format_monomial(&m));
        }
        report.random_checked += 1;
    }
    Ok(report)
}
