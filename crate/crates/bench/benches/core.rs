use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use coinvariant::oracle::{certify_basis, character_traces, quotient_hilbert_oracle, Coordinates};
use coinvariant::series::{character_series, dimension};
use coinvariant::superring::reduce;
use coinvariant::symfunc::{skew_schur_jacobi_trudi, skew_schur_poly, super_schur};
use coinvariant::{GroupElement, GroupKind, Layout, Partition};

fn symfunc(c: &mut Criterion) {
    let lam = Partition::new(vec![3, 2, 1]).unwrap();
    let nu = Partition::new(vec![1]).unwrap();
    c.bench_function("skew_schur tableaux (3,2,1)/(1), m=4", |b| b.iter(|| skew_schur_poly(black_box(&lam), &nu, 4)));
    c.bench_function("skew_schur determinant (3,2,1)/(1), m=4", |b| {
        b.iter(|| skew_schur_jacobi_trudi(black_box(&lam), &nu, 4))
    });
    c.bench_function("super_schur (6), k=4, j=4", |b| b.iter(|| super_schur(black_box(&Partition::row(6)), 4, 4)));
}

fn series(c: &mut Criterion) {
    c.bench_function("dimension n=12 k=4 j=4", |b| b.iter(|| dimension(black_box(12), 4, 4)));
    c.bench_function("character_series n=6 (2,1) expand", |b| {
        b.iter(|| character_series(black_box(6), 2, 1).unwrap().expand())
    });
}

fn rewriting(c: &mut Criterion) {
    let layout = Layout::dihedral(2, 2).unwrap();
    let monomials: Vec<_> = layout.multidegrees_up_to(7).iter().flat_map(|d| layout.monomials_of_degree(d)).collect();
    c.bench_function(&format!("reduce {} monomials, n=5 (2,2)", monomials.len()), |b| {
        b.iter(|| monomials.iter().filter(|m| reduce(&layout, 5, m).is_some()).count())
    });
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("hilbert n=4 (2,1)", |b| {
        b.iter(|| quotient_hilbert_oracle(GroupKind::Dihedral, black_box(4), 2, 1, None, Coordinates::Eigen).unwrap())
    });
    g.bench_function("traces n=4 (2,0) rho", |b| {
        b.iter(|| character_traces(GroupKind::Dihedral, black_box(4), 2, 0, GroupElement::rotation(1, 4)).unwrap())
    });
    g.bench_function("certify n=4 (1,1), 200 samples", |b| {
        b.iter(|| certify_basis(GroupKind::Dihedral, black_box(4), 1, 1, 200).unwrap())
    });
    g.finish();
}

criterion_group!(benches, symfunc, series, rewriting, oracle);
criterion_main!(benches);
