//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use coinvariant::chartab::{class_function, dihedral_classes, dihedral_elements, inner_product};
use coinvariant::oracle::{
    certify_basis, character_traces, generator_experiment, quotient_hilbert_oracle, Coordinates,
};
use coinvariant::series::{
    character_series, cyclic_character_series, cyclic_dimension, cyclic_hilbert, dimension, hilbert_series,
};
use coinvariant::superring::{cyclic_basis_enumerate, Layout};
use coinvariant::symfunc::{skew_schur_jacobi_trudi, skew_schur_poly, super_schur, super_schur_at_ones};
use coinvariant::{CharLabel, GradedDims, GradingPoly, GroupKind, Partition};

type Outcome = Result<String, String>;
type Cell = ((usize, usize), fn(i64) -> i64, i64);
type Criterion = (&'static str, fn() -> Outcome);

const PAIRS: [(usize, usize); 8] = [(1, 0), (2, 0), (0, 1), (1, 1), (0, 2), (2, 1), (1, 2), (3, 0)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Exact polynomial cells `(k, j) ↦ numerator(n) / denominator`.
fn figure_cells() -> Vec<Cell> {
    vec![
        ((0, 1), |_| 4, 1),
        ((1, 0), |n| 2 * n, 1),
        ((1, 1), |n| 4 * n + 1, 1),
        ((1, 2), |n| 8 * n, 1),
        ((2, 0), |n| (n + 1) * (n + 1), 1),
        ((2, 1), |n| 2 * (n * n + n + 2), 1),
        ((2, 2), |n| 4 * n * n + 9, 1),
        ((2, 3), |n| 8 * n * n - 8 * n + 20, 1),
        ((3, 0), |n| 2 * n.pow(3) + 9 * n * n + 13 * n + 18, 6),
        ((3, 1), |n| 2 * n.pow(3) + 6 * n * n + 7 * n + 21, 3),
        ((3, 2), |n| 4 * n.pow(3) + 6 * n * n + 8 * n + 36, 3),
        ((3, 3), |n| 8 * n.pow(3) + 16 * n + 51, 3),
        ((3, 4), |n| 16 * n.pow(3) - 24 * n * n + 56 * n + 48, 3),
        ((4, 0), |n| n.pow(4) + 8 * n.pow(3) + 23 * n * n + 28 * n + 72, 12),
        ((4, 1), |n| n.pow(4) + 6 * n.pow(3) + 14 * n * n + 15 * n + 66, 6),
        ((4, 2), |n| n.pow(4) + 4 * n.pow(3) + 8 * n * n + 8 * n + 51, 3),
        ((4, 3), |n| 2 * n.pow(4) + 4 * n.pow(3) + 10 * n * n + 8 * n + 72, 3),
        ((4, 4), |n| 4 * n.pow(4) + 20 * n * n + 99, 3),
    ]
}

fn dimension_fixtures() -> Outcome {
    let mut checked = 0;
    for ((k, j), num, den) in figure_cells() {
        for n in 2..=8 {
            let value = num(n);
            ensure(value % den == 0, || format!("cell ({k},{j}) is not integral at n={n}"))?;
            let got = dimension(n as u32, k, j).map_err(|e| e.to_string())?;
            ensure(got == big(value / den), || format!("({n},{k},{j}): got {got}, expected {}", value / den))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} cells, n = 2..8, exact"))
}

fn spot_values() -> Outcome {
    ensure(dimension(6, 3, 0).unwrap() == big(142), || "dim(6,3,0) != 142".into())?;
    for n in 2..=12 {
        ensure(dimension(n, 0, 1).unwrap() == big(4), || format!("dim({n},0,1) != 4"))?;
        if n > 2 {
            ensure(dimension(n, 0, 2).unwrap() == big(10), || format!("dim({n},0,2) != 10"))?;
        }
    }
    Ok(format!("142; 4 and 10 for n <= 12; dim(2,0,2) = {}", dimension(2, 0, 2).unwrap()))
}

fn oracle_equivalence() -> Outcome {
    let mut cells = 0;
    let mut components = 0;
    for n in 2..=5 {
        for (k, j) in PAIRS {
            let o = quotient_hilbert_oracle(GroupKind::Dihedral, n, k, j, None, Coordinates::Eigen)
                .map_err(|e| e.to_string())?;
            let expected = GradedDims::from_poly(&hilbert_series(n, k, j).unwrap());
            ensure(o.dims == expected, || format!("({n},{k},{j}): oracle {:?} vs closed form {:?}", o.dims, expected))?;
            ensure(o.violations.is_empty(), || format!("({n},{k},{j}): nonzero above degree {n}: {:?}", o.violations))?;
            components += Layout::dihedral(k, j).unwrap().multidegrees_up_to(n + 2).len();
            cells += 1;
        }
    }
    // the group-averaging route must agree on the smaller cells
    for n in 2..=3 {
        for (k, j) in PAIRS {
            let a = quotient_hilbert_oracle(GroupKind::Dihedral, n, k, j, None, Coordinates::Real).unwrap();
            let b = quotient_hilbert_oracle(GroupKind::Dihedral, n, k, j, None, Coordinates::Eigen).unwrap();
            ensure(a.dims == b.dims, || format!("({n},{k},{j}): x and z,w coordinates disagree"))?;
        }
    }
    Ok(format!("{cells} cells, {components} multidegree components up to n+2; averaging route agrees for n <= 3"))
}

fn trace_equivalence() -> Outcome {
    let mut checked = 0;
    for n in 2..=5u32 {
        for (k, j) in PAIRS {
            let series = character_series(n, k, j).unwrap();
            for (g, _) in dihedral_classes(n) {
                let traces = character_traces(GroupKind::Dihedral, n, k, j, g).map_err(|e| e.to_string())?;
                let expected = series.evaluate(g);
                ensure(traces == expected, || format!("({n},{k},{j}) g={g}: traces {traces:?} vs {expected:?}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (cell, class) pairs exact over Q(zeta)"))
}

fn basis_certification() -> Outcome {
    let mut total = 0;
    for n in 2..=5 {
        for (k, j) in PAIRS {
            let r = certify_basis(GroupKind::Dihedral, n, k, j, 200).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("({n},{k},{j}): {:?}", r.failures))?;
            ensure(r.random_checked == 200, || "sample count".into())?;
            ensure(big(r.basis_size as i64) == dimension(n, k, j).unwrap(), || format!("({n},{k},{j}) size"))?;
            total += r.basis_size;
        }
    }
    Ok(format!("32 cells, {total} basis monomials, 200 random monomials each"))
}

fn qt(exps: [u32; 2]) -> GradingPoly {
    GradingPoly::monomial(2, 0, exps.to_vec(), BigInt::one())
}

/// The bigraded character written out term by term.
fn bigraded_display(n: u32) -> BTreeMap<CharLabel, GradingPoly> {
    let mut out: BTreeMap<CharLabel, GradingPoly> = BTreeMap::new();
    let mut add = |label: CharLabel, p: GradingPoly| {
        let slot = out.entry(label).or_insert_with(|| GradingPoly::zero(2, 0));
        *slot = &*slot + &p;
    };
    add(CharLabel::Chi1, qt([0, 0]));
    add(CharLabel::Chi2, qt([1, 1]));
    for i in 0..=n {
        add(CharLabel::Chi2, qt([n - i, i]));
    }
    for i in 1..=(n - 1) / 2 {
        for h in 0..=i {
            add(CharLabel::Two(i), qt([i - h, h]));
        }
        for h in 0..=(n - i) {
            add(CharLabel::Two(i), qt([n - i - h, h]));
        }
    }
    if n.is_multiple_of(2) {
        for i in 0..=n / 2 {
            add(CharLabel::Chi3, qt([n / 2 - i, i]));
            add(CharLabel::Chi4, qt([n / 2 - i, i]));
        }
    }
    out
}

fn bigraded_regression() -> Outcome {
    for n in 2..=8 {
        let got = character_series(n, 2, 0).unwrap().label_polynomials();
        let expected = bigraded_display(n);
        ensure(got == expected, || format!("n={n}: {got:?} vs {expected:?}"))?;
    }
    Ok("n = 2..8, both parities".into())
}

fn catalan() -> Outcome {
    for n in 2..=8u32 {
        let mut expected = qt([1, 1]);
        for i in 0..=n {
            expected = &expected + &qt([n - i, i]);
        }
        let got = character_series(n, 2, 0).unwrap().multiplicity(CharLabel::Chi2);
        ensure(got == expected, || format!("n={n}: {got} vs {expected}"))?;
    }
    for n in [3u32, 4] {
        let elements = dihedral_elements(n);
        let traces: Vec<_> =
            elements.iter().map(|g| character_traces(GroupKind::Dihedral, n, 2, 0, *g).unwrap()).collect();
        let sign = class_function(CharLabel::Chi2, n).unwrap();
        let mut degrees: Vec<&Vec<u32>> = traces.iter().flat_map(|t| t.keys()).collect();
        degrees.sort();
        degrees.dedup();
        let mut oracle = GradingPoly::zero(2, 0);
        for d in degrees {
            let f: Vec<_> = traces.iter().map(|t| t.get(d).cloned().unwrap_or_else(Zero::zero)).collect();
            let m: BigRational = inner_product(&f, &sign).map_err(|e| e.to_string())?;
            ensure(m.is_integer(), || format!("n={n} {d:?}: multiplicity {m}"))?;
            oracle.add_term(d.clone(), m.to_integer());
        }
        let expected = character_series(n, 2, 0).unwrap().multiplicity(CharLabel::Chi2);
        ensure(oracle == expected, || format!("n={n}: oracle {oracle} vs {expected}"))?;
    }
    Ok("closed form n = 2..8; oracle sign multiplicity n = 3, 4".into())
}

fn cyclic_appendix() -> Outcome {
    let mut cells = 0;
    for n in 1..=6u32 {
        for k in 0..=3 {
            for j in 0..=3 {
                let h = cyclic_hilbert(n, k, j).unwrap();
                ensure(h.eval_at_ones() == cyclic_dimension(n, k, j).unwrap(), || format!("({n},{k},{j}) dimension"))?;
                let o = quotient_hilbert_oracle(GroupKind::Cyclic, n, k, j, None, Coordinates::Real)
                    .map_err(|e| e.to_string())?;
                ensure(o.dims == GradedDims::from_poly(&h), || format!("({n},{k},{j}) oracle {:?}", o.dims))?;
                ensure(o.violations.is_empty(), || format!("({n},{k},{j}) violations"))?;
                let layout = Layout::cyclic(k, j).unwrap();
                let mut counts = GradingPoly::zero(k, j);
                for b in cyclic_basis_enumerate(n, k, j).unwrap() {
                    counts.add_term(b.multidegree(&layout), BigInt::one());
                }
                ensure(counts == h, || format!("({n},{k},{j}) basis counts"))?;
                let r = certify_basis(GroupKind::Cyclic, n, k, j, 50).unwrap();
                ensure(r.passed(), || format!("({n},{k},{j}) {:?}", r.failures))?;
                let series = cyclic_character_series(n, k, j).unwrap();
                for g in GroupKind::Cyclic.elements(n) {
                    let t = character_traces(GroupKind::Cyclic, n, k, j, g).unwrap();
                    ensure(t == series.evaluate(g), || format!("({n},{k},{j}) g={g} traces"))?;
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells: character series, Hilbert series, dimension, basis"))
}

fn partitions_up_to(max: u32) -> Vec<Partition> {
    fn go(remaining: u32, largest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).unwrap());
        for p in 1..=remaining.min(largest) {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, max, &mut Vec::new(), &mut out);
    out
}

fn symfunc_consistency() -> Outcome {
    let shapes = partitions_up_to(6);
    let mut pairs = 0;
    for lam in &shapes {
        for nu in lam.subpartitions() {
            for m in 0..=4 {
                let a = skew_schur_poly(lam, &nu, m);
                let b = skew_schur_jacobi_trudi(lam, &nu, m);
                ensure(a == b, || format!("{lam}/{nu} in {m} variables: {a} vs {b}"))?;
                pairs += 1;
            }
        }
    }
    for size in 0..=8 {
        for shape in [Partition::row(size), Partition::column(size)] {
            for k in 0..=4 {
                for j in 0..=4 {
                    let closed = super_schur_at_ones(&shape, k, j).unwrap();
                    let expanded = super_schur(&shape, k, j).eval_at_ones();
                    ensure(closed == expanded, || format!("{shape} ({k},{j}): {closed} vs {expanded}"))?;
                }
            }
        }
    }
    Ok(format!("{pairs} skew evaluations; rows and columns up to 8 boxes, k, j <= 4"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("dimension fixtures", dimension_fixtures),
        ("spot values", spot_values),
        ("oracle equivalence", oracle_equivalence),
        ("character traces", trace_equivalence),
        ("basis certification", basis_certification),
        ("bigraded regression", bigraded_regression),
        ("catalan", catalan),
        ("cyclic groups", cyclic_appendix),
        ("symmetric functions", symfunc_consistency),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    for n in 2..=4 {
        for (k, j) in [(1, 0), (2, 0), (1, 1), (0, 2)] {
            if let Ok(e) = generator_experiment(n, k, j, n + 2) {
                let verdict = if e.generates() { "generate" } else { "do not generate" };
                println!(
                    "[INFO] listed ideal elements {verdict} the invariant ideal at ({n},{k},{j}) up to degree {}",
                    n + 2
                );
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
