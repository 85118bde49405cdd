//! Straightening: rewrites any monomial to `±` a basis monomial or zero
//! modulo the invariant ideal.
//!
//! Rewrites used, with `a_1` any further first-index factor present:
//!
//! * (F) `a_1 θ_1^{(i)} θ_2^{(i)} ≡ 0`
//! * (A) `v_2^{(a)} w_2^{(b)} ≡ -v_1^{(a)} w_1^{(b)}`
//! * (B) a first-index part of total degree `>= n` is zero
//! * (C)–(E) `a_1 · b_1 c_2 ≡ ε a_1 · c_1 b_2`, `ε = -1` iff `b`, `c` are
//!   both fermionic, moving the lone second-index variable to the smallest
//!   available set.

use super::generators::SetVar;
use super::monomial::{Layout, SuperMonomial};
use super::poly::SuperPoly;
use crate::scalar::Scalar;

/// Sign and monomial, or `None` for zero.
pub type Signed = Option<(bool, SuperMonomial)>;

/// Product of `(var, idx)` factors in the written order, with its sign
/// relative to the canonical monomial.
fn written(layout: &Layout, factors: &[(SetVar, usize)]) -> Signed {
    let mut acc = (false, SuperMonomial::one(layout));
    for &(v, idx) in factors {
        let (neg, m) = acc.1.mul(&v.monomial(layout, idx))?;
        acc = (acc.0 ^ neg, m);
    }
    Some(acc)
}

/// Replaces the written product `pattern` inside `±m` by `(-1)^flip ·
/// replacement`.
fn rewrite(
    layout: &Layout,
    (neg, m): (bool, SuperMonomial),
    pattern: &[(SetVar, usize)],
    replacement: &[(SetVar, usize)],
    flip: bool,
) -> Signed {
    let (neg_p, p) = written(layout, pattern).expect("pattern is nonzero");
    let rest = m.quotient(&p).expect("pattern divides the monomial");
    let (neg_pr, check) = p.mul(&rest).expect("pattern and cofactor are disjoint");
    debug_assert_eq!(check, m);
    let (neg_q, q) = written(layout, replacement)?;
    let (neg_qr, out) = q.mul(&rest)?;
    Some((neg ^ neg_pr ^ neg_p ^ flip ^ neg_q ^ neg_qr, out))
}

struct Parts {
    /// Total degree of the first-index factors.
    first_degree: u32,
    /// Sets carrying a first-index boson, ascending.
    first_bos: Vec<usize>,
    /// Sets carrying a first-index fermion, ascending.
    first_ferm: Vec<usize>,
    /// Second-index variables in generator order, bosons with multiplicity.
    second: Vec<SetVar>,
}

fn parts(layout: &Layout, m: &SuperMonomial) -> Parts {
    let mut p = Parts { first_degree: 0, first_bos: Vec::new(), first_ferm: Vec::new(), second: Vec::new() };
    for s in 0..layout.k() {
        let e1 = m.bos[layout.bos_slot(s, 0)];
        if e1 > 0 {
            p.first_degree += e1;
            p.first_bos.push(s);
        }
        for _ in 0..m.bos[layout.bos_slot(s, 1)] {
            p.second.push(SetVar::Bos(s));
        }
    }
    for s in 0..layout.j() {
        if m.has_ferm(layout.ferm_bit(s, 0)) {
            p.first_degree += 1;
            p.first_ferm.push(s);
        }
        if m.has_ferm(layout.ferm_bit(s, 1)) {
            p.second.push(SetVar::Ferm(s));
        }
    }
    p
}

fn reduce_dihedral(layout: &Layout, n: u32, m: &SuperMonomial) -> Signed {
    let mut cur = (false, m.clone());
    loop {
        let p = parts(layout, &cur.1);
        // (F)
        if p.first_degree >= 2 && p.first_ferm.iter().any(|&s| p.second.contains(&SetVar::Ferm(s))) {
            return None;
        }
        // (A)
        if p.second.len() >= 2 {
            let (a, b) = (p.second[0], p.second[1]);
            cur = rewrite(layout, cur, &[(a, 1), (b, 1)], &[(a, 0), (b, 0)], true)?;
            continue;
        }
        // (B)
        if p.first_degree >= n {
            return None;
        }
        let Some(&c) = p.second.first() else {
            return Some(cur);
        };
        let b = match c {
            SetVar::Bos(i) => p.first_bos.iter().copied().find(|&h| h < i).map(SetVar::Bos),
            SetVar::Ferm(i) => match p.first_bos.first() {
                Some(&h) => Some(SetVar::Bos(h)),
                None => p.first_ferm.iter().copied().find(|&h| h < i).map(SetVar::Ferm),
            },
        };
        match b {
            // a lone `b_1 c_2` is one of the sporadic quadratic basis elements
            Some(b) if p.first_degree >= 2 => {
                let flip = b.is_odd() && c.is_odd();
                cur = rewrite(layout, cur, &[(b, 0), (c, 1)], &[(c, 0), (b, 1)], flip)?;
            }
            _ => return Some(cur),
        }
    }
}

/// Normal form of a monomial: `Some((negative, b))` for `±b` with `b` a basis
/// monomial, `None` for zero. Width-2 layouts use the dihedral rules; width-1
/// layouts the cyclic ones.
pub fn reduce(layout: &Layout, n: u32, m: &SuperMonomial) -> Signed {
    if layout.width() == 1 {
        return (m.degree() < n).then(|| (false, m.clone()));
    }
    reduce_dihedral(layout, n, m)
}

/// Linear extension of [`reduce`].
pub fn reduce_poly<F: Scalar>(p: &SuperPoly<F>, n: u32) -> SuperPoly<F> {
    let layout = *p.layout();
    let mut out = SuperPoly::zero(layout);
    for (m, c) in p.terms() {
        if let Some((neg, b)) = reduce(&layout, n, m) {
            out.add_signed(neg, b, c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superring::{basis_enumerate, cyclic_basis_enumerate, ideal_generators};
    use num_rational::BigRational;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    type P = SuperPoly<BigRational>;

    fn show(layout: &Layout, r: &Signed) -> String {
        match r {
            None => "0".into(),
            Some((neg, m)) => format!("{}{}", if *neg { "-" } else { "" }, layout.format_monomial(m)),
        }
    }

    fn red(layout: &Layout, n: u32, text: &str) -> String {
        let (neg, m) = layout.parse_monomial(text).unwrap();
        show(layout, &reduce(layout, n, &m).map(|(s, b)| (s ^ neg, b)))
    }

    #[test]
    fn examples() {
        let l = Layout::dihedral(2, 2).unwrap();
        assert_eq!(red(&l, 4, "x2_1^2"), "-x1_1^2");
        for n in 2..=6 {
            assert_eq!(red(&l, n, &format!("x1_1^{n}")), "0");
        }
        for n in 3..=6 {
            assert_eq!(red(&l, n, "x1_1 x1_2 x2_2"), "x2_1 x1_2^2");
        }
        assert_eq!(red(&l, 4, "t1_1 t1_2 t2_2"), "0");
        let p = &P::x(l, 0, 1).mul(&P::x(l, 0, 1)).unwrap() + &P::x(l, 0, 0).mul(&P::x(l, 0, 0)).unwrap();
        assert!(reduce_poly(&p, 3).is_zero());
    }

    #[test]
    fn basis_is_fixed_and_generators_vanish() {
        for n in 2..=6 {
            for k in 0..=3 {
                for j in 0..=3 {
                    let l = Layout::dihedral(k, j).unwrap();
                    for b in basis_enumerate(n, k, j).unwrap() {
                        assert_eq!(reduce(&l, n, &b), Some((false, b.clone())), "{}", l.format_monomial(&b));
                    }
                    for g in ideal_generators::<BigRational>(n, k, j).unwrap() {
                        assert!(reduce_poly(&g, n).is_zero(), "({n},{k},{j}) {g}");
                    }
                }
            }
        }
        for n in 1..=5 {
            let l = Layout::cyclic(2, 2).unwrap();
            for b in cyclic_basis_enumerate(n, 2, 2).unwrap() {
                assert_eq!(reduce(&l, n, &b), Some((false, b.clone())));
            }
        }
    }

    fn arb_case() -> impl Strategy<Value = (u32, Layout, SuperMonomial)> {
        (2u32..6, 0usize..3, 0usize..3).prop_flat_map(|(n, k, j)| {
            let l = Layout::dihedral(k, j).unwrap();
            (proptest::collection::vec(0u32..3, 2 * k), 0u64..(1 << (2 * j)))
                .prop_map(move |(bos, ferm)| (n, l, SuperMonomial::new(&l, bos, ferm)))
        })
    }

    proptest! {
        #[test]
        fn output_is_basis_and_degree_preserving((n, l, m) in arb_case()) {
            let basis: BTreeSet<_> = basis_enumerate(n, l.k(), l.j()).unwrap().into_iter().collect();
            if let Some((_, b)) = reduce(&l, n, &m) {
                prop_assert!(basis.contains(&b), "{} -> {}", l.format_monomial(&m), l.format_monomial(&b));
                prop_assert_eq!(b.multidegree(&l), m.multidegree(&l));
                prop_assert_eq!(reduce(&l, n, &b), Some((false, b.clone())));
            }
        }
    }
}
