//! The diagonal group action, in real coordinates `x_1, x_2` and in the
//! eigen-coordinates `z = x_1 + i x_2`, `w = x_1 - i x_2`.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chartab::{Cyclotomic, GroupElement};
use crate::scalar::{rational, Scalar};
use crate::series::GroupKind;
use crate::superring::{Layout, SuperMonomial, SuperPoly};
use crate::symfunc::binomial;
use crate::{Error, Result};

/// Exact matrices of the action on one variable set, with `g · P(x) =
/// P(M_g x)` applied diagonally to every set.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: GroupKind,
    n: u32,
    layout: Layout,
    /// Images of `x_1, x_2` (or `x`) under `ρ` and `φ`, as rows of the
    /// matrices.
    rho: Vec<Vec<Cyclotomic>>,
    phi: Vec<Vec<Cyclotomic>>,
}

impl GroupAction {
    pub fn new(group: GroupKind, n: u32, layout: Layout) -> Result<Self> {
        group.check_order(n)?;
        assert_eq!(layout.width(), group.width(), "layout does not match the group");
        let (rho, phi) = match group {
            GroupKind::Dihedral => {
                let order = n.lcm(&4);
                let zeta = Cyclotomic::root_of_unity(order, (order / n) as i64);
                let zeta_inv = zeta.conj();
                let i = Cyclotomic::root_of_unity(order, (order / 4) as i64);
                let half = Cyclotomic::from_rational(rational(1, 2));
                let cos = &half * &(&zeta + &zeta_inv);
                // sin = (ζ - ζ^{-1}) / 2i
                let sin = &(&half * &(&zeta - &zeta_inv)) * &(-&i);
                let rho = vec![vec![cos.clone(), -&sin], vec![sin, cos]];
                let one = Cyclotomic::one();
                let phi = vec![vec![one.clone(), Cyclotomic::zero()], vec![Cyclotomic::zero(), -&one]];
                (rho, phi)
            }
            GroupKind::Cyclic => (vec![vec![Cyclotomic::root_of_unity(n, 1)]], vec![vec![Cyclotomic::one()]]),
        };
        Ok(Self { group, n, layout, rho, phi })
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.group.elements(self.n)
    }

    /// `M_g = M_ρ^e` or `M_ρ^e M_φ`.
    pub fn matrix(&self, g: GroupElement) -> Vec<Vec<Cyclotomic>> {
        let w = self.layout.width();
        let mut m: Vec<Vec<Cyclotomic>> = (0..w)
            .map(|r| (0..w).map(|c| if r == c { Cyclotomic::one() } else { Cyclotomic::zero() }).collect())
            .collect();
        for _ in 0..g.exponent() {
            m = matmul(&m, &self.rho);
        }
        if g.is_reflection() {
            m = matmul(&m, &self.phi);
        }
        m
    }

    /// `g · p`: substitutes `x_r ↦ Σ_c M_g[r][c] x_c` in every set.
    pub fn act(&self, g: GroupElement, p: &SuperPoly<Cyclotomic>) -> SuperPoly<Cyclotomic> {
        let m = self.matrix(g);
        let l = self.layout;
        let image = |boson: bool, slot: usize| {
            let (set, r) = l.split(slot);
            let mut out = SuperPoly::zero(l);
            for (c, coeff) in m[r].iter().enumerate() {
                let v = if boson { SuperPoly::x(l, set, c) } else { SuperPoly::theta(l, set, c) };
                out = &out + &v.scale(coeff);
            }
            out
        };
        let bos: Vec<_> = (0..l.nbos()).map(|s| image(true, s)).collect();
        let ferm: Vec<_> = (0..l.nferm()).map(|s| image(false, s)).collect();
        p.substitute(&bos, &ferm)
    }

    /// Averages over the whole group, over the cyclotomic field.
    pub fn reynolds_cyclotomic(&self, p: &SuperPoly<Cyclotomic>) -> SuperPoly<Cyclotomic> {
        let elements = self.elements();
        let mut total = SuperPoly::zero(self.layout);
        for g in &elements {
            total = &total + &self.act(*g, p);
        }
        total.scale(&Cyclotomic::from_rational(BigRational::new(1.into(), (elements.len() as i64).into())))
    }

    /// Group average of a rational polynomial; the result is rational.
    pub fn reynolds(&self, p: &SuperPoly<BigRational>) -> Result<SuperPoly<BigRational>> {
        to_rational(&self.reynolds_cyclotomic(&lift(p)))
    }
}

fn matmul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let w = a.len();
    (0..w)
        .map(|r| (0..w).map(|c| (0..w).fold(Cyclotomic::zero(), |acc, t| &acc + &(&a[r][t] * &b[t][c]))).collect())
        .collect()
}

pub fn lift(p: &SuperPoly<BigRational>) -> SuperPoly<Cyclotomic> {
    p.map(|c| Cyclotomic::from_rational(c.clone()))
}

pub fn to_rational(p: &SuperPoly<Cyclotomic>) -> Result<SuperPoly<BigRational>> {
    let mut out = SuperPoly::zero(*p.layout());
    for (m, c) in p.terms() {
        let r = c.to_rational().ok_or_else(|| Error::NotRational(c.to_string()))?;
        out.add_term(m.clone(), r);
    }
    Ok(out)
}

/// The two fundamental invariants of a bosonic set: `x_1^2 + x_2^2` and
/// `Re (x_1 + i x_2)^n`.
pub fn fundamental_invariants(layout: Layout, n: u32, set: usize) -> [SuperPoly<BigRational>; 2] {
    let x1 = SuperMonomial::boson(&layout, layout.bos_slot(set, 0));
    let x2 = SuperMonomial::boson(&layout, layout.bos_slot(set, 1));
    let power = |a: u32, b: u32| {
        let mut m = SuperMonomial::one(&layout);
        m.bos[layout.bos_slot(set, 0)] = a;
        m.bos[layout.bos_slot(set, 1)] = b;
        m
    };
    let mut quad = SuperPoly::zero(layout);
    quad.add_term(x1.mul(&x1).unwrap().1, BigRational::one());
    quad.add_term(x2.mul(&x2).unwrap().1, BigRational::one());
    let mut re = SuperPoly::zero(layout);
    for m in 0..=n / 2 {
        let c = binomial(n as u64, 2 * m as u64) * if m % 2 == 0 { 1 } else { -1 };
        re.add_term(power(n - 2 * m, 2 * m), BigRational::from_integer(c));
    }
    [quad, re]
}

/// Weight of a monomial in eigen-coordinates: `ρ` scales it by `ζ_n^weight`.
/// Slot 0 of every set is `z` (weight 1), slot 1 is `w` (weight -1); in the
/// cyclic layout every variable has weight 1.
pub fn weight(layout: &Layout, m: &SuperMonomial) -> i64 {
    let w = layout.width();
    let sign = |slot: usize| if slot.is_multiple_of(w) { 1 } else { -1 };
    let bos: i64 = m.bos().iter().enumerate().map(|(s, &e)| sign(s) * e as i64).sum();
    bos + m.ferm_bits().map(sign).sum::<i64>()
}

/// `φ` in eigen-coordinates: swaps `z` and `w` in every set.
pub fn swap_zw(layout: &Layout, m: &SuperMonomial) -> (bool, SuperMonomial) {
    let mut bos = m.bos().to_vec();
    for pair in bos.chunks_mut(2) {
        pair.swap(0, 1);
    }
    let mut out = (false, SuperMonomial::new(layout, bos, 0));
    for b in m.ferm_bits() {
        let (neg, p) = out.1.mul(&SuperMonomial::fermion(layout, b ^ 1)).expect("distinct fermions");
        out = (out.0 ^ neg, p);
    }
    out
}

/// Reynolds image of a monomial in eigen-coordinates, scaled by 2 so that
/// it is integral: `m + φ(m)` if `n` divides the weight, else zero. In the
/// cyclic layout it is `m` itself when `n` divides the degree.
pub fn diagonal_reynolds(layout: &Layout, n: u32, m: &SuperMonomial) -> SuperPoly<BigRational> {
    let mut out = SuperPoly::zero(*layout);
    if weight(layout, m).rem_euclid(n as i64) != 0 {
        return out;
    }
    out.add_term(m.clone(), BigRational::one());
    if layout.width() == 2 {
        let (neg, s) = swap_zw(layout, m);
        out.add_signed(neg, s, BigRational::one());
    }
    out
}

/// Rewrites a polynomial in eigen-coordinates in terms of `x_1, x_2`.
/// The input must be fixed by `φ` for the output to be rational.
pub fn eigen_to_real(p: &SuperPoly<BigRational>) -> Result<SuperPoly<BigRational>> {
    let l = *p.layout();
    if l.width() == 1 {
        return Ok(p.clone());
    }
    let i = Cyclotomic::root_of_unity(4, 1);
    let image = |boson: bool, slot: usize| {
        let (set, r) = l.split(slot);
        let v = |idx| if boson { SuperPoly::x(l, set, idx) } else { SuperPoly::theta(l, set, idx) };
        let sign = if r == 0 { i.clone() } else { -&i };
        &v(0) + &v(1).scale(&sign)
    };
    let bos: Vec<_> = (0..l.nbos()).map(|s| image(true, s)).collect();
    let ferm: Vec<_> = (0..l.nferm()).map(|s| image(false, s)).collect();
    to_rational(&lift(p).substitute(&bos, &ferm))
}
