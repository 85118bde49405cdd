//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored as its canonical residue modulo the cyclotomic
//! polynomial `Φ_n`, i.e. as rational coordinates on `1, ζ, …, ζ^{φ(n)-1}`.
//! Elements of different orders may be mixed: both operands are first lifted
//! into `Q(ζ_lcm)`, so rationals (order 1) combine with anything.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{fmt_rational, Scalar};

/// Precomputed data for `Q(ζ_n)`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Coefficients of `Φ_n`, lowest degree first; monic.
    modulus: Vec<i64>,
    /// `powers[e]` is `ζ^e` reduced, for `0 <= e < n`.
    powers: Vec<Vec<i64>>,
    /// `high[t]` is `z^{deg + t}` reduced, used after multiplication.
    high: Vec<Vec<i64>>,
}

impl CyclotomicField {
    /// Field data for `Q(ζ_n)`, computed once per order and shared.
    pub fn get(order: u32) -> Arc<CyclotomicField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&order) {
            return f.clone();
        }
        let field = Arc::new(Self::build(order));
        cache.lock().unwrap().entry(order).or_insert(field).clone()
    }

    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.len() - 1;
        let reduce = |mut v: Vec<i64>| -> Vec<i64> {
            for top in (deg..v.len()).rev() {
                let c = v[top];
                if c != 0 {
                    for (i, &m) in modulus.iter().enumerate() {
                        v[top - deg + i] -= c * m;
                    }
                }
            }
            v.truncate(deg);
            v
        };
        let monomial = |e: usize| {
            let mut v = vec![0i64; e.max(deg) + 1];
            v[e] = 1;
            reduce(v)
        };
        let powers = (0..order as usize).map(monomial).collect();
        let high = (0..deg.max(1)).map(|t| monomial(deg + t)).collect();
        Self { order, modulus, powers, high }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(n)`, the degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

/// Integer coefficients of `Φ_n`, obtained by dividing `z^n - 1` by `Φ_d`
/// for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = divide_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (t, &b) in den.iter().enumerate() {
            rem[i + t] -= c * b;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of `Q(ζ_order)`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    /// Power-basis coordinates with trailing zeros trimmed.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        let field = CyclotomicField::get(order);
        let mut out = vec![BigRational::zero(); field.degree()];
        for (e, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = &field.powers[e % order as usize];
            for (slot, &p) in out.iter_mut().zip(power) {
                if p != 0 {
                    *slot += &c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        Self::trimmed(order, out)
    }

    fn trimmed(order: u32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { order, coeffs }
    }

    /// `ζ_order^exponent`; negative exponents are taken modulo the order.
    pub fn root_of_unity(order: u32, exponent: i64) -> Self {
        let field = CyclotomicField::get(order);
        let e = exponent.rem_euclid(order as i64) as usize;
        let coeffs = field.powers[e].iter().map(|&c| BigRational::from_integer(c.into())).collect();
        Self::trimmed(order, coeffs)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(v.into()))
    }

    /// `2cos(2πh/n) = ζ_n^h + ζ_n^{-h}`.
    pub fn two_cos(n: u32, h: i64) -> Self {
        Self::root_of_unity(n, h) + Self::root_of_unity(n, -h)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates in `Q(ζ_order)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Re-expresses the element in `Q(ζ_target)`; `target` must be a multiple
    /// of the current order.
    pub fn lift(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.order), "cannot lift Q(ζ_{}) into Q(ζ_{target})", self.order);
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut raw = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            raw[e * step] = c.clone();
        }
        Self::from_coeffs(target, raw)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (e, c) in self.coeffs.iter().enumerate() {
            raw[(n - e) % n] += c;
        }
        Self::from_coeffs(self.order, raw)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        // zero and rationals lift trivially
        if a.coeffs.len() <= 1 {
            return (Self { order: b.order, coeffs: a.coeffs.clone() }, b.clone());
        }
        if b.coeffs.len() <= 1 {
            return (a.clone(), Self { order: a.order, coeffs: b.coeffs.clone() });
        }
        let l = a.order.lcm(&b.order);
        (a.lift(l), b.lift(l))
    }

    fn mul_same_order(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        if self.coeffs.len() == 1 {
            let c = &self.coeffs[0];
            return Self::trimmed(rhs.order, rhs.coeffs.iter().map(|x| x * c).collect());
        }
        if rhs.coeffs.len() == 1 {
            let c = &rhs.coeffs[0];
            return Self::trimmed(self.order, self.coeffs.iter().map(|x| x * c).collect());
        }
        let field = CyclotomicField::get(self.order);
        let deg = field.degree();
        let mut raw = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = vec![BigRational::zero(); deg];
        for (e, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < deg {
                out[e] += c;
            } else {
                for (slot, &p) in out.iter_mut().zip(&field.high[e - deg]) {
                    if p != 0 {
                        *slot += &c * BigRational::from_integer(p.into());
                    }
                }
            }
        }
        Self::trimmed(self.order, out)
    }

    /// Multiplicative inverse by solving `self · x = 1` in the power basis.
    fn invert(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(Self::from_rational(self.coeffs[0].recip()));
        }
        let deg = CyclotomicField::get(self.order).degree();
        // column e of the multiplication matrix is self · ζ^e
        let cols: Vec<Vec<BigRational>> = (0..deg)
            .map(|e| {
                let prod = self.mul_same_order(&Self::root_of_unity(self.order, e as i64));
                let mut c = prod.coeffs;
                c.resize(deg, BigRational::zero());
                c
            })
            .collect();
        let mut aug: Vec<Vec<BigRational>> = (0..deg)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..deg).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..deg {
            let pivot = (col..deg).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..deg {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    let pivot_row = aug[col].clone();
                    for (v, p) in aug[r].iter_mut().zip(&pivot_row) {
                        *v -= &f * p;
                    }
                }
            }
        }
        Some(Self::trimmed(self.order, aug.into_iter().map(|row| row[deg].clone()).collect()))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => fmt_rational(c),
                _ => {
                    let z = if e == 1 { format!("z{}", self.order) } else { format!("z{}^{e}", self.order) };
                    if c.is_one() {
                        z
                    } else if *c == -BigRational::one() {
                        format!("-{z}")
                    } else {
                        format!("{}*{z}", fmt_rational(c))
                    }
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self { order: 1, coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self { order: 1, coeffs: vec![BigRational::one()] }
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Cyclotomic::common(self, rhs);
        if a.coeffs.len() < b.coeffs.len() {
            a.coeffs.resize(b.coeffs.len(), BigRational::zero());
        }
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        Cyclotomic::trimmed(a.order, a.coeffs)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        a.mul_same_order(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! by_value {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;

            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    )*};
}

by_value!(Add add, Sub sub, Mul mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Scalar for Cyclotomic {
    fn from_rational(r: BigRational) -> Self {
        Self::trimmed(1, vec![r])
    }

    fn inverse(&self) -> Option<Self> {
        self.invert()
    }
}
