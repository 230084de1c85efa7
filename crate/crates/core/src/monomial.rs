//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Hard per-variable exponent limit. Large enough for Frobenius powers
/// `x^(p^e)` with `p^e <= 2^20` applied to generators of moderate degree.
pub const MAX_EXPONENT: u32 = 1 << 24;

pub(crate) type Exps = SmallVec<[u32; 16]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

/// Monomial orders. `DegRevLex` is the default everywhere; `Lex` exists for
/// debugging output; `Eliminate(k)` is the block order used by elimination,
/// comparing the last `k` variables first (degrevlex within each block).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    Eliminate(usize),
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut degree = 0u32;
        for &e in exps {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow(e as u64));
            }
            degree += e;
        }
        Ok(Monomial {
            exps: exps.iter().copied().collect(),
            degree,
        })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let m = self.mul(other);
        if let Some(&e) = m.exps.iter().find(|&&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow(e as u64));
        }
        Ok(m)
    }

    pub fn checked_pow(&self, k: u64) -> Result<Monomial> {
        let mut exps = Exps::with_capacity(self.nvars());
        let mut degree = 0u32;
        for &e in &self.exps {
            let v = e as u64 * k;
            if v > MAX_EXPONENT as u64 {
                return Err(Error::ExponentOverflow(v));
            }
            exps.push(v as u32);
            degree += v as u32;
        }
        Ok(Monomial { exps, degree })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Monomial {
            exps,
            degree: self.degree - other.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables present; `a | b` requires `mask(a) ⊆ mask(b)`.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Keeps the first `n` variables; the rest must have exponent zero.
    pub(crate) fn truncate_vars(&self, n: usize) -> Monomial {
        debug_assert!(self.exps[n..].iter().all(|&e| e == 0));
        Monomial {
            exps: self.exps[..n].iter().copied().collect(),
            degree: self.degree,
        }
    }

    pub(crate) fn extend_vars(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub fn cmp_in(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        compare_slices(&self.exps, self.degree, &other.exps, other.degree, order)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Comparison of monomials given as exponent slices. `DegRevLex`: higher
/// degree wins, ties broken by the smaller exponent in the last differing
/// variable.
pub(crate) fn compare_slices(a: &[u32], da: u32, b: &[u32], db: u32, order: MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::DegRevLex => revlex_tail(a, da, b, db),
        MonomialOrder::Lex => {
            for (x, y) in a.iter().zip(b) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        MonomialOrder::Eliminate(k) => {
            let n = a.len();
            let split = n - k.min(n);
            let (ab, bb) = (&a[split..], &b[split..]);
            let dab: u32 = ab.iter().sum();
            let dbb: u32 = bb.iter().sum();
            match revlex_tail(ab, dab, bb, dbb) {
                Ordering::Equal => revlex_tail(&a[..split], da - dab, &b[..split], db - dbb),
                o => o,
            }
        }
    }
}

#[inline]
fn revlex_tail(a: &[u32], da: u32, b: &[u32], db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Compares `a*ma` with `b*mb` without materializing the products.
pub(crate) fn compare_products(
    a: &Monomial,
    ma: &Monomial,
    b: &Monomial,
    mb: &Monomial,
    order: MonomialOrder,
) -> Ordering {
    match order {
        MonomialOrder::DegRevLex => {
            match (a.degree + ma.degree).cmp(&(b.degree + mb.degree)) {
                Ordering::Equal => {}
                o => return o,
            }
            for i in (0..a.nvars()).rev() {
                let x = a.exps[i] + ma.exps[i];
                let y = b.exps[i] + mb.exps[i];
                match x.cmp(&y) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
        _ => a.mul(ma).cmp_in(&b.mul(mb), order),
    }
}

/// Iterates all monomials of total degree `d` in `n` variables, calling `f`
/// on each exponent vector.
pub(crate) fn for_each_of_degree(n: usize, d: u32, mut f: impl FnMut(&[u32])) {
    if n == 0 {
        if d == 0 {
            f(&[]);
        }
        return;
    }
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left;
            f(exps);
            exps[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, f);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut f);
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return u64::from(d == 0);
    }
    binomial(n as u64 - 1 + d as u64, d as u64)
}
