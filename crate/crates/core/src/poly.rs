//! The standard graded polynomial ring S = F_p[x_1, ..., x_n] and its elements.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::settings::EngineSettings;

struct RingData {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
    settings: Arc<EngineSettings>,
}

/// A polynomial ring with every variable in degree one. Cheap to clone.
///
/// Rings compare equal when field, variables and order agree; the attached
/// [`EngineSettings`] are shared by rings derived from one another but do
/// not take part in equality.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.order == other.0.order && self.0.names == other.0.names)
    }
}
impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.0.field.characteristic(), self.0.names.join(","))
    }
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>) -> Result<Self> {
        Self::with_order(field, names, MonomialOrder::DegRevLex)
    }

    pub fn with_order(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("bad variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable {n}")));
            }
        }
        if let MonomialOrder::Eliminate(k) = order {
            if k == 0 || k > names.len() {
                return Err(Error::InvalidRing(format!("elimination block {k} out of range")));
            }
        }
        Ok(PolyRing(Arc::new(RingData {
            field,
            names,
            order,
            settings: Arc::default(),
        })))
    }

    /// `F_p[x1..xn]`.
    pub fn standard(p: u64, n: usize) -> Result<Self> {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(PrimeField::new(p)?, names)
    }

    pub fn with_names(p: u64, names: &[&str]) -> Result<Self> {
        Self::new(PrimeField::new(p)?, names.iter().map(|s| s.to_string()).collect())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn settings(&self) -> &EngineSettings {
        &self.0.settings
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// The same ring with `extra` fresh variables appended last, ordered by
    /// the block order eliminating them.
    pub(crate) fn elimination_extension(&self, extra: usize) -> PolyRing {
        let mut names = self.0.names.clone();
        let mut k = 0;
        while names.len() < self.nvars() + extra {
            let cand = format!("_t{k}");
            if !names.contains(&cand) {
                names.push(cand);
            }
            k += 1;
        }
        PolyRing(Arc::new(RingData {
            field: self.0.field,
            names,
            order: MonomialOrder::Eliminate(extra),
            settings: self.0.settings.clone(),
        }))
    }

    /// The same ring drawing on its own budget and switches.
    pub fn with_fresh_settings(&self) -> PolyRing {
        PolyRing(Arc::new(RingData {
            field: self.0.field,
            names: self.0.names.clone(),
            order: self.0.order,
            settings: Arc::default(),
        }))
    }

    pub fn with_monomial_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing(Arc::new(RingData {
            field: self.0.field,
            names: self.0.names.clone(),
            order,
            settings: self.0.settings.clone(),
        }))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field().from_i64(c);
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.term(1, Monomial::var(self.nvars(), i))
    }

    pub fn term(&self, c: u32, m: Monomial) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars());
        let c = c % self.characteristic();
        Polynomial {
            ring: self.clone(),
            terms: if c == 0 { vec![] } else { vec![(c, m)] },
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs,
    /// combining duplicates and sorting into the ring order.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (u32, Monomial)>) -> Polynomial {
        let order = self.order();
        let f = self.field();
        let mut v: Vec<(u32, Monomial)> = terms.into_iter().map(|(c, m)| (c % f.characteristic(), m)).collect();
        v.sort_by(|a, b| b.1.cmp_in(&a.1, order));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(v.len());
        for (c, m) in v {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = f.add(last.0, c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        Polynomial {
            ring: self.clone(),
            terms: out,
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A polynomial: nonzero terms strictly descending in the ring's order.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(u32, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}
impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    #[inline]
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    /// Trusted constructor: `terms` must already be canonical.
    pub(crate) fn from_sorted(ring: PolyRing, terms: Vec<(u32, Monomial)>) -> Polynomial {
        debug_assert!(terms.iter().all(|(c, _)| *c != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| w[0].1.cmp_in(&w[1].1, ring.order()) == Ordering::Greater));
        Polynomial { ring, terms }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(u32, &Monomial)> {
        self.terms.first().map(|(c, m)| (*c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Total degree (maximum over terms); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|(_, t)| t.degree() == m.degree()),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc = self.ring.zero();
        for (c, m) in &other.terms {
            let part = self.mul_term_checked(*c, m)?;
            acc = acc.combine(&part, false);
        }
        Ok(acc)
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let f = self.ring.field();
        let order = self.ring.order();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].1.cmp_in(&b[j].1, order) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { f.neg(b[j].0) } else { b[j].0 };
                    out.push((c, b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        f.sub(a[i].0, b[j].0)
                    } else {
                        f.add(a[i].0, b[j].0)
                    };
                    if c != 0 {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { f.neg(t.0) } else { t.0 };
            out.push((c, t.1.clone()));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (f.neg(*c), m.clone())).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (f.mul(*a, c), m.clone())).collect(),
        }
    }

    /// Multiplication by `c*m`; monomial multiplication preserves the order.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Polynomial {
        let f = self.ring.field();
        if c.is_multiple_of(f.characteristic()) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, t)| (f.mul(*a, c), t.mul(m))).collect(),
        }
    }

    fn mul_term_checked(&self, c: u32, m: &Monomial) -> Result<Polynomial> {
        let f = self.ring.field();
        if c.is_multiple_of(f.characteristic()) {
            return Ok(self.ring.zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, t)| Ok((f.mul(*a, c), t.checked_mul(m)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) => self.scale(self.ring.field().inv(*c)),
        }
    }

    pub fn pow(&self, mut e: u64) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f^(p^e)`, computed termwise: the Frobenius is additive in
    /// characteristic p and fixes F_p, so each term `c*m` maps to `c*m^(p^e)`.
    pub fn frobenius_pow(&self, e: u32) -> Result<Polynomial> {
        let q = (self.ring.characteristic() as u64)
            .checked_pow(e)
            .ok_or(Error::ExponentOverflow(u64::MAX))?;
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| Ok((*c, m.checked_pow(q)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, t) in &self.terms {
            if !m.divides(t) {
                return None;
            }
            terms.push((*c, t.div(m)));
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Exact division `self / g`; `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let (gc, gm) = g.leading_term()?;
        let f = self.ring.field();
        let ginv = f.inv(gc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((c, m)) = rem.leading_term() {
            if !gm.divides(m) {
                return None;
            }
            let qm = m.div(gm);
            let qc = f.mul(c, ginv);
            rem = rem.combine(&g.mul_term(qc, &qm), true);
            quot.push((qc, qm));
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        })
    }

    /// Maps into a ring with the same variables plus trailing extras.
    pub(crate) fn embed(&self, target: &PolyRing) -> Polynomial {
        let extra = target.nvars() - self.ring.nvars();
        target.from_terms(self.terms.iter().map(|(c, m)| (*c, m.extend_vars(extra))))
    }

    /// Inverse of `embed` for polynomials free of the trailing variables.
    pub(crate) fn restrict(&self, target: &PolyRing) -> Polynomial {
        let n = target.nvars();
        target.from_terms(self.terms.iter().map(|(c, m)| (*c, m.truncate_vars(n))))
    }

    pub(crate) fn involves_vars_from(&self, start: usize) -> bool {
        self.terms
            .iter()
            .any(|(_, m)| m.exponents()[start..].iter().any(|&e| e > 0))
    }

    /// Re-sorts into another ring with the same variables and field.
    pub fn reorder(&self, target: &PolyRing) -> Polynomial {
        target.from_terms(self.terms.iter().cloned())
    }

    pub fn coefficient_of(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|(_, t)| t == m).map(|(c, _)| *c).unwrap_or(0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch or exponent overflow in *")
    }
}

/// Arithmetic operation selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}
