//! Sparse vectors over S (polynomials are the rank-one case), module term
//! orders, and the geobucket accumulator used by every reduction.

use std::cmp::Ordering;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::field::PrimeField;
use crate::monomial::{compare_products, Monomial, MonomialOrder};

/// `coef * mon * e_comp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coef: u32,
    pub comp: u32,
    pub mon: Monomial,
}

/// Vectors are term lists sorted strictly descending in some [`ModOrder`].
pub(crate) type Vector = Vec<Term>;

/// Module term orders.
#[derive(Clone, Debug)]
pub(crate) enum ModOrder {
    /// Position over term: smaller component index is larger, then the
    /// monomial order.
    Pot(MonomialOrder),
    /// Order induced on a syzygy level by the leading terms of the level below.
    Schreyer(Arc<SchreyerFrame>),
}

/// For each component `e_i` of a resolution level: the bottom-level
/// component and monomial of its iterated leading term, and the chain of
/// indices used to break ties.
#[derive(Debug)]
pub(crate) struct SchreyerFrame {
    pub mo: MonomialOrder,
    pub base_comp: Vec<u32>,
    pub base_mon: Vec<Monomial>,
    pub chain: Vec<SmallVec<[u32; 8]>>,
}

impl SchreyerFrame {
    /// Frame for the syzygies of `leads` (lead monomial and component of each
    /// generator), where the generators live in a module ordered by `below`.
    pub fn over(below: &ModOrder, leads: &[(Monomial, u32)]) -> SchreyerFrame {
        let n = leads.len();
        let mut base_comp = Vec::with_capacity(n);
        let mut base_mon = Vec::with_capacity(n);
        let mut chain = Vec::with_capacity(n);
        for (i, (m, c)) in leads.iter().enumerate() {
            match below {
                ModOrder::Pot(_) => {
                    base_comp.push(*c);
                    base_mon.push(m.clone());
                    chain.push(smallvec::smallvec![i as u32]);
                }
                ModOrder::Schreyer(f) => {
                    let c = *c as usize;
                    base_comp.push(f.base_comp[c]);
                    base_mon.push(m.mul(&f.base_mon[c]));
                    let mut ch = f.chain[c].clone();
                    ch.push(i as u32);
                    chain.push(ch);
                }
            }
        }
        SchreyerFrame {
            mo: below.monomial_order(),
            base_comp,
            base_mon,
            chain,
        }
    }

    #[inline]
    fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        let (ai, bi) = (ac as usize, bc as usize);
        self.base_comp[bi]
            .cmp(&self.base_comp[ai])
            .then_with(|| compare_products(am, &self.base_mon[ai], bm, &self.base_mon[bi], self.mo))
            .then_with(|| {
                for (x, y) in self.chain[ai].iter().zip(self.chain[bi].iter()) {
                    match y.cmp(x) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl ModOrder {
    pub fn monomial_order(&self) -> MonomialOrder {
        match self {
            ModOrder::Pot(o) => *o,
            ModOrder::Schreyer(f) => f.mo,
        }
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        match self {
            ModOrder::Pot(o) => bc.cmp(&ac).then_with(|| am.cmp_in(bm, *o)),
            ModOrder::Schreyer(f) => f.cmp(am, ac, bm, bc),
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.mon, a.comp, &b.mon, b.comp)
    }

    pub fn sort(&self, v: &mut Vector) {
        v.sort_by(|a, b| self.cmp_terms(b, a));
    }

    /// Sorts and combines an arbitrary term list into a canonical vector.
    pub fn canonicalize(&self, field: PrimeField, mut v: Vector) -> Vector {
        self.sort(&mut v);
        let mut out: Vector = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mon == t.mon => last.coef = field.add(last.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        out
    }
}

pub(crate) fn scale(field: PrimeField, v: &mut Vector, c: u32) {
    for t in v.iter_mut() {
        t.coef = field.mul(t.coef, c);
    }
}

pub(crate) fn make_monic(field: PrimeField, v: &mut Vector) {
    if let Some(t) = v.first() {
        if t.coef != 1 {
            let inv = field.inv(t.coef);
            scale(field, v, inv);
        }
    }
}

/// Geometric-bucket accumulator: sums of many vectors with cheap leading-term
/// extraction. Buckets hold terms in ascending order so the head is at the end.
pub(crate) struct Geobucket<'a> {
    order: &'a ModOrder,
    field: PrimeField,
    buckets: Vec<Vec<Term>>,
}

const BUCKET_BASE: usize = 8;

fn bucket_cap(i: usize) -> usize {
    BUCKET_BASE << (2 * i)
}

impl<'a> Geobucket<'a> {
    pub fn new(order: &'a ModOrder, field: PrimeField) -> Self {
        Geobucket {
            order,
            field,
            buckets: Vec::new(),
        }
    }

    /// Adds a descending vector.
    pub fn add(&mut self, v: &[Term]) {
        let asc: Vec<Term> = v.iter().rev().cloned().collect();
        self.insert_ascending(asc);
    }

    /// Adds `c*m*v` for a descending vector `v`.
    pub fn add_scaled(&mut self, c: u32, m: &Monomial, v: &[Term]) {
        if c == 0 || v.is_empty() {
            return;
        }
        let f = self.field;
        let asc: Vec<Term> = v
            .iter()
            .rev()
            .map(|t| Term {
                coef: f.mul(t.coef, c),
                comp: t.comp,
                mon: t.mon.mul(m),
            })
            .collect();
        self.insert_ascending(asc);
    }

    fn insert_ascending(&mut self, mut v: Vec<Term>) {
        if v.is_empty() {
            return;
        }
        let mut i = 0;
        while bucket_cap(i) < v.len() {
            i += 1;
        }
        loop {
            if self.buckets.len() <= i {
                self.buckets.resize_with(i + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[i]);
            v = merge_ascending(self.order, self.field, existing, v);
            if v.len() <= bucket_cap(i) {
                self.buckets[i] = v;
                return;
            }
            i += 1;
        }
    }

    /// Removes and returns the leading term of the sum, if nonzero.
    pub fn pop_lead(&mut self) -> Option<Term> {
        loop {
            let mut best: Option<usize> = None;
            for (k, b) in self.buckets.iter().enumerate() {
                if let Some(t) = b.last() {
                    best = match best {
                        None => Some(k),
                        Some(j) => {
                            let tj = self.buckets[j].last().unwrap();
                            if self.order.cmp_terms(t, tj) == Ordering::Greater {
                                Some(k)
                            } else {
                                Some(j)
                            }
                        }
                    };
                }
            }
            let j = best?;
            let mut lead = self.buckets[j].pop().unwrap();
            for k in 0..self.buckets.len() {
                if k == j {
                    continue;
                }
                if let Some(t) = self.buckets[k].pop_if(|t| t.comp == lead.comp && t.mon == lead.mon) {
                    lead.coef = self.field.add(lead.coef, t.coef);
                }
            }
            if lead.coef != 0 {
                return Some(lead);
            }
        }
    }

    /// Drains the remaining sum as a descending vector.
    pub fn into_vector(mut self) -> Vector {
        let mut acc: Vec<Term> = Vec::new();
        for b in std::mem::take(&mut self.buckets) {
            acc = merge_ascending(self.order, self.field, acc, b);
        }
        acc.reverse();
        acc
    }
}

fn merge_ascending(order: &ModOrder, field: PrimeField, a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.into_iter().peekable();
    loop {
        let o = match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => order.cmp_terms(x, y),
            (Some(_), None) => {
                out.extend(ai);
                break;
            }
            (None, Some(_)) => {
                out.extend(bi);
                break;
            }
            (None, None) => break,
        };
        match o {
            Ordering::Less => out.push(ai.next().unwrap()),
            Ordering::Greater => out.push(bi.next().unwrap()),
            Ordering::Equal => {
                let x = ai.next().unwrap();
                let y = bi.next().unwrap();
                let s = field.add(x.coef, y.coef);
                if s != 0 {
                    out.push(Term { coef: s, ..x });
                }
            }
        }
    }
    out
}
