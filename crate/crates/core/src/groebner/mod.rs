//! Gröbner bases and ideal arithmetic.

pub(crate) mod engine;
mod ideal;
pub(crate) mod monideal;
pub(crate) mod vector;

pub use ideal::{GroebnerBasis, Ideal};
pub use vector::Term;

use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use vector::Vector;

pub(crate) fn poly_to_vector(f: &Polynomial, comp: u32) -> Vector {
    f.terms()
        .iter()
        .map(|(c, m)| Term {
            coef: *c,
            comp,
            mon: m.clone(),
        })
        .collect()
}

/// The entries of a single-component vector as a polynomial. Terms must be
/// sorted in the ring's monomial order, which any POT-sorted slice of one
/// component is.
pub(crate) fn vector_to_poly(ring: &PolyRing, v: &[Term]) -> Polynomial {
    Polynomial::from_sorted(ring.clone(), v.iter().map(|t| (t.coef, t.mon.clone())).collect())
}

/// Minimal generators of the monomial ideal generated by `mons`, sorted.
pub(crate) fn minimalize_monomials(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    mons.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in mons {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}
