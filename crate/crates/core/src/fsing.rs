//! Frobenius splitting data of `R = S/I`: F-purity, splitting ideals, the
//! splitting prime, compatibility of ideals, and the non-CM ideal.
//!
//! `Hom_S(F^e_* S, S)` is generated over `F^e_* S` by the trace `Φ`, which
//! sends `x^a` to `x^{(a+1)/q - 1}` when every `a_i ≡ q-1 (mod q)` and to 0
//! otherwise (`q = p^e`). Maps `F^e_* R -> R` are the `Φ(F^e_* (c ·))` with
//! `c ∈ (I^[q] : I)`. Translating the definitions through `Φ`:
//!
//! - `R` is F-pure at `m` iff some such `c` lies outside `m^[q]` (Fedder).
//! - `r ∈ I_e(R)` iff `Φ(F^e_*(c r)) ∈ m` for every such `c`, i.e.
//!   `r (I^[q] : I) ⊆ m^[q]`, so `I_e = (m^[q] : (I^[q] : I)) + I`.
//! - `J ⊇ I` is compatible iff `Φ(F^e_*(c J)) ⊆ J` for every such `c`, i.e.
//!   `(I^[q] : I) ⊆ (J^[q] : J)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::vector::{Term, Vector};
use crate::groebner::{poly_to_vector, vector_to_poly, Ideal};
use crate::homological::{ext_module, FreeResolution};
use crate::modules::{annihilator, FreeModule, ModuleElement, PresentedModule, SubmoduleBasis};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

pub const DEFAULT_E_MAX: u32 = 5;

fn check_input(ideal: &Ideal) -> Result<()> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous(ideal.to_string()));
    }
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

fn frobenius_order(ideal: &Ideal, e: u32) -> Result<u64> {
    let p = ideal.ring().characteristic() as u64;
    p.checked_pow(e)
        .filter(|q| *q <= crate::monomial::MAX_EXPONENT as u64)
        .ok_or(Error::ExponentOverflow(p.saturating_pow(e)))
}

/// `m^[q]`.
fn maximal_frobenius(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let n = ideal.ring().nvars();
    let mons = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = q as u32;
            Monomial::from_exponents(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_monomials(ideal.ring(), mons))
}

/// Generators of `I^[q] : I`. With a degree bound, the ideal they generate
/// agrees with the colon in degrees up to the bound.
pub fn frobenius_colon(ideal: &Ideal, e: u32, degree_bound: Option<i64>) -> Result<Ideal> {
    let ring = ideal.ring();
    if ideal.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    let power = ideal.frobenius_power(e)?;
    if ideal.is_monomial() {
        return power.colon(ideal);
    }
    // Kernel of S -> ⊕_t S/I^[q], 1 ↦ (g_t): the elements of the submodule
    // generated by I^[q] e_t and Σ g_t e_t + e_k that lie in component k.
    let gens = ideal.generators();
    let k = gens.len();
    let mut twists: Vec<i64> = gens.iter().map(|g| -(g.degree().unwrap_or(0) as i64)).collect();
    twists.push(0);
    let module = FreeModule::new(ring, twists);
    let pgb = power.groebner_basis()?;
    let mut elems: Vec<ModuleElement> = Vec::new();
    for t in 0..k {
        for h in pgb.elements() {
            elems.push(ModuleElement::from_vector(poly_to_vector(h, t as u32)));
        }
    }
    let mut tracker: Vector = Vec::new();
    for (t, g) in gens.iter().enumerate() {
        tracker.extend(poly_to_vector(g, t as u32));
    }
    tracker.push(Term {
        coef: 1,
        comp: k as u32,
        mon: Monomial::one(ring.nvars()),
    });
    elems.push(ModuleElement::from_vector(tracker));
    let gb = SubmoduleBasis::new(&module, &elems, degree_bound)?;
    let part: Vec<Polynomial> = gb
        .elements()
        .into_iter()
        .filter(|v| v.terms()[0].comp == k as u32)
        .map(|v| vector_to_poly(ring, v.terms()))
        .collect();
    Ideal::new(ring, part)
}

/// Fedder's criterion: `(I^[p] : I) ⊄ m^[p]`.
pub fn fedder_is_fpure(ideal: &Ideal) -> Result<bool> {
    check_input(ideal)?;
    if ideal.is_zero() {
        return Ok(true);
    }
    let p = ideal.ring().characteristic() as u64;
    let n = ideal.ring().nvars() as i64;
    // every monomial of degree above n(p-1) lies in m^[p]
    let colon = frobenius_colon(ideal, 1, Some(n * (p as i64 - 1)))?;
    Ok(colon.generators().iter().any(|g| {
        g.terms()
            .iter()
            .any(|(_, m)| m.exponents().iter().all(|&a| (a as u64) < p))
    }))
}

/// Preimage in `S` of `I_e(R)`: `(m^[q] : (I^[q] : I)) + I`.
pub fn splitting_ideal(ideal: &Ideal, e: u32) -> Result<Ideal> {
    check_input(ideal)?;
    if e == 0 {
        return Err(Error::OutOfRange("splitting ideals start at e = 1".into()));
    }
    let ring = ideal.ring();
    let q = frobenius_order(ideal, e)?;
    let mq = maximal_frobenius(ideal, q)?;
    let n = ring.nvars() as i64;
    let colon = frobenius_colon(ideal, e, Some(n * (q as i64 - 1)))?;
    // only the part of each generator outside m^[q] matters
    let reduced: Vec<Polynomial> = colon
        .generators()
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .filter(|(_, m)| m.exponents().iter().all(|&a| (a as u64) < q))
                .cloned()
                .collect();
            Polynomial::from_sorted(ring.clone(), terms)
        })
        .filter(|g| !g.is_zero())
        .collect();
    if reduced.is_empty() {
        return Ok(Ideal::unit(ring));
    }
    mq.colon(&Ideal::new(ring, reduced)?)?.sum(ideal)
}

/// The descending chain `I_1 ⊇ I_2 ⊇ ...` and what it certifies.
#[derive(Clone, Debug)]
pub struct SplittingData {
    pub chain: Vec<Ideal>,
    /// First `e` with `I_e = I_{e+1}` modulo the variables absent from `I`.
    pub stabilized_at: Option<u32>,
    /// Last chain member with the absent variables dropped, or `I` itself
    /// for a regular ring.
    pub candidate: Ideal,
    pub sdim: i64,
    pub e_max: u32,
    /// `S/I` is a polynomial ring (`I` is zero or generated by linear forms).
    pub regular: bool,
}

impl SplittingData {
    pub fn certified(&self) -> bool {
        self.regular || self.stabilized_at.is_some()
    }
}

/// `sdim` with its certification flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingDimension {
    pub value: i64,
    pub certified: bool,
}

fn is_regular(ideal: &Ideal) -> Result<bool> {
    Ok(ideal.is_zero() || ideal.groebner_basis()?.elements().iter().all(|g| g.degree() == Some(1)))
}

/// Computes `I_1, I_2, ...` until two consecutive members agree or
/// `e_max` is reached.
pub fn splitting_prime(ideal: &Ideal, e_max: u32) -> Result<SplittingData> {
    splitting_chain(ideal, e_max, false)
}

fn splitting_chain(ideal: &Ideal, e_max: u32, budgeted: bool) -> Result<SplittingData> {
    check_input(ideal)?;
    if e_max == 0 {
        return Err(Error::OutOfRange("e_max must be at least 1".into()));
    }
    if !budgeted && !fedder_is_fpure(ideal)? {
        return Err(Error::NotFPure);
    }
    if is_regular(ideal)? {
        return Ok(SplittingData {
            chain: Vec::new(),
            stabilized_at: None,
            candidate: ideal.clone(),
            sdim: ideal.krull_dimension()?,
            e_max,
            regular: true,
        });
    }
    // `S/I = R'[free]`, and `I_e(R'[x]) = I_e(R')[x] + (x^q)`: compare chain
    // members modulo the free variables, where the chain can stabilize.
    let ring = ideal.ring();
    let free = free_variables(ideal)?;
    let free_ideal = Ideal::new(ring, free.iter().map(|&k| ring.var(k)).collect())?;
    let mut chain: Vec<Ideal> = Vec::new();
    let mut reduced: Vec<Ideal> = Vec::new();
    let mut stabilized_at = None;
    for e in 1..=e_max {
        let ie = match splitting_ideal(ideal, e) {
            Err(Error::BudgetExceeded(_)) if budgeted && !chain.is_empty() => {
                // leave room to read off the candidate
                ring.settings().reset_usage();
                break;
            }
            r => r?,
        };
        let ie_mod = ie.sum(&free_ideal)?;
        let stable = match reduced.last() {
            Some(prev) => ie_mod.same_as(prev)?,
            None => false,
        };
        chain.push(ie);
        reduced.push(ie_mod);
        if stable {
            stabilized_at = Some(e - 1);
            break;
        }
    }
    let last = reduced.last().unwrap().groebner_basis()?;
    let is_free = |g: &Polynomial| free.iter().any(|&k| *g == ring.var(k));
    let candidate = Ideal::new(ring, last.elements().iter().filter(|g| !is_free(g)).cloned().collect())?;
    Ok(SplittingData {
        sdim: candidate.krull_dimension()?,
        chain,
        stabilized_at,
        candidate,
        e_max,
        regular: false,
    })
}

/// Variables that appear in no element of the reduced Gröbner basis of `I`.
fn free_variables(ideal: &Ideal) -> Result<Vec<usize>> {
    let gb = ideal.groebner_basis()?;
    let mut used = vec![false; ideal.ring().nvars()];
    for g in gb.elements() {
        for (_, m) in g.terms() {
            for (k, &e) in m.exponents().iter().enumerate() {
                used[k] |= e > 0;
            }
        }
    }
    Ok((0..used.len()).filter(|&k| !used[k]).collect())
}

pub fn sdim(ideal: &Ideal, e_max: u32) -> Result<SplittingDimension> {
    let data = splitting_prime(ideal, e_max)?;
    Ok(SplittingDimension {
        value: data.sdim,
        certified: data.certified(),
    })
}

/// `sdim` with the chain run on a private budget of `pair_budget` S-pairs.
/// Running out after `I_1` ends the chain early, uncertified; running out
/// sooner gives `None`. The caller must already know `S/I` is F-pure.
pub fn sdim_within_budget(ideal: &Ideal, e_max: u32, pair_budget: u64) -> Result<Option<SplittingDimension>> {
    let ring = ideal.ring().with_fresh_settings();
    ring.settings().set_pair_limit(pair_budget);
    match splitting_chain(&ideal.map_to(&ring)?, e_max, true) {
        Ok(data) => Ok(Some(SplittingDimension {
            value: data.sdim,
            certified: data.certified(),
        })),
        Err(Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Outcome of a compatibility test over `e = 1..=checked_up_to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Compatibility {
    pub holds: bool,
    /// Largest `e` examined; a failure stops at the failing `e`.
    pub checked_up_to: u32,
}

/// Whether `J ⊇ I` is compatible for `e = 1..=e_max`, via
/// `(I^[q] : I) ⊆ (J^[q] : J)`.
pub fn is_compatible(ideal: &Ideal, j: &Ideal, e_max: u32) -> Result<Compatibility> {
    check_input(ideal)?;
    if !j.is_homogeneous() {
        return Err(Error::NotHomogeneous(j.to_string()));
    }
    if !j.contains_ideal(ideal)? {
        return Err(Error::NotContained(ideal.to_string(), j.to_string()));
    }
    if j.is_unit()? {
        return Ok(Compatibility {
            holds: true,
            checked_up_to: e_max,
        });
    }
    for e in 1..=e_max {
        let ci = frobenius_colon(ideal, e, None)?;
        let cj = frobenius_colon(j, e, None)?;
        if !cj.contains_ideal(&ci)? {
            return Ok(Compatibility {
                holds: false,
                checked_up_to: e,
            });
        }
    }
    Ok(Compatibility {
        holds: true,
        checked_up_to: e_max,
    })
}

/// `∩_{i ≠ ht I} ann Ext^i_S(S/I, S)`, skipping vanishing Ext modules. It
/// cuts out the non-Cohen–Macaulay locus when `S/I` is equidimensional,
/// which the caller asserts.
pub fn ncm_ideal(ideal: &Ideal) -> Result<Ideal> {
    check_input(ideal)?;
    let ring = ideal.ring();
    let height = ideal.height()?;
    let res = FreeResolution::minimal(&PresentedModule::quotient_ring(ideal)?)?;
    let mut acc = Ideal::unit(ring);
    for i in 0..=ring.nvars() {
        if i as i64 == height {
            continue;
        }
        let ext = ext_module(&res, i, None)?;
        if ext.num_generators() == 0 {
            continue;
        }
        let ann = annihilator(&ext)?;
        acc = if acc.is_unit()? { ann } else { acc.intersect(&ann)? };
    }
    Ok(acc)
}
