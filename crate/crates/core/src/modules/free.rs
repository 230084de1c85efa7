//! Graded free modules, their elements, and graded maps between them.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::vector::{Geobucket, ModOrder, Term, Vector};
use crate::groebner::{poly_to_vector, vector_to_poly};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// `⊕_i S(-a_i)`; generator `i` sits in degree `twists[i] = a_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModule {
    ring: PolyRing,
    twists: Vec<i64>,
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeModule{:?}", self.twists)
    }
}

impl FreeModule {
    pub fn new(ring: &PolyRing, twists: Vec<i64>) -> FreeModule {
        FreeModule {
            ring: ring.clone(),
            twists,
        }
    }

    /// `S^r` with every generator in degree zero.
    pub fn standard(ring: &PolyRing, rank: usize) -> FreeModule {
        FreeModule::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// `Hom(F, S)`: `Hom(S(-a), S) = S(a)`, generator in degree `-a`.
    pub fn dual(&self) -> FreeModule {
        FreeModule::new(&self.ring, self.twists.iter().map(|a| -a).collect())
    }

    pub(crate) fn order(&self) -> ModOrder {
        ModOrder::Pot(self.ring.order())
    }

    pub fn basis_element(&self, i: usize) -> ModuleElement {
        ModuleElement {
            terms: vec![Term {
                coef: 1,
                comp: i as u32,
                mon: Monomial::one(self.ring.nvars()),
            }],
        }
    }

    /// Element with the given entries (missing trailing entries are zero).
    pub fn element(&self, entries: &[Polynomial]) -> Result<ModuleElement> {
        if entries.len() > self.rank() {
            return Err(Error::ModuleMismatch(format!(
                "{} entries for rank {}",
                entries.len(),
                self.rank()
            )));
        }
        let mut terms = Vec::new();
        for (i, f) in entries.iter().enumerate() {
            if f.ring() != &self.ring {
                return Err(Error::RingMismatch);
            }
            terms.extend(poly_to_vector(f, i as u32));
        }
        Ok(ModuleElement { terms })
    }

    pub fn check(&self, v: &ModuleElement) -> Result<()> {
        if let Some(t) = v.terms.last() {
            if t.comp as usize >= self.rank() {
                return Err(Error::ModuleMismatch(format!(
                    "component {} outside rank {}",
                    t.comp,
                    self.rank()
                )));
            }
            if t.mon.nvars() != self.ring.nvars() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(())
    }

    pub fn entry(&self, v: &ModuleElement, i: usize) -> Polynomial {
        let part: Vec<Term> = v.terms.iter().filter(|t| t.comp as usize == i).cloned().collect();
        vector_to_poly(&self.ring, &part)
    }

    pub fn entries(&self, v: &ModuleElement) -> Vec<Polynomial> {
        (0..self.rank()).map(|i| self.entry(v, i)).collect()
    }

    /// Degree of a homogeneous element; `None` for zero or inhomogeneous.
    pub fn degree_of(&self, v: &ModuleElement) -> Option<i64> {
        let mut degs = v
            .terms
            .iter()
            .map(|t| t.mon.degree() as i64 + self.twists[t.comp as usize]);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, v: &ModuleElement) -> bool {
        v.is_zero() || self.degree_of(v).is_some()
    }

    pub fn add(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        self.combine(&[(a, 1, None), (b, 1, None)])
    }

    pub fn sub(&self, a: &ModuleElement, b: &ModuleElement) -> ModuleElement {
        let m1 = self.ring.field().neg(1);
        self.combine(&[(a, 1, None), (b, m1, None)])
    }

    pub fn mul_poly(&self, f: &Polynomial, v: &ModuleElement) -> ModuleElement {
        let order = self.order();
        let mut b = Geobucket::new(&order, self.ring.field());
        for (c, m) in f.terms() {
            b.add_scaled(*c, m, &v.terms);
        }
        ModuleElement { terms: b.into_vector() }
    }

    /// `Σ c_k m_k v_k` for scalars `c_k` and optional monomials `m_k`.
    pub(crate) fn combine(&self, parts: &[(&ModuleElement, u32, Option<&Monomial>)]) -> ModuleElement {
        let order = self.order();
        let one = Monomial::one(self.ring.nvars());
        let mut b = Geobucket::new(&order, self.ring.field());
        for (v, c, m) in parts {
            b.add_scaled(*c, m.unwrap_or(&one), &v.terms);
        }
        ModuleElement { terms: b.into_vector() }
    }
}

/// An element of a free module: terms sorted position-over-term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ModuleElement {
    pub(crate) terms: Vector,
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{}*{:?}e{}", t.coef, t.mon, t.comp))
            .collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

impl ModuleElement {
    pub fn zero() -> ModuleElement {
        ModuleElement { terms: Vec::new() }
    }

    pub(crate) fn from_vector(terms: Vector) -> ModuleElement {
        ModuleElement { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Components with a nonzero entry, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for t in &self.terms {
            if out.last() != Some(&(t.comp as usize)) {
                out.push(t.comp as usize);
            }
        }
        out
    }
}

/// A degree-preserving map `source -> target`, stored by the images of the
/// source generators.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    source: FreeModule,
    target: FreeModule,
    columns: Vec<ModuleElement>,
}

impl GradedMatrix {
    /// Checks every column lies in `target` and is homogeneous of the degree
    /// of its source generator.
    pub fn new(source: FreeModule, target: FreeModule, columns: Vec<ModuleElement>) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        if columns.len() != source.rank() {
            return Err(Error::ModuleMismatch(format!(
                "{} columns for source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        for (j, c) in columns.iter().enumerate() {
            target.check(c)?;
            if c.is_zero() {
                continue;
            }
            match target.degree_of(c) {
                Some(d) if d == source.twists()[j] => {}
                _ => {
                    return Err(Error::NotHomogeneous(format!(
                        "column {j} does not have degree {}",
                        source.twists()[j]
                    )))
                }
            }
        }
        Ok(GradedMatrix {
            source,
            target,
            columns,
        })
    }

    pub(crate) fn new_unchecked(source: FreeModule, target: FreeModule, columns: Vec<ModuleElement>) -> Self {
        debug_assert_eq!(columns.len(), source.rank());
        GradedMatrix {
            source,
            target,
            columns,
        }
    }

    /// Matrix over `target` whose columns are the given homogeneous elements;
    /// source twists are the column degrees. Zero columns are dropped.
    pub fn from_columns(target: &FreeModule, columns: Vec<ModuleElement>) -> Result<Self> {
        let mut kept = Vec::new();
        let mut twists = Vec::new();
        for c in columns {
            target.check(&c)?;
            if c.is_zero() {
                continue;
            }
            let d = target
                .degree_of(&c)
                .ok_or_else(|| Error::NotHomogeneous(format!("{c:?}")))?;
            twists.push(d);
            kept.push(c);
        }
        Ok(GradedMatrix {
            source: FreeModule::new(target.ring(), twists),
            target: target.clone(),
            columns: kept,
        })
    }

    /// Matrix given row by row as polynomials; source twists are inferred
    /// from the column degrees (zero columns need `source_twists`).
    pub fn from_rows(target: &FreeModule, source_twists: Vec<i64>, rows: &[Vec<Polynomial>]) -> Result<Self> {
        let ncols = source_twists.len();
        let mut columns = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let entries: Vec<Polynomial> = rows
                .iter()
                .map(|r| r.get(j).cloned().unwrap_or_else(|| target.ring().zero()))
                .collect();
            columns.push(target.element(&entries)?);
        }
        GradedMatrix::new(FreeModule::new(target.ring(), source_twists), target.clone(), columns)
    }

    pub fn ring(&self) -> &PolyRing {
        self.target.ring()
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[ModuleElement] {
        &self.columns
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        self.target.entry(&self.columns[j], i)
    }

    /// The dual map `Hom(target, S) -> Hom(source, S)`.
    pub fn transpose(&self) -> GradedMatrix {
        let order = self.source.order();
        let mut cols: Vec<Vector> = vec![Vec::new(); self.nrows()];
        for (j, c) in self.columns.iter().enumerate() {
            for t in &c.terms {
                cols[t.comp as usize].push(Term {
                    coef: t.coef,
                    comp: j as u32,
                    mon: t.mon.clone(),
                });
            }
        }
        let field = self.ring().field();
        let columns = cols
            .into_iter()
            .map(|v| ModuleElement::from_vector(order.canonicalize(field, v)))
            .collect();
        GradedMatrix {
            source: self.target.dual(),
            target: self.source.dual(),
            columns,
        }
    }

    /// Image of an element of the source.
    pub fn apply(&self, v: &ModuleElement) -> ModuleElement {
        let order = self.target.order();
        let mut b = Geobucket::new(&order, self.ring().field());
        for t in &v.terms {
            b.add_scaled(t.coef, &t.mon, &self.columns[t.comp as usize].terms);
        }
        ModuleElement::from_vector(b.into_vector())
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &GradedMatrix) -> Result<GradedMatrix> {
        if rhs.target != self.source {
            return Err(Error::ModuleMismatch("composition of incompatible maps".into()));
        }
        let columns = rhs.columns.iter().map(|c| self.apply(c)).collect();
        Ok(GradedMatrix {
            source: rhs.source.clone(),
            target: self.target.clone(),
            columns,
        })
    }

    /// Keeps only the listed columns.
    pub fn select_columns(&self, keep: &[usize]) -> GradedMatrix {
        GradedMatrix {
            source: FreeModule::new(self.ring(), keep.iter().map(|&j| self.source.twists()[j]).collect()),
            target: self.target.clone(),
            columns: keep.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }
}

/// A graded module given as the cokernel of a graded matrix.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    presentation: GradedMatrix,
}

impl PresentedModule {
    pub fn new(presentation: GradedMatrix) -> Self {
        PresentedModule { presentation }
    }

    /// The zero module, as a rank-zero presentation.
    pub fn zero(ring: &PolyRing) -> Self {
        let f = FreeModule::new(ring, Vec::new());
        PresentedModule::new(GradedMatrix::new_unchecked(f.clone(), f, Vec::new()))
    }

    pub fn free(module: &FreeModule) -> Self {
        PresentedModule::new(GradedMatrix::new_unchecked(
            FreeModule::new(module.ring(), Vec::new()),
            module.clone(),
            Vec::new(),
        ))
    }

    /// `S/I` for a homogeneous ideal.
    pub fn quotient_ring(ideal: &crate::groebner::Ideal) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous(ideal.to_string()));
        }
        let target = FreeModule::standard(ideal.ring(), 1);
        let columns = ideal
            .generators()
            .iter()
            .map(|g| target.element(std::slice::from_ref(g)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PresentedModule::new(GradedMatrix::from_columns(&target, columns)?))
    }

    pub fn presentation(&self) -> &GradedMatrix {
        &self.presentation
    }

    pub fn ring(&self) -> &PolyRing {
        self.presentation.ring()
    }

    /// Free module on the generators.
    pub fn generators(&self) -> &FreeModule {
        self.presentation.target()
    }

    pub fn relations(&self) -> &[ModuleElement] {
        self.presentation.columns()
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.nrows()
    }
}
