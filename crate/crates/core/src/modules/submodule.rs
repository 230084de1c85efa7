//! Submodules of graded free modules: Gröbner bases, syzygies, subquotients.

use crate::error::{Error, Result};
use crate::groebner::engine::{self, GbConfig, Reducers};
use crate::groebner::monideal::standard_monomial_count;
use crate::groebner::vector::{Term, Vector};
use crate::groebner::{vector_to_poly, Ideal};
use crate::monomial::Monomial;

use super::free::{FreeModule, GradedMatrix, ModuleElement, PresentedModule};

/// Reduced Gröbner basis of a submodule, position over term.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    module: FreeModule,
    vectors: Vec<Vector>,
    reducers: Reducers,
    degree_bound: Option<i64>,
}

impl SubmoduleBasis {
    /// Gröbner basis of the submodule generated by `gens`; with a degree
    /// bound, only correct in degrees up to the bound.
    pub fn new(module: &FreeModule, gens: &[ModuleElement], degree_bound: Option<i64>) -> Result<Self> {
        for g in gens {
            module.check(g)?;
            if !module.is_homogeneous(g) {
                return Err(Error::NotHomogeneous(format!("{g:?}")));
            }
        }
        let vecs = gens.iter().map(|g| g.terms.clone()).collect();
        let vectors = gb_in(module, vecs, degree_bound)?;
        Ok(SubmoduleBasis {
            module: module.clone(),
            reducers: Reducers::from_basis(&vectors),
            vectors,
            degree_bound,
        })
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.vectors.iter().cloned().map(ModuleElement::from_vector).collect()
    }

    /// Leading monomials grouped by component.
    pub fn leads_by_component(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.module.rank()];
        for v in &self.vectors {
            out[v[0].comp as usize].push(v[0].mon.clone());
        }
        out
    }

    pub fn normal_form(&self, v: &ModuleElement) -> Result<ModuleElement> {
        self.module.check(v)?;
        let order = self.module.order();
        let field = self.module.ring().field();
        Ok(ModuleElement::from_vector(engine::normal_form(
            &order,
            field,
            &self.vectors,
            &self.reducers,
            &v.terms,
        )))
    }

    pub fn contains(&self, v: &ModuleElement) -> Result<bool> {
        if let (Some(b), Some(d)) = (self.degree_bound, self.module.degree_of(v)) {
            if d > b {
                return Err(Error::OutOfRange(format!(
                    "membership in degree {d} above the bound {b}"
                )));
            }
        }
        Ok(self.normal_form(v)?.is_zero())
    }

    /// `dim_k (F/N)_d` for the free module `F` and this submodule `N`.
    pub fn quotient_dim(&self, d: i64) -> Result<u64> {
        if self.degree_bound.is_some_and(|b| d > b) {
            return Err(Error::OutOfRange(format!("degree {d} above the bound")));
        }
        let n = self.module.ring().nvars();
        let leads = self.leads_by_component();
        Ok(self
            .module
            .twists()
            .iter()
            .zip(&leads)
            .map(|(a, l)| standard_monomial_count(n, l, d - a))
            .sum())
    }
}

fn gb_in(module: &FreeModule, gens: Vec<Vector>, degree_bound: Option<i64>) -> Result<Vec<Vector>> {
    let ring = module.ring();
    let cfg = GbConfig {
        order: module.order(),
        field: ring.field(),
        twists: module.twists(),
        degree_bound,
        settings: ring.settings(),
    };
    engine::groebner(gens, &cfg)
}

/// Generators of the kernel of `map` (elements of its source), homogeneous;
/// with a degree bound, those of degree at most the bound.
pub fn syzygies(map: &GradedMatrix, degree_bound: Option<i64>) -> Result<Vec<ModuleElement>> {
    let r = map.nrows() as u32;
    let mut twists = map.target().twists().to_vec();
    twists.extend_from_slice(map.source().twists());
    let augmented = FreeModule::new(map.ring(), twists);
    let nvars = map.ring().nvars();
    let gens: Vec<Vector> = map
        .columns()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut v = c.terms.clone();
            v.push(Term {
                coef: 1,
                comp: r + j as u32,
                mon: Monomial::one(nvars),
            });
            v
        })
        .collect();
    let gb = gb_in(&augmented, gens, degree_bound)?;
    Ok(gb
        .into_iter()
        .filter(|v| v[0].comp >= r)
        .map(|v| ModuleElement::from_vector(v.into_iter().map(|t| Term { comp: t.comp - r, ..t }).collect()))
        .collect())
}

/// `im A / im B` for maps `A`, `B` into the same free module with
/// `im B ⊆ im A`, presented on the columns of `A`: the relations are the
/// `A`-parts of the syzygies of `[A | B]`. Columns above the degree bound
/// are dropped.
pub fn subquotient(a: &GradedMatrix, b: &GradedMatrix, degree_bound: Option<i64>) -> Result<PresentedModule> {
    if a.target() != b.target() {
        return Err(Error::ModuleMismatch(
            "subquotient of maps into different modules".into(),
        ));
    }
    let keep: Vec<usize> = (0..a.ncols())
        .filter(|&j| degree_bound.is_none_or(|bd| a.source().twists()[j] <= bd))
        .collect();
    let a = a.select_columns(&keep);
    let span = SubmoduleBasis::new(a.target(), a.columns(), degree_bound)?;
    for (j, c) in b.columns().iter().enumerate() {
        if degree_bound.is_none_or(|bd| b.source().twists()[j] <= bd) && !span.normal_form(c)?.is_zero() {
            return Err(Error::ContainmentViolation);
        }
    }
    let s = a.ncols() as u32;
    let mut twists = a.source().twists().to_vec();
    twists.extend_from_slice(b.source().twists());
    let mut columns = a.columns().to_vec();
    columns.extend_from_slice(b.columns());
    let joint = GradedMatrix::new_unchecked(FreeModule::new(a.ring(), twists), a.target().clone(), columns);
    let gens = FreeModule::new(a.ring(), a.source().twists().to_vec());
    let relations: Vec<ModuleElement> = syzygies(&joint, degree_bound)?
        .into_iter()
        .map(|v| ModuleElement::from_vector(v.terms.into_iter().filter(|t| t.comp < s).collect()))
        .filter(|v| !v.is_zero())
        .collect();
    let twists: Vec<i64> = relations
        .iter()
        .map(|v| gens.degree_of(v).expect("projection of a homogeneous syzygy"))
        .collect();
    Ok(PresentedModule::new(GradedMatrix::new_unchecked(
        FreeModule::new(a.ring(), twists),
        gens,
        relations,
    )))
}

/// `dim_k M_d`.
pub fn graded_piece_dim(m: &PresentedModule, d: i64) -> Result<u64> {
    SubmoduleBasis::new(m.generators(), m.relations(), Some(d))?.quotient_dim(d)
}

/// `ann M = ∩_k (N : e_k)` where `M = F/N`.
pub fn annihilator(m: &PresentedModule) -> Result<Ideal> {
    let ring = m.ring();
    let f = m.generators();
    let r = f.rank() as u32;
    let mut acc = Ideal::unit(ring);
    for k in 0..f.rank() {
        let mut twists = f.twists().to_vec();
        twists.push(f.twists()[k]);
        let augmented = FreeModule::new(ring, twists);
        let one = Monomial::one(ring.nvars());
        let mut gens: Vec<Vector> = m.relations().iter().map(|v| v.terms.clone()).collect();
        gens.push(vec![
            Term {
                coef: 1,
                comp: k as u32,
                mon: one.clone(),
            },
            Term {
                coef: 1,
                comp: r,
                mon: one,
            },
        ]);
        let part: Vec<_> = gb_in(&augmented, gens, None)?
            .into_iter()
            .filter(|v| v[0].comp == r)
            .map(|v| vector_to_poly(ring, &v))
            .collect();
        let colon = Ideal::new(ring, part)?;
        acc = if acc.is_unit()? { colon } else { acc.intersect(&colon)? };
    }
    Ok(acc)
}

/// Removes generators cancelled by relations with a constant entry, and
/// zero relations. The result presents an isomorphic module on a minimal
/// set of generators.
pub fn prune(m: &PresentedModule) -> PresentedModule {
    let ring = m.ring().clone();
    let field = ring.field();
    let mut twists = m.generators().twists().to_vec();
    let mut alive: Vec<bool> = vec![true; twists.len()];
    let mut cols: Vec<ModuleElement> = m.relations().iter().filter(|c| !c.is_zero()).cloned().collect();
    let full = m.generators().clone();
    loop {
        let pivot = cols
            .iter()
            .enumerate()
            .filter_map(|(j, c)| {
                c.terms
                    .iter()
                    .find(|t| t.mon.is_one())
                    .map(|t| (c.terms.len(), j, t.comp, t.coef))
            })
            .min();
        let Some((_, j, k, u)) = pivot else { break };
        let pcol = cols.swap_remove(j);
        let inv = field.inv(u);
        cols = cols
            .into_iter()
            .map(|c| {
                let a = full.entry(&c, k as usize);
                if a.is_zero() {
                    return c;
                }
                let coef = a.scale(field.neg(inv));
                full.add(&c, &full.mul_poly(&coef, &pcol))
            })
            .filter(|c| !c.is_zero())
            .collect();
        alive[k as usize] = false;
    }
    let mut renumber = vec![u32::MAX; twists.len()];
    let mut next = 0u32;
    for (i, a) in alive.iter().enumerate() {
        if *a {
            renumber[i] = next;
            next += 1;
        }
    }
    twists = twists
        .into_iter()
        .zip(&alive)
        .filter(|(_, a)| **a)
        .map(|(t, _)| t)
        .collect();
    let gens = FreeModule::new(&ring, twists);
    let relations: Vec<ModuleElement> = cols
        .into_iter()
        .map(|c| {
            ModuleElement::from_vector(
                c.terms
                    .into_iter()
                    .map(|t| Term {
                        comp: renumber[t.comp as usize],
                        ..t
                    })
                    .collect(),
            )
        })
        .collect();
    let rel_twists = relations
        .iter()
        .map(|v| gens.degree_of(v).expect("homogeneous relation"))
        .collect();
    PresentedModule::new(GradedMatrix::new_unchecked(
        FreeModule::new(&ring, rel_twists),
        gens,
        relations,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::{PolyRing, Polynomial};

    fn ring() -> PolyRing {
        PolyRing::with_names(7, &["x", "y", "z"]).unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn koszul_syzygies() {
        let r = ring();
        let target = FreeModule::standard(&r, 1);
        let m = GradedMatrix::from_rows(&target, vec![1, 1, 1], &[vec![p(&r, "x"), p(&r, "y"), p(&r, "z")]]).unwrap();
        let syz = syzygies(&m, None).unwrap();
        assert_eq!(syz.len(), 3);
        for s in &syz {
            assert!(m.apply(s).is_zero());
            assert_eq!(m.source().degree_of(s), Some(2));
        }
    }

    #[test]
    fn hilbert_function_of_quotient_ring() {
        let r = ring();
        let i = Ideal::new(&r, vec![p(&r, "x^2 - y*z"), p(&r, "x*y")]).unwrap();
        let m = PresentedModule::quotient_ring(&i).unwrap();
        let gb = i.groebner_basis().unwrap();
        for d in 0..7 {
            let expected = standard_monomial_count(3, &gb.leading_monomials(), d);
            assert_eq!(graded_piece_dim(&m, d).unwrap(), expected);
        }
    }

    #[test]
    fn annihilator_of_cyclic_module_is_the_ideal() {
        let r = ring();
        let i = Ideal::new(&r, vec![p(&r, "x*y"), p(&r, "z^2")]).unwrap();
        let m = PresentedModule::quotient_ring(&i).unwrap();
        assert!(annihilator(&m).unwrap().same_as(&i).unwrap());
    }

    #[test]
    fn prune_cancels_unit_relations() {
        let r = ring();
        let f = FreeModule::new(&r, vec![0, 1]);
        // e1 = x e0 makes the second generator redundant; y e0 = 0 remains.
        let rel = GradedMatrix::from_rows(
            &f,
            vec![1, 1],
            &[vec![p(&r, "x"), p(&r, "y")], vec![p(&r, "-1"), p(&r, "0")]],
        )
        .unwrap();
        let m = PresentedModule::new(rel);
        let pm = prune(&m);
        assert_eq!(pm.num_generators(), 1);
        for d in 0..5 {
            assert_eq!(graded_piece_dim(&m, d).unwrap(), graded_piece_dim(&pm, d).unwrap());
        }
    }

    #[test]
    fn subquotient_of_koszul_homology() {
        // ker / im in the middle of the Koszul complex on x, y is zero.
        let r = PolyRing::with_names(7, &["x", "y"]).unwrap();
        let f1 = FreeModule::new(&r, vec![1, 1]);
        let f0 = FreeModule::standard(&r, 1);
        let d1 = GradedMatrix::from_rows(&f0, vec![1, 1], &[vec![p(&r, "x"), p(&r, "y")]]).unwrap();
        let d2 = GradedMatrix::from_rows(&f1, vec![2], &[vec![p(&r, "y")], vec![p(&r, "-x")]]).unwrap();
        let k = GradedMatrix::from_columns(&f1, syzygies(&d1, None).unwrap()).unwrap();
        let h = prune(&subquotient(&k, &d2, None).unwrap());
        assert_eq!(h.num_generators(), 0);
        // the image of d1 is not inside the span of y
        let y = GradedMatrix::from_rows(&f0, vec![1], &[vec![p(&r, "y")]]).unwrap();
        assert_eq!(subquotient(&y, &d1, None).unwrap_err(), Error::ContainmentViolation);
    }

    #[test]
    fn principal_subquotient_is_shifted_cyclic() {
        // (x) / (x^2) in one variable: k in degree 1
        let r = PolyRing::with_names(7, &["x"]).unwrap();
        let f = FreeModule::standard(&r, 1);
        let a = GradedMatrix::from_rows(&f, vec![1], &[vec![p(&r, "x")]]).unwrap();
        let b = GradedMatrix::from_rows(&f, vec![2], &[vec![p(&r, "x^2")]]).unwrap();
        let m = subquotient(&a, &b, None).unwrap();
        assert_eq!(m.generators().twists(), &[1]);
        let dims: Vec<u64> = (0..4).map(|d| graded_piece_dim(&m, d).unwrap()).collect();
        assert_eq!(dims, vec![0, 1, 0, 0]);
    }
}
