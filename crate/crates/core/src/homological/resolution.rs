//! Graded free resolutions by Schreyer's algorithm, then minimalized.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::engine::{self, reduce_bucket, schreyer_sort, GbConfig, Reducers};
use crate::groebner::vector::{ModOrder, SchreyerFrame, Term, Vector};
use crate::modules::{FreeModule, GradedMatrix, ModuleElement, PresentedModule};
use crate::monomial::Monomial;
use crate::poly::PolyRing;

/// `0 <- F_0 <- F_1 <- ... <- F_L <- 0` resolving `coker(F_1 -> F_0)`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: PolyRing,
    modules: Vec<FreeModule>,
    maps: Vec<GradedMatrix>,
}

impl FreeResolution {
    /// Minimal graded free resolution of `m`.
    pub fn minimal(m: &PresentedModule) -> Result<FreeResolution> {
        let mut res = FreeResolution::schreyer(m)?;
        res.minimalize();
        if m.ring().settings().verify() {
            res.verify()?;
        }
        Ok(res)
    }

    /// Resolution read off Schreyer's syzygy Gröbner bases; usually not
    /// minimal.
    pub fn schreyer(m: &PresentedModule) -> Result<FreeResolution> {
        let ring = m.ring().clone();
        let field = ring.field();
        let f0 = m.generators().clone();
        let pot = ModOrder::Pot(ring.order());
        let cfg = GbConfig {
            order: pot.clone(),
            field,
            twists: f0.twists(),
            degree_bound: None,
            settings: ring.settings(),
        };
        let gens: Vec<Vector> = m.relations().iter().map(|v| v.terms().to_vec()).collect();
        let mut level = engine::groebner(gens, &cfg)?;
        schreyer_sort(&mut level);

        let mut modules = vec![f0];
        let mut maps = Vec::new();
        let mut order = pot.clone();
        while !level.is_empty() {
            if maps.len() > ring.nvars() + 1 {
                return Err(Error::Internal("Schreyer resolution failed to terminate".into()));
            }
            let below = modules.last().unwrap();
            let twists: Vec<i64> = level
                .iter()
                .map(|v| v[0].mon.degree() as i64 + below.twists()[v[0].comp as usize])
                .collect();
            let source = FreeModule::new(&ring, twists);
            let columns = level
                .iter()
                .map(|v| ModuleElement::from_vector(pot.canonicalize(field, v.clone())))
                .collect();
            maps.push(GradedMatrix::new_unchecked(source.clone(), below.clone(), columns));
            modules.push(source);

            let leads: Vec<(Monomial, u32)> = level.iter().map(|v| (v[0].mon.clone(), v[0].comp)).collect();
            let next_order = ModOrder::Schreyer(Arc::new(SchreyerFrame::over(&order, &leads)));
            let mut next = syzygy_basis(&order, &next_order, &ring, &level)?;
            schreyer_sort(&mut next);
            order = next_order;
            level = next;
        }
        Ok(FreeResolution { ring, modules, maps })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// `F_k`; the zero module past the end.
    pub fn module(&self, k: usize) -> FreeModule {
        self.modules
            .get(k)
            .cloned()
            .unwrap_or_else(|| FreeModule::new(&self.ring, Vec::new()))
    }

    /// `d_k : F_k -> F_{k-1}` for `k >= 1`; a zero map past the end.
    pub fn map(&self, k: usize) -> GradedMatrix {
        assert!(k >= 1, "no differential out of F_0");
        match self.maps.get(k - 1) {
            Some(m) => m.clone(),
            None => {
                let src = self.module(k);
                let cols = vec![ModuleElement::zero(); src.rank()];
                GradedMatrix::new_unchecked(src, self.module(k - 1), cols)
            }
        }
    }

    /// Total Betti numbers `rank F_k`.
    pub fn betti(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Graded Betti numbers as `(k, degree, count)`, sorted.
    pub fn graded_betti(&self) -> Vec<(usize, i64, usize)> {
        let mut out = Vec::new();
        for (k, m) in self.modules.iter().enumerate() {
            let mut t = m.twists().to_vec();
            t.sort_unstable();
            for d in t {
                match out.last_mut() {
                    Some((kk, dd, c)) if *kk == k && *dd == d => *c += 1,
                    _ => out.push((k, d, 1)),
                }
            }
        }
        out
    }

    /// Consecutive maps compose to zero and no entry of a map is a nonzero
    /// constant.
    pub fn verify(&self) -> Result<()> {
        for k in 1..self.maps.len() {
            if !self.maps[k - 1].compose(&self.maps[k])?.is_zero() {
                return Err(Error::Internal(format!("d_{} d_{} is not zero", k, k + 1)));
            }
        }
        for (k, m) in self.maps.iter().enumerate() {
            if m.columns().iter().any(|c| c.terms().iter().any(|t| t.mon.is_one())) {
                return Err(Error::Internal(format!("d_{} has a unit entry", k + 1)));
            }
        }
        Ok(())
    }

    /// Cancels unit entries, sweeping upward through the maps.
    fn minimalize(&mut self) {
        let field = self.ring.field();
        for k in 0..self.maps.len() {
            loop {
                let pivot = self.maps[k]
                    .columns()
                    .iter()
                    .enumerate()
                    .filter_map(|(c, col)| {
                        col.terms()
                            .iter()
                            .find(|t| t.mon.is_one())
                            .map(|t| (col.terms().len(), c, t.comp as usize, t.coef))
                    })
                    .min();
                let Some((_, c, r, u)) = pivot else { break };
                let target = self.modules[k].clone();
                let cols = self.maps[k].columns();
                let pcol = cols[c].clone();
                let factor = field.neg(field.inv(u));
                let mut new_cols: Vec<ModuleElement> = Vec::with_capacity(cols.len() - 1);
                for (j, col) in cols.iter().enumerate() {
                    if j == c {
                        continue;
                    }
                    let a = target.entry(col, r);
                    if a.is_zero() {
                        new_cols.push(col.clone());
                    } else {
                        new_cols.push(target.add(col, &target.mul_poly(&a.scale(factor), &pcol)));
                    }
                }
                self.modules[k] = drop_generator(&self.modules[k], r);
                self.modules[k + 1] = drop_generator(&self.modules[k + 1], c);
                let new_cols = new_cols.into_iter().map(|v| drop_row(v, r)).collect();
                self.maps[k] =
                    GradedMatrix::new_unchecked(self.modules[k + 1].clone(), self.modules[k].clone(), new_cols);
                if k >= 1 {
                    let prev = &self.maps[k - 1];
                    let mut cols = prev.columns().to_vec();
                    cols.remove(r);
                    self.maps[k - 1] =
                        GradedMatrix::new_unchecked(self.modules[k].clone(), self.modules[k - 1].clone(), cols);
                }
                if k + 1 < self.maps.len() {
                    let next = &self.maps[k + 1];
                    let cols = next.columns().iter().cloned().map(|v| drop_row(v, c)).collect();
                    self.maps[k + 1] =
                        GradedMatrix::new_unchecked(self.modules[k + 2].clone(), self.modules[k + 1].clone(), cols);
                }
            }
        }
        while self.modules.len() > 1 && self.modules.last().unwrap().rank() == 0 {
            self.modules.pop();
            self.maps.pop();
        }
    }
}

fn drop_generator(f: &FreeModule, i: usize) -> FreeModule {
    let mut t = f.twists().to_vec();
    t.remove(i);
    FreeModule::new(f.ring(), t)
}

/// Removes component `r` (assumed zero or discarded) and shifts later ones.
fn drop_row(v: ModuleElement, r: usize) -> ModuleElement {
    let r = r as u32;
    ModuleElement::from_vector(
        v.terms()
            .iter()
            .filter(|t| t.comp != r)
            .map(|t| Term {
                comp: if t.comp > r { t.comp - 1 } else { t.comp },
                ..t.clone()
            })
            .collect(),
    )
}

/// Gröbner basis of the syzygies of the Gröbner basis `level` (ordered by
/// `order`), with respect to the induced order `next_order`.
fn syzygy_basis(order: &ModOrder, next_order: &ModOrder, ring: &PolyRing, level: &[Vector]) -> Result<Vec<Vector>> {
    let field = ring.field();
    let reducers = Reducers::from_basis(level);
    let mut out = Vec::new();
    for i in 0..level.len() {
        let li = &level[i][0];
        let mut cands: Vec<(Monomial, usize)> = Vec::new();
        for (j, g) in level.iter().enumerate().skip(i + 1) {
            if g[0].comp == li.comp {
                cands.push((li.mon.lcm(&g[0].mon).div(&li.mon), j));
            }
        }
        cands.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.1.cmp(&b.1)));
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        for (m, j) in cands {
            if !kept.iter().any(|(k, _)| k.divides(&m)) {
                kept.push((m, j));
            }
        }
        for (mi, j) in kept {
            ring.settings().charge(1)?;
            let lj = &level[j][0];
            let mj = li.mon.mul(&mi).div(&lj.mon);
            let bucket = engine::s_vector(order, field, &level[i], &level[j]);
            let mut terms: Vector = vec![
                Term {
                    coef: 1,
                    comp: i as u32,
                    mon: mi,
                },
                Term {
                    coef: field.neg(1),
                    comp: j as u32,
                    mon: mj,
                },
            ];
            let rem = reduce_bucket(bucket, field, level, &reducers, true, |c, m, k| {
                terms.push(Term {
                    coef: field.neg(c),
                    comp: k as u32,
                    mon: m.clone(),
                });
            });
            if !rem.is_empty() {
                return Err(Error::Internal(
                    "S-vector of a Gröbner basis did not reduce to zero".into(),
                ));
            }
            let v = next_order.canonicalize(field, terms);
            debug_assert!(v[0].comp == i as u32 && v[0].coef == 1);
            out.push(v);
        }
    }
    Ok(out)
}
