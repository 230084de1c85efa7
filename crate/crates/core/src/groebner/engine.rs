//! Buchberger's algorithm for submodules of free modules (ideals are rank
//! one), with the normal selection strategy and Gebauer–Möller criteria.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::settings::EngineSettings;

use super::vector::{make_monic, Geobucket, ModOrder, Term, Vector};

pub(crate) struct GbConfig<'a> {
    pub order: ModOrder,
    pub field: PrimeField,
    /// Degree of each basis vector of the ambient free module.
    pub twists: &'a [i64],
    /// Homogeneous truncation: ignore everything above this degree.
    pub degree_bound: Option<i64>,
    pub settings: &'a EngineSettings,
}

impl GbConfig<'_> {
    fn sugar(&self, v: &[Term]) -> i64 {
        v.iter()
            .map(|t| t.mon.degree() as i64 + self.twists[t.comp as usize])
            .max()
            .unwrap_or(i64::MIN)
    }
}

/// Index of leading terms for divisor lookup, bucketed by component.
#[derive(Default, Clone, Debug)]
pub(crate) struct Reducers {
    by_comp: Vec<Vec<(Monomial, u64, usize)>>,
}

impl Reducers {
    pub fn from_basis(basis: &[Vector]) -> Self {
        let mut r = Reducers::default();
        for (i, v) in basis.iter().enumerate() {
            r.insert(&v[0], i);
        }
        r
    }

    pub fn insert(&mut self, lead: &Term, idx: usize) {
        let c = lead.comp as usize;
        if self.by_comp.len() <= c {
            self.by_comp.resize_with(c + 1, Vec::new);
        }
        self.by_comp[c].push((lead.mon.clone(), lead.mon.support_mask(), idx));
    }

    #[inline]
    pub fn find(&self, t: &Term) -> Option<(usize, &Monomial)> {
        let list = self.by_comp.get(t.comp as usize)?;
        let mask = t.mon.support_mask();
        list.iter()
            .find(|(m, mm, _)| mm & !mask == 0 && m.divides(&t.mon))
            .map(|(m, _, i)| (*i, m))
    }
}

/// Reduces the contents of `bucket` by the monic `basis`. With `full`, every
/// term is reduced; otherwise only the leading term. `record` sees each
/// quotient term `(c, m, i)`, meaning `c*m*basis[i]` was subtracted.
pub(crate) fn reduce_bucket(
    mut bucket: Geobucket<'_>,
    field: PrimeField,
    basis: &[Vector],
    reducers: &Reducers,
    full: bool,
    mut record: impl FnMut(u32, &Monomial, usize),
) -> Vector {
    let mut rem = Vec::new();
    while let Some(t) = bucket.pop_lead() {
        match reducers.find(&t) {
            Some((i, lead)) => {
                let m = t.mon.div(lead);
                record(t.coef, &m, i);
                bucket.add_scaled(field.neg(t.coef), &m, &basis[i][1..]);
            }
            None => {
                rem.push(t);
                if !full {
                    break;
                }
            }
        }
    }
    if !full && !rem.is_empty() {
        rem.extend(bucket.into_vector());
    }
    rem
}

pub(crate) fn normal_form(
    order: &ModOrder,
    field: PrimeField,
    basis: &[Vector],
    reducers: &Reducers,
    v: &[Term],
) -> Vector {
    let mut b = Geobucket::new(order, field);
    b.add(v);
    reduce_bucket(b, field, basis, reducers, true, |_, _, _| {})
}

pub(crate) fn s_vector<'a>(order: &'a ModOrder, field: PrimeField, f: &[Term], g: &[Term]) -> Geobucket<'a> {
    let lcm = f[0].mon.lcm(&g[0].mon);
    let mut b = Geobucket::new(order, field);
    b.add_scaled(1, &lcm.div(&f[0].mon), &f[1..]);
    b.add_scaled(field.neg(1), &lcm.div(&g[0].mon), &g[1..]);
    b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairKind {
    Input(usize),
    S(usize, usize),
}

#[derive(Clone, Debug)]
struct Pair {
    sugar: i64,
    lcm: Monomial,
    comp: u32,
    kind: PairKind,
}

struct Elem {
    sugar: i64,
    redundant: bool,
}

/// Reduced Gröbner basis of the submodule generated by `gens`: monic,
/// sorted ascending by leading term.
pub(crate) fn groebner(gens: Vec<Vector>, cfg: &GbConfig<'_>) -> Result<Vec<Vector>> {
    let field = cfg.field;
    let order = &cfg.order;
    let rank_one = cfg.twists.len() == 1;

    let mut inputs: Vec<(Vector, i64)> = Vec::new();
    for mut g in gens {
        if g.is_empty() {
            continue;
        }
        make_monic(field, &mut g);
        let s = cfg.sugar(&g);
        if cfg.degree_bound.is_some_and(|b| s > b) {
            continue;
        }
        inputs.push((g, s));
    }
    let mut pairs: Vec<Pair> = inputs
        .iter()
        .enumerate()
        .map(|(k, (g, s))| Pair {
            sugar: *s,
            lcm: g[0].mon.clone(),
            comp: g[0].comp,
            kind: PairKind::Input(k),
        })
        .collect();

    let mut basis: Vec<Elem> = Vec::new();
    let mut plain: Vec<Vector> = Vec::new();
    let mut reducers = Reducers::default();

    while !pairs.is_empty() {
        let s = pairs.iter().map(|p| p.sugar).min().unwrap();
        let (mut batch, rest): (Vec<Pair>, Vec<Pair>) = pairs.into_iter().partition(|p| p.sugar == s);
        pairs = rest;
        batch.sort_by(|a, b| {
            order
                .cmp(&a.lcm, a.comp, &b.lcm, b.comp)
                .then_with(|| kind_key(a.kind).cmp(&kind_key(b.kind)))
        });
        for p in batch {
            cfg.settings.charge(1)?;
            let bucket = match p.kind {
                PairKind::Input(k) => {
                    let mut b = Geobucket::new(order, field);
                    b.add(&inputs[k].0);
                    b
                }
                PairKind::S(i, j) => s_vector(order, field, &plain[i], &plain[j]),
            };
            let mut h = reduce_bucket(bucket, field, &plain, &reducers, true, |_, _, _| {});
            if h.is_empty() {
                continue;
            }
            make_monic(field, &mut h);
            let idx = basis.len();
            reducers.insert(&h[0], idx);
            plain.push(h);
            basis.push(Elem {
                sugar: p.sugar,
                redundant: false,
            });
            update_pairs(&mut pairs, &mut basis, &plain, idx, rank_one, cfg.degree_bound);
        }
    }

    let active: Vec<Vector> = plain
        .into_iter()
        .zip(&basis)
        .filter(|(_, e)| !e.redundant)
        .map(|(v, _)| v)
        .collect();
    let out = interreduce(order, field, active);
    if cfg.settings.verify() {
        verify_closure(&out, cfg)?;
    }
    Ok(out)
}

fn kind_key(k: PairKind) -> (usize, usize, usize) {
    match k {
        PairKind::Input(i) => (0, i, 0),
        PairKind::S(i, j) => (1, j, i),
    }
}

/// Gebauer–Möller update after appending `basis[t]`.
fn update_pairs(
    pairs: &mut Vec<Pair>,
    basis: &mut [Elem],
    vecs: &[Vector],
    t: usize,
    rank_one: bool,
    degree_bound: Option<i64>,
) {
    let lead_t = &vecs[t][0];
    let comp = lead_t.comp;

    // old pairs made superfluous by the new leading term
    pairs.retain(|p| {
        let PairKind::S(i, j) = p.kind else { return true };
        if p.comp != comp || !lead_t.mon.divides(&p.lcm) {
            return true;
        }
        let li = vecs[i][0].mon.lcm(&lead_t.mon);
        let lj = vecs[j][0].mon.lcm(&lead_t.mon);
        li == p.lcm || lj == p.lcm
    });

    struct Cand {
        i: usize,
        lcm: Monomial,
        coprime: bool,
        sugar: i64,
        keep: bool,
    }
    let mut cands: Vec<Cand> = Vec::new();
    for (i, e) in basis.iter().enumerate().take(t) {
        if e.redundant || vecs[i][0].comp != comp {
            continue;
        }
        let li = &vecs[i][0].mon;
        let lcm = li.lcm(&lead_t.mon);
        let sugar = (e.sugar + (lcm.degree() - li.degree()) as i64)
            .max(basis[t].sugar + (lcm.degree() - lead_t.mon.degree()) as i64);
        cands.push(Cand {
            i,
            coprime: rank_one && li.is_coprime(&lead_t.mon),
            lcm,
            sugar,
            keep: true,
        });
    }
    // chain criterion among new pairs: drop lcms properly divisible by another
    for a in 0..cands.len() {
        for b in 0..cands.len() {
            if a != b && cands[b].lcm != cands[a].lcm && cands[b].lcm.divides(&cands[a].lcm) {
                cands[a].keep = false;
                break;
            }
        }
    }
    // equal lcms: keep one; if any of them is coprime, drop all
    let mut seen: Vec<usize> = Vec::new();
    for a in 0..cands.len() {
        if !cands[a].keep {
            continue;
        }
        if let Some(&b) = seen.iter().find(|&&b| cands[b].lcm == cands[a].lcm) {
            if cands[a].coprime {
                cands[b].coprime = true;
            }
            cands[a].keep = false;
        } else {
            seen.push(a);
        }
    }
    for a in seen {
        let c = &cands[a];
        if c.coprime {
            continue;
        }
        if degree_bound.is_some_and(|bd| c.sugar > bd) {
            continue;
        }
        pairs.push(Pair {
            sugar: c.sugar,
            lcm: c.lcm.clone(),
            comp,
            kind: PairKind::S(c.i, t),
        });
    }

    for (e, v) in basis.iter_mut().zip(vecs).take(t) {
        if !e.redundant && v[0].comp == comp && lead_t.mon.divides(&v[0].mon) {
            e.redundant = true;
        }
    }
}

/// Minimal leading terms, tails fully reduced, sorted ascending.
pub(crate) fn interreduce(order: &ModOrder, field: PrimeField, elems: Vec<Vector>) -> Vec<Vector> {
    let mut elems: Vec<Vector> = elems.into_iter().filter(|v| !v.is_empty()).collect();
    for v in elems.iter_mut() {
        make_monic(field, v);
    }
    elems.sort_by(|a, b| order.cmp_terms(&a[0], &b[0]));
    let mut minimal: Vec<Vector> = Vec::new();
    for v in elems {
        let lead = &v[0];
        let divisible = minimal
            .iter()
            .any(|g| g[0].comp == lead.comp && g[0].mon.divides(&lead.mon));
        if !divisible {
            minimal.push(v);
        }
    }
    let reducers = Reducers::from_basis(&minimal);
    let mut out = Vec::with_capacity(minimal.len());
    for v in &minimal {
        let mut r = vec![v[0].clone()];
        r.extend(normal_form(order, field, &minimal, &reducers, &v[1..]));
        out.push(r);
    }
    out
}

/// Every S-vector of `basis` reduces to zero (within the degree bound).
pub(crate) fn verify_closure(basis: &[Vector], cfg: &GbConfig<'_>) -> Result<()> {
    let reducers = Reducers::from_basis(basis);
    for j in 0..basis.len() {
        for i in 0..j {
            let (a, b) = (&basis[i][0], &basis[j][0]);
            if a.comp != b.comp {
                continue;
            }
            if let Some(bd) = cfg.degree_bound {
                let lcm = a.mon.lcm(&b.mon);
                if lcm.degree() as i64 + cfg.twists[a.comp as usize] > bd {
                    continue;
                }
            }
            let bucket = s_vector(&cfg.order, cfg.field, &basis[i], &basis[j]);
            let r = reduce_bucket(bucket, cfg.field, basis, &reducers, false, |_, _, _| {});
            if !r.is_empty() {
                return Err(Error::Internal(format!(
                    "S-vector of basis elements {i} and {j} does not reduce to zero"
                )));
            }
        }
    }
    Ok(())
}

/// Groups basis elements by leading component and orders each group by
/// descending lex order of leading monomials, which keeps Schreyer
/// resolutions within the Hilbert bound on their length.
pub(crate) fn schreyer_sort(basis: &mut [Vector]) {
    basis.sort_by(|a, b| {
        let (x, y) = (&a[0], &b[0]);
        x.comp
            .cmp(&y.comp)
            .then_with(|| y.mon.exponents().cmp(x.mon.exponents()))
    });
}
