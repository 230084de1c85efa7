//! Lyubeznik tables from degree-zero double Ext, and the consistency checks
//! they are expected to satisfy.
//!
//! For a standard graded F-pure `R = S/I` with `n` variables,
//! `λ_{i,j}(R) = dim_k Ext^{n-i}_S(Ext^{n-j}_S(R, S), S)_0`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::fsing::{fedder_is_fpure, SplittingDimension};
use crate::groebner::Ideal;
use crate::homological::{ext_degree_zero_dim, ext_module, FreeResolution};
use crate::modules::PresentedModule;
use crate::oracle::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableMode {
    /// The ring `R` at its homogeneous maximal ideal.
    LocalCone,
    /// `X = Proj R`, indexed as the local table of the cone.
    Projective,
}

/// How a table cell got its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellSource {
    Computed,
    /// Below the diagonal and not computed.
    Triangular,
    /// Forced to zero by the splitting-dimension vanishing theorem.
    Theorem,
    /// The computation ran out of budget.
    Missing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
    pub value: Option<u64>,
    pub source: CellSource,
}

#[derive(Clone, Debug, Serialize)]
pub struct LyubeznikTable {
    /// `dim R` in local mode, `dim X = dim R - 1` in projective mode.
    pub d: usize,
    /// Side length: `d + 1` locally, `d + 2` projectively.
    pub size: usize,
    pub mode: TableMode,
    pub characteristic: u32,
    pub nvars: usize,
    pub fpure: bool,
    /// Row-major `size × size`.
    pub cells: Vec<Cell>,
    /// Strict-mode cells with an index past `size - 1`.
    pub out_of_range: Vec<Cell>,
}

impl LyubeznikTable {
    pub fn cell(&self, i: usize, j: usize) -> &Cell {
        &self.cells[i * self.size + j]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        self.cell(i, j).value
    }

    /// Highest index, `dim R` of the ring whose local table this is.
    pub fn top(&self) -> usize {
        self.size - 1
    }

    pub fn is_complete(&self) -> bool {
        self.cells
            .iter()
            .chain(&self.out_of_range)
            .all(|c| c.source != CellSource::Missing)
    }

    /// `λ_{top,top} = 1` and every other known entry zero.
    pub fn is_trivial(&self) -> bool {
        let t = self.top();
        self.cells
            .iter()
            .all(|c| c.value == Some(if (c.i, c.j) == (t, t) { 1 } else { 0 }) || c.source == CellSource::Triangular)
    }

    /// Nonzero entries as `(i, j, value)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, u64)> {
        self.cells
            .iter()
            .filter_map(|c| c.value.filter(|v| *v != 0).map(|v| (c.i, c.j, v)))
            .collect()
    }

    /// Upper-triangular text rendering; `(0)` marks theorem-derived zeros
    /// and `?` missing cells.
    pub fn render(&self) -> String {
        let show = |c: &Cell| match c.source {
            CellSource::Triangular => String::new(),
            CellSource::Theorem => "(0)".to_string(),
            CellSource::Missing => "?".to_string(),
            CellSource::Computed => c.value.map_or("?".into(), |v| v.to_string()),
        };
        let width = self.cells.iter().map(|c| show(c).len()).max().unwrap_or(1).max(1);
        let mut out = String::new();
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size)
                .map(|j| format!("{:>width$}", show(self.cell(i, j))))
                .collect();
            out.push_str(row.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Persistence for finished cells, keyed by `(i, j)`.
pub trait CellStore: Sync {
    fn load(&self, i: usize, j: usize) -> Option<u64>;
    fn store(&self, i: usize, j: usize, value: u64);
}

/// A store that remembers nothing.
pub struct NoStore;

impl CellStore for NoStore {
    fn load(&self, _: usize, _: usize) -> Option<u64> {
        None
    }
    fn store(&self, _: usize, _: usize, _: u64) {}
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TableOptions {
    /// Also compute the cells that vanish for formal reasons, and check them.
    pub strict: bool,
    /// Skip cells the vanishing theorem forces to zero (needs a certified
    /// `sdim`).
    pub fast: bool,
    /// Use Schreyer resolutions as computed, without minimalization.
    pub no_minimalize: bool,
    pub sdim: Option<SplittingDimension>,
}

fn check_input(ideal: &Ideal) -> Result<()> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous(ideal.to_string()));
    }
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

fn resolve(m: &PresentedModule, no_minimalize: bool) -> Result<FreeResolution> {
    if no_minimalize {
        FreeResolution::schreyer(m)
    } else {
        FreeResolution::minimal(m)
    }
}

/// `dim_k Ext^{n-i}_S(Ext^{n-j}_S(S/I, S), S)_0` with no F-purity gate: a
/// Lyubeznik number only when `S/I` is F-pure.
pub fn raw_double_ext(ideal: &Ideal, i: usize, j: usize, no_minimalize: bool) -> Result<u64> {
    check_input(ideal)?;
    let n = ideal.ring().nvars();
    if i > n || j > n {
        return Err(Error::OutOfRange(format!("({i}, {j}) with {n} variables")));
    }
    let res = resolve(&PresentedModule::quotient_ring(ideal)?, no_minimalize)?;
    let inner = ext_module(&res, n - j, None)?;
    let res_inner = resolve(&inner, no_minimalize)?;
    ext_degree_zero_dim(&res_inner, n - i)
}

/// The Lyubeznik table of `S/I`; refuses rings that are not F-pure.
pub fn lyubeznik_table(ideal: &Ideal, opts: &TableOptions, store: &dyn CellStore) -> Result<LyubeznikTable> {
    build_table(ideal, TableMode::LocalCone, opts, store)
}

/// The Lyubeznik table of `Proj(S/I)`, as the local table of the cone.
pub fn projective_table(ideal: &Ideal, opts: &TableOptions, store: &dyn CellStore) -> Result<LyubeznikTable> {
    build_table(ideal, TableMode::Projective, opts, store)
}

fn build_table(ideal: &Ideal, mode: TableMode, opts: &TableOptions, store: &dyn CellStore) -> Result<LyubeznikTable> {
    check_input(ideal)?;
    if !fedder_is_fpure(ideal)? {
        return Err(Error::NotFPure);
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let top = ideal.krull_dimension()? as usize;
    let d = match mode {
        TableMode::LocalCone => top,
        TableMode::Projective => top
            .checked_sub(1)
            .ok_or_else(|| Error::OutOfRange("the projective scheme is empty".into()))?,
    };
    let size = top + 1;
    let forced = |i: usize, j: usize| -> bool {
        opts.fast
            && opts
                .sdim
                .is_some_and(|s| s.certified && forced_zero(i, j, s.value, top))
    };

    // cells to compute, by column
    let mut wanted: Vec<(usize, usize)> = Vec::new();
    let bound = if opts.strict { n } else { top };
    for j in 0..=bound {
        for i in 0..=bound {
            let in_range = i <= top && j <= top;
            let needed = if opts.strict { true } else { in_range && i <= j };
            if needed && !(in_range && i <= j && forced(i, j)) {
                wanted.push((i, j));
            }
        }
    }
    let mut values: Vec<Option<u64>> = wanted.iter().map(|&(i, j)| store.load(i, j)).collect();
    let mut columns: Vec<usize> = wanted
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_none())
        .map(|((_, j), _)| *j)
        .collect();
    columns.sort_unstable();
    columns.dedup();

    if !columns.is_empty() {
        let res = Arc::new(resolve(&PresentedModule::quotient_ring(ideal)?, opts.no_minimalize)?);
        let inner: Vec<(usize, Option<FreeResolution>)> = columns
            .par_iter()
            .map(|&j| {
                let r = ext_module(&res, n - j, None).and_then(|e| resolve(&e, opts.no_minimalize));
                match r {
                    Ok(r) => Ok((j, Some(r))),
                    Err(Error::BudgetExceeded(_)) => Ok((j, None)),
                    Err(e) => Err(e),
                }
            })
            .collect::<Result<_>>()?;
        let computed: Vec<Option<u64>> = wanted
            .par_iter()
            .zip(values.par_iter())
            .map(|(&(i, j), known)| {
                if known.is_some() {
                    return Ok(*known);
                }
                let Some((_, Some(res_e))) = inner.iter().find(|(jj, _)| *jj == j) else {
                    return Ok(None);
                };
                match ext_degree_zero_dim(res_e, n - i) {
                    Ok(v) => {
                        store.store(i, j, v);
                        Ok(Some(v))
                    }
                    Err(Error::BudgetExceeded(_)) => Ok(None),
                    Err(e) => Err(e),
                }
            })
            .collect::<Result<_>>()?;
        values = computed;
    }

    let mut cells = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            let source = if i > j && !opts.strict {
                CellSource::Triangular
            } else if i <= j && forced(i, j) {
                CellSource::Theorem
            } else {
                CellSource::Computed
            };
            let value = match source {
                CellSource::Triangular => None,
                CellSource::Theorem => Some(0),
                _ => {
                    let k = wanted.iter().position(|&c| c == (i, j)).expect("cell scheduled");
                    values[k]
                }
            };
            let source = if source == CellSource::Computed && value.is_none() {
                CellSource::Missing
            } else {
                source
            };
            cells.push(Cell { i, j, value, source });
        }
    }
    let out_of_range = wanted
        .iter()
        .zip(&values)
        .filter(|((i, j), _)| *i > top || *j > top)
        .map(|(&(i, j), &value)| Cell {
            i,
            j,
            value,
            source: if value.is_some() {
                CellSource::Computed
            } else {
                CellSource::Missing
            },
        })
        .collect();
    Ok(LyubeznikTable {
        d,
        size,
        mode,
        characteristic: ring.characteristic(),
        nvars: n,
        fpure: true,
        cells,
        out_of_range,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
}

impl CheckEntry {
    fn new(name: &str, status: CheckStatus, details: impl Into<String>) -> Self {
        CheckEntry {
            name: name.to_string(),
            status,
            details: details.into(),
        }
    }

    fn verdict(name: &str, failures: &[String], ok: impl Into<String>) -> Self {
        if failures.is_empty() {
            CheckEntry::new(name, CheckStatus::Pass, ok)
        } else {
            CheckEntry::new(name, CheckStatus::Fail, failures.join("; "))
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn push(&mut self, e: CheckEntry) {
        self.entries.push(e);
    }

    pub fn any_failed(&self) -> bool {
        self.entries.iter().any(|e| e.status == CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.status)
    }
}

/// Nonzero computed cells below the diagonal.
pub fn check_upper_triangular(t: &LyubeznikTable) -> CheckEntry {
    let lower: Vec<&Cell> = t
        .cells
        .iter()
        .filter(|c| c.i > c.j && c.source == CellSource::Computed)
        .collect();
    if lower.is_empty() {
        return CheckEntry::new(
            "upper-triangular",
            CheckStatus::Skipped,
            "lower cells not computed (strict mode computes them)",
        );
    }
    let bad: Vec<String> = lower
        .iter()
        .filter(|c| c.value != Some(0))
        .map(|c| format!("({}, {}) = {}", c.i, c.j, c.value.unwrap_or(0)))
        .collect();
    CheckEntry::verdict(
        "upper-triangular",
        &bad,
        format!("{} lower cells computed, all zero", lower.len()),
    )
}

/// `λ_{top,top} ≠ 0`.
pub fn check_highest_nonzero(t: &LyubeznikTable) -> CheckEntry {
    let k = t.top();
    match t.get(k, k) {
        None => CheckEntry::new("highest-nonzero", CheckStatus::Skipped, "cell missing"),
        Some(0) => CheckEntry::new("highest-nonzero", CheckStatus::Fail, format!("λ({k},{k}) = 0")),
        Some(v) => CheckEntry::new("highest-nonzero", CheckStatus::Pass, format!("λ({k},{k}) = {v}")),
    }
}

/// Strict-mode cells with an index above `dim R` vanish.
pub fn check_out_of_range(t: &LyubeznikTable) -> CheckEntry {
    if t.out_of_range.is_empty() {
        return CheckEntry::new(
            "out-of-range-zero",
            CheckStatus::Skipped,
            "not computed (strict mode computes them)",
        );
    }
    let bad: Vec<String> = t
        .out_of_range
        .iter()
        .filter(|c| c.value.is_some_and(|v| v != 0))
        .map(|c| format!("({}, {}) = {}", c.i, c.j, c.value.unwrap()))
        .collect();
    CheckEntry::verdict(
        "out-of-range-zero",
        &bad,
        format!("{} cells computed, all zero", t.out_of_range.len()),
    )
}

/// Cells the vanishing theorem forces to zero: `i < sdim` or
/// `j < min(sdim + 1, dim R)`. The cap at `dim R` keeps `λ_{d,d}` free when
/// `R` is strongly F-regular.
pub fn forced_zero(i: usize, j: usize, sdim: i64, dim: usize) -> bool {
    (i as i64) < sdim || (j as i64) < (sdim + 1).min(dim as i64)
}

/// `λ_{i,j} = 0` on every computed cell where [`forced_zero`] holds.
pub fn check_vanishing(t: &LyubeznikTable, sdim: Option<SplittingDimension>) -> CheckEntry {
    let name = "sdim-vanishing";
    let Some(s) = sdim else {
        return CheckEntry::new(name, CheckStatus::Skipped, "splitting dimension not computed");
    };
    if !s.certified {
        return CheckEntry::new(name, CheckStatus::Skipped, format!("sdim {} is uncertified", s.value));
    }
    let bad: Vec<String> = t
        .cells
        .iter()
        .filter(|c| c.source == CellSource::Computed)
        .filter(|c| forced_zero(c.i, c.j, s.value, t.top()))
        .filter(|c| c.value.is_some_and(|v| v != 0))
        .map(|c| format!("({}, {}) = {}", c.i, c.j, c.value.unwrap()))
        .collect();
    CheckEntry::verdict(name, &bad, format!("sdim = {}", s.value))
}

fn projective_entry(t: &LyubeznikTable, i: usize, j: usize, bad: &mut Vec<String>) -> Option<u64> {
    let v = t.get(i, j);
    if v.is_none() {
        bad.push(format!("({i}, {j}) missing"));
    }
    v
}

/// `λ_{d+1,d+1} = λ_{0,1} + 1` and `λ_{0,j} = λ_{d+2-j,d+1}` for `2 ≤ j ≤ d`,
/// for a Cohen–Macaulay `X` (asserted by the caller).
pub fn check_projective_duality(t: &LyubeznikTable, cm_asserted: bool) -> CheckEntry {
    let name = "projective-duality";
    if t.mode != TableMode::Projective {
        return CheckEntry::new(name, CheckStatus::Skipped, "not a projective table");
    }
    if !cm_asserted {
        return CheckEntry::new(name, CheckStatus::Skipped, "Cohen-Macaulay hypothesis not asserted");
    }
    let d = t.d;
    let mut bad = Vec::new();
    if let (Some(top), Some(a)) = (
        projective_entry(t, d + 1, d + 1, &mut bad),
        projective_entry(t, 0, 1, &mut bad),
    ) {
        if top != a + 1 {
            bad.push(format!("λ({0},{0}) = {top} but λ(0,1) + 1 = {1}", d + 1, a + 1));
        }
    }
    for j in 2..=d {
        if let (Some(a), Some(b)) = (
            projective_entry(t, 0, j, &mut bad),
            projective_entry(t, d + 2 - j, d + 1, &mut bad),
        ) {
            if a != b {
                bad.push(format!("λ(0,{j}) = {a} but λ({},{}) = {b}", d + 2 - j, d + 1));
            }
        }
    }
    CheckEntry::verdict(name, &bad, format!("dim X = {d}"))
}

/// The five clauses for a Stanley–Reisner `X`, with `t` and the degree-zero
/// local cohomology `h_j = dim H̃^{j-1}(Δ)` read off the complex.
pub fn check_sheaf_cohomology(
    t: &LyubeznikTable,
    complex: &SimplicialComplex,
    field: PrimeField,
    cm_asserted: bool,
) -> CheckEntry {
    let name = "sheaf-cohomology";
    if t.mode != TableMode::Projective {
        return CheckEntry::new(name, CheckStatus::Skipped, "not a projective table");
    }
    if !cm_asserted {
        return CheckEntry::new(
            name,
            CheckStatus::Skipped,
            "Cohen-Macaulay and equidimensional hypotheses not asserted",
        );
    }
    let d = t.d;
    let comps = complex.connected_components() as u64;
    let h = |j: usize| complex.hochster_degree_zero(j as i64, field);
    let mut expected: Vec<Vec<u64>> = vec![vec![0; d + 2]; d + 2];
    expected[0][1] = comps.saturating_sub(1);
    expected[d + 1][d + 1] = comps;
    for (j, cell) in expected[0].iter_mut().enumerate().take(d + 1).skip(2) {
        *cell = h(j);
    }
    for (j, row) in expected.iter_mut().enumerate().take(d + 1).skip(2) {
        row[d + 1] = h(d + 2 - j);
    }
    let mut bad = Vec::new();
    for (i, row) in expected.iter().enumerate() {
        for (j, &want) in row.iter().enumerate().skip(i) {
            match t.get(i, j) {
                Some(v) if v == want => {}
                Some(v) => bad.push(format!("λ({i},{j}) = {v}, expected {want}")),
                None if t.cell(i, j).source == CellSource::Missing => bad.push(format!("({i}, {j}) missing")),
                None => {}
            }
        }
    }
    CheckEntry::verdict(name, &bad, format!("t = {comps}, dim X = {d}"))
}

/// Shape checks plus the vanishing check.
pub fn standard_checks(t: &LyubeznikTable, sdim: Option<SplittingDimension>) -> CheckReport {
    let mut r = CheckReport::default();
    r.push(check_upper_triangular(t));
    r.push(check_highest_nonzero(t));
    r.push(check_out_of_range(t));
    r.push(check_vanishing(t, sdim));
    r
}
