//! Degree strands of graded maps as explicit matrices over `F_p`.
//!
//! These recompute graded pieces and outer Ext dimensions by plain linear
//! algebra, bypassing module Gröbner bases. The inner Ext and its
//! resolution are shared with the main path.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::homological::{ext_module, FreeResolution};
use crate::modules::{GradedMatrix, PresentedModule};
use crate::monomial::{for_each_of_degree, monomial_count, Monomial};

use super::linalg::{rank, SparseVec};

/// Rank of `map` restricted to degree `d`.
pub fn strand_rank(map: &GradedMatrix, d: i64) -> usize {
    let n = map.ring().nvars();
    let mut index: HashMap<(u32, Monomial), usize> = HashMap::new();
    let mut rows: Vec<SparseVec> = Vec::new();
    for (j, col) in map.columns().iter().enumerate() {
        let e = d - map.source().twists()[j];
        if e < 0 || col.is_zero() {
            continue;
        }
        for_each_of_degree(n, e as u32, |exps| {
            let u = Monomial::from_exponents(exps).expect("bounded exponents");
            let mut row: SparseVec = col
                .terms()
                .iter()
                .map(|t| {
                    let key = (t.comp, t.mon.mul(&u));
                    let next = index.len();
                    (*index.entry(key).or_insert(next), t.coef)
                })
                .collect();
            row.sort_unstable();
            rows.push(row);
        });
    }
    rank(map.ring().field(), rows)
}

/// `dim_k M_d` as `dim F_d - rank` of the presentation in degree `d`.
pub fn strand_piece_dim(m: &PresentedModule, d: i64) -> u64 {
    let n = m.ring().nvars();
    let free: u64 = m.generators().twists().iter().map(|a| monomial_count(n, d - a)).sum();
    free - strand_rank(m.presentation(), d) as u64
}

/// `dim_k Ext^k_S(M, S)_0` from the degree-zero strand of the dual of the
/// resolution `res` of `M`.
pub fn strand_ext_degree_zero(res: &FreeResolution, k: usize) -> u64 {
    let n = res.ring().nvars();
    let dim: u64 = res.module(k).twists().iter().map(|&a| monomial_count(n, a)).sum();
    let out = strand_rank(&res.map(k + 1).transpose(), 0) as u64;
    let inn = if k == 0 {
        0
    } else {
        strand_rank(&res.map(k).transpose(), 0) as u64
    };
    dim - out - inn
}

/// `dim_k Ext^{n-i}_S(Ext^{n-j}_S(S/I, S), S)_0` with the outer Ext taken
/// from explicit strand matrices.
pub fn strand_double_ext(ideal: &Ideal, i: usize, j: usize) -> Result<u64> {
    let n = ideal.ring().nvars();
    if i > n || j > n {
        return Err(Error::OutOfRange(format!("({i}, {j}) with {n} variables")));
    }
    let res = FreeResolution::minimal(&PresentedModule::quotient_ring(ideal)?)?;
    let inner = ext_module(&res, n - j, None)?;
    let res_inner = FreeResolution::minimal(&inner)?;
    Ok(strand_ext_degree_zero(&res_inner, n - i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homological::ext_degree_zero_dim;
    use crate::modules::{graded_piece_dim, FreeModule};
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    #[test]
    fn piece_dims_agree_with_standard_monomials() {
        let r = PolyRing::with_names(3, &["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        let f = FreeModule::new(&r, vec![0, 1]);
        let rel = GradedMatrix::from_rows(
            &f,
            vec![1, 2, 2],
            &[vec![p("x"), p("y^2"), p("0")], vec![p("-1"), p("x"), p("z")]],
        )
        .unwrap();
        let m = PresentedModule::new(rel);
        for d in -1..6 {
            assert_eq!(strand_piece_dim(&m, d), graded_piece_dim(&m, d).unwrap(), "degree {d}");
        }
    }

    #[test]
    fn outer_ext_matches_module_route() {
        let r = PolyRing::with_names(2, &["a", "b", "c", "d"]).unwrap();
        let i = Ideal::new(
            &r,
            ["a*c", "a*d", "b*c", "b*d"]
                .iter()
                .map(|s| parse_polynomial(&r, s).unwrap())
                .collect(),
        )
        .unwrap();
        let res = FreeResolution::minimal(&PresentedModule::quotient_ring(&i).unwrap()).unwrap();
        for k in 0..=4 {
            assert_eq!(strand_ext_degree_zero(&res, k), ext_degree_zero_dim(&res, k).unwrap());
        }
        assert_eq!(strand_double_ext(&i, 2, 2).unwrap(), 2);
        assert_eq!(strand_double_ext(&i, 1, 1).unwrap(), 0);
        assert_eq!(strand_double_ext(&i, 0, 1).unwrap(), 1);
    }

    #[test]
    fn point_has_one_at_the_origin() {
        let r = PolyRing::with_names(5, &["x", "y"]).unwrap();
        let i = Ideal::new(&r, vec![r.var(0), r.var(1)]).unwrap();
        assert_eq!(strand_double_ext(&i, 0, 0).unwrap(), 1);
    }
}
