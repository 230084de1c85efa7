//! `Ext_S(M, S)` from a free resolution of `M`.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modules::{graded_piece_dim, prune, subquotient, syzygies, GradedMatrix, PresentedModule};

use super::resolution::FreeResolution;

/// `Ext^k_S(M, S) = ker(d_{k+1}^T) / im(d_k^T)` for the resolution `res` of
/// `M`, pruned. With a degree bound the presentation is only valid in
/// degrees up to the bound.
pub fn ext_module(res: &FreeResolution, k: usize, degree_bound: Option<i64>) -> Result<PresentedModule> {
    let ring = res.ring();
    if k > res.length() {
        return Ok(PresentedModule::zero(ring));
    }
    let fk = res.module(k).dual();
    let kernel = if k == res.length() {
        (0..fk.rank()).map(|i| fk.basis_element(i)).collect()
    } else {
        syzygies(&res.map(k + 1).transpose(), degree_bound)?
    };
    let kernel = GradedMatrix::from_columns(&fk, kernel)?;
    let image = if k == 0 {
        GradedMatrix::from_columns(&fk, Vec::new())?
    } else {
        res.map(k).transpose()
    };
    Ok(prune(&subquotient(&kernel, &image, degree_bound)?))
}

/// `Ext^k_S(S/I, S)`.
pub fn ext_of_quotient(ideal: &Ideal, k: usize) -> Result<PresentedModule> {
    let res = FreeResolution::minimal(&PresentedModule::quotient_ring(ideal)?)?;
    ext_module(&res, k, None)
}

/// `dim_k Ext^k_S(M, S)_0` given a resolution of `M`.
pub fn ext_degree_zero_dim(res: &FreeResolution, k: usize) -> Result<u64> {
    let dim = graded_piece_dim(&ext_module(res, k, Some(0))?, 0)?;
    if res.ring().settings().verify() {
        let strand = crate::oracle::strand_ext_degree_zero(res, k);
        if strand != dim {
            return Err(Error::Internal(format!(
                "Ext^{k} in degree 0: module {dim}, strand {strand}"
            )));
        }
    }
    Ok(dim)
}
