//! Independent verification routes: simplicial combinatorics, reduced
//! cohomology, and degree-strand linear algebra.

mod complex;
pub mod fixtures;
pub mod linalg;
mod strand;

pub use complex::{Graph, SimplicialComplex};
pub use strand::{strand_double_ext, strand_ext_degree_zero, strand_piece_dim, strand_rank};
