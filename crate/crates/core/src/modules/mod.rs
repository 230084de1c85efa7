//! Finitely generated graded modules over a polynomial ring.

mod free;
mod submodule;

pub use free::{FreeModule, GradedMatrix, ModuleElement, PresentedModule};
pub use submodule::{annihilator, graded_piece_dim, prune, subquotient, syzygies, SubmoduleBasis};
