//! Exact commutative algebra over prime fields for computing Lyubeznik
//! numbers of standard graded F-pure rings, with Frobenius splitting
//! diagnostics and independent cross-checks.

pub mod error;
pub mod field;
pub mod fsing;
pub mod groebner;
pub mod homological;
pub mod lyubeznik;
pub mod modules;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod settings;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{GroebnerBasis, Ideal};
pub use homological::FreeResolution;
pub use lyubeznik::{LyubeznikTable, TableMode, TableOptions};
pub use modules::{FreeModule, GradedMatrix, ModuleElement, PresentedModule};
pub use monomial::{Monomial, MonomialOrder};
pub use oracle::{Graph, SimplicialComplex};
pub use parse::{format_polynomial, parse_polynomial};
pub use poly::{PolyRing, Polynomial};
pub use settings::EngineSettings;
