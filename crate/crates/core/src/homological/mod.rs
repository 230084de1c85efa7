//! Free resolutions and Ext.

mod ext;
mod resolution;

pub use ext::{ext_degree_zero_dim, ext_module, ext_of_quotient};
pub use resolution::FreeResolution;
