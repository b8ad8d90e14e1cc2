//! Exact symbolic kernel for U_q(gl_N), its twisted orthogonal and symplectic
//! coideal subalgebras and the associated twisted q-Yangians.

pub mod error;
pub mod scalars;

pub use error::{Error, Result};
pub mod freealg;
pub mod report;
pub mod tensorcalc;
pub mod parallel;
pub mod presentations;
pub mod coideal;
pub mod determinants;
