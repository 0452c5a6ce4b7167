//! Exact epsilon-characters of type-A restricted quantum loop algebras at a
//! root of unity, computed from lattice-path sums.
//!
//! The [`lattice`] module holds the monomial and character ring; the other
//! modules build characters of fundamental, degree-two, Kirillov-Reshetikhin
//! and Frobenius-factorable modules on top of it.

pub mod cli;
pub mod degree2;
pub mod error;
pub mod krfrob;
pub mod lattice;
pub mod paths;
pub mod snake;
pub mod tensor;

pub use error::{Error, Result};
pub use lattice::{a_variable, Character, LatticeConfig, Mode, Monomial};
