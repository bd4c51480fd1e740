//! Exact set covering on circulant matrices.
//!
//! The instance `C_n^k` has one covering constraint per cyclic window of `k`
//! consecutive columns. This crate provides the instance algebra, circulant
//! minor certificates with their inequalities, facet verification by exact
//! root enumeration, a polynomial separation oracle for the transversal cuts
//! on `C_sk^k`, and a cutting-plane solver that is exact for `s = 2, 3`. All
//! polyhedral arithmetic is over arbitrary-precision rationals.
//!
//! Enumeration-heavy paths fan out over rayon by default; disabling the
//! `parallel` feature swaps in the sequential fallback with identical
//! results.

pub mod covers;
pub mod error;
pub mod exec;
pub mod facet;
pub mod inequality;
pub mod instance;
pub mod json;
pub mod limits;
pub mod matrix;
pub mod minors;
pub mod ratio;
pub mod ratlp;
pub mod separation;
pub mod set;
pub mod solver;

pub use error::{Error, Result};
pub use instance::CirculantInstance;
pub use limits::Limits;
pub use ratio::Rat;
pub use set::IndexSet;
