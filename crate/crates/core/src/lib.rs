//! Exact workbench for the bounded homotopy category of modules over a
//! finite-dimensional acyclic quiver algebra.
//!
//! The crate builds path algebras with admissible relations over `ℚ` or
//! `𝔽_p`, computes in their module categories (homs, kernels, duals,
//! transposes, resolutions), models bounded complexes up to homotopy with
//! certified equivalences, and realizes the contravariant duality and the
//! Serre functor on acyclic complexes through a functorial column
//! totalization engine, up to and including Auslander-Reiten triangles
//! verified by exact linear algebra.

pub mod algebra;
pub mod catalog;
pub mod columns;
pub mod complex;
pub mod error;
pub mod field;
pub mod homk;
pub mod io;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod present;
pub mod quiver;
pub mod rng;
pub mod serrear;
pub mod suite;

pub use algebra::Algebra;
pub use complex::{ChainMap, Complex};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use module::{Module, ModuleMap};
