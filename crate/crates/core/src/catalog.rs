//! Bundled algebras and their fixture data.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::quiver::Quiver;

pub const CATALOG_NAMES: [&str; 4] = ["a2", "a3", "n3", "d4"];

/// Builds a bundled algebra over `ℚ`.
pub fn algebra(name: &str) -> Result<Arc<Algebra>> {
    algebra_over(name, FieldSpec::Rationals)
}

pub fn algebra_over(name: &str, field: FieldSpec) -> Result<Arc<Algebra>> {
    let s = |v: &str| v.to_string();
    match name {
        "a2" => Algebra::new(
            field,
            Quiver::new(vec![s("1"), s("2")], vec![(s("a"), s("1"), s("2"))])?,
            vec![],
        ),
        "a3" => Algebra::new(
            field,
            Quiver::new(
                vec![s("1"), s("2"), s("3")],
                vec![(s("a"), s("1"), s("2")), (s("b"), s("2"), s("3"))],
            )?,
            vec![],
        ),
        "n3" => Algebra::new(
            field,
            Quiver::new(
                vec![s("1"), s("2"), s("3")],
                vec![(s("a"), s("1"), s("2")), (s("b"), s("2"), s("3"))],
            )?,
            vec![vec![(s("1"), vec![s("a"), s("b")])]],
        ),
        "d4" => Algebra::new(
            field,
            Quiver::new(
                vec![s("1"), s("2"), s("3"), s("4")],
                vec![
                    (s("a"), s("1"), s("4")),
                    (s("b"), s("2"), s("4")),
                    (s("c"), s("3"), s("4")),
                ],
            )?,
            vec![],
        ),
        _ => Err(Error::UnknownCatalogEntry(name.to_string())),
    }
}
