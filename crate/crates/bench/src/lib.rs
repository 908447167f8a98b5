//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use brace_forge::brace::{brace_from_rb, SkewBrace};
use brace_forge::catalog::Catalog;
use brace_forge::group::FiniteGroup;
use brace_forge::rota_baxter::{enumerate_rb_operators, RbOperator};
use brace_forge::Bounds;

pub fn group(name: &str) -> Arc<FiniteGroup> {
    Catalog::builtin().resolve(name).expect("catalog group")
}

/// Every weight 1 operator on the named group.
pub fn operators(name: &str) -> Vec<RbOperator> {
    enumerate_rb_operators(&group(name), &Bounds::default()).expect("within bounds")
}

/// The brace of the last enumerated operator, which is never the zero operator
/// on a nontrivial group.
pub fn brace(name: &str) -> SkewBrace {
    let ops = operators(name);
    brace_from_rb(ops.last().expect("at least the zero operator")).expect("valid brace")
}
