//! Skew left braces `(G, ·, ∘)` with `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)`.
//!
//! Both products are stored as validated groups over the same element
//! indices, so the shared identity is index 0.

mod construct;
mod ideals;
mod iso;
mod lambda;
mod parity;
mod star;
mod verify;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{opposite, FiniteGroup};

pub use construct::{
    brace_from_rb, brace_from_rb_neg1, brace_from_regular_subgroup, enumerate_braces, regular_subgroup_of,
    semidirect_brace,
};
pub use ideals::{
    annihilator, is_ideal, is_left_ideal, is_strong_left_ideal, left_center, quotient_brace,
    rb_ideal_criterion, rb_left_center, rb_left_ideal_criterion, rb_socle, socle,
};
pub use iso::brace_isomorphic;
pub use lambda::{
    is_lambda_homomorphic, lambda_analysis, lambda_homomorphic_report, two_sided_cocycle_check, LambdaMap,
};
pub use parity::{parity_brace_window, ParityWindow};
pub use star::{left_series, star_and_series, star_table, StarReport};
pub use verify::{left_axiom_witness, verify_brace, BraceKind, BraceReport};

/// A verified skew left brace.
#[derive(Debug, Clone)]
pub struct SkewBrace {
    name: String,
    add: FiniteGroup,
    circ: FiniteGroup,
}

impl SkewBrace {
    /// Check the left brace axiom and wrap. The two groups must have the
    /// same order; their labels are taken from `add`.
    pub fn new(name: impl Into<String>, add: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        if add.order() != circ.order() {
            return Err(Error::precondition(format!(
                "additive group has order {}, multiplicative group {}",
                add.order(),
                circ.order()
            )));
        }
        if let Some([a, b, c]) = left_axiom_witness(&add, &circ) {
            return Err(Error::precondition(format!(
                "left brace axiom fails at (a, b, c) = ({a}, {b}, {c})"
            )));
        }
        Ok(SkewBrace { name: name.into(), add, circ })
    }

    /// Like [`SkewBrace::new`] but a failure is an internal error.
    pub(crate) fn guaranteed(name: impl Into<String>, add: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        let name = name.into();
        SkewBrace::new(name.clone(), add, circ)
            .map_err(|e| Error::internal(format!("{name} should be a skew brace: {e}")))
    }

    /// `(G, ·, ·)`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        SkewBrace { name: format!("trivial({})", g.name()), add: g.clone(), circ: g.clone() }
    }

    /// `(G, ·, ∘)` with `x∘y = y·x`.
    pub fn opposite_trivial(g: &FiniteGroup) -> Self {
        SkewBrace {
            name: format!("opposite({})", g.name()),
            add: g.clone(),
            circ: opposite(g).with_name(format!("{}^op", g.name())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.add.elements()
    }

    pub fn add(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    pub fn label(&self, x: usize) -> &str {
        self.add.label(x)
    }

    /// `λ_a(b) = a⁻¹·(a∘b)`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.add.mul(self.add.inv(a), self.circ.mul(a, b))
    }

    /// `λ_a⁻¹(b) = a^{∘(−1)}∘(a·b)`.
    #[inline]
    pub fn lambda_inv(&self, a: usize, b: usize) -> usize {
        self.circ.mul(self.circ.inv(a), self.add.mul(a, b))
    }

    /// `g⋆h = g⁻¹·(g∘h)·h⁻¹`.
    #[inline]
    pub fn star(&self, g: usize, h: usize) -> usize {
        self.add.mul(self.lambda(g, h), self.add.inv(h))
    }

    /// Both tables agree entry for entry.
    pub fn same_tables(&self, other: &SkewBrace) -> bool {
        self.add.flat_table() == other.add.flat_table() && self.circ.flat_table() == other.circ.flat_table()
    }

    pub fn summary(&self) -> BraceSummary {
        BraceSummary {
            name: self.name.clone(),
            order: self.order(),
            additive_abelian: self.add.is_abelian(),
            multiplicative_abelian: self.circ.is_abelian(),
            kind: verify::brace_kind(&self.add, &self.circ),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BraceSummary {
    pub name: String,
    pub order: usize,
    pub additive_abelian: bool,
    pub multiplicative_abelian: bool,
    pub kind: BraceKind,
}
