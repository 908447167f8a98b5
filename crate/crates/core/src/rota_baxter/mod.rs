//! Rota–Baxter operators on finite groups.
//!
//! Weight 1: `B(g)B(h) = B(g·B(g)·h·B(g)⁻¹)`.
//! Weight −1: `C(g)C(h) = C(C(g)·h·C(g)⁻¹·g)`.

mod classify;
mod construct;
mod criteria;
mod derived;
mod enumerate;
mod transform;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};

pub use classify::{classify_rb_orbits, tilde_refined_count, RbOrbit};
pub use construct::{hom_to_abelian, semidirect, splitting, triangular};
pub use criteria::{direct_solution_witness, direct_solution_witness_mod_center, rb_criteria};
pub use derived::{circle_table, derived_circle_group};
pub use enumerate::{enumerate_rb_brute_force, enumerate_rb_maps, enumerate_rb_operators};
pub use transform::{aut_conj, tilde, weight_swap, Transform};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Weight {
    One,
    MinusOne,
}

impl Weight {
    pub fn value(self) -> i8 {
        match self {
            Weight::One => 1,
            Weight::MinusOne => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Weight::One => Weight::MinusOne,
            Weight::MinusOne => Weight::One,
        }
    }
}

impl TryFrom<i8> for Weight {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(Weight::One),
            -1 => Ok(Weight::MinusOne),
            _ => Err(format!("weight must be 1 or -1, got {v}")),
        }
    }
}

impl From<Weight> for i8 {
    fn from(w: Weight) -> i8 {
        w.value()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The element `B` is applied to on the right-hand side of the defining
/// identity, given `B(a)`.
#[inline]
pub(crate) fn rb_argument(g: &FiniteGroup, weight: Weight, a: usize, ba: usize, b: usize) -> usize {
    let bi = g.inv(ba);
    match weight {
        Weight::One => g.mul(g.mul(g.mul(a, ba), b), bi),
        Weight::MinusOne => g.mul(g.mul(g.mul(ba, b), bi), a),
    }
}

/// First pair `(g, h)` violating the identity of the given weight.
pub fn rb_witness(g: &FiniteGroup, map: &GroupMap, weight: Weight) -> Option<(usize, usize)> {
    if map.len() != g.order() || !map.in_range(g.order()) {
        return Some((0, 0));
    }
    for a in g.elements() {
        let ba = map.apply(a);
        for b in g.elements() {
            let lhs = g.mul(ba, map.apply(b));
            if map.apply(rb_argument(g, weight, a, ba, b)) != lhs {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_rb_operator(g: &FiniteGroup, map: &GroupMap, weight: Weight) -> bool {
    rb_witness(g, map, weight).is_none()
}

/// A verified Rota–Baxter operator together with its group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbOperator {
    group: Arc<FiniteGroup>,
    map: GroupMap,
    weight: Weight,
}

impl RbOperator {
    /// Verify `map` and wrap it. Failure is a precondition error with the
    /// offending pair.
    pub fn new(group: Arc<FiniteGroup>, map: GroupMap, weight: Weight) -> Result<Self> {
        if map.len() != group.order() || !map.in_range(group.order()) {
            return Err(Error::precondition(format!(
                "operator needs {} images in 0..{}",
                group.order(),
                group.order()
            )));
        }
        if let Some((a, b)) = rb_witness(&group, &map, weight) {
            return Err(Error::precondition(format!(
                "not a Rota-Baxter operator of weight {weight}: fails at ({}, {})",
                group.label(a),
                group.label(b)
            )));
        }
        Ok(RbOperator { group, map, weight })
    }

    pub(crate) fn trusted(group: Arc<FiniteGroup>, map: GroupMap, weight: Weight) -> Self {
        RbOperator { group, map, weight }
    }

    /// Verify an operator a theorem says is valid; failure is an internal error.
    pub(crate) fn guaranteed(
        group: Arc<FiniteGroup>,
        map: GroupMap,
        weight: Weight,
        what: &str,
    ) -> Result<Self> {
        if let Some((a, b)) = rb_witness(&group, &map, weight) {
            return Err(Error::internal(format!("{what} is not Rota-Baxter: fails at ({a}, {b})")));
        }
        Ok(RbOperator { group, map, weight })
    }

    /// `B₀(g) = e`.
    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let map = GroupMap::constant(group.order(), 0);
        RbOperator::trusted(group, map, Weight::One)
    }

    /// `B₋₁(g) = g⁻¹`.
    pub fn inversion(group: Arc<FiniteGroup>) -> Self {
        let map = GroupMap::from_fn(group.order(), |x| group.inv(x));
        RbOperator::trusted(group, map, Weight::One)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn map(&self) -> &GroupMap {
        &self.map
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }

    pub fn is_bijective(&self) -> bool {
        self.map.is_bijective()
    }

    /// Image labels in element order.
    pub fn image_labels(&self) -> Vec<String> {
        self.map.images().iter().map(|&y| self.group.label(y).to_owned()).collect()
    }

    pub(crate) fn require_weight_one(&self, what: &str) -> Result<()> {
        if self.weight != Weight::One {
            return Err(Error::precondition(format!("{what} needs a weight 1 operator")));
        }
        Ok(())
    }
}
