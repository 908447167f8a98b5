use serde::{Deserialize, Serialize};

use super::{RbOperator, Weight};
use crate::error::{Error, Result};
use crate::group::{is_homomorphism, GroupMap};

/// A transformation that maps operators to operators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Transform {
    /// `B̃(g) = g⁻¹B(g⁻¹)`.
    Tilde,
    /// `B^φ = φ⁻¹ ∘ B ∘ φ`.
    AutConj { phi: GroupMap },
    /// `C(g) = B(g⁻¹)`, switching between weights 1 and −1.
    WeightSwap,
}

impl Transform {
    pub fn apply(&self, b: &RbOperator) -> Result<RbOperator> {
        match self {
            Transform::Tilde => tilde(b),
            Transform::AutConj { phi } => aut_conj(b, phi),
            Transform::WeightSwap => weight_swap(b),
        }
    }
}

pub fn tilde(b: &RbOperator) -> Result<RbOperator> {
    b.require_weight_one("tilde")?;
    let g = b.group();
    let map = GroupMap::from_fn(g.order(), |x| {
        let xi = g.inv(x);
        g.mul(xi, b.apply(xi))
    });
    RbOperator::guaranteed(b.group_arc().clone(), map, Weight::One, "tilde operator")
}

pub fn aut_conj(b: &RbOperator, phi: &GroupMap) -> Result<RbOperator> {
    let g = b.group();
    if !(phi.is_bijective() && is_homomorphism(g, g, phi)) {
        return Err(Error::precondition("conjugating map is not an automorphism"));
    }
    let phi_inv = phi.inverse().expect("bijective");
    let map = phi_inv.compose(&b.map().compose(phi));
    RbOperator::guaranteed(b.group_arc().clone(), map, b.weight(), "automorphism conjugate")
}

pub fn weight_swap(b: &RbOperator) -> Result<RbOperator> {
    let g = b.group();
    let map = GroupMap::from_fn(g.order(), |x| b.apply(g.inv(x)));
    RbOperator::guaranteed(b.group_arc().clone(), map, b.weight().flipped(), "weight swap")
}
