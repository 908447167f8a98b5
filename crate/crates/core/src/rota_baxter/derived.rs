use super::{rb_witness, RbOperator, Weight};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};

/// Flat table of `g∘h = g·B(g)·h·B(g)⁻¹` (weight 1) or `C(g)·h·C(g)⁻¹·g` (weight −1).
pub fn circle_table(b: &RbOperator) -> Vec<usize> {
    let g = b.group();
    let n = g.order();
    let mut t = Vec::with_capacity(n * n);
    for x in g.elements() {
        let bx = b.apply(x);
        let bxi = g.inv(bx);
        for y in g.elements() {
            t.push(match b.weight() {
                Weight::One => g.product(&[x, bx, y, bxi]),
                Weight::MinusOne => g.product(&[bx, y, bxi, x]),
            });
        }
    }
    t
}

/// The derived group `(G, ∘)` of a weight 1 operator.
///
/// Also confirms that `B` is a homomorphism `(G,∘) → (G,·)` and a weight 1
/// operator on `(G,∘)`. These are theorem-backed, so failure is internal.
pub fn derived_circle_group(b: &RbOperator) -> Result<FiniteGroup> {
    b.require_weight_one("derived circle group")?;
    let g = b.group();
    let table = circle_table(b);
    let circ = FiniteGroup::from_flat(format!("{}∘", g.name()), g.order(), table, g.labels().to_vec())
        .map_err(|e| Error::internal(format!("circle product is not a group: {e}")))?;
    for x in g.elements() {
        for y in g.elements() {
            if b.apply(circ.mul(x, y)) != g.mul(b.apply(x), b.apply(y)) {
                return Err(Error::internal(format!(
                    "B is not a homomorphism from the circle group at ({x}, {y})"
                )));
            }
        }
    }
    let map = GroupMap::new(b.map().images().to_vec());
    if let Some((x, y)) = rb_witness(&circ, &map, Weight::One) {
        return Err(Error::internal(format!("B is not Rota-Baxter on the circle group at ({x}, {y})")));
    }
    Ok(circ)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bounds::Bounds;
    use crate::group::{cyclic, isomorphic, opposite, symmetric, Subgroup};
    use crate::rota_baxter::{enumerate_rb_operators, splitting};

    #[test]
    fn b1_derived_group_is_cyclic_generated_by_s1() {
        let g = Arc::new(symmetric(3).unwrap());
        let w = |x: &[usize]| g.coxeter_word(x).unwrap();
        let s2 = Subgroup::generated(&g, &[w(&[2])]);
        let a3 = Subgroup::generated(&g, &[w(&[1, 2])]);
        let b1 = splitting(&g, &s2, &a3).unwrap();
        let circ = derived_circle_group(&b1).unwrap();
        assert!(isomorphic(&circ, &cyclic(6).unwrap()).is_some());
        let s1 = w(&[1]);
        let mut p = s1;
        let expect = [w(&[1, 2]), w(&[2]), w(&[2, 1]), w(&[1, 2, 1]), 0];
        for e in expect {
            p = circ.mul(p, s1);
            assert_eq!(p, e);
        }
    }

    #[test]
    fn zero_and_inversion() {
        let g = Arc::new(symmetric(3).unwrap());
        let z = derived_circle_group(&RbOperator::zero(g.clone())).unwrap();
        assert_eq!(z.flat_table(), g.flat_table());
        let i = derived_circle_group(&RbOperator::inversion(g.clone())).unwrap();
        assert_eq!(i.flat_table(), opposite(&g).flat_table());
    }

    #[test]
    fn all_s3_derived_groups_are_groups() {
        let g = Arc::new(symmetric(3).unwrap());
        for b in enumerate_rb_operators(&g, &Bounds::default()).unwrap() {
            derived_circle_group(&b).unwrap();
        }
    }
}
