//! Identities in `(G, ·, B)` that characterise properties of the derived structures.

use super::{circle_table, RbOperator};
use crate::error::Result;
use crate::report::{Check, Report};

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| bad(x, y)).map(|(x, y)| vec![x, y])
}

/// First `(b, c)` violating `(B(b)⁻¹)^{B(c)} = B(b^{B(c)})`.
pub fn direct_solution_witness(b: &RbOperator) -> Option<(usize, usize)> {
    let g = b.group();
    first_pair(g.order(), |x, c| {
        let bc = b.apply(c);
        g.conj(g.inv(b.apply(x)), bc) != b.apply(g.conj(x, bc))
    })
    .map(|w| (w[0], w[1]))
}

/// First `(b, c)` violating `(B(b)⁻¹)^{B(c)⁻¹} · B(b^{B(c)⁻¹}) ∈ Z(G)`.
///
/// This is exactly the rack axiom for `x*y = B(y)·x·B(y)⁻¹`.
pub fn direct_solution_witness_mod_center(b: &RbOperator) -> Option<(usize, usize)> {
    let g = b.group();
    let center = g.center();
    first_pair(g.order(), |x, c| {
        let t = g.inv(b.apply(c));
        let z = g.mul(g.conj(g.inv(b.apply(x)), t), b.apply(g.conj(x, t)));
        !center.contains(z)
    })
    .map(|w| (w[0], w[1]))
}

/// Evaluate the identities on every pair.
pub fn rb_criteria(b: &RbOperator) -> Result<Report> {
    b.require_weight_one("criteria")?;
    let g = b.group();
    let n = g.order();
    let circ = circle_table(b);
    let mut r = Report::new(format!("criteria for an operator on {}", g.name()));
    r.push(Check::from_witness(
        "abelian_circ_identity",
        first_pair(n, |x, y| {
            let lhs = g.mul(g.comm(y, g.inv(b.apply(x))), g.comm(g.inv(b.apply(y)), x));
            lhs != g.comm(y, x)
        }),
    ));
    r.push(Check::from_witness(
        "homomorphism_from_circle",
        first_pair(n, |x, y| b.apply(circ[x * n + y]) != g.mul(b.apply(x), b.apply(y))),
    ));
    r.push(Check::from_witness(
        "direct_solution_identity",
        direct_solution_witness(b).map(|(x, y)| vec![x, y]),
    ));
    r.push(Check::from_witness(
        "direct_solution_identity_mod_center",
        direct_solution_witness_mod_center(b).map(|(x, y)| vec![x, y]),
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bounds::Bounds;
    use crate::group::{cyclic, dihedral, direct_product, symmetric, Subgroup};
    use crate::rota_baxter::{derived_circle_group, enumerate_rb_operators, splitting};

    #[test]
    fn zero_on_s3_fails_abelian_circ() {
        let g = Arc::new(symmetric(3).unwrap());
        let r = rb_criteria(&RbOperator::zero(g)).unwrap();
        assert!(!r.check("abelian_circ_identity").unwrap().passed);
        assert!(r.check("homomorphism_from_circle").unwrap().passed);
    }

    #[test]
    fn b1_satisfies_abelian_circ() {
        let g = Arc::new(symmetric(3).unwrap());
        let w = |x: &[usize]| g.coxeter_word(x).unwrap();
        let b1 = splitting(&g, &Subgroup::generated(&g, &[w(&[2])]), &Subgroup::generated(&g, &[w(&[1, 2])]))
            .unwrap();
        assert!(rb_criteria(&b1).unwrap().check("abelian_circ_identity").unwrap().passed);
    }

    #[test]
    fn zero_on_abelian_passes_everything() {
        let g = Arc::new(direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()));
        assert!(rb_criteria(&RbOperator::zero(g)).unwrap().passed());
    }

    #[test]
    fn abelian_circ_matches_derived_group() {
        for g in [symmetric(3).unwrap(), dihedral(4).unwrap(), dihedral(5).unwrap()] {
            let g = Arc::new(g);
            for b in enumerate_rb_operators(&g, &Bounds::default()).unwrap() {
                let flag = rb_criteria(&b).unwrap().check("abelian_circ_identity").unwrap().passed;
                assert_eq!(flag, derived_circle_group(&b).unwrap().is_abelian());
            }
        }
    }

    #[test]
    fn inversion_on_s3_separates_the_two_direct_identities() {
        let g = Arc::new(symmetric(3).unwrap());
        let b = RbOperator::inversion(g);
        assert!(direct_solution_witness(&b).is_some());
        assert!(direct_solution_witness_mod_center(&b).is_none());
    }
}
