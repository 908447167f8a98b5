use serde::Serialize;

use super::{brace_from_rb, verify::right_axiom_witness, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{is_homomorphism, GroupMap};
use crate::report::{Check, Report};
use crate::rota_baxter::RbOperator;

/// The maps `λ_a`, one per element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaMap {
    maps: Vec<GroupMap>,
}

impl LambdaMap {
    pub fn of(brace: &SkewBrace) -> Self {
        let n = brace.order();
        LambdaMap { maps: (0..n).map(|a| GroupMap::from_fn(n, |b| brace.lambda(a, b))).collect() }
    }

    pub fn get(&self, a: usize) -> &GroupMap {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[GroupMap] {
        &self.maps
    }

    /// Every `λ_a` is the identity.
    pub fn is_trivial(&self) -> bool {
        self.maps.iter().all(|m| m.images().iter().enumerate().all(|(i, &y)| i == y))
    }
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| bad(x, y)).map(|(x, y)| vec![x, y])
}

/// The λ tables with their defining properties checked. `rb` is the operator
/// the brace came from, if any.
pub fn lambda_analysis(brace: &SkewBrace, rb: Option<&RbOperator>) -> (LambdaMap, Report) {
    let lam = LambdaMap::of(brace);
    let (add, circ) = (brace.add(), brace.circ());
    let n = brace.order();
    let mut r = Report::new(format!("λ map of {}", brace.name()));
    let bad_aut = (0..n).find(|&a| {
        let m = lam.get(a);
        !m.is_bijective() || !is_homomorphism(add, add, m)
    });
    r.push(Check::from_witness("automorphism", bad_aut.map(|a| vec![a])));
    r.push(Check::from_witness(
        "homomorphism_from_circ",
        first_pair(n, |a, b| lam.get(circ.mul(a, b)) != &lam.get(a).compose(lam.get(b))),
    ));
    r.push(Check::from_witness(
        "inverse_formula",
        first_pair(n, |a, b| lam.get(a).apply(brace.lambda_inv(a, b)) != b),
    ));
    if let Some(b) = rb {
        let g = b.group();
        r.push(Check::from_witness(
            "conjugation_by_b",
            first_pair(n, |a, x| {
                let ba = b.apply(a);
                lam.get(a).apply(x) != g.product(&[ba, x, g.inv(ba)])
            }),
        ));
    }
    r.set("trivial", lam.is_trivial());
    (lam, r)
}

/// `λ_{a·c} = λ_a λ_c` for all `a, c`.
pub fn is_lambda_homomorphic(brace: &SkewBrace) -> bool {
    let lam = LambdaMap::of(brace);
    let add = brace.add();
    first_pair(brace.order(), |a, c| lam.get(add.mul(a, c)) != &lam.get(a).compose(lam.get(c))).is_none()
}

/// λ-homomorphic flag, the containment `{b⁻¹λ_a(b)} ⊆ ker λ`, and, for an
/// operator, the criterion `B(ac)⁻¹B(a)B(c) ∈ Z(G)` checked against the flag.
pub fn lambda_homomorphic_report(brace: &SkewBrace, rb: Option<&RbOperator>) -> Report {
    let lam = LambdaMap::of(brace);
    let add = brace.add();
    let n = brace.order();
    let homomorphic = is_lambda_homomorphic(brace);
    let kernel: Vec<bool> = (0..n).map(|a| lam.get(a) == &GroupMap::identity(n)).collect();
    let containment = first_pair(n, |a, b| !kernel[add.mul(add.inv(b), lam.get(a).apply(b))]);
    let mut r = Report::new(format!("λ-homomorphic analysis of {}", brace.name()));
    r.set("lambda_homomorphic", homomorphic);
    r.set("commutator_in_kernel", containment.is_none());
    // A brace always gives a subgroup {(λ_a, a)}, so a homomorphic λ forces
    // the containment.
    r.push(Check::flag("homomorphic_implies_containment", !homomorphic || containment.is_none()));
    if let Some(b) = rb {
        let g = b.group();
        let center = g.center();
        let crit = first_pair(n, |a, c| {
            let z = g.product(&[g.inv(b.apply(g.mul(a, c))), b.apply(a), b.apply(c)]);
            !center.contains(z)
        });
        r.set("center_criterion", crit.is_none());
        r.push(Check::flag("center_criterion_agrees", crit.is_none() == homomorphic));
    }
    r
}

/// Right brace axiom of `G(B)` against the cocycle law
/// `ψ_{c⁻¹}(ab) = ψ_{c⁻¹}(a)^b·ψ_{c⁻¹}(b)` with `ψ_g(x) = [B(x)⁻¹, g]`.
pub fn two_sided_cocycle_check(b: &RbOperator) -> Result<Report> {
    let brace = brace_from_rb(b)?;
    let g = b.group();
    let n = g.order();
    let psi = |gg: usize, x: usize| g.comm(g.inv(b.apply(x)), gg);
    let two_sided = right_axiom_witness(brace.add(), brace.circ());
    let mut cocycle = None;
    'outer: for c in 0..n {
        let ci = g.inv(c);
        for x in 0..n {
            for y in 0..n {
                let lhs = psi(ci, g.mul(x, y));
                let rhs = g.mul(g.conj(psi(ci, x), y), psi(ci, y));
                if lhs != rhs {
                    cocycle = Some(vec![x, y, c]);
                    break 'outer;
                }
            }
        }
    }
    for x in 0..n {
        for h in 0..n {
            if psi(h, x) != brace.star(x, g.inv(h)) {
                return Err(Error::internal(format!("ψ disagrees with the star product at ({x}, {h})")));
            }
        }
    }
    let mut r = Report::new(format!("two-sided test for an operator on {}", g.name()));
    r.set("two_sided", two_sided.is_none());
    r.set("cocycle_law", cocycle.is_none());
    if let Some(w) = &two_sided {
        r.set("right_axiom_witness", w);
    }
    if let Some(w) = &cocycle {
        r.set("cocycle_witness", w);
    }
    r.push(Check::flag("two_sided_iff_cocycle", two_sided.is_none() == cocycle.is_none()));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bounds::Bounds;
    use crate::group::{cyclic, dihedral, direct_product, symmetric, FiniteGroup};
    use crate::rota_baxter::enumerate_rb_operators;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(symmetric(3).unwrap())
    }

    #[test]
    fn trivial_brace_has_identity_lambda() {
        let br = SkewBrace::trivial(&s3());
        let (lam, r) = lambda_analysis(&br, None);
        assert!(lam.is_trivial());
        assert!(r.passed());
        assert!(is_lambda_homomorphic(&br));
    }

    #[test]
    fn opposite_lambda_is_conjugation() {
        let g = s3();
        let br = SkewBrace::opposite_trivial(&g);
        let lam = LambdaMap::of(&br);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(lam.get(a).apply(b), g.conj(b, a));
            }
        }
    }

    #[test]
    fn rb_braces_pass_analysis() {
        for g in [symmetric(3).unwrap(), dihedral(4).unwrap()] {
            let g = Arc::new(g);
            for b in enumerate_rb_operators(&g, &Bounds::default()).unwrap() {
                let br = brace_from_rb(&b).unwrap();
                assert!(lambda_analysis(&br, Some(&b)).1.passed());
                assert!(lambda_homomorphic_report(&br, Some(&b)).passed());
                assert!(two_sided_cocycle_check(&b).unwrap().passed());
            }
        }
    }

    #[test]
    fn zero_operator_is_homomorphic_and_two_sided() {
        let g = Arc::new(direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()));
        let b = RbOperator::zero(g);
        assert!(is_lambda_homomorphic(&brace_from_rb(&b).unwrap()));
        let r = two_sided_cocycle_check(&b).unwrap();
        assert_eq!(r.data["two_sided"], true);
        assert_eq!(r.data["cocycle_law"], true);
    }

    #[test]
    fn inversion_on_s3_flags_agree() {
        let r = two_sided_cocycle_check(&RbOperator::inversion(s3())).unwrap();
        assert!(r.passed());
    }
}
