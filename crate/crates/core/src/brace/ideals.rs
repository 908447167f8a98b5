//! Ideals and invariant subsets of a brace.

use super::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::rota_baxter::RbOperator;

fn subset_of(brace: &SkewBrace, keep: impl Fn(usize) -> bool) -> Subgroup {
    let members: Vec<usize> = brace.elements().filter(|&x| keep(x)).collect();
    Subgroup::from_members(brace.add(), &members).expect("invariant subset is an additive subgroup")
}

/// `{a ∈ Z(G,·) : a∘b = a·b for all b}`.
pub fn socle(brace: &SkewBrace) -> Subgroup {
    let center = brace.add().center();
    subset_of(brace, |a| {
        center.contains(a) && brace.elements().all(|b| brace.circ().mul(a, b) == brace.add().mul(a, b))
    })
}

/// `{c ∈ Z(G,·) : g·c = g∘c for all g}`.
pub fn left_center(brace: &SkewBrace) -> Subgroup {
    let center = brace.add().center();
    subset_of(brace, |c| {
        center.contains(c) && brace.elements().all(|g| brace.circ().mul(g, c) == brace.add().mul(g, c))
    })
}

/// `Z_l ∩ Soc`.
pub fn annihilator(brace: &SkewBrace) -> Subgroup {
    left_center(brace).intersection(&socle(brace))
}

/// Members of `set` form a subgroup of `g`.
fn is_subgroup(g: &FiniteGroup, set: &[usize]) -> bool {
    Subgroup::from_members(g, set).is_ok()
}

fn sorted_set(set: &[usize]) -> Vec<usize> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn lambda_invariant(brace: &SkewBrace, set: &[usize]) -> bool {
    let s = sorted_set(set);
    brace.elements().all(|a| s.iter().all(|&i| s.binary_search(&brace.lambda(a, i)).is_ok()))
}

fn normal_in(g: &FiniteGroup, set: &[usize]) -> bool {
    Subgroup::from_members(g, set).is_ok_and(|s| s.is_normal(g))
}

fn in_range(brace: &SkewBrace, set: &[usize]) -> bool {
    !set.is_empty() && set.iter().all(|&x| x < brace.order())
}

/// `λ_a(I) ⊆ I`, and `I` normal in both `(G,·)` and `(G,∘)`.
pub fn is_ideal(brace: &SkewBrace, set: &[usize]) -> bool {
    in_range(brace, set)
        && lambda_invariant(brace, set)
        && normal_in(brace.add(), set)
        && normal_in(brace.circ(), set)
}

/// `λ_a(I) ⊆ I` and `I` a subgroup of `(G,·)`.
pub fn is_left_ideal(brace: &SkewBrace, set: &[usize]) -> bool {
    in_range(brace, set) && lambda_invariant(brace, set) && is_subgroup(brace.add(), set)
}

/// `λ_a(I) ⊆ I` and `I` normal in `(G,·)`.
pub fn is_strong_left_ideal(brace: &SkewBrace, set: &[usize]) -> bool {
    in_range(brace, set) && lambda_invariant(brace, set) && normal_in(brace.add(), set)
}

/// For `G(B)`: `I` is normal in both groups.
pub fn rb_ideal_criterion(brace: &SkewBrace, set: &[usize]) -> bool {
    in_range(brace, set) && normal_in(brace.add(), set) && normal_in(brace.circ(), set)
}

/// For `G(B)`: `I` is a subgroup of `(G,·)` normalized by `Im(B)`.
pub fn rb_left_ideal_criterion(b: &RbOperator, set: &[usize]) -> bool {
    let g = b.group();
    if set.is_empty() || set.iter().any(|&x| x >= g.order()) || !is_subgroup(g, set) {
        return false;
    }
    let s = sorted_set(set);
    b.map()
        .image_set()
        .iter()
        .all(|&y| s.iter().all(|&i| s.binary_search(&g.product(&[y, i, g.inv(y)])).is_ok()))
}

/// `Z(G,·)` for `G(B)`.
pub fn rb_left_center(b: &RbOperator) -> Subgroup {
    b.group().center()
}

/// `Z(G,·) ∩ B⁻¹[Z(G,·)]`.
pub fn rb_socle(b: &RbOperator) -> Subgroup {
    let g = b.group();
    let z = g.center();
    let members: Vec<usize> = g.elements().filter(|&a| z.contains(a) && z.contains(b.apply(a))).collect();
    Subgroup::from_members(g, &members).expect("intersection of subgroups")
}

/// The quotient brace `G/I`; elements are cosets labelled by their least member.
pub fn quotient_brace(brace: &SkewBrace, set: &[usize]) -> Result<SkewBrace> {
    if !is_ideal(brace, set) {
        return Err(Error::precondition("quotient by a subset that is not an ideal"));
    }
    let i = Subgroup::from_members(brace.add(), set)?;
    let qa = i.quotient(brace.add())?;
    let m = qa.representatives.len();
    let table = (0..m * m)
        .map(|k| qa.coset_of[brace.circ().mul(qa.representatives[k / m], qa.representatives[k % m])])
        .collect();
    let circ = FiniteGroup::from_flat(format!("{}/I∘", brace.name()), m, table, qa.group.labels().to_vec())
        .map_err(|e| Error::internal(format!("quotient circle product is not a group: {e}")))?;
    SkewBrace::guaranteed(format!("{}/I", brace.name()), qa.group, circ)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bounds::Bounds;
    use crate::brace::{brace_from_rb, enumerate_braces, semidirect_brace};
    use crate::group::{cyclic, dihedral, subgroups, symmetric, GroupMap};
    use crate::rota_baxter::enumerate_rb_operators;

    #[test]
    fn trivial_abelian_brace_invariants_are_everything() {
        let br = SkewBrace::trivial(&cyclic(6).unwrap());
        assert!(socle(&br).is_whole());
        assert!(left_center(&br).is_whole());
        assert!(annihilator(&br).is_whole());
    }

    #[test]
    fn rb_formulas_match_definitions() {
        for g in [symmetric(3).unwrap(), dihedral(4).unwrap(), cyclic(4).unwrap()] {
            let g = Arc::new(g);
            let subs = subgroups(&g, 24).unwrap();
            for b in enumerate_rb_operators(&g, &Bounds::default()).unwrap() {
                let br = brace_from_rb(&b).unwrap();
                assert_eq!(socle(&br), rb_socle(&b));
                assert_eq!(left_center(&br), rb_left_center(&b));
                for s in &subs {
                    assert_eq!(is_ideal(&br, s.members()), rb_ideal_criterion(&br, s.members()));
                    assert_eq!(is_left_ideal(&br, s.members()), rb_left_ideal_criterion(&b, s.members()));
                }
            }
        }
    }

    #[test]
    fn colazzo_left_center() {
        let a = cyclic(3).unwrap();
        let b = cyclic(2).unwrap();
        let inv = GroupMap::from_fn(3, |x| a.inv(x));
        let br = semidirect_brace(&a, &b, &[GroupMap::identity(3), inv]).unwrap();
        let zl = left_center(&br);
        // {e} ⋊ B is the pairs (0, b), indices 0 and 1.
        assert_eq!(zl.members(), &[0, 1]);
        assert!(!zl.is_normal(br.circ()));
        assert!(!is_ideal(&br, zl.members()));
        assert!(is_strong_left_ideal(&br, zl.members()));
    }

    #[test]
    fn quotient_of_s3_braces() {
        for br in enumerate_braces(&symmetric(3).unwrap(), &Bounds::default()).unwrap() {
            for s in subgroups(br.add(), 24).unwrap() {
                let q = quotient_brace(&br, s.members());
                assert_eq!(q.is_ok(), is_ideal(&br, s.members()));
                if let Ok(q) = q {
                    assert_eq!(q.order() * s.order(), 6);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_subsets() {
        let br = SkewBrace::trivial(&symmetric(3).unwrap());
        assert!(!is_left_ideal(&br, &[]));
        assert!(!is_left_ideal(&br, &[0, 9]));
        assert!(quotient_brace(&br, &[0, 1]).is_err() || is_ideal(&br, &[0, 1]));
    }
}
