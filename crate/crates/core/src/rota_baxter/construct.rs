//! Operators built from subgroup decompositions and homomorphisms.

use std::sync::Arc;

use super::{RbOperator, Weight};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap, Subgroup};

fn fail(msg: impl Into<String>) -> Error {
    Error::precondition(msg)
}

/// For each `x`, the unique factors `(a₁, …, a_k)` with `x = a₁⋯a_k`, `aᵢ ∈ parts[i]`.
fn unique_factors(g: &FiniteGroup, parts: &[&Subgroup]) -> Result<Vec<Vec<usize>>> {
    let size: usize = parts.iter().map(|p| p.order()).product();
    if size != g.order() {
        return Err(fail(format!("factor orders multiply to {size}, group has order {}", g.order())));
    }
    let mut out: Vec<Option<Vec<usize>>> = vec![None; g.order()];
    let mut stack = vec![(0usize, 0usize, Vec::new())];
    while let Some((depth, acc, word)) = stack.pop() {
        if depth == parts.len() {
            if out[acc].replace(word).is_some() {
                return Err(fail(format!("element {} has two factorizations", g.label(acc))));
            }
            continue;
        }
        for &a in parts[depth].members() {
            let mut w = word.clone();
            w.push(a);
            stack.push((depth + 1, g.mul(acc, a), w));
        }
    }
    Ok(out.into_iter().map(|w| w.expect("counted")).collect())
}

fn check_subgroup_of(g: &FiniteGroup, s: &Subgroup, name: &str) -> Result<()> {
    if s.parent_order() != g.order() {
        return Err(fail(format!("{name} is a subgroup of a different group")));
    }
    Ok(())
}

fn commute(g: &FiniteGroup, xs: &[usize], ys: &[usize]) -> Option<(usize, usize)> {
    xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).find(|&(x, y)| g.mul(x, y) != g.mul(y, x))
}

/// `c` restricted to `l` must map into `l` and satisfy the weight 1 identity there.
fn check_rb_on(g: &FiniteGroup, l: &Subgroup, c: &GroupMap) -> Result<()> {
    if c.len() != g.order() || !c.in_range(g.order()) {
        return Err(fail("operator on the factor has the wrong length"));
    }
    for &a in l.members() {
        if !l.contains(c.apply(a)) {
            return Err(fail(format!("C({}) leaves the factor", g.label(a))));
        }
    }
    for &a in l.members() {
        let ca = c.apply(a);
        for &b in l.members() {
            let arg = g.product(&[a, ca, b, g.inv(ca)]);
            if g.mul(ca, c.apply(b)) != c.apply(arg) {
                return Err(fail(format!(
                    "C is not Rota-Baxter on the factor: fails at ({}, {})",
                    g.label(a),
                    g.label(b)
                )));
            }
        }
    }
    Ok(())
}

/// Splitting operator of an exact factorization `G = HL`: `B(hl) = l⁻¹`.
pub fn splitting(g: &Arc<FiniteGroup>, h: &Subgroup, l: &Subgroup) -> Result<RbOperator> {
    check_subgroup_of(g, h, "H")?;
    check_subgroup_of(g, l, "L")?;
    if !h.intersection(l).is_trivial() {
        return Err(fail("H ∩ L is not trivial"));
    }
    let factors = unique_factors(g, &[h, l])?;
    let map = GroupMap::from_fn(g.order(), |x| g.inv(factors[x][1]));
    RbOperator::guaranteed(g.clone(), map, Weight::One, "splitting operator")
}

/// `B(hlm) = C(l)m⁻¹` for `G = HLM` with `[H, L] = [C(L), M] = e`.
pub fn triangular(
    g: &Arc<FiniteGroup>,
    h: &Subgroup,
    l: &Subgroup,
    m: &Subgroup,
    c: &GroupMap,
) -> Result<RbOperator> {
    for (s, name) in [(h, "H"), (l, "L"), (m, "M")] {
        check_subgroup_of(g, s, name)?;
    }
    for (a, b, name) in [(h, l, "H ∩ L"), (h, m, "H ∩ M"), (l, m, "L ∩ M")] {
        if !a.intersection(b).is_trivial() {
            return Err(fail(format!("{name} is not trivial")));
        }
    }
    if let Some((x, y)) = commute(g, h.members(), l.members()) {
        return Err(fail(format!("[H, L] ≠ e: {} and {} do not commute", g.label(x), g.label(y))));
    }
    check_rb_on(g, l, c)?;
    let cl: Vec<usize> = l.members().iter().map(|&x| c.apply(x)).collect();
    if let Some((x, y)) = commute(g, &cl, m.members()) {
        return Err(fail(format!("[C(L), M] ≠ e: {} and {} do not commute", g.label(x), g.label(y))));
    }
    let factors = unique_factors(g, &[h, l, m])?;
    let map = GroupMap::from_fn(g.order(), |x| {
        let f = &factors[x];
        g.mul(c.apply(f[1]), g.inv(f[2]))
    });
    RbOperator::guaranteed(g.clone(), map, Weight::One, "triangular operator")
}

/// `B(hl) = C(l)` for an internal semidirect product `G = H ⋊ L`, `H` normal.
pub fn semidirect(g: &Arc<FiniteGroup>, h: &Subgroup, l: &Subgroup, c: &GroupMap) -> Result<RbOperator> {
    check_subgroup_of(g, h, "H")?;
    check_subgroup_of(g, l, "L")?;
    if !h.is_normal(g) {
        return Err(fail("H is not normal"));
    }
    if !h.intersection(l).is_trivial() {
        return Err(fail("H ∩ L is not trivial"));
    }
    check_rb_on(g, l, c)?;
    let factors = unique_factors(g, &[h, l])?;
    let map = GroupMap::from_fn(g.order(), |x| c.apply(factors[x][1]));
    RbOperator::guaranteed(g.clone(), map, Weight::One, "semidirect operator")
}

/// A homomorphism or antihomomorphism with abelian image.
pub fn hom_to_abelian(g: &Arc<FiniteGroup>, f: &GroupMap) -> Result<RbOperator> {
    if f.len() != g.order() || !f.in_range(g.order()) {
        return Err(fail("map has the wrong length"));
    }
    let image = f.image_set();
    if let Some((x, y)) = commute(g, &image, &image) {
        return Err(fail(format!("image is not abelian: {} and {} do not commute", g.label(x), g.label(y))));
    }
    let hom =
        g.elements().all(|a| g.elements().all(|b| f.apply(g.mul(a, b)) == g.mul(f.apply(a), f.apply(b))));
    let anti =
        g.elements().all(|a| g.elements().all(|b| f.apply(g.mul(a, b)) == g.mul(f.apply(b), f.apply(a))));
    if !hom && !anti {
        return Err(fail("map is neither a homomorphism nor an antihomomorphism"));
    }
    RbOperator::guaranteed(g.clone(), f.clone(), Weight::One, "homomorphism to an abelian subgroup")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, exact_factorizations, semidirect_product, symmetric};

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(symmetric(3).unwrap())
    }

    fn word(g: &FiniteGroup, w: &[usize]) -> usize {
        g.coxeter_word(w).unwrap()
    }

    #[test]
    fn splitting_s2_a3_gives_printed_values() {
        let g = s3();
        let s2 = Subgroup::generated(&g, &[word(&g, &[2])]);
        let a3 = Subgroup::generated(&g, &[word(&g, &[1, 2])]);
        let b = splitting(&g, &s2, &a3).unwrap();
        let w = |x: &[usize]| word(&g, x);
        assert_eq!(b.apply(w(&[1])), w(&[1, 2]));
        assert_eq!(b.apply(w(&[2])), 0);
        assert_eq!(b.apply(w(&[1, 2])), w(&[2, 1]));
        assert_eq!(b.apply(w(&[2, 1])), w(&[1, 2]));
        assert_eq!(b.apply(w(&[1, 2, 1])), w(&[2, 1]));
    }

    #[test]
    fn splitting_trivial_factor_is_inversion() {
        let g = s3();
        let b = splitting(&g, &Subgroup::trivial(&g), &Subgroup::whole(&g)).unwrap();
        assert_eq!(b, RbOperator::inversion(g.clone()));
        let z = splitting(&g, &Subgroup::whole(&g), &Subgroup::trivial(&g)).unwrap();
        assert_eq!(z, RbOperator::zero(g));
    }

    #[test]
    fn every_exact_factorization_splits() {
        let g = Arc::new(direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap()));
        for (h, l) in exact_factorizations(&g, 24).unwrap() {
            splitting(&g, &h, &l).unwrap();
        }
    }

    #[test]
    fn splitting_rejects_overlap() {
        let g = s3();
        let s2 = Subgroup::generated(&g, &[word(&g, &[2])]);
        assert!(splitting(&g, &s2, &s2).is_err());
    }

    #[test]
    fn hom_to_abelian_gives_b2() {
        let g = s3();
        let s1 = word(&g, &[1]);
        // Sign map onto <s1>.
        let f = GroupMap::from_fn(6, |x| {
            let even = Subgroup::generated(&g, &[word(&g, &[1, 2])]);
            if even.contains(x) {
                0
            } else {
                s1
            }
        });
        let b = hom_to_abelian(&g, &f).unwrap();
        assert_eq!(b.apply(word(&g, &[2])), s1);
        assert_eq!(b.apply(word(&g, &[1, 2, 1])), s1);
        assert_eq!(b.apply(word(&g, &[2, 1])), 0);
        assert!(hom_to_abelian(&g, &GroupMap::identity(6)).is_err());
    }

    #[test]
    fn semidirect_and_triangular() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[word(&g, &[1, 2])]);
        let s1 = Subgroup::generated(&g, &[word(&g, &[1])]);
        // On L = <s1> ≅ C2, C can be trivial or inversion (= identity).
        for c in [GroupMap::constant(6, 0), GroupMap::identity(6)] {
            semidirect(&g, &a3, &s1, &c).unwrap();
        }
        assert!(semidirect(&g, &s1, &a3, &GroupMap::constant(6, 0)).is_err());
        // G = {e}·L·M with L = <s1>, M = A3 and C = 0.
        let t = triangular(&g, &Subgroup::trivial(&g), &s1, &a3, &GroupMap::constant(6, 0)).unwrap();
        let split = splitting(&g, &s1, &a3).unwrap();
        assert_eq!(t, split);
        // [C(L), M] ≠ e when C = id on <s1>.
        assert!(triangular(&g, &Subgroup::trivial(&g), &s1, &a3, &GroupMap::identity(6)).is_err());
    }

    #[test]
    fn semidirect_on_constructed_product() {
        let c3 = cyclic(3).unwrap();
        let c2 = cyclic(2).unwrap();
        let inv = GroupMap::from_fn(3, |x| c3.inv(x));
        let g = Arc::new(semidirect_product(&c3, &c2, &[GroupMap::identity(3), inv]).unwrap());
        let h = Subgroup::generated(&g, &[2]);
        let l = Subgroup::generated(&g, &[1]);
        assert_eq!(h.order(), 3);
        assert_eq!(l.order(), 2);
        semidirect(&g, &h, &l, &GroupMap::identity(6)).unwrap();
    }
}
