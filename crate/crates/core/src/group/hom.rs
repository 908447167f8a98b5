//! Homomorphism search by backtracking over images of a generating set.

use std::ops::ControlFlow;

use super::{FiniteGroup, GroupMap, Subgroup};
use crate::error::{check_bound, Result};

/// A greedy small generating set: repeatedly add the element whose joint
/// closure with the current set is largest (ties to the smallest index).
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial(g);
    while !current.is_whole() {
        let mut best: Option<(usize, Subgroup)> = None;
        for x in g.elements().filter(|&x| !current.contains(x)) {
            let mut cand = gens.clone();
            cand.push(x);
            let sub = Subgroup::generated(g, &cand);
            if best.as_ref().is_none_or(|(_, b)| sub.order() > b.order()) {
                best = Some((x, sub));
            }
        }
        let (x, sub) = best.expect("a proper subgroup misses some element");
        gens.push(x);
        current = sub;
    }
    gens
}

/// Spanning tree of the Cayley graph: every non-identity `x` is `parent·gens[k]`.
struct Words {
    gens: Vec<usize>,
    /// `(parent, generator slot)` in BFS order, excluding the identity.
    order: Vec<(usize, usize, usize)>,
}

impl Words {
    fn new(g: &FiniteGroup) -> Self {
        let gens = generating_set(g);
        let mut seen = vec![false; g.order()];
        seen[0] = true;
        let mut queue = vec![0];
        let mut order = Vec::new();
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                    order.push((y, x, k));
                }
            }
            i += 1;
        }
        Words { gens, order }
    }

    /// Extend generator images to a map, or `None` if it is not a homomorphism.
    fn extend(&self, src: &FiniteGroup, dst: &FiniteGroup, images: &[usize]) -> Option<GroupMap> {
        let mut phi = vec![0; src.order()];
        for &(y, x, k) in &self.order {
            phi[y] = dst.mul(phi[x], images[k]);
        }
        for x in src.elements() {
            for (k, &s) in self.gens.iter().enumerate() {
                if phi[src.mul(x, s)] != dst.mul(phi[x], images[k]) {
                    return None;
                }
            }
        }
        Some(GroupMap::new(phi))
    }
}

/// Which homomorphisms a search should visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomSearch {
    All,
    Bijective,
}

/// Visit every homomorphism `src → dst` (or every isomorphism) until the
/// visitor breaks. Visit order is not sorted.
pub fn for_each_homomorphism<B>(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    mode: HomSearch,
    mut visit: impl FnMut(GroupMap) -> ControlFlow<B>,
) -> Option<B> {
    if mode == HomSearch::Bijective && src.order() != dst.order() {
        return None;
    }
    let words = Words::new(src);
    let candidates: Vec<Vec<usize>> = words
        .gens
        .iter()
        .map(|&s| {
            let ord = src.element_order(s);
            dst.elements()
                .filter(|&y| {
                    let oy = dst.element_order(y);
                    match mode {
                        HomSearch::All => ord.is_multiple_of(oy),
                        HomSearch::Bijective => oy == ord,
                    }
                })
                .collect()
        })
        .collect();
    let mut images = vec![0; words.gens.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec<B>(
        depth: usize,
        images: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        words: &Words,
        src: &FiniteGroup,
        dst: &FiniteGroup,
        mode: HomSearch,
        visit: &mut dyn FnMut(GroupMap) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if depth == images.len() {
            if let Some(phi) = words.extend(src, dst, images) {
                if mode == HomSearch::All || phi.is_bijective() {
                    return visit(phi);
                }
            }
            return ControlFlow::Continue(());
        }
        for &y in &candidates[depth] {
            images[depth] = y;
            rec(depth + 1, images, candidates, words, src, dst, mode, visit)?;
        }
        ControlFlow::Continue(())
    }
    match rec(0, &mut images, &candidates, &words, src, dst, mode, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// All homomorphisms `src → dst`, sorted by image array.
pub fn homomorphisms(src: &FiniteGroup, dst: &FiniteGroup) -> Vec<GroupMap> {
    let mut out = Vec::new();
    for_each_homomorphism::<()>(src, dst, HomSearch::All, |phi| {
        out.push(phi);
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

pub fn endomorphisms(g: &FiniteGroup) -> Vec<GroupMap> {
    homomorphisms(g, g)
}

/// All automorphisms, sorted lexicographically by image array (so the
/// identity map comes first).
pub fn automorphisms(g: &FiniteGroup, bound: usize) -> Result<Vec<GroupMap>> {
    check_bound("automorphism search", g.order(), bound)?;
    let mut out = Vec::new();
    for_each_homomorphism::<()>(g, g, HomSearch::Bijective, |phi| {
        out.push(phi);
        ControlFlow::Continue(())
    });
    out.sort();
    Ok(out)
}

/// Automorphisms by testing every bijection fixing the identity. Only for
/// tiny groups; used as an oracle for [`automorphisms`].
pub fn automorphisms_brute_force(g: &FiniteGroup) -> Vec<GroupMap> {
    let n = g.order();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, g: &FiniteGroup, out: &mut Vec<GroupMap>) {
        if k == perm.len() {
            let m = GroupMap::new(perm.clone());
            if is_homomorphism(g, g, &m) {
                out.push(m);
            }
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, g, out);
            perm.swap(k, i);
        }
    }
    if n > 0 {
        rec(1, &mut perm, g, &mut out);
    }
    out.sort();
    out
}

pub fn is_homomorphism(src: &FiniteGroup, dst: &FiniteGroup, f: &GroupMap) -> bool {
    f.len() == src.order()
        && f.images().iter().all(|&y| y < dst.order())
        && src
            .elements()
            .all(|a| src.elements().all(|b| f.apply(src.mul(a, b)) == dst.mul(f.apply(a), f.apply(b))))
}

fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    v.sort_unstable();
    v
}

/// An isomorphism `g → h` if one exists. Cheap invariants are compared first.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupMap> {
    if g.order() != h.order()
        || g.is_abelian() != h.is_abelian()
        || g.center().order() != h.center().order()
        || order_profile(g) != order_profile(h)
    {
        return None;
    }
    for_each_homomorphism(g, h, HomSearch::Bijective, ControlFlow::Break)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, quaternion8, symmetric};

    #[test]
    fn automorphism_counts() {
        let c2 = cyclic(2).unwrap();
        assert_eq!(automorphisms(&c2, 24).unwrap().len(), 1);
        let s3 = symmetric(3).unwrap();
        assert_eq!(automorphisms(&s3, 24).unwrap().len(), 6);
        let v4 = direct_product(&c2, &c2);
        assert_eq!(automorphisms(&v4, 24).unwrap().len(), 6);
        assert_eq!(automorphisms(&quaternion8().unwrap(), 24).unwrap().len(), 24);
        assert_eq!(automorphisms(&symmetric(4).unwrap(), 24).unwrap().len(), 24);
        assert!(automorphisms(&symmetric(5).unwrap(), 24).is_err());
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for g in [
            cyclic(5).unwrap(),
            cyclic(6).unwrap(),
            symmetric(3).unwrap(),
            dihedral(4).unwrap(),
            quaternion8().unwrap(),
            direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()),
        ] {
            assert_eq!(automorphisms(&g, 24).unwrap(), automorphisms_brute_force(&g), "{}", g.name());
        }
    }

    #[test]
    fn identity_automorphism_first() {
        let g = dihedral(4).unwrap();
        assert_eq!(automorphisms(&g, 24).unwrap()[0], GroupMap::identity(8));
    }

    #[test]
    fn automorphisms_closed_under_composition_and_inverse() {
        let g = dihedral(4).unwrap();
        let auts = automorphisms(&g, 24).unwrap();
        for f in &auts {
            assert!(auts.contains(&f.inverse().unwrap()));
            for h in &auts {
                assert!(auts.contains(&f.compose(h)));
            }
        }
    }

    #[test]
    fn endomorphism_counts() {
        assert_eq!(endomorphisms(&cyclic(6).unwrap()).len(), 6);
        let c2 = cyclic(2).unwrap();
        assert_eq!(endomorphisms(&direct_product(&c2, &c2)).len(), 16);
        // S3: trivial, three onto order-2 subgroups, six automorphisms.
        assert_eq!(endomorphisms(&symmetric(3).unwrap()).len(), 10);
    }

    #[test]
    fn isomorphism_tests() {
        let c2 = cyclic(2).unwrap();
        assert!(isomorphic(&cyclic(4).unwrap(), &direct_product(&c2, &c2)).is_none());
        let c6 = cyclic(6).unwrap();
        let c2c3 = direct_product(&c2, &cyclic(3).unwrap());
        let phi = isomorphic(&c6, &c2c3).unwrap();
        assert!(is_homomorphism(&c6, &c2c3, &phi) && phi.is_bijective());
    }

    #[test]
    fn generating_sets_generate() {
        for g in [symmetric(4).unwrap(), quaternion8().unwrap(), cyclic(1).unwrap()] {
            let gens = generating_set(&g);
            assert!(Subgroup::generated(&g, &gens).is_whole());
        }
        assert_eq!(generating_set(&symmetric(4).unwrap()).len(), 2);
    }
}
