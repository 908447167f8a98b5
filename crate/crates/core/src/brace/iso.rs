use std::ops::ControlFlow;

use super::SkewBrace;
use crate::group::{for_each_homomorphism, GroupMap, HomSearch};

/// A bijection preserving both products, searched among additive isomorphisms.
pub fn brace_isomorphic(a: &SkewBrace, b: &SkewBrace) -> Option<GroupMap> {
    if a.order() != b.order() || a.add().is_abelian() != b.add().is_abelian() {
        return None;
    }
    if a.circ().is_abelian() != b.circ().is_abelian() {
        return None;
    }
    let n = a.order();
    for_each_homomorphism(a.add(), b.add(), HomSearch::Bijective, |f| {
        let preserves = (0..n)
            .all(|x| (0..n).all(|y| f.apply(a.circ().mul(x, y)) == b.circ().mul(f.apply(x), f.apply(y))));
        if preserves {
            ControlFlow::Break(f)
        } else {
            ControlFlow::Continue(())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;

    #[test]
    fn relabelled_brace_is_isomorphic() {
        let g = symmetric(3).unwrap();
        let br = SkewBrace::opposite_trivial(&g);
        let perm = [0, 2, 1, 5, 4, 3];
        let add = g.relabel(&perm).unwrap();
        let circ = br.circ().relabel(&perm).unwrap();
        let other = SkewBrace::new("r", add, circ).unwrap();
        let f = brace_isomorphic(&br, &other).unwrap();
        assert!(f.is_bijective());
    }

    #[test]
    fn trivial_and_opposite_differ() {
        let g = symmetric(3).unwrap();
        assert!(brace_isomorphic(&SkewBrace::trivial(&g), &SkewBrace::opposite_trivial(&g)).is_none());
    }
}
