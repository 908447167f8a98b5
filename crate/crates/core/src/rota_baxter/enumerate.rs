//! Exhaustive search for Rota–Baxter operators.

use std::sync::Arc;

use rayon::prelude::*;

use super::{is_rb_operator, rb_argument, RbOperator, Weight};
use crate::bounds::Bounds;
use crate::error::{check_bound, Result};
use crate::group::{FiniteGroup, GroupMap};

const UNSET: usize = usize::MAX;

/// Backtracking state. Images are assigned in element-index order; every
/// assignment is checked against all assigned pairs, and a pair whose
/// right-hand argument is still unassigned forces that image.
#[derive(Clone)]
struct Search<'g> {
    g: &'g FiniteGroup,
    weight: Weight,
    img: Vec<usize>,
    trail: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g FiniteGroup, weight: Weight) -> Self {
        let mut s = Search { g, weight, img: vec![UNSET; g.order()], trail: Vec::with_capacity(g.order()) };
        let ok = s.assign(0, 0);
        debug_assert!(ok, "B(e) = e is always consistent");
        s
    }

    fn pair(&mut self, a: usize, b: usize) -> bool {
        let ba = self.img[a];
        let target = self.g.mul(ba, self.img[b]);
        let arg = rb_argument(self.g, self.weight, a, ba, b);
        match self.img[arg] {
            UNSET => {
                self.img[arg] = target;
                self.trail.push(arg);
                true
            }
            v => v == target,
        }
    }

    /// Assign `B(x) = v` and propagate. On `false` the caller must undo.
    fn assign(&mut self, x: usize, v: usize) -> bool {
        self.img[x] = v;
        self.trail.push(x);
        let mut q = self.trail.len() - 1;
        while q < self.trail.len() {
            let x = self.trail[q];
            q += 1;
            let mut j = 0;
            while j < self.trail.len() {
                let a = self.trail[j];
                j += 1;
                if !self.pair(x, a) || !self.pair(a, x) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let x = self.trail.pop().unwrap();
            self.img[x] = UNSET;
        }
    }

    fn run(&mut self, out: &mut Vec<GroupMap>) {
        let Some(x) = self.img.iter().position(|&v| v == UNSET) else {
            out.push(GroupMap::new(self.img.clone()));
            return;
        };
        for v in self.g.elements() {
            let len = self.trail.len();
            if self.assign(x, v) {
                self.run(out);
            }
            self.undo(len);
        }
    }
}

/// All operators of the given weight as maps, sorted by image array.
///
/// The search is split on the image of the first non-identity element and
/// the branches run in parallel; the merged result does not depend on
/// scheduling.
pub fn enumerate_rb_maps(g: &FiniteGroup, weight: Weight, bound: usize) -> Result<Vec<GroupMap>> {
    check_bound("Rota-Baxter enumeration", g.order(), bound)?;
    let root = Search::new(g, weight);
    if g.order() == 1 {
        return Ok(vec![GroupMap::new(vec![0])]);
    }
    let branches: Vec<Vec<GroupMap>> = g
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|v| {
            let mut s = root.clone();
            let mut out = Vec::new();
            if s.img[1] == UNSET {
                if s.assign(1, v) {
                    s.run(&mut out);
                }
            } else if v == 0 {
                s.run(&mut out);
            }
            out
        })
        .collect();
    let mut all: Vec<GroupMap> = branches.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    Ok(all)
}

/// All weight 1 operators on `g`.
pub fn enumerate_rb_operators(g: &Arc<FiniteGroup>, bounds: &Bounds) -> Result<Vec<RbOperator>> {
    let maps = enumerate_rb_maps(g, Weight::One, bounds.rb_enumeration)?;
    Ok(maps.into_iter().map(|m| RbOperator::trusted(g.clone(), m, Weight::One)).collect())
}

/// Every map fixing the identity, filtered by the defining identity. Only
/// for groups of order at most 6; this is the oracle for the search above.
pub fn enumerate_rb_brute_force(g: &FiniteGroup, weight: Weight) -> Vec<GroupMap> {
    let n = g.order();
    assert!(n <= 6, "brute force is limited to order 6");
    let mut img = vec![0; n];
    let mut out = Vec::new();
    loop {
        let m = GroupMap::new(img.clone());
        if is_rb_operator(g, &m, weight) {
            out.push(m);
        }
        // Odometer over positions 1..n.
        let mut k = n;
        loop {
            if k == 1 {
                return out;
            }
            k -= 1;
            img[k] += 1;
            if img[k] < n {
                break;
            }
            img[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, endomorphisms, quaternion8, symmetric};

    #[test]
    fn search_matches_brute_force() {
        for g in [
            cyclic(1).unwrap(),
            cyclic(2).unwrap(),
            cyclic(4).unwrap(),
            cyclic(5).unwrap(),
            cyclic(6).unwrap(),
            direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()),
            symmetric(3).unwrap(),
        ] {
            for w in [Weight::One, Weight::MinusOne] {
                assert_eq!(
                    enumerate_rb_maps(&g, w, 12).unwrap(),
                    enumerate_rb_brute_force(&g, w),
                    "{} weight {w}",
                    g.name()
                );
            }
        }
    }

    #[test]
    fn abelian_counts_equal_endomorphisms() {
        let c2 = cyclic(2).unwrap();
        for g in [
            c2.clone(),
            direct_product(&c2, &c2),
            cyclic(6).unwrap(),
            cyclic(8).unwrap(),
            direct_product(&c2, &cyclic(4).unwrap()),
        ] {
            assert_eq!(enumerate_rb_maps(&g, Weight::One, 12).unwrap(), endomorphisms(&g));
        }
        assert_eq!(enumerate_rb_maps(&c2, Weight::One, 12).unwrap().len(), 2);
        assert_eq!(enumerate_rb_maps(&direct_product(&c2, &c2), Weight::One, 12).unwrap().len(), 16);
    }

    #[test]
    fn s3_has_eight_operators() {
        let ops = enumerate_rb_maps(&symmetric(3).unwrap(), Weight::One, 12).unwrap();
        assert_eq!(ops.len(), 8);
    }

    #[test]
    fn every_result_verifies() {
        for g in [dihedral(4).unwrap(), quaternion8().unwrap()] {
            let ops = enumerate_rb_maps(&g, Weight::One, 12).unwrap();
            assert!(ops.iter().all(|m| is_rb_operator(&g, m, Weight::One)));
            assert!(ops.contains(&GroupMap::constant(8, 0)));
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(enumerate_rb_maps(&symmetric(4).unwrap(), Weight::One, 12).is_err());
    }
}
