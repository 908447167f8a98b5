use std::collections::HashMap;

use super::{automorphisms, FiniteGroup, GroupMap, Subgroup};
use crate::bounds::Bounds;
use crate::error::{check_bound, Result};

/// `Hol(G) = Aut(G) ⋉ G` with product `(f,a)(g,b) = (fg, a·f(b))`.
///
/// Element `(f, a)` is stored at index `f·|G| + a`, where `f` indexes the
/// sorted automorphism list (so the identity automorphism is index 0).
#[derive(Debug, Clone)]
pub struct HolomorphGroup {
    pub group: FiniteGroup,
    pub base: FiniteGroup,
    pub auts: Vec<GroupMap>,
}

impl HolomorphGroup {
    pub fn base_order(&self) -> usize {
        self.base.order()
    }

    pub fn encode(&self, f: usize, a: usize) -> usize {
        f * self.base.order() + a
    }

    pub fn decode(&self, x: usize) -> (usize, usize) {
        (x / self.base.order(), x % self.base.order())
    }

    /// `(f, a)·b = a·f(b)`.
    pub fn act(&self, x: usize, b: usize) -> usize {
        let (f, a) = self.decode(x);
        self.base.mul(a, self.auts[f].apply(b))
    }

    /// Index of `f` in the automorphism list, if it is one.
    pub fn aut_index(&self, f: &GroupMap) -> Option<usize> {
        self.auts.binary_search(f).ok()
    }

    /// Whether `h` acts freely and transitively on the base group.
    pub fn is_regular(&self, h: &Subgroup) -> bool {
        if h.order() != self.base.order() {
            return false;
        }
        let mut hit = vec![false; self.base.order()];
        h.members().iter().all(|&x| {
            let a = self.act(x, 0);
            !std::mem::replace(&mut hit[a], true)
        })
    }
}

pub fn holomorph(g: &FiniteGroup, bounds: &Bounds) -> Result<HolomorphGroup> {
    let auts = automorphisms(g, bounds.automorphisms)?;
    let n = g.order();
    let m = auts.len();
    check_bound("holomorph", m * n, bounds.holomorph)?;
    let index: HashMap<&GroupMap, usize> = auts.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let comp: Vec<usize> = (0..m * m).map(|k| index[&auts[k / m].compose(&auts[k % m])]).collect();
    let mut table = Vec::with_capacity(m * n * m * n);
    for f in 0..m {
        for a in 0..n {
            for h in 0..m {
                for b in 0..n {
                    table.push(comp[f * m + h] * n + g.mul(a, auts[f].apply(b)));
                }
            }
        }
    }
    let labels = (0..m * n).map(|x| format!("(f{},{})", x / n, g.label(x % n))).collect();
    let group = FiniteGroup::from_flat_trusted(format!("Hol({})", g.name()), m * n, table, labels);
    Ok(HolomorphGroup { group, base: g.clone(), auts })
}

/// Every regular subgroup of `Hol(G)`, sorted by member list.
///
/// Depth-first: the next element added always covers the least base element
/// not yet reached by `x ↦ x·e`. A regular subgroup has exactly one member
/// over each base element, so every regular subgroup is reached by exactly
/// one branch and no deduplication is needed. Closures that put two members
/// over one base element are abandoned as soon as the collision appears.
pub fn regular_subgroups(g: &FiniteGroup, bounds: &Bounds) -> Result<(HolomorphGroup, Vec<Subgroup>)> {
    check_bound("regular subgroup search", g.order(), bounds.regular_search)?;
    let hol = holomorph(g, bounds)?;
    let mut out = Vec::new();
    let mut gens = Vec::new();
    search(&hol, &mut gens, vec![0], &mut out);
    out.sort();
    Ok((hol, out))
}

fn search(hol: &HolomorphGroup, gens: &mut Vec<usize>, members: Vec<usize>, out: &mut Vec<Subgroup>) {
    let n = hol.base_order();
    if members.len() == n {
        let mut m = members;
        m.sort_unstable();
        out.push(Subgroup::from_sorted_unchecked(hol.group.order(), m));
        return;
    }
    let mut covered = vec![false; n];
    for &x in &members {
        covered[hol.act(x, 0)] = true;
    }
    let a = covered.iter().position(|&c| !c).expect("fewer members than base elements");
    for f in 0..hol.auts.len() {
        gens.push(hol.encode(f, a));
        if let Some(closed) = closure_if_injective(hol, gens) {
            search(hol, gens, closed, out);
        }
        gens.pop();
    }
}

/// Closure of `gens`, or `None` once two members project to one base element.
fn closure_if_injective(hol: &HolomorphGroup, gens: &[usize]) -> Option<Vec<usize>> {
    let n = hol.base_order();
    let mut over = vec![usize::MAX; n];
    over[0] = 0;
    let mut members = vec![0];
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for &s in gens {
            let y = hol.group.mul(x, s);
            let a = hol.act(y, 0);
            match over[a] {
                usize::MAX => {
                    over[a] = y;
                    members.push(y);
                }
                z if z == y => {}
                _ => return None,
            }
        }
        i += 1;
    }
    Some(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, subgroups, symmetric};

    fn oracle(g: &FiniteGroup) -> Vec<Subgroup> {
        let hol = holomorph(g, &Bounds::default()).unwrap();
        let mut v: Vec<Subgroup> =
            subgroups(&hol.group, 400).unwrap().into_iter().filter(|h| hol.is_regular(h)).collect();
        v.sort();
        v
    }

    #[test]
    fn holomorph_orders() {
        let b = Bounds::default();
        assert_eq!(holomorph(&cyclic(2).unwrap(), &b).unwrap().group.order(), 2);
        assert_eq!(holomorph(&cyclic(3).unwrap(), &b).unwrap().group.order(), 6);
        assert_eq!(holomorph(&symmetric(3).unwrap(), &b).unwrap().group.order(), 36);
    }

    #[test]
    fn holomorph_product_formula() {
        let g = symmetric(3).unwrap();
        let hol = holomorph(&g, &Bounds::default()).unwrap();
        for x in hol.group.elements() {
            for y in hol.group.elements() {
                let (f, a) = hol.decode(x);
                let (h, b) = hol.decode(y);
                let fh = hol.aut_index(&hol.auts[f].compose(&hol.auts[h])).unwrap();
                let expect = hol.encode(fh, g.mul(a, hol.auts[f].apply(b)));
                assert_eq!(hol.group.mul(x, y), expect);
                // The product acts on the base group.
                for c in g.elements() {
                    assert_eq!(hol.act(hol.group.mul(x, y), c), hol.act(x, hol.act(y, c)));
                }
            }
        }
    }

    #[test]
    fn regular_subgroups_match_subgroup_scan() {
        let b = Bounds::default();
        for g in [
            cyclic(2).unwrap(),
            cyclic(3).unwrap(),
            cyclic(4).unwrap(),
            direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()),
            symmetric(3).unwrap(),
        ] {
            let (_, found) = regular_subgroups(&g, &b).unwrap();
            assert_eq!(found, oracle(&g), "{}", g.name());
        }
    }

    #[test]
    fn small_counts() {
        let b = Bounds::default();
        assert_eq!(regular_subgroups(&cyclic(2).unwrap(), &b).unwrap().1.len(), 1);
        let (hol, c3) = regular_subgroups(&cyclic(3).unwrap(), &b).unwrap();
        let translations = Subgroup::from_sorted_unchecked(6, vec![0, 1, 2]);
        assert!(c3.contains(&translations));
        assert!(c3.iter().all(|h| hol.is_regular(h)));
    }

    #[test]
    fn s3_regular_subgroup_count() {
        let (_, found) = regular_subgroups(&symmetric(3).unwrap(), &Bounds::default()).unwrap();
        assert_eq!(found.len(), 8);
    }
}
