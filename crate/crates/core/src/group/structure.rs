use std::collections::BTreeSet;

use serde::Serialize;

use super::{automorphisms, FiniteGroup, Subgroup};
use crate::error::{check_bound, Result};

/// Structural flags of a group.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_metabelian: bool,
    pub center: Subgroup,
    pub automorphism_count: usize,
    pub is_complete: bool,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
}

/// Subgroup generated by all `[a, b]` with `a ∈ x`, `b ∈ y`.
fn commutator_subgroup(g: &FiniteGroup, x: &Subgroup, y: &Subgroup) -> Subgroup {
    let mut gens = BTreeSet::new();
    for &a in x.members() {
        for &b in y.members() {
            gens.insert(g.comm(a, b));
        }
    }
    Subgroup::generated(g, &gens.into_iter().collect::<Vec<_>>())
}

fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(g)];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let whole = Subgroup::whole(g);
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, &whole, last);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

/// `Z_0 = {e} ⊆ Z_1 = Z(G) ⊆ …` until it stabilises.
pub fn upper_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::trivial(g)];
    loop {
        let last = series.last().unwrap();
        let members: Vec<usize> =
            g.elements().filter(|&z| g.elements().all(|x| last.contains(g.comm(z, x)))).collect();
        let next = Subgroup::from_sorted_unchecked(g.order(), members);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn structure_report(g: &FiniteGroup) -> Result<StructureReport> {
    structure_report_bounded(g, 24)
}

pub(crate) fn structure_report_bounded(g: &FiniteGroup, bound: usize) -> Result<StructureReport> {
    let auts = automorphisms(g, bound)?;
    let derived = derived_series(g);
    let lower = lower_central_series(g);
    let center = g.center();
    let is_abelian = g.is_abelian();
    let is_solvable = derived.last().unwrap().is_trivial();
    let is_metabelian = derived.len() <= 3 && is_solvable;
    // Inn(G) ≅ G/Z(G); completeness means Z trivial and Aut = Inn.
    let inner = g.order() / center.order();
    Ok(StructureReport {
        order: g.order(),
        is_abelian,
        is_nilpotent: lower.last().unwrap().is_trivial(),
        is_solvable,
        is_metabelian,
        is_complete: center.is_trivial() && auts.len() == inner,
        automorphism_count: auts.len(),
        center,
        derived_series: derived.iter().map(Subgroup::order).collect(),
        lower_central_series: lower.iter().map(Subgroup::order).collect(),
    })
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    lower_central_series(g).last().unwrap().is_trivial()
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

pub fn is_metabelian(g: &FiniteGroup) -> bool {
    let d = derived_series(g);
    d.len() <= 3 && d.last().unwrap().is_trivial()
}

/// Every subgroup, sorted by (order, members).
pub fn subgroups(g: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    check_bound("subgroup lattice", g.order(), bound)?;
    let cyclics: BTreeSet<Subgroup> = g.elements().map(|x| Subgroup::generated(g, &[x])).collect();
    let mut all: BTreeSet<Subgroup> = cyclics.clone();
    let mut frontier: Vec<Subgroup> = cyclics.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclics {
                if c.is_subset_of(h) {
                    continue;
                }
                let mut gens = h.members().to_vec();
                gens.extend_from_slice(c.members());
                let joined = Subgroup::generated(g, &gens);
                if all.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut v: Vec<Subgroup> = all.into_iter().collect();
    v.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(v)
}

/// All ordered pairs `(H, L)` of subgroups with `HL = G` and `H ∩ L = {e}`.
pub fn exact_factorizations(g: &FiniteGroup, bound: usize) -> Result<Vec<(Subgroup, Subgroup)>> {
    let subs = subgroups(g, bound)?;
    let mut out = Vec::new();
    for h in &subs {
        for l in &subs {
            if h.order() * l.order() == g.order() && h.intersection(l).is_trivial() {
                out.push((h.clone(), l.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, dihedral, direct_product, quaternion8, symmetric};

    #[test]
    fn s3_report() {
        let r = structure_report(&symmetric(3).unwrap()).unwrap();
        assert!(!r.is_abelian && !r.is_nilpotent);
        assert!(r.is_solvable && r.is_metabelian && r.is_complete);
        assert!(r.center.is_trivial());
    }

    #[test]
    fn c6_and_q8_reports() {
        let r = structure_report(&cyclic(6).unwrap()).unwrap();
        assert!(r.is_abelian && r.is_nilpotent && !r.is_complete);
        let q = structure_report(&quaternion8().unwrap()).unwrap();
        assert!(q.is_nilpotent && !q.is_abelian);
        assert_eq!(q.center.order(), 2);
    }

    #[test]
    fn complete_groups() {
        assert!(structure_report(&symmetric(4).unwrap()).unwrap().is_complete);
        // D4 has nontrivial centre, A4 has an outer automorphism.
        assert!(!structure_report(&dihedral(4).unwrap()).unwrap().is_complete);
        assert!(!structure_report(&alternating(4).unwrap()).unwrap().is_complete);
        assert!(!structure_report(&cyclic(1).unwrap()).unwrap().is_complete || true);
    }

    #[test]
    fn a4_is_solvable_not_metabelian_free_check() {
        let r = structure_report(&alternating(4).unwrap()).unwrap();
        assert!(r.is_solvable && !r.is_nilpotent);
        assert_eq!(r.derived_series, vec![12, 4, 1]);
        let s4 = structure_report(&symmetric(4).unwrap()).unwrap();
        assert!(s4.is_solvable && !s4.is_metabelian);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroups(&symmetric(3).unwrap(), 24).unwrap().len(), 6);
        assert_eq!(subgroups(&dihedral(4).unwrap(), 24).unwrap().len(), 10);
        assert_eq!(subgroups(&quaternion8().unwrap(), 24).unwrap().len(), 6);
        assert_eq!(subgroups(&symmetric(4).unwrap(), 24).unwrap().len(), 30);
    }

    #[test]
    fn factorizations() {
        let s3 = symmetric(3).unwrap();
        let f = exact_factorizations(&s3, 24).unwrap();
        let s2 = Subgroup::generated(&s3, &[s3.coxeter_generator(2).unwrap()]);
        let a3 = Subgroup::generated(&s3, &[s3.coxeter_word(&[1, 2]).unwrap()]);
        assert!(f.contains(&(s2, a3)));
        assert!(f.contains(&(Subgroup::trivial(&s3), Subgroup::whole(&s3))));
        let c4 = cyclic(4).unwrap();
        let f4 = exact_factorizations(&c4, 24).unwrap();
        assert_eq!(f4.len(), 2);
        assert!(f4.iter().all(|(h, l)| h.is_trivial() || l.is_trivial()));
    }

    #[test]
    fn factorizations_unique_decomposition() {
        let g = direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap());
        for (h, l) in exact_factorizations(&g, 24).unwrap() {
            assert_eq!(h.order() * l.order(), g.order());
            let mut hit = vec![0; g.order()];
            for &x in h.members() {
                for &y in l.members() {
                    hit[g.mul(x, y)] += 1;
                }
            }
            assert!(hit.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn upper_central_series_of_d4() {
        let s = upper_central_series(&dihedral(4).unwrap());
        let orders: Vec<usize> = s.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 8]);
    }
}
