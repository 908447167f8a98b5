use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};

/// One orbit of weight 1 operators under `B ↦ φ⁻¹Bφ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RbOrbit {
    /// Lexicographically least member.
    pub representative: GroupMap,
    /// Sorted members.
    pub members: Vec<GroupMap>,
    /// Index of the orbit holding `B̃` for the members of this one.
    pub tilde_orbit: usize,
}

fn tilde_map(g: &FiniteGroup, b: &GroupMap) -> GroupMap {
    GroupMap::from_fn(g.order(), |x| {
        let xi = g.inv(x);
        g.mul(xi, b.apply(xi))
    })
}

/// Partition `ops` into `Aut(G)`-orbits, ordered by representative.
///
/// `ops` must be closed under the action and under the tilde map (as the
/// full operator set is); an orbit leaving `ops` is reported as an error.
pub fn classify_rb_orbits(g: &FiniteGroup, ops: &[GroupMap], auts: &[GroupMap]) -> Result<Vec<RbOrbit>> {
    let sorted: BTreeSet<&GroupMap> = ops.iter().collect();
    let inverses: Vec<GroupMap> = auts
        .iter()
        .map(|f| f.inverse().ok_or_else(|| Error::precondition("automorphism is not bijective")))
        .collect::<Result<_>>()?;
    let mut orbit_of: HashMap<&GroupMap, usize> = HashMap::new();
    let mut orbits: Vec<RbOrbit> = Vec::new();
    for &b in &sorted {
        if orbit_of.contains_key(b) {
            continue;
        }
        let mut members = BTreeSet::new();
        for (phi, phi_inv) in auts.iter().zip(&inverses) {
            members.insert(phi_inv.compose(&b.compose(phi)));
        }
        let idx = orbits.len();
        for m in &members {
            let key = sorted
                .get(m)
                .ok_or_else(|| Error::precondition("operator list is not closed under automorphisms"))?;
            orbit_of.insert(key, idx);
        }
        let members: Vec<GroupMap> = members.into_iter().collect();
        orbits.push(RbOrbit { representative: members[0].clone(), members, tilde_orbit: usize::MAX });
    }
    for o in &mut orbits {
        let t = tilde_map(g, &o.representative);
        o.tilde_orbit = *orbit_of
            .get(&t)
            .ok_or_else(|| Error::precondition("operator list is not closed under tilde"))?;
    }
    Ok(orbits)
}

/// Number of classes once each orbit is merged with its tilde partner.
pub fn tilde_refined_count(orbits: &[RbOrbit]) -> usize {
    orbits.iter().enumerate().filter(|&(i, o)| o.tilde_orbit >= i).count()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{automorphisms, cyclic, direct_product, symmetric, Subgroup};
    use crate::rota_baxter::{aut_conj, enumerate_rb_maps, splitting, Weight};

    fn orbits_of(g: &FiniteGroup) -> Vec<RbOrbit> {
        let ops = enumerate_rb_maps(g, Weight::One, 12).unwrap();
        let auts = automorphisms(g, 24).unwrap();
        classify_rb_orbits(g, &ops, &auts).unwrap()
    }

    #[test]
    fn c2_has_two_orbits() {
        assert_eq!(orbits_of(&cyclic(2).unwrap()).len(), 2);
    }

    #[test]
    fn orbits_partition_and_are_closed() {
        let g = symmetric(3).unwrap();
        let orbits = orbits_of(&g);
        let total: usize = orbits.iter().map(|o| o.members.len()).sum();
        assert_eq!(total, 8);
        let g = Arc::new(g);
        let w = |x: &[usize]| g.coxeter_word(x).unwrap();
        let b1 = splitting(&g, &Subgroup::generated(&g, &[w(&[2])]), &Subgroup::generated(&g, &[w(&[1, 2])]))
            .unwrap();
        let home = orbits.iter().find(|o| o.members.contains(b1.map())).unwrap();
        for phi in automorphisms(&g, 24).unwrap() {
            assert!(home.members.contains(aut_conj(&b1, &phi).unwrap().map()));
        }
        for (i, o) in orbits.iter().enumerate() {
            assert_eq!(orbits[o.tilde_orbit].tilde_orbit, i);
        }
    }

    #[test]
    fn klein_four_orbit_count() {
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2);
        let orbits = orbits_of(&v4);
        assert_eq!(orbits.iter().map(|o| o.members.len()).sum::<usize>(), 16);
        // End(V4) = M2(F2) up to GL2(F2)-conjugacy: similarity classes over
        // F2, two each for x², (x+1)², one each for x(x+1), x²+x+1.
        assert_eq!(orbits.len(), 6);
    }
}
