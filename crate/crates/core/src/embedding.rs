//! The enveloping group `G̃` of a skew brace and the Rota–Baxter operator on it.
//!
//! `G̃` is `G × G` with `(x,y)*(z,t) = (x∘z, y·λ_x(t))`. It factors exactly as
//! `H*L` with `H = {(g,g)}` and `L = {(g,e)}`, and the splitting operator is
//! `B((x,y)) = (x^{∘(−1)}∘y, e)`. The brace sits inside via `ψ(g) = (e,g)`.

use std::sync::Arc;

use serde::Serialize;

use crate::bounds::Bounds;
use crate::brace::{brace_from_rb, is_strong_left_ideal, left_center, left_series, SkewBrace};
use crate::error::{check_bound, Error, Result};
use crate::group::{is_nilpotent, structure_report_bounded, subgroups, FiniteGroup, GroupMap, Subgroup};
use crate::report::{Check, Report};
use crate::rota_baxter::{splitting, RbOperator, Weight};

/// `G̃` together with its operator and the embedding.
#[derive(Debug, Clone)]
pub struct TildeGroup {
    brace: SkewBrace,
    group: Arc<FiniteGroup>,
    operator: RbOperator,
}

impl TildeGroup {
    pub fn brace(&self) -> &SkewBrace {
        &self.brace
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The splitting operator of `H*L`.
    pub fn operator(&self) -> &RbOperator {
        &self.operator
    }

    pub fn encode(&self, x: usize, y: usize) -> usize {
        x * self.brace.order() + y
    }

    pub fn decode(&self, p: usize) -> (usize, usize) {
        (p / self.brace.order(), p % self.brace.order())
    }

    /// `ψ(g) = (e, g)`.
    pub fn psi(&self, g: usize) -> usize {
        self.encode(0, g)
    }

    pub fn psi_image(&self, set: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = set.iter().map(|&g| self.psi(g)).collect();
        v.sort_unstable();
        v
    }

    /// `ψ(I)` is a normal subgroup of `G̃`.
    pub fn psi_normal(&self, set: &[usize]) -> bool {
        Subgroup::from_members(&self.group, &self.psi_image(set)).is_ok_and(|s| s.is_normal(&self.group))
    }
}

/// Build `G̃` and verify its splitting operator.
pub fn build_tilde(brace: &SkewBrace, bounds: &Bounds) -> Result<TildeGroup> {
    let n = brace.order();
    check_bound("enveloping group", n * n, bounds.tilde)?;
    let (add, circ) = (brace.add(), brace.circ());
    let mut table = Vec::with_capacity(n * n * n * n);
    for p in 0..n * n {
        let (x, y) = (p / n, p % n);
        for q in 0..n * n {
            let (z, t) = (q / n, q % n);
            table.push(circ.mul(x, z) * n + add.mul(y, brace.lambda(x, t)));
        }
    }
    let labels = (0..n * n).map(|p| format!("({},{})", brace.label(p / n), brace.label(p % n))).collect();
    let group = FiniteGroup::from_flat(format!("{}~", brace.name()), n * n, table, labels)
        .map_err(|e| Error::internal(format!("enveloping product is not a group: {e}")))?;
    let group = Arc::new(group);
    let h = Subgroup::from_members(&group, &(0..n).map(|g| g * n + g).collect::<Vec<_>>())
        .map_err(|e| Error::internal(format!("diagonal is not a subgroup: {e}")))?;
    let l = Subgroup::from_members(&group, &(0..n).map(|g| g * n).collect::<Vec<_>>())
        .map_err(|e| Error::internal(format!("first factor is not a subgroup: {e}")))?;
    let operator = splitting(&group, &h, &l).map_err(|e| Error::internal(format!("G̃ = H*L: {e}")))?;
    for p in 0..n * n {
        let (x, y) = (p / n, p % n);
        let expect = circ.mul(circ.inv(x), y) * n;
        if operator.apply(p) != expect {
            return Err(Error::internal(format!("splitting operator differs from its closed form at {p}")));
        }
    }
    Ok(TildeGroup { brace: brace.clone(), group, operator })
}

/// The embedding checks, including both forms of the commutator identity:
/// `[(e,h),(g,e)] = (e, g⋆h)` and `[(g,e)⁻¹,(e,h)⁻¹] = (e, g⋆h)`.
pub fn verify_embedding(brace: &SkewBrace, bounds: &Bounds) -> Result<Report> {
    let t = build_tilde(brace, bounds)?;
    let g = t.group();
    let b = t.operator();
    let n = brace.order();
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let find =
        |bad: &dyn Fn(usize, usize) -> bool| pairs().find(|&(x, y)| bad(x, y)).map(|(x, y)| vec![x, y]);
    let circ_b = |u: usize, v: usize| {
        let bu = b.apply(u);
        g.product(&[u, bu, v, g.inv(bu)])
    };
    let mut r = Report::new(format!("embedding of {}", brace.name()));
    r.push(Check::from_witness(
        "psi_additive",
        find(&|x, y| g.mul(t.psi(x), t.psi(y)) != t.psi(brace.add().mul(x, y))),
    ));
    r.push(Check::from_witness(
        "psi_circle",
        find(&|x, y| circ_b(t.psi(x), t.psi(y)) != t.psi(brace.circ().mul(x, y))),
    ));
    r.push(Check::from_witness("psi_injective", find(&|x, y| x != y && t.psi(x) == t.psi(y))));
    r.push(Check::from_witness(
        "star_commutator",
        find(&|x, h| g.comm(t.psi(h), t.encode(x, 0)) != t.psi(brace.star(x, h))),
    ));
    r.push(Check::from_witness(
        "star_commutator_inverted",
        find(&|x, h| g.comm(g.inv(t.encode(x, 0)), g.inv(t.psi(h))) != t.psi(brace.star(x, h))),
    ));
    for c in &r.checks {
        if !c.passed && c.name != "star_commutator" {
            return Err(Error::internal(format!("embedding check {} failed", c.name)));
        }
    }
    r.set("tilde_order", g.order());
    Ok(r)
}

/// The ζ series with its flags.
#[derive(Debug, Clone, Serialize)]
pub struct ZetaSeries {
    /// `ζ_1 ⊆ ζ_2 ⊆ …` as subsets of the brace, until it stabilises.
    pub terms: Vec<Subgroup>,
    pub strong_left_nilpotent: bool,
    pub report: Report,
}

/// `ζ_1 = Z_l`, and `ζ_{k+1}` the preimage under `ψ` of the centre of
/// `G̃/ψ(ζ_k)` intersected with `ψ(G)/ψ(ζ_k)`.
pub fn zeta_series(brace: &SkewBrace, bounds: &Bounds) -> Result<ZetaSeries> {
    let t = build_tilde(brace, bounds)?;
    let g = t.group();
    let add = brace.add();
    let zl = left_center(brace);
    let z_tilde = g.center();
    let z1: Vec<usize> = brace.elements().filter(|&x| z_tilde.contains(t.psi(x))).collect();
    if z1 != zl.members() {
        return Err(Error::internal("ψ(Z_l) differs from Z(G̃) ∩ ψ(G)"));
    }
    let mut report = Report::new(format!("ζ series of {}", brace.name()));
    let mut terms = vec![zl];
    loop {
        let last = terms.last().unwrap();
        let sli = is_strong_left_ideal(brace, last.members());
        if sli != t.psi_normal(last.members()) {
            return Err(Error::internal("strong left ideal test disagrees with ψ-normality"));
        }
        if !sli {
            report.push(Check::fail("zeta_terms_strong_left_ideals", vec![terms.len()]));
            break;
        }
        let n_sub = Subgroup::from_members(g, &t.psi_image(last.members()))?;
        let q = n_sub.quotient(g)?;
        let qz = q.group.center();
        let next: Vec<usize> = brace.elements().filter(|&x| qz.contains(q.coset_of[t.psi(x)])).collect();
        let next = Subgroup::from_members(add, &next)
            .map_err(|e| Error::internal(format!("ζ term is not an additive subgroup: {e}")))?;
        if &next == last {
            break;
        }
        terms.push(next);
    }
    if report.check("zeta_terms_strong_left_ideals").is_none() {
        report.push(Check::pass("zeta_terms_strong_left_ideals"));
    }
    let strong = terms.last().unwrap().is_whole();
    let star_nilpotent = left_series(brace).last().unwrap().is_trivial();
    report.push(Check::flag(
        "strong_implies_star_and_additive_nilpotent",
        !strong || (star_nilpotent && is_nilpotent(add)),
    ));
    let meets = !strong || {
        let zl = &terms[0];
        subgroups(add, bounds.automorphisms)?
            .iter()
            .filter(|s| !s.is_trivial() && is_strong_left_ideal(brace, s.members()))
            .all(|s| !s.intersection(zl).is_trivial())
    };
    report.push(Check::flag("nontrivial_strong_left_ideals_meet_left_center", meets));
    report.set("orders", terms.iter().map(Subgroup::order).collect::<Vec<_>>());
    report.set("strong_left_nilpotent", strong);
    Ok(ZetaSeries { terms, strong_left_nilpotent: strong, report })
}

/// For a brace whose additive group is complete, the operator `B` with
/// `λ_g = conjugation by B(g)`; `G(B)` is checked to reproduce the brace.
pub fn recover_rb_complete(brace: &SkewBrace, bounds: &Bounds) -> Result<RbOperator> {
    let add = brace.add();
    let report = structure_report_bounded(add, bounds.automorphisms)?;
    if !report.is_complete {
        return Err(Error::precondition(format!("additive group {} is not complete", add.name())));
    }
    let n = brace.order();
    let mut images = Vec::with_capacity(n);
    for g in brace.elements() {
        let fits: Vec<usize> = add
            .elements()
            .filter(|&y| add.elements().all(|b| brace.lambda(g, b) == add.product(&[y, b, add.inv(y)])))
            .collect();
        match fits.as_slice() {
            [y] => images.push(*y),
            _ => {
                return Err(Error::internal(format!(
                    "λ_{g} is conjugation by {} elements in a complete group",
                    fits.len()
                )))
            }
        }
    }
    let group = Arc::new(add.clone());
    let b = RbOperator::guaranteed(group, GroupMap::new(images), Weight::One, "recovered operator")?;
    if !brace_from_rb(&b)?.same_tables(brace) {
        return Err(Error::internal("G(B) does not reproduce the brace"));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{enumerate_braces, semidirect_brace};
    use crate::group::{cyclic, dihedral, direct_product, quaternion8, symmetric, upper_central_series};
    use crate::rota_baxter::{enumerate_rb_operators, splitting as split_op};

    fn b1() -> RbOperator {
        let g = Arc::new(symmetric(3).unwrap());
        let w = |x: &[usize]| g.coxeter_word(x).unwrap();
        split_op(&g, &Subgroup::generated(&g, &[w(&[2])]), &Subgroup::generated(&g, &[w(&[1, 2])])).unwrap()
    }

    #[test]
    fn trivial_brace_tilde_is_direct_square() {
        let g = cyclic(3).unwrap();
        let t = build_tilde(&SkewBrace::trivial(&g), &Bounds::default()).unwrap();
        assert_eq!(t.group().flat_table(), direct_product(&g, &g).flat_table());
    }

    #[test]
    fn s3_b1_tilde() {
        let br = brace_from_rb(&b1()).unwrap();
        let t = build_tilde(&br, &Bounds::default()).unwrap();
        assert_eq!(t.group().order(), 36);
        let r = verify_embedding(&br, &Bounds::default()).unwrap();
        assert!(r.check("star_commutator_inverted").unwrap().passed);
    }

    #[test]
    fn printed_commutator_fails_for_opposite_s3() {
        let br = SkewBrace::opposite_trivial(&symmetric(3).unwrap());
        let r = verify_embedding(&br, &Bounds::default()).unwrap();
        assert!(!r.check("star_commutator").unwrap().passed);
        assert!(r.check("psi_circle").unwrap().passed);
    }

    #[test]
    fn embedding_of_all_s3_braces() {
        for br in enumerate_braces(&symmetric(3).unwrap(), &Bounds::default()).unwrap() {
            verify_embedding(&br, &Bounds::default()).unwrap();
        }
    }

    #[test]
    fn zeta_of_trivial_braces() {
        let b = Bounds::default();
        let z = zeta_series(&SkewBrace::trivial(&cyclic(4).unwrap()), &b).unwrap();
        assert_eq!(z.terms.len(), 1);
        assert!(z.strong_left_nilpotent);
        for g in [dihedral(4).unwrap(), quaternion8().unwrap()] {
            let z = zeta_series(&SkewBrace::trivial(&g), &b).unwrap();
            let upper: Vec<usize> = upper_central_series(&g).iter().skip(1).map(Subgroup::order).collect();
            let got: Vec<usize> = z.terms.iter().map(Subgroup::order).collect();
            assert_eq!(got, upper);
            assert!(z.strong_left_nilpotent);
            assert!(z.report.passed());
        }
        let z = zeta_series(&SkewBrace::trivial(&symmetric(3).unwrap()), &b).unwrap();
        assert_eq!(z.terms.len(), 1);
        assert!(z.terms[0].is_trivial());
        assert!(!z.strong_left_nilpotent);
    }

    #[test]
    fn psi_normality_matches_strong_left_ideals() {
        let b = Bounds::default();
        let a = cyclic(3).unwrap();
        let inv = GroupMap::from_fn(3, |x| a.inv(x));
        let colazzo = semidirect_brace(&a, &cyclic(2).unwrap(), &[GroupMap::identity(3), inv]).unwrap();
        let mut braces = enumerate_braces(&symmetric(3).unwrap(), &b).unwrap();
        braces.push(colazzo);
        for br in braces {
            let t = build_tilde(&br, &b).unwrap();
            for s in subgroups(br.add(), 24).unwrap() {
                assert_eq!(t.psi_normal(s.members()), is_strong_left_ideal(&br, s.members()));
            }
            zeta_series(&br, &b).unwrap();
        }
    }

    #[test]
    fn recovery_round_trips() {
        let b = Bounds::default();
        let g = Arc::new(symmetric(3).unwrap());
        assert_eq!(recover_rb_complete(&brace_from_rb(&b1()).unwrap(), &b).unwrap(), b1());
        let z = recover_rb_complete(&SkewBrace::trivial(&g), &b).unwrap();
        assert_eq!(z, RbOperator::zero(g.clone()));
        for op in enumerate_rb_operators(&g, &b).unwrap() {
            assert_eq!(recover_rb_complete(&brace_from_rb(&op).unwrap(), &b).unwrap(), op);
        }
        assert!(recover_rb_complete(&SkewBrace::trivial(&cyclic(3).unwrap()), &b).is_err());
    }
}
