//! Reproduction targets: each worked example and each sweep over the catalog,
//! returned as a [`Report`] whose checks are the exact claims being tested.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{
    algebra_rb_orbits, all_candidates, check_conditions, check_rb_identity_algebra, enumerate_algebra_rb,
    expected_count,
};
use crate::bounds::Bounds;
use crate::brace::{
    brace_from_rb, brace_isomorphic, enumerate_braces, is_ideal, is_left_ideal, lambda_homomorphic_report,
    left_center, parity_brace_window, rb_ideal_criterion, rb_left_center, rb_left_ideal_criterion, rb_socle,
    semidirect_brace, socle, two_sided_cocycle_check, verify_brace, SkewBrace,
};
use crate::catalog::Catalog;
use crate::embedding::{recover_rb_complete, verify_embedding};
use crate::error::{Error, Result};
use crate::group::{
    automorphisms, cyclic, is_homomorphism, is_metabelian, is_nilpotent, is_solvable, isomorphic, subgroups,
    symmetric, FiniteGroup, GroupMap, Subgroup,
};
use crate::multibrace::build_multibrace;
use crate::report::{Check, Report};
use crate::rota_baxter::{
    derived_circle_group, enumerate_rb_operators, hom_to_abelian, rb_criteria, splitting, RbOperator,
};
use crate::ybe::{
    direct_rb_solution, rack_form, rack_iff_sweep, shift_rack, shift_solution, solution_from_brace,
    solution_from_rb, verify_solution,
};

/// Settings shared by all targets.
#[derive(Debug, Clone, Serialize)]
pub struct ReproConfig {
    pub bounds: Bounds,
    /// Catalog groups up to this order enter the operator and brace sweeps.
    pub max_order: usize,
    /// Regular-subgroup braces are added for groups up to this order.
    pub regular_max_order: usize,
    /// Half-width of the parity-brace window.
    pub parity_window: i64,
    pub seed: u64,
    /// Random tables of order 4 in the rack sweep.
    pub rack_samples: usize,
}

impl Default for ReproConfig {
    fn default() -> Self {
        ReproConfig {
            bounds: Bounds::default(),
            max_order: 8,
            regular_max_order: 6,
            parity_window: 50,
            seed: 20210,
            rack_samples: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    S3B1,
    S3B2,
    S3Multibrace,
    AlgebraCounts,
    AlgebraOrbits,
    AlgebraOracle,
    BraceUniversal,
    YbeUniversal,
    Embedding,
    CompleteRecovery,
    Criteria,
    Corollaries,
    ParityWindow,
    Colazzo,
    ShiftRack,
    RackIff,
}

impl Target {
    pub const ALL: [Target; 16] = [
        Target::S3B1,
        Target::S3B2,
        Target::S3Multibrace,
        Target::AlgebraCounts,
        Target::AlgebraOrbits,
        Target::AlgebraOracle,
        Target::BraceUniversal,
        Target::YbeUniversal,
        Target::Embedding,
        Target::CompleteRecovery,
        Target::Criteria,
        Target::Corollaries,
        Target::ParityWindow,
        Target::Colazzo,
        Target::ShiftRack,
        Target::RackIff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::S3B1 => "s3-b1",
            Target::S3B2 => "s3-b2",
            Target::S3Multibrace => "s3-multibrace",
            Target::AlgebraCounts => "algebra-counts",
            Target::AlgebraOrbits => "algebra-orbits",
            Target::AlgebraOracle => "algebra-oracle",
            Target::BraceUniversal => "brace-universal",
            Target::YbeUniversal => "ybe-universal",
            Target::Embedding => "embedding",
            Target::CompleteRecovery => "complete-recovery",
            Target::Criteria => "criteria",
            Target::Corollaries => "corollaries",
            Target::ParityWindow => "parity-window",
            Target::Colazzo => "colazzo",
            Target::ShiftRack => "shift-rack",
            Target::RackIff => "rack-iff",
        }
    }

    /// The acceptance criterion a target reproduces, if any.
    pub fn criterion(self) -> Option<u8> {
        Some(match self {
            Target::AlgebraCounts => 1,
            Target::AlgebraOrbits => 2,
            Target::AlgebraOracle => 3,
            Target::S3B1 => 4,
            Target::S3B2 => 5,
            Target::S3Multibrace => 6,
            Target::BraceUniversal => 7,
            Target::YbeUniversal => 8,
            Target::Embedding => 9,
            Target::CompleteRecovery => 10,
            Target::Criteria => 11,
            Target::Corollaries => 12,
            Target::ParityWindow => 13,
            Target::Colazzo => 14,
            Target::ShiftRack | Target::RackIff => return None,
        })
    }

    pub fn run(self, catalog: &Catalog, cfg: &ReproConfig) -> Result<Report> {
        let mut r = match self {
            Target::S3B1 => s3_b1(),
            Target::S3B2 => s3_b2(),
            Target::S3Multibrace => s3_multibrace(&cfg.bounds),
            Target::AlgebraCounts => algebra_counts(),
            Target::AlgebraOrbits => algebra_orbits(),
            Target::AlgebraOracle => algebra_oracle(),
            Target::BraceUniversal => brace_universal(catalog, cfg),
            Target::YbeUniversal => ybe_universal(catalog, cfg),
            Target::Embedding => embedding_sweep(catalog, cfg),
            Target::CompleteRecovery => complete_recovery(&cfg.bounds),
            Target::Criteria => criteria_sweep(catalog, cfg),
            Target::Corollaries => corollaries(catalog, cfg),
            Target::ParityWindow => Ok(parity_brace_window(cfg.parity_window).report),
            Target::Colazzo => colazzo(),
            Target::ShiftRack => shift_rack_example(),
            Target::RackIff => Ok(rack_iff(cfg)),
        }?;
        r.set("target", self.name());
        if let Some(c) = self.criterion() {
            r.set("criterion", c);
        }
        Ok(r)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    /// A target name, or `criterion-N` for the target reproducing criterion `N`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(n) = s.strip_prefix("criterion-").and_then(|n| n.parse::<u8>().ok()) {
            return Target::ALL
                .into_iter()
                .find(|t| t.criterion() == Some(n))
                .ok_or_else(|| Error::Parse(format!("no reproduction target for criterion {n}")));
        }
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown example `{s}`")))
    }
}

/// Failure counter for one claim over many cases.
struct Tally {
    name: String,
    total: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), total: 0, failures: 0, first: None }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures += 1;
            self.first.get_or_insert_with(case);
        }
    }

    fn check(self) -> Check {
        let note = match &self.first {
            None => format!("{} cases", self.total),
            Some(f) => format!("{} of {} cases fail, first: {f}", self.failures, self.total),
        };
        Check::flag(self.name, self.failures == 0).with_note(note)
    }
}

fn s3() -> Arc<FiniteGroup> {
    Arc::new(symmetric(3).expect("S3 builds"))
}

fn word(g: &FiniteGroup, w: &[usize]) -> usize {
    g.coxeter_word(w).expect("S3 has Coxeter generators")
}

/// `B₁`: the splitting operator of `S₃ = ⟨s₂⟩A₃`.
pub fn s3_b1_operator() -> Result<RbOperator> {
    let g = s3();
    let h = Subgroup::generated(&g, &[word(&g, &[2])]);
    let l = Subgroup::generated(&g, &[word(&g, &[1, 2])]);
    splitting(&g, &h, &l)
}

/// `B₂`: the sign homomorphism onto `⟨s₁⟩`.
pub fn s3_b2_operator() -> Result<RbOperator> {
    let g = s3();
    let even = Subgroup::generated(&g, &[word(&g, &[1, 2])]);
    let s1 = word(&g, &[1]);
    let f = GroupMap::from_fn(g.order(), |x| if even.contains(x) { 0 } else { s1 });
    hom_to_abelian(&g, &f)
}

/// Checks of `B(w) = v` for printed pairs of Coxeter words.
fn printed_values(r: &mut Report, tag: &str, b: &RbOperator, values: &[(&[usize], &[usize])]) {
    let g = b.group();
    for (arg, img) in values {
        let (x, y) = (word(g, arg), word(g, img));
        let name = format!("{tag}({})", g.label(x));
        r.push(if b.apply(x) == y { Check::pass(name) } else { Check::fail(name, vec![x, b.apply(x), y]) });
    }
}

/// `gen^{∘k}` for `k = 2..=6` against the printed words in `(G,·)` (the last is `e`).
fn printed_powers(r: &mut Report, g: &FiniteGroup, circ: &FiniteGroup, gen: usize, powers: &[&[usize]]) {
    let mut p = gen;
    for (k, w) in powers.iter().enumerate() {
        p = circ.mul(p, gen);
        let expect = word(g, w);
        let name = format!("power_{}", k + 2);
        r.push(if p == expect { Check::pass(name) } else { Check::fail(name, vec![p, expect]) });
    }
}

fn brace_and_solution(r: &mut Report, b: &RbOperator) -> Result<SkewBrace> {
    let br = brace_from_rb(b)?;
    r.push(Check::from_witness("brace_axiom", verify_brace(br.add(), br.circ()).left.map(|w| w.to_vec())));
    let s = solution_from_brace(&br)?;
    let v = verify_solution(&s);
    r.push(Check::flag("solution_nondegenerate", v.is_solution() && v.is_nondegenerate()));
    r.push(Check::flag("operator_solution_matches", solution_from_rb(b)? == s));
    r.set("solution_involutive", v.is_involutive());
    Ok(br)
}

fn s3_b1() -> Result<Report> {
    let b = s3_b1_operator()?;
    let g = b.group();
    let mut r = Report::new("S3 with the splitting operator B1");
    printed_values(
        &mut r,
        "B1",
        &b,
        &[(&[1], &[1, 2]), (&[2], &[]), (&[1, 2], &[2, 1]), (&[2, 1], &[1, 2]), (&[1, 2, 1], &[2, 1])],
    );
    let circ = derived_circle_group(&b)?;
    let c6 = cyclic(6)?;
    r.push(Check::flag("circle_group_cyclic_6", isomorphic(&circ, &c6).is_some()));
    let s1 = word(g, &[1]);
    printed_powers(&mut r, g, &circ, s1, &[&[1, 2], &[2], &[2, 1], &[1, 2, 1], &[]]);
    r.push(Check::flag(
        "b1_endomorphism_of_circle_group",
        is_homomorphism(&circ, &circ, b.map()) && b.apply(s1) == circ.mul(s1, s1),
    ));
    brace_and_solution(&mut r, &b)?;
    r.set("images", b.image_labels());
    Ok(r)
}

fn s3_b2() -> Result<Report> {
    let b = s3_b2_operator()?;
    let g = b.group();
    let mut r = Report::new("S3 with the homomorphism B2 onto <s1>");
    printed_values(
        &mut r,
        "B2",
        &b,
        &[(&[1], &[1]), (&[2], &[1]), (&[1, 2, 1], &[1]), (&[2, 1], &[]), (&[1, 2], &[])],
    );
    let circ = derived_circle_group(&b)?;
    r.push(Check::flag("circle_group_cyclic_6", isomorphic(&circ, &cyclic(6)?).is_some()));
    printed_powers(&mut r, g, &circ, word(g, &[2]), &[&[1, 2], &[1], &[2, 1], &[1, 2, 1], &[]]);
    let br2 = brace_and_solution(&mut r, &b)?;
    let br1 = brace_from_rb(&s3_b1_operator()?)?;
    let iso = brace_isomorphic(&br1, &br2);
    let ker = |br: &SkewBrace| br.elements().filter(|&x| br.elements().all(|y| br.lambda(x, y) == y)).count();
    r.push(Check::flag("isomorphic_to_b1_brace", iso.is_some()).with_note(format!(
        "|ker λ| is {} for B1 and {} for B2",
        ker(&br1),
        ker(&br2)
    )));
    if let Some(f) = iso {
        r.set("isomorphism", f.images());
    }
    Ok(r)
}

fn s3_multibrace(bounds: &Bounds) -> Result<Report> {
    let mut r = Report::new("skew left 2-braces on S3");
    let m = build_multibrace(&s3_b1_operator()?, 2, bounds)?;
    r.push(Check::flag("b1_level_1_abelian", m.level(1).is_abelian()));
    r.push(Check::flag("b1_level_2_equals_level_1", m.level(2).flat_table() == m.level(1).flat_table()));
    let inv = build_multibrace(&RbOperator::inversion(s3()), 2, bounds)?;
    r.push(Check::pass("inversion_tower_verified"));
    r.set(
        "inversion_levels_equal",
        (1..=2).map(|i| inv.level(i).flat_table() == inv.level(i - 1).flat_table()).collect::<Vec<_>>(),
    );
    Ok(r)
}

fn algebra_counts() -> Result<Report> {
    let mut r = Report::new("weight 1 operators on the algebra k^n");
    for (n, want) in [(1usize, 2usize), (2, 12), (3, 128)] {
        let got = enumerate_algebra_rb(n)?.len();
        r.push(
            Check::flag(format!("count_n{n}"), got == want && got as u64 == expected_count(n))
                .with_note(format!("{got}")),
        );
    }
    Ok(r)
}

fn algebra_orbits() -> Result<Report> {
    let mut r = Report::new("orbits of operators on k^n");
    for (n, want) in [(2usize, 7usize), (3, 26)] {
        let got = algebra_rb_orbits(n)?.count;
        r.push(Check::flag(format!("orbits_n{n}"), got == want).with_note(format!("{got}")));
    }
    r.set("orbits_n1", algebra_rb_orbits(1)?.count);
    Ok(r)
}

fn algebra_oracle() -> Result<Report> {
    let mut r = Report::new("matrix conditions against the basis identity");
    for n in 1..=3 {
        let mut t = Tally::new(format!("agree_n{n}"));
        for m in all_candidates(n) {
            t.record(check_conditions(&m) == check_rb_identity_algebra(&m), || format!("{:?}", m.rows()));
        }
        r.push(t.check());
    }
    Ok(r)
}

/// Every operator on each catalog group up to `max_order`.
fn operators(catalog: &Catalog, cfg: &ReproConfig) -> Result<Vec<RbOperator>> {
    let mut out = Vec::new();
    for g in catalog.up_to(cfg.max_order) {
        out.extend(enumerate_rb_operators(&g, &cfg.bounds)?);
    }
    Ok(out)
}

fn regular_braces(
    catalog: &Catalog,
    cfg: &ReproConfig,
    max_order: usize,
) -> Result<(Vec<SkewBrace>, Vec<String>)> {
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    for g in catalog.up_to(max_order) {
        match enumerate_braces(&g, &cfg.bounds) {
            Ok(bs) => out.extend(bs),
            Err(Error::BoundExceeded { .. }) => skipped.push(g.name().to_owned()),
            Err(e) => return Err(e),
        }
    }
    Ok((out, skipped))
}

fn op_name(b: &RbOperator) -> String {
    format!("{} {:?}", b.group().name(), b.map().images())
}

fn brace_universal(catalog: &Catalog, cfg: &ReproConfig) -> Result<Report> {
    let mut r = Report::new(format!("braces of all operators, |G| ≤ {}", cfg.max_order));
    let mut t = Tally::new("brace_axiom");
    for b in operators(catalog, cfg)? {
        let ok = match brace_from_rb(&b) {
            Ok(br) => verify_brace(br.add(), br.circ()).left.is_none(),
            Err(_) => false,
        };
        t.record(ok, || op_name(&b));
    }
    r.set("operators", t.total);
    r.push(t.check());
    Ok(r)
}

fn ybe_universal(catalog: &Catalog, cfg: &ReproConfig) -> Result<Report> {
    let mut r = Report::new(format!("solutions of all operator braces, |G| ≤ {}", cfg.max_order));
    let mut nd = Tally::new("braid_and_nondegenerate");
    let mut inv = Tally::new("involutive_iff_additive_abelian");
    let mut eq = Tally::new("operator_solution_matches");
    for b in operators(catalog, cfg)? {
        let br = brace_from_rb(&b)?;
        match solution_from_brace(&br) {
            Ok(s) => {
                let v = verify_solution(&s);
                nd.record(true, String::new);
                inv.record(v.is_involutive() == br.add().is_abelian(), || op_name(&b));
            }
            Err(_) => nd.record(false, || op_name(&b)),
        }
        eq.record(solution_from_rb(&b).is_ok(), || op_name(&b));
    }
    for t in [nd, inv, eq] {
        r.push(t.check());
    }
    Ok(r)
}

fn embedding_sweep(catalog: &Catalog, cfg: &ReproConfig) -> Result<Report> {
    let mut braces: Vec<SkewBrace> =
        operators(catalog, cfg)?.iter().map(brace_from_rb).collect::<Result<_>>()?;
    let (regular, skipped) = regular_braces(catalog, cfg, cfg.regular_max_order)?;
    braces.extend(regular);
    let names =
        ["psi_additive", "psi_circle", "psi_injective", "star_commutator", "star_commutator_inverted"];
    let mut tallies: Vec<Tally> = names.iter().map(|n| Tally::new(*n)).collect();
    for br in &braces {
        let rep = verify_embedding(br, &cfg.bounds)?;
        for t in &mut tallies {
            let c = rep.check(&t.name).expect("embedding report lists every check");
            t.record(c.passed, || {
                format!("{} witness {:?}", br.name(), c.witness.as_deref().unwrap_or_default())
            });
        }
    }
    let mut r = Report::new("embedding into the enveloping group");
    for t in tallies {
        r.push(t.check());
    }
    r.set("braces", braces.len());
    r.set("skipped_regular", skipped);
    Ok(r)
}

fn complete_recovery(bounds: &Bounds) -> Result<Report> {
    let g = s3();
    let mut r = Report::new("recovery of operators on the complete group S3");
    let auts = automorphisms(&g, bounds.automorphisms)?.len();
    let complete = g.center().is_trivial() && auts == g.order();
    r.push(Check::flag("s3_complete", complete));
    let mut t = Tally::new("round_trip");
    let braces = enumerate_braces(&g, bounds)?;
    for br in &braces {
        let ok = recover_rb_complete(br, bounds)
            .and_then(|b| brace_from_rb(&b))
            .map(|back| back.same_tables(br))
            .unwrap_or(false);
        t.record(ok, || br.name().to_owned());
    }
    r.set("braces", braces.len());
    r.push(t.check());
    Ok(r)
}

fn criteria_sweep(catalog: &Catalog, cfg: &ReproConfig) -> Result<Report> {
    let mut abelian = Tally::new("abelian_circ_identity");
    let mut soc = Tally::new("socle_formula");
    let mut zl = Tally::new("left_center_formula");
    let mut ideal = Tally::new("ideal_criterion");
    let mut left = Tally::new("left_ideal_criterion");
    let mut lam = Tally::new("lambda_homomorphic_center");
    let mut cocycle = Tally::new("two_sided_cocycle");
    let mut printed = Tally::new("direct_solution_printed_identity");
    let mut center = Tally::new("direct_solution_center_criterion");
    for b in operators(catalog, cfg)? {
        let g = b.group();
        let br = brace_from_rb(&b)?;
        let crit = rb_criteria(&b)?;
        let flag = crit.check("abelian_circ_identity").map(|c| c.passed).unwrap_or(false);
        abelian.record(flag == br.circ().is_abelian(), || op_name(&b));
        soc.record(socle(&br) == rb_socle(&b), || op_name(&b));
        zl.record(left_center(&br) == rb_left_center(&b), || op_name(&b));
        for s in subgroups(g, cfg.bounds.automorphisms)? {
            let m = s.members();
            ideal.record(is_ideal(&br, m) == rb_ideal_criterion(&br, m), || format!("{} {m:?}", op_name(&b)));
            left.record(is_left_ideal(&br, m) == rb_left_ideal_criterion(&b, m), || {
                format!("{} {m:?}", op_name(&b))
            });
        }
        lam.record(lambda_homomorphic_report(&br, Some(&b)).passed(), || op_name(&b));
        cocycle.record(two_sided_cocycle_check(&b)?.passed(), || op_name(&b));
        let d = direct_rb_solution(&b)?;
        printed.record(d.valid == d.printed_identity_witness.is_none(), || op_name(&b));
        center.record(d.valid == d.center_criterion_witness.is_none(), || op_name(&b));
    }
    let mut r = Report::new(format!("criterion equivalences, |G| ≤ {}", cfg.max_order));
    for t in [abelian, soc, zl, ideal, left, lam, cocycle, printed, center] {
        r.push(t.check());
    }
    Ok(r)
}

fn corollaries(catalog: &Catalog, cfg: &ReproConfig) -> Result<Report> {
    let mut braces: Vec<SkewBrace> =
        operators(catalog, cfg)?.iter().map(brace_from_rb).collect::<Result<_>>()?;
    let (regular, skipped) = regular_braces(catalog, cfg, cfg.max_order)?;
    braces.extend(regular);
    let mut nil = Tally::new("nilpotent_circ_implies_solvable_add");
    let mut ab = Tally::new("abelian_circ_implies_metabelian_add");
    for br in &braces {
        nil.record(!is_nilpotent(br.circ()) || is_solvable(br.add()), || br.name().to_owned());
        ab.record(!br.circ().is_abelian() || is_metabelian(br.add()), || br.name().to_owned());
    }
    let mut r = Report::new("corollaries over enumerated braces");
    r.push(nil.check());
    r.push(ab.check());
    r.set("braces", braces.len());
    r.set("skipped_regular", skipped);
    Ok(r)
}

fn colazzo() -> Result<Report> {
    let a = cyclic(3)?;
    let b = cyclic(2)?;
    let inv = GroupMap::from_fn(3, |x| a.inv(x));
    let br = semidirect_brace(&a, &b, &[GroupMap::identity(3), inv])?;
    let mut r = Report::new("semidirect brace C3 : C2 with the inversion action");
    r.push(Check::flag("additive_cyclic_6", isomorphic(br.add(), &cyclic(6)?).is_some()));
    r.push(Check::flag("multiplicative_s3", isomorphic(br.circ(), &symmetric(3)?).is_some()));
    let zl = left_center(&br);
    // {e} ⋊ B consists of the pairs (0, b), which are indices 0 and 1.
    r.push(Check::flag("left_center_is_e_x_b", zl.members() == [0, 1]));
    r.push(Check::flag("left_center_not_normal_in_circ", !zl.is_normal(br.circ())));
    r.set("left_center", zl.members());
    Ok(r)
}

fn shift_rack_example() -> Result<Report> {
    let mut r = Report::new("the shift rack y*x = y + 1 on Z_n");
    let mut rack = Tally::new("rack_not_quandle");
    let mut sol = Tally::new("solution_nondegenerate_not_involutive");
    let mut form = Tally::new("rack_form_is_shift_rack");
    for n in 2..=12 {
        let c = shift_rack(n).check();
        rack.record(c.is_rack() && !c.is_quandle(), || format!("n = {n}"));
        let s = shift_solution(n);
        let v = verify_solution(&s);
        sol.record(v.is_solution() && v.is_nondegenerate() && !v.is_involutive(), || format!("n = {n}"));
        let rf = rack_form(&s)?;
        form.record(rf.rack == shift_rack(n) && rf.report.passed(), || format!("n = {n}"));
    }
    for t in [rack, sol, form] {
        r.push(t.check());
    }
    Ok(r)
}

fn rack_iff(cfg: &ReproConfig) -> Report {
    let s = rack_iff_sweep(3, cfg.rack_samples, cfg.seed);
    let mut r = Report::new("rack axioms against non-degenerate solutions (y, x*y)");
    r.push(
        Check::flag("no_disagreements", s.disagreements == 0)
            .with_note(format!("{} tables", s.tables_checked)),
    );
    r.set("sweep", &s);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert_eq!("criterion-4".parse::<Target>().unwrap(), Target::S3B1);
        assert!("criterion-15".parse::<Target>().is_err());
        assert!("nope".parse::<Target>().is_err());
    }

    #[test]
    fn s3_examples_pass() {
        let cat = Catalog::builtin();
        let cfg = ReproConfig::default();
        for t in [Target::S3B1, Target::S3Multibrace, Target::Colazzo, Target::ShiftRack] {
            let r = t.run(&cat, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
        // The two braces have kernels of λ of different sizes.
        let b2 = Target::S3B2.run(&cat, &cfg).unwrap();
        for c in &b2.checks {
            assert_eq!(c.passed, c.name != "isomorphic_to_b1_brace", "{b2}");
        }
    }

    #[test]
    fn small_sweeps() {
        let cat = Catalog::builtin();
        let cfg = ReproConfig { max_order: 6, regular_max_order: 4, ..ReproConfig::default() };
        for t in [Target::BraceUniversal, Target::YbeUniversal, Target::Corollaries] {
            let r = t.run(&cat, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
        let crit = Target::Criteria.run(&cat, &cfg).unwrap();
        for c in &crit.checks {
            assert_eq!(c.passed, c.name != "direct_solution_printed_identity", "{crit}");
        }
    }
}
