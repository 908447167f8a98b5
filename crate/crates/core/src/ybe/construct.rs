use serde::Serialize;

use super::{rack::Rack, verify_solution, RackReport, SolutionReport, YbeSolution};
use crate::brace::{BraceKind, SkewBrace};
use crate::error::{Error, Result};
use crate::group::GroupMap;
use crate::report::{Check, Report};
use crate::rota_baxter::{direct_solution_witness, direct_solution_witness_mod_center, RbOperator};

/// `S(a,b) = (λ_a(b), λ⁻¹_{λ_a(b)}((a∘b)⁻¹·a·(a∘b)))`, with inverses additive.
pub fn solution_from_brace(brace: &SkewBrace) -> Result<YbeSolution> {
    let (add, circ) = (brace.add(), brace.circ());
    let s = YbeSolution::from_fn(brace.order(), |a, b| {
        let l = brace.lambda(a, b);
        let ab = circ.mul(a, b);
        (l, brace.lambda_inv(l, add.conj(a, ab)))
    });
    let v = verify_solution(&s);
    if !(v.is_solution() && v.is_nondegenerate()) {
        return Err(Error::internal(format!(
            "brace {} does not give a non-degenerate solution: {v:?}",
            brace.name()
        )));
    }
    Ok(s)
}

/// `S(a,b) = (λ_a(b), a^{λ_a(b)·B(λ_a(b))})` with `λ_a(b) = B(a)·b·B(a)⁻¹`.
/// Checked against the solution of the brace the operator defines.
pub fn solution_from_rb(b: &RbOperator) -> Result<YbeSolution> {
    b.require_weight_one("the operator solution")?;
    let g = b.group();
    let s = YbeSolution::from_fn(g.order(), |x, y| {
        let bx = b.apply(x);
        let l = g.product(&[bx, y, g.inv(bx)]);
        (l, g.conj(x, g.mul(l, b.apply(l))))
    });
    let brace = crate::brace::brace_from_rb(b)?;
    if s != solution_from_brace(&brace)? {
        return Err(Error::internal("operator solution differs from the brace solution"));
    }
    Ok(s)
}

/// `(f×f)∘S∘(f⁻¹×f⁻¹)` for a permutation `f` of the underlying set.
pub fn conjugate_solution(s: &YbeSolution, f: &GroupMap) -> Result<YbeSolution> {
    let n = s.order();
    if f.len() != n || !f.in_range(n) {
        return Err(Error::precondition(format!("expected a map on {n} points")));
    }
    let inv = f.inverse().ok_or_else(|| Error::precondition("conjugating map is not a bijection"))?;
    Ok(YbeSolution::from_fn(n, |x, y| {
        let (a, b) = s.apply(inv.apply(x), inv.apply(y));
        (f.apply(a), f.apply(b))
    }))
}

/// `S' = T∘S∘T⁻¹` with `T(x,y) = (x, σ_x(y))`, which has the shape
/// `S'(x,y) = (y, x*y)` for `x*y = σ_y(τ_{σ_x⁻¹(y)}(x))`.
#[derive(Debug, Clone, Serialize)]
pub struct RackForm {
    pub solution: YbeSolution,
    pub rack: Rack,
    /// `(a, b)` for which `τ_{σ_x⁻¹(a)}(x) = σ_a⁻¹(b)` has no unique solution `x`.
    pub condition_witness: Option<[usize; 2]>,
    pub rack_report: RackReport,
    pub report: Report,
}

/// Requires `S` to be left non-degenerate so that `T` is invertible.
pub fn rack_form(s: &YbeSolution) -> Result<RackForm> {
    let n = s.order();
    let mut sigma_inv = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let slot = &mut sigma_inv[x * n + s.sigma(x, y)];
            if *slot != usize::MAX {
                return Err(Error::precondition(format!("σ_{x} is not a bijection")));
            }
            *slot = y;
        }
    }
    let si = |x: usize, y: usize| sigma_inv[x * n + y];
    let rack = Rack::from_fn(n, |x, y| s.sigma(y, s.tau(si(x, y), x)));
    let conjugated = YbeSolution::from_fn(n, |x, y| {
        let (a, b) = s.apply(x, si(x, y));
        (a, s.sigma(a, b))
    });
    let shape = (0..n * n).find(|&k| conjugated.pairs()[k] != (k % n, rack.op(k / n, k % n)));

    let condition_witness = (0..n * n)
        .find(|&k| {
            let (a, b) = (k / n, k % n);
            let target = si(a, b);
            (0..n).filter(|&x| s.tau(si(x, a), x) == target).count() != 1
        })
        .map(|k| [k / n, k % n]);
    let rack_report = rack.check();
    let v = verify_solution(s);

    let mut report = Report::new("rack form");
    report.push(Check::from_witness("conjugate_has_rack_shape", shape.map(|k| vec![k / n, k % n])));
    report.push(Check::flag("condition_iff_r1", condition_witness.is_none() == rack_report.r1.is_none()));
    if v.is_solution() && v.is_nondegenerate() {
        report.push(Check::flag("rack_axioms", rack_report.is_rack()));
        let sv = verify_solution(&conjugated);
        report.push(Check::flag("conjugate_is_solution", sv.is_solution() && sv.is_nondegenerate()));
    }
    report.set("condition_holds", condition_witness.is_none());
    report.set("quandle", rack_report.is_quandle());
    Ok(RackForm { solution: conjugated, rack, condition_witness, rack_report, report })
}

/// Properties of the solution of a brace: involutive exactly when the
/// additive group is abelian, and `σ ≡ id` only for the trivial brace.
pub fn brace_solution_report(brace: &SkewBrace) -> Result<(YbeSolution, SolutionReport, Report)> {
    let s = solution_from_brace(brace)?;
    let v = verify_solution(&s);
    let n = brace.order();
    let rack_type = (0..n * n).all(|k| s.sigma(k / n, k % n) == k % n);
    let kind = brace.summary().kind;
    let mut r = v.to_report(format!("solution of {}", brace.name()));
    r.push(Check::flag("involutive_iff_additive_abelian", v.is_involutive() == brace.add().is_abelian()));
    r.push(Check::flag(
        "rack_type_implies_trivial",
        !rack_type || matches!(kind, BraceKind::TrivialEqual | BraceKind::TrivialBoth),
    ));
    r.set("rack_type", rack_type);
    Ok((s, v, r))
}

/// Outcome of [`direct_rb_solution`].
#[derive(Debug, Clone, Serialize)]
pub struct DirectRbSolution {
    pub solution: YbeSolution,
    pub valid: bool,
    /// `(b, c)` with `(B(b)⁻¹)^{B(c)} ≠ B(b^{B(c)})`.
    pub printed_identity_witness: Option<[usize; 2]>,
    /// `(b, c)` with `(B(b)⁻¹)^{B(c)⁻¹}·B(b^{B(c)⁻¹}) ∉ Z(G)`.
    pub center_criterion_witness: Option<[usize; 2]>,
    pub report: Report,
}

/// `S(x,y) = (y, B(y)·x·B(y)⁻¹)` compared with two criteria on `B`.
pub fn direct_rb_solution(b: &RbOperator) -> Result<DirectRbSolution> {
    let g = b.group();
    let n = g.order();
    let solution = YbeSolution::from_fn(n, |x, y| {
        let by = b.apply(y);
        (y, g.product(&[by, x, g.inv(by)]))
    });
    let v = verify_solution(&solution);
    let valid = v.is_solution() && v.is_nondegenerate();
    let printed = direct_solution_witness(b).map(|(x, y)| [x, y]);
    let corrected = direct_solution_witness_mod_center(b).map(|(x, y)| [x, y]);
    if valid != corrected.is_none() {
        return Err(Error::internal(format!(
            "center criterion disagrees with the braid check (valid = {valid})"
        )));
    }
    let mut report = v.to_report("direct operator solution");
    report.push(Check::flag("printed_identity_matches_validity", valid == printed.is_none()));
    report.push(Check::flag("center_criterion_matches_validity", true));
    report.set("valid", valid);
    report.set("printed_identity", printed.is_none());
    report.set("center_criterion", corrected.is_none());
    Ok(DirectRbSolution {
        solution,
        valid,
        printed_identity_witness: printed,
        center_criterion_witness: corrected,
        report,
    })
}
