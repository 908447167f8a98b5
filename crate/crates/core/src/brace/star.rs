use serde::Serialize;

use super::SkewBrace;
use crate::group::Subgroup;
use crate::report::{Check, Report};
use crate::rota_baxter::RbOperator;

/// Flat table of `g⋆h`.
pub fn star_table(brace: &SkewBrace) -> Vec<usize> {
    let n = brace.order();
    (0..n * n).map(|k| brace.star(k / n, k % n)).collect()
}

/// `G ⊇ G² ⊇ …` with `G^{k+1}` the additive subgroup generated by `G⋆G^k`,
/// continued until it repeats.
pub fn left_series(brace: &SkewBrace) -> Vec<Subgroup> {
    let add = brace.add();
    let mut series = vec![Subgroup::whole(add)];
    loop {
        let last = series.last().unwrap();
        let gens: Vec<usize> = brace
            .elements()
            .flat_map(|g| last.members().iter().map(move |&h| (g, h)))
            .map(|(g, h)| brace.star(g, h))
            .collect();
        let next = Subgroup::generated(add, &gens);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StarReport {
    pub table: Vec<usize>,
    /// Orders of the left series terms.
    pub series: Vec<usize>,
    pub left_star_nilpotent: bool,
    /// `g⋆h = [B(g)⁻¹, h⁻¹]` when an operator was given.
    pub commutator_form: Option<bool>,
}

impl StarReport {
    pub fn to_report(&self, title: impl Into<String>) -> Report {
        let mut r = Report::new(title);
        if let Some(ok) = self.commutator_form {
            r.push(Check::flag("star_is_commutator", ok));
        }
        r.set("left_series", &self.series);
        r.set("left_star_nilpotent", self.left_star_nilpotent);
        r
    }
}

pub fn star_and_series(brace: &SkewBrace, rb: Option<&RbOperator>) -> StarReport {
    let table = star_table(brace);
    let series = left_series(brace);
    let n = brace.order();
    let commutator_form = rb.map(|b| {
        let g = b.group();
        (0..n * n).all(|k| {
            let (x, h) = (k / n, k % n);
            table[k] == g.comm(g.inv(b.apply(x)), g.inv(h))
        })
    });
    StarReport {
        left_star_nilpotent: series.last().unwrap().is_trivial(),
        series: series.iter().map(Subgroup::order).collect(),
        table,
        commutator_form,
    }
}
