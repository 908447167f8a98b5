//! Skew left `k`-braces: groups `∘₀, …, ∘_k` on one set with
//! `a∘_i(b∘_{i−1}c) = (a∘_i b)∘_{i−1}a^{∘_{i−1}(−1)}∘_{i−1}(a∘_i c)` for `0 < i ≤ k`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::brace::left_axiom_witness;
use crate::error::{check_bound, Error, Result};
use crate::group::FiniteGroup;
use crate::report::{Check, Report};
use crate::rota_baxter::{derived_circle_group, RbOperator, Weight};

#[derive(Debug, Clone)]
pub struct MultiBrace {
    levels: Vec<FiniteGroup>,
}

#[derive(Serialize, Deserialize)]
struct MultiBraceRepr {
    order: usize,
    tables: Vec<Vec<Vec<usize>>>,
}

impl Serialize for MultiBrace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultiBraceRepr { order: self.order(), tables: self.levels.iter().map(FiniteGroup::rows).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiBrace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MultiBraceRepr::deserialize(d)?;
        let labels: Vec<String> = (0..r.order).map(|i| i.to_string()).collect();
        let levels = r
            .tables
            .into_iter()
            .enumerate()
            .map(|(i, rows)| {
                if rows.len() != r.order {
                    return Err(Error::Parse(format!(
                        "table {i} has {} rows, expected {}",
                        rows.len(),
                        r.order
                    )));
                }
                FiniteGroup::from_table(format!("∘{i}"), rows, labels.clone())
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        let m = MultiBrace::new(levels).map_err(serde::de::Error::custom)?;
        let report = verify_multibrace(&m);
        if !report.passed() {
            let bad = report.checks.iter().find(|c| !c.passed).unwrap();
            return Err(serde::de::Error::custom(format!(
                "{} fails with witness {:?}",
                bad.name, bad.witness
            )));
        }
        Ok(m)
    }
}

impl MultiBrace {
    /// Groups `∘₀, …, ∘_k` on a common set; the axioms are not checked here.
    pub fn new(levels: Vec<FiniteGroup>) -> Result<Self> {
        let Some(first) = levels.first() else {
            return Err(Error::precondition("a multibrace needs at least one table"));
        };
        let n = first.order();
        if let Some(g) = levels.iter().find(|g| g.order() != n) {
            return Err(Error::precondition(format!("table of order {} next to order {n}", g.order())));
        }
        Ok(MultiBrace { levels })
    }

    pub fn order(&self) -> usize {
        self.levels[0].order()
    }

    /// The `k` in "k-brace".
    pub fn k(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, i: usize) -> &FiniteGroup {
        &self.levels[i]
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }
}

/// One check per level `i = 1..=k`, witnessed by a failing triple.
pub fn verify_multibrace(m: &MultiBrace) -> Report {
    let mut r = Report::new(format!("skew left {}-brace", m.k()));
    for i in 1..=m.k() {
        let w = left_axiom_witness(&m.levels[i - 1], &m.levels[i]);
        r.push(Check::from_witness(format!("level_{i}"), w.map(|t| t.to_vec())));
    }
    let equal: Vec<bool> =
        (1..=m.k()).map(|i| m.levels[i].flat_table() == m.levels[i - 1].flat_table()).collect();
    r.set("level_equals_previous", equal);
    r
}

/// `x∘_{i+1}y = x∘_i B(x)∘_i y∘_i B(x)^{∘_i(−1)}` starting from `∘₀ = ·`.
/// `B` stays a Rota-Baxter operator on every `(G, ∘_i)`; that is re-checked
/// at each level.
pub fn build_multibrace(b: &RbOperator, k: usize, bounds: &Bounds) -> Result<MultiBrace> {
    b.require_weight_one("multibrace tower")?;
    if k == 0 {
        return Err(Error::precondition("k must be at least 1"));
    }
    check_bound("multibrace levels", k, bounds.multibrace_levels)?;
    let mut levels = vec![b.group().clone()];
    let mut op = b.clone();
    for i in 1..=k {
        let next = derived_circle_group(&op)?.with_name(format!("{}∘{i}", b.group().name()));
        op = RbOperator::new(Arc::new(next.clone()), b.map().clone(), Weight::One)
            .map_err(|e| Error::internal(format!("B is not an operator on level {i}: {e}")))?;
        levels.push(next);
    }
    let m = MultiBrace { levels };
    let report = verify_multibrace(&m);
    if !report.passed() {
        return Err(Error::internal(format!("tower fails its axioms: {report:?}")));
    }
    Ok(m)
}
