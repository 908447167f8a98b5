use super::SkewBrace;
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::{
    direct_product, regular_subgroups, semidirect_product, FiniteGroup, GroupMap, HolomorphGroup, Subgroup,
};
use crate::rota_baxter::{circle_table, derived_circle_group, RbOperator, Weight};

/// `G(B) = (G, ·, ∘_B)` with `x∘y = x·B(x)·y·B(x)⁻¹`.
pub fn brace_from_rb(b: &RbOperator) -> Result<SkewBrace> {
    b.require_weight_one("brace_from_rb")?;
    let g = b.group();
    let circ = derived_circle_group(b)?;
    SkewBrace::guaranteed(format!("{}(B)", g.name()), g.clone(), circ)
}

/// `(G, ·, ∘_C)` with `x∘y = C(x)·y·C(x)⁻¹·x` for a weight −1 operator.
pub fn brace_from_rb_neg1(c: &RbOperator) -> Result<SkewBrace> {
    if c.weight() != Weight::MinusOne {
        return Err(Error::precondition("brace_from_rb_neg1 needs a weight -1 operator"));
    }
    let g = c.group();
    let circ =
        FiniteGroup::from_flat(format!("{}∘", g.name()), g.order(), circle_table(c), g.labels().to_vec())
            .map_err(|e| Error::internal(format!("weight -1 circle product is not a group: {e}")))?;
    SkewBrace::guaranteed(format!("{}(C)", g.name()), g.clone(), circ)
}

/// The brace of a regular subgroup `H ≤ Hol(G)`: `a∘b = a·f(b)` where `(f, a)`
/// is the member of `H` over `a`.
pub fn brace_from_regular_subgroup(hol: &HolomorphGroup, h: &Subgroup) -> Result<SkewBrace> {
    if h.parent_order() != hol.group.order() || !hol.is_regular(h) {
        return Err(Error::precondition("subgroup is not regular in the holomorph"));
    }
    let g = &hol.base;
    let n = g.order();
    let mut over = vec![0; n];
    for &x in h.members() {
        let (f, a) = hol.decode(x);
        over[a] = f;
    }
    let table = (0..n * n).map(|k| g.mul(k / n, hol.auts[over[k / n]].apply(k % n))).collect();
    let circ = FiniteGroup::from_flat(format!("{}∘", g.name()), n, table, g.labels().to_vec())
        .map_err(|e| Error::internal(format!("regular subgroup product is not a group: {e}")))?;
    SkewBrace::guaranteed(format!("{}(H)", g.name()), g.clone(), circ)
}

/// `{(λ_a, a)}` inside `Hol(G)`, where `hol` is built on the additive group.
pub fn regular_subgroup_of(brace: &SkewBrace, hol: &HolomorphGroup) -> Result<Subgroup> {
    if hol.base.flat_table() != brace.add().flat_table() {
        return Err(Error::precondition("holomorph is not built on the additive group"));
    }
    let n = brace.order();
    let mut members = Vec::with_capacity(n);
    for a in brace.elements() {
        let lam = GroupMap::from_fn(n, |b| brace.lambda(a, b));
        let f =
            hol.aut_index(&lam).ok_or_else(|| Error::internal(format!("λ_{a} is not an automorphism")))?;
        members.push(hol.encode(f, a));
    }
    let h = Subgroup::from_members(&hol.group, &members)
        .map_err(|e| Error::internal(format!("{{(λ_a, a)}} is not a subgroup: {e}")))?;
    if !hol.is_regular(&h) {
        return Err(Error::internal("{(λ_a, a)} is not regular"));
    }
    Ok(h)
}

/// One brace per regular subgroup of `Hol(G)`, in subgroup order.
pub fn enumerate_braces(g: &FiniteGroup, bounds: &Bounds) -> Result<Vec<SkewBrace>> {
    let (hol, subs) = regular_subgroups(g, bounds)?;
    subs.iter()
        .enumerate()
        .map(|(i, h)| brace_from_regular_subgroup(&hol, h).map(|b| b.with_name(format!("{}#{i}", g.name()))))
        .collect()
}

/// Additive group `A × B`, multiplicative group `A ⋊_β B`, both with pair
/// index `a·|B| + b`.
pub fn semidirect_brace(a: &FiniteGroup, b: &FiniteGroup, beta: &[GroupMap]) -> Result<SkewBrace> {
    let add = direct_product(a, b);
    let circ = semidirect_product(a, b, beta)?;
    SkewBrace::new(format!("{}:{}", a.name(), b.name()), add, circ)
}
