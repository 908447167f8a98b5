//! Finite groups stored as multiplication tables over element indices.
//!
//! Elements are plain `usize` indices into the table and the identity is
//! always index 0. Conjugation is the right action `a^b = b⁻¹ab` and the
//! commutator is `[a, b] = a⁻¹b⁻¹ab`, so that `yx = xy[y, x]`.

mod build;
mod holomorph;
mod hom;
mod structure;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use build::{
    alternating, cyclic, dihedral, direct_power, direct_product, opposite, quaternion8, semidirect_product,
    symmetric, GroupSpec,
};
pub use holomorph::{holomorph, regular_subgroups, HolomorphGroup};
pub use hom::{
    automorphisms, automorphisms_brute_force, endomorphisms, for_each_homomorphism, generating_set,
    homomorphisms, is_homomorphism, isomorphic, HomSearch,
};
pub(crate) use structure::structure_report_bounded;
pub use structure::{
    exact_factorizations, is_metabelian, is_nilpotent, is_solvable, structure_report, subgroups,
    upper_central_series, StructureReport,
};

/// The first axiom a candidate table violates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "defect", rename_all = "snake_case")]
pub enum TableDefect {
    Empty,
    NotSquare { row: usize, len: usize },
    Closure { a: usize, b: usize, value: usize },
    Associativity { a: usize, b: usize, c: usize },
    Identity { a: usize },
    Inverse { a: usize },
}

impl fmt::Display for TableDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableDefect::Empty => write!(f, "empty table"),
            TableDefect::NotSquare { row, len } => write!(f, "row {row} has length {len}"),
            TableDefect::Closure { a, b, value } => {
                write!(f, "closure fails: {a}·{b} = {value} is out of range")
            }
            TableDefect::Associativity { a, b, c } => {
                write!(f, "associativity fails at ({a}, {b}, {c})")
            }
            TableDefect::Identity { a } => write!(f, "index 0 is not an identity for {a}"),
            TableDefect::Inverse { a } => write!(f, "element {a} has no two-sided inverse"),
        }
    }
}

/// Check a square table against the group axioms, in the order closure,
/// associativity, identity (at index 0), inverses.
pub fn verify_group_table(rows: &[Vec<usize>]) -> Result<(), TableDefect> {
    let n = rows.len();
    if n == 0 {
        return Err(TableDefect::Empty);
    }
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(TableDefect::NotSquare { row, len: r.len() });
        }
    }
    for (a, r) in rows.iter().enumerate() {
        for (b, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(TableDefect::Closure { a, b, value });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = rows[a][b];
            for c in 0..n {
                if rows[ab][c] != rows[a][rows[b][c]] {
                    return Err(TableDefect::Associativity { a, b, c });
                }
            }
        }
    }
    for (a, row) in rows.iter().enumerate() {
        if rows[0][a] != a || row[0] != a {
            return Err(TableDefect::Identity { a });
        }
    }
    for (a, row) in rows.iter().enumerate() {
        if !(0..n).any(|b| row[b] == 0 && rows[b][a] == 0) {
            return Err(TableDefect::Inverse { a });
        }
    }
    Ok(())
}

/// A validated finite group.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Validate `rows` and build a group. `labels` must have one entry per element.
    pub fn from_table(name: impl Into<String>, rows: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        verify_group_table(&rows).map_err(Error::InvalidTable)?;
        if labels.len() != rows.len() {
            return Err(Error::precondition(format!(
                "{} labels for a table of order {}",
                labels.len(),
                rows.len()
            )));
        }
        let order = rows.len();
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        Ok(Self::assemble(name.into(), order, table, labels))
    }

    /// Build from a flat row-major table the caller has already validated by
    /// construction (e.g. products of known groups).
    pub(crate) fn from_flat_trusted(
        name: String,
        order: usize,
        table: Vec<usize>,
        labels: Vec<String>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        Self::assemble(name, order, table, labels)
    }

    /// Build from a flat row-major table, running the full axiom check.
    pub fn from_flat(
        name: impl Into<String>,
        order: usize,
        table: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let rows = table.chunks(order.max(1)).map(<[usize]>::to_vec).collect();
        Self::from_table(name, rows, labels)
    }

    fn assemble(name: String, order: usize, table: Vec<usize>, labels: Vec<String>) -> Self {
        let mut inverses = vec![0; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&x| x == 0).expect("validated group");
        }
        FiniteGroup { name, order, table, inverses, labels }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    /// `a^b = b⁻¹ab`.
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `[a, b] = a⁻¹b⁻¹ab`.
    #[inline]
    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    /// Short hex digest of the table, usable as a group key when no name is shared.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.order as u64).to_le_bytes());
        for &x in &self.table {
            hasher.update((x as u32).to_le_bytes());
        }
        hex::encode(&hasher.finalize()[..8])
    }

    /// Same group, elements relabelled through the bijection `perm`
    /// (old index `i` becomes new index `perm[i]`). `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if !is_permutation(perm, self.order) || perm[0] != 0 {
            return Err(Error::precondition("relabelling must be a permutation fixing 0"));
        }
        let mut table = vec![0; self.order * self.order];
        let mut labels = vec![String::new(); self.order];
        for a in self.elements() {
            labels[perm[a]] = self.labels[a].clone();
            for b in self.elements() {
                table[perm[a] * self.order + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Ok(Self::from_flat_trusted(self.name.clone(), self.order, table, labels))
    }

    /// Index of the transposition `(i i+1)` in a group built by [`symmetric`].
    pub fn coxeter_generator(&self, i: usize) -> Option<usize> {
        self.index_of(&format!("({} {})", i, i + 1))
    }

    /// Evaluate a word `s_{i1} s_{i2} …` in the Coxeter generators of a symmetric group.
    pub fn coxeter_word(&self, word: &[usize]) -> Option<usize> {
        let mut acc = 0;
        for &i in word {
            acc = self.mul(acc, self.coxeter_generator(i)?);
        }
        Some(acc)
    }

    pub fn center(&self) -> Subgroup {
        let members =
            self.elements().filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z))).collect();
        Subgroup::from_sorted_unchecked(self.order, members)
    }
}

pub(crate) fn is_permutation(p: &[usize], n: usize) -> bool {
    if p.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// A total map `G → G` stored as an image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupMap(Vec<usize>);

impl GroupMap {
    pub fn new(images: Vec<usize>) -> Self {
        GroupMap(images)
    }

    pub fn identity(n: usize) -> Self {
        GroupMap((0..n).collect())
    }

    pub fn constant(n: usize, value: usize) -> Self {
        GroupMap(vec![value; n])
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> usize) -> Self {
        GroupMap((0..n).map(f).collect())
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn into_images(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn in_range(&self, n: usize) -> bool {
        self.0.len() == n && self.0.iter().all(|&x| x < n)
    }

    pub fn is_bijective(&self) -> bool {
        is_permutation(&self.0, self.0.len())
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        GroupMap(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Option<GroupMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Some(GroupMap(inv))
    }

    /// The image set, sorted.
    pub fn image_set(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// A subgroup, stored as the sorted list of its members.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_sorted_unchecked(parent_order: usize, members: Vec<usize>) -> Self {
        Subgroup { parent_order, members }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(g.order(), vec![0])
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(g.order(), g.elements().collect())
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        let mut seen = vec![false; g.order()];
        seen[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in gens {
                let y = g.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Self::from_sorted_unchecked(g.order(), members)
    }

    /// Validate that `members` is a subgroup of `g`.
    pub fn from_members(g: &FiniteGroup, members: &[usize]) -> Result<Self> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.iter().any(|&x| x >= g.order()) {
            return Err(Error::precondition("subgroup member out of range"));
        }
        if m.first() != Some(&0) {
            return Err(Error::precondition("subset does not contain the identity"));
        }
        let s = Self::from_sorted_unchecked(g.order(), m);
        for &a in &s.members {
            if !s.contains(g.inv(a)) {
                return Err(Error::precondition(format!("not closed under inverse at {a}")));
            }
            for &b in &s.members {
                if !s.contains(g.mul(a, b)) {
                    return Err(Error::precondition(format!("not closed under product at ({a}, {b})")));
                }
            }
        }
        Ok(s)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent_order
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.members.iter().all(|&h| g.elements().all(|x| self.contains(g.conj(h, x))))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Self::from_sorted_unchecked(self.parent_order, members)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// The subgroup as a group in its own right; element `i` of the result is
    /// `self.members()[i]`.
    pub fn as_group(&self, g: &FiniteGroup, name: impl Into<String>) -> FiniteGroup {
        let pos: HashMap<usize, usize> = self.members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = self.members.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos[&g.mul(a, b)]);
            }
        }
        let labels = self.members.iter().map(|&x| g.label(x).to_owned()).collect();
        FiniteGroup::from_flat_trusted(name.into(), n, table, labels)
    }

    /// Quotient by a normal subgroup. Cosets are ordered by their least member,
    /// which also supplies the coset label.
    pub fn quotient(&self, g: &FiniteGroup) -> Result<Quotient> {
        if !self.is_normal(g) {
            return Err(Error::precondition("quotient by a non-normal subgroup"));
        }
        let n = g.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for &h in &self.members {
                coset_of[g.mul(x, h)] = idx;
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[g.mul(a, b)]);
            }
        }
        let labels = reps.iter().map(|&r| format!("{}N", g.label(r))).collect();
        let group = FiniteGroup::from_flat_trusted(format!("{}/N", g.name()), m, table, labels);
        Ok(Quotient { group, coset_of, representatives: reps })
    }
}

/// A quotient group together with the projection from the parent.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `coset_of[x]` is the quotient element containing `x`.
    pub coset_of: Vec<usize>,
    /// Least member of each coset.
    pub representatives: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_table_passes() {
        let g = cyclic(4).unwrap();
        assert_eq!(verify_group_table(&g.rows()), Ok(()));
    }

    #[test]
    fn closure_failure_reported() {
        let mut rows = cyclic(4).unwrap().rows();
        rows[1][1] = 4;
        assert_eq!(verify_group_table(&rows), Err(TableDefect::Closure { a: 1, b: 1, value: 4 }));
    }

    #[test]
    fn non_associative_loop_reports_witness() {
        // Smallest non-associative loop (order 5), identity at 0.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match verify_group_table(&rows) {
            Err(TableDefect::Associativity { a, b, c }) => {
                assert_ne!(rows[rows[a][b]][c], rows[a][rows[b][c]]);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn identity_and_inverse_failures() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(verify_group_table(&rows), Err(TableDefect::Identity { a: 0 }));
        // Associative monoid {0, 1} with 1·1 = 1: identity 0, but 1 has no inverse.
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(verify_group_table(&rows), Err(TableDefect::Inverse { a: 1 }));
    }

    #[test]
    fn commutator_convention() {
        let g = symmetric(3).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(g.mul(y, x), g.mul(g.mul(x, y), g.comm(y, x)));
            }
        }
    }

    #[test]
    fn subgroup_closure_and_normality() {
        let g = symmetric(3).unwrap();
        let s1 = g.coxeter_generator(1).unwrap();
        let s2 = g.coxeter_generator(2).unwrap();
        assert_eq!(Subgroup::generated(&g, &[s1]).order(), 2);
        let a3 = Subgroup::generated(&g, &[g.mul(s1, s2)]);
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal(&g));
        let q = a3.quotient(&g).unwrap();
        assert!(isomorphic(&q.group, &cyclic(2).unwrap()).is_some());
        let s2_sub = Subgroup::generated(&g, &[s2]);
        assert!(!s2_sub.is_normal(&g));
        assert!(s2_sub.quotient(&g).is_err());
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let g = cyclic(6).unwrap();
        assert!(Subgroup::from_members(&g, &[0, 2, 4]).is_ok());
        assert!(Subgroup::from_members(&g, &[0, 1]).is_err());
        assert!(Subgroup::from_members(&g, &[2, 4]).is_err());
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = symmetric(3).unwrap();
        let h = g.relabel(&[0, 3, 5, 1, 2, 4]).unwrap();
        assert!(isomorphic(&g, &h).is_some());
        assert!(g.relabel(&[1, 0, 2, 3, 4, 5]).is_err());
    }
}
