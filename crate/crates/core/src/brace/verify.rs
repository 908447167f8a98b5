use rayon::prelude::*;
use serde::Serialize;

use crate::group::FiniteGroup;
use crate::report::{Check, Report};

/// Which of the two trivial shapes a brace has, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BraceKind {
    /// `∘ = ·`.
    TrivialEqual,
    /// `x·y = y∘x`.
    TrivialOpposite,
    /// Both at once (abelian additive group with `∘ = ·`).
    TrivialBoth,
    Nontrivial,
}

impl BraceKind {
    pub fn is_trivial(self) -> bool {
        self != BraceKind::Nontrivial
    }
}

pub(crate) fn brace_kind(add: &FiniteGroup, circ: &FiniteGroup) -> BraceKind {
    let equal = add.flat_table() == circ.flat_table();
    let opp = add.elements().all(|x| add.elements().all(|y| add.mul(x, y) == circ.mul(y, x)));
    match (equal, opp) {
        (true, true) => BraceKind::TrivialBoth,
        (true, false) => BraceKind::TrivialEqual,
        (false, true) => BraceKind::TrivialOpposite,
        (false, false) => BraceKind::Nontrivial,
    }
}

fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool + Sync) -> Option<[usize; 3]> {
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    })
}

/// First `(a, b, c)` with `a∘(b·c) ≠ (a∘b)·a⁻¹·(a∘c)`.
pub fn left_axiom_witness(add: &FiniteGroup, circ: &FiniteGroup) -> Option<[usize; 3]> {
    first_triple(add.order(), |a, b, c| {
        let lhs = circ.mul(a, add.mul(b, c));
        let rhs = add.product(&[circ.mul(a, b), add.inv(a), circ.mul(a, c)]);
        lhs != rhs
    })
}

/// First `(a, b, c)` with `(b·c)∘a ≠ (b∘a)·a⁻¹·(c∘a)`.
pub fn right_axiom_witness(add: &FiniteGroup, circ: &FiniteGroup) -> Option<[usize; 3]> {
    first_triple(add.order(), |a, b, c| {
        let lhs = circ.mul(add.mul(b, c), a);
        let rhs = add.product(&[circ.mul(b, a), add.inv(a), circ.mul(c, a)]);
        lhs != rhs
    })
}

/// Flags for a pair of group tables on one set.
#[derive(Debug, Clone, Serialize)]
pub struct BraceReport {
    pub left: Option<[usize; 3]>,
    pub right: Option<[usize; 3]>,
    pub kind: BraceKind,
    /// Additive group abelian.
    pub is_brace: bool,
}

impl BraceReport {
    pub fn is_left(&self) -> bool {
        self.left.is_none()
    }

    pub fn is_two_sided(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }

    pub fn to_report(&self, title: impl Into<String>) -> Report {
        let mut r = Report::new(title);
        r.push(Check::from_witness("left_brace", self.left.map(|w| w.to_vec())));
        r.set("right_brace", self.right.is_none());
        if let Some(w) = self.right {
            r.set("right_brace_witness", w);
        }
        r.set("two_sided", self.is_two_sided());
        r.set("kind", self.kind);
        r.set("trivial", self.kind.is_trivial());
        r.set("brace", self.is_brace);
        r
    }
}

pub fn verify_brace(add: &FiniteGroup, circ: &FiniteGroup) -> BraceReport {
    BraceReport {
        left: left_axiom_witness(add, circ),
        right: right_axiom_witness(add, circ),
        kind: brace_kind(add, circ),
        is_brace: add.is_abelian(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, opposite, symmetric};

    #[test]
    fn trivial_brace_is_two_sided() {
        let g = symmetric(3).unwrap();
        let r = verify_brace(&g, &g);
        assert!(r.is_two_sided());
        assert_eq!(r.kind, BraceKind::TrivialEqual);
        assert!(!r.is_brace);
    }

    #[test]
    fn opposite_is_trivial_left_brace() {
        let g = symmetric(3).unwrap();
        let r = verify_brace(&g, &opposite(&g));
        assert!(r.is_left());
        assert_eq!(r.kind, BraceKind::TrivialOpposite);
    }

    #[test]
    fn abelian_trivial_is_both() {
        let g = cyclic(4).unwrap();
        let r = verify_brace(&g, &g);
        assert_eq!(r.kind, BraceKind::TrivialBoth);
        assert!(r.is_brace);
    }

    #[test]
    fn mismatched_tables_fail_left_axiom() {
        // Relabel C6 so that the two tables disagree in a non-brace way.
        let add = cyclic(6).unwrap();
        let circ = symmetric(3).unwrap();
        assert!(left_axiom_witness(&add, &circ).is_some());
    }
}
