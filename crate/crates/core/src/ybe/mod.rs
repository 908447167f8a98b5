//! Set-theoretic solutions `S(x,y) = (σ_x(y), τ_y(x))` of the braid relation
//! `(S×id)(id×S)(S×id) = (id×S)(S×id)(id×S)` on a finite set.

mod construct;
mod rack;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Check, Report};

pub use construct::{
    brace_solution_report, conjugate_solution, direct_rb_solution, rack_form, solution_from_brace,
    solution_from_rb, DirectRbSolution, RackForm,
};
pub use rack::{
    conj_quandle, rack_iff_sweep, shift_rack, shift_solution, solution_from_rack, trivial_quandle, Rack,
    RackReport, RackSweep,
};

/// A map `X×X → X×X` stored as `pairs[x·n + y] = (σ_x(y), τ_y(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbeSolution {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct SolutionRepr {
    order: usize,
    pairs: Vec<Vec<[usize; 2]>>,
}

impl Serialize for YbeSolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.n;
        SolutionRepr {
            order: n,
            pairs: (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| {
                            let (a, b) = self.apply(x, y);
                            [a, b]
                        })
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for YbeSolution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SolutionRepr::deserialize(d)?;
        if r.pairs.len() != r.order || r.pairs.iter().any(|row| row.len() != r.order) {
            return Err(serde::de::Error::custom(format!("pairs must be {0}×{0}", r.order)));
        }
        let flat = r.pairs.into_iter().flatten().map(|[a, b]| (a, b)).collect();
        YbeSolution::new(r.order, flat).map_err(serde::de::Error::custom)
    }
}

impl YbeSolution {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 || pairs.len() != n * n {
            return Err(Error::Parse(format!("a map on {n} points needs {} pairs", n * n)));
        }
        if let Some(p) = pairs.iter().find(|p| p.0 >= n || p.1 >= n) {
            return Err(Error::Parse(format!("pair {p:?} is out of range 0..{n}")));
        }
        Ok(YbeSolution { n, pairs })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> (usize, usize)) -> Self {
        let pairs = (0..n * n).map(|k| f(k / n, k % n)).collect();
        YbeSolution { n, pairs }
    }

    /// `P(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.pairs[x * self.n + y]
    }

    /// `σ_x(y)`.
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.apply(x, y).0
    }

    /// `τ_y(x)`.
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.apply(x, y).1
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// Outcome of [`verify_solution`]; every field is a witness, `None` meaning
/// the property holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    pub braid: Option<[usize; 3]>,
    pub bijective: Option<[usize; 2]>,
    /// `x` with `σ_x` not a bijection.
    pub left_nondegenerate: Option<usize>,
    /// `y` with `τ_y` not a bijection.
    pub right_nondegenerate: Option<usize>,
    pub involutive: Option<[usize; 2]>,
}

impl SolutionReport {
    /// Braid relation and bijectivity.
    pub fn is_solution(&self) -> bool {
        self.braid.is_none() && self.bijective.is_none()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.left_nondegenerate.is_none() && self.right_nondegenerate.is_none()
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive.is_none()
    }

    pub fn to_report(&self, title: impl Into<String>) -> Report {
        let mut r = Report::new(title);
        r.push(Check::from_witness("braid_relation", self.braid.map(|w| w.to_vec())));
        r.push(Check::from_witness("bijective", self.bijective.map(|w| w.to_vec())));
        r.push(Check::from_witness("left_nondegenerate", self.left_nondegenerate.map(|w| vec![w])));
        r.push(Check::from_witness("right_nondegenerate", self.right_nondegenerate.map(|w| vec![w])));
        r.set("involutive", self.is_involutive());
        if let Some(w) = self.involutive {
            r.set("involutive_witness", w);
        }
        r
    }
}

/// First `(x, y, z)` where the two sides of the braid relation differ.
pub fn braid_witness(s: &YbeSolution) -> Option<[usize; 3]> {
    let n = s.n;
    (0..n).into_par_iter().find_map_first(|x| {
        for y in 0..n {
            let (a, b) = s.apply(x, y);
            for z in 0..n {
                let (c, d) = s.apply(b, z);
                let lhs = {
                    let (e, f) = s.apply(a, c);
                    (e, f, d)
                };
                let (p, q) = s.apply(y, z);
                let (r, t) = s.apply(x, p);
                let rhs = {
                    let (u, v) = s.apply(t, q);
                    (r, u, v)
                };
                if lhs != rhs {
                    return Some([x, y, z]);
                }
            }
        }
        None
    })
}

fn non_bijective(n: usize, f: impl Fn(usize) -> usize) -> bool {
    let mut seen = vec![false; n];
    (0..n).any(|i| std::mem::replace(&mut seen[f(i)], true))
}

pub fn verify_solution(s: &YbeSolution) -> SolutionReport {
    let n = s.n;
    let mut hit = vec![usize::MAX; n * n];
    let mut bijective = None;
    for k in 0..n * n {
        let (a, b) = s.pairs[k];
        let slot = &mut hit[a * n + b];
        if *slot != usize::MAX {
            bijective = Some([*slot, k]);
            break;
        }
        *slot = k;
    }
    let involutive = (0..n * n)
        .find(|&k| {
            let (a, b) = s.pairs[k];
            s.pairs[a * n + b] != (k / n, k % n)
        })
        .map(|k| [k / n, k % n]);
    SolutionReport {
        braid: braid_witness(s),
        bijective,
        left_nondegenerate: (0..n).find(|&x| non_bijective(n, |y| s.sigma(x, y))),
        right_nondegenerate: (0..n).find(|&y| non_bijective(n, |x| s.tau(y, x))),
        involutive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_is_involutive_solution() {
        let r = verify_solution(&YbeSolution::flip(4));
        assert!(r.is_solution() && r.is_nondegenerate() && r.is_involutive());
    }

    #[test]
    fn identity_map_is_a_degenerate_free_solution() {
        let id = YbeSolution::from_fn(3, |x, y| (x, y));
        let r = verify_solution(&id);
        assert!(r.is_solution());
        assert!(r.left_nondegenerate.is_some());
    }

    #[test]
    fn constant_map_fails_bijectivity() {
        let c = YbeSolution::from_fn(2, |_, _| (0, 0));
        assert!(verify_solution(&c).bijective.is_some());
    }

    #[test]
    fn serde_round_trip_and_range_check() {
        let s = YbeSolution::from_fn(3, |x, y| ((y + 1) % 3, x));
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<YbeSolution>(&j).unwrap(), s);
        let bad = r#"{"order":1,"pairs":[[[0,1]]]}"#;
        assert!(serde_json::from_str::<YbeSolution>(bad).is_err());
    }
}
