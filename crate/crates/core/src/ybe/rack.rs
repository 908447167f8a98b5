use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{verify_solution, YbeSolution};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::report::{Check, Report};

/// A groupoid `x*y = table[x·n + y]`, checked on demand for the rack axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rack {
    n: usize,
    table: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RackRepr {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl Serialize for Rack {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RackRepr { order: self.n, table: self.table.chunks(self.n).map(<[usize]>::to_vec).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rack {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RackRepr::deserialize(d)?;
        if r.table.len() != r.order || r.table.iter().any(|row| row.len() != r.order) {
            return Err(serde::de::Error::custom(format!("table must be {0}×{0}", r.order)));
        }
        Rack::new(r.order, r.table.into_iter().flatten().collect()).map_err(serde::de::Error::custom)
    }
}

impl Rack {
    pub fn new(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 || table.len() != n * n || table.iter().any(|&v| v >= n) {
            return Err(Error::Parse(format!("an operation on {n} points needs {} entries in range", n * n)));
        }
        Ok(Rack { n, table })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        Rack { n, table: (0..n * n).map(|k| f(k / n, k % n)).collect() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn check(&self) -> RackReport {
        let n = self.n;
        let r1 = (0..n).find(|&x| {
            let mut seen = vec![false; n];
            (0..n).any(|y| std::mem::replace(&mut seen[self.op(y, x)], true))
        });
        let mut r2 = None;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.op(self.op(x, y), z) != self.op(self.op(x, z), self.op(y, z)) {
                        r2 = Some([x, y, z]);
                        break 'outer;
                    }
                }
            }
        }
        let quandle = (0..n).find(|&x| self.op(x, x) != x);
        // I_{x*y} = I_y I_x I_y⁻¹, i.e. (w*x)*y = (w*y)*(x*y) once w is replaced by w*y.
        let inner = if r1.is_some() {
            None
        } else {
            let inv = |y: usize, v: usize| (0..n).find(|&u| self.op(u, y) == v).unwrap();
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .find(|&(x, y)| {
                    (0..n).any(|w| self.op(w, self.op(x, y)) != self.op(self.op(inv(y, w), x), y))
                })
                .map(|(x, y)| [x, y])
        };
        RackReport { r1, r2, quandle, inner_relation: inner }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RackReport {
    /// `x` whose right translation `I_x` is not a bijection.
    pub r1: Option<usize>,
    pub r2: Option<[usize; 3]>,
    /// `x` with `x*x ≠ x`.
    pub quandle: Option<usize>,
    /// `(x, y)` with `I_{x*y} ≠ I_y I_x I_y⁻¹`; only evaluated when (r1) holds.
    pub inner_relation: Option<[usize; 2]>,
}

impl RackReport {
    pub fn is_rack(&self) -> bool {
        self.r1.is_none() && self.r2.is_none()
    }

    pub fn is_quandle(&self) -> bool {
        self.is_rack() && self.quandle.is_none()
    }

    pub fn to_report(&self, title: impl Into<String>) -> Report {
        let mut r = Report::new(title);
        r.push(Check::from_witness("r1_bijective_translations", self.r1.map(|x| vec![x])));
        r.push(Check::from_witness("r2_self_distributive", self.r2.map(|w| w.to_vec())));
        if self.r1.is_none() {
            r.push(Check::from_witness("inner_relation", self.inner_relation.map(|w| w.to_vec())));
        }
        r.set("quandle", self.is_quandle());
        r
    }
}

/// `x*y = x`.
pub fn trivial_quandle(n: usize) -> Rack {
    Rack::from_fn(n, |x, _| x)
}

/// `x*y = y⁻¹xy`.
pub fn conj_quandle(g: &FiniteGroup) -> Rack {
    Rack::from_fn(g.order(), |x, y| g.conj(x, y))
}

/// `y*x = y + 1` on `ℤ_n`.
pub fn shift_rack(n: usize) -> Rack {
    Rack::from_fn(n, |y, _| (y + 1) % n)
}

/// `S(x,y) = (y + 1, x)` on `ℤ_n`.
pub fn shift_solution(n: usize) -> YbeSolution {
    YbeSolution::from_fn(n, |x, y| ((y + 1) % n, x))
}

/// `S(x,y) = (y, x*y)`.
pub fn solution_from_rack(r: &Rack) -> YbeSolution {
    YbeSolution::from_fn(r.n, |x, y| (y, r.op(x, y)))
}

/// Agreement of "`(y, x*y)` is a non-degenerate solution" with "rack".
#[derive(Debug, Clone, Serialize)]
pub struct RackSweep {
    pub exhaustive_orders: Vec<usize>,
    pub sampled_order: usize,
    pub samples: usize,
    pub seed: u64,
    pub tables_checked: usize,
    pub racks_found: usize,
    pub disagreements: usize,
    pub first_disagreement: Option<Vec<usize>>,
}

fn compare(r: &Rack, sweep: &mut RackSweep) {
    let rack = r.check().is_rack();
    let v = verify_solution(&solution_from_rack(r));
    let solution = v.is_solution() && v.is_nondegenerate();
    sweep.tables_checked += 1;
    sweep.racks_found += usize::from(rack);
    if rack != solution {
        sweep.disagreements += 1;
        sweep.first_disagreement.get_or_insert_with(|| r.table.clone());
    }
}

/// Every table of order `1..=max_exhaustive`, then `samples` random tables of
/// order `max_exhaustive + 1` drawn from a seeded generator.
pub fn rack_iff_sweep(max_exhaustive: usize, samples: usize, seed: u64) -> RackSweep {
    let mut sweep = RackSweep {
        exhaustive_orders: (1..=max_exhaustive).collect(),
        sampled_order: max_exhaustive + 1,
        samples,
        seed,
        tables_checked: 0,
        racks_found: 0,
        disagreements: 0,
        first_disagreement: None,
    };
    for n in 1..=max_exhaustive {
        let cells = n * n;
        let total = n.pow(cells as u32);
        for mut code in 0..total {
            let table = (0..cells)
                .map(|_| {
                    let v = code % n;
                    code /= n;
                    v
                })
                .collect();
            compare(&Rack { n, table }, &mut sweep);
        }
    }
    let n = max_exhaustive + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        // Half the samples are perturbed racks, so both outcomes occur.
        let r = if i % 2 == 0 {
            Rack::from_fn(n, |_, _| rng.random_range(0..n))
        } else {
            let perm = random_perm(&mut rng, n);
            let mut r = Rack::from_fn(n, |x, _| perm[x]);
            if i % 4 == 1 {
                let k = rng.random_range(0..n * n);
                r.table[k] = rng.random_range(0..n);
            }
            r
        };
        compare(&r, &mut sweep);
    }
    sweep
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;

    #[test]
    fn trivial_quandle_gives_flip() {
        let q = trivial_quandle(4);
        assert!(q.check().is_quandle());
        assert_eq!(solution_from_rack(&q), YbeSolution::flip(4));
    }

    #[test]
    fn conjugation_quandle_of_s3() {
        let r = conj_quandle(&symmetric(3).unwrap()).check();
        assert!(r.is_quandle());
        assert_eq!(r.inner_relation, None);
    }

    #[test]
    fn shift_rack_is_not_a_quandle() {
        for n in 2..=6 {
            let r = shift_rack(n).check();
            assert!(r.is_rack());
            assert_eq!(r.quandle, Some(0));
        }
    }

    #[test]
    fn shift_solution_is_non_involutive() {
        for n in 2..=6 {
            let v = verify_solution(&shift_solution(n));
            assert!(v.is_solution() && v.is_nondegenerate());
            assert!(!v.is_involutive());
        }
    }

    #[test]
    fn non_rack_breaks_braid() {
        // (r2) fails: x*y = x + y mod 3 is not right self-distributive.
        let r = Rack::from_fn(3, |x, y| (x + y) % 3);
        assert!(r.check().r2.is_some());
        assert!(verify_solution(&solution_from_rack(&r)).braid.is_some());
    }

    #[test]
    fn iff_holds_on_small_tables() {
        let s = rack_iff_sweep(3, 200, 7);
        assert_eq!(s.tables_checked, 1 + 16 + 19683 + 200);
        assert_eq!(s.disagreements, 0);
        assert!(s.racks_found > 0);
    }

    #[test]
    fn serde_validates() {
        let r = conj_quandle(&symmetric(3).unwrap());
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<Rack>(&j).unwrap(), r);
        assert!(serde_json::from_str::<Rack>(r#"{"order":2,"table":[[0,2],[1,1]]}"#).is_err());
    }
}
