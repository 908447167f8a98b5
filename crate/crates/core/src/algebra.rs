//! Weight 1 Rota–Baxter operators on the split algebra `kⁿ = ke₁ ⊕ … ⊕ keₙ`
//! with `eᵢeⱼ = δᵢⱼeᵢ`, written as matrices `R(eᵢ) = Σₖ rᵢₖeₖ`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{direct_power, is_homomorphism, FiniteGroup, GroupMap};
use crate::rota_baxter::{RbOperator, Weight};

/// Largest dimension accepted by the enumerations.
pub const MAX_DIM: usize = 4;

/// An `n×n` matrix with entries in `{−1, 0, 1}`; `r[i][k]` is `rᵢₖ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RbMatrixRepr", into = "RbMatrixRepr")]
pub struct RbMatrix {
    n: usize,
    r: Vec<Vec<i8>>,
}

#[derive(Serialize, Deserialize)]
struct RbMatrixRepr {
    n: usize,
    r: Vec<Vec<i8>>,
}

impl TryFrom<RbMatrixRepr> for RbMatrix {
    type Error = Error;

    fn try_from(m: RbMatrixRepr) -> Result<Self> {
        RbMatrix::new(m.r).and_then(|x| {
            if x.n == m.n {
                Ok(x)
            } else {
                Err(Error::Parse(format!("n = {} but the matrix has {} rows", m.n, x.n)))
            }
        })
    }
}

impl From<RbMatrix> for RbMatrixRepr {
    fn from(m: RbMatrix) -> Self {
        RbMatrixRepr { n: m.n, r: m.r }
    }
}

impl RbMatrix {
    pub fn new(r: Vec<Vec<i8>>) -> Result<Self> {
        let n = r.len();
        if n == 0 {
            return Err(Error::Parse("matrix must have at least one row".into()));
        }
        for (i, row) in r.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("row {i} has length {}, expected {n}", row.len())));
            }
            if let Some(v) = row.iter().find(|v| !(-1..=1).contains(*v)) {
                return Err(Error::Parse(format!("entry {v} in row {i} is outside {{-1, 0, 1}}")));
            }
        }
        Ok(RbMatrix { n, r })
    }

    pub fn zero(n: usize) -> Self {
        RbMatrix { n, r: vec![vec![0; n]; n] }
    }

    pub fn minus_identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.r[i][i] = -1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, k: usize) -> i8 {
        self.r[i][k]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.r
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|k| self.r[i][k] == 0))
    }

    /// `P·R·Pᵀ` for the permutation `eᵢ ↦ e_{p(i)}`.
    pub fn permuted(&self, p: &[usize]) -> Self {
        let mut r = vec![vec![0; self.n]; self.n];
        for i in 0..self.n {
            for k in 0..self.n {
                r[p[i]][p[k]] = self.r[i][k];
            }
        }
        RbMatrix { n: self.n, r }
    }
}

impl fmt::Display for RbMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.r {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The combinatorial conditions (1)–(3) on the entries.
pub fn check_conditions(m: &RbMatrix) -> bool {
    let n = m.n;
    let r = |i: usize, k: usize| m.r[i][k];
    for i in 0..n {
        let ok = match r(i, i) {
            0 => (0..n).all(|k| k == i || matches!(r(i, k), 0 | 1)),
            -1 => (0..n).all(|k| k == i || matches!(r(i, k), 0 | -1)),
            _ => false,
        };
        if !ok {
            return false;
        }
    }
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let others = (0..n).filter(|&l| l != i && l != k);
            if r(i, k) == 0 && r(k, i) == 0 && others.clone().any(|l| r(i, l) * r(k, l) != 0) {
                return false;
            }
            if r(i, k) != 0 {
                if r(k, i) != 0 {
                    return false;
                }
                if others.clone().any(|l| r(k, l) != 0 && r(i, l) != r(i, k)) {
                    return false;
                }
            }
        }
    }
    true
}

/// `R(x)R(y) = R(R(x)y + xR(y) + xy)` on every pair of basis vectors, in
/// exact integer arithmetic.
pub fn check_rb_identity_algebra(m: &RbMatrix) -> bool {
    let n = m.n;
    let apply = |v: &[i64]| -> Vec<i64> {
        (0..n).map(|k| (0..n).map(|i| v[i] * i64::from(m.r[i][k])).sum()).collect()
    };
    let basis = |i: usize| -> Vec<i64> { (0..n).map(|k| i64::from(k == i)).collect() };
    let mul = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x * y).collect() };
    for i in 0..n {
        let ei = basis(i);
        let rei = apply(&ei);
        for j in 0..n {
            let ej = basis(j);
            let rej = apply(&ej);
            let lhs = mul(&rei, &rej);
            let inner: Vec<i64> = mul(&rei, &ej)
                .iter()
                .zip(mul(&ei, &rej))
                .zip(mul(&ei, &ej))
                .map(|((a, b), c)| a + b + c)
                .collect();
            if lhs != apply(&inner) {
                return false;
            }
        }
    }
    true
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::BoundExceeded { what: "algebra dimension", size: n, bound: MAX_DIM });
    }
    Ok(())
}

/// The `2ⁿ` rows allowed by condition (1) for row `i`, sorted.
fn row_patterns(n: usize, i: usize) -> Vec<Vec<i8>> {
    let others: Vec<usize> = (0..n).filter(|&k| k != i).collect();
    let mut out = Vec::new();
    for (diag, off) in [(0i8, 1i8), (-1, -1)] {
        for mask in 0..(1u32 << others.len()) {
            let mut row = vec![0i8; n];
            row[i] = diag;
            for (bit, &k) in others.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    row[k] = off;
                }
            }
            out.push(row);
        }
    }
    out.sort();
    out
}

/// All weight 1 operators on `kⁿ`, sorted lexicographically.
pub fn enumerate_algebra_rb(n: usize) -> Result<Vec<RbMatrix>> {
    check_dim(n)?;
    let patterns: Vec<Vec<Vec<i8>>> = (0..n).map(|i| row_patterns(n, i)).collect();
    let mut out: Vec<RbMatrix> = patterns[0]
        .par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let mut rows = vec![first.clone()];
            extend(&patterns, &mut rows, &mut found);
            found
        })
        .collect();
    out.sort();
    Ok(out)
}

fn extend(patterns: &[Vec<Vec<i8>>], rows: &mut Vec<Vec<i8>>, out: &mut Vec<RbMatrix>) {
    if rows.len() == patterns.len() {
        let m = RbMatrix { n: rows.len(), r: rows.clone() };
        if check_conditions(&m) {
            out.push(m);
        }
        return;
    }
    for p in &patterns[rows.len()] {
        rows.push(p.clone());
        extend(patterns, rows, out);
        rows.pop();
    }
}

/// Every matrix over `{−1, 0, 1}` of size `n` (there are `3^{n²}`).
pub fn all_candidates(n: usize) -> impl Iterator<Item = RbMatrix> {
    let cells = n * n;
    (0..3u64.pow(cells as u32)).map(move |mut code| {
        let mut r = vec![vec![0i8; n]; n];
        for c in (0..cells).rev() {
            r[c / n][c % n] = (code % 3) as i8 - 1;
            code /= 3;
        }
        RbMatrix { n, r }
    })
}

/// `2ⁿ(n+1)ⁿ⁻¹`.
pub fn expected_count(n: usize) -> u64 {
    2u64.pow(n as u32) * (n as u64 + 1).pow(n.saturating_sub(1) as u32)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Orbits of operators on `kⁿ` under `Aut(kⁿ) ≅ Sₙ`.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraOrbits {
    pub n: usize,
    pub count: usize,
    /// Lexicographically least member of each orbit, sorted.
    pub representatives: Vec<RbMatrix>,
}

pub fn algebra_rb_orbits(n: usize) -> Result<AlgebraOrbits> {
    let all = enumerate_algebra_rb(n)?;
    let perms = permutations(n);
    let reps: BTreeSet<RbMatrix> = all
        .iter()
        .map(|m| perms.iter().map(|p| m.permuted(p)).min().expect("at least one permutation"))
        .collect();
    Ok(AlgebraOrbits { n, count: reps.len(), representatives: reps.into_iter().collect() })
}

/// The operator on `Gⁿ` induced by an upper-triangular matrix and
/// automorphisms `ψ₂, …, ψₙ`:
/// `tᵢ = gᵢ^{rᵢᵢ} ψᵢ(g_{i−1}^{r_{i−1,i}} ψ_{i−1}(⋯ ψ₂(g₁^{r₁ᵢ})⋯))`.
///
/// Returns the direct power and the verified operator on it.
pub fn group_rb_from_matrix(
    m: &RbMatrix,
    g: &FiniteGroup,
    psis: &[GroupMap],
) -> Result<(std::sync::Arc<FiniteGroup>, RbOperator)> {
    let n = m.n;
    if !check_conditions(m) {
        return Err(Error::precondition("matrix is not a Rota-Baxter operator"));
    }
    if !m.is_upper_triangular() {
        return Err(Error::precondition("matrix is not upper-triangular"));
    }
    if psis.len() + 1 != n {
        return Err(Error::precondition(format!("expected {} automorphisms, got {}", n - 1, psis.len())));
    }
    for (k, psi) in psis.iter().enumerate() {
        if !(psi.is_bijective() && is_homomorphism(g, g, psi)) {
            return Err(Error::precondition(format!("ψ{} is not an automorphism", k + 2)));
        }
    }
    let power = std::sync::Arc::new(direct_power(g, n)?);
    let q = g.order();
    let pow = |x: usize, e: i8| g.pow(x, i64::from(e));
    let decode = |mut x: usize| -> Vec<usize> {
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev() {
            *slot = x % q;
            x /= q;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |acc, &c| acc * q + c);
    let map = GroupMap::from_fn(power.order(), |x| {
        let gs = decode(x);
        let ts: Vec<usize> = (0..n)
            .map(|i| {
                // u runs over g₁^{r₁ᵢ}, then g_j^{r_jᵢ}·ψ_j(u) for j = 2..=i.
                let mut u = pow(gs[0], m.r[0][i]);
                for j in 1..=i {
                    u = g.mul(pow(gs[j], m.r[j][i]), psis[j - 1].apply(u));
                }
                u
            })
            .collect();
        encode(&ts)
    });
    let op = RbOperator::guaranteed(power.clone(), map, Weight::One, "operator from an algebra matrix")?;
    Ok((power, op))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{automorphisms, cyclic, symmetric};

    fn mat(r: &[&[i8]]) -> RbMatrix {
        RbMatrix::new(r.iter().map(|row| row.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert!(check_conditions(&RbMatrix::zero(3)));
        assert!(check_conditions(&RbMatrix::minus_identity(3)));
        assert!(!check_conditions(&mat(&[&[0, 1], &[1, 0]])));
        assert!(check_rb_identity_algebra(&RbMatrix::zero(2)));
        assert!(!check_rb_identity_algebra(&mat(&[&[1]])));
    }

    #[test]
    fn entries_out_of_range_rejected() {
        assert!(RbMatrix::new(vec![vec![2]]).is_err());
        assert!(RbMatrix::new(vec![vec![0, 1]]).is_err());
        assert!(serde_json::from_str::<RbMatrix>(r#"{"n":1,"r":[[-2]]}"#).is_err());
        let m: RbMatrix = serde_json::from_str(r#"{"n":2,"r":[[0,1],[0,-1]]}"#).unwrap();
        assert_eq!(m.get(0, 1), 1);
    }

    #[test]
    fn conditions_match_identity_for_n_up_to_2() {
        for n in 1..=2 {
            for m in all_candidates(n) {
                assert_eq!(check_conditions(&m), check_rb_identity_algebra(&m), "{m}");
            }
        }
    }

    #[test]
    fn row_patterns_have_expected_size() {
        for n in 1..=4 {
            for i in 0..n {
                assert_eq!(row_patterns(n, i).len(), 1 << n);
            }
        }
    }

    #[test]
    fn counts_and_orbits() {
        for n in 1..=3 {
            assert_eq!(enumerate_algebra_rb(n).unwrap().len() as u64, expected_count(n));
        }
        assert_eq!(algebra_rb_orbits(1).unwrap().count, 2);
        assert_eq!(algebra_rb_orbits(2).unwrap().count, 7);
        assert!(enumerate_algebra_rb(5).is_err());
    }

    #[test]
    fn lift_trivial_matrices() {
        let g = symmetric(3).unwrap();
        let id = GroupMap::identity(6);
        let (p, b) = group_rb_from_matrix(&RbMatrix::zero(2), &g, std::slice::from_ref(&id)).unwrap();
        assert_eq!(b.map(), &GroupMap::constant(p.order(), 0));
        let (p, b) = group_rb_from_matrix(&RbMatrix::minus_identity(2), &g, &[id]).unwrap();
        assert!(p.elements().all(|x| b.apply(x) == p.inv(x)));
    }

    #[test]
    fn lift_printed_s3_matrix() {
        let g = symmetric(3).unwrap();
        let m = mat(&[&[-1, -1], &[0, -1]]);
        group_rb_from_matrix(&m, &g, &[GroupMap::identity(6)]).unwrap();
    }

    #[test]
    fn lift_rejects_lower_triangular() {
        let g = cyclic(2).unwrap();
        let m = mat(&[&[-1, 0], &[-1, -1]]);
        assert!(check_conditions(&m));
        assert!(group_rb_from_matrix(&m, &g, &[GroupMap::identity(2)]).is_err());
    }

    #[test]
    fn every_upper_triangular_lift_verifies_on_s3() {
        let g = symmetric(3).unwrap();
        let auts = automorphisms(&g, 24).unwrap();
        for m in enumerate_algebra_rb(2).unwrap().iter().filter(|m| m.is_upper_triangular()) {
            for psi in &auts {
                group_rb_from_matrix(m, &g, std::slice::from_ref(psi)).unwrap();
            }
        }
    }
}
