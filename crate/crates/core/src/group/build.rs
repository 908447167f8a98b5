//! Group constructors.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupMap};
use crate::error::{Error, Result};
use crate::group::hom::is_homomorphism;

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::precondition("cyclic group of order 0"));
    }
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_owned(),
            1 => "a".to_owned(),
            _ => format!("a^{k}"),
        })
        .collect();
    Ok(FiniteGroup::from_flat_trusted(format!("C{n}"), n, table, labels))
}

/// Dihedral group of order `2n`: element `k + n·j` is `r^k s^j`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::precondition("dihedral group needs n >= 2"));
    }
    let m = 2 * n;
    let mut table = Vec::with_capacity(m * m);
    for x in 0..m {
        let (a, i) = (x % n, x / n);
        for y in 0..m {
            let (b, j) = (y % n, y / n);
            let rot = if i == 0 { (a + b) % n } else { (a + n - b) % n };
            table.push(rot + n * ((i + j) % 2));
        }
    }
    let labels = (0..m)
        .map(|x| {
            let (k, j) = (x % n, x / n);
            let r = match k {
                0 => String::new(),
                1 => "r".to_owned(),
                _ => format!("r^{k}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "e".to_owned(),
                (false, 0) => r,
                (_, _) => format!("{r}s"),
            }
        })
        .collect();
    Ok(FiniteGroup::from_flat_trusted(format!("D{n}"), m, table, labels))
}

pub fn quaternion8() -> Result<FiniteGroup> {
    // Basis unit u ∈ {1, i, j, k} and sign; index = 2·u + (sign < 0).
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (u, neg) = UNIT[x / 2][y / 2];
            let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
            table.push(2 * u + usize::from(sign));
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| (*s).to_owned()).collect();
    Ok(FiniteGroup::from_flat_trusted("Q8".into(), 8, table, labels))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "e".to_owned()
    } else {
        out
    }
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Group of the given permutations (assumed closed), in lexicographic order.
/// The product is composition `(στ)(x) = σ(τ(x))`.
fn permutation_group(name: String, mut perms: Vec<Vec<usize>>) -> FiniteGroup {
    perms.sort();
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let m = perms.len();
    let mut table = Vec::with_capacity(m * m);
    for s in &perms {
        for t in &perms {
            let st: Vec<usize> = t.iter().map(|&x| s[x]).collect();
            table.push(index[st.as_slice()]);
        }
    }
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    FiniteGroup::from_flat_trusted(name, m, table, labels)
}

/// Symmetric group on `n ≤ 5` points. Elements are labelled in cycle
/// notation on `1..=n`; `(i i+1)` is the Coxeter generator `s_i`.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if !(1..=5).contains(&n) {
        return Err(Error::precondition(format!("symmetric({n}) outside 1..=5")));
    }
    Ok(permutation_group(format!("S{n}"), permutations(n)))
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    if !(1..=5).contains(&n) {
        return Err(Error::precondition(format!("alternating({n}) outside 1..=5")));
    }
    let perms = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    Ok(permutation_group(format!("A{n}"), perms))
}

/// `G × H`; the pair `(g, h)` has index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let mut table = Vec::with_capacity(n * m * n * m);
    for x in 0..n * m {
        for y in 0..n * m {
            table.push(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
        }
    }
    let labels = (0..n * m).map(|x| format!("({},{})", g.label(x / m), h.label(x % m))).collect();
    FiniteGroup::from_flat_trusted(format!("{}x{}", g.name(), h.name()), n * m, table, labels)
}

/// `G^k` with mixed-radix encoding, first coordinate most significant.
pub fn direct_power(g: &FiniteGroup, k: usize) -> Result<FiniteGroup> {
    if k == 0 {
        return Err(Error::precondition("direct power with exponent 0"));
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = direct_product(&acc, g);
    }
    let n = g.order();
    // Flatten the nested pair labels into a single tuple.
    let labels = (0..acc.order())
        .map(|mut x| {
            let mut parts = vec![String::new(); k];
            for slot in parts.iter_mut().rev() {
                *slot = g.label(x % n).to_owned();
                x /= n;
            }
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(FiniteGroup::from_flat_trusted(
        format!("{}^{k}", g.name()),
        acc.order(),
        acc.flat_table().to_vec(),
        labels,
    ))
}

/// `H ⋊ L` with `(h, l)(h', l') = (h·action[l](h'), l·l')`, pair index `h·|L| + l`.
/// `action[l]` must be an automorphism of `H` and `l ↦ action[l]` a homomorphism.
pub fn semidirect_product(h: &FiniteGroup, l: &FiniteGroup, action: &[GroupMap]) -> Result<FiniteGroup> {
    if action.len() != l.order() {
        return Err(Error::precondition("action must give one map per element of L"));
    }
    for (x, f) in action.iter().enumerate() {
        if !f.in_range(h.order()) || !f.is_bijective() || !is_homomorphism(h, h, f) {
            return Err(Error::precondition(format!(
                "action of {} is not an automorphism of {}",
                l.label(x),
                h.name()
            )));
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            if action[l.mul(x, y)] != action[x].compose(&action[y]) {
                return Err(Error::precondition(format!(
                    "action is not a homomorphism at ({}, {})",
                    l.label(x),
                    l.label(y)
                )));
            }
        }
    }
    let (n, m) = (h.order(), l.order());
    let mut table = Vec::with_capacity(n * m * n * m);
    for x in 0..n * m {
        let (hx, lx) = (x / m, x % m);
        for y in 0..n * m {
            let (hy, ly) = (y / m, y % m);
            table.push(h.mul(hx, action[lx].apply(hy)) * m + l.mul(lx, ly));
        }
    }
    let labels = (0..n * m).map(|x| format!("({},{})", h.label(x / m), l.label(x % m))).collect();
    Ok(FiniteGroup::from_flat_trusted(format!("{}:{}", h.name(), l.name()), n * m, table, labels))
}

/// The opposite group, `a * b = b·a`.
pub fn opposite(g: &FiniteGroup) -> FiniteGroup {
    let n = g.order();
    let table = (0..n * n).map(|i| g.mul(i % n, i / n)).collect();
    FiniteGroup::from_flat_trusted(format!("{}^op", g.name()), n, table, g.labels().to_vec())
}

/// A group constructor descriptor such as `C4`, `S3`, `D5`, `Q8`, `A4`,
/// `C2xC4`, `op(S3)`, or the long forms `cyclic(4)`, `symmetric(3)`,
/// `dihedral(5)`, `alternating(4)`, `quaternion8`, `direct(C2,C4)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Dihedral(usize),
    Quaternion8,
    Direct(Vec<GroupSpec>),
    Opposite(Box<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Symmetric(n) => symmetric(*n),
            GroupSpec::Alternating(n) => alternating(*n),
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Quaternion8 => quaternion8(),
            GroupSpec::Direct(factors) => {
                let mut it = factors.iter();
                let first = it.next().ok_or_else(|| Error::Parse("empty direct product".into()))?.build()?;
                let g = it.try_fold(first, |acc, f| Ok::<_, Error>(direct_product(&acc, &f.build()?)))?;
                Ok(g.with_name(self.to_string()))
            }
            GroupSpec::Opposite(inner) => Ok(opposite(&inner.build()?).with_name(self.to_string())),
        }
    }

    /// Order of the group this descriptor builds, without building it.
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Symmetric(n) => (1..=*n).product(),
            GroupSpec::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::Quaternion8 => 8,
            GroupSpec::Direct(fs) => fs.iter().map(GroupSpec::order).product(),
            GroupSpec::Opposite(inner) => inner.order(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::Direct(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Opposite(inner) => write!(f, "op({inner})"),
        }
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognised group descriptor `{s}`"));
        let factors = split_top_level(s, 'x');
        if factors.len() > 1 {
            return factors.into_iter().map(str::parse).collect::<Result<Vec<_>>>().map(GroupSpec::Direct);
        }
        if let Some(open) = s.find('(') {
            let (head, rest) = s.split_at(open);
            let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
            let num = || inner.trim().parse::<usize>().map_err(|_| bad());
            return match head.trim() {
                "cyclic" => Ok(GroupSpec::Cyclic(num()?)),
                "symmetric" => Ok(GroupSpec::Symmetric(num()?)),
                "alternating" => Ok(GroupSpec::Alternating(num()?)),
                "dihedral" => Ok(GroupSpec::Dihedral(num()?)),
                "op" | "opposite" => Ok(GroupSpec::Opposite(Box::new(inner.parse()?))),
                "direct" | "direct_product" => split_top_level(inner, ',')
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<Vec<_>>>()
                    .map(GroupSpec::Direct),
                _ => Err(bad()),
            };
        }
        if s == "Q8" || s == "quaternion8" {
            return Ok(GroupSpec::Quaternion8);
        }
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let n: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "C" => Ok(GroupSpec::Cyclic(n)),
            "S" => Ok(GroupSpec::Symmetric(n)),
            "A" => Ok(GroupSpec::Alternating(n)),
            "D" => Ok(GroupSpec::Dihedral(n)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{isomorphic, structure_report, verify_group_table};

    #[test]
    fn constructors_validate() {
        for g in [
            cyclic(1).unwrap(),
            cyclic(7).unwrap(),
            dihedral(4).unwrap(),
            quaternion8().unwrap(),
            symmetric(4).unwrap(),
            alternating(4).unwrap(),
            opposite(&symmetric(3).unwrap()),
            direct_power(&cyclic(2).unwrap(), 3).unwrap(),
        ] {
            assert_eq!(verify_group_table(&g.rows()), Ok(()), "{}", g.name());
        }
    }

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert!(symmetric(6).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn c2_times_c3_is_c6() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap());
        assert!(isomorphic(&g, &cyclic(6).unwrap()).is_some());
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion8().unwrap();
        let (i, j, k) = (2, 4, 6);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), 7);
        assert_eq!(q.mul(i, i), 1);
        assert_eq!(structure_report(&q).unwrap().center.order(), 2);
    }

    #[test]
    fn dihedral_is_symmetric_for_three() {
        assert!(isomorphic(&dihedral(3).unwrap(), &symmetric(3).unwrap()).is_some());
        assert!(isomorphic(&dihedral(4).unwrap(), &quaternion8().unwrap()).is_none());
    }

    #[test]
    fn semidirect_c3_by_c2_is_s3() {
        let c3 = cyclic(3).unwrap();
        let c2 = cyclic(2).unwrap();
        let inversion = GroupMap::from_fn(3, |x| c3.inv(x));
        let g = semidirect_product(&c3, &c2, &[GroupMap::identity(3), inversion]).unwrap();
        assert!(isomorphic(&g, &symmetric(3).unwrap()).is_some());
        // x ↦ x + 1 is not an automorphism.
        let shift = GroupMap::from_fn(3, |x| (x + 1) % 3);
        assert!(semidirect_product(&c3, &c2, &[GroupMap::identity(3), shift]).is_err());
    }

    #[test]
    fn semidirect_rejects_non_homomorphic_action() {
        let c3 = cyclic(3).unwrap();
        let c2 = cyclic(2).unwrap();
        let inversion = GroupMap::from_fn(3, |x| c3.inv(x));
        // Sending the identity of C2 to inversion breaks the homomorphism.
        assert!(semidirect_product(&c3, &c2, &[inversion.clone(), inversion]).is_err());
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!("C4".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(4));
        assert_eq!("cyclic(4)".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(4));
        assert_eq!(
            "C2xC4".parse::<GroupSpec>().unwrap(),
            GroupSpec::Direct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)])
        );
        assert_eq!(
            "op(S3)".parse::<GroupSpec>().unwrap(),
            GroupSpec::Opposite(Box::new(GroupSpec::Symmetric(3)))
        );
        assert_eq!("direct(C2,D4)".parse::<GroupSpec>().unwrap().to_string(), "C2xD4");
        assert!("X9".parse::<GroupSpec>().is_err());
        assert_eq!("A4".parse::<GroupSpec>().unwrap().order(), 12);
    }

    #[test]
    fn symmetric_labels_give_coxeter_generators() {
        let s3 = symmetric(3).unwrap();
        let s1 = s3.coxeter_generator(1).unwrap();
        let s2 = s3.coxeter_generator(2).unwrap();
        assert_eq!(s3.element_order(s1), 2);
        assert_eq!(s3.element_order(s3.mul(s1, s2)), 3);
        assert_eq!(s3.coxeter_word(&[1, 2, 1]), s3.coxeter_word(&[2, 1, 2]));
    }
}
