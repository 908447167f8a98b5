use serde::{Deserialize, Serialize};

/// Size limits for the exhaustive searches.
///
/// Every enumeration in the crate is brute force at heart, so each one
/// refuses inputs past a configured size instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Bounds {
    /// Largest group whose automorphisms (and subgroup lattice) we enumerate.
    pub automorphisms: usize,
    /// Largest group on which Rota-Baxter operators are enumerated.
    pub rb_enumeration: usize,
    /// Largest holomorph `|Aut(G)|·|G|` we build. The default admits every
    /// group of order at most 8, the largest being `Hol(C2³)` of order 1344.
    pub holomorph: usize,
    /// Largest group for regular-subgroup (brace) enumeration.
    pub regular_search: usize,
    /// Largest enveloping group `|G|²` we build.
    pub tilde: usize,
    /// Highest level `k` of a multibrace tower.
    pub multibrace_levels: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            automorphisms: 24,
            rb_enumeration: 12,
            holomorph: 1344,
            regular_search: 8,
            tilde: 144,
            multibrace_levels: 3,
        }
    }
}
