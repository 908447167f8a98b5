//! Named groups available by key: small cyclic, dihedral, symmetric and
//! alternating groups, `Q8`, and direct products of members up to order 12.
//!
//! A catalog file (JSON, see [`CatalogFile`]) replaces the built-in list when
//! `BRACE_FORGE_CATALOG` names one.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec};
use crate::json::GroupJson;

pub const CATALOG_ENV: &str = "BRACE_FORGE_CATALOG";

/// Direct products of catalog members are added up to this order.
pub const PRODUCT_ORDER_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CatalogSource {
    Descriptor { descriptor: String },
    Table(GroupJson),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(flatten)]
    pub source: CatalogSource,
}

/// On-disk catalog: `{"groups": [{"name": .., "descriptor": ..} | <group JSON>]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub groups: Vec<CatalogEntry>,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    groups: BTreeMap<String, Arc<FiniteGroup>>,
    /// Insertion order, which is also ascending order for the built-in list.
    order: Vec<String>,
}

fn base_specs() -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> = (1..=12).map(GroupSpec::Cyclic).collect();
    v.extend((3..=6).map(GroupSpec::Dihedral));
    v.extend([GroupSpec::Symmetric(3), GroupSpec::Symmetric(4), GroupSpec::Quaternion8]);
    v.push(GroupSpec::Alternating(4));
    v
}

/// Products of two or more nontrivial base groups with order at most the limit,
/// factors sorted by name so each multiset appears once.
fn product_specs(base: &[GroupSpec]) -> Vec<GroupSpec> {
    let nontrivial: Vec<&GroupSpec> = base.iter().filter(|s| s.order() > 1).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<GroupSpec>> = nontrivial.iter().map(|s| vec![(*s).clone()]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for fs in &frontier {
            let order: usize = fs.iter().map(GroupSpec::order).product();
            for s in &nontrivial {
                if order * s.order() > PRODUCT_ORDER_LIMIT {
                    continue;
                }
                let mut g = fs.clone();
                g.push((*s).clone());
                g.sort_by_key(ToString::to_string);
                let key: Vec<String> = g.iter().map(ToString::to_string).collect();
                if seen.insert(key) {
                    out.push(GroupSpec::Direct(g.clone()));
                    next.push(g);
                }
            }
        }
        frontier = next;
    }
    out.sort_by_key(|s| (s.order(), s.to_string()));
    out
}

impl Catalog {
    pub fn builtin() -> Self {
        let base = base_specs();
        let mut cat = Catalog { groups: BTreeMap::new(), order: Vec::new() };
        let products = product_specs(&base);
        for spec in base.iter().chain(&products) {
            let g = spec.build().expect("built-in catalog groups are valid");
            cat.insert(spec.to_string(), g).expect("built-in names are unique");
        }
        cat
    }

    /// The file named by `BRACE_FORGE_CATALOG`, or the built-in list.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CATALOG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::builtin()),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let file: CatalogFile = serde_json::from_str(&text)?;
        Self::from_file(file)
    }

    pub fn from_file(file: CatalogFile) -> Result<Self> {
        let mut cat = Catalog { groups: BTreeMap::new(), order: Vec::new() };
        for e in file.groups {
            let g = match e.source {
                CatalogSource::Descriptor { descriptor } => descriptor.parse::<GroupSpec>()?.build()?,
                CatalogSource::Table(j) => j.into_group()?,
            };
            cat.insert(e.name, g)?;
        }
        Ok(cat)
    }

    fn insert(&mut self, name: String, g: FiniteGroup) -> Result<()> {
        if self.groups.contains_key(&name) {
            return Err(Error::Parse(format!("duplicate catalog name `{name}`")));
        }
        self.order.push(name.clone());
        self.groups.insert(name.clone(), Arc::new(g.with_name(name)));
        Ok(())
    }

    pub fn names(&self) -> &[String] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Look up by catalog name, then by content hash, then as a descriptor
    /// such as `C2xS3` or `dihedral(5)`.
    pub fn resolve(&self, key: &str) -> Result<Arc<FiniteGroup>> {
        if let Some(g) = self.groups.get(key) {
            return Ok(g.clone());
        }
        if let Some(g) = self.groups.values().find(|g| g.content_hash() == key) {
            return Ok(g.clone());
        }
        match key.parse::<GroupSpec>() {
            Ok(spec) if spec.order() <= 1 << 12 => spec.build().map(Arc::new),
            _ => Err(Error::UnknownGroup(key.to_owned())),
        }
    }

    /// Members of order at most `max_order`, in catalog order.
    pub fn up_to(&self, max_order: usize) -> Vec<Arc<FiniteGroup>> {
        self.order.iter().map(|n| self.groups[n].clone()).filter(|g| g.order() <= max_order).collect()
    }
}
