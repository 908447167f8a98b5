//! JSON forms of groups, operators and braces. Every loader re-runs the
//! checks that the in-memory constructors run.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupMap};
use crate::rota_baxter::{RbOperator, Weight};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    #[serde(default)]
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    /// Element names; indices when absent.
    #[serde(default)]
    pub labels: Vec<String>,
}

impl GroupJson {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson {
            name: g.name().to_owned(),
            order: g.order(),
            table: g.rows(),
            labels: g.labels().to_vec(),
        }
    }

    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::Parse(format!("order {} but {} table rows", self.order, self.table.len())));
        }
        let labels = if self.labels.is_empty() {
            (0..self.order).map(|i| i.to_string()).collect()
        } else {
            self.labels
        };
        FiniteGroup::from_table(self.name, self.table, labels)
    }
}

/// `group` holds a catalog name or a content hash.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub group: String,
    pub weight: Weight,
    pub images: Vec<usize>,
}

impl OperatorJson {
    pub fn from_operator(b: &RbOperator) -> Self {
        OperatorJson {
            group: b.group().name().to_owned(),
            weight: b.weight(),
            images: b.map().images().to_vec(),
        }
    }

    /// `lookup` turns the `group` key into a group.
    pub fn into_operator(self, lookup: impl FnOnce(&str) -> Result<Arc<FiniteGroup>>) -> Result<RbOperator> {
        let g = lookup(&self.group)?;
        RbOperator::new(g, GroupMap::new(self.images), self.weight)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BraceJson {
    #[serde(default)]
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

impl BraceJson {
    pub fn from_brace(b: &SkewBrace) -> Self {
        BraceJson {
            name: b.name().to_owned(),
            order: b.order(),
            add: b.add().rows(),
            circ: b.circ().rows(),
            labels: b.add().labels().to_vec(),
        }
    }

    pub fn into_brace(self) -> Result<SkewBrace> {
        let group = |what: &str, rows: Vec<Vec<usize>>| {
            GroupJson {
                name: format!("{}{what}", self.name),
                order: self.order,
                table: rows,
                labels: self.labels.clone(),
            }
            .into_group()
        };
        let add = group("·", self.add.clone())?;
        let circ = group("∘", self.circ.clone())?;
        SkewBrace::new(self.name.clone(), add, circ)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

pub fn group_to_json(g: &FiniteGroup) -> Result<String> {
    to_json(&GroupJson::from_group(g))
}

pub fn group_from_json(s: &str) -> Result<FiniteGroup> {
    serde_json::from_str::<GroupJson>(s)?.into_group()
}

pub fn brace_to_json(b: &SkewBrace) -> Result<String> {
    to_json(&BraceJson::from_brace(b))
}

pub fn brace_from_json(s: &str) -> Result<SkewBrace> {
    serde_json::from_str::<BraceJson>(s)?.into_brace()
}

pub fn operator_to_json(b: &RbOperator) -> Result<String> {
    to_json(&OperatorJson::from_operator(b))
}

pub fn operator_from_json(
    s: &str,
    lookup: impl FnOnce(&str) -> Result<Arc<FiniteGroup>>,
) -> Result<RbOperator> {
    serde_json::from_str::<OperatorJson>(s)?.into_operator(lookup)
}
