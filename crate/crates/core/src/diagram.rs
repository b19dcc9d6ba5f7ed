//! Named diagrams of maps with recorded checks, for witness output.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::kernel::label::Label;
use crate::kernel::map::SimplicialMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub status: Status,
}

impl Check {
    pub fn new(identity: impl Into<String>, ok: bool) -> Check {
        Check { identity: identity.into(), status: if ok { Status::Pass } else { Status::Fail } }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub name: String,
    /// Number of simplices in each dimension.
    pub counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub name: String,
    pub from: String,
    pub to: String,
    pub components: BTreeMap<String, BTreeMap<String, Label>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub nodes: Vec<NodeDoc>,
    pub edges: Vec<EdgeDoc>,
    pub checks: Vec<Check>,
}

impl DiagramDoc {
    /// Adds a node unless one of that name exists.
    pub fn node(&mut self, name: &str, counts: Vec<usize>) {
        if !self.nodes.iter().any(|n| n.name == name) {
            self.nodes.push(NodeDoc { name: name.into(), counts });
        }
    }

    pub fn edge(&mut self, name: &str, from: &str, to: &str, map: &SimplicialMap) {
        self.node(from, map.domain().counts());
        self.node(to, map.codomain().counts());
        self.edges.push(EdgeDoc {
            name: name.into(),
            from: from.into(),
            to: to.into(),
            components: map.component_table(),
        });
    }
}
