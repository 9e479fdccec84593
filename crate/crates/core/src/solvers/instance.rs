use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::{Category, CategorySpace};
use crate::rational::{serde_rational, Rational};

/// A directed edge with `p` real weights and one category per ordinal objective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: u64,
    pub from: usize,
    pub to: usize,
    #[serde(with = "serde_rational::vec")]
    pub weights: Vec<Rational>,
    pub categories: Vec<Category>,
}

/// An s-t path instance. Nodes are numbered `1..=nodes`; the ground set is the edge set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInstance {
    nodes: usize,
    real_objectives: usize,
    spaces: Vec<CategorySpace>,
    edges: Vec<Edge>,
    source: usize,
    target: usize,
}

impl GraphInstance {
    pub fn new(
        nodes: usize,
        real_objectives: usize,
        spaces: Vec<CategorySpace>,
        edges: Vec<Edge>,
        source: usize,
        target: usize,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidInstance(msg));
        if !(1..=nodes).contains(&source) || !(1..=nodes).contains(&target) {
            return invalid(format!("source {source} or target {target} outside 1..={nodes}"));
        }
        for (i, e) in edges.iter().enumerate() {
            if edges[..i].iter().any(|f| f.id == e.id) {
                return invalid(format!("duplicate edge id {}", e.id));
            }
            if !(1..=nodes).contains(&e.from) || !(1..=nodes).contains(&e.to) {
                return invalid(format!("edge {} has an endpoint outside 1..={nodes}", e.id));
            }
            if e.weights.len() != real_objectives {
                return invalid(format!("edge {} has {} weights, expected {real_objectives}", e.id, e.weights.len()));
            }
            if e.weights.iter().any(Signed::is_negative) {
                return invalid(format!("edge {} has a negative weight", e.id));
            }
            if e.categories.len() != spaces.len() {
                return invalid(format!(
                    "edge {} has {} categories, expected {}",
                    e.id,
                    e.categories.len(),
                    spaces.len()
                ));
            }
            for (c, space) in e.categories.iter().zip(&spaces) {
                space.check(*c)?;
            }
        }
        Ok(Self {
            nodes,
            real_objectives,
            spaces,
            edges,
            source,
            target,
        })
    }

    /// Single ordinal objective with `k` categories and no real weights.
    /// Edges are given as `(id, from, to, category)`.
    pub fn ordinal(nodes: usize, k: usize, edges: &[(u64, usize, usize, usize)], source: usize, target: usize) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|&(id, from, to, cat)| Edge {
                id,
                from,
                to,
                weights: Vec::new(),
                categories: vec![Category(cat)],
            })
            .collect();
        Self::new(nodes, 0, vec![CategorySpace::new(k)?], edges, source, target)
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn real_objectives(&self) -> usize {
        self.real_objectives
    }

    pub fn spaces(&self) -> &[CategorySpace] {
        &self.spaces
    }

    pub fn ordinal_objectives(&self) -> usize {
        self.spaces.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: u64) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Edge indices leaving each node (0-based node index).
    pub(crate) fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nodes];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.from - 1].push(i);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub id: u64,
    pub weight: u64,
    pub category: Category,
}

/// Items with positive resource consumption; feasible sets are subsets within capacity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnapsackInstance {
    capacity: u64,
    space: CategorySpace,
    items: Vec<Item>,
}

impl KnapsackInstance {
    pub fn new(capacity: u64, space: CategorySpace, items: Vec<Item>) -> Result<Self> {
        for (i, item) in items.iter().enumerate() {
            if items[..i].iter().any(|o| o.id == item.id) {
                return Err(Error::InvalidInstance(format!("duplicate item id {}", item.id)));
            }
            if item.weight == 0 {
                return Err(Error::InvalidInstance(format!("item {} has zero consumption", item.id)));
            }
            space.check(item.category)?;
        }
        Ok(Self { capacity, space, items })
    }

    /// Items given as `(id, weight, category)`.
    pub fn from_items(capacity: u64, k: usize, items: &[(u64, u64, usize)]) -> Result<Self> {
        let items = items
            .iter()
            .map(|&(id, weight, cat)| Item {
                id,
                weight,
                category: Category(cat),
            })
            .collect();
        Self::new(capacity, CategorySpace::new(k)?, items)
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn space(&self) -> &CategorySpace {
        &self.space
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn item(&self, id: u64) -> Option<&Item> {
        self.items.iter().find(|i| i.id == id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Instance {
    Graph(GraphInstance),
    Knapsack(KnapsackInstance),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(GraphInstance::ordinal(2, 2, &[(1, 1, 2, 3)], 1, 2).is_err());
        assert!(GraphInstance::ordinal(2, 2, &[(1, 1, 3, 1)], 1, 2).is_err());
        assert!(GraphInstance::ordinal(2, 2, &[(1, 1, 2, 1), (1, 2, 1, 1)], 1, 2).is_err());
        assert!(GraphInstance::ordinal(2, 2, &[(1, 1, 2, 1)], 1, 5).is_err());
        assert!(GraphInstance::ordinal(1, 2, &[], 1, 1).is_ok());
        assert!(KnapsackInstance::from_items(5, 2, &[(1, 0, 1)]).is_err());
        assert!(KnapsackInstance::from_items(5, 2, &[(1, 1, 3)]).is_err());
        assert!(KnapsackInstance::from_items(0, 2, &[(1, 1, 2)]).is_ok());
    }

    #[test]
    fn negative_weight_rejected() {
        let e = Edge {
            id: 1,
            from: 1,
            to: 2,
            weights: vec![crate::rational::from_int(-1)],
            categories: vec![Category(1)],
        };
        assert!(GraphInstance::new(2, 1, vec![CategorySpace::new(1).unwrap()], vec![e], 1, 2).is_err());
    }
}
