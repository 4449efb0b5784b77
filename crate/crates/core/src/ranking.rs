use std::cmp::Ordering;

use serde::Serialize;

use crate::graph::{compare_labels, Graph, NodeId};
use crate::score::{ScoreVector, SortDirection};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedNode {
    pub node: NodeId,
    pub label: String,
    pub score: f64,
    pub undefined: bool,
}

/// Nodes ordered most influential first.
///
/// Defined nodes come first, sorted by score in the measure's direction with
/// ties broken by ascending label. Undefined nodes follow in label order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingList {
    pub entries: Vec<RankedNode>,
}

impl RankingList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.label.as_str()).collect()
    }

    pub fn top(&self, k: usize) -> &[RankedNode] {
        &self.entries[..k.min(self.entries.len())]
    }

    pub fn top_labels(&self, k: usize) -> Vec<&str> {
        self.top(k).iter().map(|e| e.label.as_str()).collect()
    }

    pub fn top_nodes(&self, k: usize) -> Vec<NodeId> {
        self.top(k).iter().map(|e| e.node).collect()
    }

    /// Number of defined entries; these form a prefix of the list.
    pub fn defined_len(&self) -> usize {
        self.entries.iter().take_while(|e| !e.undefined).count()
    }
}

pub fn rank(sv: &ScoreVector, g: &Graph) -> RankingList {
    rank_with_labels(sv, g.labels())
}

pub fn rank_with_labels(sv: &ScoreVector, labels: &[String]) -> RankingList {
    let mut order: Vec<NodeId> = (0..sv.len()).collect();
    order.sort_by(|&a, &b| {
        let by_score = match (sv.undefined[a], sv.undefined[b]) {
            (false, false) => {
                let ord = sv.scores[a].total_cmp(&sv.scores[b]);
                match sv.sort_direction {
                    SortDirection::Descending => ord.reverse(),
                    SortDirection::Ascending => ord,
                }
            }
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            (true, true) => Ordering::Equal,
        };
        by_score.then_with(|| compare_labels(&labels[a], &labels[b]))
    });

    RankingList {
        entries: order
            .into_iter()
            .map(|node| RankedNode {
                node,
                label: labels[node].clone(),
                score: sv.scores[node],
                undefined: sv.undefined[node],
            })
            .collect(),
    }
}
