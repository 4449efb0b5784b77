use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// Degree.
    Dc,
    /// Closeness.
    Cc,
    /// Betweenness.
    Bc,
    /// Eigenvector.
    Ec,
    /// Local dimension.
    Ld,
    /// Fuzzy local dimension.
    Fld,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Dc,
        Measure::Cc,
        Measure::Bc,
        Measure::Ec,
        Measure::Ld,
        Measure::Fld,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Dc => "dc",
            Measure::Cc => "cc",
            Measure::Bc => "bc",
            Measure::Ec => "ec",
            Measure::Ld => "ld",
            Measure::Fld => "fld",
        }
    }

    /// Which end of the score axis holds the most influential nodes.
    pub fn sort_direction(self) -> SortDirection {
        match self {
            Measure::Ld => SortDirection::Ascending,
            _ => SortDirection::Descending,
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown measure {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SortDirection {
    Descending,
    Ascending,
}

/// Per-node scores of one measure.
///
/// Nodes where the measure has no value carry `undefined[i] = true` and a
/// score of `0.0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub measure: Measure,
    pub scores: Vec<f64>,
    pub sort_direction: SortDirection,
    pub undefined: Vec<bool>,
}

impl ScoreVector {
    pub fn new(measure: Measure, scores: Vec<f64>, undefined: Vec<bool>) -> ScoreVector {
        debug_assert_eq!(scores.len(), undefined.len());
        ScoreVector {
            measure,
            scores,
            sort_direction: measure.sort_direction(),
            undefined,
        }
    }

    pub fn all_defined(measure: Measure, scores: Vec<f64>) -> ScoreVector {
        let undefined = vec![false; scores.len()];
        ScoreVector::new(measure, scores, undefined)
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn is_defined(&self, node: usize) -> bool {
        !self.undefined[node]
    }

    /// Score re-oriented so that larger always means more influential.
    pub fn oriented(&self, node: usize) -> f64 {
        match self.sort_direction {
            SortDirection::Descending => self.scores[node],
            SortDirection::Ascending => -self.scores[node],
        }
    }
}
