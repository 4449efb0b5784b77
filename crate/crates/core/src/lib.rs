//! Influential-node ranking for complex networks.
//!
//! The crate computes six node centralities on undirected graphs (degree,
//! closeness, betweenness, eigenvector, local dimension and fuzzy local
//! dimension), turns them into deterministic rankings, simulates
//! susceptible-infected spreading, and scores rankings against simulated
//! spreading with Kendall's tau.
//!
//! ```
//! use fldrank::{compute, fixtures, rank, Measure};
//!
//! let g = fixtures::kite();
//! let fld = compute(&g, Measure::Fld).unwrap();
//! assert_eq!(rank(&fld, &g).top_labels(3), ["4", "5", "7"]);
//! ```

pub mod centrality;
pub mod error;
pub mod evaluation;
pub mod fixtures;
pub mod fld;
pub mod graph;
pub mod ranking;
pub mod regression;
pub mod score;
pub mod si;

pub use error::{Error, Result};
pub use graph::{
    all_distance_fields, bfs_distances, connected_components, parse_edge_list,
    parse_edge_list_str, ComponentMap, DistanceField, Graph, NodeId, ParsedEdgeList,
};
pub use ranking::{rank, RankedNode, RankingList};
pub use score::{Measure, ScoreVector, SortDirection};

/// Computes `measure` on `g`.
pub fn compute(g: &Graph, measure: Measure) -> Result<ScoreVector> {
    let fields = match measure {
        Measure::Cc | Measure::Ld | Measure::Fld => all_distance_fields(g),
        _ => Vec::new(),
    };
    compute_with_fields(g, measure, &fields)
}

/// Computes `measure` reusing precomputed distance fields (one per node,
/// needed by closeness, local dimension and fuzzy local dimension).
pub fn compute_with_fields(g: &Graph, measure: Measure, fields: &[DistanceField]) -> Result<ScoreVector> {
    Ok(match measure {
        Measure::Dc => centrality::degree_centrality(g),
        Measure::Cc => centrality::closeness_centrality(fields),
        Measure::Bc => centrality::betweenness_centrality(g),
        Measure::Ec => centrality::eigenvector_centrality(g)?.scores,
        Measure::Ld => centrality::local_dimension(fields),
        Measure::Fld => fld::fuzzy_local_dimension(fields),
    })
}
