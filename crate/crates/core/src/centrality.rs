//! Baseline centralities: degree, closeness, betweenness, eigenvector and
//! local dimension.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{connected_components, DistanceField, Graph};
use crate::regression::log_log_slope;
use crate::score::{Measure, ScoreVector};

pub fn degree_centrality(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count()).map(|i| g.degree(i) as f64).collect();
    ScoreVector::all_defined(Measure::Dc, scores)
}

/// Reciprocal of the distance sum to every other node of the same component.
/// Nodes alone in their component are undefined.
pub fn closeness_centrality(fields: &[DistanceField]) -> ScoreVector {
    let (scores, undefined) = fields
        .iter()
        .map(|f| match f.distance_sum() {
            0 => (0.0, true),
            sum => (1.0 / sum as f64, false),
        })
        .unzip();
    ScoreVector::new(Measure::Cc, scores, undefined)
}

/// Exact shortest-path counts behind [`betweenness_centrality`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCounts {
    /// Per node, the number of shortest paths over ordered pairs `s != t`
    /// (both different from the node) that pass through it.
    pub through: Vec<u128>,
    /// Number of shortest paths over all ordered pairs `s != t` joined by a
    /// path.
    pub total: u128,
}

/// Counts shortest paths through every node with one BFS per source and a
/// reverse sweep over the shortest-path DAG.
///
/// For a source `s`, `sigma[v]` is the number of shortest `s`–`v` paths and
/// `below[v]` the number of shortest paths that start at `v` and end at a
/// node further from `s` whose distance to `s` grows along the path. Paths
/// from `s` through `v` then number `sigma[v] * below[v]`.
pub fn shortest_path_counts(g: &Graph) -> PathCounts {
    let n = g.node_count();
    let per_source: Vec<(Vec<u128>, u128)> = (0..n)
        .into_par_iter()
        .map(|s| {
            let mut dist = vec![u32::MAX; n];
            let mut sigma = vec![0u128; n];
            let mut order = Vec::with_capacity(n);
            let mut queue = std::collections::VecDeque::from([s]);
            dist[s] = 0;
            sigma[s] = 1;
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &v in g.neighbors(u) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                    if dist[v] == dist[u] + 1 {
                        sigma[v] += sigma[u];
                    }
                }
            }

            let mut below = vec![0u128; n];
            let mut through = vec![0u128; n];
            for &w in order.iter().rev() {
                for &v in g.neighbors(w) {
                    if dist[v] != u32::MAX && dist[v] + 1 == dist[w] {
                        below[v] += 1 + below[w];
                    }
                }
                if w != s {
                    through[w] = sigma[w] * below[w];
                }
            }
            let total = order.iter().skip(1).map(|&t| sigma[t]).sum();
            (through, total)
        })
        .collect();

    let mut through = vec![0u128; n];
    let mut total = 0u128;
    for (t, sum) in per_source {
        for (acc, x) in through.iter_mut().zip(t) {
            *acc += x;
        }
        total += sum;
    }
    PathCounts { through, total }
}

/// Share of all shortest paths that pass through each node, with one global
/// denominator per graph.
pub fn betweenness_centrality(g: &Graph) -> ScoreVector {
    betweenness_from_counts(&shortest_path_counts(g))
}

pub fn betweenness_from_counts(counts: &PathCounts) -> ScoreVector {
    let scores = counts
        .through
        .iter()
        .map(|&c| {
            if counts.total == 0 {
                0.0
            } else {
                c as f64 / counts.total as f64
            }
        })
        .collect();
    ScoreVector::all_defined(Measure::Bc, scores)
}

pub const EIGEN_TOLERANCE: f64 = 1e-12;
pub const EIGEN_MAX_ITERATIONS: usize = 10_000;

#[derive(Debug, Clone)]
pub struct EigenvectorCentrality {
    pub scores: ScoreVector,
    /// Rayleigh-quotient estimate of the largest adjacency eigenvalue.
    pub eigenvalue: f64,
    pub iterations: usize,
    /// `||A x - eigenvalue * x||_2` over the largest component.
    pub residual: f64,
}

/// Principal adjacency eigenvector of the largest component, unit length and
/// non-negative. Nodes outside that component are undefined.
///
/// Iterates on `A + I`, which has the same eigenvectors as `A` but no
/// oscillation on bipartite components.
pub fn eigenvector_centrality(g: &Graph) -> Result<EigenvectorCentrality> {
    let n = g.node_count();
    let comps = connected_components(g);
    let Some(largest) = comps.largest().filter(|_| g.edge_count() > 0) else {
        return Ok(EigenvectorCentrality {
            scores: ScoreVector::new(Measure::Ec, vec![0.0; n], vec![true; n]),
            eigenvalue: 0.0,
            iterations: 0,
            residual: 0.0,
        });
    };
    let members = comps.members(largest);
    let mut local = vec![usize::MAX; n];
    for (i, &v) in members.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&u| local[u]).collect())
        .collect();

    // Neighbor values are summed in sorted order so that structurally
    // equivalent nodes receive bit-identical values.
    let multiply = |x: &[f64], out: &mut Vec<f64>, shift: f64| {
        out.clear();
        let mut buf = Vec::new();
        for (i, nb) in adj.iter().enumerate() {
            buf.clear();
            buf.extend(nb.iter().map(|&j| x[j]));
            buf.sort_by(f64::total_cmp);
            out.push(shift * x[i] + buf.iter().sum::<f64>());
        }
    };
    let normalize = |x: &mut [f64]| {
        let mut sq: Vec<f64> = x.iter().map(|v| v * v).collect();
        sq.sort_by(f64::total_cmp);
        let norm = sq.iter().sum::<f64>().sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    };

    let m = members.len();
    let mut x = vec![1.0 / (m as f64).sqrt(); m];
    let mut next = Vec::with_capacity(m);
    let mut iterations = 0;
    let mut converged = false;
    while iterations < EIGEN_MAX_ITERATIONS {
        iterations += 1;
        multiply(&x, &mut next, 1.0);
        normalize(&mut next);
        let diff = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        std::mem::swap(&mut x, &mut next);
        if diff < EIGEN_TOLERANCE {
            converged = true;
            break;
        }
    }

    multiply(&x, &mut next, 0.0);
    let eigenvalue: f64 = x.iter().zip(&next).map(|(a, b)| a * b).sum();
    let residual = next
        .iter()
        .zip(&x)
        .map(|(ax, xi)| (ax - eigenvalue * xi).powi(2))
        .sum::<f64>()
        .sqrt();
    if !converged {
        return Err(Error::NoConvergence {
            iterations,
            residual,
        });
    }

    let mut scores = vec![0.0; n];
    let mut undefined = vec![true; n];
    for (i, &v) in members.iter().enumerate() {
        scores[v] = x[i].max(0.0);
        undefined[v] = false;
    }
    Ok(EigenvectorCentrality {
        scores: ScoreVector::new(Measure::Ec, scores, undefined),
        eigenvalue,
        iterations,
        residual,
    })
}

/// Cumulative node counts `B(r)` for `r = 1..=d_max`, source included.
pub fn ball_sizes(field: &DistanceField) -> Vec<usize> {
    (1..=field.d_max).map(|r| field.ball_size(r)).collect()
}

/// Log-log slope of the ball size `B(r)` against `r`. Nodes with eccentricity
/// below 2 are undefined.
pub fn local_dimension(fields: &[DistanceField]) -> ScoreVector {
    let (scores, undefined) = fields
        .par_iter()
        .map(|f| {
            let balls: Vec<f64> = ball_sizes(f).into_iter().map(|b| b as f64).collect();
            match log_log_slope(&balls) {
                Some(slope) => (slope, false),
                None => (0.0, true),
            }
        })
        .unzip();
    ScoreVector::new(Measure::Ld, scores, undefined)
}
