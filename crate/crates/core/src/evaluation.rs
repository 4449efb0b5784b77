//! Kendall's tau, top-k overlap and the tau-versus-spreading-rate sweep used to
//! compare rankings against simulated spreading.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ranking::RankingList;
use crate::score::ScoreVector;
use crate::si::{mix_seed, spreading_ability};

/// Two aligned value sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSequence {
    w: Vec<f64>,
    v: Vec<f64>,
}

impl PairedSequence {
    pub fn new(w: Vec<f64>, v: Vec<f64>) -> Result<PairedSequence> {
        if w.len() != v.len() {
            return Err(Error::InvalidArgument(format!(
                "sequence lengths differ: {} vs {}",
                w.len(),
                v.len()
            )));
        }
        if w.len() < 2 {
            return Err(Error::InvalidArgument(
                "Kendall's tau needs at least 2 pairs".into(),
            ));
        }
        if w.iter().chain(&v).any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument("sequences must be finite".into()));
        }
        Ok(PairedSequence { w, v })
    }

    /// Pairs the oriented scores of defined nodes with `values`.
    pub fn from_scores(sv: &ScoreVector, values: &[f64]) -> Result<PairedSequence> {
        let (w, v) = (0..sv.len())
            .filter(|&i| sv.is_defined(i))
            .map(|i| (sv.oriented(i), values[i]))
            .unzip();
        PairedSequence::new(w, v)
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn w(&self) -> &[f64] {
        &self.w
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TauResult {
    pub tau: f64,
    pub n_c: u64,
    pub n_d: u64,
    pub n: usize,
}

impl TauResult {
    fn from_counts(n_c: u64, n_d: u64, n: usize) -> TauResult {
        let pairs = 0.5 * n as f64 * (n as f64 - 1.0);
        TauResult {
            tau: (n_c as f64 - n_d as f64) / pairs,
            n_c,
            n_d,
            n,
        }
    }
}

/// Number of unordered pairs inside runs of equal adjacent values.
fn tied_pairs<T: PartialEq>(sorted: &[T]) -> u64 {
    sorted
        .chunk_by(|a, b| a == b)
        .map(|run| {
            let t = run.len() as u64;
            t * (t - 1) / 2
        })
        .sum()
}

/// Sorts `xs` and returns the number of strict inversions.
fn merge_count(xs: &mut [f64], buf: &mut Vec<f64>) -> u64 {
    let n = xs.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut swaps = merge_count(&mut xs[..mid], buf) + merge_count(&mut xs[mid..], buf);
    buf.clear();
    let (mut i, mut j) = (0, mid);
    while i < mid && j < n {
        if xs[j] < xs[i] {
            swaps += (mid - i) as u64;
            buf.push(xs[j]);
            j += 1;
        } else {
            buf.push(xs[i]);
            i += 1;
        }
    }
    buf.extend_from_slice(&xs[i..mid]);
    buf.extend_from_slice(&xs[j..n]);
    xs.copy_from_slice(buf);
    swaps
}

/// Tau-a: `(n_c - n_d) / (n (n - 1) / 2)`, where pairs tied in either
/// coordinate count as neither concordant nor discordant.
///
/// Runs in `O(n log n)`: after sorting by `(w, v)`, discordant pairs are
/// exactly the strict inversions of `v`, and concordant pairs are what
/// remains once every tied pair is removed.
pub fn kendall_tau(p: &PairedSequence) -> TauResult {
    let n = p.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| p.w[a].total_cmp(&p.w[b]).then(p.v[a].total_cmp(&p.v[b])));

    let joint: Vec<(f64, f64)> = idx.iter().map(|&i| (p.w[i], p.v[i])).collect();
    let ws: Vec<f64> = joint.iter().map(|x| x.0).collect();
    let tied_w = tied_pairs(&ws);
    let tied_both = tied_pairs(&joint);

    let mut vs: Vec<f64> = joint.iter().map(|x| x.1).collect();
    let n_d = merge_count(&mut vs, &mut Vec::with_capacity(n));
    let tied_v = tied_pairs(&vs);

    let total = n as u64 * (n as u64 - 1) / 2;
    let n_c = total + tied_both - tied_w - tied_v - n_d;
    TauResult::from_counts(n_c, n_d, n)
}

/// Size of the intersection of the two top-`k` label sets.
pub fn top_k_overlap(a: &RankingList, b: &RankingList, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if k > a.len() || k > b.len() {
        return Err(Error::InvalidArgument(format!(
            "k = {k} exceeds ranking length {}",
            a.len().min(b.len())
        )));
    }
    let top_a: HashSet<&str> = a.top_labels(k).into_iter().collect();
    Ok(b.top_labels(k).into_iter().filter(|l| top_a.contains(l)).count())
}

/// Per-node spreading ability at one rate. Node `i` runs under master seed
/// `mix_seed(rng_seed, i)`, so the profile does not depend on `lambda`'s
/// position in a sweep.
pub fn spreading_profile(
    g: &Graph,
    lambda: f64,
    t_eval: usize,
    replicates: usize,
    rng_seed: u64,
) -> Result<Vec<f64>> {
    (0..g.node_count())
        .into_par_iter()
        .map(|i| spreading_ability(g, i, lambda, t_eval, replicates, mix_seed(rng_seed, i as u64)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TauPoint {
    pub lambda: f64,
    pub result: TauResult,
}

/// Parameters of a tau sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepConfig {
    pub lambdas: Vec<f64>,
    pub t_eval: usize,
    pub replicates: usize,
    pub rng_seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            lambdas: default_lambda_grid(),
            t_eval: 10,
            replicates: 100,
            rng_seed: 0,
        }
    }
}

/// `0.01, 0.02, ..., 0.10`.
pub fn default_lambda_grid() -> Vec<f64> {
    lambda_range(0.01, 0.10, 0.01).expect("valid default range")
}

/// Inclusive arithmetic range `start, start + step, ..., stop`.
pub fn lambda_range(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    let ordered = start > 0.0 && step > 0.0 && start <= stop && stop <= 1.0;
    if !ordered {
        return Err(Error::InvalidArgument(format!(
            "invalid lambda range {start}:{stop}:{step}"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| start + i as f64 * step).collect())
}

/// Kendall's tau between a measure and simulated spreading, per rate.
pub fn tau_sweep(g: &Graph, sv: &ScoreVector, cfg: &SweepConfig) -> Result<Vec<TauPoint>> {
    if cfg.lambdas.is_empty() {
        return Err(Error::InvalidArgument("lambda grid is empty".into()));
    }
    if let Some(bad) = cfg.lambdas.iter().find(|&&l| !(l > 0.0 && l <= 1.0)) {
        return Err(Error::InvalidArgument(format!("lambda {bad} outside (0, 1]")));
    }
    cfg.lambdas
        .iter()
        .map(|&lambda| {
            let profile = spreading_profile(g, lambda, cfg.t_eval, cfg.replicates, cfg.rng_seed)?;
            let paired = PairedSequence::from_scores(sv, &profile)?;
            Ok(TauPoint {
                lambda,
                result: kendall_tau(&paired),
            })
        })
        .collect()
}
