//! Discrete-time susceptible-infected spreading.
//!
//! Updates are synchronous: at every step each susceptible node draws one
//! independent Bernoulli(`lambda`) trial per infected neighbour and becomes
//! infected if any trial succeeds. With `lambda = 1` a run is exactly the BFS
//! wavefront from the seeds.
//!
//! Replicate `k` of a campaign draws from ChaCha8 stream `k` under the
//! master seed, so any replicate can be reproduced alone and ensembles do not
//! depend on how replicates are scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{diameter, Graph, NodeId};

/// Spreading rate for exponent `beta`: `(1/2)^beta`.
pub fn lambda_from_beta(beta: f64) -> f64 {
    0.5f64.powf(beta)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SiConfig {
    /// Per-contact, per-step infection probability.
    pub lambda: f64,
    pub seeds: Vec<NodeId>,
    pub max_steps: usize,
    pub replicates: usize,
    pub rng_seed: u64,
    /// Keep every replicate's trajectory in the ensemble.
    pub keep_trajectories: bool,
}

impl SiConfig {
    /// 100 replicates, master seed 0, and a step cap of ten times the
    /// graph diameter.
    pub fn new(g: &Graph, lambda: f64, seeds: Vec<NodeId>) -> SiConfig {
        SiConfig {
            lambda,
            seeds,
            max_steps: default_max_steps(g),
            replicates: 100,
            rng_seed: 0,
            keep_trajectories: false,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !(0.0..=1.0).contains(&self.lambda) {
            return Err(Error::InvalidArgument(format!(
                "lambda must lie in [0, 1], got {}",
                self.lambda
            )));
        }
        if self.seeds.is_empty() {
            return Err(Error::InvalidArgument("seed set is empty".into()));
        }
        if let Some(&bad) = self.seeds.iter().find(|&&s| s >= g.node_count()) {
            return Err(Error::NodeOutOfRange {
                node: bad,
                node_count: g.node_count(),
            });
        }
        if self.replicates == 0 {
            return Err(Error::InvalidArgument("replicates must be at least 1".into()));
        }
        Ok(())
    }
}

pub fn default_max_steps(g: &Graph) -> usize {
    (10 * diameter(g) as usize).max(1)
}

/// RNG for replicate `replicate` of a campaign seeded with `master`.
pub fn replicate_rng(master: u64, replicate: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(replicate);
    rng
}

/// Derives an independent master seed from `master` and a tag (SplitMix64
/// finalizer).
pub fn mix_seed(master: u64, tag: u64) -> u64 {
    let mut z = master ^ tag.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One synchronous step. `draw(source, target)` supplies the uniform number
/// for the contact from infected `source` to susceptible `target`; contacts
/// are visited by ascending target, then ascending source.
pub fn si_step_with<F>(g: &Graph, infected: &[bool], lambda: f64, mut draw: F) -> Vec<NodeId>
where
    F: FnMut(NodeId, NodeId) -> f64,
{
    let mut newly = Vec::new();
    for target in 0..g.node_count() {
        if infected[target] {
            continue;
        }
        let mut hit = false;
        for &source in g.neighbors(target) {
            if infected[source] && draw(source, target) < lambda {
                hit = true;
            }
        }
        if hit {
            newly.push(target);
        }
    }
    newly
}

/// One synchronous step drawing contacts from `rng`.
pub fn si_step<R: Rng + ?Sized>(g: &Graph, infected: &[bool], lambda: f64, rng: &mut R) -> Vec<NodeId> {
    si_step_with(g, infected, lambda, |_, _| rng.random::<f64>())
}

/// Whether some susceptible node has an infected neighbour.
fn has_exposed(g: &Graph, infected: &[bool]) -> bool {
    (0..g.node_count())
        .any(|u| !infected[u] && g.neighbors(u).iter().any(|&v| infected[v]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiTrajectory {
    /// Infected count `F(t)` for `t = 0..=terminated_at`.
    pub f: Vec<usize>,
    /// Susceptible count `S(t)`, counted from the state.
    pub susceptible: Vec<usize>,
    /// Step after which the run stopped: nothing left to infect, or the cap.
    pub terminated_at: usize,
}

/// Runs one trajectory. Step `t` calls `draw(t, source, target)`.
pub fn run_trajectory_with<F>(
    g: &Graph,
    seeds: &[NodeId],
    lambda: f64,
    max_steps: usize,
    mut draw: F,
) -> SiTrajectory
where
    F: FnMut(usize, NodeId, NodeId) -> f64,
{
    let n = g.node_count();
    let mut infected = vec![false; n];
    for &s in seeds {
        infected[s] = true;
    }
    let count = |inf: &[bool]| inf.iter().filter(|&&x| x).count();
    let mut f = vec![count(&infected)];
    let mut susceptible = vec![infected.iter().filter(|&&x| !x).count()];

    let mut t = 0;
    while t < max_steps && lambda > 0.0 && has_exposed(g, &infected) {
        let newly = si_step_with(g, &infected, lambda, |s, u| draw(t, s, u));
        for u in newly {
            infected[u] = true;
        }
        t += 1;
        f.push(count(&infected));
        susceptible.push(infected.iter().filter(|&&x| !x).count());
    }

    SiTrajectory {
        f,
        susceptible,
        terminated_at: t,
    }
}

pub fn run_trajectory<R: Rng + ?Sized>(
    g: &Graph,
    seeds: &[NodeId],
    lambda: f64,
    max_steps: usize,
    rng: &mut R,
) -> SiTrajectory {
    run_trajectory_with(g, seeds, lambda, max_steps, |_, _, _| rng.random::<f64>())
}

/// Replicate statistics of `F(t)`. Shorter trajectories are extended with
/// their terminal value up to the longest one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryEnsemble {
    pub mean: Vec<f64>,
    /// Sample standard deviation; zero for a single replicate.
    pub std_dev: Vec<f64>,
    pub replicates: usize,
    pub trajectories: Option<Vec<SiTrajectory>>,
}

impl TrajectoryEnsemble {
    fn from_trajectories(runs: Vec<SiTrajectory>, keep: bool) -> TrajectoryEnsemble {
        let len = runs.iter().map(|r| r.f.len()).max().unwrap_or(0);
        let k = runs.len() as f64;
        let value = |r: &SiTrajectory, t: usize| *r.f.get(t).unwrap_or(r.f.last().unwrap()) as f64;

        let mut mean = Vec::with_capacity(len);
        let mut std_dev = Vec::with_capacity(len);
        for t in 0..len {
            let m = runs.iter().map(|r| value(r, t)).sum::<f64>() / k;
            let ss: f64 = runs.iter().map(|r| (value(r, t) - m).powi(2)).sum();
            mean.push(m);
            std_dev.push(if runs.len() > 1 { (ss / (k - 1.0)).sqrt() } else { 0.0 });
        }
        TrajectoryEnsemble {
            mean,
            std_dev,
            replicates: runs.len(),
            trajectories: keep.then_some(runs),
        }
    }

    /// Mean `F(t)`, holding the terminal value past the end.
    pub fn mean_at(&self, t: usize) -> f64 {
        *self.mean.get(t).or(self.mean.last()).unwrap_or(&0.0)
    }
}

pub fn simulate(g: &Graph, cfg: &SiConfig) -> Result<TrajectoryEnsemble> {
    cfg.validate(g)?;
    let runs: Vec<SiTrajectory> = (0..cfg.replicates as u64)
        .into_par_iter()
        .map(|k| {
            let mut rng = replicate_rng(cfg.rng_seed, k);
            run_trajectory(g, &cfg.seeds, cfg.lambda, cfg.max_steps, &mut rng)
        })
        .collect();
    Ok(TrajectoryEnsemble::from_trajectories(runs, cfg.keep_trajectories))
}

/// Mean number of infected nodes `t_eval` steps after seeding `node` alone.
pub fn spreading_ability(
    g: &Graph,
    node: NodeId,
    lambda: f64,
    t_eval: usize,
    replicates: usize,
    rng_seed: u64,
) -> Result<f64> {
    if t_eval == 0 {
        return Err(Error::InvalidArgument("t_eval must be at least 1".into()));
    }
    let cfg = SiConfig {
        lambda,
        seeds: vec![node],
        max_steps: t_eval,
        replicates,
        rng_seed,
        keep_trajectories: false,
    };
    Ok(simulate(g, &cfg)?.mean_at(t_eval))
}
