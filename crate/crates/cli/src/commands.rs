use fldrank::evaluation::{lambda_range, tau_sweep, top_k_overlap, SweepConfig};
use fldrank::si::{default_max_steps, lambda_from_beta, simulate, SiConfig};
use fldrank::{compute, fixtures, parse_edge_list, rank as rank_scores, Graph, Measure, RankingList};
use serde_json::json;

use crate::manifest::RunManifest;
use crate::output::{Cell, Format, Table};
use crate::Failure;

pub struct Input {
    pub name: String,
    pub bytes: Vec<u8>,
    pub graph: Graph,
    pub self_loops_dropped: usize,
    pub duplicate_edges: usize,
}

impl Input {
    fn manifest(&self, command: &str, parameters: serde_json::Value) -> RunManifest {
        let mut parameters = parameters;
        parameters["self_loops_dropped"] = json!(self.self_loops_dropped);
        parameters["duplicate_edges"] = json!(self.duplicate_edges);
        RunManifest::new(command, &self.name, &self.bytes, parameters)
    }
}

pub struct Run {
    pub table: Table,
    pub manifest: RunManifest,
}

/// Reads an edge-list file or a `builtin:<name>` network.
pub fn load(input: &str) -> Result<Input, Failure> {
    let bytes = match input.strip_prefix("builtin:") {
        Some(name) => fixtures::builtin_text(name)
            .ok_or_else(|| Failure::Invalid(format!("unknown builtin network {name:?} (kite, karate)")))?
            .as_bytes()
            .to_vec(),
        None => std::fs::read(input).map_err(|e| Failure::Io(format!("{input}: {e}")))?,
    };
    let parsed = parse_edge_list(bytes.as_slice()).map_err(|e| match e {
        fldrank::Error::Parse { .. } => Failure::Parse(format!("{input}: {e}")),
        fldrank::Error::Io(_) => Failure::Io(format!("{input}: {e}")),
        other => other.into(),
    })?;
    if parsed.self_loops_dropped > 0 {
        eprintln!("fldrank: {input}: dropped {} self-loop(s)", parsed.self_loops_dropped);
    }
    Ok(Input {
        name: input.to_owned(),
        bytes,
        graph: parsed.graph,
        self_loops_dropped: parsed.self_loops_dropped,
        duplicate_edges: parsed.duplicate_edges,
    })
}

fn ranking(g: &Graph, measure: Measure) -> Result<RankingList, Failure> {
    Ok(rank_scores(&compute(g, measure)?, g))
}

pub fn rank(input: &Input, measure: Measure, format: Format) -> Result<Run, Failure> {
    let list = ranking(&input.graph, measure)?;
    let mut table = Table::new(&["rank", "node", "score", "undefined"]);
    for (i, e) in list.entries.iter().enumerate() {
        table.push(vec![
            Cell::Int(i as u64 + 1),
            Cell::Text(e.label.clone()),
            Cell::Float(e.score),
            Cell::Bool(e.undefined),
        ]);
    }
    let manifest = input.manifest(
        "rank",
        json!({ "measure": measure, "sort_direction": measure.sort_direction(), "output": format }),
    );
    Ok(Run { table, manifest })
}

pub enum SeedSpec {
    Labels(Vec<String>),
    Top { k: usize, measure: Measure },
}

pub enum RateSpec {
    Beta(f64),
    Lambda(f64),
}

pub struct SiParams {
    pub seeds: SeedSpec,
    pub rate: RateSpec,
    pub replicates: usize,
    pub rng_seed: u64,
    pub max_steps: Option<usize>,
}

pub fn si(input: &Input, p: &SiParams, format: Format) -> Result<Run, Failure> {
    let g = &input.graph;
    let (seeds, seed_labels) = match &p.seeds {
        SeedSpec::Labels(labels) => (g.resolve_labels(labels)?, labels.clone()),
        SeedSpec::Top { k, measure } => {
            let list = ranking(g, *measure)?;
            if *k == 0 || *k > list.len() {
                return Err(Failure::Invalid(format!(
                    "--top {k} outside 1..={}",
                    list.len()
                )));
            }
            let labels = list.top_labels(*k).into_iter().map(str::to_owned).collect();
            (list.top_nodes(*k), labels)
        }
    };
    let (beta, lambda) = match p.rate {
        RateSpec::Beta(b) => (Some(b), lambda_from_beta(b)),
        RateSpec::Lambda(l) => (None, l),
    };
    let cfg = SiConfig {
        lambda,
        seeds,
        max_steps: p.max_steps.unwrap_or_else(|| default_max_steps(g)),
        replicates: p.replicates,
        rng_seed: p.rng_seed,
        keep_trajectories: false,
    };
    let ens = simulate(g, &cfg)?;

    let mut table = Table::new(&["t", "mean_F", "std_F"]);
    for (t, (m, s)) in ens.mean.iter().zip(&ens.std_dev).enumerate() {
        table.push(vec![Cell::Int(t as u64), Cell::Float(*m), Cell::Float(*s)]);
    }
    let (top, measure) = match &p.seeds {
        SeedSpec::Top { k, measure } => (Some(*k), Some(*measure)),
        SeedSpec::Labels(_) => (None, None),
    };
    let manifest = input.manifest(
        "si",
        json!({
            "seeds": seed_labels,
            "top": top,
            "measure": measure,
            "beta": beta,
            "lambda": lambda,
            "replicates": cfg.replicates,
            "rng_seed": cfg.rng_seed,
            "max_steps": cfg.max_steps,
            "output": format,
        }),
    );
    Ok(Run { table, manifest })
}

pub fn parse_lambda_range(spec: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(Failure::Invalid(format!(
            "--lambda-range must be start:stop:step, got {spec:?}"
        )));
    };
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Failure::Invalid(format!("bad number {s:?} in --lambda-range")))
    };
    Ok(lambda_range(num(start)?, num(stop)?, num(step)?)?)
}

pub struct TauParams {
    pub measure: Measure,
    pub lambda_range: String,
    pub lambdas: Vec<f64>,
    pub t_eval: usize,
    pub replicates: usize,
    pub rng_seed: u64,
}

pub fn tau(input: &Input, p: &TauParams, format: Format) -> Result<Run, Failure> {
    let g = &input.graph;
    let sv = compute(g, p.measure)?;
    let cfg = SweepConfig {
        lambdas: p.lambdas.clone(),
        t_eval: p.t_eval,
        replicates: p.replicates,
        rng_seed: p.rng_seed,
    };
    let points = tau_sweep(g, &sv, &cfg)?;
    let mut table = Table::new(&["lambda", "tau", "n_c", "n_d"]);
    for pt in &points {
        table.push(vec![
            Cell::Float(pt.lambda),
            Cell::Float(pt.result.tau),
            Cell::Int(pt.result.n_c),
            Cell::Int(pt.result.n_d),
        ]);
    }
    let manifest = input.manifest(
        "tau",
        json!({
            "measure": p.measure,
            "lambda_range": p.lambda_range,
            "t_eval": p.t_eval,
            "replicates": p.replicates,
            "rng_seed": p.rng_seed,
            "output": format,
        }),
    );
    Ok(Run { table, manifest })
}

pub fn compare(input: &Input, measures: &[Measure], k: usize, format: Format) -> Result<Run, Failure> {
    let g = &input.graph;
    let lists = measures
        .iter()
        .map(|&m| ranking(g, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&["measure_a", "measure_b", "k", "overlap"]);
    for (a, la) in measures.iter().zip(&lists) {
        for (b, lb) in measures.iter().zip(&lists) {
            let overlap = top_k_overlap(la, lb, k)?;
            table.push(vec![
                Cell::Text(a.to_string()),
                Cell::Text(b.to_string()),
                Cell::Int(k as u64),
                Cell::Int(overlap as u64),
            ]);
        }
    }
    let manifest = input.manifest("compare", json!({ "measures": measures, "k": k, "output": format }));
    Ok(Run { table, manifest })
}
