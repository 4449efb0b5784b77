//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use fldrank::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with `n` in `1..=max_nodes` and `p` drawn per graph.
pub fn random_graph(rng: &mut ChaCha8Rng, max_nodes: usize) -> Graph {
    let n = rng.random_range(1..=max_nodes);
    let p: f64 = rng.random_range(0.15..0.85);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random::<f64>() < p {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Connected G(n, p): a random spanning tree plus extra random edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    for _ in 0..extra {
        edges.push((rng.random_range(0..n), rng.random_range(0..n)));
    }
    Graph::from_edges(n, edges)
}

/// All-pairs hop distances by Floyd–Warshall; `None` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for (a, b) in g.edges() {
        d[a][b] = Some(1);
        d[b][a] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|cur| x + y < cur) {
                        d[i][j] = Some(x + y);
                    }
                }
            }
        }
    }
    d
}

/// Enumerates every shortest path explicitly. Returns per-node counts of
/// paths passing through the node (as an interior vertex) over ordered
/// pairs, and the total path count.
pub fn brute_path_counts(g: &Graph) -> (Vec<u128>, u128) {
    let n = g.node_count();
    let d = floyd(g);
    let mut through = vec![0u128; n];
    let mut total = 0u128;

    fn walk(
        g: &Graph,
        d: &[Vec<Option<u32>>],
        path: &mut Vec<usize>,
        target: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let here = *path.last().unwrap();
        if here == target {
            out.push(path.clone());
            return;
        }
        let remaining = d[here][target].unwrap();
        for &next in g.neighbors(here) {
            if d[next][target] == Some(remaining - 1) {
                path.push(next);
                walk(g, d, path, target, out);
                path.pop();
            }
        }
    }

    for s in 0..n {
        for t in 0..n {
            if s == t || d[s][t].is_none() {
                continue;
            }
            let mut paths = Vec::new();
            walk(g, &d, &mut vec![s], t, &mut paths);
            for p in &paths {
                assert_eq!(p.len() as u32 - 1, d[s][t].unwrap());
                for &v in &p[1..p.len() - 1] {
                    through[v] += 1;
                }
            }
            total += paths.len() as u128;
        }
    }
    (through, total)
}

/// Tau-a by looking at every pair.
pub fn brute_tau(w: &[f64], v: &[f64]) -> (u64, u64, f64) {
    let n = w.len();
    let (mut nc, mut nd) = (0u64, 0u64);
    for i in 0..n {
        for j in i + 1..n {
            let s = (w[i] - w[j]).signum() * (v[i] - v[j]).signum();
            if w[i] == w[j] || v[i] == v[j] {
                continue;
            }
            if s > 0.0 {
                nc += 1;
            } else {
                nd += 1;
            }
        }
    }
    (nc, nd, (nc as f64 - nd as f64) / (0.5 * n as f64 * (n as f64 - 1.0)))
}

/// Slope by the textbook closed form
/// `(n Σxy − Σx Σy) / (n Σx² − (Σx)²)` on `(ln r, ln y_r)`.
pub fn closed_form_log_slope(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let (mut sx, mut sy, mut sxy, mut sxx) = (0.0, 0.0, 0.0, 0.0);
    for (i, &v) in values.iter().enumerate() {
        let x = ((i + 1) as f64).ln();
        let y = v.ln();
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Same graph with every label `l` replaced by `perm[l]`; labels must be
/// `"0".."n-1"`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let n = g.node_count();
    let labels: Vec<String> = (0..n).map(|i| perm[i].to_string()).collect();
    let edges: Vec<(&str, &str)> = g
        .edges()
        .map(|(a, b)| (labels[a].as_str(), labels[b].as_str()))
        .collect();
    Graph::from_labeled_edges(edges, labels.iter().map(String::as_str))
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}

/// Uniform number in `[0, 1)` fixed by its arguments, used to couple runs at
/// different spreading rates.
pub fn contact_uniform(seed: u64, step: usize, source: usize, target: usize) -> f64 {
    let mut z = seed
        ^ (step as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (source as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
        ^ (target as u64).wrapping_mul(0x1656_67B1_9E37_79F9);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    (z >> 11) as f64 / (1u64 << 53) as f64
}

/// Vertex-transitive test graphs.
pub fn vertex_transitive_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("C{n}"), fldrank::fixtures::cycle(n)));
    }
    for n in 2..=8 {
        out.push((format!("K{n}"), fldrank::fixtures::complete(n)));
    }
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    );
    out.push(("Petersen".into(), petersen));
    let cube = Graph::from_edges(
        8,
        (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))),
    );
    out.push(("Q3".into(), cube));
    out
}
